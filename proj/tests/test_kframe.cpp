#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "framekit/errors.hpp"
#include "framekit/generators.hpp"
#include "framekit/kframe.hpp"

#include "oracles.hpp"

using namespace framekit;

namespace {
struct Planted {
  FrameSequence f;
  Matrix k;
};

// operator with range inside range(synthesis), so the verdict is true
Planted planted(std::uint64_t seed, Eigen::Index d, Eigen::Index m) {
  Rng rng(seed);
  FrameSequence f{gaussian_matrix(rng, d, m)};
  Matrix k = synthesis(f) * gaussian_matrix(rng, m, d);
  return {std::move(f), std::move(k)};
}
}  // namespace

TEST_CASE("shift instance: Parseval relative to K but not a frame") {
  for (Eigen::Index d : {2, 3, 7}) {
    const ShiftInstance s = shift_kframe(d);
    const KFrameCertificate cert = is_kframe(s.f, s.k);
    CHECK(cert.verdict);
    CHECK(cert.via_psd);
    CHECK(cert.via_range);
    const auto [a, b] = kframe_bounds(s.f, s.k);
    CHECK(a == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(b == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(frame_bounds(s.f).kind == FrameKind::NotFrame);
  }
}

TEST_CASE("optimal lower bound against the bisection oracle") {
  for (std::uint64_t seed : {3u, 4u, 5u, 6u}) {
    const auto [f, k] = planted(seed, 4, 6);
    const auto [a, b] = kframe_bounds(f, k);
    // least c with K K* <= c S gives A = 1 / c
    const double c = oracles::bisect_constant(k, synthesis(f));
    REQUIRE(std::isfinite(c));
    REQUIRE(c > 0.0);
    CHECK(a == doctest::Approx(1.0 / c).epsilon(1e-6));
    CHECK(b == doctest::Approx(frame_bounds(f).upper));
  }
}

TEST_CASE("optimal lower bound against Rayleigh sampling") {
  for (Eigen::Index d : {2, 3}) {
    const auto [f, k] = planted(17 + static_cast<std::uint64_t>(d), d, d + 1);
    const auto [a, b] = kframe_bounds(f, k);
    Rng rng(777);
    const double sampled = oracles::sampled_lower_bound(f, k, rng, 100000);
    // no sample may undercut the optimal bound; some sample should approach it
    CHECK(sampled >= a * (1.0 - 1e-9));
    CHECK(sampled <= a * (d == 2 ? 1.02 : 1.10));
    (void)b;
  }
}

TEST_CASE("canonical dual: frozen hand case") {
  // F = {e1, e1} in C^2, K = projection onto e1.
  Matrix v = Matrix::Zero(2, 2);
  v(0, 0) = 1.0;
  v(0, 1) = 1.0;
  Matrix k = Matrix::Zero(2, 2);
  k(0, 0) = 1.0;
  const FrameSequence f{v};
  const FrameSequence dual = canonical_kdual(f, k);
  // minimal-norm dual splits the reconstruction evenly: {e1/2, e1/2}
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 0) = 0.5;
  expected(0, 1) = 0.5;
  CHECK(operator_norm(Matrix(dual.vectors - expected)) < 1e-12);
  CHECK(verify_kdual(f, dual, k));

  // a non-dual is rejected: {e2, e2} reconstructs the wrong operator
  Matrix w = Matrix::Zero(2, 2);
  w(1, 0) = 1.0;
  w(1, 1) = 1.0;
  CHECK_FALSE(verify_kdual(f, FrameSequence(w), k));
}

TEST_CASE("canonical dual verifies on random K-frames") {
  for (std::uint64_t seed : {21u, 22u, 23u}) {
    const auto [f, k] = planted(seed, 5, 7);
    const FrameSequence dual = canonical_kdual(f, k);
    CHECK(dual.dim() == 5);
    CHECK(dual.count() == 7);
    CHECK(verify_kdual(f, dual, k));
  }
  // non-K-frame: full-rank operator, too few members
  Rng rng(24);
  const FrameSequence g{gaussian_matrix(rng, 4, 2)};
  const Matrix u = random_unitary(rng, 4);
  CHECK_THROWS_AS(canonical_kdual(g, u), NotKFrame);
  CHECK_THROWS_AS(kframe_bounds(g, u), NotKFrame);
}

TEST_CASE("dual relation transposes exactly for self-adjoint operators") {
  Rng rng(31);
  FrameSequence f{gaussian_matrix(rng, 4, 6)};
  const Matrix t = synthesis(f);
  const Matrix g = gaussian_matrix(rng, 6, 4);
  const Matrix k_sa = t * g * adjoint(t * g);  // self-adjoint, range in range(t)
  const FrameSequence dual = canonical_kdual(f, k_sa);
  CHECK(verify_kdual(f, dual, k_sa));
  CHECK(verify_kdual(dual, f, k_sa));  // interchanged roles

  // the shift operator is not self-adjoint and the interchange fails
  const ShiftInstance s = shift_kframe(4);
  const FrameSequence sdual = canonical_kdual(s.f, s.k);
  CHECK(verify_kdual(s.f, sdual, s.k));
  CHECK_FALSE(verify_kdual(sdual, s.f, s.k));
}

TEST_CASE("minimality") {
  // square independent system: minimal
  const auto [f, k] = planted(41, 4, 3);
  CHECK(is_k_minimal(f, k));

  // duplicated member: not minimal
  Matrix ext(4, 4);
  ext.leftCols(3) = f.vectors;
  ext.col(3) = f.vectors.col(1);
  CHECK_FALSE(is_k_minimal(FrameSequence(ext), k));

  // shift instance carries a zero member: not minimal
  const ShiftInstance s = shift_kframe(5);
  CHECK_FALSE(is_k_minimal(s.f, s.k));

  // non-K-frame input is rejected
  Rng rng(42);
  const FrameSequence g{gaussian_matrix(rng, 4, 2)};
  CHECK_THROWS_AS(is_k_minimal(g, random_unitary(rng, 4)), NotKFrame);
}

TEST_CASE("zero operator edge cases") {
  Rng rng(51);
  const FrameSequence f{gaussian_matrix(rng, 3, 5)};
  const Matrix z = Matrix::Zero(3, 3);
  const KFrameCertificate cert = is_kframe(f, z);
  CHECK(cert.verdict);
  CHECK(cert.lower_unconstrained);
  CHECK(std::isinf(cert.lower));
  CHECK_THROWS_AS(kframe_bounds(f, z), ZeroOperator);

  const FrameSequence dual = canonical_kdual(f, z);
  CHECK(operator_norm(dual.vectors) == 0.0);
  CHECK(verify_kdual(f, dual, z));
}

TEST_CASE("K-orthonormal bases") {
  // {e2, ..., ed} with the shift operator: orthonormal and S = K K*
  const ShiftInstance s = shift_kframe(5);
  const FrameSequence sub{Matrix(s.f.vectors.leftCols(4))};
  CHECK(is_k_orthonormal_basis(sub, s.k));
  // the full shift family has a zero member: not orthonormal
  CHECK_FALSE(is_k_orthonormal_basis(s.f, s.k));

  // standard basis relative to the identity
  const FrameSequence e{Matrix(Matrix::Identity(3, 3))};
  CHECK(is_k_orthonormal_basis(e, Matrix(Matrix::Identity(3, 3))));
  // orthonormal but wrong operator
  Matrix p = Matrix::Zero(3, 3);
  p(0, 0) = 1.0;
  CHECK_FALSE(is_k_orthonormal_basis(e, p));

  // canonical dual of a K-basis is the adjoint image, and the family is minimal
  CHECK(is_k_minimal(sub, s.k));
  const FrameSequence dual = canonical_kdual(sub, s.k);
  const Matrix expected = adjoint(s.k) * sub.vectors;
  CHECK(operator_norm(Matrix(dual.vectors - expected)) < 1e-12);
}

TEST_CASE("image of a frame under an operator") {
  Rng rng(61);
  const FrameSequence f{gaussian_matrix(rng, 4, 6)};
  REQUIRE(is_frame_kind(frame_bounds(f).kind));
  const Matrix k = gaussian_matrix(rng, 4, 4);
  const FrameSequence img = kframe_image(f, k);
  CHECK(operator_norm(Matrix(img.vectors - k * f.vectors)) == 0.0);
  CHECK(is_kframe(img, k).verdict);

  // non-frame input is rejected
  const FrameSequence thin{gaussian_matrix(rng, 4, 2)};
  CHECK_THROWS_AS(kframe_image(thin, k), NotAFrame);
}

TEST_CASE("certificates agree on both routes") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    Rng rng(seed);
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng.next_below(4));
    const Eigen::Index m = 1 + static_cast<Eigen::Index>(rng.next_below(6));
    const FrameSequence f{gaussian_matrix(rng, d, m)};
    const Matrix k = random_partial_isometry(
        rng, d, static_cast<Eigen::Index>(rng.next_below(static_cast<std::uint64_t>(d + 1))));
    const KFrameCertificate cert = is_kframe(f, k);  // throws on disagreement
    CHECK(cert.via_psd == cert.via_range);
  }
}
