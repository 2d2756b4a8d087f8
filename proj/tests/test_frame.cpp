#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "framekit/errors.hpp"
#include "framekit/frame.hpp"
#include "framekit/generators.hpp"

#include "oracles.hpp"

using namespace framekit;

namespace {
FrameSequence gaussian_frame(std::uint64_t seed, Eigen::Index d, Eigen::Index m) {
  Rng rng(seed);
  return FrameSequence(gaussian_matrix(rng, d, m));
}
}  // namespace

TEST_CASE("sequence construction and validation") {
  const FrameSequence f = gaussian_frame(1, 3, 5);
  CHECK(f.dim() == 3);
  CHECK(f.count() == 5);
  CHECK((f.at(2) - f.vectors.col(2)).norm() == 0.0);

  CHECK_THROWS_AS(FrameSequence(Matrix(0, 4)), DimensionMismatch);
  CHECK_THROWS_AS(FrameSequence(Matrix(4, 0)), DimensionMismatch);

  std::vector<Vector> vecs{Vector::Zero(3), Vector::Zero(2)};  // ragged
  CHECK_THROWS_AS(FrameSequence(3, vecs), DimensionMismatch);
  std::vector<Vector> ok{Vector::Zero(3), Vector::Ones(3)};
  const FrameSequence g(3, ok);
  CHECK(g.count() == 2);
}

TEST_CASE("canonical operators match the summation loops") {
  for (const auto& [d, m] : {std::pair<Eigen::Index, Eigen::Index>{3, 6},
                             {5, 2},
                             {4, 4}}) {
    const FrameSequence f = gaussian_frame(static_cast<std::uint64_t>(7 * d + m), d, m);
    const Matrix t = synthesis(f);
    REQUIRE(t.rows() == d);
    REQUIRE(t.cols() == m);
    CHECK(operator_norm(Matrix(analysis(f) - adjoint(t))) == 0.0);

    const Matrix s = frame_operator(f);
    CHECK(operator_norm(Matrix(s - oracles::naive_frame_operator(f))) <
          1e-12 * detail::scale_floor({operator_norm(s)}));

    Rng rng(99);
    Vector x(d);
    for (Eigen::Index i = 0; i < d; ++i) x(i) = rng.next_complex_gaussian();
    CHECK((Vector(analysis(f) * x) - oracles::naive_analysis(f, x)).norm() < 1e-12);
    Vector a(m);
    for (Eigen::Index i = 0; i < m; ++i) a(i) = rng.next_complex_gaussian();
    CHECK((Vector(t * a) - oracles::naive_synthesis(f, a)).norm() < 1e-12);
  }
}

TEST_CASE("bounds and classification on hand instances") {
  // {e1, e1, e2} in C^2: S = diag(2, 1)
  Matrix v(2, 3);
  v.setZero();
  v(0, 0) = 1.0;
  v(0, 1) = 1.0;
  v(1, 2) = 1.0;
  const auto bc = frame_bounds(FrameSequence(v));
  CHECK(bc.lower == doctest::Approx(1.0));
  CHECK(bc.upper == doctest::Approx(2.0));
  CHECK(bc.kind == FrameKind::Frame);

  // standard basis: Parseval
  const auto pb = frame_bounds(FrameSequence(Matrix(Matrix::Identity(3, 3))));
  CHECK(pb.kind == FrameKind::Parseval);
  CHECK(pb.lower == doctest::Approx(1.0));

  // doubled basis: tight with bound 4, not Parseval
  const auto tb = frame_bounds(FrameSequence(Matrix(2.0 * Matrix::Identity(3, 3))));
  CHECK(tb.kind == FrameKind::Tight);
  CHECK(tb.lower == doctest::Approx(4.0));
  CHECK(tb.upper == doctest::Approx(4.0));

  // single vector in C^2 does not span
  Matrix w = Matrix::Zero(2, 1);
  w(0, 0) = 1.0;
  const auto nb = frame_bounds(FrameSequence(w));
  CHECK(nb.kind == FrameKind::NotFrame);
  CHECK(nb.lower == doctest::Approx(0.0));
  CHECK(nb.upper == doctest::Approx(1.0));
}

TEST_CASE("bounds are invariant under member permutation and zero padding") {
  const FrameSequence f = gaussian_frame(11, 4, 7);
  const auto base = frame_bounds(f);

  Matrix perm(4, 7);
  for (Eigen::Index n = 0; n < 7; ++n) perm.col(n) = f.vectors.col((n + 3) % 7);
  const auto pb = frame_bounds(FrameSequence(perm));
  CHECK(pb.lower == doctest::Approx(base.lower));
  CHECK(pb.upper == doctest::Approx(base.upper));

  Matrix padded(4, 8);
  padded.leftCols(7) = f.vectors;
  padded.col(7).setZero();
  const auto zb = frame_bounds(FrameSequence(padded));
  CHECK(zb.lower == doctest::Approx(base.lower));
  CHECK(zb.upper == doctest::Approx(base.upper));
  CHECK(zb.kind == base.kind);
}

TEST_CASE("optimal bounds are the extreme eigenvalues") {
  const FrameSequence f = gaussian_frame(21, 3, 5);
  const auto bc = frame_bounds(f);
  // check the defining inequalities on sampled vectors, sharpness aside
  Rng rng(22);
  for (int it = 0; it < 200; ++it) {
    Vector x(3);
    for (Eigen::Index i = 0; i < 3; ++i) x(i) = rng.next_complex_gaussian();
    const double lhs = oracles::naive_analysis(f, x).squaredNorm();
    const double nx = x.squaredNorm();
    CHECK(lhs >= bc.lower * nx * (1.0 - 1e-9));
    CHECK(lhs <= bc.upper * nx * (1.0 + 1e-9));
  }
}

TEST_CASE("kind helpers") {
  CHECK(is_frame_kind(FrameKind::Frame));
  CHECK(is_frame_kind(FrameKind::Tight));
  CHECK(is_frame_kind(FrameKind::Parseval));
  CHECK_FALSE(is_frame_kind(FrameKind::NotFrame));
  CHECK_FALSE(is_frame_kind(FrameKind::Bessel));
  CHECK(std::string(to_string(FrameKind::Parseval)) == "parseval");
  CHECK(std::string(to_string(FrameKind::NotFrame)) == "not_frame");
}
