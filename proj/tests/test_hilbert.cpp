#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "framekit/errors.hpp"
#include "framekit/generators.hpp"
#include "framekit/hilbert.hpp"

using namespace framekit;

namespace {
const Complex I(0.0, 1.0);

Matrix gm(std::uint64_t seed, Eigen::Index r, Eigen::Index c) {
  Rng rng(seed);
  return gaussian_matrix(rng, r, c);
}
}  // namespace

TEST_CASE("inner product is linear in the first argument") {
  Vector x(2), y(2);
  x << Complex(1, 0), I;
  y << I, Complex(1, 0);
  // sum_i x_i conj(y_i) = 1 * (-i) + i * 1 = 0
  CHECK(std::abs(inner(x, y)) == doctest::Approx(0.0));
  CHECK(std::abs(inner(x, x) - Complex(2, 0)) < 1e-15);

  const Vector u = gm(1, 5, 1).col(0);
  const Vector v = gm(2, 5, 1).col(0);
  const Complex a(0.3, -1.7);
  CHECK(std::abs(inner(Vector(a * u), v) - a * inner(u, v)) < 1e-12);
  CHECK(std::abs(inner(u, Vector(a * v)) - std::conj(a) * inner(u, v)) < 1e-12);
  CHECK(std::abs(inner(v, u) - std::conj(inner(u, v))) < 1e-14);

  // against a plain summation loop
  Complex s(0, 0);
  for (Eigen::Index i = 0; i < u.size(); ++i) s += u(i) * std::conj(v(i));
  CHECK(std::abs(inner(u, v) - s) < 1e-12);
}

TEST_CASE("super vectors flatten and split") {
  SuperVector u{gm(3, 3, 1).col(0), gm(4, 2, 1).col(0)};
  const Vector v = flatten(u);
  CHECK(v.size() == 5);
  const SuperVector w = split_vector(v, 3, 2);
  CHECK((w.left - u.left).norm() == 0.0);
  CHECK((w.right - u.right).norm() == 0.0);
  CHECK(std::abs(super_inner(u, u) - (inner(u.left, u.left) + inner(u.right, u.right))) <
        1e-14);
  CHECK_THROWS_AS(split_vector(v, 3, 3), DimensionMismatch);
}

TEST_CASE("adjoint conjugates and transposes") {
  Matrix a(2, 3);
  a << Complex(1, 2), Complex(0, 1), Complex(3, 0), Complex(0, -1), Complex(2, 2),
      Complex(-1, 5);
  const Matrix b = adjoint(a);
  REQUIRE(b.rows() == 3);
  REQUIRE(b.cols() == 2);
  CHECK(b(0, 0) == Complex(1, -2));
  CHECK(b(1, 0) == Complex(0, -1));
  CHECK(b(0, 1) == Complex(0, 1));
  CHECK(b(2, 1) == Complex(-1, -5));
}

TEST_CASE("operator norm") {
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  CHECK(operator_norm(d) == doctest::Approx(3.0));
  CHECK(operator_norm(Matrix::Zero(4, 4)) == 0.0);
  CHECK(operator_norm(Matrix(0, 0)) == 0.0);
  CHECK(operator_norm(Matrix(3, 0)) == 0.0);
  // unitary invariance
  Rng rng(7);
  const Matrix u = random_unitary(rng, 4);
  const Matrix m = gm(8, 4, 4);
  CHECK(operator_norm(Matrix(u * m)) == doctest::Approx(operator_norm(m)));
}

TEST_CASE("direct sum of operators acts blockwise") {
  const Matrix k = gm(10, 3, 3);
  const Matrix l = gm(11, 2, 2);
  const Matrix s = direct_sum_map(k, l);
  REQUIRE(s.rows() == 5);
  const Vector x = gm(12, 3, 1).col(0);
  const Vector y = gm(13, 2, 1).col(0);
  const Vector v = flatten(SuperVector{x, y});
  const Vector img = s * v;
  CHECK((img.head(3) - k * x).norm() < 1e-14);
  CHECK((img.tail(2) - l * y).norm() < 1e-14);
  CHECK(operator_norm(s) == doctest::Approx(std::max(operator_norm(k), operator_norm(l))));
}

TEST_CASE("coordinate projections") {
  const auto [p1, p2] = projections(2, 3);
  CHECK(operator_norm(Matrix(p1 + p2 - Matrix::Identity(5, 5))) == 0.0);
  CHECK(operator_norm(Matrix(p1 * p2)) == 0.0);
  CHECK(operator_norm(Matrix(p1 * p1 - p1)) == 0.0);
  CHECK(operator_norm(Matrix(p1 - adjoint(p1))) == 0.0);
  CHECK_THROWS_AS(projections(0, 3), DimensionMismatch);
}

TEST_CASE("block components of a direct-sum operator") {
  const Matrix k = gm(20, 3, 3);
  const Matrix l = gm(21, 2, 2);
  const Matrix s = direct_sum_map(k, l);
  const auto [m1, m2] = block_components(s, 3, 2);
  REQUIRE(m1.rows() == 3);
  REQUIRE(m1.cols() == 5);
  // rows of the direct sum: M1 = [K 0], M2 = [0 L]
  CHECK(operator_norm(Matrix(m1.leftCols(3) - k)) == 0.0);
  CHECK(operator_norm(Matrix(m1.rightCols(2))) == 0.0);
  CHECK(operator_norm(Matrix(m2.rightCols(2) - l)) == 0.0);
  CHECK_THROWS_AS(block_components(s, 4, 2), DimensionMismatch);
}

TEST_CASE("isometry and co-isometry predicates") {
  Rng rng(30);
  const Matrix u = random_unitary(rng, 4);
  CHECK(is_isometry(u));
  CHECK(is_coisometry(u));
  CHECK_FALSE(is_isometry(Matrix(0.5 * u)));
  const Matrix tall = u.leftCols(2);  // 4 x 2, orthonormal columns
  CHECK(is_isometry(tall));
  CHECK_FALSE(is_coisometry(tall));
  const Matrix wide = adjoint(tall);
  CHECK(is_coisometry(wide));
  CHECK_FALSE(is_isometry(wide));
  CHECK_FALSE(is_isometry(gm(31, 4, 4)));
}

TEST_CASE("numeric rank on planted factors") {
  for (Eigen::Index d = 2; d <= 6; ++d) {
    for (Eigen::Index r = 0; r <= d; ++r) {
      Matrix m;
      if (r == 0) {
        m = Matrix::Zero(d, d);
      } else {
        m = gm(100 + static_cast<std::uint64_t>(10 * d + r), d, r) *
            gm(200 + static_cast<std::uint64_t>(10 * d + r), r, d);
      }
      CHECK(numeric_rank(m) == r);
    }
  }
  CHECK(numeric_rank(Matrix(0, 0)) == 0);
}

TEST_CASE("range and kernel bases") {
  const Matrix m = gm(40, 5, 3) * gm(41, 3, 6);  // 5 x 6, rank 3
  const Matrix q = range_basis(m);
  REQUIRE(q.cols() == 3);
  CHECK(operator_norm(Matrix(q.adjoint() * q - Matrix::Identity(3, 3))) < 1e-12);
  // projector onto range reproduces the columns of m
  CHECK(operator_norm(Matrix(m - q * (q.adjoint() * m))) < 1e-10 * operator_norm(m));

  const Matrix n = kernel_basis(m);
  REQUIRE(n.cols() == 3);  // 6 - rank
  CHECK(operator_norm(Matrix(m * n)) < 1e-10 * operator_norm(m));
  CHECK(operator_norm(Matrix(n.adjoint() * n - Matrix::Identity(3, 3))) < 1e-12);

  CHECK(kernel_basis(Matrix::Identity(4, 4)).cols() == 0);
  CHECK(range_basis(Matrix::Zero(4, 4)).cols() == 0);
  CHECK(kernel_basis(Matrix::Zero(3, 5)).cols() == 5);
}

TEST_CASE("pseudoinverse satisfies the four defining identities") {
  for (const auto& [r, c] : {std::pair<Eigen::Index, Eigen::Index>{4, 6},
                             {6, 4},
                             {5, 5}}) {
    const Matrix a = gm(static_cast<std::uint64_t>(50 + r * 10 + c), r, c);
    const Matrix p = pseudoinverse(a);
    REQUIRE(p.rows() == c);
    REQUIRE(p.cols() == r);
    const double scale = operator_norm(a);
    CHECK(operator_norm(Matrix(a * p * a - a)) < 1e-10 * scale);
    CHECK(operator_norm(Matrix(p * a * p - p)) < 1e-10 * operator_norm(p));
    CHECK(operator_norm(Matrix(a * p - adjoint(a * p))) < 1e-12 * scale);
    CHECK(operator_norm(Matrix(p * a - adjoint(p * a))) < 1e-12 * scale);
  }
  Rng rng(55);
  const Matrix iso = random_unitary(rng, 5).leftCols(3);
  CHECK(operator_norm(Matrix(pseudoinverse(iso) - adjoint(iso))) < 1e-12);
}

TEST_CASE("range inclusion certificates") {
  const Matrix l = gm(60, 5, 2) * gm(61, 2, 5);  // rank 2
  const Matrix k = l * gm(62, 5, 5);             // planted inside range(l)
  const auto good = range_inclusion(k, l);
  CHECK(good.verdict);
  CHECK(good.max_residual < 1e-10);
  CHECK_FALSE(good.witness.has_value());

  const auto bad = range_inclusion(Matrix(Matrix::Identity(5, 5)), l);
  CHECK_FALSE(bad.verdict);
  REQUIRE(bad.witness.has_value());
  // the witness sticks out of range(l)
  const Matrix q = range_basis(l);
  const Vector w = *bad.witness;
  CHECK((w - q * (q.adjoint() * w)).norm() > 1e-3);

  // zero operator is contained in every range
  CHECK(range_inclusion(Matrix(Matrix::Zero(5, 5)), l).verdict);
  // dimension mismatch rejected
  CHECK_THROWS_AS(range_inclusion(gm(63, 4, 4), l), DimensionMismatch);
}

TEST_CASE("factorization through an operator") {
  const Matrix l = gm(70, 4, 2) * gm(71, 2, 4);
  const Matrix x0 = gm(72, 4, 4);
  const Matrix k = l * x0;
  const Matrix x = douglas_factor(k, l);
  CHECK(operator_norm(Matrix(k - l * x)) < 1e-10 * operator_norm(k));
  // reduced solution: columns orthogonal to ker(l)
  const Matrix w = kernel_basis(l);
  CHECK(operator_norm(Matrix(w.adjoint() * x)) < 1e-10 * operator_norm(x));
  CHECK_THROWS_AS(douglas_factor(Matrix(Matrix::Identity(4, 4)), l), NoInclusion);
}

TEST_CASE("least factorization constant") {
  const Matrix l = gm(80, 4, 4);
  CHECK(douglas_constant(l, l) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(douglas_constant(Matrix(2.0 * l), l) == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(douglas_constant(Matrix(Matrix::Zero(4, 4)), l) == 0.0);

  // cross-check against the bisection oracle on a planted instance
  const Matrix lr = gm(81, 5, 3) * gm(82, 3, 5);
  const Matrix k = lr * gm(83, 5, 5);
  const double c = douglas_constant(k, lr);
  const double c_bis = [&] {
    const Matrix kk = k * k.adjoint();
    const Matrix ll = lr * lr.adjoint();
    double hi = 1.0;
    while (!psd_dominance(kk, Matrix(hi * ll))) hi *= 2.0;
    double lo = 0.0;
    while (hi - lo > 1e-10 * hi) {
      const double mid = 0.5 * (lo + hi);
      (psd_dominance(kk, Matrix(mid * ll)) ? hi : lo) = mid;
    }
    return hi;
  }();
  CHECK(c == doctest::Approx(c_bis).epsilon(1e-6));
}

TEST_CASE("positive dominance") {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = 1.0;
  a(1, 1) = 3.0;
  Matrix b = Matrix::Zero(2, 2);
  b(0, 0) = 2.0;
  b(1, 1) = 2.0;
  CHECK_FALSE(psd_dominance(a, b));  // 3 > 2 in the second slot
  CHECK_FALSE(psd_dominance(b, a));  // 2 > 1 in the first slot
  CHECK(psd_dominance(a, a));
  CHECK(psd_dominance(a, Matrix(a + 0.1 * Matrix::Identity(2, 2))));

  Matrix nh = gm(90, 3, 3);  // generic: not self-adjoint
  CHECK_THROWS_AS(psd_dominance(nh, Matrix(Matrix::Identity(3, 3))), NotSelfAdjoint);
  CHECK_THROWS_AS(psd_dominance(a, Matrix(Matrix::Identity(3, 3))), DimensionMismatch);
}
