#include "framekit/hilbert.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <sstream>

namespace framekit {

namespace detail {

double scale_floor(std::initializer_list<double> values) {
  double s = 1.0;
  for (double v : values) s = std::max(s, v);
  return s;
}

void require_prop(bool ok, const char* msg) {
  if (!ok) throw PropositionViolation(msg);
}

}  // namespace detail

namespace {

void check_same_dim(const Vector& x, const Vector& y) {
  if (x.size() != y.size())
    throw DimensionMismatch("inner: vectors of different dimension");
}

// Jacobi SVD is plenty at the sizes this library targets and is the most
// accurate option for small complex matrices.
Eigen::JacobiSVD<Matrix> svd_of(const Matrix& a, unsigned options) {
  return Eigen::JacobiSVD<Matrix>(a, options);
}

Eigen::Index rank_from_singulars(const Eigen::VectorXd& sv, double rank_rel) {
  if (sv.size() == 0) return 0;
  const double cut = rank_rel * sv(0);  // sv is sorted descending
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > cut && sv(r) > 0.0) ++r;
  return r;
}

}  // namespace

Complex inner(const Vector& x, const Vector& y) {
  check_same_dim(x, y);
  // Eigen's dot conjugates its *object*, so y.dot(x) = sum_i conj(y_i) x_i,
  // which is linear in x as required.
  return y.dot(x);
}

Complex super_inner(const SuperVector& u, const SuperVector& v) {
  return inner(u.left, v.left) + inner(u.right, v.right);
}

Vector flatten(const SuperVector& u) {
  Vector out(u.left.size() + u.right.size());
  out.head(u.left.size()) = u.left;
  out.tail(u.right.size()) = u.right;
  return out;
}

SuperVector split_vector(const Vector& v, Eigen::Index d1, Eigen::Index d2) {
  if (d1 < 0 || d2 < 0 || v.size() != d1 + d2)
    throw DimensionMismatch("split_vector: dimensions do not sum to size");
  return {v.head(d1), v.tail(d2)};
}

Matrix adjoint(const Matrix& a) { return a.adjoint(); }

double operator_norm(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
}

Matrix direct_sum_map(const Matrix& k, const Matrix& l) {
  Matrix out = Matrix::Zero(k.rows() + l.rows(), k.cols() + l.cols());
  out.topLeftCorner(k.rows(), k.cols()) = k;
  out.bottomRightCorner(l.rows(), l.cols()) = l;
  return out;
}

std::pair<Matrix, Matrix> projections(Eigen::Index d1, Eigen::Index d2) {
  if (d1 < 1 || d2 < 1)
    throw DimensionMismatch("projections: both summands must be nontrivial");
  Matrix p1 = Matrix::Zero(d1 + d2, d1 + d2);
  Matrix p2 = Matrix::Zero(d1 + d2, d1 + d2);
  p1.topLeftCorner(d1, d1).setIdentity();
  p2.bottomRightCorner(d2, d2).setIdentity();
  return {p1, p2};
}

std::pair<Matrix, Matrix> block_components(const Matrix& m, Eigen::Index d1,
                                           Eigen::Index d2) {
  if (d1 < 1 || d2 < 1 || m.rows() != d1 + d2)
    throw DimensionMismatch("block_components: row count must equal d1 + d2");
  return {m.topRows(d1), m.bottomRows(d2)};
}

bool is_isometry(const Matrix& a, const ToleranceConfig& tol) {
  const Matrix gram = a.adjoint() * a;
  const Matrix eye = Matrix::Identity(a.cols(), a.cols());
  const double n = operator_norm(a);
  return operator_norm(gram - eye) <=
         tol.residual_rel * detail::scale_floor({n * n});
}

bool is_coisometry(const Matrix& a, const ToleranceConfig& tol) {
  return is_isometry(a.adjoint(), tol);
}

Eigen::Index numeric_rank(const Matrix& a, const ToleranceConfig& tol) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return rank_from_singulars(svd.singularValues(), tol.rank_rel);
}

SubspaceBasis range_basis(const Matrix& a, const ToleranceConfig& tol) {
  if (a.rows() == 0 || a.cols() == 0) return Matrix(a.rows(), 0);
  auto svd = svd_of(a, Eigen::ComputeThinU);
  const Eigen::Index r = rank_from_singulars(svd.singularValues(), tol.rank_rel);
  return svd.matrixU().leftCols(r);
}

SubspaceBasis kernel_basis(const Matrix& a, const ToleranceConfig& tol) {
  if (a.cols() == 0) return Matrix(0, 0);
  if (a.rows() == 0) return Matrix::Identity(a.cols(), a.cols());
  auto svd = svd_of(a, Eigen::ComputeFullV);
  const Eigen::Index r = rank_from_singulars(svd.singularValues(), tol.rank_rel);
  return svd.matrixV().rightCols(a.cols() - r);
}

Matrix pseudoinverse(const Matrix& a, const ToleranceConfig& tol) {
  if (a.rows() == 0 || a.cols() == 0) return Matrix(a.cols(), a.rows());
  auto svd = svd_of(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const Eigen::Index r = rank_from_singulars(sv, tol.rank_rel);
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
  for (Eigen::Index i = 0; i < r; ++i) inv(i) = 1.0 / sv(i);
  return svd.matrixV() * inv.asDiagonal() *
         svd.matrixU().adjoint();
}

InclusionCertificate range_inclusion(const Matrix& k, const Matrix& l,
                                     const ToleranceConfig& tol) {
  if (k.rows() != l.rows())
    throw DimensionMismatch("range_inclusion: operators into different spaces");
  InclusionCertificate cert;
  cert.tol_used = tol;
  const SubspaceBasis qk = range_basis(k, tol);
  const SubspaceBasis ql = range_basis(l, tol);
  double worst = 0.0;
  Eigen::Index worst_col = -1;
  for (Eigen::Index j = 0; j < qk.cols(); ++j) {
    const Vector u = qk.col(j);
    const Vector res = u - ql * (ql.adjoint() * u);
    const double r = res.norm();  // u is a unit vector: relative == absolute
    if (r > worst) {
      worst = r;
      worst_col = j;
    }
  }
  cert.max_residual = worst;
  cert.verdict = worst <= tol.residual_rel;
  if (!cert.verdict && worst_col >= 0) cert.witness = qk.col(worst_col);
  return cert;
}

Matrix douglas_factor(const Matrix& k, const Matrix& l,
                      const ToleranceConfig& tol) {
  const InclusionCertificate inc = range_inclusion(k, l, tol);
  if (!inc.verdict) {
    std::ostringstream msg;
    msg << "douglas_factor: range(K) not contained in range(L), residual "
        << inc.max_residual;
    throw NoInclusion(msg.str());
  }
  return pseudoinverse(l, tol) * k;
}

double douglas_constant(const Matrix& k, const Matrix& l,
                        const ToleranceConfig& tol) {
  if (operator_norm(k) <= tol.residual_rel) return 0.0;  // K = 0: any c works
  const Matrix x = douglas_factor(k, l, tol);
  const double n = operator_norm(x);
  return n * n;
}

bool psd_dominance(const Matrix& a, const Matrix& b,
                   const ToleranceConfig& tol) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw DimensionMismatch("psd_dominance: expects square operators of one dim");
  const double na = operator_norm(a);
  const double nb = operator_norm(b);
  const double scale = detail::scale_floor({na, nb});
  if (operator_norm(a - a.adjoint()) > tol.residual_rel * scale)
    throw NotSelfAdjoint("psd_dominance: first argument not self-adjoint");
  if (operator_norm(b - b.adjoint()) > tol.residual_rel * scale)
    throw NotSelfAdjoint("psd_dominance: second argument not self-adjoint");
  const Matrix diff = 0.5 * ((b - a) + (b - a).adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(diff, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff() >= -tol.psd_rel * scale;
}

}  // namespace framekit
