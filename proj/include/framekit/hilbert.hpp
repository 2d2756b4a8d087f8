#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <utility>

#include "framekit/errors.hpp"
#include "framekit/tolerance.hpp"

// Finite-dimensional complex Hilbert space layer.  Vectors are coordinate
// columns over C^d; operators are dense matrices acting by multiplication
// (rows = output dim, cols = input dim).  The direct sum C^{d1} (+) C^{d2} is
// modelled by stacking: the first d1 coordinates live in the left summand.
//
// Convention fixed for the whole library: the inner product is linear in the
// FIRST argument and conjugate-linear in the second,
//     inner(x, y) = sum_i x_i * conj(y_i).

namespace framekit {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Orthonormal columns spanning a subspace; zero columns means the space (0).
using SubspaceBasis = Matrix;

struct SuperVector {
  Vector left;
  Vector right;
};

Complex inner(const Vector& x, const Vector& y);
Complex super_inner(const SuperVector& u, const SuperVector& v);

Vector flatten(const SuperVector& u);
SuperVector split_vector(const Vector& v, Eigen::Index d1, Eigen::Index d2);

Matrix adjoint(const Matrix& a);

// Largest singular value (0 for the zero matrix).
double operator_norm(const Matrix& a);

// K (+) L acting block-diagonally on the direct sum.
Matrix direct_sum_map(const Matrix& k, const Matrix& l);

// Orthogonal projections of C^{d1+d2} onto the two summands, as (d1+d2)-square
// idempotents P1, P2 with P1 + P2 = I.
std::pair<Matrix, Matrix> projections(Eigen::Index d1, Eigen::Index d2);

// Row blocks M1 (top d1 rows) and M2 (bottom d2 rows) of an operator into the
// direct sum, so that M x = (M1 x) (+) (M2 x) and adjoint(M) (x (+) 0) =
// adjoint(M1) x.
std::pair<Matrix, Matrix> block_components(const Matrix& m, Eigen::Index d1,
                                           Eigen::Index d2);

bool is_isometry(const Matrix& a, const ToleranceConfig& tol = {});
bool is_coisometry(const Matrix& a, const ToleranceConfig& tol = {});

// Numerical rank: number of singular values above rank_rel * sigma_max.
Eigen::Index numeric_rank(const Matrix& a, const ToleranceConfig& tol = {});

// Orthonormal bases (as matrix columns) of the range / kernel of a.
SubspaceBasis range_basis(const Matrix& a, const ToleranceConfig& tol = {});
SubspaceBasis kernel_basis(const Matrix& a, const ToleranceConfig& tol = {});

// Moore-Penrose pseudoinverse with singular values truncated at the rank
// threshold.
Matrix pseudoinverse(const Matrix& a, const ToleranceConfig& tol = {});

// Decision: range(K) contained in range(L)?  The certificate reports the worst
// relative distance of a unit vector of range(K) from range(L); on a negative
// verdict `witness` is such a vector (in range(K), far from range(L)).
struct InclusionCertificate {
  bool verdict = false;
  double max_residual = 0.0;
  std::optional<Vector> witness;
  ToleranceConfig tol_used;
};
InclusionCertificate range_inclusion(const Matrix& k, const Matrix& l,
                                     const ToleranceConfig& tol = {});

// Minimal-norm solution X of K = L X; columns of X are orthogonal to ker(L).
// Throws NoInclusion when range(K) is not contained in range(L).
Matrix douglas_factor(const Matrix& k, const Matrix& l,
                      const ToleranceConfig& tol = {});

// Least c >= 0 with K K* <= c L L*, equal to |X|^2 for the factor above.
// Convention: 0 when K = 0 (then any c works).  Throws NoInclusion when no
// such c exists.
double douglas_constant(const Matrix& k, const Matrix& l,
                        const ToleranceConfig& tol = {});

// Loewner order decision A <= B for self-adjoint A, B: smallest eigenvalue of
// B - A is >= -psd_rel * max(|A|, |B|, 1).  Throws NotSelfAdjoint if either
// input fails the symmetry residual check.
bool psd_dominance(const Matrix& a, const Matrix& b,
                   const ToleranceConfig& tol = {});

namespace detail {
// max(1, values...) scale used by relative residual checks.
double scale_floor(std::initializer_list<double> values);
// Throws PropositionViolation with `msg` when `ok` is false.  Used for
// consequences the theory guarantees; a throw means numerical breakdown.
void require_prop(bool ok, const char* msg);
}  // namespace detail

}  // namespace framekit
