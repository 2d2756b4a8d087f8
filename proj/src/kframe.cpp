#include "framekit/kframe.hpp"

#include <limits>
#include <sstream>

namespace framekit {

namespace {

void check_operator_dims(const FrameSequence& f, const Matrix& k,
                         const char* who) {
  if (k.rows() != k.cols() || k.rows() != f.dim()) {
    std::ostringstream msg;
    msg << who << ": operator must be square of the frame dimension ("
        << f.dim() << "), got " << k.rows() << "x" << k.cols();
    throw DimensionMismatch(msg.str());
  }
}

bool is_zero_operator(const Matrix& k, const ToleranceConfig& tol) {
  return operator_norm(k) <= tol.residual_rel;
}

}  // namespace

KFrameCertificate is_kframe(const FrameSequence& f, const Matrix& k,
                            const ToleranceConfig& tol) {
  check_operator_dims(f, k, "is_kframe");
  KFrameCertificate cert;
  cert.tol_used = tol;
  const Matrix t = synthesis(f);
  const Matrix s = frame_operator(f);
  cert.upper = frame_bounds(f, tol).upper;

  if (is_zero_operator(k, tol)) {
    // The lower inequality is vacuous: every sequence is a 0-frame.
    cert.verdict = cert.via_psd = cert.via_range = true;
    cert.lower = std::numeric_limits<double>::infinity();
    cert.lower_unconstrained = true;
    return cert;
  }

  cert.via_range = range_inclusion(k, t, tol).verdict;

  // Independent route: the largest admissible A is 1/|X|^2 for the reduced
  // factor X of K through T (computed without assuming the inclusion holds);
  // the pair (A_cand, K K* <= A_cand^-1 ... ) either witnesses the Loewner
  // inequality or fails decisively.
  const Matrix x = pseudoinverse(t, tol) * k;
  const double xn = operator_norm(x);
  double a_cand = 0.0;
  if (xn > 0.0) {
    a_cand = 1.0 / (xn * xn);
    cert.via_psd = psd_dominance(a_cand * (k * k.adjoint()), s, tol);
  } else {
    cert.via_psd = false;  // K nonzero but projects to nothing in range(T)
  }

  if (cert.via_psd != cert.via_range) {
    std::ostringstream msg;
    msg << "is_kframe: characterizations disagree (psd=" << cert.via_psd
        << ", range=" << cert.via_range
        << "); instance is numerically on the decision boundary";
    throw CharacterizationMismatch(msg.str());
  }
  cert.verdict = cert.via_range;
  cert.lower = cert.verdict ? a_cand : 0.0;
  return cert;
}

std::pair<double, double> kframe_bounds(const FrameSequence& f, const Matrix& k,
                                        const ToleranceConfig& tol) {
  const KFrameCertificate cert = is_kframe(f, k, tol);
  if (!cert.verdict)
    throw NotKFrame("kframe_bounds: sequence is not a K-frame for this K");
  if (cert.lower_unconstrained)
    throw ZeroOperator("kframe_bounds: K = 0, lower bound unconstrained");
  return {cert.lower, cert.upper};
}

FrameSequence canonical_kdual(const FrameSequence& f, const Matrix& k,
                              const ToleranceConfig& tol) {
  const KFrameCertificate cert = is_kframe(f, k, tol);
  if (!cert.verdict)
    throw NotKFrame("canonical_kdual: no dual exists, sequence is not a K-frame");
  // Minimal-norm coefficient map G with T G = K; the dual members are the
  // adjoint columns.  For K = 0 this is the zero sequence.
  const Matrix g = pseudoinverse(synthesis(f), tol) * k;
  return FrameSequence(Matrix(g.adjoint()));
}

bool verify_kdual(const FrameSequence& f, const FrameSequence& dual,
                  const Matrix& k, const ToleranceConfig& tol) {
  check_operator_dims(f, k, "verify_kdual");
  if (dual.dim() != f.dim() || dual.count() != f.count())
    throw DimensionMismatch("verify_kdual: dual shape must match the sequence");
  const Matrix t = synthesis(f);
  const Matrix td = synthesis(dual);
  const double scale =
      detail::scale_floor({operator_norm(k),
                           operator_norm(t) * operator_norm(td)});
  const bool ok = operator_norm(k - t * td.adjoint()) <= tol.residual_rel * scale;
  if (ok) {
    // A K-dual is automatically a K*-frame.
    detail::require_prop(is_kframe(dual, Matrix(k.adjoint()), tol).verdict,
                         "verify_kdual: dual failed the K*-frame certificate");
  }
  return ok;
}

bool is_k_minimal(const FrameSequence& f, const Matrix& k,
                  const ToleranceConfig& tol) {
  const KFrameCertificate cert = is_kframe(f, k, tol);
  if (!cert.verdict)
    throw NotKFrame("is_k_minimal: sequence is not a K-frame for this K");
  const Matrix t = synthesis(f);
  const bool minimal = numeric_rank(t, tol) == f.count();
  if (minimal) {
    // Injective synthesis leaves no room for zero members.
    double min_col = std::numeric_limits<double>::infinity();
    for (Eigen::Index n = 0; n < f.count(); ++n)
      min_col = std::min(min_col, f.vectors.col(n).norm());
    detail::require_prop(min_col > tol.rank_rel * operator_norm(t),
                         "is_k_minimal: minimal sequence with a zero member");
  }
  return minimal;
}

bool is_k_orthonormal_basis(const FrameSequence& f, const Matrix& k,
                            const ToleranceConfig& tol) {
  check_operator_dims(f, k, "is_k_orthonormal_basis");
  const Matrix gram = f.vectors.adjoint() * f.vectors;
  const Matrix eye = Matrix::Identity(f.count(), f.count());
  const bool orthonormal =
      operator_norm(gram - eye) <=
      tol.residual_rel * detail::scale_floor({operator_norm(gram)});
  if (!orthonormal) return false;
  const Matrix s = frame_operator(f);
  const Matrix kk = k * k.adjoint();
  const double scale =
      detail::scale_floor({operator_norm(s), operator_norm(kk)});
  // Parseval K-frame <=> S = K K*.
  return operator_norm(s - kk) <= tol.residual_rel * scale;
}

FrameSequence kframe_image(const FrameSequence& f, const Matrix& k,
                           const ToleranceConfig& tol) {
  check_operator_dims(f, k, "kframe_image");
  if (!is_frame_kind(frame_bounds(f, tol).kind))
    throw NotAFrame("kframe_image: input sequence is not a frame");
  FrameSequence image{Matrix(k * f.vectors)};
  detail::require_prop(is_kframe(image, k, tol).verdict,
                       "kframe_image: image of a frame failed the K-frame certificate");
  return image;
}

}  // namespace framekit
