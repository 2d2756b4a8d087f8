#include "framekit/frame.hpp"

#include <Eigen/Eigenvalues>

namespace framekit {

FrameSequence::FrameSequence(Matrix cols) : vectors(std::move(cols)) {
  if (vectors.rows() < 1 || vectors.cols() < 1)
    throw DimensionMismatch("FrameSequence: needs dim >= 1 and count >= 1");
}

FrameSequence::FrameSequence(Eigen::Index dim, const std::vector<Vector>& vecs) {
  if (dim < 1 || vecs.empty())
    throw DimensionMismatch("FrameSequence: needs dim >= 1 and count >= 1");
  vectors.resize(dim, static_cast<Eigen::Index>(vecs.size()));
  for (std::size_t n = 0; n < vecs.size(); ++n) {
    if (vecs[n].size() != dim)
      throw DimensionMismatch("FrameSequence: member dimension mismatch");
    vectors.col(static_cast<Eigen::Index>(n)) = vecs[n];
  }
}

Matrix synthesis(const FrameSequence& f) { return f.vectors; }

Matrix analysis(const FrameSequence& f) { return f.vectors.adjoint(); }

Matrix frame_operator(const FrameSequence& f) {
  return f.vectors * f.vectors.adjoint();
}

const char* to_string(FrameKind kind) {
  switch (kind) {
    case FrameKind::Bessel: return "bessel";
    case FrameKind::NotFrame: return "not_frame";
    case FrameKind::Frame: return "frame";
    case FrameKind::Tight: return "tight";
    case FrameKind::Parseval: return "parseval";
  }
  return "?";
}

bool is_frame_kind(FrameKind kind) {
  return kind == FrameKind::Frame || kind == FrameKind::Tight ||
         kind == FrameKind::Parseval;
}

BoundsCertificate frame_bounds(const FrameSequence& f,
                               const ToleranceConfig& tol) {
  const Matrix s = frame_operator(f);
  const Matrix sym = 0.5 * (s + s.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sym, Eigen::EigenvaluesOnly);
  BoundsCertificate cert;
  cert.tol_used = tol;
  cert.lower = std::max(0.0, eig.eigenvalues().minCoeff());
  cert.upper = std::max(0.0, eig.eigenvalues().maxCoeff());
  if (cert.lower <= tol.rank_rel * cert.upper) {
    cert.kind = FrameKind::NotFrame;
  } else if (cert.upper - cert.lower <= tol.residual_rel * cert.upper) {
    cert.kind = std::abs(cert.lower - 1.0) <= tol.residual_rel
                    ? FrameKind::Parseval
                    : FrameKind::Tight;
  } else {
    cert.kind = FrameKind::Frame;
  }
  return cert;
}

}  // namespace framekit
