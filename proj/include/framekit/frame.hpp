#pragma once

#include <vector>

#include "framekit/hilbert.hpp"

// Finite sequences {x_1, ..., x_M} in C^d and their canonical operators:
//
//   synthesis  T : C^M -> C^d,  T a = sum_n a_n x_n      (columns = vectors)
//   analysis   T*: C^d -> C^M,  (T* x)_n = inner(x, x_n)
//   frame op   S = T T* : C^d -> C^d, self-adjoint PSD
//
// A frame is a sequence with A |x|^2 <= sum_n |inner(x, x_n)|^2 <= B |x|^2 for
// some 0 < A <= B; the optimal bounds are the extreme eigenvalues of S.

namespace framekit {

struct FrameSequence {
  // column n holds x_n; rows = dim of the space, cols = number of vectors
  Matrix vectors;

  FrameSequence() = default;
  explicit FrameSequence(Matrix cols);
  FrameSequence(Eigen::Index dim, const std::vector<Vector>& vecs);

  Eigen::Index dim() const { return vectors.rows(); }
  Eigen::Index count() const { return vectors.cols(); }
  Vector at(Eigen::Index n) const { return vectors.col(n); }
};

Matrix synthesis(const FrameSequence& f);
Matrix analysis(const FrameSequence& f);
Matrix frame_operator(const FrameSequence& f);

enum class FrameKind { Bessel, NotFrame, Frame, Tight, Parseval };

const char* to_string(FrameKind kind);

// Optimal constants and classification.  `lower`/`upper` are the extreme
// eigenvalues of S clamped at 0.  kind:
//   NotFrame : lower <= rank_rel * upper        (sequence does not span)
//   Frame    : spanning, bounds distinct
//   Tight    : spanning and |upper - lower| <= residual_rel * upper
//   Parseval : tight with |lower - 1| <= residual_rel
// (Bessel never comes out of this classifier: every finite sequence is Bessel
// with optimal bound `upper`; the enum value exists for reporting contexts.)
struct BoundsCertificate {
  double lower = 0.0;
  double upper = 0.0;
  FrameKind kind = FrameKind::NotFrame;
  ToleranceConfig tol_used;
};

BoundsCertificate frame_bounds(const FrameSequence& f,
                               const ToleranceConfig& tol = {});

// True for Frame, Tight and Parseval.
bool is_frame_kind(FrameKind kind);

}  // namespace framekit
