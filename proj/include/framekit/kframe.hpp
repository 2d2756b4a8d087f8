#pragma once

#include "framekit/frame.hpp"

// K-frames: sequences {x_n} with
//
//     A |K* x|^2  <=  sum_n |inner(x, x_n)|^2  <=  B |x|^2
//
// for some 0 < A <= B and a fixed operator K on C^d.  Ordinary frames are the
// case K = I.  Two equivalent characterizations are used as independent
// decision routes and must always agree:
//
//   via_psd   : some A > 0 has A * K K* <= S (Loewner order)
//   via_range : range(K) is contained in range(T)
//
// When they disagree beyond tolerance slack the certificate constructor
// throws CharacterizationMismatch (numerical breakdown, not mathematics).

namespace framekit {

struct KFrameCertificate {
  bool verdict = false;
  // Largest A with A * K K* <= S.  +infinity with `lower_unconstrained` set
  // when K = 0 (every A works); 0 when the verdict is false.
  double lower = 0.0;
  // Optimal Bessel bound, largest eigenvalue of S.
  double upper = 0.0;
  bool lower_unconstrained = false;
  bool via_psd = false;
  bool via_range = false;
  ToleranceConfig tol_used;
};

KFrameCertificate is_kframe(const FrameSequence& f, const Matrix& k,
                            const ToleranceConfig& tol = {});

// Optimal (A, B) for a K-frame.  Throws NotKFrame when the verdict is false
// and ZeroOperator when K = 0 (the lower bound is unconstrained there).
std::pair<double, double> kframe_bounds(const FrameSequence& f, const Matrix& k,
                                        const ToleranceConfig& tol = {});

// A sequence {f_n} is a K-dual of {x_n} when K x = sum_n inner(x, f_n) x_n for
// all x, i.e. K = T_F * adjoint(T_Fd).  The canonical one is the minimal-norm
// solution (coefficient map orthogonal to ker T).  Throws NotKFrame when no
// dual exists (equivalently: the K-frame verdict is false).
FrameSequence canonical_kdual(const FrameSequence& f, const Matrix& k,
                              const ToleranceConfig& tol = {});

// Checks the reconstruction identity above.  On success also asserts the
// guaranteed consequence that {f_n} is a K*-frame (PropositionViolation if the
// numbers refuse).
bool verify_kdual(const FrameSequence& f, const FrameSequence& dual,
                  const Matrix& k, const ToleranceConfig& tol = {});

// K-minimal K-frame: synthesis injective (unique K-dual).  Throws NotKFrame
// on a non-K-frame.  When true, asserts the sequence has no zero members.
bool is_k_minimal(const FrameSequence& f, const Matrix& k,
                  const ToleranceConfig& tol = {});

// K-orthonormal basis: orthonormal system whose frame operator equals K K*
// (Parseval K-frame).  Pure predicate, no preconditions.
bool is_k_orthonormal_basis(const FrameSequence& f, const Matrix& k,
                            const ToleranceConfig& tol = {});

// {K x_n} for a frame {x_n}; the image of a frame is always a K-frame, and the
// result certificate is runtime-asserted.  Throws NotAFrame when {x_n} is not
// a frame.
FrameSequence kframe_image(const FrameSequence& f, const Matrix& k,
                           const ToleranceConfig& tol = {});

}  // namespace framekit
