#pragma once

#include <string>
#include <vector>

#include "framekit/kframe.hpp"

// Pairs ({x_n} in C^{d1}, {y_n} in C^{d2}) with a common index set, and the
// combined sequence {x_n (+) y_n} in the direct sum C^{d1+d2}.  The questions
// answered here: when is the combined sequence a (K(+)L)-frame, when is it
// minimal, what do duals and K-orthonormal bases look like upstairs, and which
// component conditions are necessary or sufficient.

namespace framekit {

struct SuperFramePair {
  FrameSequence left;   // {x_n} in C^{d1}
  FrameSequence right;  // {y_n} in C^{d2}

  SuperFramePair() = default;
  SuperFramePair(FrameSequence l, FrameSequence r);

  Eigen::Index count() const { return left.count(); }
};

// {x_n (+) y_n} as a sequence in C^{d1+d2} (stacked columns).
FrameSequence combine(const SuperFramePair& p);

// Inverse of combine for a sequence living in a declared split.
SuperFramePair split(const FrameSequence& f, Eigen::Index d1, Eigen::Index d2);

// Optimal Bessel bound of the combined sequence never exceeds
// 2 * max(B1, B2); returns the checked inequality (always true on clean
// input, surfaced as a check so breakage is visible).
bool super_bessel_check(const SuperFramePair& p, const ToleranceConfig& tol = {});

// Structural identities of the combined canonical operators:
//   T a = (T1 a) (+) (T2 a)
//   T*(x (+) y) = T1* x + T2* y
//   S (x (+) y) = (S1 x + T1 T2* y) (+) (S2 y + T2 T1* x)
// verified as matrix identities to residual tolerance.
bool frame_operator_identity(const SuperFramePair& p,
                             const ToleranceConfig& tol = {});

// For a sequence {z_n} that is an M-frame of the direct sum with optimal
// bounds (A, B), the row blocks M1, M2 of M satisfy the component
// inequalities A * M1 M1* <= S_left and sum_n |inner(x, left_n)|^2 <= B |x|^2
// (and symmetrically).  Returns (left_ok, right_ok); throws NotKFrame when
// {z_n} is not an M-frame.
std::pair<bool, bool> necessary_component_check(const FrameSequence& f,
                                                const Matrix& m,
                                                Eigen::Index d1,
                                                Eigen::Index d2,
                                                const ToleranceConfig& tol = {});

struct SuperCheckReport {
  bool is_bessel = false;
  KFrameCertificate combined;
  bool left_is_kframe = false;
  bool right_is_lframe = false;
  bool is_minimal = false;
  // analysis ranges of the two components orthogonal (T2 T1* = 0)
  bool disjoint = false;
  // range(K) subset T1(ker T2), range(L) subset T2(ker T1)
  std::pair<bool, bool> necessary_ranges{false, false};
  std::vector<std::string> notes;
  ToleranceConfig tol_used;
};

// Full decision report for "is {x_n (+) y_n} a (K(+)L)-frame", with the
// necessary component conditions runtime-asserted on a positive verdict.
SuperCheckReport is_super_klframe(const SuperFramePair& p, const Matrix& k,
                                  const Matrix& l,
                                  const ToleranceConfig& tol = {});

// Sufficiency via disjointness: both components K-/L-frames and T2 T1* = 0
// imply the combined verdict with lower bound >= min(A1, A2).  Returns the
// disjointness predicate; positive results are runtime-asserted against
// is_kframe of the combined sequence.  Throws PreconditionViolation when a
// component certificate fails.
bool disjointness_sufficient(const SuperFramePair& p, const Matrix& k,
                             const Matrix& l, const ToleranceConfig& tol = {});

// Necessary range conditions on a positive combined verdict:
//   range(K) subset T1(ker T2)   and   range(L) subset T2(ker T1).
std::pair<bool, bool> range_condition_necessary(const SuperFramePair& p,
                                                const Matrix& k,
                                                const Matrix& l,
                                                const ToleranceConfig& tol = {});

// Combined synthesis injective <=> ker T1 and ker T2 intersect trivially.
bool is_super_minimal(const SuperFramePair& p, const ToleranceConfig& tol = {});

// Sufficient condition for a minimal combined K(+)L-frame: disjointness plus
// rank(T1*) + rank(T2*) = M.  Positive results runtime-asserted.  Throws
// PreconditionViolation when a component certificate fails.
bool minimality_sufficient(const SuperFramePair& p, const Matrix& k,
                           const Matrix& l, const ToleranceConfig& tol = {});

// Given a combined dual pair: a (K(+)L)-dual of the combined sequence splits
// into a K-dual left part and an L-dual right part.  Returns the two
// component verdicts (runtime-asserted both true).  Preconditions: combined
// sequence is a (K(+)L)-frame and `dual` combines to a (K(+)L)-dual of it;
// PreconditionViolation otherwise.
std::pair<bool, bool> super_dual_split(const SuperFramePair& p,
                                       const SuperFramePair& dual,
                                       const Matrix& k, const Matrix& l,
                                       const ToleranceConfig& tol = {});

// Converse direction: componentwise duals combine to a (K(+)L)-dual exactly
// when the cross terms vanish (T2 theta1d = 0 and T1 theta2d = 0, theta*d the
// analysis maps of the dual components).  Returns the combined-dual verdict;
// runtime-asserts it equals the cross-term predicate.  Preconditions: the
// componentwise dual relations hold; PreconditionViolation otherwise.
bool dual_combination_equivalence(const SuperFramePair& p,
                                  const SuperFramePair& dual, const Matrix& k,
                                  const Matrix& l,
                                  const ToleranceConfig& tol = {});

// Is {x_n (+) y_n} a (K(+)L)-orthonormal basis?  On a positive verdict the
// structure theory is runtime-asserted: with K, L both nonzero the unique
// dual is {K* x_n (+) L* y_n} and each component is a non-minimal K-frame
// (resp. L-frame) with {K* x_n} (resp. {L* y_n}) a dual of it; with K = 0 all
// x_n vanish and {y_n} is an L-orthonormal basis (symmetrically for L = 0).
bool is_super_onb(const SuperFramePair& p, const Matrix& k, const Matrix& l,
                  const ToleranceConfig& tol = {});

// Given a (K(+)L)-orthonormal basis, decides whether the canonical dual
// {K* x_n (+) L* y_n} is a (K*(+)L*)-orthonormal basis.  Runtime-asserts the
// equivalence with [is_coisometry(K) and is_coisometry(L)], plus, on a
// positive verdict: the combined sequence is an orthonormal basis, both
// components are Parseval frames, rank(T1*) + rank(T2*) = M, and the analysis
// ranges are orthogonal.  Throws PreconditionViolation when the input is not
// a (K(+)L)-orthonormal basis.
bool onb_dual_is_onb(const SuperFramePair& p, const Matrix& k, const Matrix& l,
                     const ToleranceConfig& tol = {});

}  // namespace framekit
