#include "framekit/superframe.hpp"

#include <algorithm>
#include <cmath>

namespace framekit {

namespace {

void check_pair_ops(const SuperFramePair& p, const Matrix& k, const Matrix& l,
                    const char* who) {
  if (k.rows() != k.cols() || k.rows() != p.left.dim())
    throw DimensionMismatch(std::string(who) +
                            ": K must be square of the left dimension");
  if (l.rows() != l.cols() || l.rows() != p.right.dim())
    throw DimensionMismatch(std::string(who) +
                            ": L must be square of the right dimension");
}

bool zero_op(const Matrix& m, const ToleranceConfig& tol) {
  return operator_norm(m) <= tol.residual_rel;
}

// T2 * theta1 = 0: the analysis ranges of the components are orthogonal.
bool analysis_ranges_orthogonal(const SuperFramePair& p,
                                const ToleranceConfig& tol) {
  const Matrix t1 = synthesis(p.left);
  const Matrix t2 = synthesis(p.right);
  const double scale =
      detail::scale_floor({operator_norm(t1) * operator_norm(t2)});
  return operator_norm(t2 * t1.adjoint()) <= tol.residual_rel * scale;
}

double finite_or(double v, double fallback) {
  return std::isfinite(v) ? v : fallback;
}

}  // namespace

SuperFramePair::SuperFramePair(FrameSequence l, FrameSequence r)
    : left(std::move(l)), right(std::move(r)) {
  if (left.count() != right.count())
    throw DimensionMismatch("SuperFramePair: components must share one index set");
}

FrameSequence combine(const SuperFramePair& p) {
  Matrix stacked(p.left.dim() + p.right.dim(), p.count());
  stacked.topRows(p.left.dim()) = p.left.vectors;
  stacked.bottomRows(p.right.dim()) = p.right.vectors;
  return FrameSequence(std::move(stacked));
}

SuperFramePair split(const FrameSequence& f, Eigen::Index d1, Eigen::Index d2) {
  if (d1 < 1 || d2 < 1 || f.dim() != d1 + d2)
    throw DimensionMismatch("split: declared summands do not match the dimension");
  return SuperFramePair(FrameSequence(Matrix(f.vectors.topRows(d1))),
                        FrameSequence(Matrix(f.vectors.bottomRows(d2))));
}

bool super_bessel_check(const SuperFramePair& p, const ToleranceConfig& tol) {
  const double b1 = frame_bounds(p.left, tol).upper;
  const double b2 = frame_bounds(p.right, tol).upper;
  const double bc = frame_bounds(combine(p), tol).upper;
  const double slack = tol.residual_rel * detail::scale_floor({b1, b2, bc});
  // combined optimal bound sits between max(B1, B2) and 2 max(B1, B2)
  return bc <= 2.0 * std::max(b1, b2) + slack &&
         std::max(b1, b2) <= bc + slack;
}

bool frame_operator_identity(const SuperFramePair& p,
                             const ToleranceConfig& tol) {
  const Eigen::Index d1 = p.left.dim();
  const Eigen::Index d2 = p.right.dim();
  const FrameSequence comb = combine(p);
  const Matrix t = synthesis(comb);
  const Matrix t1 = synthesis(p.left);
  const Matrix t2 = synthesis(p.right);
  const Matrix th1 = analysis(p.left);
  const Matrix th2 = analysis(p.right);

  const double nt = detail::scale_floor({operator_norm(t)});
  const double tolr = tol.residual_rel;

  // synthesis stacks
  bool ok = operator_norm(Matrix(t.topRows(d1)) - t1) <= tolr * nt &&
            operator_norm(Matrix(t.bottomRows(d2)) - t2) <= tolr * nt;

  // analysis concatenates
  const Matrix th = analysis(comb);
  ok = ok && operator_norm(Matrix(th.leftCols(d1)) - th1) <= tolr * nt &&
       operator_norm(Matrix(th.rightCols(d2)) - th2) <= tolr * nt;

  // frame operator in blocks: S = [[S1, T1 th2], [T2 th1, S2]]
  const Matrix s = frame_operator(comb);
  const double ns = detail::scale_floor({operator_norm(s)});
  ok = ok &&
       operator_norm(Matrix(s.topLeftCorner(d1, d1)) - frame_operator(p.left)) <=
           tolr * ns &&
       operator_norm(Matrix(s.bottomRightCorner(d2, d2)) -
                     frame_operator(p.right)) <= tolr * ns &&
       operator_norm(Matrix(s.topRightCorner(d1, d2)) - t1 * th2) <= tolr * ns &&
       operator_norm(Matrix(s.bottomLeftCorner(d2, d1)) - t2 * th1) <= tolr * ns;
  return ok;
}

std::pair<bool, bool> necessary_component_check(const FrameSequence& f,
                                                const Matrix& m,
                                                Eigen::Index d1,
                                                Eigen::Index d2,
                                                const ToleranceConfig& tol) {
  const KFrameCertificate cert = is_kframe(f, m, tol);
  if (!cert.verdict)
    throw NotKFrame("necessary_component_check: not an M-frame for the given M");
  const SuperFramePair p = split(f, d1, d2);
  const auto [m1, m2] = block_components(m, d1, d2);
  // With K = 0 the lower inequality is vacuous; A_eff = 0 renders it exactly.
  const double a = finite_or(cert.lower, 0.0);
  const double b = cert.upper;

  const Matrix s1 = frame_operator(p.left);
  const Matrix s2 = frame_operator(p.right);
  const bool left_ok =
      psd_dominance(Matrix(a * (m1 * m1.adjoint())), s1, tol) &&
      psd_dominance(s1, Matrix(b * Matrix::Identity(d1, d1)), tol);
  const bool right_ok =
      psd_dominance(Matrix(a * (m2 * m2.adjoint())), s2, tol) &&
      psd_dominance(s2, Matrix(b * Matrix::Identity(d2, d2)), tol);
  return {left_ok, right_ok};
}

SuperCheckReport is_super_klframe(const SuperFramePair& p, const Matrix& k,
                                  const Matrix& l, const ToleranceConfig& tol) {
  check_pair_ops(p, k, l, "is_super_klframe");
  SuperCheckReport rep;
  rep.tol_used = tol;
  rep.is_bessel = super_bessel_check(p, tol);
  rep.combined = is_kframe(combine(p), direct_sum_map(k, l), tol);
  rep.left_is_kframe = is_kframe(p.left, k, tol).verdict;
  rep.right_is_lframe = is_kframe(p.right, l, tol).verdict;
  rep.is_minimal = is_super_minimal(p, tol);
  rep.disjoint = analysis_ranges_orthogonal(p, tol);
  rep.necessary_ranges = range_condition_necessary(p, k, l, tol);

  if (rep.combined.verdict) {
    detail::require_prop(rep.left_is_kframe && rep.right_is_lframe,
                         "is_super_klframe: positive verdict with a failing "
                         "component certificate");
    detail::require_prop(rep.necessary_ranges.first && rep.necessary_ranges.second,
                         "is_super_klframe: positive verdict with a failing "
                         "necessary range condition");
    if (rep.combined.lower_unconstrained)
      rep.notes.push_back("lower bound unconstrained (zero operator)");
  } else {
    if (!rep.left_is_kframe) rep.notes.push_back("component_kframe[0] failed");
    if (!rep.right_is_lframe) rep.notes.push_back("component_kframe[1] failed");
    if (!rep.necessary_ranges.first)
      rep.notes.push_back("range_condition_necessary[0] failed");
    if (!rep.necessary_ranges.second)
      rep.notes.push_back("range_condition_necessary[1] failed");
  }
  return rep;
}

bool disjointness_sufficient(const SuperFramePair& p, const Matrix& k,
                             const Matrix& l, const ToleranceConfig& tol) {
  check_pair_ops(p, k, l, "disjointness_sufficient");
  const KFrameCertificate cl = is_kframe(p.left, k, tol);
  const KFrameCertificate cr = is_kframe(p.right, l, tol);
  if (!cl.verdict || !cr.verdict)
    throw PreconditionViolation(
        "disjointness_sufficient: components must be K-/L-frames");
  const bool disjoint = analysis_ranges_orthogonal(p, tol);
  if (disjoint) {
    const KFrameCertificate comb =
        is_kframe(combine(p), direct_sum_map(k, l), tol);
    detail::require_prop(comb.verdict,
                         "disjointness_sufficient: disjoint components did not "
                         "combine to a (K(+)L)-frame");
    if (!comb.lower_unconstrained) {
      const double amin = std::min(cl.lower, cr.lower);
      if (std::isfinite(amin))
        detail::require_prop(comb.lower >= amin - 1e-8,
                             "disjointness_sufficient: combined lower bound "
                             "dropped below min(A1, A2)");
    }
  }
  return disjoint;
}

std::pair<bool, bool> range_condition_necessary(const SuperFramePair& p,
                                                const Matrix& k,
                                                const Matrix& l,
                                                const ToleranceConfig& tol) {
  check_pair_ops(p, k, l, "range_condition_necessary");
  const Matrix t1 = synthesis(p.left);
  const Matrix t2 = synthesis(p.right);
  const Matrix t1_on_ker2 = t1 * kernel_basis(t2, tol);
  const Matrix t2_on_ker1 = t2 * kernel_basis(t1, tol);
  return {range_inclusion(k, t1_on_ker2, tol).verdict,
          range_inclusion(l, t2_on_ker1, tol).verdict};
}

bool is_super_minimal(const SuperFramePair& p, const ToleranceConfig& tol) {
  const Matrix t = synthesis(combine(p));
  return numeric_rank(t, tol) == p.count();
}

bool minimality_sufficient(const SuperFramePair& p, const Matrix& k,
                           const Matrix& l, const ToleranceConfig& tol) {
  check_pair_ops(p, k, l, "minimality_sufficient");
  const KFrameCertificate cl = is_kframe(p.left, k, tol);
  const KFrameCertificate cr = is_kframe(p.right, l, tol);
  if (!cl.verdict || !cr.verdict)
    throw PreconditionViolation(
        "minimality_sufficient: components must be K-/L-frames");
  const bool disjoint = analysis_ranges_orthogonal(p, tol);
  const Eigen::Index rank_sum = numeric_rank(analysis(p.left), tol) +
                                numeric_rank(analysis(p.right), tol);
  const bool sufficient = disjoint && rank_sum == p.count();
  if (sufficient) {
    detail::require_prop(
        is_kframe(combine(p), direct_sum_map(k, l), tol).verdict,
        "minimality_sufficient: conditions held but the combined certificate "
        "failed");
    detail::require_prop(is_super_minimal(p, tol),
                         "minimality_sufficient: conditions held but the "
                         "combined synthesis is not injective");
  }
  return sufficient;
}

std::pair<bool, bool> super_dual_split(const SuperFramePair& p,
                                       const SuperFramePair& dual,
                                       const Matrix& k, const Matrix& l,
                                       const ToleranceConfig& tol) {
  check_pair_ops(p, k, l, "super_dual_split");
  if (dual.left.dim() != p.left.dim() || dual.right.dim() != p.right.dim() ||
      dual.count() != p.count())
    throw DimensionMismatch("super_dual_split: dual pair shape mismatch");
  const FrameSequence comb = combine(p);
  const Matrix ksum = direct_sum_map(k, l);
  if (!is_kframe(comb, ksum, tol).verdict)
    throw PreconditionViolation(
        "super_dual_split: combined sequence is not a (K(+)L)-frame");
  if (!verify_kdual(comb, combine(dual), ksum, tol))
    throw PreconditionViolation(
        "super_dual_split: given pair is not a (K(+)L)-dual of the sequence");
  const bool left_ok = verify_kdual(p.left, dual.left, k, tol);
  const bool right_ok = verify_kdual(p.right, dual.right, l, tol);
  detail::require_prop(left_ok && right_ok,
                       "super_dual_split: a combined dual must restrict to "
                       "componentwise duals");
  return {left_ok, right_ok};
}

bool dual_combination_equivalence(const SuperFramePair& p,
                                  const SuperFramePair& dual, const Matrix& k,
                                  const Matrix& l, const ToleranceConfig& tol) {
  check_pair_ops(p, k, l, "dual_combination_equivalence");
  if (!verify_kdual(p.left, dual.left, k, tol) ||
      !verify_kdual(p.right, dual.right, l, tol))
    throw PreconditionViolation(
        "dual_combination_equivalence: componentwise dual relations must hold");
  const Matrix t1 = synthesis(p.left);
  const Matrix t2 = synthesis(p.right);
  const Matrix th1d = analysis(dual.left);
  const Matrix th2d = analysis(dual.right);
  const double s21 =
      detail::scale_floor({operator_norm(t2) * operator_norm(th1d)});
  const double s12 =
      detail::scale_floor({operator_norm(t1) * operator_norm(th2d)});
  const bool crosses_vanish =
      operator_norm(t2 * th1d) <= tol.residual_rel * s21 &&
      operator_norm(t1 * th2d) <= tol.residual_rel * s12;
  const bool combined_dual =
      verify_kdual(combine(p), combine(dual), direct_sum_map(k, l), tol);
  detail::require_prop(combined_dual == crosses_vanish,
                       "dual_combination_equivalence: combined-dual verdict "
                       "must match the vanishing of the cross terms");
  return combined_dual;
}

bool is_super_onb(const SuperFramePair& p, const Matrix& k, const Matrix& l,
                  const ToleranceConfig& tol) {
  check_pair_ops(p, k, l, "is_super_onb");
  const FrameSequence comb = combine(p);
  const Matrix ksum = direct_sum_map(k, l);
  const bool verdict = is_k_orthonormal_basis(comb, ksum, tol);
  if (!verdict) return false;

  const bool zk = zero_op(k, tol);
  const bool zl = zero_op(l, tol);
  if (!zk && !zl) {
    // unique dual is {K* x_n (+) L* y_n}; components are non-minimal
    // K-/L-frames admitting {K* x_n} / {L* y_n} as duals
    const SuperFramePair dual(FrameSequence(Matrix(k.adjoint() * p.left.vectors)),
                              FrameSequence(Matrix(l.adjoint() * p.right.vectors)));
    detail::require_prop(verify_kdual(comb, combine(dual), ksum, tol),
                         "is_super_onb: canonical dual identity failed");
    detail::require_prop(is_k_minimal(comb, ksum, tol),
                         "is_super_onb: orthonormal combined sequence must "
                         "have injective synthesis");
    detail::require_prop(is_kframe(p.left, k, tol).verdict &&
                             !is_k_minimal(p.left, k, tol),
                         "is_super_onb: left component must be a non-minimal "
                         "K-frame");
    detail::require_prop(is_kframe(p.right, l, tol).verdict &&
                             !is_k_minimal(p.right, l, tol),
                         "is_super_onb: right component must be a non-minimal "
                         "L-frame");
    detail::require_prop(verify_kdual(p.left, dual.left, k, tol) &&
                             verify_kdual(p.right, dual.right, l, tol),
                         "is_super_onb: componentwise dual identities failed");
  } else if (zk != zl) {
    const FrameSequence& zero_side = zk ? p.left : p.right;
    const FrameSequence& live_side = zk ? p.right : p.left;
    const Matrix& live_op = zk ? l : k;
    detail::require_prop(
        operator_norm(zero_side.vectors) <= tol.residual_rel,
        "is_super_onb: zero operator forces the matching component to vanish");
    detail::require_prop(is_k_orthonormal_basis(live_side, live_op, tol),
                         "is_super_onb: live component must itself be an "
                         "orthonormal basis for its operator");
  } else {
    // both zero: would need an orthonormal family with vanishing frame
    // operator, impossible for count >= 1
    detail::require_prop(false,
                         "is_super_onb: positive verdict with K = L = 0 is "
                         "impossible for a nonempty sequence");
  }
  return verdict;
}

bool onb_dual_is_onb(const SuperFramePair& p, const Matrix& k, const Matrix& l,
                     const ToleranceConfig& tol) {
  if (!is_super_onb(p, k, l, tol))
    throw PreconditionViolation(
        "onb_dual_is_onb: input is not a (K(+)L)-orthonormal basis");
  const SuperFramePair dual(FrameSequence(Matrix(k.adjoint() * p.left.vectors)),
                            FrameSequence(Matrix(l.adjoint() * p.right.vectors)));
  const Matrix ksum_adj = direct_sum_map(Matrix(k.adjoint()), Matrix(l.adjoint()));
  const bool verdict = is_k_orthonormal_basis(combine(dual), ksum_adj, tol);
  const bool co = is_coisometry(k, tol) && is_coisometry(l, tol);
  detail::require_prop(verdict == co,
                       "onb_dual_is_onb: dual orthonormality must be "
                       "equivalent to componentwise co-isometry");
  if (verdict) {
    // complete picture: combined is an orthonormal basis, components are
    // Parseval frames, analysis ranks complement and ranges are orthogonal
    const FrameSequence comb = combine(p);
    const Eigen::Index d = comb.dim();
    detail::require_prop(comb.count() == d,
                         "onb_dual_is_onb: co-isometric case must have a "
                         "complete combined system");
    detail::require_prop(frame_bounds(comb, tol).kind == FrameKind::Parseval,
                         "onb_dual_is_onb: combined sequence must be Parseval");
    detail::require_prop(
        frame_bounds(p.left, tol).kind == FrameKind::Parseval &&
            frame_bounds(p.right, tol).kind == FrameKind::Parseval,
        "onb_dual_is_onb: components must be Parseval frames");
    detail::require_prop(numeric_rank(analysis(p.left), tol) +
                                 numeric_rank(analysis(p.right), tol) ==
                             comb.count(),
                         "onb_dual_is_onb: analysis ranks must sum to the count");
    detail::require_prop(analysis_ranges_orthogonal(p, tol),
                         "onb_dual_is_onb: analysis ranges must be orthogonal");
  }
  return verdict;
}

}  // namespace framekit
