#pragma once

// Slow reference implementations used only by the tests: summation-loop
// versions of the canonical operators, a bisection solver for the least
// dominance constant, and a Rayleigh-quotient sampler for the optimal lower
// bound.  Deliberately written with different arithmetic than the library.

#include <cmath>
#include <limits>

#include "framekit/generators.hpp"
#include "framekit/hilbert.hpp"
#include "framekit/kframe.hpp"

namespace oracles {

using framekit::Complex;
using framekit::FrameSequence;
using framekit::Matrix;
using framekit::Rng;
using framekit::Vector;

inline Matrix naive_frame_operator(const FrameSequence& f) {
  Matrix s = Matrix::Zero(f.dim(), f.dim());
  for (Eigen::Index n = 0; n < f.count(); ++n) s += f.at(n) * f.at(n).adjoint();
  return s;
}

inline Vector naive_analysis(const FrameSequence& f, const Vector& x) {
  Vector c(f.count());
  for (Eigen::Index n = 0; n < f.count(); ++n) c(n) = framekit::inner(x, f.at(n));
  return c;
}

inline Vector naive_synthesis(const FrameSequence& f, const Vector& a) {
  Vector x = Vector::Zero(f.dim());
  for (Eigen::Index n = 0; n < f.count(); ++n) x += a(n) * f.at(n);
  return x;
}

// Least c >= 0 with K K* <= c L L*, found by bisection over psd_dominance.
// Returns +infinity when no bracket exists below the cap.
inline double bisect_constant(const Matrix& k, const Matrix& l,
                              const framekit::ToleranceConfig& tol = {}) {
  const Matrix kk = k * k.adjoint();
  const Matrix ll = l * l.adjoint();
  if (framekit::psd_dominance(kk, Matrix(0.0 * ll), tol)) return 0.0;
  double hi = 1.0;
  while (!framekit::psd_dominance(kk, Matrix(hi * ll), tol)) {
    hi *= 2.0;
    if (hi > 1e15) return std::numeric_limits<double>::infinity();
  }
  double lo = hi / 2.0 > 1.0 ? hi / 2.0 : 0.0;
  for (int iter = 0; iter < 80 && hi - lo > 1e-9 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (framekit::psd_dominance(kk, Matrix(mid * ll), tol)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

// Minimum over random unit vectors of sum_n |<x, x_n>|^2 / |K* x|^2.  Never
// smaller than the optimal lower bound; approaches it as samples grow.
inline double sampled_lower_bound(const FrameSequence& f, const Matrix& k,
                                  Rng& rng, int samples) {
  double best = std::numeric_limits<double>::infinity();
  const Matrix ka = k.adjoint();
  for (int i = 0; i < samples; ++i) {
    Vector x(f.dim());
    for (Eigen::Index j = 0; j < f.dim(); ++j) x(j) = rng.next_complex_gaussian();
    const double denom = (ka * x).squaredNorm();
    if (denom < 1e-12 * x.squaredNorm()) continue;
    const double num = naive_analysis(f, x).squaredNorm();
    best = std::min(best, num / denom);
  }
  return best;
}

}  // namespace oracles
