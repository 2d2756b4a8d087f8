#pragma once

namespace framekit {

// Every numeric decision in the library goes through one of these three knobs.
//
//   rank_rel     : singular values below rank_rel * sigma_max are treated as zero
//                  (rank, range/kernel bases, pseudoinverse truncation)
//   psd_rel      : eigenvalues of a difference B - A above -psd_rel * scale count
//                  as nonnegative, scale = max(|A|, |B|, 1)
//   residual_rel : residual norms below residual_rel * scale count as exact
//                  equality (reconstruction identities, adjoint checks, ...)
//
// All thresholds are relative; the implied absolute floor is the corresponding
// *_rel value itself (scale is clamped below by 1).
struct ToleranceConfig {
  double rank_rel = 1e-9;
  double psd_rel = 1e-9;
  double residual_rel = 1e-9;
};

}  // namespace framekit
