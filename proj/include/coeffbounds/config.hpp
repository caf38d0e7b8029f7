#pragma once

namespace coeffbounds {

/// Numerical tolerances shared by the checks. All absolute unless noted.
struct Tolerances {
  double disk_slack = 1e-12;       // |zeta| <= 1 + disk_slack is accepted
  double schur_boundary = 1e-12;   // 1 - |zeta|^2 below this counts as boundary
  double toeplitz = 1e-9;          // D_k >= -toeplitz certifies membership
  double inequality_slack = 1e-9;  // coefficient inequalities
  double c4_identity = 1e-9;
  double omega = 1e-6;             // closed form vs oracle
  double two_path = 1e-12;         // relative, delta agreement
  double bound = 1e-8;             // searched max may exceed a proven bound by this
};

inline constexpr Tolerances kTolerances{};

}  // namespace coeffbounds
