#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Core>

#include "coeffbounds/config.hpp"
#include "coeffbounds/types.hpp"

namespace coeffbounds {

/// Schur parameters (zeta1..zeta4) in the closed unit disk.
struct SchurParams {
  Complex zeta1{}, zeta2{}, zeta3{}, zeta4{};
  bool real_zeta1 = false;
};

/// Throws DomainError if some |zeta_i| > 1 or a flagged zeta1 is not real.
void validate(const SchurParams& z, const Tolerances& tol = kTolerances);

/// c1..c4 of the Caratheodory function with the given Schur parameters.
CaratheodoryCoeffs<> coeffs_from_schur(const SchurParams& z);

/// The fourth coefficient alone; the signature matches C4Formula.
Complex c4_from_schur(const SchurParams& z);

/// Triangular inverse of coeffs_from_schur. Once 1 - |zeta_k|^2 falls below
/// tol.schur_boundary, zeta_k is put on the circle and later parameters are 0.
SchurParams schur_from_coeffs(const CaratheodoryCoeffs<>& c, const Tolerances& tol = kTolerances);

enum class ExtremalFamily { P, H };

/// P_{t,theta}(z) = t (1+e^{i theta} z)/(1-e^{i theta} z) + (1-t) (1+e^{2i theta} z^2)/(1-e^{2i theta} z^2)
/// H_{t,beta}(z)  = (1-2t) (1+z)/(1-z) + t (1+beta z)/(1-beta z) + t (1+conj(beta) z)/(1-conj(beta) z)
struct ExtremalParams {
  ExtremalFamily family = ExtremalFamily::P;
  double t = 1.0;
  double theta = 0.0;     // P only
  Complex beta{1.0, 0.0};  // H only

  static ExtremalParams p_family(double t, double theta) {
    return {ExtremalFamily::P, t, theta, Complex{1.0, 0.0}};
  }
  static ExtremalParams h_family(double t, Complex beta) {
    return {ExtremalFamily::H, t, 0.0, beta};
  }
};

void validate(const ExtremalParams& e);

CaratheodoryCoeffs<> coeffs_from_extremal(const ExtremalParams& e);

/// Direct evaluation of the extremal function at |z| < 1.
Complex evaluate_extremal(const ExtremalParams& e, Complex z);

/// (k+1)x(k+1) Hermitian Toeplitz matrix with diagonal 2 and c1..ck above it.
Eigen::MatrixXcd toeplitz_matrix(const CaratheodoryCoeffs<>& c, int k);

/// Determinants D_1..D_4.
std::array<double, 4> toeplitz_validity(const CaratheodoryCoeffs<>& c);

bool toeplitz_certified(const std::array<double, 4>& d, const Tolerances& tol = kTolerances);

/// Slack (bound minus modulus) of each classical coefficient inequality.
/// Negative slack means the inequality is violated.
struct CoefficientSlacks {
  std::array<double, 4> modulus{};  // 2 - |c_n|
  double second_order = 0;          // 2 - |c1|^2/2 - |c2 - c1^2/2|
  double third_order = 0;           // 2 - |c3 - 2 c1 c2 + c1^3|
  double fourth_order = 0;          // 2 - |c1^4 - 3c1^2 c2 + c2^2 + 2c1 c3 - c4|

  double worst() const;
};

CoefficientSlacks coefficient_slacks(const CaratheodoryCoeffs<>& c);

/// The quantities in M c4 = A + B zeta4, computed from c1..c3 and from zeta.
struct C4IdentityTerms {
  Complex a_from_coeffs, a_from_schur;
  Complex b_from_coeffs;
  double b_from_schur = 0;
  Complex m_from_coeffs;
  double m_from_schur = 0;
  Complex c4;
};

using C4Formula = std::function<Complex(const SchurParams&)>;

/// Throws DegenerateCaseError when |zeta1| = 1 or |zeta2| = 1.
C4IdentityTerms c4_identity_terms(const SchurParams& z, const C4Formula& c4 = c4_from_schur,
                                  const Tolerances& tol = kTolerances);

/// max of the coefficient-vs-Schur discrepancies plus |M c4 - A - B zeta4|.
double verify_c4_identity(const SchurParams& z, const C4Formula& c4 = c4_from_schur,
                          const Tolerances& tol = kTolerances);

/// Sample `index` of the stream for `seed`; uniform on the disk per parameter,
/// zeta1 uniform on [-1, 1] when real_zeta1.
SchurParams sample_schur_at(std::uint64_t seed, std::uint64_t index, bool real_zeta1);

std::vector<SchurParams> sample_schur(std::uint64_t seed, std::size_t count, bool real_zeta1);

}  // namespace coeffbounds
