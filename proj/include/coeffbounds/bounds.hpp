#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "coeffbounds/caratheodory.hpp"
#include "coeffbounds/omega.hpp"
#include "coeffbounds/types.hpp"

namespace coeffbounds {

/// The four close-to-convex classes, named by their starlike generator g:
/// F1 z/(1-z), F2 z/(1-z^2), F3 z/(1-z+z^2), F4 z/(1-z)^2.
enum class ClassName { F1, F2, F3, F4 };

std::string_view to_string(ClassName c);

/// Throws ConfigError for anything other than "F1".."F4".
ClassName parse_class(std::string_view s);

struct ClassSpec {
  ClassName name = ClassName::F1;
  GeneratorCoeffs<double> b;
  std::string generator_label;
};

const ClassSpec& class_spec(ClassName c);
const std::array<ClassSpec, 4>& all_classes();

/// delta2..delta5 written directly in the generator and Caratheodory coefficients.
template <class Scalar>
InverseCoeffs<Scalar> delta_from_bc(const GeneratorCoeffs<Scalar>& b, const CaratheodoryCoeffs<Scalar>& c) {
  using S = Scalar;
  const S &b2 = b.b2, &b3 = b.b3, &b4 = b.b4, &b5 = b.b5;
  const S &c1 = c.c1, &c2 = c.c2, &c3 = c.c3, &c4 = c.c4;
  const S b2s = b2 * b2, c1s = c1 * c1;
  InverseCoeffs<S> d;
  d.delta2 = -(b2 + c1) / S(2);
  d.delta3 = (S(3) * b2s + S(3) * c1s + S(4) * b2 * c1 - S(2) * b3 - S(2) * c2) / S(6);
  d.delta4 = (S(20) * b2 * b3 - S(25) * b2s * c1 + S(14) * b2 * c2 + S(14) * c1 * b3 -
              S(25) * b2 * c1s + S(20) * c1 * c2 - S(15) * b2s * b2 - S(15) * c1s * c1 -
              S(6) * b4 - S(6) * c3) /
             S(24);
  d.delta5 = S(7) / S(8) * b2s * b2s - S(7) / S(4) * b2s * b3 + b3 * b3 / S(3) +
             S(3) / S(4) * b4 * b2 - b5 / S(5) + S(7) / S(4) * b2s * b2 * c1 -
             S(25) / S(12) * b2 * b3 * c1 + S(11) / S(20) * b4 * c1 +
             S(25) / S(12) * b2s * c1s - b3 * c1s + S(7) / S(4) * b2 * c1s * c1 +
             S(7) / S(8) * c1s * c1s - b2s * c2 + S(7) / S(15) * b3 * c2 -
             S(25) / S(12) * b2 * c1 * c2 - S(7) / S(4) * c1s * c2 + c2 * c2 / S(3) +
             S(11) / S(20) * b2 * c3 + S(3) / S(4) * c1 * c3 - c4 / S(5);
  return d;
}

InverseCoeffs<> delta_from_bc(const ClassSpec& spec, const CaratheodoryCoeffs<>& c);

/// True where the bound assumes a2 real, i.e. zeta1 real: n >= 4, and F2 from n = 3.
bool requires_real_zeta1(ClassName c, int n);

/// |delta_n| at the function with Schur parameters z.
/// Throws ConstraintError if zeta1 must be real and is not, DomainError for n outside 2..5.
double delta_objective(const ClassSpec& spec, int n, const SchurParams& z);

struct PublishedBound {
  double value = 0;  // upper bound
  double lower = 0;  // value attained by a known extremal; equals value when sharp
  bool sharp = true;
};

PublishedBound published_bound(ClassName c, int n);

enum class CaseFunction { phi1, phi2_t2, phi3, phi4, theta_f1, theta_f3, theta_f4, Q, G };

std::string_view to_string(CaseFunction f);

/// p = |c1|, q = cos arg c1, r = |zeta2|, d = cos arg zeta2, q3 = |zeta3|.
struct CaseFunctionArgs {
  double p = 0;      // [0, 2]
  double q = 0;      // [-1, 1]
  double r = 0;      // [0, 1]
  double d = 0;      // [-1, 1]
  double zeta1 = 0;  // [-1, 1]
  double q3 = 0;     // [0, 1]
  double x = 0;      // [-1, 1]
};

/// phi1, phi3, phi4 read (p, q); phi2_t2 reads (zeta1, r); the theta
/// functions read x; Q reads (zeta1, r, d); G reads (zeta1, r, q3).
/// Throws DomainError when any field is outside its range.
double case_function(CaseFunction f, const CaseFunctionArgs& args);

/// 24 delta4 = -12 (1 - x^2) [A + B zeta2 + C zeta2^2 + (1 - |zeta2|^2) zeta3]
/// for real zeta1 = x in (-1, 1); M = 1.
OmegaInput delta4_psi_params(const ClassSpec& spec, double x);

/// sup over zeta2, zeta3 of |delta4| at zeta1 = x, via Omega; exact at x = +-1.
double delta4_reduced(const ClassSpec& spec, double x);

/// delta5 = A4 / 5 + weight B3 + rho + varsigma for F1, F3, F4, where
/// A4 = c1^4 - 3c1^2 c2 + c2^2 + 2c1 c3 - c4 and B3 = c3 - 2c1 c2 + c1^3.
struct Delta5Split {
  Complex a4, b3, rho, varsigma;
  double weight = 0;

  Complex total() const { return a4 / 5.0 + weight * b3 + rho + varsigma; }
};

/// Throws DomainError for F2, which has no such split.
Delta5Split delta5_split(ClassName c, const CaratheodoryCoeffs<>& coeffs);

/// varsigma(c1, c2) rewritten in zeta1 = x real and zeta2.
Complex varsigma_schur(ClassName c, double x, Complex zeta2);

/// Majorant of |rho| over the Caratheodory class: 19/8, 559/120, 31/3.
double rho_bound(ClassName c);

/// F2: delta5 = g1 + g2 zeta3 + g3 zeta3^2 + g4 zeta4 at real zeta1.
struct F2Gammas {
  Complex g1, g2, g3;
  double g4 = 0;
};

F2Gammas f2_gammas(double zeta1, Complex zeta2, Complex zeta3);

}  // namespace coeffbounds
