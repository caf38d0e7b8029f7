#include "coeffbounds/bounds.hpp"

#include <cmath>
#include <string>

#include "coeffbounds/errors.hpp"

namespace coeffbounds {

std::string_view to_string(ClassName c) {
  switch (c) {
    case ClassName::F1: return "F1";
    case ClassName::F2: return "F2";
    case ClassName::F3: return "F3";
    case ClassName::F4: return "F4";
  }
  return "?";
}

ClassName parse_class(std::string_view s) {
  for (const auto& spec : all_classes()) {
    if (to_string(spec.name) == s) return spec.name;
  }
  throw ConfigError("unknown class '" + std::string(s) + "' (expected F1, F2, F3 or F4)");
}

const std::array<ClassSpec, 4>& all_classes() {
  static const std::array<ClassSpec, 4> kClasses = {{
      {ClassName::F1, {1, 1, 1, 1}, "z/(1-z)"},
      {ClassName::F2, {0, 1, 0, 1}, "z/(1-z^2)"},
      {ClassName::F3, {1, 0, -1, -1}, "z/(1-z+z^2)"},
      {ClassName::F4, {2, 3, 4, 5}, "z/(1-z)^2"},
  }};
  return kClasses;
}

const ClassSpec& class_spec(ClassName c) { return all_classes()[static_cast<std::size_t>(c)]; }

InverseCoeffs<> delta_from_bc(const ClassSpec& spec, const CaratheodoryCoeffs<>& c) {
  const GeneratorCoeffs<Complex> b{spec.b.b2, spec.b.b3, spec.b.b4, spec.b.b5};
  return delta_from_bc(b, c);
}

bool requires_real_zeta1(ClassName c, int n) { return n >= 4 || (c == ClassName::F2 && n == 3); }

double delta_objective(const ClassSpec& spec, int n, const SchurParams& z) {
  if (n < 2 || n > 5) throw DomainError("n must be in 2..5, got " + std::to_string(n));
  if (requires_real_zeta1(spec.name, n) && z.zeta1.imag() != 0.0) {
    throw ConstraintError(std::string(to_string(spec.name)) + " delta" + std::to_string(n) +
                          " is bounded for real zeta1 only");
  }
  return std::abs(delta_from_bc(spec, coeffs_from_schur(z))[n]);
}

PublishedBound published_bound(ClassName c, int n) {
  if (n < 2 || n > 5) throw DomainError("n must be in 2..5, got " + std::to_string(n));
  static const double kTable[4][4] = {
      {3.0 / 2, 17.0 / 6, 49.0 / 8, 1729.0 / 120},
      {1.0, 1.0, 16.0 / (3.0 * std::sqrt(15.0)), 2.947584},
      {3.0 / 2, 19.0 / 6, 61.0 / 8, 2371.0 / 120},
      {2.0, 5.0, 14.0, 42.0},
  };
  const double v = kTable[static_cast<int>(c)][n - 2];
  if (c == ClassName::F2 && n == 5) return {v, 791.0 / 392, false};
  return {v, v, true};
}

std::string_view to_string(CaseFunction f) {
  switch (f) {
    case CaseFunction::phi1: return "phi1";
    case CaseFunction::phi2_t2: return "phi2_t2";
    case CaseFunction::phi3: return "phi3";
    case CaseFunction::phi4: return "phi4";
    case CaseFunction::theta_f1: return "theta_f1";
    case CaseFunction::theta_f3: return "theta_f3";
    case CaseFunction::theta_f4: return "theta_f4";
    case CaseFunction::Q: return "Q";
    case CaseFunction::G: return "G";
  }
  return "?";
}

namespace {

void check_range(double v, double lo, double hi, const char* name) {
  if (!(v >= lo && v <= hi)) {
    throw DomainError(std::string("case function argument ") + name + " = " + std::to_string(v) +
                      " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

double q_poly(double z, double r, double d) {
  const double z2 = z * z, z4 = z2 * z2, z6 = z4 * z2, z8 = z4 * z4;
  const double r2 = r * r, r3 = r2 * r, r4 = r2 * r2, r5 = r4 * r, r6 = r3 * r3;
  const double d2 = d * d, d3 = d2 * d;
  return 944.0 / 75 * d3 * r3 * z8 - 112.0 / 5 * d3 * r3 * z6 + 256.0 / 25 * d3 * r3 * z4 -
         32.0 / 75 * d3 * r3 * z2 + 784.0 / 75 * d2 * r4 * z8 - 112.0 / 5 * d2 * r4 * z6 +
         336.0 / 25 * d2 * r4 * z4 - 112.0 / 75 * d2 * r4 * z2 + 11092.0 / 225 * d2 * r2 * z8 -
         23044.0 / 225 * d2 * r2 * z6 + 1656.0 / 25 * d2 * r2 * z4 - 3064.0 / 225 * d2 * r2 * z2 +
         112.0 / 225 * d2 * r2 + 188.0 / 75 * d * r5 * z8 - 144.0 / 25 * d * r5 * z6 +
         4.0 * d * r5 * z4 - 56.0 / 75 * d * r5 * z2 + 7088.0 / 225 * d * r3 * z8 -
         18704.0 / 225 * d * r3 * z6 + 5332.0 / 75 * d * r3 * z4 - 4772.0 / 225 * d * r3 * z2 +
         392.0 / 225 * d * r3 + 11564.0 / 225 * d * r * z8 - 22232.0 / 225 * d * r * z6 +
         1372.0 / 25 * d * r * z4 - 1736.0 / 225 * d * r * z2 + 56.0 / 225 * d * r +
         4.0 / 25 * r6 * z8 - 8.0 / 25 * r6 * z6 + 4.0 / 25 * r6 * z4 + 1033.0 / 225 * r4 * z8 -
         3214.0 / 225 * r4 * z6 + 47.0 / 3 * r4 * z4 - 308.0 / 45 * r4 * z2 + 196.0 / 225 * r4 +
         4058.0 / 225 * r2 * z8 - 2086.0 / 45 * r2 * z6 + 2612.0 / 75 * r2 * z4 -
         1604.0 / 225 * r2 * z2 + 28.0 / 45 * r2 + 3481.0 / 225 * z8 - 5428.0 / 225 * z6 +
         784.0 / 75 * z4 - 184.0 / 225 * z2 + 4.0 / 225;
}

// |gamma2| is maximal over arg zeta2 when zeta2 = r sign(zeta1).
double g_function(double z, double r, double q3) {
  const double w = (1 - z * z) * (1 - r * r);
  return w * (std::abs(z) * (11.0 / 5 + 4.0 * r / 5) * q3 + 2.0 / 5 * r * q3 * q3 +
              2.0 / 5 * (1 - q3 * q3));
}

}  // namespace

double case_function(CaseFunction f, const CaseFunctionArgs& a) {
  check_range(a.p, 0, 2, "p");
  check_range(a.q, -1, 1, "q");
  check_range(a.r, 0, 1, "r");
  check_range(a.d, -1, 1, "d");
  check_range(a.zeta1, -1, 1, "zeta1");
  check_range(a.q3, 0, 1, "q3");
  check_range(a.x, -1, 1, "x");

  const double p = a.p, q = a.q, x = a.x;
  const double p2 = p * p, sq = 1 - q * q;
  switch (f) {
    case CaseFunction::phi1:
      return 2 - p2 / 2 + std::sqrt(std::pow(p2 + 0.5 + 2 * p * q, 2) + 2 * p2 * sq);
    case CaseFunction::phi2_t2:
      return std::abs(8 * a.zeta1 * a.zeta1 - 2) + 4 * (1 - a.zeta1 * a.zeta1) * a.r;
    case CaseFunction::phi3:
      return 2 - p2 / 2 + std::sqrt(std::pow(p2 + 1.5 + 2 * p * q, 2) - 2 * p2 * sq);
    case CaseFunction::phi4:
      return 2 - p2 / 2 + std::sqrt(std::pow(p2 + 3 + 4 * p * q, 2) + 4 * p2 * sq);
    case CaseFunction::theta_f1:
      return -38.0 / 5 * std::pow(x, 4) + 26.0 / 15 * x * x * x + 57.0 / 5 * x * x + 59.0 / 15 * x +
             16.0 / 15;
    case CaseFunction::theta_f3:
      return -38.0 / 5 * std::pow(x, 4) + 26.0 / 15 * x * x * x + 203.0 / 15 * x * x +
             59.0 / 15 * x + 2;
    case CaseFunction::theta_f4:
      return 2.0 / 15 * (-57 * std::pow(x, 4) + 26 * x * x * x + 151 * x * x + 59 * x + 39);
    case CaseFunction::Q:
      return q_poly(a.zeta1, a.r, a.d);
    case CaseFunction::G:
      return g_function(a.zeta1, a.r, a.q3);
  }
  throw DomainError("unknown case function");
}

namespace {

double delta4_constant(const GeneratorCoeffs<double>& b, double x) {
  return 20 * b.b2 * b.b3 - 15 * b.b2 * b.b2 * b.b2 - 6 * b.b4 + (28 * b.b3 - 50 * b.b2 * b.b2) * x -
         72 * b.b2 * x * x - 52 * x * x * x;
}

}  // namespace

OmegaInput delta4_psi_params(const ClassSpec& spec, double x) {
  if (!(std::abs(x) < 1)) throw DomainError("delta4_psi_params needs zeta1 in (-1, 1)");
  OmegaInput in;
  in.a = -delta4_constant(spec.b, x) / (12 * (1 - x * x));
  in.b = -7.0 / 3 * (spec.b.b2 + 2 * x);
  in.c = -x;
  in.m = 1;
  return in;
}

double delta4_reduced(const ClassSpec& spec, double x) {
  check_range(x, -1, 1, "zeta1");
  if (std::abs(x) == 1) return std::abs(delta4_constant(spec.b, x)) / 24;
  return (1 - x * x) / 2 * omega_closed_form(delta4_psi_params(spec, x)).value;
}

namespace {

struct SplitWeights {
  double rho0, rho1;   // rho = rho0 + rho1 c1 + 2/15 c2^2 + 7/20 c1 c3
  double s_lead;       // varsigma = s_lead (s_ratio c1^2 - c2) + ...
  double s_ratio;
  double s_mid;        //   + s_mid c1 (72/59 c1^2 - c2) + 23/20 c1^2 (27/46 c1^2 - c2)
  double b3_weight;
  double rho_max;
  // varsigma at c1 = 2x, c2 = 2x^2 + 2(1-x^2) zeta2:
  //   scale [ (a2 x^2 + a3 x^3 + a4 x^4) - (1 - x^2)(k0 + k1 x + k2 x^2) zeta2 ]
  double scale;
  std::array<double, 3> a, k;
};

const SplitWeights& split_weights(ClassName c) {
  static const SplitWeights kF1{1.0 / 120, 13.0 / 60, 8.0 / 15, 65.0 / 32, 59.0 / 60, 11.0 / 20,
                                19.0 / 8,  1.0 / 15,  {49, 85, 24},        {16, 59, 138}};
  static const SplitWeights kF3{13.0 / 40, 6.0 / 5,   1.0,         25.0 / 12,    59.0 / 60, 11.0 / 20,
                                559.0 / 120, 1.0 / 15, {95, 85, 24}, {30, 59, 138}};
  static const SplitWeights kF4{1.0,  37.0 / 10, 13.0 / 5,      80.0 / 39,    59.0 / 30, 11.0 / 10,
                                31.0 / 3, 2.0 / 15, {121, 85, 12}, {39, 59, 69}};
  switch (c) {
    case ClassName::F1: return kF1;
    case ClassName::F3: return kF3;
    case ClassName::F4: return kF4;
    case ClassName::F2: break;
  }
  throw DomainError("F2 has no delta5 split");
}

}  // namespace

Delta5Split delta5_split(ClassName c, const CaratheodoryCoeffs<>& k) {
  const SplitWeights& w = split_weights(c);
  const Complex c1 = k.c1, c2 = k.c2, c3 = k.c3, c4 = k.c4;
  const Complex c1s = c1 * c1;
  Delta5Split s;
  s.a4 = c1s * c1s - 3.0 * c1s * c2 + c2 * c2 + 2.0 * c1 * c3 - c4;
  s.b3 = c3 - 2.0 * c1 * c2 + c1s * c1;
  s.rho = w.rho0 + w.rho1 * c1 + 2.0 / 15 * c2 * c2 + 7.0 / 20 * c1 * c3;
  s.varsigma = w.s_lead * (w.s_ratio * c1s - c2) + w.s_mid * c1 * (72.0 / 59 * c1s - c2) +
               23.0 / 20 * c1s * (27.0 / 46 * c1s - c2);
  s.weight = w.b3_weight;
  return s;
}

Complex varsigma_schur(ClassName c, double x, Complex zeta2) {
  const SplitWeights& w = split_weights(c);
  const double x2 = x * x;
  const double lead = x2 * (w.a[0] + w.a[1] * x + w.a[2] * x2);
  const double slope = (1 - x2) * (w.k[0] + w.k[1] * x + w.k[2] * x2);
  return w.scale * (lead - slope * zeta2);
}

double rho_bound(ClassName c) { return split_weights(c).rho_max; }

F2Gammas f2_gammas(double x, Complex z2, Complex z3) {
  const double x2 = x * x, s1 = 1 - x2, s2 = 1 - std::norm(z2), s3 = 1 - std::norm(z3);
  F2Gammas g;
  g.g1 = 2.0 / 15 - 46.0 / 15 * x2 + 59.0 / 15 * x2 * x2 + 14.0 / 15 * s1 * z2 -
         98.0 / 15 * x2 * z2 * s1 - 11.0 / 5 * x2 * z2 * z2 * s1 - 2.0 / 5 * x2 * z2 * z2 * z2 * s1 +
         14.0 / 15 * z2 * z2 * s1 * s1;
  g.g2 = 11.0 / 5 * x * s1 * s2 + 4.0 / 5 * x * z2 * s1 * s2;
  g.g3 = 2.0 / 5 * s1 * s2 * std::conj(z2);
  g.g4 = -2.0 / 5 * s1 * s2 * s3;
  return g;
}

}  // namespace coeffbounds
