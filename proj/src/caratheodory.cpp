#include "coeffbounds/caratheodory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/LU>

#include "coeffbounds/errors.hpp"
#include "coeffbounds/random.hpp"

namespace coeffbounds {

namespace {

double norm2(Complex z) { return std::norm(z); }

void check_disk(Complex z, const char* name, double slack) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z) > 1.0 + slack) {
    throw DomainError(std::string(name) + " lies outside the closed unit disk");
  }
}

// Pulls a value that drifted past the circle by rounding back onto it.
Complex onto_disk(Complex z) {
  const double r = std::abs(z);
  return r > 1.0 ? z / r : z;
}

}  // namespace

void validate(const SchurParams& z, const Tolerances& tol) {
  check_disk(z.zeta1, "zeta1", tol.disk_slack);
  check_disk(z.zeta2, "zeta2", tol.disk_slack);
  check_disk(z.zeta3, "zeta3", tol.disk_slack);
  check_disk(z.zeta4, "zeta4", tol.disk_slack);
  if (z.real_zeta1 && z.zeta1.imag() != 0.0) throw DomainError("zeta1 flagged real but has an imaginary part");
}

CaratheodoryCoeffs<> coeffs_from_schur(const SchurParams& z) {
  validate(z);
  const Complex z1 = z.zeta1, z2 = z.zeta2, z3 = z.zeta3;
  const double s1 = 1.0 - norm2(z1);
  const double s2 = 1.0 - norm2(z2);
  CaratheodoryCoeffs<> c;
  c.c1 = 2.0 * z1;
  c.c2 = 2.0 * z1 * z1 + 2.0 * s1 * z2;
  c.c3 = 2.0 * z1 * z1 * z1 + 4.0 * s1 * z1 * z2 - 2.0 * s1 * std::conj(z1) * z2 * z2 +
         2.0 * s1 * s2 * z3;
  c.c4 = c4_from_schur(z);
  return c;
}

Complex c4_from_schur(const SchurParams& z) {
  const Complex z1 = z.zeta1, z2 = z.zeta2, z3 = z.zeta3, z4 = z.zeta4;
  const double a1 = norm2(z1);
  const double s1 = 1.0 - a1;
  const double s2 = 1.0 - norm2(z2);
  const double s3 = 1.0 - norm2(z3);
  const Complex z1b = std::conj(z1);
  const Complex half = z1 * z1 * z1 * z1 +
                       s1 * (3.0 * z1 * z1 * z2 - 2.0 * z2 * z2 * a1 + z1b * z1b * z2 * z2 * z2) +
                       z2 * z2 * s1 * s1 +
                       s1 * s2 * (2.0 * z1 * z3 - 2.0 * z1b * z2 * z3 - std::conj(z2) * z3 * z3 + s3 * z4);
  return 2.0 * half;
}

SchurParams schur_from_coeffs(const CaratheodoryCoeffs<>& c, const Tolerances& tol) {
  SchurParams z;
  z.real_zeta1 = c.c1.imag() == 0.0;

  z.zeta1 = onto_disk(c.c1 / 2.0);
  const Complex z1 = z.zeta1;
  const double s1 = 1.0 - norm2(z1);
  if (s1 < tol.schur_boundary) {
    if (std::abs(z1) > 0) z.zeta1 = z1 / std::abs(z1);
    return z;
  }

  z.zeta2 = onto_disk((c.c2 - 2.0 * z1 * z1) / (2.0 * s1));
  const Complex z2 = z.zeta2;
  const double s2 = 1.0 - norm2(z2);
  if (s2 < tol.schur_boundary) {
    z.zeta2 = z2 / std::abs(z2);
    return z;
  }

  const Complex z1b = std::conj(z1);
  z.zeta3 = onto_disk((c.c3 - 2.0 * z1 * z1 * z1 - 4.0 * s1 * z1 * z2 + 2.0 * s1 * z1b * z2 * z2) /
                      (2.0 * s1 * s2));
  const Complex z3 = z.zeta3;
  const double s3 = 1.0 - norm2(z3);
  if (s3 < tol.schur_boundary) {
    z.zeta3 = z3 / std::abs(z3);
    return z;
  }

  const Complex known = z1 * z1 * z1 * z1 +
                        s1 * (3.0 * z1 * z1 * z2 - 2.0 * z2 * z2 * norm2(z1) + z1b * z1b * z2 * z2 * z2) +
                        z2 * z2 * s1 * s1 +
                        s1 * s2 * (2.0 * z1 * z3 - 2.0 * z1b * z2 * z3 - std::conj(z2) * z3 * z3);
  z.zeta4 = onto_disk((c.c4 / 2.0 - known) / (s1 * s2 * s3));
  return z;
}

void validate(const ExtremalParams& e) {
  if (!(e.t >= 0.0)) throw DomainError("extremal parameter t must be >= 0");
  if (e.family == ExtremalFamily::P) {
    if (e.t > 1.0) throw DomainError("P family needs t in [0, 1]");
  } else {
    if (e.t > 0.5) throw DomainError("H family needs t in [0, 1/2]");
    if (std::abs(std::abs(e.beta) - 1.0) > 1e-12) throw DomainError("H family needs |beta| = 1");
  }
}

CaratheodoryCoeffs<> coeffs_from_extremal(const ExtremalParams& e) {
  validate(e);
  std::array<Complex, 4> c{};
  for (int n = 1; n <= 4; ++n) {
    if (e.family == ExtremalFamily::P) {
      // t(1+uz)/(1-uz) = t + 2t sum u^n z^n with u = e^{i theta}; the z^2 term
      // contributes 2(1-t) u^{2m} z^{2m}, so even n collect 2 e^{i n theta}.
      const Complex un = std::polar(1.0, n * e.theta);
      c[n - 1] = 2.0 * e.t * un;
      if (n % 2 == 0) c[n - 1] += 2.0 * (1.0 - e.t) * un;
    } else {
      c[n - 1] = 2.0 * (1.0 - 2.0 * e.t) + 2.0 * e.t * std::pow(e.beta, n) +
                 2.0 * e.t * std::pow(std::conj(e.beta), n);
    }
  }
  return {c[0], c[1], c[2], c[3]};
}

Complex evaluate_extremal(const ExtremalParams& e, Complex z) {
  validate(e);
  auto mobius = [](Complex w) { return (1.0 + w) / (1.0 - w); };
  if (e.family == ExtremalFamily::P) {
    const Complex u = std::polar(1.0, e.theta);
    return e.t * mobius(u * z) + (1.0 - e.t) * mobius(u * u * z * z);
  }
  return (1.0 - 2.0 * e.t) * mobius(z) + e.t * mobius(e.beta * z) + e.t * mobius(std::conj(e.beta) * z);
}

Eigen::MatrixXcd toeplitz_matrix(const CaratheodoryCoeffs<>& c, int k) {
  const std::array<Complex, 5> diag{Complex(2.0), c.c1, c.c2, c.c3, c.c4};
  Eigen::MatrixXcd t(k + 1, k + 1);
  for (int i = 0; i <= k; ++i) {
    for (int j = 0; j <= k; ++j) t(i, j) = j >= i ? diag[j - i] : std::conj(diag[i - j]);
  }
  return t;
}

std::array<double, 4> toeplitz_validity(const CaratheodoryCoeffs<>& c) {
  std::array<double, 4> d{};
  for (int k = 1; k <= 4; ++k) d[k - 1] = toeplitz_matrix(c, k).determinant().real();
  return d;
}

bool toeplitz_certified(const std::array<double, 4>& d, const Tolerances& tol) {
  return std::all_of(d.begin(), d.end(), [&](double v) { return v >= -tol.toeplitz; });
}

double CoefficientSlacks::worst() const {
  double w = std::min({second_order, third_order, fourth_order});
  for (double m : modulus) w = std::min(w, m);
  return w;
}

CoefficientSlacks coefficient_slacks(const CaratheodoryCoeffs<>& c) {
  const Complex c1 = c.c1, c2 = c.c2, c3 = c.c3, c4 = c.c4;
  CoefficientSlacks s;
  s.modulus = {2.0 - std::abs(c1), 2.0 - std::abs(c2), 2.0 - std::abs(c3), 2.0 - std::abs(c4)};
  s.second_order = 2.0 - norm2(c1) / 2.0 - std::abs(c2 - c1 * c1 / 2.0);
  s.third_order = 2.0 - std::abs(c3 - 2.0 * c1 * c2 + c1 * c1 * c1);
  s.fourth_order =
      2.0 - std::abs(c1 * c1 * c1 * c1 - 3.0 * c1 * c1 * c2 + c2 * c2 + 2.0 * c1 * c3 - c4);
  return s;
}

C4IdentityTerms c4_identity_terms(const SchurParams& z, const C4Formula& c4, const Tolerances& tol) {
  validate(z, tol);
  const double s1 = 1.0 - norm2(z.zeta1);
  const double s2 = 1.0 - norm2(z.zeta2);
  if (s1 < tol.schur_boundary || s2 < tol.schur_boundary) {
    throw DegenerateCaseError("c4 identity is trivial for |zeta1| = 1 or |zeta2| = 1");
  }
  const double s3 = 1.0 - norm2(z.zeta3);
  const CaratheodoryCoeffs<> c = coeffs_from_schur(z);
  const Complex c1 = c.c1, c2 = c.c2, c3 = c.c3;
  const Complex d1 = std::conj(c1), d2 = std::conj(c2), d3 = std::conj(c3);
  const double m1 = norm2(c1);

  C4IdentityTerms t;
  t.c4 = c4(z);

  // A = c1 M_2^4 - c2 M_3^4 + c3 M_4^4, expanded.
  t.a_from_coeffs = c1 * c1 * c1 * c1 + 4.0 * c2 * c2 + 8.0 * c1 * c3 - 4.0 * d1 * c2 * c3 -
                    2.0 * m1 * c1 * c3 - 6.0 * c1 * c1 * c2 + 2.0 * m1 * c2 * c2 + d1 * d1 * c3 * c3 -
                    (c2 * c2 * c2 - 2.0 * c1 * c2 * c3 + 2.0 * c3 * c3) * d2;
  // B is the 4x4 Toeplitz determinant D_3.
  t.b_from_coeffs = 16.0 - 12.0 * m1 + m1 * m1 + 4.0 * d1 * d1 * c2 - c3 * d1 * d1 * d1 +
                    (4.0 * c1 * c1 - 2.0 * m1 * c2 - 8.0 * c2 + 4.0 * d1 * c3) * d2 +
                    (c2 * c2 - c1 * c3) * d2 * d2 -
                    (c1 * c1 * c1 - 4.0 * c1 * c2 + 4.0 * c3 + d1 * c2 * c2 - m1 * c3) * d3;
  // M_5^4 is D_2.
  t.m_from_coeffs = 8.0 - 4.0 * m1 + d1 * d1 * c2 + c1 * c1 * d2 - 2.0 * norm2(c2);

  const Complex z1 = z.zeta1, z2 = z.zeta2, z3 = z.zeta3;
  const Complex z1b = std::conj(z1);
  t.a_from_schur = 16.0 * s1 * s1 * s2 *
                   (z2 * z2 * s1 * s1 + z1 * z1 * z1 * z1 +
                    s1 * (3.0 * z1 * z1 * z2 - 2.0 * z2 * z2 * norm2(z1) + z1b * z1b * z2 * z2 * z2) +
                    s1 * s2 * (2.0 * z1 * z3 - 2.0 * z1b * z2 * z3 - std::conj(z2) * z3 * z3));
  t.b_from_schur = 16.0 * s1 * s1 * s1 * s2 * s2 * s3;
  t.m_from_schur = 8.0 * s1 * s1 * s2;
  return t;
}

double verify_c4_identity(const SchurParams& z, const C4Formula& c4, const Tolerances& tol) {
  const C4IdentityTerms t = c4_identity_terms(z, c4, tol);
  const double routes = std::max({std::abs(t.a_from_coeffs - t.a_from_schur),
                                  std::abs(t.b_from_coeffs - t.b_from_schur),
                                  std::abs(t.m_from_coeffs - t.m_from_schur)});
  return routes + std::abs(t.m_from_coeffs * t.c4 - t.a_from_coeffs - t.b_from_coeffs * z.zeta4);
}

SchurParams sample_schur_at(std::uint64_t seed, std::uint64_t index, bool real_zeta1) {
  auto eng = stream_engine(seed, index);
  auto disk = [&eng] {
    const double r = std::sqrt(uniform01(eng));
    const double angle = 2.0 * std::numbers::pi * uniform01(eng);
    return std::polar(r, angle);
  };
  SchurParams z;
  z.real_zeta1 = real_zeta1;
  z.zeta1 = real_zeta1 ? Complex(2.0 * uniform01(eng) - 1.0, 0.0) : disk();
  z.zeta2 = disk();
  z.zeta3 = disk();
  z.zeta4 = disk();
  return z;
}

std::vector<SchurParams> sample_schur(std::uint64_t seed, std::size_t count, bool real_zeta1) {
  std::vector<SchurParams> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_schur_at(seed, i, real_zeta1));
  return out;
}

}  // namespace coeffbounds
