#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "coeffbounds/errors.hpp"
#include "coeffbounds/types.hpp"

namespace coeffbounds {

/// Normalized power series f(z) = z + a2 z^2 + ... + aN z^N.
///
/// Coefficients are addressed 1-based, `f[n]` is a_n. Any scalar with field
/// arithmetic works; the library uses std::complex<double> and the tests also
/// instantiate boost::multiprecision::cpp_rational for exact identities.
template <class Scalar>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("series needs at least the linear coefficient");
    if (!(coeffs_.front() == Scalar(1))) throw DomainError("series must be normalized (a1 = 1)");
  }

  static TruncatedSeries identity(std::size_t order) {
    std::vector<Scalar> c(order, Scalar(0));
    c.at(0) = Scalar(1);
    return TruncatedSeries(std::move(c));
  }

  std::size_t order() const noexcept { return coeffs_.size(); }

  const Scalar& operator[](std::size_t n) const { return coeffs_.at(n - 1); }

  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }

 private:
  std::vector<Scalar> coeffs_;
};

/// Series w + delta2 w^2 + ... + delta5 w^5 of order 5.
template <class Scalar>
TruncatedSeries<Scalar> to_series(const InverseCoeffs<Scalar>& d) {
  return TruncatedSeries<Scalar>({Scalar(1), d.delta2, d.delta3, d.delta4, d.delta5});
}

/// Inverse coefficients delta2..delta5 of f. Requires order >= 5.
template <class Scalar>
InverseCoeffs<Scalar> invert_series(const TruncatedSeries<Scalar>& f) {
  if (f.order() < 5) {
    throw InsufficientOrderError("invert_series needs order >= 5, got " +
                                 std::to_string(f.order()));
  }
  const Scalar& a2 = f[2];
  const Scalar& a3 = f[3];
  const Scalar& a4 = f[4];
  const Scalar& a5 = f[5];
  const Scalar a2sq = a2 * a2;
  InverseCoeffs<Scalar> d;
  d.delta2 = -a2;
  d.delta3 = Scalar(2) * a2sq - a3;
  d.delta4 = Scalar(5) * a2 * a3 - Scalar(5) * a2sq * a2 - a4;
  d.delta5 = Scalar(14) * a2sq * a2sq - Scalar(21) * a2sq * a3 + Scalar(6) * a2 * a4 +
             Scalar(3) * a3 * a3 - a5;
  return d;
}

/// Coefficients of f(g(z)) truncated to the shared order.
template <class Scalar>
TruncatedSeries<Scalar> compose(const TruncatedSeries<Scalar>& f, const TruncatedSeries<Scalar>& g) {
  if (f.order() != g.order()) {
    throw OrderMismatchError("compose: orders " + std::to_string(f.order()) + " and " +
                             std::to_string(g.order()) + " differ");
  }
  const std::size_t n = f.order();
  // Dense polynomials indexed by power 0..n.
  std::vector<Scalar> g_poly(n + 1, Scalar(0));
  for (std::size_t k = 1; k <= n; ++k) g_poly[k] = g[k];

  std::vector<Scalar> power = g_poly;
  std::vector<Scalar> out(n + 1, Scalar(0));
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t j = k; j <= n; ++j) out[j] += f[k] * power[j];
    if (k == n) break;
    std::vector<Scalar> next(n + 1, Scalar(0));
    for (std::size_t i = 1; i <= n; ++i) {
      if (power[i] == Scalar(0)) continue;
      for (std::size_t j = 1; i + j <= n; ++j) next[i + j] += power[i] * g_poly[j];
    }
    power = std::move(next);
  }
  return TruncatedSeries<Scalar>(std::vector<Scalar>(out.begin() + 1, out.end()));
}

/// Solves z f'(z) = g(z) p(z) through order 5:
///   2 a2 = b2 + c1,  3 a3 = b3 + b2 c1 + c2,
///   4 a4 = b4 + c1 b3 + c2 b2 + c3,  5 a5 = b5 + b4 c1 + b3 c2 + b2 c3 + c4.
template <class Scalar>
TruncatedSeries<Scalar> series_from_ode(const GeneratorCoeffs<Scalar>& b,
                                        const CaratheodoryCoeffs<Scalar>& c) {
  return TruncatedSeries<Scalar>({
      Scalar(1),
      (b.b2 + c.c1) / Scalar(2),
      (b.b3 + b.b2 * c.c1 + c.c2) / Scalar(3),
      (b.b4 + c.c1 * b.b3 + c.c2 * b.b2 + c.c3) / Scalar(4),
      (b.b5 + b.b4 * c.c1 + b.b3 * c.c2 + b.b2 * c.c3 + c.c4) / Scalar(5),
  });
}

}  // namespace coeffbounds
