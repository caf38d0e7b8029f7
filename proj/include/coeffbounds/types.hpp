#pragma once

#include <complex>

namespace coeffbounds {

using Complex = std::complex<double>;

/// Coefficients b2..b5 of the starlike generator g(z) = z + b2 z^2 + ...
template <class Scalar>
struct GeneratorCoeffs {
  Scalar b2{}, b3{}, b4{}, b5{};
};

/// Coefficients c1..c4 of p(z) = 1 + c1 z + c2 z^2 + ... with Re p > 0.
template <class Scalar = Complex>
struct CaratheodoryCoeffs {
  Scalar c1{}, c2{}, c3{}, c4{};
};

/// Coefficients of the compositional inverse f^{-1}(w) = w + delta2 w^2 + ...
template <class Scalar = Complex>
struct InverseCoeffs {
  Scalar delta2{}, delta3{}, delta4{}, delta5{};

  Scalar operator[](int n) const {
    switch (n) {
      case 2: return delta2;
      case 3: return delta3;
      case 4: return delta4;
      default: return delta5;
    }
  }
};

}  // namespace coeffbounds
