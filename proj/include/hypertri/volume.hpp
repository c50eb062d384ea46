#pragma once

#include <cstddef>
#include <string>

#include "hypertri/rational.hpp"
#include "hypertri/triangulation.hpp"

namespace hypertri {

/// Volume of one ideal rectified 5-cell, in units of pi^2.
inline const Rational kRectifiedCellVolume{2, 9};

/// Volume of the regular ideal hyperbolic tetrahedron, as a double.
inline constexpr double kRegularIdealTetVolume = 1.0149416064096536;

/// The same constant to 40 significant digits, for display rendering.
inline constexpr const char* kRegularIdealTetVolumeDigits =
    "1.014941606409653625021202554274520285942";

/// Volume as an exact rational multiple of pi^2.
struct ExactVolume {
  Rational pi2_coefficient;

  /// Decimal value, truncated to 17 significant digits.
  std::string decimal() const;
  friend bool operator==(const ExactVolume&, const ExactVolume&) = default;
};

/// N simplices stand for N rectified 5-cells: volume 2N/9 pi^2.
ExactVolume exact_volume(const Triangulation4& t);

/// chi = vol / (4 pi^2 / 3) = N / 6.
Rational euler_characteristic(const Triangulation4& t);

/// Arithmetic alone, for complexes that are not materialized.
inline ExactVolume exact_volume_for(std::size_t num_simplices) {
  return {kRectifiedCellVolume * Rational(static_cast<std::int64_t>(num_simplices))};
}
inline Rational euler_characteristic_for(std::size_t num_simplices) {
  return exact_volume_for(num_simplices).pi2_coefficient * Rational(3, 4);
}

/// M regular ideal tetrahedra.
double volume3(const Triangulation3& t);
/// volume3 rendered from the high-precision constant, 17 significant digits.
std::string volume3_decimal(const Triangulation3& t);

/// Renders coefficient * pi^2 truncated to `digits` significant digits.
std::string pi2_multiple_decimal(const Rational& coefficient, int digits = 17);
/// Renders count * v_tet truncated to `digits` significant digits.
std::string tet_multiple_decimal(std::size_t count, int digits = 17);

}  // namespace hypertri
