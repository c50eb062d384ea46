#include "hypertri/volume.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <iomanip>
#include <sstream>

namespace hypertri {

namespace {

using Decimal = boost::multiprecision::cpp_dec_float_50;

// Truncates (never rounds) to `digits` significant digits and prints in
// plain positional notation with trailing zeros removed.
std::string truncate_significant(const Decimal& value, int digits) {
  if (value == 0) return "0";
  std::ostringstream os;
  os << std::scientific << std::setprecision(digits + 8) << value;
  const std::string sci = os.str();  // [-]d.ddddde[+-]xx
  const std::size_t e = sci.find('e');
  const bool negative = sci.front() == '-';
  std::string mantissa;
  for (std::size_t i = negative ? 1 : 0; i < e; ++i)
    if (sci[i] != '.') mantissa.push_back(sci[i]);
  mantissa.resize(static_cast<std::size_t>(digits));
  const int exponent = std::stoi(sci.substr(e + 1));

  std::string out;
  if (exponent >= 0) {
    const auto int_len = static_cast<std::size_t>(exponent) + 1;
    if (mantissa.size() < int_len) mantissa.append(int_len - mantissa.size(), '0');
    out = mantissa.substr(0, int_len);
    std::string frac = mantissa.substr(int_len);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  } else {
    std::string frac(static_cast<std::size_t>(-exponent - 1), '0');
    frac += mantissa;
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out = "0." + frac;
  }
  return negative ? "-" + out : out;
}

}  // namespace

std::string ExactVolume::decimal() const { return pi2_multiple_decimal(pi2_coefficient); }

ExactVolume exact_volume(const Triangulation4& t) {
  t.require_closed();
  return exact_volume_for(t.size());
}

Rational euler_characteristic(const Triangulation4& t) {
  t.require_closed();
  return euler_characteristic_for(t.size());
}

double volume3(const Triangulation3& t) {
  t.require_closed();
  return static_cast<double>(t.size()) * kRegularIdealTetVolume;
}

std::string volume3_decimal(const Triangulation3& t) {
  t.require_closed();
  return tet_multiple_decimal(t.size());
}

std::string pi2_multiple_decimal(const Rational& coefficient, int digits) {
  const Decimal pi = boost::math::constants::pi<Decimal>();
  const Decimal value = pi * pi * Decimal(coefficient.num()) / Decimal(coefficient.den());
  return truncate_significant(value, digits);
}

std::string tet_multiple_decimal(std::size_t count, int digits) {
  const Decimal value = Decimal(kRegularIdealTetVolumeDigits) * Decimal(count);
  return truncate_significant(value, digits);
}

}  // namespace hypertri
