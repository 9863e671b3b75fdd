#include "matchlab/numeric.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "matchlab/error.hpp"

namespace matchlab {

ExactProb exact_from_decimal(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidParameter, "non-finite parameter");
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  const std::string text(buf, res.ptr);

  // text is [-]digits[.digits][e[+-]digits]
  std::string digits;
  long exponent = 0;
  bool negative = false;
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') {
    negative = true;
    ++i;
  }
  for (; i < text.size() && text[i] != 'e'; ++i) {
    if (text[i] == '.') continue;
    digits += text[i];
  }
  const auto dot = text.find('.');
  const auto e_pos = text.find('e');
  if (dot != std::string::npos) {
    exponent -= static_cast<long>((e_pos == std::string::npos ? text.size() : e_pos) - dot - 1);
  }
  if (e_pos != std::string::npos) exponent += std::stol(text.substr(e_pos + 1));

  ExactProb q{BigCount(digits, 10)};
  BigCount scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) q /= scale;
  else q *= scale;
  q.canonicalize();
  return negative ? ExactProb(-q) : q;
}

}  // namespace matchlab
