#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

#include "hgft/types.hpp"

namespace hgft {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::optional<double> parse_double_full(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// The imaginary token may be "", "+", "-" (unit imaginary) or a number.
inline std::optional<double> parse_imag_token(std::string_view s) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return parse_double_full(s);
}

}  // namespace detail

// Complex literal grammar: <real>[+|-]<real>i with optional parts; a bare
// "i" means 1i.  Decimal or scientific notation for either part.
inline std::optional<cplx> parse_complex(std::string_view input) {
  std::string_view s = detail::trim(input);
  if (s.empty()) return std::nullopt;
  if (s.back() != 'i' && s.back() != 'I') {
    auto re = detail::parse_double_full(s);
    if (!re) return std::nullopt;
    return cplx(*re, 0.0);
  }
  s.remove_suffix(1);
  // split at the last sign that is not an exponent sign and not leading
  size_t split = std::string_view::npos;
  for (size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    auto im = detail::parse_imag_token(s);
    if (!im) return std::nullopt;
    return cplx(0.0, *im);
  }
  auto re = detail::parse_double_full(s.substr(0, split));
  auto im = detail::parse_imag_token(s.substr(split));
  if (!re || !im) return std::nullopt;
  return cplx(*re, *im);
}

// 17 significant digits: lossless for binary64.
inline std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Round-trip format: always "re<sign>|im|i" so that signed zeros survive.
inline std::string format_complex(cplx z) {
  std::string out = format_g17(z.real());
  out += std::signbit(z.imag()) ? '-' : '+';
  out += format_g17(std::abs(z.imag()));
  out += 'i';
  return out;
}

}  // namespace hgft
