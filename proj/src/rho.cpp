#include "dynmono/rho.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "dynmono/errors.hpp"

namespace dynmono {

namespace {

// Keeps p*d and q*d well inside 64 bits for any realistic degree.
constexpr std::uint64_t kMaxDenominator = std::uint64_t{1} << 31;

std::uint64_t parse_digits(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw InputError("invalid rho '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rho::Rho(std::uint64_t p, std::uint64_t q) {
  if (q == 0 || p == 0 || p > q) {
    throw InputError("rho must satisfy 0 < rho <= 1, got " + std::to_string(p) + "/" +
                     std::to_string(q));
  }
  auto g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
  if (q_ > kMaxDenominator) throw InputError("rho denominator too large: " + std::to_string(q_));
}

std::string Rho::str() const { return std::to_string(p_) + "/" + std::to_string(q_); }

Rho parse_rho(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw InputError("empty rho");
  text = text.substr(first, text.find_last_not_of(" \t\r\n") - first + 1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rho(parse_digits(text.substr(0, slash), text), parse_digits(text.substr(slash + 1), text));
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rho(parse_digits(text, text), 1);

  std::string_view whole = text.substr(0, dot);
  std::string_view frac = text.substr(dot + 1);
  if (frac.size() > 9 || (whole.empty() && frac.empty())) {
    throw InputError("invalid rho '" + std::string(text) + "'");
  }
  std::uint64_t scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  std::uint64_t int_part = whole.empty() ? 0 : parse_digits(whole, text);
  std::uint64_t frac_part = frac.empty() ? 0 : parse_digits(frac, text);
  if (int_part > 1) throw InputError("rho must satisfy 0 < rho <= 1, got " + std::string(text));
  return Rho(int_part * scale + frac_part, scale);
}

}  // namespace dynmono
