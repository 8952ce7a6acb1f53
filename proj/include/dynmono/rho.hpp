#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace dynmono {

// Proportionality parameter as an exact fraction p/q with 0 < p/q <= 1, kept in
// lowest terms so that ceil(rho * d) is computed in integer arithmetic.
class Rho {
 public:
  Rho() = default;
  // Throws InputError unless 0 < p/q <= 1.
  Rho(std::uint64_t p, std::uint64_t q);

  std::uint64_t num() const { return p_; }
  std::uint64_t den() const { return q_; }
  double value() const { return static_cast<double>(p_) / static_cast<double>(q_); }

  // ceil(p*d/q)
  std::uint64_t ceil_times(std::uint64_t d) const { return (p_ * d + q_ - 1) / q_; }
  // d >= 1/rho, tested as d*p >= q.
  bool reaches_inverse(std::uint64_t d) const { return d * p_ >= q_; }

  std::string str() const;

  friend bool operator==(const Rho&, const Rho&) = default;

 private:
  std::uint64_t p_ = 1;
  std::uint64_t q_ = 1;
};

// Accepts "P/Q", an integer, or a decimal such as "0.3" (read as 3/10).
Rho parse_rho(std::string_view text);

}  // namespace dynmono
