#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "clt/special_functions.hpp"

namespace clt {

/// Real polynomial with ascending coefficients. Trailing zeros are trimmed,
/// so equal polynomials compare equal; the zero polynomial is {0}.
class Polynomial {
 public:
  Polynomial() : coeffs_{0.0} {}
  explicit Polynomial(std::vector<double> ascending);
  Polynomial(std::initializer_list<double> ascending)
      : Polynomial(std::vector<double>(ascending)) {}

  const std::vector<double>& coefficients() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  double coefficient(int k) const noexcept;

  double operator()(double x) const noexcept;
  Complex operator()(Complex x) const noexcept;

  Polynomial derivative() const;
  /// int_0^1 p(u) du.
  double integral_unit() const noexcept;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(double c) const;

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<double> coeffs_;
};

/// Accepts "0,1", "[0, 1]" or "0 1". Throws ParseError naming the bad token.
Polynomial parse_polynomial(std::string_view text);

/// "[0, 1]" with 17 significant digits per coefficient.
std::string format_polynomial(const Polynomial& p);

}  // namespace clt
