#include "clt/polynomial.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "clt/error.hpp"

namespace clt {

Polynomial::Polynomial(std::vector<double> ascending) : coeffs_(std::move(ascending)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

double Polynomial::coefficient(int k) const noexcept {
  return k >= 0 && k <= degree() ? coeffs_[static_cast<std::size_t>(k)] : 0.0;
}

double Polynomial::operator()(double x) const noexcept {
  double r = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
  return r;
}

Complex Polynomial::operator()(Complex x) const noexcept {
  Complex r = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
  return r;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

double Polynomial::integral_unit() const noexcept {
  double s = 0.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) s += coeffs_[k] / static_cast<double>(k + 1);
  return s;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<double> r(std::max(coeffs_.size(), o.coeffs_.size()), 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * -1.0; }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  std::vector<double> r(coeffs_.size() + o.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(double c) const {
  std::vector<double> r = coeffs_;
  for (double& v : r) v *= c;
  return Polynomial(std::move(r));
}

Polynomial parse_polynomial(std::string_view text) {
  std::string_view body = text;
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  body = trim(body);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ParseError("unterminated coefficient list: '" + std::string(text) + "'");
    body = trim(body.substr(1, body.size() - 2));
  }
  if (body.empty()) throw ParseError("empty coefficient list");
  std::vector<double> coeffs;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t end = body.find_first_of(", \t", pos);
    if (end == std::string_view::npos) end = body.size();
    const std::string_view token = trim(body.substr(pos, end - pos));
    if (!token.empty()) {
      double v = 0.0;
      const char* first = token.data();
      if (*first == '+') ++first;
      const auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), v);
      if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(v)) {
        throw ParseError("malformed coefficient '" + std::string(token) + "' in '" + std::string(text) + "'");
      }
      coeffs.push_back(v);
    } else if (end < body.size() && body[end] == ',') {
      // "1,,2" or a leading comma
      const std::size_t prev = body.find_last_not_of(" \t", end == 0 ? 0 : end - 1);
      if (end == 0 || prev == std::string_view::npos || body[prev] == ',') {
        throw ParseError("empty coefficient in '" + std::string(text) + "'");
      }
    }
    if (end == body.size()) break;
    pos = end + 1;
  }
  if (coeffs.empty()) throw ParseError("empty coefficient list");
  if (body.back() == ',') throw ParseError("trailing comma in '" + std::string(text) + "'");
  return Polynomial(std::move(coeffs));
}

std::string format_polynomial(const Polynomial& p) {
  std::string out = "[";
  char buf[40];
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i) out += ", ";
    std::snprintf(buf, sizeof buf, "%.17g", p.coefficients()[i]);
    out += buf;
  }
  return out + "]";
}

}  // namespace clt
