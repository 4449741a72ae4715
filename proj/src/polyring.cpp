#include "subchains/polyring.hpp"

#include <algorithm>
#include <stdexcept>

namespace subchains {

IntPolynomial::IntPolynomial(std::vector<BigCount> ascending) : coeffs_(std::move(ascending)) {
  canonicalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  canonicalize();
}

IntPolynomial IntPolynomial::constant(const BigCount& c) { return IntPolynomial(std::vector<BigCount>{c}); }

IntPolynomial IntPolynomial::monomial(const BigCount& c, std::size_t k) {
  std::vector<BigCount> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigCount IntPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigCount(0);
}

BigCount IntPolynomial::leading() const { return is_zero() ? BigCount(0) : coeffs_.back(); }

BigCount IntPolynomial::eval(const BigCount& x) const {
  BigCount acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  canonicalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  canonicalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  *this = poly_mul(*this, rhs);
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigCount& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigCount> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  IntPolynomial out;
  out.coeffs_ = std::move(v);
  return out;
}

bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
  return std::equal(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end(),
                    [](const BigCount& x, const BigCount& y) { return x == y; });
}

std::string IntPolynomial::to_text(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigCount& c = coeffs_[i];
    if (c == 0) continue;
    BigCount mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::vector<std::string> IntPolynomial::to_decimal_coefficients() const {
  if (is_zero()) return {"0"};
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  return out;
}

IntPolynomial IntPolynomial::from_decimal_coefficients(std::span<const std::string> ascending) {
  std::vector<BigCount> v;
  v.reserve(ascending.size());
  for (const auto& s : ascending) {
    BigCount c;
    if (s.empty() || c.set_str(s, 10) != 0) {
      throw std::invalid_argument("not a decimal integer: '" + s + "'");
    }
    v.push_back(std::move(c));
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) { return a + b; }

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto ca = a.coefficients();
  auto cb = b.coefficients();
  std::vector<BigCount> out(ca.size() + cb.size() - 1);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), ca[i].get_mpz_t(), cb[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(out));
}

BigCount poly_eval(const IntPolynomial& a, const BigCount& x) { return a.eval(x); }

IntPolynomial poly_scale(const IntPolynomial& a, const BigCount& c) {
  IntPolynomial out = a;
  out *= c;
  return out;
}

}  // namespace subchains
