#include "afnorm/cyclotomic.hpp"

#include <map>
#include <stdexcept>

namespace afnorm {

long euler_phi(long n) {
  if (n <= 0) throw std::invalid_argument("euler_phi of nonpositive argument");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    result -= result / p;
    while (m % p == 0) m /= p;
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Exact division of integer polynomials, ascending coefficients, divisor
// monic. Remainder is zero by construction everywhere this is used.
std::vector<Integer> divide_monic(std::vector<Integer> num, const std::vector<Integer>& den) {
  const size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("cyclotomic division underflow");
  std::vector<Integer> quot(num.size() - dd);
  for (size_t qi = quot.size(); qi-- > 0;) {
    Integer c = num[qi + dd];
    quot[qi] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= dd; ++j) num[qi + j] -= c * den[j];
  }
  for (const Integer& c : num)
    if (c != 0) throw std::logic_error("cyclotomic division left a remainder");
  return quot;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(long n) {
  static std::map<long, std::vector<Integer>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
  std::vector<Integer> num(n + 1);
  num[0] = -1;
  num[n] = 1;
  std::vector<Integer> result = num;
  std::vector<Integer> den{1};  // constant 1
  for (long d = 1; d < n; ++d) {
    if (n % d) continue;
    const std::vector<Integer>& phi_d = cyclotomic_polynomial(d);
    std::vector<Integer> next(den.size() + phi_d.size() - 1);
    for (size_t i = 0; i < den.size(); ++i)
      for (size_t j = 0; j < phi_d.size(); ++j) next[i + j] += den[i] * phi_d[j];
    den = std::move(next);
  }
  result = divide_monic(std::move(num), den);
  return cache.emplace(n, std::move(result)).first->second;
}

void Cyclotomic::bind(long n) {
  if (conductor_ == n) return;
  if (conductor_ != 0) throw std::invalid_argument("cyclotomic conductor mismatch");
  Rational constant = coeffs_[0];
  conductor_ = n;
  coeffs_.assign(static_cast<size_t>(euler_phi(n)), Rational(0));
  coeffs_[0] = constant;
}

void Cyclotomic::match(Cyclotomic& a, Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return;
  if (a.conductor_ == 0)
    a.bind(b.conductor_);
  else if (b.conductor_ == 0)
    b.bind(a.conductor_);
  else
    throw std::invalid_argument("cyclotomic conductor mismatch");
}

void Cyclotomic::reduce(std::vector<Rational>& raw) const {
  const std::vector<Integer>& phi = cyclotomic_polynomial(conductor_);
  const size_t deg = phi.size() - 1;
  for (size_t i = raw.size(); i-- > deg;) {
    Rational c = raw[i];
    if (c == 0) continue;
    raw[i] = 0;
    for (size_t j = 0; j < deg; ++j) raw[i - deg + j] -= c * Rational(phi[j]);
  }
  raw.resize(deg);
}

Cyclotomic Cyclotomic::root_of_unity(long n, const Integer& k) {
  if (n <= 0) throw std::invalid_argument("root_of_unity needs a positive order");
  Cyclotomic c;
  c.conductor_ = n;
  long deg = euler_phi(n);
  long e = static_cast<long>(mod_positive(k, Integer(n)));
  std::vector<Rational> raw(static_cast<size_t>(e) + 1);
  raw.back() = 1;
  if (static_cast<long>(raw.size()) > deg)
    c.reduce(raw);
  else
    raw.resize(deg);
  c.coeffs_ = std::move(raw);
  return c;
}

Cyclotomic Cyclotomic::zero_in(long n) {
  Cyclotomic c;
  c.bind(n);
  return c;
}

bool Cyclotomic::is_zero() const {
  for (const Rational& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_part() const {
  if (!is_rational()) throw std::logic_error("not a rational value");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
  Cyclotomic a = *this, b = rhs;
  match(a, b);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const {
  Cyclotomic a = *this, b = rhs;
  match(a, b);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
  return a;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic a = *this;
  for (Rational& c : a.coeffs_) c = -c;
  return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
  Cyclotomic a = *this, b = rhs;
  match(a, b);
  if (a.conductor_ == 0) return Cyclotomic(Rational(a.coeffs_[0] * b.coeffs_[0]));
  std::vector<Rational> raw(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  a.reduce(raw);
  a.coeffs_ = std::move(raw);
  return a;
}

namespace {

// Rational polynomial helpers for the extended Euclid below; coefficients
// ascending, normalized with no trailing zeros.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly sub_scaled(const QPoly& a, const QPoly& b, const Rational& c, size_t shift) {
  QPoly out = a;
  if (out.size() < b.size() + shift) out.resize(b.size() + shift);
  for (size_t i = 0; i < b.size(); ++i) out[i + shift] -= c * b[i];
  trim(out);
  return out;
}

// a = q*b + r with deg r < deg b.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  QPoly q;
  trim(a);
  if (b.empty()) throw std::logic_error("polynomial division by zero");
  while (a.size() >= b.size()) {
    size_t shift = a.size() - b.size();
    Rational c = a.back() / b.back();
    if (q.size() < shift + 1) q.resize(shift + 1);
    q[shift] += c;
    a = sub_scaled(a, b, c, shift);
  }
  return {std::move(q), std::move(a)};
}

}  // namespace

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (conductor_ == 0 || is_rational()) {
    Cyclotomic r = *this;
    Rational inv = Rational(1) / coeffs_[0];
    r.coeffs_.assign(r.coeffs_.size(), Rational(0));
    r.coeffs_[0] = inv;
    return r;
  }
  // Extended Euclid in Q[x]: s*a + t*Phi = gcd = constant, so s/gcd is the
  // inverse of a mod Phi (Phi irreducible, a nonzero of smaller degree).
  QPoly r0;
  for (const Integer& c : cyclotomic_polynomial(conductor_)) r0.push_back(Rational(c));
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0{}, s1{Rational(1)};  // coefficients of `a` in r0, r1
  while (true) {
    auto [q, r2] = divmod(r0, r1);
    if (r2.empty()) break;
    // s2 = s0 - q*s1
    QPoly s2 = s0;
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      s2 = sub_scaled(s2, s1, q[i], i);
    }
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.size() != 1)
    throw std::logic_error("cyclotomic polynomial split unexpectedly");
  Cyclotomic out;
  out.conductor_ = conductor_;
  out.coeffs_.assign(coeffs_.size(), Rational(0));
  for (size_t i = 0; i < s1.size() && i < out.coeffs_.size(); ++i)
    out.coeffs_[i] = s1[i] / r1[0];
  return out;
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& rhs) const { return *this * rhs.inverse(); }

bool Cyclotomic::operator==(const Cyclotomic& rhs) const {
  Cyclotomic a = *this, b = rhs;
  match(a, b);
  return a.coeffs_ == b.coeffs_;
}

std::string Cyclotomic::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational a = abs_rat(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    if (i == 0) {
      out += a.str();
    } else {
      if (a != 1) out += a.str() + "*";
      out += "z";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace afnorm
