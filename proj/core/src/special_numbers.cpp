#include "clf/special_numbers.hpp"

#include <string>
#include <vector>

namespace clf {

void SpecialNumbers::require_unfrozen(const char* who, std::size_t n) const {
  if (frozen_)
    throw std::logic_error(std::string(who) + ": cache frozen but index " + std::to_string(n) +
                           " is not prefilled");
}

const Rational& SpecialNumbers::bernoulli(std::size_t n) {
  if (n >= bernoulli_.size()) {
    require_unfrozen("SpecialNumbers::bernoulli", n);
    if (bernoulli_.empty()) bernoulli_.emplace_back(1);
    while (bernoulli_.size() <= n) {
      const std::size_t m = bernoulli_.size();  // computing B_m
      if (m > 2 && (m & 1)) {
        bernoulli_.emplace_back(0);
        continue;
      }
      // sum_{k=0}^{m} C(m+1,k) B_k = 0
      Rational sum = 0;
      ExactInt c = 1;  // C(m+1, k)
      for (std::size_t k = 0; k < m; ++k) {
        sum += Rational(c) * bernoulli_[k];
        c = c * ExactInt(m + 1 - k) / ExactInt(k + 1);
      }
      bernoulli_.push_back(-sum / ExactInt(m + 1));
    }
  }
  return bernoulli_[n];
}

const ExactInt& SpecialNumbers::euler_number(std::size_t n) {
  if (n >= euler_.size()) {
    require_unfrozen("SpecialNumbers::euler_number", n);
    if (euler_.empty()) euler_.emplace_back(1);
    while (euler_.size() <= n) {
      const std::size_t m = euler_.size();
      if (m & 1) {
        euler_.emplace_back(0);
        continue;
      }
      // sum_{k=0}^{m/2} C(m, 2k) E_2k = 0
      ExactInt sum = 0;
      for (std::size_t k = 0; 2 * k < m; ++k)
        sum += choose(ExactInt(m), ExactInt(2 * k)) * euler_[2 * k];
      euler_.push_back(-sum);
    }
  }
  return euler_[n];
}

Rational SpecialNumbers::euler_poly(std::size_t n, const Rational& x) {
  euler_number(n);
  const Rational base = 2 * x - 1;
  Rational pw = 1;
  std::vector<Rational> powers(n + 1);
  for (std::size_t e = 0; e <= n; ++e) {
    powers[e] = pw;
    pw *= base;
  }
  Rational sum = 0;
  ExactInt c = 1;  // C(n, k)
  for (std::size_t k = 0; k <= n; ++k) {
    if (euler_[k] != 0) sum += Rational(c) * powers[n - k] * euler_[k];
    if (k < n) c = c * ExactInt(n - k) / ExactInt(k + 1);
  }
  return sum / boost::multiprecision::pow(ExactInt(2), static_cast<unsigned>(n));
}

Rational SpecialNumbers::bernoulli_poly(std::size_t j, const Rational& x) {
  bernoulli(j);
  Rational pw = 1;
  std::vector<Rational> powers(j + 1);
  for (std::size_t e = 0; e <= j; ++e) {
    powers[e] = pw;
    pw *= x;
  }
  Rational sum = 0;
  ExactInt c = 1;  // C(j, i)
  for (std::size_t i = 0; i <= j; ++i) {
    if (bernoulli_[i] != 0) sum += Rational(c) * bernoulli_[i] * powers[j - i];
    if (i < j) c = c * ExactInt(j - i) / ExactInt(i + 1);
  }
  return sum;
}

void SpecialNumbers::prefill(std::size_t n) {
  bernoulli(n);
  euler_number(n);
}

bool power_sum_check(SpecialNumbers& sn, std::size_t m, std::size_t n) {
  if (n < 1) throw PreconditionViolated("power_sum_check: requires n >= 1");
  ExactInt direct = 0;
  for (std::size_t k = 0; k < n; ++k)
    direct += boost::multiprecision::pow(ExactInt(k), static_cast<unsigned>(m));
  const Rational closed =
      (sn.bernoulli_poly(m + 1, Rational(n)) - sn.bernoulli(m + 1)) / ExactInt(m + 1);
  return Rational(direct) == closed;
}

bool alt_power_sum_check(SpecialNumbers& sn, std::size_t m, std::size_t n) {
  if (n < 1) throw PreconditionViolated("alt_power_sum_check: requires n >= 1");
  ExactInt direct = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const ExactInt t = boost::multiprecision::pow(ExactInt(k), static_cast<unsigned>(m));
    direct += (k & 1) ? -t : t;
  }
  Rational closed = sn.euler_poly(m, Rational(0));
  const Rational at_n = sn.euler_poly(m, Rational(n));
  if (n & 1)
    closed += at_n;
  else
    closed -= at_n;
  closed /= 2;
  return Rational(direct) == closed;
}

bool staudt_clausen_check(SpecialNumbers& sn, std::size_t k, const ExactInt& p) {
  if (k < 1) throw PreconditionViolated("staudt_clausen_check: requires k >= 1");
  if (!is_odd_prime(p)) throw PreconditionViolated("staudt_clausen_check: p must be an odd prime");
  const Rational& b = sn.bernoulli(2 * k);
  if (ExactInt(2 * k) % (p - 1) == 0) return ord(Rational(p) * b, p) >= Valuation(0);
  return ord(b, p) >= Valuation(0);
}

}  // namespace clf
