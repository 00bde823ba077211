#pragma once

#include <cstddef>
#include <deque>

#include "clf/exact_arith.hpp"

namespace clf {

/// Memoized Bernoulli numbers (B_1 = -1/2 convention) and Euler numbers,
/// with polynomial evaluation for both families.
///
/// Same growth contract as Sequences: prefill before concurrent reads;
/// freeze() makes unexpected growth an error.
class SpecialNumbers {
 public:
  const Rational& bernoulli(std::size_t n);
  const ExactInt& euler_number(std::size_t n);

  /// E_n(x) = 2^-n sum_k C(n,k) (2x-1)^(n-k) E_k.
  Rational euler_poly(std::size_t n, const Rational& x);

  /// B_j(x) = sum_i C(j,i) B_i x^(j-i).
  Rational bernoulli_poly(std::size_t j, const Rational& x);

  void prefill(std::size_t n);
  void freeze() { frozen_ = true; }
  void thaw() { frozen_ = false; }

 private:
  void require_unfrozen(const char* who, std::size_t n) const;

  std::deque<Rational> bernoulli_;
  std::deque<ExactInt> euler_;
  bool frozen_ = false;
};

/// sum_{k=0}^{n-1} k^m == (B_{m+1}(n) - B_{m+1}) / (m+1), exactly.
bool power_sum_check(SpecialNumbers& sn, std::size_t m, std::size_t n);

/// sum_{k=0}^{n-1} (-1)^k k^m == (E_m(0) - (-1)^n E_m(n)) / 2, exactly.
bool alt_power_sum_check(SpecialNumbers& sn, std::size_t m, std::size_t n);

/// p-integrality of B_2k: B_2k in Z_p when (p-1) does not divide 2k, and
/// p B_2k in Z_p when it does.
bool staudt_clausen_check(SpecialNumbers& sn, std::size_t k, const ExactInt& p);

}  // namespace clf
