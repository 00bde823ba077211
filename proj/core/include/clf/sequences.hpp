#pragma once

#include <cstddef>
#include <deque>

#include "clf/exact_arith.hpp"

namespace clf {

/// Closed forms for S_n, cross-checked against the recurrence.
enum class SClosedForm { Zagier, Jovovic, SunA, SunB, Halved };

/// Closed forms for P_n.
enum class PClosedForm { AltSum, Convolution };

/// Memoized Catalan-Larcombe-French numbers P_n, their normalization
/// S_n = P_n / 2^n, and the Franel numbers f_n.
///
/// P and S are produced by their three-term recurrences; every implied
/// division is asserted exact, and each P_n is cross-checked against
/// 2^n S_n at fill time. f is filled from its defining sum of cubed
/// binomials.
///
/// Growth is not synchronized: fill the needed prefix up front (prefill_*),
/// after which concurrent reads of the filled prefix are safe. freeze()
/// turns any further growth into an error for the duration of a parallel
/// phase.
class Sequences {
 public:
  const ExactInt& P(std::size_t n);
  const ExactInt& S(std::size_t n);
  const ExactInt& F(std::size_t n);

  void prefill_P(std::size_t n) { P(n); }
  void prefill_S(std::size_t n) { S(n); }
  void prefill_F(std::size_t n) { F(n); }

  void freeze() { frozen_ = true; }
  void thaw() { frozen_ = false; }

 private:
  void require_unfrozen(const char* who, std::size_t n) const;

  std::deque<ExactInt> p_;  // deque keeps references stable across growth
  std::deque<ExactInt> s_;
  std::deque<ExactInt> f_;
  bool frozen_ = false;
};

/// Evaluates the chosen closed form for S_n exactly.
ExactInt clf_S_closed(std::size_t n, SClosedForm variant);

/// Evaluates the chosen closed form for P_n exactly.
ExactInt clf_P_closed(std::size_t n, PClosedForm variant);

/// sum_{k=0}^{n} C(n,k) (-1)^k S_k / 8^k == S_n / 8^n, exactly.
bool identity_1_12_first(Sequences& seq, std::size_t n);

/// sum_{k=0}^{2n} C(2n,k) C(2n+k,k) (-8)^{2n-k} S_k == (-1)^n C(2n,n)^3.
bool identity_1_12_second(Sequences& seq, std::size_t n);

/// sum_{k=0}^{n} (2k - n) C(n,k) C(2k,k) C(2n-2k,n-k) == 0.
bool identity_2_2(std::size_t n);

/// C(a-b,c-d) C(b,d) == C(a,c) C(c,d) C(a-c,b-d) / C(a,b) in exact rational
/// arithmetic. Throws DivisionByZero when C(a,b) == 0.
bool identity_2_4(const ExactInt& a, const ExactInt& b, const ExactInt& c, const ExactInt& d);

struct LogConvexity {
  bool lower_strict = false;  // S_m^2 < S_{m+1} S_{m-1}
  bool upper_strict = false;  // m(m-1)(S_{m+1}S_{m-1} - S_m^2) < S_m^2
};

/// Two-sided strict log-convexity bounds for S at m >= 2, in integer
/// cross-multiplied form.
LogConvexity log_convexity(Sequences& seq, std::size_t m);

/// P_{m-1} P_{m+1} >= P_m^2 for m >= 1.
bool log_convex_P(Sequences& seq, std::size_t m);

/// S_{mn+1} == 4(mn+1) S_{mn} (mod m^2 n^2); the modulus is a general
/// integer, so the outcome carries no prime-power descriptor.
CongruenceOutcome lemma_3_1(Sequences& seq, std::int64_t m, std::int64_t n);

}  // namespace clf
