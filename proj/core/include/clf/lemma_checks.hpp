#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "clf/exact_arith.hpp"
#include "clf/special_numbers.hpp"

namespace clf {

struct LucasReduction {
  std::vector<std::pair<ExactInt, ExactInt>> digit_pairs;  // most significant first
  ExactInt product_residue;
  CongruenceOutcome outcome;
};

/// Base-p digit reduction of C(a,b): digit pairs, the mod-p product of the
/// digit binomials, and the verdict C(a,b) == product (mod p).
LucasReduction lucas_reduce(const ExactInt& a, const ExactInt& b, const ExactInt& p);

/// C(ap + a0, bp + b0) == C(a,b) C(a0,b0) (mod p).
CongruenceOutcome check_lemma_2_2(std::int64_t a, std::int64_t b, std::int64_t a0, std::int64_t b0,
                                  const ExactInt& p);

/// C(mp, np) == C(m,n) (mod p^3) for p >= 5.
CongruenceOutcome check_kazandzidis(std::int64_t m, std::int64_t n, const ExactInt& p);

/// C(2k,k) C(2(p-k), p-k) == -+ 2p/k (mod p^2), sign split at k = p/2.
CongruenceOutcome check_lemma_2_4(std::int64_t k, const ExactInt& p);

/// Alternating power-reciprocal sum over r = 1..<a>_p against the
/// Bernoulli/Euler-polynomial expression, mod p.
CongruenceOutcome check_lemma_2_5(SpecialNumbers& sn, const Rational& a, std::int64_t k,
                                  const ExactInt& p);

/// C(2mp+2k, mp+k) == (2m+1) C(2m,m) C(2k,k) (mod p^2) for p/2 < k < p.
CongruenceOutcome check_lemma_2_6(std::int64_t m, std::int64_t k, const ExactInt& p);

/// Exact falling-product identities for C(mp^r - 1, k), plus the companion
/// C(mp^r, kp) identity when k >= 1 and kp <= mp^r.
bool check_lemma_2_8(std::int64_t m, std::int64_t r, std::int64_t k, const ExactInt& p);

/// C(3m,3n) == C(m,n)(1 + 9mn^2 - 9m^2 n) (mod 27).
CongruenceOutcome check_lemma_2_9(std::int64_t m, std::int64_t n);

/// C(mp^r, sp) == C(mp^(r-1), s) (mod p^2r) for s in [0, mp^(r-1) - 1].
CongruenceOutcome check_lemma_2_10(std::int64_t m, std::int64_t r, std::int64_t s,
                                   const ExactInt& p);

/// Triple-product congruence mod p^(r+2), with the (1+9m) factor in the
/// r = 1, p = 3 branch. s in [1, mp^(r-1)].
CongruenceOutcome check_lemma_2_11(std::int64_t m, std::int64_t r, std::int64_t s,
                                   const ExactInt& p);

/// ord_p( k C(2k,k) C(2(mp^r - k), mp^r - k) ) >= r for k in [0, mp^r].
bool check_lemma_2_12(std::int64_t m, std::int64_t r, std::int64_t k, const ExactInt& p);

/// check_lemma_2_12 with the full verdict (product vs 0 mod p^r).
CongruenceOutcome check_lemma_2_12_outcome(std::int64_t m, std::int64_t r, std::int64_t k,
                                           const ExactInt& p);

/// Product of near-central binomials at sp + (p-1)/2 reduces mod p^r.
/// s in [0, mp^(r-1) - 1].
CongruenceOutcome check_lemma_2_13(std::int64_t m, std::int64_t r, std::int64_t s,
                                   const ExactInt& p);

/// C(mp^r,sp) C(2sp,sp) C(2mp^r-2sp, mp^r-sp) reduces mod p^2r.
/// s in [0, mp^(r-1) - 1].
CongruenceOutcome check_lemma_2_14(std::int64_t m, std::int64_t r, std::int64_t s,
                                   const ExactInt& p);

/// Two-digit expansion of C(n,k) mod p^2 with generalized binomials on the
/// right-hand side. Requires n = n1 p + n0, k = k1 p + k0 with n1, k1 >= 1.
CongruenceOutcome check_lemma_2_15(std::int64_t n, std::int64_t k, const ExactInt& p);

/// Central alternating sum with C(-1/2, t)^2 weights vanishes mod p^2.
CongruenceOutcome check_lemma_2_16(const ExactInt& p);

/// ord_p of the p-free harmonic sum over [1, sp-1] is at least ord_p(s) + 1.
bool check_harmonic_2_3(std::int64_t s, const ExactInt& p);

/// check_harmonic_2_3 with the full verdict (sum vs 0 mod p^(ord_p(s)+1)).
CongruenceOutcome check_harmonic_2_3_outcome(std::int64_t s, const ExactInt& p);

}  // namespace clf
