#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "clf/exact_arith.hpp"
#include "clf/sequences.hpp"
#include "clf/special_numbers.hpp"

namespace clf {

/// P_n == P_{a_r} ... P_{a_1} P_{a_0} (mod p) over the base-p digits of n.
CongruenceOutcome check_1_8(Sequences& seq, std::size_t n, const ExactInt& p);

/// P_n == (-1)^((p-1)/2) 128^n P_{p-1-n} (mod p) for 0 <= n <= p-1.
CongruenceOutcome check_1_9(Sequences& seq, std::size_t n, const ExactInt& p);

/// ord_p(P_{mp^r} - P_{mp^(r-1)}) >= r.
bool check_1_10(Sequences& seq, std::int64_t m, std::int64_t r, const ExactInt& p);
CongruenceOutcome check_1_10_outcome(Sequences& seq, std::int64_t m, std::int64_t r,
                                     const ExactInt& p);

/// ord_p(S_{mp^r} - S_{mp^(r-1)}) >= 2r.
bool check_1_11(Sequences& seq, std::int64_t m, std::int64_t r, const ExactInt& p);
CongruenceOutcome check_1_11_outcome(Sequences& seq, std::int64_t m, std::int64_t r,
                                     const ExactInt& p);

/// ord_p(P_{mp^r} - 2^(m phi(p^r)) P_{mp^(r-1)}) >= 2r.
bool check_P_lift(Sequences& seq, std::int64_t m, std::int64_t r, const ExactInt& p);
CongruenceOutcome check_P_lift_outcome(Sequences& seq, std::int64_t m, std::int64_t r,
                                       const ExactInt& p);

/// Legendre-weighted comparison of the two (p-1)-term sums at a p-integral
/// n with n != 0, -16 (mod p).
CongruenceOutcome check_1_13(Sequences& seq, const Rational& n, const ExactInt& p);

struct ScanRecord {
  std::int64_t r = 0;
  Valuation ord_S;
  Valuation ord_f;
  bool conjecture_holds = false;  // both valuations >= r
};

/// Valuations of S and f at index (p^r - 1)/2 for r = 1..r_max, for
/// p == 5, 7 (mod 8). Observational: failures are reported, never thrown.
std::vector<ScanRecord> scan_1_14(Sequences& seq, const ExactInt& p, std::int64_t r_max);

/// Branch congruence for S_{np} - S_n: mod p^3 off the p | n branch, and
/// ord >= 3 + ord_p(n) on it.
CongruenceOutcome check_thm_3_1(Sequences& seq, SpecialNumbers& sn, std::int64_t n,
                                const ExactInt& p);

/// S_p, S_2p, S_3p against their closed mod-p^3 expressions, p > 3.
std::array<CongruenceOutcome, 3> check_cor_3_1(Sequences& seq, SpecialNumbers& sn,
                                               const ExactInt& p);

/// S_{mp^r + 1} == 4(mp^r + 1) S_{mp^(r-1)} (mod p^2r).
CongruenceOutcome check_thm_3_2(Sequences& seq, std::int64_t m, std::int64_t r, const ExactInt& p);

/// S_{mp^r - 1} == (-1)^((p-1)/2) S_{mp^(r-1) - 1} (mod p^r).
CongruenceOutcome check_thm_3_3(Sequences& seq, std::int64_t m, std::int64_t r, const ExactInt& p);

/// S_{np+1} branch congruences mod p^3 (p = 3 vs p > 3).
CongruenceOutcome check_thm_3_4(Sequences& seq, SpecialNumbers& sn, std::int64_t n,
                                const ExactInt& p);

/// S_{p+1} == 16 + 16p + 32 (-1)^((p-1)/2) (E_{p-3} - 1) p^2 (mod p^3), p > 3.
CongruenceOutcome check_cor_3_2(Sequences& seq, SpecialNumbers& sn, const ExactInt& p);

struct Theorem35Result {
  Valuation ord_S;
  Valuation ord_f;
  bool holds = false;
};

/// ord_p >= 2 for both S and f at index (p^2 - 1)/2, for p == 5, 7 (mod 8).
Theorem35Result check_thm_3_5(Sequences& seq, const ExactInt& p);

/// S_n == (n/3) S_{n-1} (mod 3) for 3 not dividing n.
CongruenceOutcome check_eq_3_1(Sequences& seq, std::int64_t n);

/// sum_t C((p-1)/2 p + (p-1)/2, sp + t)^3 == 0 (mod p^2).
CongruenceOutcome check_eq_3_4(std::int64_t s, const ExactInt& p);

/// The mod p^(r+2) determination of S_{mp^r}: the S_{np} - S_n branch
/// congruence applied at n = mp^(r-1).
CongruenceOutcome check_S_mod_p_r_plus_2(Sequences& seq, SpecialNumbers& sn, std::int64_t m,
                                         std::int64_t r, const ExactInt& p);

}  // namespace clf
