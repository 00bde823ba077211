#include "clf/lemma_checks.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <string>

namespace clf {

namespace {

ExactInt pow_int(const ExactInt& base, std::int64_t e) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw PreconditionViolated(msg);
}

}  // namespace

LucasReduction lucas_reduce(const ExactInt& a, const ExactInt& b, const ExactInt& p) {
  require(a >= 0 && b >= 0, "lucas_reduce: requires a, b >= 0");
  require(is_odd_prime(p), "lucas_reduce: p must be an odd prime");
  LucasReduction out;
  ExactInt aa = a, bb = b;
  ExactInt prod = 1;
  do {
    const ExactInt ad = aa % p, bd = bb % p;
    out.digit_pairs.emplace_back(ad, bd);
    prod = prod * choose(ad, bd) % p;
    aa /= p;
    bb /= p;
  } while (aa != 0 || bb != 0);
  std::reverse(out.digit_pairs.begin(), out.digit_pairs.end());
  out.product_residue = prod;
  out.outcome = congruent(Rational(choose(a, b)), Rational(prod), PrimePower(p, 1),
                          "lucas_reduce(" + a.str() + "," + b.str() + ")");
  return out;
}

CongruenceOutcome check_lemma_2_2(std::int64_t a, std::int64_t b, std::int64_t a0, std::int64_t b0,
                                  const ExactInt& p) {
  require(a >= 1 && b >= 1, "check_lemma_2_2: requires a, b >= 1");
  require(a0 >= 0 && b0 >= 0 && a0 < p && b0 < p, "check_lemma_2_2: digits must lie in [0, p-1]");
  const ExactInt lhs = choose(a * p + a0, b * p + b0);
  const ExactInt rhs = choose(ExactInt(a), ExactInt(b)) * choose(ExactInt(a0), ExactInt(b0));
  return congruent(Rational(lhs), Rational(rhs), PrimePower(p, 1), "check_lemma_2_2");
}

CongruenceOutcome check_kazandzidis(std::int64_t m, std::int64_t n, const ExactInt& p) {
  require(m >= 1 && n >= 1, "check_kazandzidis: requires m, n >= 1");
  require(p >= 5, "check_kazandzidis: requires p >= 5");
  const ExactInt lhs = choose(m * p, n * p);
  const ExactInt rhs = choose(ExactInt(m), ExactInt(n));
  return congruent(Rational(lhs), Rational(rhs), PrimePower(p, 3), "check_kazandzidis");
}

CongruenceOutcome check_lemma_2_4(std::int64_t k, const ExactInt& p) {
  require(k >= 1 && k <= p - 1, "check_lemma_2_4: requires 1 <= k <= p-1");
  const ExactInt lhs =
      choose(ExactInt(2 * k), ExactInt(k)) * choose(2 * (p - k), p - k);
  Rational rhs(2 * p, k);
  if (2 * k < p) rhs = -rhs;
  return congruent(Rational(lhs), rhs, PrimePower(p, 2), "check_lemma_2_4");
}

CongruenceOutcome check_lemma_2_5(SpecialNumbers& sn, const Rational& a, std::int64_t k,
                                  const ExactInt& p) {
  require(k >= 1 && k <= p - 2, "check_lemma_2_5: requires 1 <= k <= p-2");
  const ExactInt ap = frac_residue(a, p);  // throws when a is not p-integral
  require(ap != 0, "check_lemma_2_5: requires a != 0 (mod p)");
  const auto bound = ap.convert_to<std::int64_t>();
  Rational lhs = 0;
  for (std::int64_t r = 1; r <= bound; ++r) {
    const Rational term(1, pow_int(ExactInt(r), k));
    lhs += (r & 1) ? -term : term;
  }
  const std::int64_t pk = (p - k).convert_to<std::int64_t>();
  Rational rhs = -Rational(pow_int(ExactInt(2), pk) - 1) * sn.bernoulli(pk) / ExactInt(pk);
  Rational euler_part = sn.euler_poly(static_cast<std::size_t>(pk - 1), -a) / 2;
  rhs += ((bound + k) & 1) ? -euler_part : euler_part;
  return congruent(lhs, rhs, PrimePower(p, 1), "check_lemma_2_5");
}

CongruenceOutcome check_lemma_2_6(std::int64_t m, std::int64_t k, const ExactInt& p) {
  require(m >= 1, "check_lemma_2_6: requires m >= 1");
  require(2 * k > p && k < p, "check_lemma_2_6: requires p/2 < k < p");
  const ExactInt lhs = choose(2 * m * p + 2 * k, m * p + k);
  const ExactInt rhs = ExactInt(2 * m + 1) * choose(ExactInt(2 * m), ExactInt(m)) *
                       choose(ExactInt(2 * k), ExactInt(k));
  return congruent(Rational(lhs), Rational(rhs), PrimePower(p, 2), "check_lemma_2_6");
}

bool check_lemma_2_8(std::int64_t m, std::int64_t r, std::int64_t k, const ExactInt& p) {
  require(m >= 1 && r >= 1 && k >= 0, "check_lemma_2_8: requires m, r >= 1 and k >= 0");
  require(is_odd_prime(p), "check_lemma_2_8: p must be an odd prime");
  const ExactInt mpr = m * pow_int(p, r);
  const ExactInt mpr1 = m * pow_int(p, r - 1);

  Rational prod = 1;
  for (std::int64_t i = 1; i <= k; ++i)
    if (ExactInt(i) % p != 0) prod *= 1 - Rational(mpr, i);
  const std::int64_t sign_exp = k - k / p.convert_to<std::int64_t>();
  Rational rhs = Rational(choose(mpr1 - 1, ExactInt(k / p.convert_to<std::int64_t>()))) * prod;
  if (sign_exp & 1) rhs = -rhs;
  if (Rational(choose(mpr - 1, ExactInt(k))) != rhs) return false;

  // companion identity for C(mp^r, kp), gated on its left side being formed
  if (k >= 1 && k * p <= mpr) {
    Rational prod2 = 1;
    const ExactInt top = k * p - 1;
    for (ExactInt i = 1; i <= top; ++i)
      if (i % p != 0) prod2 *= 1 - Rational(mpr, i);
    Rational rhs2 = Rational(choose(mpr1, ExactInt(k))) * prod2;
    if ((k * (p - 1)) % 2 != 0) rhs2 = -rhs2;
    if (Rational(choose(mpr, ExactInt(k) * p)) != rhs2) return false;
  }
  return true;
}

CongruenceOutcome check_lemma_2_9(std::int64_t m, std::int64_t n) {
  require(m >= 1 && n >= 1, "check_lemma_2_9: requires m, n >= 1");
  const ExactInt lhs = choose(ExactInt(3 * m), ExactInt(3 * n));
  const ExactInt rhs = choose(ExactInt(m), ExactInt(n)) *
                       (1 + 9 * ExactInt(m) * n * n - 9 * ExactInt(m) * m * n);
  return congruent(Rational(lhs), Rational(rhs), PrimePower(3, 3), "check_lemma_2_9");
}

CongruenceOutcome check_lemma_2_10(std::int64_t m, std::int64_t r, std::int64_t s,
                                   const ExactInt& p) {
  require(m >= 1 && r >= 1, "check_lemma_2_10: requires m, r >= 1");
  const ExactInt upper = m * pow_int(p, r - 1);
  require(s >= 0 && s < upper, "check_lemma_2_10: requires 0 <= s <= mp^(r-1) - 1");
  const ExactInt lhs = choose(m * pow_int(p, r), s * p);
  const ExactInt rhs = choose(upper, ExactInt(s));
  return congruent(Rational(lhs), Rational(rhs), PrimePower(p, static_cast<unsigned>(2 * r)),
                   "check_lemma_2_10");
}

CongruenceOutcome check_lemma_2_11(std::int64_t m, std::int64_t r, std::int64_t s,
                                   const ExactInt& p) {
  require(m >= 1 && r >= 1, "check_lemma_2_11: requires m, r >= 1");
  const ExactInt upper = m * pow_int(p, r - 1);
  require(s >= 1 && s <= upper, "check_lemma_2_11: requires 1 <= s <= mp^(r-1)");
  const ExactInt lhs = choose(upper, ExactInt(s)) * choose(2 * s * p, ExactInt(s) * p) *
                       choose(2 * (upper - s) * p, (upper - s) * p);
  ExactInt rhs;
  if (r == 1 && p == 3) {
    rhs = choose(ExactInt(m), ExactInt(s)) * choose(ExactInt(2 * s), ExactInt(s)) *
          choose(ExactInt(2 * (m - s)), ExactInt(m - s)) * (1 + 9 * ExactInt(m));
  } else {
    rhs = choose(upper, ExactInt(s)) * choose(ExactInt(2 * s), ExactInt(s)) *
          choose(2 * (upper - s), upper - s);
  }
  return congruent(Rational(lhs), Rational(rhs), PrimePower(p, static_cast<unsigned>(r + 2)),
                   "check_lemma_2_11");
}

CongruenceOutcome check_lemma_2_12_outcome(std::int64_t m, std::int64_t r, std::int64_t k,
                                           const ExactInt& p) {
  require(m >= 1 && r >= 1, "check_lemma_2_12: requires m, r >= 1");
  const ExactInt n = m * pow_int(p, r);
  require(k >= 0 && k <= n, "check_lemma_2_12: requires 0 <= k <= mp^r");
  const ExactInt value =
      ExactInt(k) * choose(ExactInt(2 * k), ExactInt(k)) * choose(2 * (n - k), n - k);
  return congruent(Rational(value), Rational(0), PrimePower(p, static_cast<unsigned>(r)),
                   "check_lemma_2_12");
}

bool check_lemma_2_12(std::int64_t m, std::int64_t r, std::int64_t k, const ExactInt& p) {
  return check_lemma_2_12_outcome(m, r, k, p).holds;
}

CongruenceOutcome check_lemma_2_13(std::int64_t m, std::int64_t r, std::int64_t s,
                                   const ExactInt& p) {
  require(m >= 1 && r >= 1, "check_lemma_2_13: requires m, r >= 1");
  const ExactInt upper = m * pow_int(p, r - 1);
  require(s >= 0 && s < upper, "check_lemma_2_13: requires 0 <= s <= mp^(r-1) - 1");
  const ExactInt half = (p - 1) / 2;
  const ExactInt t = upper - s - 1;
  const ExactInt lhs = choose(2 * s * p + p - 1, s * p + half) * choose(2 * t * p + p - 1, t * p + half);
  const ExactInt rhs = choose(ExactInt(2 * s), ExactInt(s)) * choose(2 * t, t);
  return congruent(Rational(lhs), Rational(rhs), PrimePower(p, static_cast<unsigned>(r)),
                   "check_lemma_2_13");
}

CongruenceOutcome check_lemma_2_14(std::int64_t m, std::int64_t r, std::int64_t s,
                                   const ExactInt& p) {
  require(m >= 1 && r >= 1, "check_lemma_2_14: requires m, r >= 1");
  const ExactInt upper = m * pow_int(p, r - 1);
  require(s >= 0 && s < upper, "check_lemma_2_14: requires 0 <= s <= mp^(r-1) - 1");
  const ExactInt n = m * pow_int(p, r);
  const ExactInt lhs =
      choose(n, s * p) * choose(2 * s * p, ExactInt(s) * p) * choose(2 * n - 2 * s * p, n - s * p);
  const ExactInt rhs = choose(upper, ExactInt(s)) * choose(ExactInt(2 * s), ExactInt(s)) *
                       choose(2 * upper - 2 * s, upper - s);
  return congruent(Rational(lhs), Rational(rhs), PrimePower(p, static_cast<unsigned>(2 * r)),
                   "check_lemma_2_14");
}

CongruenceOutcome check_lemma_2_15(std::int64_t n, std::int64_t k, const ExactInt& p) {
  const std::int64_t pi = p.convert_to<std::int64_t>();
  const std::int64_t n1 = n / pi, n0 = n % pi, k1 = k / pi, k0 = k % pi;
  require(n1 >= 1 && k1 >= 1, "check_lemma_2_15: requires n1, k1 >= 1 in base-p split");
  const ExactInt lhs = choose(ExactInt(n), ExactInt(k));
  const ExactInt rhs =
      choose(ExactInt(n1), ExactInt(k1)) *
      ((1 + ExactInt(n1)) * choose(ExactInt(n0), ExactInt(k0)) -
       (ExactInt(n1) + k1) * choose(ExactInt(n0) - p, ExactInt(k0)) -
       ExactInt(k1) * choose(ExactInt(n0) - p, ExactInt(k0) + p));
  return congruent(Rational(lhs), Rational(rhs), PrimePower(p, 2), "check_lemma_2_15");
}

CongruenceOutcome check_lemma_2_16(const ExactInt& p) {
  require(is_odd_prime(p), "check_lemma_2_16: p must be an odd prime");
  const std::int64_t half = ((p - 1) / 2).convert_to<std::int64_t>();
  Rational sum = 0;
  Rational weight = 1;  // C(-1/2, t), updated in place
  for (std::int64_t t = 0; t <= half; ++t) {
    const ExactInt bracket = choose(half + t, ExactInt(t)) - choose(p + half + t, p + t);
    Rational term = Rational(bracket) * weight * weight;
    sum += (t & 1) ? -term : term;
    weight *= Rational(-1 - 2 * t, 2 * (t + 1));
  }
  return congruent(sum, Rational(0), PrimePower(p, 2), "check_lemma_2_16");
}

CongruenceOutcome check_harmonic_2_3_outcome(std::int64_t s, const ExactInt& p) {
  require(s >= 1, "check_harmonic_2_3: requires s >= 1");
  require(is_odd_prime(p), "check_harmonic_2_3: p must be an odd prime");
  // accumulate num/den without reduction; den stays coprime to p, so the
  // valuation of the sum is ord_p(num)
  ExactInt num = 0, den = 1;
  const ExactInt top = s * p - 1;
  for (ExactInt i = 1; i <= top; ++i) {
    if (i % p == 0) continue;
    num = num * i + den;
    den *= i;
  }
  const unsigned required = static_cast<unsigned>(ord(ExactInt(s), p).value() + 1);
  return congruent(Rational(num, den), Rational(0), PrimePower(p, required),
                   "check_harmonic_2_3");
}

bool check_harmonic_2_3(std::int64_t s, const ExactInt& p) {
  return check_harmonic_2_3_outcome(s, p).holds;
}

}  // namespace clf
