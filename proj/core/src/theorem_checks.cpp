#include "clf/theorem_checks.hpp"

#include <boost/multiprecision/integer.hpp>

#include <string>

namespace clf {

namespace {

ExactInt pow_int(const ExactInt& base, std::int64_t e) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw PreconditionViolated(msg);
}

std::size_t to_index(const ExactInt& v, const char* who) {
  if (v < 0 || v > 1'000'000'000)
    throw PreconditionViolated(std::string(who) + ": index " + v.str() + " out of range");
  return v.convert_to<std::size_t>();
}

int sign_half(const ExactInt& p) {  // (-1)^((p-1)/2)
  return ((p - 1) / 2) % 2 == 0 ? 1 : -1;
}

}  // namespace

CongruenceOutcome check_1_8(Sequences& seq, std::size_t n, const ExactInt& p) {
  require(is_odd_prime(p), "check_1_8: p must be an odd prime");
  const std::size_t pi = p.convert_to<std::size_t>();
  ExactInt rhs = 1;
  std::size_t rest = n;
  do {
    rhs *= seq.P(rest % pi);
    rest /= pi;
  } while (rest != 0);
  return congruent(Rational(seq.P(n)), Rational(rhs), PrimePower(p, 1), "check_1_8");
}

CongruenceOutcome check_1_9(Sequences& seq, std::size_t n, const ExactInt& p) {
  require(is_odd_prime(p), "check_1_9: p must be an odd prime");
  require(ExactInt(n) <= p - 1, "check_1_9: requires 0 <= n <= p-1");
  ExactInt rhs = pow_int(ExactInt(128), static_cast<std::int64_t>(n)) *
                 seq.P(to_index(p - 1 - n, "check_1_9"));
  if (sign_half(p) < 0) rhs = -rhs;
  return congruent(Rational(seq.P(n)), Rational(rhs), PrimePower(p, 1), "check_1_9");
}

CongruenceOutcome check_1_10_outcome(Sequences& seq, std::int64_t m, std::int64_t r,
                                     const ExactInt& p) {
  require(m >= 1 && r >= 1, "check_1_10: requires m, r >= 1");
  const std::size_t hi = to_index(m * pow_int(p, r), "check_1_10");
  const std::size_t lo = to_index(m * pow_int(p, r - 1), "check_1_10");
  return congruent(Rational(seq.P(hi)), Rational(seq.P(lo)),
                   PrimePower(p, static_cast<unsigned>(r)), "check_1_10");
}

bool check_1_10(Sequences& seq, std::int64_t m, std::int64_t r, const ExactInt& p) {
  return check_1_10_outcome(seq, m, r, p).holds;
}

CongruenceOutcome check_1_11_outcome(Sequences& seq, std::int64_t m, std::int64_t r,
                                     const ExactInt& p) {
  require(m >= 1 && r >= 1, "check_1_11: requires m, r >= 1");
  const std::size_t hi = to_index(m * pow_int(p, r), "check_1_11");
  const std::size_t lo = to_index(m * pow_int(p, r - 1), "check_1_11");
  return congruent(Rational(seq.S(hi)), Rational(seq.S(lo)),
                   PrimePower(p, static_cast<unsigned>(2 * r)), "check_1_11");
}

bool check_1_11(Sequences& seq, std::int64_t m, std::int64_t r, const ExactInt& p) {
  return check_1_11_outcome(seq, m, r, p).holds;
}

CongruenceOutcome check_P_lift_outcome(Sequences& seq, std::int64_t m, std::int64_t r,
                                       const ExactInt& p) {
  require(m >= 1 && r >= 1, "check_P_lift: requires m, r >= 1");
  const std::size_t hi = to_index(m * pow_int(p, r), "check_P_lift");
  const std::size_t lo = to_index(m * pow_int(p, r - 1), "check_P_lift");
  const ExactInt totient = pow_int(p, r) - pow_int(p, r - 1);
  const ExactInt lift = boost::multiprecision::pow(
      ExactInt(2), (ExactInt(m) * totient).convert_to<unsigned>());
  return congruent(Rational(seq.P(hi)), Rational(lift * seq.P(lo)),
                   PrimePower(p, static_cast<unsigned>(2 * r)), "check_P_lift");
}

bool check_P_lift(Sequences& seq, std::int64_t m, std::int64_t r, const ExactInt& p) {
  return check_P_lift_outcome(seq, m, r, p).holds;
}

CongruenceOutcome check_1_13(Sequences& seq, const Rational& n, const ExactInt& p) {
  require(is_odd_prime(p), "check_1_13: p must be an odd prime");
  const ExactInt n_res = frac_residue(n, p);  // throws when n is not p-integral
  require(n_res != 0, "check_1_13: requires n != 0 (mod p)");
  require((n_res + 16) % p != 0, "check_1_13: requires n != -16 (mod p)");
  const std::int64_t terms = p.convert_to<std::int64_t>();
  seq.prefill_S(static_cast<std::size_t>(terms - 1));

  const Rational base_l = n + 16;
  Rational lhs = 0, pow_l = 1;
  ExactInt central = 1;  // C(2k, k)
  for (std::int64_t k = 0; k < terms; ++k) {
    lhs += Rational(central * seq.S(static_cast<std::size_t>(k))) / pow_l;
    pow_l *= base_l;
    central = central * 2 * (2 * k + 1) / (k + 1);
  }

  const Rational n2 = n * n;
  Rational sum = 0, pow_r = 1;
  central = 1;
  ExactInt central4 = 1;  // C(4k, 2k)
  for (std::int64_t k = 0; k < terms; ++k) {
    sum += Rational(central * central * central4) / pow_r;
    pow_r *= n2;
    central = central * 2 * (2 * k + 1) / (k + 1);
    central4 = central4 * 2 * (4 * k + 1) * (4 * k + 3) / ((k + 1) * (2 * k + 1));
  }
  const Rational rhs = legendre(n * (n + 16), p) * sum;
  return congruent(lhs, rhs, PrimePower(p, 1), "check_1_13");
}

std::vector<ScanRecord> scan_1_14(Sequences& seq, const ExactInt& p, std::int64_t r_max) {
  require(is_odd_prime(p), "scan_1_14: p must be an odd prime");
  require(p % 8 == 5 || p % 8 == 7, "scan_1_14: requires p == 5, 7 (mod 8)");
  require(r_max >= 1, "scan_1_14: requires r_max >= 1");
  std::vector<ScanRecord> out;
  out.reserve(static_cast<std::size_t>(r_max));
  for (std::int64_t r = 1; r <= r_max; ++r) {
    const std::size_t idx = to_index((pow_int(p, r) - 1) / 2, "scan_1_14");
    ScanRecord rec;
    rec.r = r;
    rec.ord_S = ord(seq.S(idx), p);
    rec.ord_f = ord(seq.F(idx), p);
    rec.conjecture_holds = rec.ord_S >= Valuation(r) && rec.ord_f >= Valuation(r);
    out.push_back(rec);
  }
  return out;
}

CongruenceOutcome check_thm_3_1(Sequences& seq, SpecialNumbers& sn, std::int64_t n,
                                const ExactInt& p) {
  require(n >= 1, "check_thm_3_1: requires n >= 1");
  require(is_odd_prime(p), "check_thm_3_1: p must be an odd prime");
  const std::size_t un = static_cast<std::size_t>(n);
  const std::size_t np = to_index(ExactInt(n) * p, "check_thm_3_1");
  const Rational diff(seq.S(np) - seq.S(un));
  if (ExactInt(n) % p == 0) {
    const unsigned req = static_cast<unsigned>(3 + ord(ExactInt(n), p).value());
    return congruent(diff, Rational(0), PrimePower(p, req), "check_thm_3_1");
  }
  if (p == 3)
    return congruent(diff, Rational(9 * ExactInt(n - 1) * seq.S(un)), PrimePower(3, 3),
                     "check_thm_3_1");
  const ExactInt rhs = 8 * ExactInt(n) * n * seq.S(un - 1) * sign_half(p) * p * p *
                       sn.euler_number(to_index(p - 3, "check_thm_3_1"));
  return congruent(diff, Rational(rhs), PrimePower(p, 3), "check_thm_3_1");
}

std::array<CongruenceOutcome, 3> check_cor_3_1(Sequences& seq, SpecialNumbers& sn,
                                               const ExactInt& p) {
  require(p > 3, "check_cor_3_1: requires p > 3");
  require(is_odd_prime(p), "check_cor_3_1: p must be an odd prime");
  const ExactInt e = sn.euler_number(to_index(p - 3, "check_cor_3_1"));
  const ExactInt common = sign_half(p) * p * p * e;
  const std::size_t pi = to_index(p, "check_cor_3_1");
  const PrimePower mod(p, 3);
  return {
      congruent(Rational(seq.S(pi)), Rational(4 + 8 * common), mod, "check_cor_3_1/S_p"),
      congruent(Rational(seq.S(2 * pi)), Rational(20 + 128 * common), mod, "check_cor_3_1/S_2p"),
      congruent(Rational(seq.S(3 * pi)), Rational(112 + 1440 * common), mod, "check_cor_3_1/S_3p"),
  };
}

CongruenceOutcome check_thm_3_2(Sequences& seq, std::int64_t m, std::int64_t r, const ExactInt& p) {
  require(m >= 1 && r >= 1, "check_thm_3_2: requires m, r >= 1");
  const ExactInt mpr = m * pow_int(p, r);
  const std::size_t hi = to_index(mpr + 1, "check_thm_3_2");
  const std::size_t lo = to_index(m * pow_int(p, r - 1), "check_thm_3_2");
  return congruent(Rational(seq.S(hi)), Rational(4 * (mpr + 1) * seq.S(lo)),
                   PrimePower(p, static_cast<unsigned>(2 * r)), "check_thm_3_2");
}

CongruenceOutcome check_thm_3_3(Sequences& seq, std::int64_t m, std::int64_t r, const ExactInt& p) {
  require(m >= 1 && r >= 1, "check_thm_3_3: requires m, r >= 1");
  const std::size_t hi = to_index(m * pow_int(p, r) - 1, "check_thm_3_3");
  const std::size_t lo = to_index(m * pow_int(p, r - 1) - 1, "check_thm_3_3");
  ExactInt rhs = seq.S(lo);
  if (sign_half(p) < 0) rhs = -rhs;
  return congruent(Rational(seq.S(hi)), Rational(rhs),
                   PrimePower(p, static_cast<unsigned>(r)), "check_thm_3_3");
}

CongruenceOutcome check_thm_3_4(Sequences& seq, SpecialNumbers& sn, std::int64_t n,
                                const ExactInt& p) {
  require(n >= 1, "check_thm_3_4: requires n >= 1");
  require(is_odd_prime(p), "check_thm_3_4: p must be an odd prime");
  const std::size_t un = static_cast<std::size_t>(n);
  const std::size_t hi = to_index(ExactInt(n) * p + 1, "check_thm_3_4");
  if (p == 3) {
    const ExactInt rhs = (4 + 12 * ExactInt(n) - 9 * ExactInt(n) * n) * seq.S(un);
    return congruent(Rational(seq.S(hi)), Rational(rhs), PrimePower(3, 3), "check_thm_3_4");
  }
  const ExactInt e = sn.euler_number(to_index(p - 3, "check_thm_3_4"));
  const ExactInt rhs = 4 * (ExactInt(n) * p + 1) * seq.S(un) +
                       32 * ExactInt(n) * n * seq.S(un - 1) * sign_half(p) * (e - 1) * p * p;
  return congruent(Rational(seq.S(hi)), Rational(rhs), PrimePower(p, 3), "check_thm_3_4");
}

CongruenceOutcome check_cor_3_2(Sequences& seq, SpecialNumbers& sn, const ExactInt& p) {
  require(p > 3, "check_cor_3_2: requires p > 3");
  require(is_odd_prime(p), "check_cor_3_2: p must be an odd prime");
  const ExactInt e = sn.euler_number(to_index(p - 3, "check_cor_3_2"));
  const ExactInt rhs = 16 + 16 * p + 32 * sign_half(p) * (e - 1) * p * p;
  const std::size_t idx = to_index(p + 1, "check_cor_3_2");
  return congruent(Rational(seq.S(idx)), Rational(rhs), PrimePower(p, 3), "check_cor_3_2");
}

Theorem35Result check_thm_3_5(Sequences& seq, const ExactInt& p) {
  require(is_odd_prime(p), "check_thm_3_5: p must be an odd prime");
  require(p % 8 == 5 || p % 8 == 7, "check_thm_3_5: requires p == 5, 7 (mod 8)");
  const std::size_t idx = to_index((p * p - 1) / 2, "check_thm_3_5");
  Theorem35Result out;
  out.ord_S = ord(seq.S(idx), p);
  out.ord_f = ord(seq.F(idx), p);
  out.holds = out.ord_S >= Valuation(2) && out.ord_f >= Valuation(2);
  return out;
}

CongruenceOutcome check_eq_3_1(Sequences& seq, std::int64_t n) {
  require(n >= 1, "check_eq_3_1: requires n >= 1");
  require(n % 3 != 0, "check_eq_3_1: requires 3 not dividing n");
  const std::size_t un = static_cast<std::size_t>(n);
  const ExactInt rhs = legendre(Rational(n), 3) * seq.S(un - 1);
  return congruent(Rational(seq.S(un)), Rational(rhs), PrimePower(3, 1), "check_eq_3_1");
}

CongruenceOutcome check_eq_3_4(std::int64_t s, const ExactInt& p) {
  require(s >= 0, "check_eq_3_4: requires s >= 0");
  require(is_odd_prime(p), "check_eq_3_4: p must be an odd prime");
  const ExactInt upper = (p * p - 1) / 2;
  const std::int64_t half = ((p - 1) / 2).convert_to<std::int64_t>();
  ExactInt sum = 0;
  for (std::int64_t t = 0; t <= half; ++t) {
    const ExactInt c = choose(upper, s * p + t);
    sum += c * c * c;
  }
  return congruent(Rational(sum), Rational(0), PrimePower(p, 2), "check_eq_3_4");
}

CongruenceOutcome check_S_mod_p_r_plus_2(Sequences& seq, SpecialNumbers& sn, std::int64_t m,
                                         std::int64_t r, const ExactInt& p) {
  require(m >= 1 && r >= 1, "check_S_mod_p_r_plus_2: requires m, r >= 1");
  const std::int64_t n = (ExactInt(m) * pow_int(p, r - 1)).convert_to<std::int64_t>();
  CongruenceOutcome out = check_thm_3_1(seq, sn, n, p);
  out.label = "check_S_mod_p_r_plus_2";
  return out;
}

}  // namespace clf
