#include "clf/exact_arith.hpp"

#include <boost/multiprecision/integer.hpp>

#include <array>
#include <utility>

namespace clf {

namespace {

constexpr std::array<unsigned, 12> kMillerRabinBases = {2,  3,  5,  7,  11, 13,
                                                        17, 19, 23, 29, 31, 37};

bool strong_probable_prime(const ExactInt& n, const ExactInt& base) {
  // n odd, n > 2, base already reduced into (1, n-1)
  ExactInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  ExactInt x = boost::multiprecision::powm(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(const ExactInt& n) {
  if (n < 2) return false;
  for (unsigned q : kMillerRabinBases) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  for (unsigned b : kMillerRabinBases) {
    if (!strong_probable_prime(n, ExactInt(b))) return false;
  }
  return true;
}

bool is_odd_prime(const ExactInt& p) { return p >= 3 && is_prime(p); }

PrimePower::PrimePower(ExactInt prime, unsigned exponent)
    : p_(std::move(prime)), k_(exponent) {
  if (!is_odd_prime(p_))
    throw PreconditionViolated("PrimePower: p must be an odd prime, got " + p_.str());
  if (k_ < 1) throw PreconditionViolated("PrimePower: exponent must be >= 1");
  modulus_ = boost::multiprecision::pow(p_, k_);
}

long long Valuation::value() const {
  if (infinite_) throw std::logic_error("Valuation: INFINITE has no finite value");
  return value_;
}

std::string Valuation::str() const {
  return infinite_ ? "inf" : std::to_string(value_);
}

Valuation ord(const ExactInt& x, const ExactInt& p) {
  if (!is_prime(p)) throw PreconditionViolated("ord: p must be prime, got " + p.str());
  if (x == 0) return Valuation::infinite();
  ExactInt m = x < 0 ? ExactInt(-x) : x;
  long long v = 0;
  ExactInt q, r;
  for (;;) {
    boost::multiprecision::divide_qr(m, p, q, r);
    if (r != 0) break;
    m = q;
    ++v;
  }
  return Valuation(v);
}

Valuation ord(const Rational& q, const ExactInt& p) {
  if (q == 0) return Valuation::infinite();
  const Valuation num = ord(numerator(q), p);
  const Valuation den = ord(denominator(q), p);
  return Valuation(num.value() - den.value());
}

ExactInt mod_inverse(const ExactInt& a, const ExactInt& m) {
  // extended Euclid; invariants r = a*x (mod m) on the (r, x) pairs
  ExactInt r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  ExactInt x0 = 0, x1 = 1;
  while (r1 != 0) {
    const ExactInt q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    x0 -= q * x1;
    std::swap(x0, x1);
  }
  if (r0 != 1)
    throw DenominatorNotInvertible("mod_inverse: gcd(" + a.str() + ", " + m.str() + ") != 1");
  if (x0 < 0) x0 += m;
  return x0;
}

ExactInt residue(const Rational& q, const PrimePower& pp) {
  const ExactInt& m = pp.modulus();
  const ExactInt den = denominator(q);
  if (den % pp.prime() == 0)
    throw DenominatorNotInvertible("residue: denominator " + den.str() +
                                   " not invertible mod " + pp.prime().str());
  ExactInt r = numerator(q) % m;
  if (den != 1) r = r * mod_inverse(den, m) % m;
  if (r < 0) r += m;
  return r;
}

namespace {

std::optional<ExactInt> try_residue(const Rational& q, const PrimePower& pp) {
  if (denominator(q) % pp.prime() == 0) return std::nullopt;
  return residue(q, pp);
}

}  // namespace

CongruenceOutcome congruent(const Rational& a, const Rational& b, const PrimePower& pp,
                            std::string label) {
  const Rational diff = a - b;
  if (denominator(diff) % pp.prime() == 0)
    throw DenominatorNotInvertible("congruent[" + label + "]: (lhs - rhs) has denominator " +
                                   denominator(diff).str() + ", divisible by " +
                                   pp.prime().str());
  CongruenceOutcome out;
  out.label = std::move(label);
  out.lhs = a;
  out.rhs = b;
  out.modulus = pp.modulus();
  out.prime_power = pp;
  out.required_valuation = pp.exponent();
  out.achieved_valuation = ord(diff, pp.prime());
  out.lhs_residue = try_residue(a, pp);
  out.rhs_residue = try_residue(b, pp);
  out.holds = out.achieved_valuation >= Valuation(out.required_valuation);
  return out;
}

CongruenceOutcome congruent_mod(const Rational& lhs, const Rational& rhs, const ExactInt& modulus,
                                std::string label) {
  if (modulus < 1) throw PreconditionViolated("congruent_mod: modulus must be positive");
  CongruenceOutcome out;
  out.label = std::move(label);
  out.lhs = lhs;
  out.rhs = rhs;
  out.modulus = modulus;
  const Rational diff = lhs - rhs;
  if (denominator(diff) != 1)
    throw PreconditionViolated("congruent_mod[" + out.label + "]: difference is not integral");
  const ExactInt d = numerator(diff);
  out.holds = d % modulus == 0;
  if (d == 0) out.achieved_valuation = Valuation::infinite();
  if (denominator(lhs) == 1) {
    ExactInt r = numerator(lhs) % modulus;
    if (r < 0) r += modulus;
    out.lhs_residue = r;
  }
  if (denominator(rhs) == 1) {
    ExactInt r = numerator(rhs) % modulus;
    if (r < 0) r += modulus;
    out.rhs_residue = r;
  }
  return out;
}

Rational binom(const Rational& x, std::int64_t k) {
  if (k < 0) return Rational(0);
  if (k == 0) return Rational(1);
  if (denominator(x) == 1) {
    const ExactInt n = numerator(x);
    return Rational(choose(n, ExactInt(k)));
  }
  Rational num(1);
  for (std::int64_t i = 0; i < k; ++i) num *= x - i;
  ExactInt fact(1);
  for (std::int64_t i = 2; i <= k; ++i) fact *= i;
  return num / fact;
}

ExactInt choose(const ExactInt& n, const ExactInt& k) {
  if (k < 0) return 0;
  if (n < 0) {
    // C(n,k) = (-1)^k C(k-n-1, k)
    const ExactInt flipped = choose(k - n - 1, k);
    return (k & 1) ? -flipped : flipped;
  }
  if (k > n) return 0;
  ExactInt kk = k;
  if (kk > n - kk) kk = n - kk;
  const auto steps = static_cast<std::uint64_t>(kk);
  ExactInt result(1);
  // prefix after i steps equals C(n-kk+i, i), so each division is exact
  for (std::uint64_t i = 1; i <= steps; ++i) {
    result *= n - kk + i;
    result /= i;
  }
  return result;
}

int legendre(const Rational& a, const ExactInt& p) {
  if (!is_odd_prime(p)) throw PreconditionViolated("legendre: p must be an odd prime");
  const ExactInt r = residue(a, PrimePower(p, 1));
  if (r == 0) return 0;
  const ExactInt e = boost::multiprecision::powm(r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

ExactInt frac_residue(const Rational& a, const ExactInt& p) {
  return residue(a, PrimePower(p, 1));
}

}  // namespace clf
