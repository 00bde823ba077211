#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace clf {

/// Arbitrary-precision signed integer. Exact in all arithmetic; round-trips
/// through its decimal representation.
using ExactInt = boost::multiprecision::cpp_int;

/// Reduced fraction of two ExactInt with positive denominator. The backing
/// type keeps gcd(|num|, den) = 1 and den > 0 canonical at all times.
using Rational = boost::multiprecision::cpp_rational;

struct DenominatorNotInvertible : std::domain_error {
  using std::domain_error::domain_error;
};
struct NonIntegralRecurrenceStep : std::logic_error {
  using std::logic_error::logic_error;
};
struct PreconditionViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

/// Deterministic primality test. Trial division over a small prime table,
/// then strong-pseudoprime tests to bases 2..37, which decide every
/// candidate below 3.3e24 (far beyond 2^64).
bool is_prime(const ExactInt& n);

/// True for primes p >= 3.
bool is_odd_prime(const ExactInt& p);

/// An odd prime p together with an exponent k >= 1; carries the modulus p^k.
class PrimePower {
 public:
  PrimePower(ExactInt prime, unsigned exponent);

  const ExactInt& prime() const { return p_; }
  unsigned exponent() const { return k_; }
  const ExactInt& modulus() const { return modulus_; }

 private:
  ExactInt p_;
  ExactInt modulus_;
  unsigned k_ = 0;
};

/// A p-adic valuation: a (possibly negative) integer or INFINITE, where
/// INFINITE compares greater than every finite value.
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr Valuation(long long v) : value_(v) {}  // NOLINT: implicit by design

  static constexpr Valuation infinite() {
    Valuation v;
    v.infinite_ = true;
    return v;
  }

  constexpr bool is_infinite() const { return infinite_; }

  /// Finite value; throws if INFINITE.
  long long value() const;

  friend constexpr bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_)
      return (a.infinite_ ? 1 : 0) <=> (b.infinite_ ? 1 : 0);
    return a.value_ <=> b.value_;
  }

  /// "inf" or the decimal value.
  std::string str() const;

 private:
  long long value_ = 0;
  bool infinite_ = false;
};

/// Verdict of one congruence (or plain divisibility) check. `modulus` is the
/// numeric modulus; `prime_power` is engaged whenever the modulus is a p^k,
/// in which case holds <=> achieved_valuation >= required_valuation with
/// achieved_valuation = ord_p(lhs - rhs) (INFINITE when the sides are equal).
struct CongruenceOutcome {
  std::string label;
  Rational lhs;
  Rational rhs;
  ExactInt modulus;
  std::optional<PrimePower> prime_power;
  long long required_valuation = 0;
  Valuation achieved_valuation;
  std::optional<ExactInt> lhs_residue;  // absent when the side is not p-integral
  std::optional<ExactInt> rhs_residue;
  bool holds = false;
};

/// ord_p of an integer; ord(0) = INFINITE.
Valuation ord(const ExactInt& x, const ExactInt& p);

/// ord_p of a rational: ord(numerator) - ord(denominator).
Valuation ord(const Rational& q, const ExactInt& p);

/// Modular inverse via extended gcd; throws DenominatorNotInvertible when
/// gcd(a, m) != 1.
ExactInt mod_inverse(const ExactInt& a, const ExactInt& m);

/// Unique residue of q in [0, p^k). Requires p not dividing den(q).
ExactInt residue(const Rational& q, const PrimePower& pp);

/// a == b (mod p^k) in the localization-at-p sense: ord_p(a - b) >= k.
/// Requires p not dividing den(a - b).
CongruenceOutcome congruent(const Rational& a, const Rational& b, const PrimePower& pp,
                            std::string label);

/// lhs == rhs modulo a general positive integer (plain divisibility of the
/// difference); used where the modulus is not a prime power.
CongruenceOutcome congruent_mod(const Rational& lhs, const Rational& rhs, const ExactInt& modulus,
                                std::string label);

/// Generalized binomial coefficient x(x-1)...(x-k+1)/k!; 0 for k < 0.
Rational binom(const Rational& x, std::int64_t k);

/// Integer binomial via the factorial-free running product. Negative upper
/// argument maps through C(n,k) = (-1)^k C(k-n-1,k).
ExactInt choose(const ExactInt& n, const ExactInt& k);

/// Legendre symbol of a mod p by Euler's criterion. Requires p odd prime and
/// p not dividing den(a).
int legendre(const Rational& a, const ExactInt& p);

/// <a>_p: the unique residue in {0,...,p-1} with a == <a>_p (mod p).
ExactInt frac_residue(const Rational& a, const ExactInt& p);

}  // namespace clf
