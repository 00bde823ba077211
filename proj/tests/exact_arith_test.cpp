#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "clf/exact_arith.hpp"

using namespace clf;

namespace {

Rational random_rational(std::mt19937_64& rng, const ExactInt& p) {
  std::uniform_int_distribution<int> num(-500, 500);
  std::uniform_int_distribution<int> den(1, 500);
  for (;;) {
    const int d = den(rng);
    if (ExactInt(d) % p == 0) continue;
    return Rational(num(rng), d);
  }
}

}  // namespace

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(47));
  CHECK(is_prime(ExactInt("2305843009213693951")));  // 2^61 - 1
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  CHECK_FALSE(is_prime(3215031751LL));  // strong pseudoprime to bases 2,3,5,7
  CHECK(is_odd_prime(3));
  CHECK_FALSE(is_odd_prime(2));
  CHECK_FALSE(is_odd_prime(15));
}

TEST_CASE("prime power construction") {
  const PrimePower pp(5, 3);
  CHECK(pp.prime() == 5);
  CHECK(pp.exponent() == 3);
  CHECK(pp.modulus() == 125);
  CHECK_THROWS_AS(PrimePower(2, 1), PreconditionViolated);
  CHECK_THROWS_AS(PrimePower(9, 2), PreconditionViolated);
  CHECK_THROWS_AS(PrimePower(5, 0), PreconditionViolated);
}

TEST_CASE("valuation ordering") {
  CHECK(Valuation::infinite() > Valuation(1000000));
  CHECK(Valuation::infinite() == Valuation::infinite());
  CHECK(Valuation(-1) < Valuation(0));
  CHECK(Valuation(3) >= Valuation(3));
  CHECK(Valuation(2).str() == "2");
  CHECK(Valuation::infinite().str() == "inf");
  CHECK_THROWS(Valuation::infinite().value());
}

TEST_CASE("ord") {
  CHECK(ord(ExactInt(250), 5) == Valuation(3));
  CHECK(ord(ExactInt(4300), 5) == Valuation(2));
  CHECK(ord(Rational(1, 5), 5) == Valuation(-1));
  CHECK(ord(ExactInt(0), 7).is_infinite());
  CHECK(ord(ExactInt(-54), 3) == Valuation(3));
  CHECK_THROWS_AS(ord(ExactInt(10), 6), PreconditionViolated);
}

TEST_CASE("ord is additive") {
  std::mt19937_64 rng(0xc1f0001);
  for (const ExactInt p : {3, 5, 7}) {
    for (int i = 0; i < 200; ++i) {
      Rational x = random_rational(rng, p);
      Rational y = random_rational(rng, p);
      if (x == 0 || y == 0) continue;
      CHECK(ord(Rational(x * y), p) ==
            Valuation(ord(x, p).value() + ord(y, p).value()));
    }
  }
}

TEST_CASE("residue") {
  CHECK(residue(Rational(-1, 8), PrimePower(5, 1)) == 3);
  CHECK(residue(Rational(676), PrimePower(5, 1)) == 1);
  CHECK(residue(Rational(7), PrimePower(7, 2)) == 7);
  CHECK(residue(Rational(-3), PrimePower(5, 1)) == 2);
  CHECK_THROWS_AS(residue(Rational(1, 5), PrimePower(5, 1)), DenominatorNotInvertible);
}

TEST_CASE("congruent") {
  const auto a = congruent(Rational(-575, 32), Rational(0), PrimePower(5, 2), "l216");
  CHECK(a.holds);
  CHECK(a.achieved_valuation == Valuation(2));

  const auto b = congruent(Rational(252), Rational(2), PrimePower(5, 3), "kaz");
  CHECK(b.holds);
  CHECK(b.achieved_valuation == Valuation(3));
  CHECK(*b.lhs_residue == 2);
  CHECK(*b.rhs_residue == 2);

  const auto c = congruent(Rational(4), Rational(1), PrimePower(3, 1), "t");
  CHECK(c.holds);

  const auto d = congruent(Rational(5), Rational(5), PrimePower(7, 4), "eq");
  CHECK(d.holds);
  CHECK(d.achieved_valuation.is_infinite());

  CHECK_THROWS_AS(congruent(Rational(1, 3), Rational(0), PrimePower(3, 1), "bad"),
                  DenominatorNotInvertible);
}

TEST_CASE("congruent agrees with residue equality") {
  std::mt19937_64 rng(0xc1f0002);
  for (const ExactInt p : {3, 5, 7}) {
    for (unsigned k = 1; k <= 3; ++k) {
      const PrimePower pp(p, k);
      for (int i = 0; i < 150; ++i) {
        const Rational a = random_rational(rng, p);
        const Rational b = random_rational(rng, p);
        const bool same_residue = residue(a, pp) == residue(b, pp);
        CHECK(congruent(a, b, pp, "prop").holds == same_residue);
      }
    }
  }
}

TEST_CASE("congruent_mod handles general moduli") {
  const auto o = congruent_mod(Rational(29), Rational(5), ExactInt(12), "g");
  CHECK(o.holds);
  CHECK_FALSE(o.prime_power.has_value());
  CHECK(*o.lhs_residue == 5);
  CHECK_FALSE(congruent_mod(Rational(30), Rational(5), ExactInt(12), "g").holds);
  CHECK(congruent_mod(Rational(7), Rational(7), ExactInt(1), "triv").holds);
}

TEST_CASE("generalized binomial") {
  CHECK(binom(Rational(-1, 2), 2) == Rational(3, 8));
  CHECK(binom(Rational(-3), 6) == Rational(28));
  CHECK(binom(Rational(5), 2) == Rational(10));
  CHECK(binom(Rational(1, 3), -2) == 0);
  CHECK(binom(Rational(7, 2), 0) == 1);
}

TEST_CASE("binomial Pascal identity") {
  std::mt19937_64 rng(0xc1f0003);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 12);
  for (int i = 0; i < 300; ++i) {
    const Rational x(num(rng), den(rng));
    const std::int64_t k = 1 + i % 12;
    CHECK(binom(x, k) == binom(x - 1, k) + binom(x - 1, k - 1));
  }
}

TEST_CASE("integer binomial matches factorial oracle") {
  std::vector<ExactInt> fact(201);
  fact[0] = 1;
  for (unsigned i = 1; i <= 200; ++i) fact[i] = fact[i - 1] * i;
  for (unsigned n = 0; n <= 200; ++n)
    for (unsigned k = 0; k <= n; ++k)
      CHECK(choose(ExactInt(n), ExactInt(k)) == fact[n] / (fact[k] * fact[n - k]));
  CHECK(choose(ExactInt(5), ExactInt(9)) == 0);
  CHECK(choose(ExactInt(-3), ExactInt(6)) == 28);
  CHECK(choose(ExactInt(-2), ExactInt(3)) == -4);
}

TEST_CASE("legendre") {
  CHECK(legendre(Rational(2), 5) == -1);
  CHECK(legendre(Rational(17), 5) == -1);
  CHECK(legendre(Rational(5), 5) == 0);
  CHECK(legendre(Rational(4), 5) == 1);
  CHECK_THROWS_AS(legendre(Rational(1, 7), 7), DenominatorNotInvertible);
  CHECK_THROWS_AS(legendre(Rational(3), 8), PreconditionViolated);
}

TEST_CASE("legendre is multiplicative") {
  std::mt19937_64 rng(0xc1f0004);
  for (const ExactInt p : {3, 5, 7, 11, 13}) {
    for (int i = 0; i < 200; ++i) {
      const Rational a = random_rational(rng, p);
      const Rational b = random_rational(rng, p);
      if (frac_residue(a, p) == 0 || frac_residue(b, p) == 0) continue;
      CHECK(legendre(a, p) * legendre(b, p) == legendre(a * b, p));
    }
  }
}

TEST_CASE("frac_residue") {
  CHECK(frac_residue(Rational(-1, 2), 5) == 2);
  CHECK(frac_residue(Rational(-1, 2), 7) == 3);
  CHECK(frac_residue(Rational(0), 11) == 0);
}

TEST_CASE("exact int round-trips through decimal strings") {
  std::mt19937_64 rng(0xc1f0005);
  std::uniform_int_distribution<int> bits(1, 400);
  for (int i = 0; i < 50; ++i) {
    ExactInt x = 1;
    x <<= bits(rng);
    x += static_cast<int>(rng() % 1000);
    if (rng() & 1) x = -x;
    CHECK(ExactInt(x.str()) == x);
  }
}
