#include "clf/sequences.hpp"

#include <boost/multiprecision/integer.hpp>

#include <string>
#include <vector>

namespace clf {

namespace {

// Exact division with a remainder check; the recurrences and closed forms
// are only correct if these divisions never truncate.
ExactInt exact_div(const ExactInt& num, const ExactInt& den, const char* who) {
  ExactInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0)
    throw NonIntegralRecurrenceStep(std::string(who) + ": " + num.str() +
                                    " is not divisible by " + den.str());
  return q;
}

// C(2k,k) for k = 0..n.
std::vector<ExactInt> central_binomials(std::size_t n) {
  std::vector<ExactInt> c(n + 1);
  c[0] = 1;
  for (std::size_t k = 1; k <= n; ++k)
    c[k] = exact_div(c[k - 1] * (2 * ExactInt(2 * k - 1)), ExactInt(k), "central_binomials");
  return c;
}

// C(n,j) for j = 0..n.
std::vector<ExactInt> binomial_row(std::size_t n) {
  std::vector<ExactInt> row(n + 1);
  row[0] = 1;
  for (std::size_t j = 1; j <= n; ++j)
    row[j] = exact_div(row[j - 1] * ExactInt(n - j + 1), ExactInt(j), "binomial_row");
  return row;
}

}  // namespace

void Sequences::require_unfrozen(const char* who, std::size_t n) const {
  if (frozen_)
    throw std::logic_error(std::string(who) + ": cache frozen but index " + std::to_string(n) +
                           " is not prefilled");
}

const ExactInt& Sequences::S(std::size_t n) {
  if (n >= s_.size()) {
    require_unfrozen("Sequences::S", n);
    if (s_.empty()) {
      s_.emplace_back(1);
      s_.emplace_back(4);
    }
    while (s_.size() <= n) {
      const std::size_t i = s_.size() - 1;  // next index is i+1
      const ExactInt num =
          4 * ExactInt(3 * i * (i + 1) + 1) * s_[i] - 32 * ExactInt(i) * ExactInt(i) * s_[i - 1];
      s_.push_back(exact_div(num, ExactInt(i + 1) * ExactInt(i + 1), "Sequences::S"));
    }
  }
  return s_[n];
}

const ExactInt& Sequences::P(std::size_t n) {
  if (n >= p_.size()) {
    require_unfrozen("Sequences::P", n);
    S(n);  // the fill cross-checks against 2^i S_i
    if (p_.empty()) {
      p_.emplace_back(1);
      p_.emplace_back(8);
    }
    while (p_.size() <= n) {
      const std::size_t i = p_.size() - 1;
      const ExactInt num =
          8 * ExactInt(3 * i * (i + 1) + 1) * p_[i] - 128 * ExactInt(i) * ExactInt(i) * p_[i - 1];
      ExactInt next = exact_div(num, ExactInt(i + 1) * ExactInt(i + 1), "Sequences::P");
      if (next != (s_[i + 1] << (i + 1)))
        throw NonIntegralRecurrenceStep("Sequences::P: P_" + std::to_string(i + 1) +
                                        " != 2^n S_n");
      p_.push_back(std::move(next));
    }
  }
  return p_[n];
}

const ExactInt& Sequences::F(std::size_t n) {
  if (n >= f_.size()) {
    require_unfrozen("Sequences::F", n);
    while (f_.size() <= n) {
      const std::size_t i = f_.size();
      ExactInt sum = 0;
      ExactInt c = 1;  // C(i, k), updated in place
      for (std::size_t k = 0; k <= i; ++k) {
        sum += c * c * c;
        if (k < i) c = exact_div(c * ExactInt(i - k), ExactInt(k + 1), "Sequences::F");
      }
      f_.push_back(std::move(sum));
    }
  }
  return f_[n];
}

ExactInt clf_S_closed(std::size_t n, SClosedForm variant) {
  switch (variant) {
    case SClosedForm::Zagier: {
      const auto central = central_binomials(n / 2);
      const auto row = binomial_row(n);
      ExactInt pow4 = boost::multiprecision::pow(ExactInt(4), static_cast<unsigned>(n));
      ExactInt sum = 0;
      for (std::size_t k = 0; 2 * k <= n; ++k) {
        sum += central[k] * central[k] * row[2 * k] * pow4;
        if (2 * (k + 1) <= n) pow4 = exact_div(pow4, ExactInt(16), "clf_S_closed/Zagier");
      }
      return sum;
    }
    case SClosedForm::Jovovic: {
      const auto central = central_binomials(n);
      const auto row = binomial_row(n);
      ExactInt sum = 0;
      for (std::size_t k = 0; k <= n; ++k) sum += row[k] * central[k] * central[n - k];
      return sum;
    }
    case SClosedForm::SunA: {
      const auto central = central_binomials(n);
      ExactInt sum = 0;
      for (std::size_t k = 0; k <= n; ++k) {
        const ExactInt c = choose(ExactInt(k), ExactInt(n - k));
        if (c == 0) continue;
        ExactInt term = central[k] * central[k] * c;
        term *= boost::multiprecision::pow(ExactInt(-4), static_cast<unsigned>(n - k));
        sum += term;
      }
      return sum;
    }
    case SClosedForm::SunB: {
      const auto central = central_binomials(n);
      ExactInt sum = 0;
      for (std::size_t k = 0; k <= n; ++k) {
        const ExactInt c = choose(ExactInt(k), ExactInt(n - k));
        if (c == 0) continue;
        ExactInt term = central[k] * central[n - k] * c;
        term *= boost::multiprecision::pow(ExactInt(-4), static_cast<unsigned>(k));
        sum += term;
      }
      return exact_div(sum, boost::multiprecision::pow(ExactInt(-2), static_cast<unsigned>(n)),
                       "clf_S_closed/SunB");
    }
    case SClosedForm::Halved: {
      if (n < 1) throw PreconditionViolated("clf_S_closed: Halved form requires n >= 1");
      const auto central = central_binomials(n);
      const auto row = binomial_row(n - 1);
      ExactInt sum = 0;
      for (std::size_t k = 1; k <= n; ++k) sum += row[k - 1] * central[k] * central[n - k];
      return 2 * sum;
    }
  }
  throw std::logic_error("clf_S_closed: unknown variant");
}

ExactInt clf_P_closed(std::size_t n, PClosedForm variant) {
  switch (variant) {
    case PClosedForm::AltSum: {
      const auto central = central_binomials(n);
      ExactInt sum = 0;
      for (std::size_t k = 0; 2 * k <= n; ++k) {
        ExactInt term = central[n - k] * central[n - k] * choose(ExactInt(n - k), ExactInt(k));
        term *= boost::multiprecision::pow(ExactInt(-4), static_cast<unsigned>(k));
        sum += term;
      }
      return sum << n;
    }
    case PClosedForm::Convolution: {
      // each term is an exact rational; the total must come out integral
      const auto central = central_binomials(n);
      const auto row = binomial_row(n);
      Rational sum = 0;
      for (std::size_t k = 0; k <= n; ++k)
        sum += Rational(central[k] * central[k] * central[n - k] * central[n - k], row[k]);
      if (denominator(sum) != 1)
        throw NonIntegralRecurrenceStep("clf_P_closed: convolution sum is not integral");
      return numerator(sum);
    }
  }
  throw std::logic_error("clf_P_closed: unknown variant");
}

bool identity_1_12_first(Sequences& seq, std::size_t n) {
  seq.prefill_S(n);
  const auto row = binomial_row(n);
  Rational lhs = 0;
  ExactInt pow8 = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    Rational term(row[k] * seq.S(k), pow8);
    lhs += (k & 1) ? -term : term;
    pow8 *= 8;
  }
  return lhs == Rational(seq.S(n), boost::multiprecision::pow(ExactInt(8), static_cast<unsigned>(n)));
}

bool identity_1_12_second(Sequences& seq, std::size_t n) {
  seq.prefill_S(2 * n);
  const auto row = binomial_row(2 * n);
  ExactInt lhs = 0;
  ExactInt rising = 1;  // C(2n+k, k)
  ExactInt pow = boost::multiprecision::pow(ExactInt(-8), static_cast<unsigned>(2 * n));
  for (std::size_t k = 0; k <= 2 * n; ++k) {
    lhs += row[k] * rising * pow * seq.S(k);
    if (k < 2 * n) {
      rising =
          exact_div(rising * ExactInt(2 * n + k + 1), ExactInt(k + 1), "identity_1_12_second");
      pow = exact_div(pow, ExactInt(-8), "identity_1_12_second");
    }
  }
  const ExactInt c = choose(ExactInt(2 * n), ExactInt(n));
  ExactInt rhs = c * c * c;
  if (n & 1) rhs = -rhs;
  return lhs == rhs;
}

bool identity_2_2(std::size_t n) {
  const auto central = central_binomials(n);
  const auto row = binomial_row(n);
  ExactInt sum = 0;
  for (std::size_t k = 0; k <= n; ++k)
    sum += (2 * ExactInt(k) - ExactInt(n)) * row[k] * central[k] * central[n - k];
  return sum == 0;
}

bool identity_2_4(const ExactInt& a, const ExactInt& b, const ExactInt& c, const ExactInt& d) {
  const ExactInt ab = choose(a, b);
  if (ab == 0) throw DivisionByZero("identity_2_4: C(a,b) = 0 for a=" + a.str() + ", b=" + b.str());
  const Rational lhs = Rational(choose(a - b, c - d)) * Rational(choose(b, d));
  const Rational rhs =
      Rational(choose(a, c)) * Rational(choose(c, d)) * Rational(choose(a - c, b - d)) / ab;
  return lhs == rhs;
}

LogConvexity log_convexity(Sequences& seq, std::size_t m) {
  if (m < 2) throw PreconditionViolated("log_convexity: requires m >= 2");
  seq.prefill_S(m + 1);
  const ExactInt sq = seq.S(m) * seq.S(m);
  const ExactInt cross = seq.S(m + 1) * seq.S(m - 1);
  LogConvexity out;
  out.lower_strict = sq < cross;
  out.upper_strict = ExactInt(m) * ExactInt(m - 1) * (cross - sq) < sq;
  return out;
}

bool log_convex_P(Sequences& seq, std::size_t m) {
  if (m < 1) throw PreconditionViolated("log_convex_P: requires m >= 1");
  seq.prefill_P(m + 1);
  return seq.P(m - 1) * seq.P(m + 1) >= seq.P(m) * seq.P(m);
}

CongruenceOutcome lemma_3_1(Sequences& seq, std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw PreconditionViolated("lemma_3_1: requires m, n >= 1");
  const std::size_t mn = static_cast<std::size_t>(m) * static_cast<std::size_t>(n);
  seq.prefill_S(mn + 1);
  const ExactInt modulus = ExactInt(m) * m * n * n;
  return congruent_mod(Rational(seq.S(mn + 1)), Rational(4 * ExactInt(mn + 1) * seq.S(mn)),
                       modulus, "lemma_3_1");
}

}  // namespace clf
