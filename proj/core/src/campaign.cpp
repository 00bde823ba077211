#include "clf/campaign.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <thread>

#include "clf/lemma_checks.hpp"
#include "clf/special_numbers.hpp"
#include "clf/theorem_checks.hpp"

namespace clf {

namespace {

using Json = nlohmann::ordered_json;

ExactInt pow_int(const ExactInt& base, std::int64_t e) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

struct Ctx {
  Sequences seq;
  SpecialNumbers sn;
};

struct CheckDef;

struct Cell {
  Cell() = default;
  Cell(const CheckDef* d, std::optional<ExactInt> prime, std::vector<std::int64_t> a)
      : def(d), p(std::move(prime)), args(std::move(a)) {}

  const CheckDef* def = nullptr;
  std::optional<ExactInt> p;
  std::vector<std::int64_t> args;
  Rational rat;
  bool has_rat = false;
};

struct CheckDef {
  std::string name;
  bool uses_primes = true;
  std::function<void(const CampaignConfig&, const std::optional<ExactInt>&, const CheckDef*,
                     std::vector<Cell>&)>
      enumerate;
  std::function<void(Ctx&, const Cell&)> prefill;  // may be empty
  std::function<CheckRecord(Ctx&, const Cell&)> run;
};

CheckRecord make_record(const Cell& cell, std::vector<std::pair<std::string, std::string>> params) {
  CheckRecord rec;
  rec.check = cell.def->name;
  rec.p = cell.p;
  rec.params = std::move(params);
  return rec;
}

void fill_from_outcome(CheckRecord& rec, const CongruenceOutcome& o) {
  if (o.prime_power) {
    rec.k_required = o.required_valuation;
    rec.achieved_valuation = o.achieved_valuation.str();
  } else if (o.achieved_valuation.is_infinite()) {
    rec.achieved_valuation = "inf";
  }
  if (o.lhs_residue) rec.lhs_residue = o.lhs_residue->str();
  if (o.rhs_residue) rec.rhs_residue = o.rhs_residue->str();
  rec.holds = o.holds;
}

std::string arg_str(std::int64_t v) { return std::to_string(v); }

// grid bound helpers keep the per-check enumerators one-liners
struct Grid {
  std::int64_t m, r, n;
  explicit Grid(const CampaignConfig& c) : m(c.m_max), r(c.r_max), n(c.n_max) {}
};

std::size_t to_index(const ExactInt& v) {
  if (v < 0 || v > 1'000'000'000)
    throw PreconditionViolated("campaign: index " + v.str() + " out of range");
  return v.convert_to<std::size_t>();
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> v;

    auto add = [&v](CheckDef def) { v.push_back(std::move(def)); };

    // ---- exact-arithmetic lemma checks ----

    add({.name = "lucas_reduce",
         .enumerate =
             [](const CampaignConfig& c, const std::optional<ExactInt>& p, const CheckDef* d,
                std::vector<Cell>& out) {
               for (std::int64_t a = 0; a <= c.n_max; ++a)
                 for (std::int64_t b = 0; b <= a; ++b) out.push_back({d, p, {a, b}});
             },
         .prefill = {},
         .run =
             [](Ctx&, const Cell& cell) {
               auto rec = make_record(cell, {{"a", arg_str(cell.args[0])},
                                             {"b", arg_str(cell.args[1])}});
               const auto red =
                   lucas_reduce(ExactInt(cell.args[0]), ExactInt(cell.args[1]), *cell.p);
               fill_from_outcome(rec, red.outcome);
               return rec;
             }});

    add({.name = "check_lemma_2_2",
         .enumerate =
             [](const CampaignConfig& c, const std::optional<ExactInt>& p, const CheckDef* d,
                std::vector<Cell>& out) {
               const std::int64_t digits = p->convert_to<std::int64_t>();
               for (std::int64_t a = 1; a <= c.m_max; ++a)
                 for (std::int64_t b = 1; b <= c.m_max; ++b)
                   for (std::int64_t a0 = 0; a0 < digits; ++a0)
                     for (std::int64_t b0 = 0; b0 < digits; ++b0)
                       out.push_back({d, p, {a, b, a0, b0}});
             },
         .prefill = {},
         .run =
             [](Ctx&, const Cell& cell) {
               auto rec = make_record(cell, {{"a", arg_str(cell.args[0])},
                                             {"b", arg_str(cell.args[1])},
                                             {"a0", arg_str(cell.args[2])},
                                             {"b0", arg_str(cell.args[3])}});
               fill_from_outcome(rec, check_lemma_2_2(cell.args[0], cell.args[1], cell.args[2],
                                                      cell.args[3], *cell.p));
               return rec;
             }});

    add({.name = "check_kazandzidis",
         .enumerate =
             [](const CampaignConfig& c, const std::optional<ExactInt>& p, const CheckDef* d,
                std::vector<Cell>& out) {
               for (std::int64_t m = 1; m <= c.m_max; ++m)
                 for (std::int64_t n = 1; n <= c.n_max; ++n) out.push_back({d, p, {m, n}});
             },
         .prefill = {},
         .run =
             [](Ctx&, const Cell& cell) {
               auto rec = make_record(cell, {{"m", arg_str(cell.args[0])},
                                             {"n", arg_str(cell.args[1])}});
               fill_from_outcome(rec, check_kazandzidis(cell.args[0], cell.args[1], *cell.p));
               return rec;
             }});

    add({.name = "check_lemma_2_4",
         .enumerate =
             [](const CampaignConfig&, const std::optional<ExactInt>& p, const CheckDef* d,
                std::vector<Cell>& out) {
               const std::int64_t top = p->convert_to<std::int64_t>() - 1;
               for (std::int64_t k = 1; k <= top; ++k) out.push_back({d, p, {k}});
             },
         .prefill = {},
         .run =
             [](Ctx&, const Cell& cell) {
               auto rec = make_record(cell, {{"k", arg_str(cell.args[0])}});
               fill_from_outcome(rec, check_lemma_2_4(cell.args[0], *cell.p));
               return rec;
             }});

    add({.name = "check_lemma_2_5",
         .enumerate =
             [](const CampaignConfig&, const std::optional<ExactInt>& p, const CheckDef* d,
                std::vector<Cell>& out) {
               const std::int64_t pi = p->convert_to<std::int64_t>();
               std::vector<Rational> as;
               for (std::int64_t a = 1; a < pi; ++a) as.emplace_back(a);
               as.emplace_back(-1, 2);
               as.emplace_back(1, 3);
               for (const Rational& a : as)
                 for (std::int64_t k = 1; k <= pi - 2; ++k) {
                   Cell cell{d, p, {k}};
                   cell.rat = a;
                   cell.has_rat = true;
                   out.push_back(std::move(cell));
                 }
             },
         .prefill = [](Ctx& ctx, const Cell& cell) { ctx.sn.prefill(to_index(*cell.p)); },
         .run =
             [](Ctx& ctx, const Cell& cell) {
               auto rec = make_record(cell, {{"a", cell.rat.str()}, {"k", arg_str(cell.args[0])}});
               fill_from_outcome(rec, check_lemma_2_5(ctx.sn, cell.rat, cell.args[0], *cell.p));
               return rec;
             }});

    add({.name = "check_lemma_2_6",
         .enumerate =
             [](const CampaignConfig& c, const std::optional<ExactInt>& p, const CheckDef* d,
                std::vector<Cell>& out) {
               const std::int64_t pi = p->convert_to<std::int64_t>();
               for (std::int64_t m = 1; m <= c.m_max; ++m)
                 for (std::int64_t k = pi / 2 + 1; k < pi; ++k) out.push_back({d, p, {m, k}});
             },
         .prefill = {},
         .run =
             [](Ctx&, const Cell& cell) {
               auto rec = make_record(cell, {{"m", arg_str(cell.args[0])},
                                             {"k", arg_str(cell.args[1])}});
               fill_from_outcome(rec, check_lemma_2_6(cell.args[0], cell.args[1], *cell.p));
               return rec;
             }});

    add({.name = "check_lemma_2_8",
         .enumerate =
             [](const CampaignConfig& c, const std::optional<ExactInt>& p, const CheckDef* d,
                std::vector<Cell>& out) {
               for (std::int64_t m = 1; m <= c.m_max; ++m)
                 for (std::int64_t r = 1; r <= c.r_max; ++r)
                   for (std::int64_t k = 0; k <= c.n_max; ++k) out.push_back({d, p, {m, r, k}});
             },
         .prefill = {},
         .run =
             [](Ctx&, const Cell& cell) {
               auto rec = make_record(cell, {{"m", arg_str(cell.args[0])},
                                             {"r", arg_str(cell.args[1])},
                                             {"k", arg_str(cell.args[2])}});
               rec.holds = check_lemma_2_8(cell.args[0], cell.args[1], cell.args[2], *cell.p);
               return rec;
             }});

    add({.name = "check_lemma_2_9",
         .uses_primes = false,
         .enumerate =
             [](const CampaignConfig& c, const std::optional<ExactInt>&, const CheckDef* d,
                std::vector<Cell>& out) {
               for (std::int64_t m = 1; m <= c.m_max; ++m)
                 for (std::int64_t n = 1; n <= c.n_max; ++n)
                   out.push_back({d, ExactInt(3), {m, n}});
             },
         .prefill = {},
         .run =
             [](Ctx&, const Cell& cell) {
               auto rec = make_record(cell, {{"m", arg_str(cell.args[0])},
                                             {"n", arg_str(cell.args[1])}});
               fill_from_outcome(rec, check_lemma_2_9(cell.args[0], cell.args[1]));
               return rec;
             }});

    // the four prime-power reduction lemmas share an (m, r, s) shape
    struct MrsSpec {
      const char* name;
      std::int64_t s_lo;
      std::int64_t s_hi_off;  // s < m p^(r-1) + off (0) or s <= (1)
      CongruenceOutcome (*fn)(std::int64_t, std::int64_t, std::int64_t, const ExactInt&);
    };
    for (const MrsSpec spec : {MrsSpec{"check_lemma_2_10", 0, 0, &check_lemma_2_10},
                               MrsSpec{"check_lemma_2_11", 1, 1, &check_lemma_2_11},
                               MrsSpec{"check_lemma_2_13", 0, 0, &check_lemma_2_13},
                               MrsSpec{"check_lemma_2_14", 0, 0, &check_lemma_2_14}}) {
      add({.name = spec.name,
           .enumerate =
               [spec](const CampaignConfig& c, const std::optional<ExactInt>& p, const CheckDef* d,
                      std::vector<Cell>& out) {
                 for (std::int64_t m = 1; m <= c.m_max; ++m)
                   for (std::int64_t r = 1; r <= c.r_max; ++r) {
                     const ExactInt upper = m * pow_int(*p, r - 1) + spec.s_hi_off;
                     for (std::int64_t s = spec.s_lo; upper > s; ++s)
                       out.push_back({d, p, {m, r, s}});
                   }
               },
           .prefill = {},
           .run =
               [spec](Ctx&, const Cell& cell) {
                 auto rec = make_record(cell, {{"m", arg_str(cell.args[0])},
                                               {"r", arg_str(cell.args[1])},
                                               {"s", arg_str(cell.args[2])}});
                 fill_from_outcome(rec,
                                   spec.fn(cell.args[0], cell.args[1], cell.args[2], *cell.p));
                 return rec;
               }});
    }

    add({.name = "check_lemma_2_12",
         .enumerate =
             [](const CampaignConfig& c, const std::optional<ExactInt>& p, const CheckDef* d,
                std::vector<Cell>& out) {
               for (std::int64_t m = 1; m <= c.m_max; ++m)
                 for (std::int64_t r = 1; r <= c.r_max; ++r) {
                   const ExactInt top = m * pow_int(*p, r);
                   for (std::int64_t k = 0; top >= k; ++k) out.push_back({d, p, {m, r, k}});
                 }
             },
         .prefill = {},
         .run =
             [](Ctx&, const Cell& cell) {
               auto rec = make_record(cell, {{"m", arg_str(cell.args[0])},
                                             {"r", arg_str(cell.args[1])},
                                             {"k", arg_str(cell.args[2])}});
               fill_from_outcome(rec, check_lemma_2_12_outcome(cell.args[0], cell.args[1],
                                                               cell.args[2], *cell.p));
               return rec;
             }});

    add({.name = "check_lemma_2_15",
         .enumerate =
             [](const CampaignConfig& c, const std::optional<ExactInt>& p, const CheckDef* d,
                std::vector<Cell>& out) {
               const std::int64_t pi = p->convert_to<std::int64_t>();
               for (std::int64_t n = pi; n <= c.n_max; ++n)
                 for (std::int64_t k = pi; k <= n; ++k) out.push_back({d, p, {n, k}});
             },
         .prefill = {},
         .run =
             [](Ctx&, const Cell& cell) {
               auto rec = make_record(cell, {{"n", arg_str(cell.args[0])},
                                             {"k", arg_str(cell.args[1])}});
               fill_from_outcome(rec, check_lemma_2_15(cell.args[0], cell.args[1], *cell.p));
               return rec;
             }});

    add({.name = "check_lemma_2_16",
         .enumerate =
             [](const CampaignConfig&, const std::optional<ExactInt>& p, const CheckDef* d,
                std::vector<Cell>& out) { out.push_back({d, p, {}}); },
         .prefill = {},
         .run =
             [](Ctx&, const Cell& cell) {
               auto rec = make_record(cell, {});
               fill_from_outcome(rec, check_lemma_2_16(*cell.p));
               return rec;
             }});

    add({.name = "check_harmonic_2_3",
         .enumerate =
             [](const CampaignConfig& c, const std::optional<ExactInt>& p, const CheckDef* d,
                std::vector<Cell>& out) {
               for (std::int64_t s = 1; s <= c.n_max; ++s) out.push_back({d, p, {s}});
             },
         .prefill = {},
         .run =
             [](Ctx&, const Cell& cell) {
               auto rec = make_record(cell, {{"s", arg_str(cell.args[0])}});
               fill_from_outcome(rec, check_harmonic_2_3_outcome(cell.args[0], *cell.p));
               return rec;
             }});

    // ---- sequence congruences and theorem checks ----

    add({.name = "check_1_8",
         .enumerate =
             [](const CampaignConfig& c, const std::optional<ExactInt>& p, const CheckDef* d,
                std::vector<Cell>& out) {
               for (std::int64_t n = 0; n <= c.n_max; ++n) out.push_back({d, p, {n}});
             },
         .prefill = [](Ctx& ctx,
                       const Cell& cell) { ctx.seq.prefill_P(static_cast<std::size_t>(cell.args[0])); },
         .run =
             [](Ctx& ctx, const Cell& cell) {
               auto rec = make_record(cell, {{"n", arg_str(cell.args[0])}});
               fill_from_outcome(rec,
                                 check_1_8(ctx.seq, static_cast<std::size_t>(cell.args[0]), *cell.p));
               return rec;
             }});

    add({.name = "check_1_9",
         .enumerate =
             [](const CampaignConfig& c, const std::optional<ExactInt>& p, const CheckDef* d,
                std::vector<Cell>& out) {
               const std::int64_t top = std::min(c.n_max, p->convert_to<std::int64_t>() - 1);
               for (std::int64_t n = 0; n <= top; ++n) out.push_back({d, p, {n}});
             },
         .prefill = [](Ctx& ctx, const Cell& cell) { ctx.seq.prefill_P(to_index(*cell.p - 1)); },
         .run =
             [](Ctx& ctx, const Cell& cell) {
               auto rec = make_record(cell, {{"n", arg_str(cell.args[0])}});
               fill_from_outcome(rec,
                                 check_1_9(ctx.seq, static_cast<std::size_t>(cell.args[0]), *cell.p));
               return rec;
             }});

    struct MrSpec {
      const char* name;
      CongruenceOutcome (*fn)(Sequences&, std::int64_t, std::int64_t, const ExactInt&);
      bool fills_P;
    };
    for (const MrSpec spec : {MrSpec{"check_1_10", &check_1_10_outcome, true},
                              MrSpec{"check_1_11", &check_1_11_outcome, false},
                              MrSpec{"check_P_lift", &check_P_lift_outcome, true}}) {
      add({.name = spec.name,
           .enumerate =
               [](const CampaignConfig& c, const std::optional<ExactInt>& p, const CheckDef* d,
                  std::vector<Cell>& out) {
                 for (std::int64_t m = 1; m <= c.m_max; ++m)
                   for (std::int64_t r = 1; r <= c.r_max; ++r) out.push_back({d, p, {m, r}});
               },
           .prefill =
               [spec](Ctx& ctx, const Cell& cell) {
                 const std::size_t hi = to_index(cell.args[0] * pow_int(*cell.p, cell.args[1]));
                 if (spec.fills_P)
                   ctx.seq.prefill_P(hi);
                 else
                   ctx.seq.prefill_S(hi);
               },
           .run =
               [spec](Ctx& ctx, const Cell& cell) {
                 auto rec = make_record(cell, {{"m", arg_str(cell.args[0])},
                                               {"r", arg_str(cell.args[1])}});
                 fill_from_outcome(rec, spec.fn(ctx.seq, cell.args[0], cell.args[1], *cell.p));
                 return rec;
               }});
    }

    add({.name = "check_1_13",
         .enumerate =
             [](const CampaignConfig& c, const std::optional<ExactInt>& p, const CheckDef* d,
                std::vector<Cell>& out) {
               for (std::int64_t n = 1; n <= c.n_max; ++n) out.push_back({d, p, {n}});
             },
         .prefill = [](Ctx& ctx, const Cell& cell) { ctx.seq.prefill_S(to_index(*cell.p - 1)); },
         .run =
             [](Ctx& ctx, const Cell& cell) {
               auto rec = make_record(cell, {{"n", arg_str(cell.args[0])}});
               fill_from_outcome(rec, check_1_13(ctx.seq, Rational(cell.args[0]), *cell.p));
               return rec;
             }});

    add({.name = "check_thm_3_1",
         .enumerate =
             [](const CampaignConfig& c, const std::optional<ExactInt>& p, const CheckDef* d,
                std::vector<Cell>& out) {
               for (std::int64_t n = 1; n <= c.n_max; ++n) out.push_back({d, p, {n}});
             },
         .prefill =
             [](Ctx& ctx, const Cell& cell) {
               ctx.seq.prefill_S(to_index(cell.args[0] * *cell.p));
               ctx.sn.prefill(to_index(*cell.p));
             },
         .run =
             [](Ctx& ctx, const Cell& cell) {
               auto rec = make_record(cell, {{"n", arg_str(cell.args[0])}});
               fill_from_outcome(rec, check_thm_3_1(ctx.seq, ctx.sn, cell.args[0], *cell.p));
               return rec;
             }});

    add({.name = "check_cor_3_1",
         .enumerate =
             [](const CampaignConfig&, const std::optional<ExactInt>& p, const CheckDef* d,
                std::vector<Cell>& out) {
               for (std::int64_t multiple = 1; multiple <= 3; ++multiple)
                 out.push_back({d, p, {multiple}});
             },
         .prefill =
             [](Ctx& ctx, const Cell& cell) {
               if (*cell.p <= 3) return;
               ctx.seq.prefill_S(to_index(3 * *cell.p));
               ctx.sn.prefill(to_index(*cell.p));
             },
         .run =
             [](Ctx& ctx, const Cell& cell) {
               auto rec = make_record(cell, {{"multiple", arg_str(cell.args[0])}});
               const auto outcomes = check_cor_3_1(ctx.seq, ctx.sn, *cell.p);
               fill_from_outcome(rec, outcomes[static_cast<std::size_t>(cell.args[0] - 1)]);
               return rec;
             }});

    struct Mr2Spec {
      const char* name;
      CongruenceOutcome (*fn)(Sequences&, std::int64_t, std::int64_t, const ExactInt&);
      std::int64_t idx_off;
    };
    for (const Mr2Spec spec : {Mr2Spec{"check_thm_3_2", &check_thm_3_2, 1},
                               Mr2Spec{"check_thm_3_3", &check_thm_3_3, -1}}) {
      add({.name = spec.name,
           .enumerate =
               [](const CampaignConfig& c, const std::optional<ExactInt>& p, const CheckDef* d,
                  std::vector<Cell>& out) {
                 for (std::int64_t m = 1; m <= c.m_max; ++m)
                   for (std::int64_t r = 1; r <= c.r_max; ++r) out.push_back({d, p, {m, r}});
               },
           .prefill =
               [spec](Ctx& ctx, const Cell& cell) {
                 ctx.seq.prefill_S(
                     to_index(cell.args[0] * pow_int(*cell.p, cell.args[1]) + spec.idx_off));
               },
           .run =
               [spec](Ctx& ctx, const Cell& cell) {
                 auto rec = make_record(cell, {{"m", arg_str(cell.args[0])},
                                               {"r", arg_str(cell.args[1])}});
                 fill_from_outcome(rec, spec.fn(ctx.seq, cell.args[0], cell.args[1], *cell.p));
                 return rec;
               }});
    }

    add({.name = "check_thm_3_4",
         .enumerate =
             [](const CampaignConfig& c, const std::optional<ExactInt>& p, const CheckDef* d,
                std::vector<Cell>& out) {
               for (std::int64_t n = 1; n <= c.n_max; ++n) out.push_back({d, p, {n}});
             },
         .prefill =
             [](Ctx& ctx, const Cell& cell) {
               ctx.seq.prefill_S(to_index(cell.args[0] * *cell.p + 1));
               ctx.sn.prefill(to_index(*cell.p));
             },
         .run =
             [](Ctx& ctx, const Cell& cell) {
               auto rec = make_record(cell, {{"n", arg_str(cell.args[0])}});
               fill_from_outcome(rec, check_thm_3_4(ctx.seq, ctx.sn, cell.args[0], *cell.p));
               return rec;
             }});

    add({.name = "check_cor_3_2",
         .enumerate =
             [](const CampaignConfig&, const std::optional<ExactInt>& p, const CheckDef* d,
                std::vector<Cell>& out) { out.push_back({d, p, {}}); },
         .prefill =
             [](Ctx& ctx, const Cell& cell) {
               if (*cell.p <= 3) return;
               ctx.seq.prefill_S(to_index(*cell.p + 1));
               ctx.sn.prefill(to_index(*cell.p));
             },
         .run =
             [](Ctx& ctx, const Cell& cell) {
               auto rec = make_record(cell, {});
               fill_from_outcome(rec, check_cor_3_2(ctx.seq, ctx.sn, *cell.p));
               return rec;
             }});

    add({.name = "check_thm_3_5",
         .enumerate =
             [](const CampaignConfig&, const std::optional<ExactInt>& p, const CheckDef* d,
                std::vector<Cell>& out) { out.push_back({d, p, {}}); },
         .prefill =
             [](Ctx& ctx, const Cell& cell) {
               if (*cell.p % 8 != 5 && *cell.p % 8 != 7) return;
               const std::size_t idx = to_index((*cell.p * *cell.p - 1) / 2);
               ctx.seq.prefill_S(idx);
               ctx.seq.prefill_F(idx);
             },
         .run =
             [](Ctx& ctx, const Cell& cell) {
               const auto res = check_thm_3_5(ctx.seq, *cell.p);
               auto rec = make_record(cell, {{"ord_S", res.ord_S.str()},
                                             {"ord_f", res.ord_f.str()}});
               rec.k_required = 2;
               rec.achieved_valuation = std::min(res.ord_S, res.ord_f).str();
               rec.holds = res.holds;
               return rec;
             }});

    add({.name = "check_eq_3_1",
         .uses_primes = false,
         .enumerate =
             [](const CampaignConfig& c, const std::optional<ExactInt>&, const CheckDef* d,
                std::vector<Cell>& out) {
               for (std::int64_t n = 1; n <= c.n_max; ++n) out.push_back({d, ExactInt(3), {n}});
             },
         .prefill = [](Ctx& ctx,
                       const Cell& cell) { ctx.seq.prefill_S(static_cast<std::size_t>(cell.args[0])); },
         .run =
             [](Ctx& ctx, const Cell& cell) {
               auto rec = make_record(cell, {{"n", arg_str(cell.args[0])}});
               fill_from_outcome(rec, check_eq_3_1(ctx.seq, cell.args[0]));
               return rec;
             }});

    add({.name = "check_eq_3_4",
         .enumerate =
             [](const CampaignConfig& c, const std::optional<ExactInt>& p, const CheckDef* d,
                std::vector<Cell>& out) {
               const std::int64_t top =
                   std::min(c.n_max, (p->convert_to<std::int64_t>() - 1) / 2);
               for (std::int64_t s = 0; s <= top; ++s) out.push_back({d, p, {s}});
             },
         .prefill = {},
         .run =
             [](Ctx&, const Cell& cell) {
               auto rec = make_record(cell, {{"s", arg_str(cell.args[0])}});
               fill_from_outcome(rec, check_eq_3_4(cell.args[0], *cell.p));
               return rec;
             }});

    add({.name = "check_S_mod_p_r_plus_2",
         .enumerate =
             [](const CampaignConfig& c, const std::optional<ExactInt>& p, const CheckDef* d,
                std::vector<Cell>& out) {
               for (std::int64_t m = 1; m <= c.m_max; ++m)
                 for (std::int64_t r = 1; r <= c.r_max; ++r) out.push_back({d, p, {m, r}});
             },
         .prefill =
             [](Ctx& ctx, const Cell& cell) {
               ctx.seq.prefill_S(to_index(cell.args[0] * pow_int(*cell.p, cell.args[1])));
               ctx.sn.prefill(to_index(*cell.p));
             },
         .run =
             [](Ctx& ctx, const Cell& cell) {
               auto rec = make_record(cell, {{"m", arg_str(cell.args[0])},
                                             {"r", arg_str(cell.args[1])}});
               fill_from_outcome(
                   rec, check_S_mod_p_r_plus_2(ctx.seq, ctx.sn, cell.args[0], cell.args[1], *cell.p));
               return rec;
             }});

    // ---- sequence identities and inequalities (no prime grid) ----

    add({.name = "lemma_3_1",
         .uses_primes = false,
         .enumerate =
             [](const CampaignConfig& c, const std::optional<ExactInt>&, const CheckDef* d,
                std::vector<Cell>& out) {
               for (std::int64_t m = 1; m <= c.m_max; ++m)
                 for (std::int64_t n = 1; n <= c.n_max; ++n) out.push_back({d, std::nullopt, {m, n}});
             },
         .prefill =
             [](Ctx& ctx, const Cell& cell) {
               ctx.seq.prefill_S(static_cast<std::size_t>(cell.args[0] * cell.args[1] + 1));
             },
         .run =
             [](Ctx& ctx, const Cell& cell) {
               auto rec = make_record(cell, {{"m", arg_str(cell.args[0])},
                                             {"n", arg_str(cell.args[1])}});
               const auto o = lemma_3_1(ctx.seq, cell.args[0], cell.args[1]);
               fill_from_outcome(rec, o);
               rec.params.emplace_back("modulus", o.modulus.str());
               return rec;
             }});

    struct IdNSpec {
      const char* name;
      bool (*fn)(Sequences&, std::size_t);
      std::int64_t scale;  // highest S index touched per n
    };
    for (const IdNSpec spec : {IdNSpec{"identity_1_12_first", &identity_1_12_first, 1},
                               IdNSpec{"identity_1_12_second", &identity_1_12_second, 2}}) {
      add({.name = spec.name,
           .uses_primes = false,
           .enumerate =
               [](const CampaignConfig& c, const std::optional<ExactInt>&, const CheckDef* d,
                  std::vector<Cell>& out) {
                 for (std::int64_t n = 0; n <= c.n_max; ++n) out.push_back({d, std::nullopt, {n}});
               },
           .prefill =
               [spec](Ctx& ctx, const Cell& cell) {
                 ctx.seq.prefill_S(static_cast<std::size_t>(spec.scale * cell.args[0]));
               },
           .run =
               [spec](Ctx& ctx, const Cell& cell) {
                 auto rec = make_record(cell, {{"n", arg_str(cell.args[0])}});
                 rec.holds = spec.fn(ctx.seq, static_cast<std::size_t>(cell.args[0]));
                 return rec;
               }});
    }

    add({.name = "identity_2_2",
         .uses_primes = false,
         .enumerate =
             [](const CampaignConfig& c, const std::optional<ExactInt>&, const CheckDef* d,
                std::vector<Cell>& out) {
               for (std::int64_t n = 0; n <= c.n_max; ++n) out.push_back({d, std::nullopt, {n}});
             },
         .prefill = {},
         .run =
             [](Ctx&, const Cell& cell) {
               auto rec = make_record(cell, {{"n", arg_str(cell.args[0])}});
               rec.holds = identity_2_2(static_cast<std::size_t>(cell.args[0]));
               return rec;
             }});

    add({.name = "identity_2_4",
         .uses_primes = false,
         .enumerate =
             [](const CampaignConfig& c, const std::optional<ExactInt>&, const CheckDef* d,
                std::vector<Cell>& out) {
               for (std::int64_t a = 0; a <= c.m_max; ++a)
                 for (std::int64_t b = 0; b <= a; ++b)
                   for (std::int64_t cc = 0; cc <= a; ++cc)
                     for (std::int64_t dd = 0; dd <= cc; ++dd)
                       out.push_back({d, std::nullopt, {a, b, cc, dd}});
             },
         .prefill = {},
         .run =
             [](Ctx&, const Cell& cell) {
               auto rec = make_record(cell, {{"a", arg_str(cell.args[0])},
                                             {"b", arg_str(cell.args[1])},
                                             {"c", arg_str(cell.args[2])},
                                             {"d", arg_str(cell.args[3])}});
               rec.holds = identity_2_4(ExactInt(cell.args[0]), ExactInt(cell.args[1]),
                                        ExactInt(cell.args[2]), ExactInt(cell.args[3]));
               return rec;
             }});

    add({.name = "log_convexity",
         .uses_primes = false,
         .enumerate =
             [](const CampaignConfig& c, const std::optional<ExactInt>&, const CheckDef* d,
                std::vector<Cell>& out) {
               for (std::int64_t m = 2; m <= std::max<std::int64_t>(2, c.n_max); ++m)
                 out.push_back({d, std::nullopt, {m}});
             },
         .prefill = [](Ctx& ctx,
                       const Cell& cell) { ctx.seq.prefill_S(static_cast<std::size_t>(cell.args[0] + 1)); },
         .run =
             [](Ctx& ctx, const Cell& cell) {
               auto rec = make_record(cell, {{"m", arg_str(cell.args[0])}});
               const auto lc = log_convexity(ctx.seq, static_cast<std::size_t>(cell.args[0]));
               rec.params.emplace_back("lower_strict", lc.lower_strict ? "true" : "false");
               rec.params.emplace_back("upper_strict", lc.upper_strict ? "true" : "false");
               rec.holds = lc.lower_strict && lc.upper_strict;
               return rec;
             }});

    // ---- special-number identities ----

    struct PsSpec {
      const char* name;
      bool (*fn)(SpecialNumbers&, std::size_t, std::size_t);
    };
    for (const PsSpec spec : {PsSpec{"power_sum_check", &power_sum_check},
                              PsSpec{"alt_power_sum_check", &alt_power_sum_check}}) {
      add({.name = spec.name,
           .uses_primes = false,
           .enumerate =
               [](const CampaignConfig& c, const std::optional<ExactInt>&, const CheckDef* d,
                  std::vector<Cell>& out) {
                 for (std::int64_t m = 0; m <= c.m_max; ++m)
                   for (std::int64_t n = 1; n <= c.n_max; ++n) out.push_back({d, std::nullopt, {m, n}});
               },
           .prefill = [](Ctx& ctx,
                         const Cell& cell) { ctx.sn.prefill(static_cast<std::size_t>(cell.args[0] + 1)); },
           .run =
               [spec](Ctx& ctx, const Cell& cell) {
                 auto rec = make_record(cell, {{"m", arg_str(cell.args[0])},
                                               {"n", arg_str(cell.args[1])}});
                 rec.holds = spec.fn(ctx.sn, static_cast<std::size_t>(cell.args[0]),
                                     static_cast<std::size_t>(cell.args[1]));
                 return rec;
               }});
    }

    add({.name = "staudt_clausen_check",
         .enumerate =
             [](const CampaignConfig& c, const std::optional<ExactInt>& p, const CheckDef* d,
                std::vector<Cell>& out) {
               for (std::int64_t k = 1; k <= c.n_max; ++k) out.push_back({d, p, {k}});
             },
         .prefill = [](Ctx& ctx,
                       const Cell& cell) { ctx.sn.prefill(static_cast<std::size_t>(2 * cell.args[0])); },
         .run =
             [](Ctx& ctx, const Cell& cell) {
               auto rec = make_record(cell, {{"k", arg_str(cell.args[0])}});
               rec.holds =
                   staudt_clausen_check(ctx.sn, static_cast<std::size_t>(cell.args[0]), *cell.p);
               return rec;
             }});

    std::sort(v.begin(), v.end(),
              [](const CheckDef& a, const CheckDef& b) { return a.name < b.name; });
    return v;
  }();
  return defs;
}

const CheckDef* find_check(const std::string& name) {
  const auto& defs = registry();
  const auto it = std::lower_bound(defs.begin(), defs.end(), name,
                                   [](const CheckDef& d, const std::string& n) { return d.name < n; });
  if (it == defs.end() || it->name != name) return nullptr;
  return &*it;
}

CampaignConfig canonicalize(const CampaignConfig& config) {
  CampaignConfig c = config;
  if (c.m_max < 1 || c.r_max < 1 || c.n_max < 1)
    throw ConfigInvalid("campaign: m_max, r_max, n_max must all be >= 1");
  if (c.workers < 1) throw ConfigInvalid("campaign: workers must be >= 1");
  std::sort(c.checks.begin(), c.checks.end());
  c.checks.erase(std::unique(c.checks.begin(), c.checks.end()), c.checks.end());
  for (const auto& name : c.checks)
    if (find_check(name) == nullptr) throw ConfigInvalid("campaign: unknown check '" + name + "'");
  std::sort(c.primes.begin(), c.primes.end());
  c.primes.erase(std::unique(c.primes.begin(), c.primes.end()), c.primes.end());
  for (const auto& p : c.primes)
    if (!is_odd_prime(p)) throw ConfigInvalid("campaign: " + p.str() + " is not an odd prime");
  return c;
}

}  // namespace

const std::vector<std::string>& campaign_check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& def : registry()) n.push_back(def.name);
    return n;
  }();
  return names;
}

CampaignReport run_campaign(const CampaignConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  CampaignReport report;
  report.config = canonicalize(config);

  std::vector<Cell> cells;
  for (const auto& name : report.config.checks) {
    const CheckDef* def = find_check(name);
    if (def->uses_primes) {
      for (const auto& p : report.config.primes) def->enumerate(report.config, p, def, cells);
    } else {
      def->enumerate(report.config, std::nullopt, def, cells);
    }
  }

  Ctx ctx;
  std::atomic<std::size_t> skipped{0};
  for (const Cell& cell : cells) {
    if (!cell.def->prefill) continue;
    try {
      cell.def->prefill(ctx, cell);
    } catch (const PreconditionViolated&) {
      // the runner will skip this cell too
    }
  }
  ctx.seq.freeze();
  ctx.sn.freeze();

  enum class Status : char { Ok, Skipped, Errored };
  std::vector<CheckRecord> results(cells.size());
  std::vector<Status> status(cells.size(), Status::Ok);

  const auto run_cell = [&](std::size_t i) {
    const Cell& cell = cells[i];
    try {
      results[i] = cell.def->run(ctx, cell);
    } catch (const PreconditionViolated&) {
      status[i] = Status::Skipped;
      skipped.fetch_add(1, std::memory_order_relaxed);
    } catch (const DenominatorNotInvertible&) {
      status[i] = Status::Skipped;  // unusable cell, same as a failed precondition
      skipped.fetch_add(1, std::memory_order_relaxed);
    } catch (const std::exception& e) {
      CheckRecord rec;
      rec.check = cell.def->name;
      rec.p = cell.p;
      rec.error = e.what();
      results[i] = std::move(rec);
      status[i] = Status::Errored;
    }
  };

  const unsigned workers = std::min<unsigned>(report.config.workers,
                                              std::max<std::size_t>(cells.size(), 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
          run_cell(i);
      });
    for (auto& t : pool) t.join();
  }
  ctx.seq.thaw();
  ctx.sn.thaw();

  report.records.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (status[i] == Status::Skipped) continue;
    report.records.push_back(std::move(results[i]));
    auto& rec = report.records.back();
    if (status[i] == Status::Errored)
      ++report.summary.errored;
    else if (rec.holds)
      ++report.summary.passed;
    else
      ++report.summary.failed;
  }
  report.summary.total = report.records.size();
  report.summary.skipped = skipped.load();
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

Json record_to_json(const CheckRecord& rec) {
  Json j;
  j["check"] = rec.check;
  j["p"] = rec.p ? Json(rec.p->str()) : Json(nullptr);
  j["k_required"] = rec.k_required ? Json(*rec.k_required) : Json(nullptr);
  Json params = Json::object();
  for (const auto& [key, value] : rec.params) params[key] = value;
  j["params"] = std::move(params);
  j["lhs_residue"] = rec.lhs_residue ? Json(*rec.lhs_residue) : Json(nullptr);
  j["rhs_residue"] = rec.rhs_residue ? Json(*rec.rhs_residue) : Json(nullptr);
  j["achieved_valuation"] = rec.achieved_valuation ? Json(*rec.achieved_valuation) : Json(nullptr);
  j["holds"] = rec.holds;
  if (rec.error) j["error"] = *rec.error;
  return j;
}

Json config_to_json(const CampaignConfig& c) {
  Json j;
  j["checks"] = c.checks;
  Json primes = Json::array();
  for (const auto& p : c.primes) primes.push_back(p.str());
  j["primes"] = std::move(primes);
  j["m_max"] = c.m_max;
  j["r_max"] = c.r_max;
  j["n_max"] = c.n_max;
  j["format"] = c.format == ReportFormat::JsonLines ? "jsonlines" : "csv-summary";
  // workers is an execution detail; leaving it out keeps reports byte-identical
  // across worker counts
  return j;
}

}  // namespace

void write_report(const CampaignReport& report, std::ostream& os) {
  if (report.config.format == ReportFormat::CsvSummary) {
    os << "check,p,total,passed,failed,errored\n";
    std::map<std::pair<std::string, std::string>, std::array<std::size_t, 4>> rows;
    std::vector<std::pair<std::string, std::string>> order;
    for (const auto& rec : report.records) {
      const auto key = std::make_pair(rec.check, rec.p ? rec.p->str() : std::string());
      auto [it, inserted] = rows.try_emplace(key, std::array<std::size_t, 4>{0, 0, 0, 0});
      if (inserted) order.push_back(key);
      auto& row = it->second;
      ++row[0];
      if (rec.error)
        ++row[3];
      else if (rec.holds)
        ++row[1];
      else
        ++row[2];
    }
    for (const auto& key : order) {
      const auto& row = rows[key];
      os << key.first << ',' << key.second << ',' << row[0] << ',' << row[1] << ',' << row[2]
         << ',' << row[3] << '\n';
    }
    os << "TOTAL,," << report.summary.total << ',' << report.summary.passed << ','
       << report.summary.failed << ',' << report.summary.errored << '\n';
    os << "SKIPPED,," << report.summary.skipped << ",,,\n";
    return;
  }

  for (const auto& rec : report.records) os << record_to_json(rec).dump() << '\n';
  Json summary;
  summary["summary"] = {{"total", report.summary.total},
                        {"passed", report.summary.passed},
                        {"failed", report.summary.failed},
                        {"errored", report.summary.errored},
                        {"skipped", report.summary.skipped}};
  summary["config"] = config_to_json(report.config);
  os << summary.dump() << '\n';
  os << Json{{"wall_seconds", report.wall_seconds}}.dump() << '\n';
}

void emit_sequences(Sequences& seq, char id, std::size_t n_max, SeqFormat format,
                    std::ostream& os) {
  const auto value = [&](std::size_t n) -> const ExactInt& {
    switch (id) {
      case 'P': return seq.P(n);
      case 'S': return seq.S(n);
      case 'F': return seq.F(n);
      default: throw ConfigInvalid(std::string("emit_sequences: unknown sequence id '") + id + "'");
    }
  };
  value(n_max);  // fill once up front
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (format == SeqFormat::Csv) {
      os << n << ',' << value(n).str() << '\n';
    } else {
      Json j;
      j["n"] = n;
      j["value"] = value(n).str();
      os << j.dump() << '\n';
    }
  }
  if (!os) throw OutputUnwritable("emit_sequences: stream write failed");
}

}  // namespace clf
