// Acceptance suite: runs every gate criterion and prints one line per
// criterion. Exact arithmetic throughout; every comparison is equality of
// canonical forms.

#include <chrono>
#include <iostream>
#include <random>

#include "dra/center.hpp"
#include "dra/expr.hpp"
#include "dra/relations.hpp"
#include "dra/sltable.hpp"
#include "dra/symmetry.hpp"

using namespace dra;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int num, const std::string& what, bool ok, Clock::time_point t0) {
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("criterion %2d: %s  %s (%.1f s)\n", num, ok ? "PASS" : "FAIL", what.c_str(), secs);
  std::fflush(stdout);
  if (!ok) ++failures;
}

// ---- builders for the expected sl_3 table ------------------------------

constexpr int N3 = 3;

CoeffFrac ha(long c) {  // h_alpha + c = theta_12 + (c - 1)
  return CoeffFrac::from_poly(ThetaPoly::theta(1, N3) - ThetaPoly::theta(2, N3) +
                              ThetaPoly::constant(N3, c - 1));
}
CoeffFrac hb(long c) {
  return CoeffFrac::from_poly(ThetaPoly::theta(2, N3) - ThetaPoly::theta(3, N3) +
                              ThetaPoly::constant(N3, c - 1));
}
CoeffFrac hab(long c) {
  return CoeffFrac::from_poly(ThetaPoly::theta(1, N3) - ThetaPoly::theta(3, N3) +
                              ThetaPoly::constant(N3, c - 2));
}
LinearFactor fa(long c) { return LinearFactor::theta_diff(1, 2, c - 1, N3); }
LinearFactor fb(long c) { return LinearFactor::theta_diff(2, 3, c - 1, N3); }
LinearFactor fab(long c) { return LinearFactor::theta_diff(1, 3, c - 2, N3); }

CoeffFrac quot(CoeffFrac num, std::initializer_list<LinearFactor> dens) {
  for (const auto& f : dens) num = num.div_by_factor(f);
  return num;
}

struct ExpectedRelation {
  int lhs1, lhs2;
  std::map<std::vector<int>, CoeffFrac> rhs;
};

// ranks: 0 z_{-a-b}, 1 z_{-a}, 2 z_{-b}, 3 t_a, 4 t_b, 5 z_b, 6 z_a, 7 z_{a+b}
std::vector<ExpectedRelation> expected_sl3_table() {
  std::vector<ExpectedRelation> t;
  auto one = CoeffFrac::one(N3);
  // type 1
  t.push_back({7, 6, {{{6, 7}, quot(hb(2), {fb(1)})}}});
  t.push_back({7, 5, {{{5, 7}, quot(ha(2), {fa(1)})}}});
  t.push_back({6, 2, {{{2, 6}, quot(hab(3), {fab(2)})}}});
  t.push_back({5, 1, {{{1, 5}, quot(hab(3), {fab(2)})}}});
  t.push_back({1, 0, {{{0, 1}, quot(hb(2), {fb(1)})}}});
  t.push_back({2, 0, {{{0, 2}, quot(ha(2), {fa(1)})}}});
  // weight a+b
  t.push_back({6, 5,
               {{{3, 7}, quot(-one, {fa(1)})},
                {{4, 7}, quot(-one, {fb(1)})},
                {{5, 6}, one}}});
  t.push_back({7, 3,
               {{{3, 7}, quot(ha(0) * hb(0) + hb(0) * hb(0) + ha(0).scaled(2) + hb(0).scaled(6) +
                                  CoeffFrac::constant(N3, 9),
                              {fb(2), fab(3)})},
                {{4, 7}, quot(hb(0) * hb(0) + ha(0) + hb(0).scaled(6) + CoeffFrac::constant(N3, 9),
                              {fb(1), fb(2), fab(3)})},
                {{5, 6}, quot(-(ha(0) + hb(0).scaled(2) + CoeffFrac::constant(N3, 6)),
                              {fa(2), fb(2)})}}});
  t.push_back({7, 4,
               {{{3, 7}, quot(hb(0), {fb(2), fab(3)})},
                {{4, 7}, quot(hb(0) * (ha(0) * hb(0) + hb(0) * hb(0) + ha(0).scaled(3) +
                                       hb(0).scaled(7) + CoeffFrac::constant(N3, 11)),
                              {fb(1), fb(2), fab(3)})},
                {{5, 6}, quot(ha(0).scaled(2) + hb(0) + CoeffFrac::constant(N3, 6),
                              {fa(2), fb(2)})}}});
  // weight a
  t.push_back({6, 3,
               {{{3, 6}, quot(ha(4), {fa(2)})},
                {{2, 7}, quot(-(ha(0) + hb(0).scaled(2) + CoeffFrac::constant(N3, 6)),
                              {fb(1), fab(3)})}}});
  t.push_back({6, 4,
               {{{3, 6}, quot(-one, {fa(2)})},
                {{4, 6}, one},
                {{2, 7}, quot(ha(0).scaled(2) + hb(0) + CoeffFrac::constant(N3, 6),
                              {fb(1), fab(3)})}}});
  t.push_back({7, 2,
               {{{3, 6}, quot(-hb(-1), {fb(0), fab(2)})},
                {{4, 6}, quot(-(ha(0) + hb(0).scaled(2) + CoeffFrac::constant(N3, 2)),
                              {fb(0), fab(2)})},
                {{2, 7}, quot(hb(2) * hb(-1), {fb(0), fb(1)})}}});
  // weight b
  t.push_back({5, 3,
               {{{3, 5}, one},
                {{4, 5}, quot(-one, {fb(2)})},
                {{1, 7}, quot(-(ha(0) + hb(0).scaled(2) + CoeffFrac::constant(N3, 6)),
                              {fa(1), fab(3)})}}});
  t.push_back({5, 4,
               {{{4, 5}, quot(hb(4), {fb(2)})},
                {{1, 7}, quot(ha(0).scaled(2) + hb(0) + CoeffFrac::constant(N3, 6),
                              {fa(1), fab(3)})}}});
  t.push_back({7, 1,
               {{{3, 5}, quot(ha(0).scaled(2) + hb(0) + CoeffFrac::constant(N3, 2),
                              {fa(0), fab(2)})},
                {{4, 5}, quot(ha(-1), {fa(0), fab(2)})},
                {{1, 7}, quot(ha(2) * ha(-1), {fa(0), fa(1)})}}});
  // weight -b
  t.push_back({3, 2,
               {{{2, 3}, one},
                {{2, 4}, quot(-one, {fb(0)})},
                {{0, 6}, quot(-(ha(0) + hb(0).scaled(2) + CoeffFrac::constant(N3, 3)),
                              {fa(2), fab(2)})}}});
  t.push_back({4, 2,
               {{{2, 4}, quot(hb(2), {fb(0)})},
                {{0, 6}, quot(ha(0).scaled(2) + hb(0) + CoeffFrac::constant(N3, 6),
                              {fa(2), fab(2)})}}});
  t.push_back({6, 0,
               {{{2, 3}, quot(ha(0).scaled(2) + hb(0) + CoeffFrac::constant(N3, 2),
                              {fa(1), fab(1)})},
                {{2, 4}, quot(ha(0), {fa(1), fab(1)})},
                {{0, 6}, quot(ha(0) * ha(3), {fa(1), fa(2)})}}});
  // weight -a
  t.push_back({3, 1,
               {{{1, 3}, quot(ha(2), {fa(0)})},
                {{0, 5}, quot(-(ha(0) + hb(0).scaled(2) + CoeffFrac::constant(N3, 6)),
                              {fb(2), fab(2)})}}});
  t.push_back({4, 1,
               {{{1, 3}, quot(-one, {fa(0)})},
                {{1, 4}, one},
                {{0, 5}, quot(ha(0).scaled(2) + hb(0) + CoeffFrac::constant(N3, 3),
                              {fb(2), fab(2)})}}});
  t.push_back({5, 0,
               {{{1, 3}, quot(-hb(0), {fb(1), fab(1)})},
                {{1, 4}, quot(-(ha(0) + hb(0).scaled(2) + CoeffFrac::constant(N3, 2)),
                              {fb(1), fab(1)})},
                {{0, 5}, quot(hb(0) * hb(3), {fb(1), fb(2)})}}});
  // weight -a-b
  t.push_back({2, 1,
               {{{0, 3}, quot(-one, {fa(0)})},
                {{0, 4}, quot(-one, {fb(0)})},
                {{1, 2}, one}}});
  t.push_back({3, 0,
               {{{0, 3}, quot(ha(0) * hb(0) + hb(0) * hb(0) + ha(0) + hb(0).scaled(3) +
                                  CoeffFrac::constant(N3, 3),
                              {fb(1), fab(1)})},
                {{0, 4}, quot(hb(0) * hb(0) + ha(0) + hb(0).scaled(4) + CoeffFrac::constant(N3, 3),
                              {fb(0), fb(1), fab(1)})},
                {{1, 2}, quot(-(ha(0) + hb(0).scaled(2) + CoeffFrac::constant(N3, 3)),
                              {fa(1), fb(1)})}}});
  t.push_back({4, 0,
               {{{0, 3}, quot(hb(-1), {fb(1), fab(1)})},
                {{0, 4}, quot(hb(-1) * (ha(0) * hb(0) + hb(0) * hb(0) + ha(0).scaled(2) +
                                        hb(0).scaled(4) + CoeffFrac::constant(N3, 3)),
                              {fb(0), fb(1), fab(1)})},
                {{1, 2}, quot(ha(0).scaled(2) + hb(0) + CoeffFrac::constant(N3, 3),
                              {fa(1), fb(1)})}}});
  // type 4a
  t.push_back({4, 3, {{{3, 4}, one}}});
  // type 4b
  t.push_back({6, 1,
               {{{}, ha(0)},
                {{3, 3}, quot(-one, {fa(0)})},
                {{1, 6}, quot(ha(0) * ha(3), {fa(1), fa(2)})},
                {{2, 5}, quot(-hb(3), {fb(2), fab(2)})},
                {{0, 7}, quot(ha(0) * hab(4), {fa(1), fb(1), fab(3)})}}});
  t.push_back({5, 2,
               {{{}, hb(0)},
                {{4, 4}, quot(-one, {fb(0)})},
                {{1, 6}, quot(-ha(3), {fa(2), fab(2)})},
                {{2, 5}, quot(hb(0) * hb(3), {fb(1), fb(2)})},
                {{0, 7}, quot(hb(0) * hab(4), {fa(1), fb(1), fab(3)})}}});
  {
    // theta_a^2 theta_b + theta_a theta_b^2 + theta_a^2 + theta_a theta_b + theta_b^2,
    // with theta_a = h_a + 1, theta_b = h_b + 1
    CoeffFrac tha = ha(1), thb = hb(1);
    CoeffFrac poly =
        tha * tha * thb + tha * thb * thb + tha * tha + tha * thb + thb * thb;
    t.push_back(
        {7, 0,
         {{{}, quot(ha(0) * hb(0) * hab(2), {fa(1), fb(1)})},
          {{3, 3}, quot(-hb(0), {fb(1), fab(1)})},
          {{3, 4}, quot(CoeffFrac::constant(N3, -2), {fab(1)})},
          {{4, 4}, quot(-ha(0), {fa(1), fab(1)})},
          {{1, 6}, quot(-(ha(0) * ha(3)), {fa(1), fa(2), fb(1)})},
          {{2, 5}, quot(-(hb(0) * hb(3)), {fb(1), fb(2), fa(1)})},
          {{0, 7}, quot(ha(0) * hb(0) * hab(4) * poly,
                        {fa(1), fa(1), fb(1), fb(1), fab(2), fab(3)})}}});
  }
  return t;
}

std::vector<ExpectedRelation> expected_sl2_table() {
  // ranks: 0 z_-, 1 t, 2 z_+; h = theta_12 - 1
  int n = 2;
  auto h = [&](long c) {
    return CoeffFrac::from_poly(ThetaPoly::theta(1, n) - ThetaPoly::theta(2, n) +
                                ThetaPoly::constant(n, c - 1));
  };
  auto f = [&](long c) { return LinearFactor::theta_diff(1, 2, c - 1, n); };
  std::vector<ExpectedRelation> t;
  t.push_back({2, 1, {{{1, 2}, h(4).div_by_factor(f(2))}}});
  t.push_back({2, 0,
               {{{}, h(0)},
                {{1, 1}, (-CoeffFrac::one(n)).div_by_factor(f(0))},
                {{0, 2}, (h(0) * h(3)).div_by_factor(f(1)).div_by_factor(f(2))}}});
  t.push_back({1, 0, {{{0, 1}, h(2).div_by_factor(f(0))}}});
  return t;
}

bool match_tables(const SlTable& got, const std::vector<ExpectedRelation>& expect) {
  if (got.relations.size() != expect.size()) return false;
  bool ok = true;
  for (const auto& e : expect) {
    const SlTable::Relation* found = nullptr;
    for (const auto& r : got.relations)
      if (r.lhs1 == e.lhs1 && r.lhs2 == e.lhs2) found = &r;
    if (!found) {
      std::printf("  missing relation (%d,%d)\n", e.lhs1, e.lhs2);
      ok = false;
      continue;
    }
    if (!(found->rhs == e.rhs)) {
      std::printf("  relation %s * %s differs from the published table\n",
                  got.names[e.lhs1].c_str(), got.names[e.lhs2].c_str());
      ok = false;
    }
  }
  return ok;
}

ZEl random_word(const AlgebraContext& ctx, std::mt19937& rng, int max_len, Backend backend) {
  auto gens = ctx.generators();
  std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> len(1, max_len);
  int L = len(rng);
  ZEl acc = ctx.generator(gens[pick(rng)]);
  for (int k = 1; k < L; ++k) acc = ctx.mul(acc, ctx.generator(gens[pick(rng)]), backend);
  return acc;
}

}  // namespace

int main() {
  auto ctx2 = AlgebraContext::make(2);
  auto ctx3 = AlgebraContext::make(3);
  auto ctx4 = AlgebraContext::make(4);

  // 1. full relation verification, oracle backend, n = 2, 3, 4
  {
    auto t0 = Clock::now();
    bool ok = true;
    for (auto& [n, ctx] : std::vector<std::pair<int, ContextPtr>>{{2, ctx2}, {3, ctx3}, {4, ctx4}}) {
      auto rep = verify_relations(*ctx, relation_family_tags(), Backend::Oracle, 2);
      if (!rep.ok()) {
        ok = false;
        for (const auto& fl : rep.failures)
          std::printf("  n=%d %s residual nonzero\n", n, to_string(fl.id).c_str());
      }
    }
    report(1, "all defining relation families verify against the oracle (n = 2, 3, 4)", ok, t0);
  }

  // 2. sl_3 table reproduction under the section-6 order
  {
    auto t0 = Clock::now();
    auto table = emit_sl_table(3, Backend::Rewrite);
    bool ok = match_tables(table, expected_sl3_table());
    report(2, "DR(sl_3) ordering relations match the published table", ok, t0);
  }

  // 3. sl_2 relations; Casimir centrality and invariance
  {
    auto t0 = Clock::now();
    bool ok = match_tables(emit_sl_table(2, Backend::Rewrite), expected_sl2_table());
    ZEl c21 = central_element(*ctx2, CasimirId::Sl2C1);
    ZEl c22 = central_element(*ctx2, CasimirId::Sl2C2);
    ok = ok && is_central(*ctx2, c21) && is_central(*ctx2, c22);
    ZEl c31 = central_element(*ctx3, CasimirId::Sl3C1);
    ZEl c32 = central_element(*ctx3, CasimirId::Sl3C2);
    ok = ok && is_central(*ctx3, c31) && is_central(*ctx3, c32);
    for (const ZEl& c : {c31, c32}) {
      ok = ok && zhelobenko_fast(*ctx3, 1, c) == c && zhelobenko_fast(*ctx3, 2, c) == c;
      ok = ok && epsilon_involution(*ctx3, c) == c && omega_involution(*ctx3, c) == c;
    }
    report(3, "DR(sl_2) relations and the Casimir centrality/invariance suite", ok, t0);
  }

  // 4. braid suite at n = 3, 4
  {
    auto t0 = Clock::now();
    bool ok = true;
    for (auto& [n, ctx] : std::vector<std::pair<int, ContextPtr>>{{3, ctx3}, {4, ctx4}}) {
      for (GeneratorId g : all_generators(n)) {
        ZEl x = ctx->generator(g);
        for (int i = 1; i + 1 < n; ++i) {
          ZEl lhs = zhelobenko_fast(*ctx, i, zhelobenko_fast(*ctx, i + 1, zhelobenko_fast(*ctx, i, x)));
          ZEl rhs = zhelobenko_fast(*ctx, i + 1, zhelobenko_fast(*ctx, i, zhelobenko_fast(*ctx, i + 1, x)));
          ok = ok && lhs == rhs;
        }
        if (n == 4) {
          ZEl lhs = zhelobenko_fast(*ctx, 1, zhelobenko_fast(*ctx, 3, x));
          ZEl rhs = zhelobenko_fast(*ctx, 3, zhelobenko_fast(*ctx, 1, x));
          ok = ok && lhs == rhs;
        }
        for (int i = 1; i < n; ++i) {
          // inversion relation (invr)
          ZEl qq = zhelobenko_fast(*ctx, i, zhelobenko_fast(*ctx, i, x));
          CoeffFrac th = CoeffFrac::theta_diff(i, i + 1, n);
          ok = ok && qq == sigma_squared(*ctx, i, x).left_mul(th.inverse()).right_mul(th);
        }
      }
    }
    // q_w0^2 is conjugation by S = prod theta_ij at n = 3
    CoeffFrac S = CoeffFrac::one(3);
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j) S = S * CoeffFrac::theta_diff(i, j, 3);
    auto w0 = longest_word(3);
    for (GeneratorId g : all_generators(3)) {
      ZEl x = ctx3->generator(g);
      ZEl qq = braid_apply(*ctx3, w0, braid_apply(*ctx3, w0, x));
      ok = ok && qq.left_mul(S) == x.right_mul(S);
    }
    // q_sigma permutes the rotated Cartan generators
    for (int i = 1; i <= 3; ++i) {
      ok = ok && zhelobenko_fast(*ctx3, 1, tring_element(i, 3)) ==
                     tring_element(i == 1 ? 2 : i == 2 ? 1 : 3, 3);
      ok = ok && zhelobenko_fast(*ctx3, 2, tring_element(i, 3)) ==
                     tring_element(i == 2 ? 3 : i == 3 ? 2 : 1, 3);
    }
    report(4, "braid relations, inversion relation, q_w0 square, tring permutation", ok, t0);
  }

  // 5. cut suite at the (2,1) split
  {
    auto t0 = Clock::now();
    auto split = BlockSplit::make(2, 1);
    bool ok = true;
    ZEl c1 = central_element(*split.full, CasimirId::Sl3C1);
    ZEl c2 = central_element(*split.full, CasimirId::Sl3C2);
    ZEl cut1 = cut_pi(split, c1);
    ZEl cut2 = cut_pi(split, c2);
    // expected cut values, built in the tensor algebra
    const AlgebraContext& T = *split.tensor;
    auto mulT = [&](const ZEl& a, const ZEl& b) { return T.mul(a, b, Backend::Rewrite); };
    ZEl t3 = T.generator({3, 3});
    ZEl i2t = T.generator({1, 1}) + T.generator({2, 2});
    CoeffFrac i2h = CoeffFrac::h_var(1, 3) + CoeffFrac::h_var(2, 3);
    CoeffFrac h3 = CoeffFrac::h_var(3, 3);
    auto hplus = [&](long c) {
      return CoeffFrac::from_poly(ThetaPoly::theta(1, 3) - ThetaPoly::theta(2, 3) +
                                  ThetaPoly::constant(3, c - 1));
    };
    ZEl tdiff = T.generator({1, 1}) - T.generator({2, 2});
    ZEl csl21 = tdiff.right_mul(hplus(2));
    ZEl csl22 = mulT(T.generator({2, 1}), T.generator({1, 2}))
                    .right_mul(hplus(3).div_by_factor(LinearFactor::theta_diff(1, 2, 1, 3)));
    csl22 += mulT(tdiff, tdiff).scaled(Rat(1, 4));
    csl22 += ZEl::coefficient((hplus(0) * hplus(4)).scaled(Rat(1, 4)));
    ZEl expect1 = csl21.scaled(Rat(3, 2));
    expect1 += i2t.right_mul((i2h + CoeffFrac::constant(3, 6)).scaled(Rat(1, 2)));
    expect1 -= t3.right_mul(i2h + CoeffFrac::constant(3, 6));
    expect1 -= i2t.right_mul(h3);
    expect1 += t3.right_mul(h3.scaled(2));
    ok = ok && cut1 == expect1;
    ZEl expect2 = csl22;
    expect2 += mulT(i2t, i2t).scaled(Rat(1, 12));
    expect2 += ZEl::coefficient((i2h * (i2h + CoeffFrac::constant(3, 12))).scaled(Rat(1, 12)));
    expect2 -= mulT(i2t, t3).scaled(Rat(1, 3));
    expect2 -= ZEl::coefficient((i2h.scaled(Rat(1, 3)) + CoeffFrac::constant(3, 2)) * h3);
    expect2 += (mulT(t3, t3) + ZEl::coefficient(h3 * h3)).scaled(Rat(1, 3));
    ok = ok && cut2 == expect2;
    // the coefficients of t_3^i h_3^j in both cuts are central in Z_2
    auto z2 = AlgebraContext::make(2);
    for (const ZEl& cut : {cut1, cut2})
      for (auto& [key, piece] : collect_by_tail_factors(split, cut))
        ok = ok && is_central(*z2, piece);
    // Harish-Chandra behavior for x = I^{(3,t)} and random y
    std::mt19937 rng(2026);
    ZEl i3t = central_element(*split.full, CasimirId::LinearT);
    for (int k = 0; k < 5; ++k) {
      ZEl y = random_word(*split.full, rng, 2, Backend::Rewrite);
      auto rep = check_cut_homomorphism(split, i3t, y);
      ok = ok && rep.ok();
    }
    // Proposition 1 membership for random tensor pairs
    for (int k = 0; k < 10; ++k) {
      ZEl x = random_word(*split.tensor, rng, 2, Backend::Rewrite);
      ZEl y = random_word(*split.tensor, rng, 2, Backend::Rewrite);
      ok = ok && check_stabilization(split, x, y).in_J;
    }
    report(5, "cut of the sl_3 Casimirs, centrality of the pieces, Harish-Chandra identities",
           ok, t0);
  }

  // 6. backend equivalence
  {
    auto t0 = Clock::now();
    bool ok = true;
    for (auto& [n, ctx] : std::vector<std::pair<int, ContextPtr>>{{2, ctx2}, {3, ctx3}, {4, ctx4}}) {
      (void)n;
      for (GeneratorId a : all_generators(ctx->n()))
        for (GeneratorId b : all_generators(ctx->n()))
          ok = ok && ctx->mul(ctx->generator(a), ctx->generator(b), Backend::Oracle) ==
                         ctx->mul(ctx->generator(a), ctx->generator(b), Backend::Rewrite);
    }
    std::mt19937 rng(7);
    auto gens = all_generators(3);
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<int> len(1, 3);
    for (int w = 0; w < 50 && ok; ++w) {
      int L = len(rng);
      ZEl o = ctx3->generator(gens[pick(rng)]);
      ZEl r = o;
      for (int k = 1; k < L; ++k) {
        GeneratorId g = gens[pick(rng)];
        o = ctx3->mul(o, ctx3->generator(g), Backend::Oracle);
        r = ctx3->mul(r, ctx3->generator(g), Backend::Rewrite);
      }
      ok = ok && o == r;
    }
    report(6, "rewriting and oracle products agree on all pairs (n <= 4) and 50 random words",
           ok, t0);
  }

  // 7. commutativity of the rotated Cartan images
  {
    auto t0 = Clock::now();
    bool ok = true;
    for (auto& ctx : {ctx2, ctx3, ctx4})
      for (int i = 1; i <= ctx->n(); ++i)
        for (int j = i + 1; j <= ctx->n(); ++j) {
          ZEl a = tring_element(i, ctx->n()), b = tring_element(j, ctx->n());
          ok = ok && ctx->mul(a, b, Backend::Rewrite) == ctx->mul(b, a, Backend::Rewrite);
        }
    report(7, "[tring_i, tring_j] = 0 for all pairs, n <= 4", ok, t0);
  }

  // 8. denominator property of the structure constants
  {
    auto t0 = Clock::now();
    bool ok = true;
    for (auto& ctx : {ctx2, ctx3, ctx4}) ok = ok && structure_table_denominators_ok(*ctx);
    report(8, "structure-constant denominators are products of theta_ij + l, l >= -1, n <= 4",
           ok, t0);
  }

  // 9. commutative limit along a generic ray
  {
    auto t0 = Clock::now();
    bool ok = true;
    std::vector<Rat> ray = {Rat(2), Rat(3), Rat(5)};
    for (GeneratorId a : all_generators(3))
      for (GeneratorId b : all_generators(3))
        ok = ok && homogeneous_limit_check(*ctx3, a, b, ray).ok;
    report(9, "homogeneous parts tend to the commutative algebra along the ray (2,3,5)", ok, t0);
  }

  // 10. large-n spot checks (full coverage beyond n = 4 is out of scope)
  {
    auto t0 = Clock::now();
    auto ctx5 = AlgebraContext::make(5);
    bool ok = true;
    for (const RelationId& id : std::vector<RelationId>{{"1", 1, {1, 2, 3}},
                                                        {"1", 2, {5, 2, 4}},
                                                        {"1", 1, {3, 1, 5}},
                                                        {"4b", 0, {1, 2}},
                                                        {"4b", 0, {2, 5}},
                                                        {"4b", 0, {4, 5}}})
      ok = ok && relation_residual(*ctx5, id, Backend::Oracle).is_zero();
    report(10, "n = 5 spot checks of families 1 and 4b (full large-n coverage intentionally omitted)",
           ok, t0);
  }

  std::printf("%s\n", failures == 0 ? "acceptance: all criteria passed"
                                    : "acceptance: FAILURES present");
  return failures == 0 ? 0 : 1;
}
