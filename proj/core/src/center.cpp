#include "dra/center.hpp"

namespace dra {

CasimirId casimir_from_string(const std::string& s) {
  if (s == "linear_h") return CasimirId::LinearH;
  if (s == "linear_t") return CasimirId::LinearT;
  if (s == "quadratic") return CasimirId::Quadratic;
  if (s == "sl_linear") return CasimirId::SlLinear;
  if (s == "sl3_C1") return CasimirId::Sl3C1;
  if (s == "sl3_C2") return CasimirId::Sl3C2;
  if (s == "sl2_C1") return CasimirId::Sl2C1;
  if (s == "sl2_C2") return CasimirId::Sl2C2;
  throw Error("unknown central element tag: " + s);
}

std::string to_string(CasimirId id) {
  switch (id) {
    case CasimirId::LinearH: return "linear_h";
    case CasimirId::LinearT: return "linear_t";
    case CasimirId::Quadratic: return "quadratic";
    case CasimirId::SlLinear: return "sl_linear";
    case CasimirId::Sl3C1: return "sl3_C1";
    case CasimirId::Sl3C2: return "sl3_C2";
    case CasimirId::Sl2C1: return "sl2_C1";
    case CasimirId::Sl2C2: return "sl2_C2";
  }
  throw Error("unreachable");
}

namespace {

CoeffFrac h_poly(int k, int n) { return CoeffFrac::h_var(k, n); }

CoeffFrac th_plus(int i, int j, long c, int n) {
  return CoeffFrac::from_poly(ThetaPoly::theta(i, n) - ThetaPoly::theta(j, n) +
                              ThetaPoly::constant(n, c));
}

CoeffFrac frac_lin(int i, int j, long top, long bot, int n) {
  return th_plus(i, j, top, n).div_by_factor(LinearFactor::theta_diff(i, j, bot, n));
}

}  // namespace

ZEl central_element(const AlgebraContext& ctx, CasimirId id, Backend backend) {
  int n = ctx.n();
  auto t = [&](int k) { return ctx.generator({k, k}); };
  switch (id) {
    case CasimirId::LinearH: {
      CoeffFrac sum = CoeffFrac::zero(n);
      for (int k = 1; k <= n; ++k) sum += h_poly(k, n);
      return ZEl::coefficient(sum);
    }
    case CasimirId::LinearT: {
      ZEl out(n);
      for (int k = 1; k <= n; ++k) out += t(k);
      return out;
    }
    case CasimirId::Quadratic: {
      ZEl out(n);
      for (int k = 1; k <= n; ++k)
        out += t(k).right_mul(h_poly(k, n) - CoeffFrac::constant(n, Rat(2 * k)));
      return out;
    }
    case CasimirId::SlLinear: {
      ZEl out(n);
      for (int u = 1; u < n; ++u)
        for (int v = 1; v < n; ++v) {
          Rat cuv(static_cast<long>(std::min(u, v)) * (n - std::max(u, v)), n);
          cuv.canonicalize();
          out += (t(v) - t(v + 1)).right_mul(th_plus(u, u + 1, 1, n).scaled(cuv));
        }
      return out;
    }
    case CasimirId::Sl3C1: {
      if (n != 3) throw Error("sl3_C1 requires n = 3");
      // t_a (2h_a + h_b + 6) + t_b (h_a + 2h_b + 6), h_a = th12 - 1, h_b = th23 - 1
      ZEl ta = t(1) - t(2), tb = t(2) - t(3);
      CoeffFrac ca = CoeffFrac::from_poly(ThetaPoly::theta(1, n).scaled(2) -
                                          ThetaPoly::theta(2, n) - ThetaPoly::theta(3, n) +
                                          ThetaPoly::constant(n, 3));
      CoeffFrac cb = CoeffFrac::from_poly(ThetaPoly::theta(1, n) + ThetaPoly::theta(2, n) -
                                          ThetaPoly::theta(3, n).scaled(2) +
                                          ThetaPoly::constant(n, 3));
      return ta.right_mul(ca) + tb.right_mul(cb);
    }
    case CasimirId::Sl3C2: {
      if (n != 3) throw Error("sl3_C2 requires n = 3");
      ZEl ta = t(1) - t(2), tb = t(2) - t(3);
      CoeffFrac ha = th_plus(1, 2, -1, n), hb = th_plus(2, 3, -1, n);
      ZEl out = (ctx.mul(ta, ta, backend) + ctx.mul(tb, tb, backend) + ctx.mul(ta, tb, backend))
                    .scaled(Rat(1, 3));
      out += ZEl::coefficient((ha * ha + hb * hb + ha * hb).scaled(Rat(1, 3)));
      out += ctx.mul(ctx.generator({2, 1}), ctx.generator({1, 2}), backend)
                 .right_mul(frac_lin(1, 2, 2, 1, n));
      out += ctx.mul(ctx.generator({3, 2}), ctx.generator({2, 3}), backend)
                 .right_mul(frac_lin(2, 3, 2, 1, n));
      CoeffFrac tail = frac_lin(1, 3, 2, 1, n) *
                       (CoeffFrac::one(n) +
                        CoeffFrac::one(n).div_by_factor(LinearFactor::theta_diff(1, 2, 0, n)) +
                        CoeffFrac::one(n).div_by_factor(LinearFactor::theta_diff(2, 3, 0, n)));
      out += ctx.mul(ctx.generator({3, 1}), ctx.generator({1, 3}), backend).right_mul(tail);
      out += ZEl::coefficient((ha + hb).scaled(Rat(2)));
      return out;
    }
    case CasimirId::Sl2C1: {
      if (n != 2) throw Error("sl2_C1 requires n = 2");
      return (t(1) - t(2)).right_mul(th_plus(1, 2, 1, n));
    }
    case CasimirId::Sl2C2: {
      if (n != 2) throw Error("sl2_C2 requires n = 2");
      ZEl td = t(1) - t(2);
      ZEl out = ctx.mul(ctx.generator({2, 1}), ctx.generator({1, 2}), backend)
                    .right_mul(frac_lin(1, 2, 2, 1, n));
      out += ctx.mul(td, td, backend).scaled(Rat(1, 4));
      // h(h+4)/4 = (th12 - 1)(th12 + 3)/4
      out += ZEl::coefficient((th_plus(1, 2, -1, n) * th_plus(1, 2, 3, n)).scaled(Rat(1, 4)));
      return out;
    }
  }
  throw Error("unreachable");
}

bool is_central(const AlgebraContext& ctx, const ZEl& x, Backend backend) {
  for (GeneratorId g : ctx.generators()) {
    ZEl zg = ctx.generator(g);
    if (!(ctx.mul(x, zg, backend) == ctx.mul(zg, x, backend))) return false;
  }
  return true;
}

BlockSplit BlockSplit::make(int n, int m) {
  BlockSplit s;
  s.n = n;
  s.m = m;
  int N = n + m;
  s.full = AlgebraContext::make(N);
  s.tensor = AlgebraContext::make(TotalOrder::default_order(N), RootSupport::block(n, m));
  s.block_ord = AlgebraContext::make(TotalOrder::block_adapted(n, m));
  return s;
}

namespace {

bool is_cross(GeneratorId g, int n) { return (g.row > n) != (g.col > n); }

}  // namespace

ZEl embed_iota(const BlockSplit& split, const ZEl& x_tensor) {
  // the tensor coset basis is the cross-free part of the full coset basis
  CosetEl c = split.tensor->circ_to_coset(x_tensor);
  return split.full->coset_to_circ(c);
}

ZEl cut_pi(const BlockSplit& split, const ZEl& x_full) {
  CosetEl c = split.full->circ_to_coset(x_full);
  CosetEl blocked = coset_reduce(inject(c), split.block_ord->order());
  CosetEl kept(split.full->n());
  for (const auto& [w, coeff] : blocked.terms) {
    bool cross = false;
    for (GeneratorId g : w)
      if (is_cross(g, split.n)) { cross = true; break; }
    if (!cross) kept.add_term(w, coeff);
  }
  // cross-free block-adapted words are ordered under the default rule as well
  return split.tensor->coset_to_circ(kept);
}

StabilizationReport check_stabilization(const BlockSplit& split, const ZEl& x, const ZEl& y,
                                        Backend backend) {
  StabilizationReport rep;
  ZEl prod_up = split.full->mul(embed_iota(split, x), embed_iota(split, y), backend);
  ZEl prod_down = embed_iota(split, split.tensor->mul(x, y, backend));
  rep.difference = prod_up - prod_down;
  CosetEl blocked =
      coset_reduce(inject(split.full->circ_to_coset(rep.difference)), split.block_ord->order());
  rep.in_J = true;
  for (const auto& [w, c] : blocked.terms) {
    bool has_lowering = false, has_raising = false;
    for (GeneratorId g : w) {
      if (g.row > split.n && g.col <= split.n) has_lowering = true;
      if (g.row <= split.n && g.col > split.n) has_raising = true;
    }
    if (!has_lowering || !has_raising) rep.in_J = false;
  }
  return rep;
}

CutHomReport check_cut_homomorphism(const BlockSplit& split, const ZEl& x_central, const ZEl& y,
                                    Backend backend) {
  CutHomReport rep;
  rep.input_central = is_central(*split.full, x_central, backend);
  ZEl px = cut_pi(split, x_central), py = cut_pi(split, y);
  rep.left_homomorphic =
      cut_pi(split, split.full->mul(x_central, y, backend)) == split.tensor->mul(px, py, backend);
  rep.right_homomorphic =
      cut_pi(split, split.full->mul(y, x_central, backend)) == split.tensor->mul(py, px, backend);
  rep.image_central = is_central(*split.tensor, px, backend);
  return rep;
}

std::map<std::pair<int, int>, ZEl> collect_by_tail_factors(const BlockSplit& split, const ZEl& x) {
  if (split.n != 2 || split.m != 1) throw Error("collect_by_tail_factors expects the (2,1) split");
  std::map<std::pair<int, int>, ZEl> out;
  for (const auto& [w, c] : x.terms) {
    int tpow = 0;
    std::vector<GeneratorId> head;
    for (GeneratorId g : w) {
      if (g.row == 3 && g.col == 3) ++tpow;
      else if (g.row <= 2 && g.col <= 2) head.push_back(g);
      else throw Error("collect_by_tail_factors: cross-block letter present");
    }
    for (const auto& f : c.den())
      if (f.a[2] != 0) throw Error("collect_by_tail_factors: theta_3 in a denominator");
    // expand the numerator in powers of h_3 = theta_3 + 3
    std::map<int, ThetaPoly> by_power;  // h_3 power -> polynomial over theta_1, theta_2
    for (const auto& [e, q] : c.num().terms) {
      int d3 = e[2];
      // (h_3 - 3)^{d3} coefficients
      std::vector<Rat> coef = {Rat(1)};
      for (int p = 0; p < d3; ++p) {
        std::vector<Rat> next(p + 2, Rat(0));
        for (int r = 0; r <= p; ++r) {
          next[r] += coef[r] * Rat(-3);
          next[r + 1] += coef[r];
        }
        coef = std::move(next);
      }
      std::vector<int> e2 = {e[0], e[1]};
      for (int j = 0; j <= d3; ++j) {
        if (coef[j] == 0) continue;
        auto it = by_power.find(j);
        if (it == by_power.end()) it = by_power.emplace(j, ThetaPoly(2)).first;
        it->second.add_term(e2, q * coef[j]);
      }
    }
    std::vector<LinearFactor> den2;
    for (const auto& f : c.den()) {
      LinearFactor g(2);
      g.a = {f.a[0], f.a[1]};
      g.c = f.c;
      den2.push_back(g);
    }
    for (auto& [j, poly] : by_power) {
      if (poly.is_zero()) continue;
      CoeffFrac c2 = CoeffFrac::from_parts(poly, den2, c.scale());
      auto key = std::make_pair(tpow, j);
      auto it = out.find(key);
      if (it == out.end()) it = out.emplace(key, ZEl(2)).first;
      it->second.add_term(head, c2);
    }
  }
  return out;
}

}  // namespace dra
