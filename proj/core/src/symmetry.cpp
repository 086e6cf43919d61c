#include "dra/symmetry.hpp"

#include <sstream>

namespace dra {

namespace {

std::vector<int> transposition(int i, int n) {
  std::vector<int> p(n);
  for (int k = 0; k < n; ++k) p[k] = k + 1;
  std::swap(p[i - 1], p[i]);
  return p;
}

ZEl normalize_words(const AlgebraContext& ctx, const ZEl& raw, Backend backend) {
  if (backend == Backend::Rewrite) return ctx.rewrite_normalize(raw);
  ZEl out(ctx.n());
  for (const auto& [w, c] : raw.terms) {
    std::vector<ZEl> letters;
    letters.reserve(w.size());
    for (GeneratorId g : w) letters.push_back(ctx.generator(g));
    out += ctx.mul_word(letters, backend).right_mul(c);
  }
  return out;
}

// closed-form image of a single generator under q_i
ZEl q_generator(const AlgebraContext& ctx, int i, GeneratorId g) {
  int n = ctx.n();
  auto A = [&](int a, int b) { return named_factor(NamedFactor::A, a, b, n); };
  if (g.is_t()) {
    int k = g.row;
    if (k != i && k != i + 1) return ctx.generator(g);
    CoeffFrac inv = CoeffFrac::one(n).div_by_factor(LinearFactor::theta_diff(i, i + 1, -1, n));
    CoeffFrac lead = CoeffFrac::theta_diff(i, i + 1, n) * inv;
    if (k == i)
      return ctx.generator({i, i}).right_mul(-inv) + ctx.generator({i + 1, i + 1}).right_mul(lead);
    return ctx.generator({i, i}).right_mul(lead) + ctx.generator({i + 1, i + 1}).right_mul(-inv);
  }
  int a = g.row, b = g.col;
  if (a == i && b == i + 1)
    return -ctx.generator({i + 1, i})
                .right_mul(A(i, i + 1) * named_factor(NamedFactor::B, i, i + 1, n));
  if (a == i + 1 && b == i) return -ctx.generator({i, i + 1});
  if (a == i) return -ctx.generator({i + 1, b}).right_mul(A(i, i + 1));
  if (a == i + 1) return ctx.generator({i, b});
  if (b == i) return -ctx.generator({a, i + 1});
  if (b == i + 1) return ctx.generator({a, i}).right_mul(A(i, i + 1));
  return ctx.generator(g);
}

}  // namespace

ZEl zhelobenko_fast(const AlgebraContext& ctx, int i, const ZEl& x, Backend backend) {
  int n = ctx.n();
  if (i < 1 || i >= n) throw Error("zhelobenko index out of range");
  auto perm = transposition(i, n);
  ZEl out(n);
  for (const auto& [w, c] : x.terms) {
    ZEl img = ctx.one();
    for (GeneratorId g : w) img = ctx.mul(img, q_generator(ctx, i, g), backend);
    out += img.right_mul(c.weyl(perm));
  }
  return out;
}

ZEl zhelobenko_oracle(const AlgebraContext& ctx, int i, const ZEl& x) {
  int n = ctx.n();
  if (i < 1 || i >= n) throw Error("zhelobenko index out of range");
  auto perm = transposition(i, n);
  CosetEl lifted = ctx.circ_to_coset(x);
  CosetEl out(n);
  for (const auto& [w, c] : lifted.terms) {
    CoeffFrac c_img = c.shifted(-lifted.word_weight(w)).weyl(perm);
    PbwElement base(n);
    LieWord lw;
    for (GeneratorId g : w) lw.push_back(big_E(g.row, g.col));
    base.add_term(lw, CoeffFrac::one(n));
    PbwElement term = sigma_automorphism(i, base);
    PbwElement acc(n);
    Rat factorial(1);
    CoeffFrac cart = CoeffFrac::one(n);
    for (int k = 0; !term.is_zero(); ++k) {
      if (k > 0) {
        factorial *= k;
        // product factor (h_{i,i+1} - k + 1) = theta_{i,i+1} - k
        cart = cart.div_by_factor(LinearFactor::theta_diff(i, i + 1, -k, n));
      }
      Rat scale = (k % 2 == 0 ? Rat(1) : Rat(-1)) / factorial;
      Weight drop = root_weight(i + 1, i, n);
      for (const auto& [tw, tc] : term.terms) {
        LieWord nw = tw;
        for (int p = 0; p < k; ++p) nw.push_back(small_e(i + 1, i));
        Weight shift(n);
        for (int p = 0; p < k; ++p) shift += drop;
        acc.add_term(nw, tc.shifted(shift).scaled(scale) * cart);
      }
      if (k > 2 * n * static_cast<int>(lw.size()) + 4) throw Error("zhelobenko series did not terminate");
      term = ad_letter(small_e(i, i + 1), term);
    }
    out += coset_reduce(acc, ctx.order()).left_mul(c_img);
  }
  return ctx.coset_to_circ(out);
}

ZEl sigma_squared(const AlgebraContext& ctx, int i, const ZEl& x) {
  ZEl out(ctx.n());
  for (const auto& [w, c] : x.terms) {
    int hits = 0;
    for (GeneratorId g : w)
      hits += (g.row == i) + (g.row == i + 1) + (g.col == i) + (g.col == i + 1);
    out.add_term(w, hits % 2 == 0 ? c : -c);
  }
  return out;
}

ZEl zhelobenko_inverse(const AlgebraContext& ctx, int i, const ZEl& x, Backend backend) {
  // q_i^{-1} = (q_i^2)^{-1} q_i with q_i^2 = conjugation by theta_{i,i+1}
  // composed with sigma_i^2.
  ZEl y = zhelobenko_fast(ctx, i, x, backend);
  CoeffFrac th = CoeffFrac::theta_diff(i, i + 1, ctx.n());
  y = y.left_mul(th).right_mul(th.inverse());
  return sigma_squared(ctx, i, y);
}

BraidWord BraidWord::parse(const std::string& csv) {
  BraidWord w;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    w.letters.push_back(std::stoi(tok));
  }
  if (w.letters.empty()) throw Error("empty braid word");
  return w;
}

ZEl braid_apply(const AlgebraContext& ctx, const BraidWord& w, const ZEl& x, Backend backend) {
  ZEl y = x;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    int l = *it;
    if (l == 0) throw Error("braid letters are nonzero signed indices");
    y = l > 0 ? zhelobenko_fast(ctx, l, y, backend) : zhelobenko_inverse(ctx, -l, y, backend);
  }
  return y;
}

BraidWord longest_word(int n) {
  BraidWord w;
  for (int j = 1; j < n; ++j)
    for (int k = j; k >= 1; --k) w.letters.push_back(k);
  return w;
}

ZEl epsilon_involution(const AlgebraContext& ctx, const ZEl& x, Backend backend) {
  int n = ctx.n();
  ZEl raw(n);
  for (const auto& [w, c] : x.terms) {
    std::vector<GeneratorId> rw;
    for (auto it = w.rbegin(); it != w.rend(); ++it) rw.push_back({it->col, it->row});
    raw.add_term(rw, c.shifted(-x.word_weight(w)));
  }
  return normalize_words(ctx, raw, backend);
}

ZEl omega_involution(const AlgebraContext& ctx, const ZEl& x, Backend backend) {
  int n = ctx.n();
  ZEl raw(n);
  for (const auto& [w, c] : x.terms) {
    std::vector<GeneratorId> nw;
    Rat sign(1);
    for (GeneratorId g : w) {
      if ((g.row + g.col + 1) % 2 != 0) sign = -sign;
      nw.push_back({n + 1 - g.col, n + 1 - g.row});
    }
    raw.add_term(nw, c.omega_image().scaled(sign));
  }
  return normalize_words(ctx, raw, backend);
}

ZEl sl2_general_automorphism(const AlgebraContext& ctx, const Sl2AutParams& p, const ZEl& x,
                             Backend backend) {
  int n = ctx.n();
  if (n != 2) throw Error("sl2_general_automorphism is defined for n = 2");
  if (p.beta != 1 && p.beta != -1) throw Error("beta must be +1 or -1");
  if (p.gamma.is_zero()) throw Error("gamma must not vanish identically");
  auto hfrac = [&](long c) {  // h + c = theta_12 - 1 + c
    return CoeffFrac::from_poly(ThetaPoly::theta(1, n) - ThetaPoly::theta(2, n) +
                                ThetaPoly::constant(n, c - 1));
  };
  CoeffFrac gamma_shift = p.gamma.shifted(Weight({2, 0}));
  // t -> beta t (h+2)/h with t = t_1 - t_2, extended by fixing t_1 + t_2.
  ZEl tdiff = ctx.generator({1, 1}) - ctx.generator({2, 2});
  ZEl tsum = ctx.generator({1, 1}) + ctx.generator({2, 2});
  ZEl t_img = tdiff.right_mul(hfrac(2).divided_by(hfrac(0)).scaled(p.beta));
  ZEl img_t1 = (tsum + t_img).scaled(Rat(1, 2));
  ZEl img_t2 = (tsum - t_img).scaled(Rat(1, 2));
  ZEl img_zp = ctx.generator({2, 1}).right_mul(hfrac(-1).inverse() * p.gamma.inverse());
  ZEl img_zm = ctx.generator({1, 2}).right_mul(hfrac(3) * gamma_shift);
  std::vector<int> perm = {2, 1};
  ZEl out(n);
  for (const auto& [w, c] : x.terms) {
    ZEl img = ctx.one();
    for (GeneratorId g : w) {
      const ZEl* piece = nullptr;
      if (g == GeneratorId{1, 1}) piece = &img_t1;
      else if (g == GeneratorId{2, 2}) piece = &img_t2;
      else if (g == GeneratorId{1, 2}) piece = &img_zp;
      else piece = &img_zm;
      img = ctx.mul(img, *piece, backend);
    }
    out += img.right_mul(c.weyl(perm));
  }
  return out;
}

}  // namespace dra
