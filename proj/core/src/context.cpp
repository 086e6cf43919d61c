#include "dra/context.hpp"

#include <algorithm>
#include <deque>

namespace dra {

Backend backend_from_string(const std::string& s) {
  if (s == "oracle") return Backend::Oracle;
  if (s == "rewrite") return Backend::Rewrite;
  throw Error("unknown backend: " + s);
}

AlgebraContext::AlgebraContext(TotalOrder order, RootSupport support)
    : order_(std::move(order)), support_(std::move(support)) {
  if (order_.n() != support_.n()) throw Error("order/support dimension mismatch");
}

ContextPtr AlgebraContext::make(int n) {
  return std::make_shared<AlgebraContext>(TotalOrder::default_order(n), RootSupport::full(n));
}

ContextPtr AlgebraContext::make(TotalOrder order) {
  int n = order.n();
  return std::make_shared<AlgebraContext>(std::move(order), RootSupport::full(n));
}

ContextPtr AlgebraContext::make(TotalOrder order, RootSupport support) {
  return std::make_shared<AlgebraContext>(std::move(order), std::move(support));
}

JComponent AlgebraContext::j_component(const Weight& lambda) const {
  if (!support_.in_cone(lambda)) throw Error("j_component: weight not in the positive cone");
  {
    std::lock_guard lk(jmu_);
    auto it = jcache_.find(lambda);
    if (it != jcache_.end()) return it->second;
  }
  JComponent out;
  out.lambda = lambda;
  int n = this->n();
  if (lambda.is_zero()) {
    out.terms.push_back({LieWord{}, LieWord{}, CoeffFrac::one(n)});
  } else {
    std::map<std::pair<LieWord, LieWord>, CoeffFrac> acc;
    for (auto [i, j] : support_.positive_roots()) {
      Weight gamma = root_weight(i, j, n);
      Weight prev = lambda - gamma;
      if (!support_.in_cone(prev)) continue;
      JComponent sub = j_component(prev);
      for (const auto& t : sub.terms) {
        LieWord lw = t.lower;
        lw.push_back(small_e(j, i));
        LieWord rw;
        rw.reserve(t.raise.size() + 1);
        rw.push_back(small_e(i, j));
        rw.insert(rw.end(), t.raise.begin(), t.raise.end());
        auto key = std::make_pair(std::move(lw), std::move(rw));
        auto it = acc.find(key);
        if (it == acc.end()) acc.emplace(std::move(key), t.coeff);
        else it->second += t.coeff;
      }
    }
    // divide by theta_lambda + (lambda,lambda)/2 and negate
    Rat half_norm(0);
    for (int v : lambda.c) half_norm += Rat(v) * Rat(v);
    half_norm /= 2;
    LinearFactor fac = LinearFactor::from_weight(lambda, half_norm);
    for (auto& [key, c] : acc) {
      CoeffFrac cc = (-c).div_by_factor(fac);
      if (!cc.is_zero()) out.terms.push_back({key.first, key.second, std::move(cc)});
    }
  }
  std::lock_guard lk(jmu_);
  auto [it, ok] = jcache_.emplace(lambda, std::move(out));
  (void)ok;
  return it->second;
}

CosetEl AlgebraContext::oracle_mul(const CosetEl& a, const CosetEl& b) const {
  return oracle_mul_impl(a, b, 0);
}

CosetEl AlgebraContext::oracle_mul_window(const CosetEl& a, const CosetEl& b, int margin) const {
  return oracle_mul_impl(a, b, margin);
}

namespace {

// Split into weight-homogeneous parts.
std::vector<std::pair<Weight, CosetEl>> weight_parts(const CosetEl& x) {
  std::map<Weight, CosetEl> parts;
  for (const auto& [w, c] : x.terms) {
    Weight nu = x.word_weight(w);
    auto it = parts.find(nu);
    if (it == parts.end()) it = parts.emplace(nu, CosetEl(x.n)).first;
    it->second.add_term(w, c);
  }
  return {parts.begin(), parts.end()};
}

// A raising letter with no E to its right can only drift to the right end of
// the word and die in the reduction; same for a lowering letter with no E to
// its left. Dropping such terms early keeps the ad chains small.
PbwElement prune_dead_raising(const PbwElement& x) {
  PbwElement out(x.n);
  for (const auto& [w, c] : x.terms) {
    bool seen_E = false, dead = false;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (!it->small) seen_E = true;
      else if (it->row < it->col && !seen_E) { dead = true; break; }
    }
    if (!dead) out.add_term(w, c);
  }
  return out;
}

PbwElement prune_dead_lowering(const PbwElement& x) {
  PbwElement out(x.n);
  for (const auto& [w, c] : x.terms) {
    bool seen_E = false, dead = false;
    for (const auto& g : w) {
      if (!g.small) seen_E = true;
      else if (g.row > g.col && !seen_E) { dead = true; break; }
    }
    if (!dead) out.add_term(w, c);
  }
  return out;
}

}  // namespace

CosetEl AlgebraContext::oracle_mul_impl(const CosetEl& a, const CosetEl& b, int margin) const {
  int n = this->n();
  CosetEl out(n);
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [nu_a, pa] : weight_parts(a)) {
    for (const auto& [nu_b, pb] : weight_parts(b)) {
      int da = pa.max_degree(), db = pb.max_degree();
      auto lambdas =
          enumerate_cone_box(support_, nu_a, 2 * da + margin, nu_b, 2 * db + margin);
      PbwElement pa_lift = inject(pa);
      PbwElement pb_lift = inject(pb);
      for (const Weight& lam : lambdas) {
        JComponent J = j_component(lam);
        for (const auto& t : J.terms) {
          // The Cartan coefficient of the J-term commutes through the
          // zero-weight factor F E and lands left of a (shifted by -nu_a).
          PbwElement u = pb_lift;
          for (auto it = t.raise.rbegin(); it != t.raise.rend() && !u.is_zero(); ++it)
            u = prune_dead_raising(ad_letter(*it, u));
          if (u.is_zero()) continue;
          PbwElement v = pa_lift;
          for (auto it = t.lower.begin(); it != t.lower.end() && !v.is_zero(); ++it)
            v = prune_dead_lowering(ad_letter_right(v, *it));
          if (v.is_zero()) continue;
          CosetEl piece = coset_reduce_canonical(pbw_mul(v, u, order_));
          out += piece.left_mul(t.coeff.shifted(-nu_a));
        }
      }
    }
  }
  return out;
}

CosetEl AlgebraContext::circ_word_coset(const std::vector<GeneratorId>& w) const {
  {
    std::lock_guard lk(wordmu_);
    auto it = wordcache_.find(w);
    if (it != wordcache_.end()) return it->second;
  }
  CosetEl res(n());
  if (w.empty()) {
    res = CosetEl::unit(n());
  } else if (w.size() == 1) {
    res = CosetEl::generator(w[0], n());
  } else {
    std::vector<GeneratorId> prefix(w.begin(), w.end() - 1);
    res = oracle_mul(circ_word_coset(prefix), CosetEl::generator(w.back(), n()));
  }
  std::lock_guard lk(wordmu_);
  auto [it, ok] = wordcache_.emplace(w, std::move(res));
  (void)ok;
  return it->second;
}

CosetEl AlgebraContext::circ_to_coset(const ZEl& x) const {
  CosetEl out(n());
  for (const auto& [w, c] : x.terms) out += circ_word_coset(w).right_mul(c);
  return out;
}

namespace {

// Strictly increasing under rightward weight transfers: sort the values of a
// positive functional and weigh by position.
long psi_measure(const std::vector<GeneratorId>& w, int n) {
  std::vector<long> fs;
  fs.reserve(w.size());
  for (GeneratorId g : w) {
    long f = 0;
    Weight v = weight_of(g, n);
    for (int k = 0; k < n; ++k) f += static_cast<long>(n - k) * v.c[k];
    fs.push_back(f);
  }
  std::sort(fs.begin(), fs.end());
  long psi = 0;
  for (size_t i = 0; i < fs.size(); ++i) psi += static_cast<long>(i + 1) * fs[i];
  return psi;
}

}  // namespace

ZEl AlgebraContext::coset_to_circ(const CosetEl& x) const {
  ZEl res(n());
  CosetEl R = x;
  size_t guard = 0;
  while (!R.is_zero()) {
    if (++guard > 200000) throw Error("coset_to_circ: conversion did not terminate");
    // low-degree words coincide in the two bases
    for (auto it = R.terms.begin(); it != R.terms.end();) {
      if (it->first.size() <= 1) {
        res.add_term(it->first, it->second);
        it = R.terms.erase(it);
      } else {
        ++it;
      }
    }
    if (R.is_zero()) break;
    size_t d = 0;
    for (const auto& [w, c] : R.terms) d = std::max(d, w.size());
    const std::vector<GeneratorId>* best = nullptr;
    long best_psi = 0;
    for (const auto& [w, c] : R.terms) {
      if (w.size() != d) continue;
      long psi = psi_measure(w, n());
      if (!best || psi < best_psi || (psi == best_psi && w < *best)) {
        best = &w;
        best_psi = psi;
      }
    }
    std::vector<GeneratorId> w = *best;
    CoeffFrac c = R.terms.at(w);
    res.add_term(w, c);
    R += (-circ_word_coset(w).right_mul(c));
  }
  return res;
}

ZEl AlgebraContext::structure_entry(GeneratorId g1, GeneratorId g2) const {
  auto key = std::make_pair(g1, g2);
  {
    std::lock_guard lk(tablemu_);
    auto it = table_.find(key);
    if (it != table_.end()) return it->second;
  }
  ZEl entry = coset_to_circ(circ_word_coset({g1, g2}));
  std::lock_guard lk(tablemu_);
  auto [it, ok] = table_.emplace(key, std::move(entry));
  (void)ok;
  return it->second;
}

ZEl AlgebraContext::rewrite_normalize(const ZEl& raw) const {
  ZEl out(n());
  std::deque<std::pair<std::vector<GeneratorId>, CoeffFrac>> work(raw.terms.begin(),
                                                                  raw.terms.end());
  size_t steps = 0;
  while (!work.empty()) {
    auto [w, c] = std::move(work.front());
    work.pop_front();
    if (c.is_zero()) continue;
    size_t k = 0;
    bool sorted = true;
    for (; k + 1 < w.size(); ++k)
      if (order_.less(w[k + 1], w[k])) {
        sorted = false;
        break;
      }
    if (sorted) {
      out.add_term(w, c);
      continue;
    }
    if (++steps > rewrite_budget) throw Error("rewrite step budget exceeded");
    ZEl entry = structure_entry(w[k], w[k + 1]);
    Weight sw(n());
    for (size_t j = k + 2; j < w.size(); ++j) sw += weight_of(w[j], n());
    for (const auto& [uw, B] : entry.terms) {
      std::vector<GeneratorId> nw(w.begin(), w.begin() + k);
      nw.insert(nw.end(), uw.begin(), uw.end());
      nw.insert(nw.end(), w.begin() + k + 2, w.end());
      work.emplace_back(std::move(nw), B.shifted(sw) * c);
    }
  }
  return out;
}

ZEl AlgebraContext::mul(const ZEl& a, const ZEl& b, Backend backend) const {
  if (backend == Backend::Oracle) {
    return coset_to_circ(oracle_mul(circ_to_coset(a), circ_to_coset(b)));
  }
  ZEl raw(n());
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) {
      std::vector<GeneratorId> w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      raw.add_term(w, ca.shifted(b.word_weight(wb)) * cb);
    }
  return rewrite_normalize(raw);
}

ZEl AlgebraContext::mul_word(const std::vector<ZEl>& factors, Backend backend) const {
  ZEl acc = one();
  for (const ZEl& f : factors) acc = mul(acc, f, backend);
  return acc;
}

}  // namespace dra
