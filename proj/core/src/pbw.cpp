#include "dra/pbw.hpp"

#include <deque>

namespace dra {

Weight weight_of(const LieGen& g, int n) { return root_weight(g.row, g.col, n); }

Weight weight_of(const LieWord& w, int n) {
  Weight v(n);
  for (const auto& g : w) v += weight_of(g, n);
  return v;
}

int letter_class(const LieGen& g) {
  if (!g.small) return 1;
  return g.row > g.col ? 0 : 2;
}

bool pbw_letter_less(const LieGen& a, const LieGen& b, const TotalOrder& order) {
  int ca = letter_class(a), cb = letter_class(b);
  if (ca != cb) return ca < cb;
  if (ca == 1) return order.less({a.row, a.col}, {b.row, b.col});
  if (a.row != b.row) return a.row < b.row;
  return a.col < b.col;
}

PbwElement PbwElement::unit(int n) {
  PbwElement r(n);
  r.terms.emplace(LieWord{}, CoeffFrac::one(n));
  return r;
}

PbwElement PbwElement::letter(const LieGen& g, int n) {
  PbwElement r(n);
  r.terms.emplace(LieWord{g}, CoeffFrac::one(n));
  return r;
}

PbwElement PbwElement::coefficient(const CoeffFrac& c) {
  PbwElement r(c.n());
  if (!c.is_zero()) r.terms.emplace(LieWord{}, c);
  return r;
}

void PbwElement::add_term(const LieWord& w, const CoeffFrac& c) {
  if (c.is_zero()) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

PbwElement& PbwElement::operator+=(const PbwElement& o) {
  for (const auto& [w, c] : o.terms) add_term(w, c);
  return *this;
}

PbwElement PbwElement::operator+(const PbwElement& o) const {
  PbwElement r = *this;
  r += o;
  return r;
}

PbwElement PbwElement::operator-() const {
  PbwElement r = *this;
  for (auto& [w, c] : r.terms) c = -c;
  return r;
}

PbwElement PbwElement::operator-(const PbwElement& o) const { return *this + (-o); }

PbwElement PbwElement::right_mul(const CoeffFrac& c) const {
  PbwElement r(n);
  for (const auto& [w, d] : terms) r.add_term(w, d * c);
  return r;
}

namespace {

// h_a as a coefficient
CoeffFrac cartan_coeff(int a, int n) { return CoeffFrac::h_var(a, n); }

void bracket_push(PbwElement& out, bool small_out, int i, int l, const Rat& sign, int n) {
  // contribution sign * x_{il}, where x is e (small_out) or E
  if (small_out && i == l) {
    out += PbwElement::coefficient(cartan_coeff(i, n).scaled(sign));
  } else {
    PbwElement t(n);
    t.add_term(LieWord{LieGen{small_out, i, l}}, CoeffFrac::constant(n, sign));
    out += t;
  }
}

}  // namespace

PbwElement bracket(const LieGen& x, const LieGen& y, int n) {
  PbwElement out(n);
  // [x_ij, y_kl] = delta_jk w_il - delta_il w_kj, with w = e iff x,y same family
  bool small_out = (x.small == y.small);
  if (x.col == y.row) bracket_push(out, small_out, x.row, y.col, Rat(1), n);
  if (x.row == y.col) bracket_push(out, small_out, y.row, x.col, Rat(-1), n);
  return out;
}

PbwElement pbw_normal_order(const PbwElement& x, const TotalOrder& order) {
  int n = x.n;
  PbwElement out(n);
  std::deque<std::pair<LieWord, CoeffFrac>> work(x.terms.begin(), x.terms.end());
  while (!work.empty()) {
    auto [w, c] = std::move(work.front());
    work.pop_front();
    if (c.is_zero()) continue;
    size_t k = 0;
    bool sorted = true;
    for (; k + 1 < w.size(); ++k)
      if (pbw_letter_less(w[k + 1], w[k], order)) {
        sorted = false;
        break;
      }
    if (sorted) {
      out.add_term(w, c);
      continue;
    }
    // swap w[k], w[k+1]
    LieWord swapped = w;
    std::swap(swapped[k], swapped[k + 1]);
    work.emplace_back(std::move(swapped), c);
    PbwElement br = bracket(w[k], w[k + 1], n);
    if (!br.is_zero()) {
      Weight suffix_weight(n);
      for (size_t j = k + 2; j < w.size(); ++j) suffix_weight += weight_of(w[j], n);
      for (const auto& [bw, bc] : br.terms) {
        LieWord nw(w.begin(), w.begin() + k);
        nw.insert(nw.end(), bw.begin(), bw.end());
        nw.insert(nw.end(), w.begin() + k + 2, w.end());
        work.emplace_back(std::move(nw), bc.shifted(suffix_weight) * c);
      }
    }
  }
  return out;
}

PbwElement pbw_mul(const PbwElement& a, const PbwElement& b, const TotalOrder& order) {
  PbwElement raw(a.n);
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) {
      LieWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      raw.add_term(w, ca.shifted(weight_of(wb, a.n)) * cb);
    }
  return pbw_normal_order(raw, order);
}

PbwElement ad_letter(const LieGen& g, const PbwElement& x) {
  int n = x.n;
  Weight gamma = weight_of(g, n);
  PbwElement out(n);
  for (const auto& [w, c] : x.terms) {
    // action on letters
    for (size_t j = 0; j < w.size(); ++j) {
      PbwElement br = bracket(g, w[j], n);
      if (br.is_zero()) continue;
      Weight suffix_weight(n);
      for (size_t p = j + 1; p < w.size(); ++p) suffix_weight += weight_of(w[p], n);
      for (const auto& [bw, bc] : br.terms) {
        LieWord nw(w.begin(), w.begin() + j);
        nw.insert(nw.end(), bw.begin(), bw.end());
        nw.insert(nw.end(), w.begin() + j + 1, w.end());
        out.add_term(nw, bc.shifted(suffix_weight) * c);
      }
    }
    // action on the trailing coefficient: W g (c - c^{+gamma})
    CoeffFrac dc = c - c.shifted(gamma);
    if (!dc.is_zero()) {
      LieWord nw = w;
      nw.push_back(g);
      out.add_term(nw, dc);
    }
  }
  return out;
}

PbwElement ad_letter_right(const PbwElement& x, const LieGen& f) {
  int n = x.n;
  Weight mu = weight_of(f, n);
  PbwElement out(n);
  for (const auto& [w, c] : x.terms) {
    for (size_t j = 0; j < w.size(); ++j) {
      PbwElement br = bracket(w[j], f, n);
      if (br.is_zero()) continue;
      Weight sw(n);
      for (size_t p = j + 1; p < w.size(); ++p) sw += weight_of(w[p], n);
      for (const auto& [bw, bc] : br.terms) {
        LieWord nw(w.begin(), w.begin() + j);
        nw.insert(nw.end(), bw.begin(), bw.end());
        nw.insert(nw.end(), w.begin() + j + 1, w.end());
        out.add_term(nw, bc.shifted(sw) * c);
      }
    }
    CoeffFrac dc = c.shifted(mu) - c;
    if (!dc.is_zero()) {
      LieWord nw = w;
      nw.push_back(f);
      out.add_term(nw, dc);
    }
  }
  return out;
}

PbwElement sigma_automorphism(int i, const PbwElement& x) {
  int n = x.n;
  if (i < 1 || i + 1 > n) throw Error("sigma_automorphism: index out of range");
  std::vector<int> perm(n);
  for (int k = 0; k < n; ++k) perm[k] = k + 1;
  std::swap(perm[i - 1], perm[i]);
  auto swp = [&](int k) { return perm[k - 1]; };
  PbwElement out(n);
  for (const auto& [w, c] : x.terms) {
    LieWord nw;
    nw.reserve(w.size());
    Rat sign(1);
    for (const auto& g : w) {
      int hits = (g.row == i) + (g.col == i);
      if (hits % 2 == 1) sign = -sign;
      nw.push_back(LieGen{g.small, swp(g.row), swp(g.col)});
    }
    out.add_term(nw, c.weyl_natural(perm).scaled(sign));
  }
  return out;
}

PbwElement inject(const CosetEl& x) {
  PbwElement out(x.n);
  for (const auto& [w, c] : x.terms) {
    LieWord lw;
    lw.reserve(w.size());
    for (GeneratorId g : w) lw.push_back(big_E(g.row, g.col));
    out.add_term(lw, c);
  }
  return out;
}

CosetEl coset_reduce_canonical(const PbwElement& x) {
  CosetEl out(x.n);
  for (const auto& [w, c] : x.terms) {
    bool pure = true;
    for (const auto& g : w)
      if (g.small) { pure = false; break; }
    if (!pure) continue;
    std::vector<GeneratorId> zw;
    zw.reserve(w.size());
    for (const auto& g : w) zw.push_back({g.row, g.col});
    out.add_term(zw, c);
  }
  return out;
}

CosetEl coset_reduce(const PbwElement& x, const TotalOrder& order) {
  return coset_reduce_canonical(pbw_normal_order(x, order));
}

}  // namespace dra
