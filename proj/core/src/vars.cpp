#include "dra/vars.hpp"

namespace dra {

std::vector<CoeffFrac> tring_in_t_row(int l, int n) {
  if (l < 1 || l > n) throw Error("tring_in_t_row: index out of range");
  std::vector<CoeffFrac> row(n, CoeffFrac::zero(n));
  CoeffFrac lead = CoeffFrac::one(n);
  for (int j = 1; j < l; ++j) lead = lead * named_factor(NamedFactor::A, j, l, n);
  row[l - 1] = lead;
  for (int k = 1; k < l; ++k) {
    CoeffFrac c = (-CoeffFrac::one(n)).div_by_factor(LinearFactor::theta_diff(k, l, -1, n));
    for (int j = 1; j < k; ++j) c = c * named_factor(NamedFactor::A, j, l, n);
    row[k - 1] = c;
  }
  return row;
}

std::vector<CoeffFrac> t_in_tring_row(int l, int n) {
  if (l < 1 || l > n) throw Error("t_in_tring_row: index out of range");
  std::vector<CoeffFrac> row(n, CoeffFrac::zero(n));
  CoeffFrac lead = CoeffFrac::one(n);
  for (int j = 1; j < l; ++j) lead = lead * named_factor(NamedFactor::Ap, j, l, n);
  row[l - 1] = lead;
  for (int k = 1; k < l; ++k) {
    CoeffFrac c = CoeffFrac::one(n).div_by_factor(LinearFactor::theta_diff(k, l, 0, n));
    for (int j = 1; j < l; ++j)
      if (j != k) c = c * named_factor(NamedFactor::Ap, j, k, n);
    row[k - 1] = c;
  }
  return row;
}

ZEl tring_element(int l, int n) {
  auto row = tring_in_t_row(l, n);
  ZEl out(n);
  for (int k = 1; k <= n; ++k)
    out += ZEl::generator({k, k}, n).right_mul(row[k - 1]);
  return out;
}

CoeffFrac zhat_factor(int i, int n) {
  CoeffFrac f = CoeffFrac::one(n);
  for (int k = 1; k < i; ++k) f = f * named_factor(NamedFactor::A, k, i, n);
  return f;
}

ZEl zhat_element(int i, int j, int n) {
  if (i == j) throw Error("zhat_element requires i != j");
  return ZEl::generator({i, j}, n).right_mul(zhat_factor(i, n));
}

namespace {

ZEl substitute_t_letters(const ZEl& x, const std::vector<std::vector<CoeffFrac>>& rows) {
  int n = x.n;
  ZEl out(n);
  for (const auto& [w, c] : x.terms) {
    // expand multilinearly over the diagonal letters
    std::vector<std::pair<std::vector<GeneratorId>, CoeffFrac>> partial;
    partial.emplace_back(std::vector<GeneratorId>{}, CoeffFrac::one(n));
    for (size_t p = 0; p < w.size(); ++p) {
      GeneratorId g = w[p];
      Weight tail(n);
      for (size_t q = p + 1; q < w.size(); ++q) tail += weight_of(w[q], n);
      std::vector<std::pair<std::vector<GeneratorId>, CoeffFrac>> next;
      for (auto& [pw, pc] : partial) {
        if (!g.is_t()) {
          auto nw = pw;
          nw.push_back(g);
          next.emplace_back(std::move(nw), pc);
          continue;
        }
        const auto& row = rows[g.row - 1];
        for (int m = 1; m <= n; ++m) {
          if (row[m - 1].is_zero()) continue;
          auto nw = pw;
          nw.push_back({m, m});
          next.emplace_back(std::move(nw), pc * row[m - 1].shifted(tail));
        }
      }
      partial = std::move(next);
    }
    for (auto& [pw, pc] : partial) out.add_term(pw, pc * c);
  }
  return out;
}

}  // namespace

ZEl change_vars_tring(VarDirection dir, const ZEl& x) {
  int n = x.n;
  std::vector<std::vector<CoeffFrac>> rows;
  rows.reserve(n);
  for (int l = 1; l <= n; ++l)
    rows.push_back(dir == VarDirection::From ? tring_in_t_row(l, n) : t_in_tring_row(l, n));
  return substitute_t_letters(x, rows);
}

ZEl change_vars_hs(VarDirection dir, const ZEl& x) {
  int n = x.n;
  ZEl out(n);
  for (const auto& [w, c] : x.terms) {
    CoeffFrac factor = CoeffFrac::one(n);
    for (size_t p = 0; p < w.size(); ++p) {
      if (w[p].is_t()) continue;
      CoeffFrac f = CoeffFrac::one(n);
      for (int k = 1; k < w[p].row; ++k)
        f = f * named_factor(dir == VarDirection::From ? NamedFactor::A : NamedFactor::Ap, k,
                             w[p].row, n);
      Weight tail(n);
      for (size_t q = p + 1; q < w.size(); ++q) tail += weight_of(w[q], n);
      factor = factor * f.shifted(tail);
    }
    out.add_term(w, factor * c);
  }
  return out;
}

}  // namespace dra
