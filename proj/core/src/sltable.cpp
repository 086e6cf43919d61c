#include "dra/sltable.hpp"

#include <sstream>

namespace dra {

namespace {

constexpr int kCenter = 99;  // the I^{(n,t)} letter during conversion

int z_rank3(GeneratorId g) {
  if (g == GeneratorId{3, 1}) return 0;
  if (g == GeneratorId{2, 1}) return 1;
  if (g == GeneratorId{3, 2}) return 2;
  if (g == GeneratorId{2, 3}) return 5;
  if (g == GeneratorId{1, 2}) return 6;
  if (g == GeneratorId{1, 3}) return 7;
  throw Error("not an sl_3 z generator");
}

// expansion of t_m over (t_a, t_b, I) for sl_3, times 1/3
std::vector<std::pair<int, Rat>> t_expand3(int m) {
  switch (m) {
    case 1: return {{3, Rat(2, 3)}, {4, Rat(1, 3)}, {kCenter, Rat(1, 3)}};
    case 2: return {{3, Rat(-1, 3)}, {4, Rat(1, 3)}, {kCenter, Rat(1, 3)}};
    case 3: return {{3, Rat(-1, 3)}, {4, Rat(-2, 3)}, {kCenter, Rat(1, 3)}};
  }
  throw Error("bad t index");
}

std::vector<std::pair<int, Rat>> t_expand2(int m) {
  switch (m) {
    case 1: return {{1, Rat(1, 2)}, {kCenter, Rat(1, 2)}};
    case 2: return {{1, Rat(-1, 2)}, {kCenter, Rat(1, 2)}};
  }
  throw Error("bad t index");
}

int z_rank2(GeneratorId g) {
  if (g == GeneratorId{2, 1}) return 0;
  if (g == GeneratorId{1, 2}) return 2;
  throw Error("not an sl_2 z generator");
}

}  // namespace

ZEl sl_lift(const AlgebraContext& ctx, int rank, int which) {
  auto g = [&](int i, int j) { return ctx.generator({i, j}); };
  if (which == 3) {
    switch (rank) {
      case 0: return g(3, 1);
      case 1: return g(2, 1);
      case 2: return g(3, 2);
      case 3: return g(1, 1) - g(2, 2);
      case 4: return g(2, 2) - g(3, 3);
      case 5: return g(2, 3);
      case 6: return g(1, 2);
      case 7: return g(1, 3);
    }
  } else if (which == 2) {
    switch (rank) {
      case 0: return g(2, 1);
      case 1: return g(1, 1) - g(2, 2);
      case 2: return g(1, 2);
    }
  }
  throw Error("bad sl generator rank");
}

std::map<std::vector<int>, CoeffFrac> sl_convert(const ZEl& x, int which) {
  int n = x.n;
  std::map<std::vector<int>, CoeffFrac> out;
  auto add = [&](const std::vector<int>& w, const CoeffFrac& c) {
    if (c.is_zero()) return;
    auto it = out.find(w);
    if (it == out.end()) out.emplace(w, c);
    else {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  for (const auto& [w, c] : x.terms) {
    std::vector<std::pair<std::vector<int>, Rat>> partial = {{{}, Rat(1)}};
    for (GeneratorId g : w) {
      std::vector<std::pair<std::vector<int>, Rat>> next;
      if (!g.is_t()) {
        int r = which == 3 ? z_rank3(g) : z_rank2(g);
        for (auto& [pw, pq] : partial) {
          auto nw = pw;
          nw.push_back(r);
          next.emplace_back(std::move(nw), pq);
        }
      } else {
        auto exp = which == 3 ? t_expand3(g.row) : t_expand2(g.row);
        for (auto& [pw, pq] : partial)
          for (auto& [r, q] : exp) {
            auto nw = pw;
            nw.push_back(r);
            next.emplace_back(std::move(nw), pq * q);
          }
      }
      partial = std::move(next);
    }
    for (auto& [pw, pq] : partial) {
      // the replaced diagonal letters commute among themselves
      std::sort(pw.begin(), pw.end());
      add(pw, c.scaled(pq));
    }
  }
  for (const auto& [w, c] : out)
    for (int r : w)
      if (r == kCenter)
        throw Error("element does not lie in DR(sl_n): the center fails to cancel");
  return out;
}

SlTable emit_sl_table(int which, Backend backend) {
  SlTable table;
  table.which = which;
  ContextPtr ctx;
  if (which == 3) {
    ctx = AlgebraContext::make(TotalOrder::stord(3));
    table.names = {"z[-a-b]", "z[-a]", "z[-b]", "t[a]", "t[b]", "z[b]", "z[a]", "z[a+b]"};
  } else if (which == 2) {
    ctx = AlgebraContext::make(2);
    table.names = {"z[-]", "t", "z[+]"};
  } else {
    throw Error("sl tables exist for n = 2 and 3");
  }
  int count = static_cast<int>(table.names.size());
  for (int g1 = count - 1; g1 >= 0; --g1)
    for (int g2 = g1 - 1; g2 >= 0; --g2) {
      SlTable::Relation rel;
      rel.lhs1 = g1;
      rel.lhs2 = g2;
      ZEl prod = ctx->mul(sl_lift(*ctx, g1, which), sl_lift(*ctx, g2, which), backend);
      rel.rhs = sl_convert(prod, which);
      table.relations.push_back(std::move(rel));
    }
  return table;
}

namespace {

// Coefficients in the sl tables depend on the theta differences only; render
// them in the alpha/beta (or single h) variables.
struct TwoVarPoly {
  // exponents (a_pow, b_pow) -> coefficient
  std::map<std::pair<int, int>, Rat> terms;
};

TwoVarPoly project_poly(const ThetaPoly& p, int which, bool h_style) {
  // theta_1 = u + v, theta_2 = v, theta_3 = 0 (for sl_2: theta_1 = u, theta_2 = 0),
  // with u = theta_a, v = theta_b; for the h convention substitute u = ha + 1 etc.
  int n = p.n;
  ThetaPoly shifted = p;
  {
    // verify translation invariance along (1,..,1): dependence on differences
    Weight ones(n);
    for (int k = 0; k < n; ++k) ones.c[k] = 1;
    if (!(p.shifted(ones) == p)) throw Error("sl table coefficient is not a difference function");
  }
  TwoVarPoly out;
  for (const auto& [e, q] : p.terms) {
    // expand (u+v)^{e1} v^{e2} (and theta_3^{e3}: only with e3 = 0 after shift)
    int e1 = e[0], e2 = e.size() > 1 ? e[1] : 0, e3 = e.size() > 2 ? e[2] : 0;
    if (n == 2) {
      e3 = 0;
      // theta_1 = u, theta_2 = 0: e2 must vanish after translation reduction
    }
    (void)e3;
    std::map<std::pair<int, int>, Rat> piece = {{{0, 0}, q}};
    auto mul_var = [&](int da, int db) {
      std::map<std::pair<int, int>, Rat> next;
      for (auto& [key, val] : piece) next[{key.first + da, key.second + db}] += val;
      piece = std::move(next);
    };
    auto mul_sum = [&]() {  // multiply by (u + v)
      std::map<std::pair<int, int>, Rat> next;
      for (auto& [key, val] : piece) {
        next[{key.first + 1, key.second}] += val;
        next[{key.first, key.second + 1}] += val;
      }
      piece = std::move(next);
    };
    if (n == 3) {
      for (int r = 0; r < e1; ++r) mul_sum();
      for (int r = 0; r < e2; ++r) mul_var(0, 1);
      // theta_3 -> 0
      if (e.size() > 2 && e[2] > 0) piece.clear();
    } else {
      for (int r = 0; r < e1; ++r) mul_var(1, 0);
      if (e2 > 0) piece.clear();  // theta_2 -> 0
    }
    for (auto& [key, val] : piece) {
      auto it = out.terms.find(key);
      if (it == out.terms.end()) out.terms.emplace(key, val);
      else {
        it->second += val;
        if (it->second == 0) out.terms.erase(it);
      }
    }
  }
  if (h_style) {
    // u -> ha + 1, v -> hb + 1
    TwoVarPoly hout;
    for (auto& [key, val] : out.terms) {
      std::map<std::pair<int, int>, Rat> piece = {{{0, 0}, val}};
      for (int r = 0; r < key.first; ++r) {
        std::map<std::pair<int, int>, Rat> next;
        for (auto& [k2, v2] : piece) {
          next[{k2.first + 1, k2.second}] += v2;
          next[{k2.first, k2.second}] += v2;
        }
        piece = std::move(next);
      }
      for (int r = 0; r < key.second; ++r) {
        std::map<std::pair<int, int>, Rat> next;
        for (auto& [k2, v2] : piece) {
          next[{k2.first, k2.second + 1}] += v2;
          next[{k2.first, k2.second}] += v2;
        }
        piece = std::move(next);
      }
      for (auto& [k2, v2] : piece) {
        auto it = hout.terms.find(k2);
        if (it == hout.terms.end()) hout.terms.emplace(k2, v2);
        else {
          it->second += v2;
          if (it->second == 0) hout.terms.erase(it);
        }
      }
    }
    return hout;
  }
  return out;
}

std::string twovar_to_text(const TwoVarPoly& p, int which, bool h_style) {
  if (p.terms.empty()) return "0";
  const char* va = h_style ? (which == 3 ? "ha" : "h") : (which == 3 ? "tha" : "th");
  const char* vb = h_style ? "hb" : "thb";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    auto [key, val] = *it;
    if (!first) os << (val >= 0 ? "+" : "-");
    else if (val < 0) os << "-";
    first = false;
    Rat mag = val >= 0 ? val : Rat(-val);
    bool has_var = key.first || key.second;
    if (mag != 1 || !has_var) os << mag.get_str();
    bool started = (mag != 1 || !has_var);
    if (key.first) {
      if (started) os << "*";
      os << va;
      if (key.first > 1) os << "^" << key.first;
      started = true;
    }
    if (key.second) {
      if (started) os << "*";
      os << vb;
      if (key.second > 1) os << "^" << key.second;
    }
  }
  return os.str();
}

}  // namespace

std::string sl_coeff_to_text(const CoeffFrac& c, int which, bool h_style) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  TwoVarPoly num = project_poly(c.num(), which, h_style);
  bool scale_shown = c.scale() != 1;
  if (scale_shown) os << c.scale().get_str() << "*";
  os << "(" << twovar_to_text(num, which, h_style) << ")";
  for (const auto& f : c.den())
    os << "/(" << twovar_to_text(project_poly(f.as_poly(), which, h_style), which, h_style)
       << ")";
  return os.str();
}

std::string sl_table_to_text(const SlTable& t, bool h_style) {
  std::ostringstream os;
  for (const auto& rel : t.relations) {
    os << t.names[rel.lhs1] << " * " << t.names[rel.lhs2] << " = ";
    if (rel.rhs.empty()) os << "0";
    bool first = true;
    for (const auto& [w, c] : rel.rhs) {
      if (!first) os << " + ";
      first = false;
      if (w.empty()) {
        os << sl_coeff_to_text(c, t.which, h_style);
        continue;
      }
      for (size_t k = 0; k < w.size(); ++k) os << (k ? "*" : "") << t.names[w[k]];
      if (!c.is_one()) os << " * " << sl_coeff_to_text(c, t.which, h_style);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace dra
