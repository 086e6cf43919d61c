#include "dra/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace dra {

bool Weight::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](int v) { return v == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (c.size() != o.c.size()) throw Error("weight dimension mismatch");
  for (size_t k = 0; k < c.size(); ++k) c[k] += o.c[k];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (c.size() != o.c.size()) throw Error("weight dimension mismatch");
  for (size_t k = 0; k < c.size(); ++k) c[k] -= o.c[k];
  return *this;
}

Weight Weight::operator+(const Weight& o) const { Weight r = *this; r += o; return r; }
Weight Weight::operator-(const Weight& o) const { Weight r = *this; r -= o; return r; }

Weight Weight::operator-() const {
  Weight r = *this;
  for (int& v : r.c) v = -v;
  return r;
}

int Weight::abs_sum() const {
  int s = 0;
  for (int v : c) s += std::abs(v);
  return s;
}

Weight eps(int i, int n) {
  Weight w(n);
  w.c[i - 1] = 1;
  return w;
}

Weight root_weight(int i, int j, int n) {
  Weight w(n);
  w.c[i - 1] += 1;
  w.c[j - 1] -= 1;
  return w;
}

bool in_positive_cone(const Weight& w) {
  int prefix = 0;
  for (int v : w.c) {
    prefix += v;
    if (prefix < 0) return false;
  }
  return prefix == 0;
}

ConeRel cone_compare(const Weight& a, const Weight& b) {
  if (a.n() != b.n()) throw Error("cone_compare: dimension mismatch");
  if (a == b) return ConeRel::Equal;
  if (in_positive_cone(b - a)) return ConeRel::Less;
  if (in_positive_cone(a - b)) return ConeRel::Greater;
  return ConeRel::Incomparable;
}

Weight weight_of(GeneratorId g, int n) {
  if (g.row < 1 || g.row > n || g.col < 1 || g.col > n) throw Error("generator index out of range");
  Weight w(n);
  if (!g.is_t()) {
    w.c[g.row - 1] = 1;
    w.c[g.col - 1] = -1;
  }
  return w;
}

std::string to_string(GeneratorId g) {
  if (g.is_t()) return "t[" + std::to_string(g.row) + "]";
  return "z[" + std::to_string(g.row) + "," + std::to_string(g.col) + "]";
}

std::vector<GeneratorId> all_generators(int n) {
  std::vector<GeneratorId> gs;
  gs.reserve(n * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) gs.push_back({i, j});
  return gs;
}

bool default_less(GeneratorId a, GeneratorId b) {
  int da = a.row - a.col, db = b.row - b.col;
  if (da != db) return da > db;
  return a.row > b.row;
}

TotalOrder::TotalOrder(int n, std::vector<GeneratorId> seq, std::string id)
    : n_(n), seq_(std::move(seq)), rank_(n * n, -1), id_(std::move(id)) {
  if (static_cast<int>(seq_.size()) != n * n) throw Error("order must list all n^2 generators");
  for (int r = 0; r < static_cast<int>(seq_.size()); ++r) {
    GeneratorId g = seq_[r];
    if (g.row < 1 || g.row > n || g.col < 1 || g.col > n) throw Error("order: index out of range");
    if (rank_[idx(g)] != -1) throw Error("order: duplicate generator " + to_string(g));
    rank_[idx(g)] = r;
  }
  validate();
}

void TotalOrder::validate() const {
  for (GeneratorId a : seq_)
    for (GeneratorId b : seq_) {
      if (cone_compare(weight_of(a, n_), weight_of(b, n_)) == ConeRel::Less && !less(a, b))
        throw Error("order incompatible with the cone partial order: " + to_string(a) +
                    " must come before " + to_string(b));
    }
}

TotalOrder TotalOrder::default_order(int n) {
  auto seq = all_generators(n);
  std::sort(seq.begin(), seq.end(), default_less);
  return TotalOrder(n, std::move(seq), "default:" + std::to_string(n));
}

TotalOrder TotalOrder::stord(int n) {
  if (n != 3) throw Error("the stord preset is defined for n = 3");
  // ascending:  z31  z21  z32  t3 t2 t1  z23  z12  z13
  std::vector<GeneratorId> seq = {{3, 1}, {2, 1}, {3, 2}, {3, 3}, {2, 2},
                                  {1, 1}, {2, 3}, {1, 2}, {1, 3}};
  return TotalOrder(3, std::move(seq), "stord:3");
}

TotalOrder TotalOrder::block_adapted(int n, int m) {
  int N = n + m;
  auto cls = [n, N](GeneratorId g) {
    bool r2 = g.row > n, c2 = g.col > n;
    (void)N;
    if (r2 && !c2) return 0;  // cross-block lowering
    if (!r2 && c2) return 2;  // cross-block raising
    return 1;                 // block-internal
  };
  auto seq = all_generators(N);
  std::sort(seq.begin(), seq.end(), [&](GeneratorId a, GeneratorId b) {
    if (cls(a) != cls(b)) return cls(a) < cls(b);
    return default_less(a, b);
  });
  return TotalOrder(N, std::move(seq), "block:" + std::to_string(n) + "," + std::to_string(m));
}

TotalOrder TotalOrder::custom(int n, std::vector<GeneratorId> seq, const std::string& name) {
  return TotalOrder(n, std::move(seq), name + ":" + std::to_string(n));
}

RootSupport RootSupport::full(int n) {
  RootSupport s;
  s.n_ = n;
  s.split_ = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) s.roots_.emplace_back(i, j);
  s.id_ = "full:" + std::to_string(n);
  return s;
}

RootSupport RootSupport::block(int n, int m) {
  if (n < 1 || m < 1) throw Error("block split requires n, m >= 1");
  RootSupport s;
  s.n_ = n + m;
  s.split_ = n;
  for (int i = 1; i <= s.n_; ++i)
    for (int j = i + 1; j <= s.n_; ++j)
      if ((j <= n) || (i > n)) s.roots_.emplace_back(i, j);
  s.id_ = "block:" + std::to_string(n) + "," + std::to_string(m);
  return s;
}

bool RootSupport::contains_root(int i, int j) const {
  if (!(1 <= i && i < j && j <= n_)) return false;
  if (split_ == 0) return true;
  return (j <= split_) || (i > split_);
}

bool RootSupport::in_cone(const Weight& w) const {
  if (w.n() != n_) throw Error("in_cone: dimension mismatch");
  if (split_ == 0) return in_positive_cone(w);
  int prefix = 0;
  for (int k = 0; k < split_; ++k) {
    prefix += w.c[k];
    if (prefix < 0) return false;
  }
  if (prefix != 0) return false;
  for (int k = split_; k < n_; ++k) {
    prefix += w.c[k];
    if (prefix < 0) return false;
  }
  return prefix == 0;
}

std::vector<GeneratorId> RootSupport::generators() const {
  std::vector<GeneratorId> gs;
  for (GeneratorId g : all_generators(n_))
    if (contains_generator(g)) gs.push_back(g);
  return gs;
}

bool RootSupport::contains_generator(GeneratorId g) const {
  if (split_ == 0) return true;
  bool r2 = g.row > split_, c2 = g.col > split_;
  return r2 == c2;
}

std::vector<Weight> enumerate_cone_box(const RootSupport& support, const Weight& nu_a,
                                       int bound_a, const Weight& nu_b, int bound_b) {
  int n = support.n();
  int split = support.split() == 0 ? n : support.split();
  std::vector<Weight> out;
  Weight lam(n);
  int coord_bound = std::min(bound_a, bound_b) + std::max(nu_a.abs_sum(), nu_b.abs_sum());
  // prefix: running prefix sum within the current cone segment; sa/sb: partial
  // abs sums of nu_a - lambda and nu_b + lambda.
  std::function<void(int, int, int, int)> rec = [&](int k, int prefix, int sa, int sb) {
    if (sa > bound_a || sb > bound_b) return;
    if (k == n) {
      if (prefix == 0) out.push_back(lam);
      return;
    }
    bool segment_end = (k + 1 == split) || (k + 1 == n);
    for (int v = -coord_bound; v <= coord_bound; ++v) {
      int p = prefix + v;
      if (p < 0) continue;
      if (segment_end && p != 0) continue;
      lam.c[k] = v;
      rec(k + 1, (k + 1 == split) ? 0 : p,
          sa + std::abs(nu_a.c[k] - v), sb + std::abs(nu_b.c[k] + v));
    }
    lam.c[k] = 0;
  };
  rec(0, 0, 0, 0);
  return out;
}

}  // namespace dra
