#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dra {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of the weight lattice of gl_n in the eps basis.
struct Weight {
  std::vector<int> c;

  Weight() = default;
  explicit Weight(int n) : c(n, 0) {}
  explicit Weight(std::vector<int> v) : c(std::move(v)) {}

  int n() const { return static_cast<int>(c.size()); }
  bool is_zero() const;
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  bool operator==(const Weight& o) const { return c == o.c; }
  auto operator<=>(const Weight& o) const = default;

  // sum of |c_k|, used for reachability bounds
  int abs_sum() const;
};

Weight eps(int i, int n);               // eps_i
Weight root_weight(int i, int j, int n); // eps_i - eps_j

// Membership in the positive cone Q_+ of gl_n: nonnegative integer
// combinations of the simple roots eps_i - eps_{i+1}.
bool in_positive_cone(const Weight& w);

enum class ConeRel { Less, Equal, Greater, Incomparable };

// Partial order on h^*: a < b iff b - a lies in Q_+ \ {0}.
ConeRel cone_compare(const Weight& a, const Weight& b);

// Generator label. row == col encodes t_row (= z_{row,row}); otherwise z_{row,col}.
struct GeneratorId {
  int row = 1, col = 1;

  bool is_t() const { return row == col; }
  bool operator==(const GeneratorId& o) const { return row == o.row && col == o.col; }
  auto operator<=>(const GeneratorId& o) const = default;
};

Weight weight_of(GeneratorId g, int n);
std::string to_string(GeneratorId g);

// All n^2 generators of Z_n in row-major order.
std::vector<GeneratorId> all_generators(int n);

// A total order on the generators, compatible with the cone partial order
// on weights (smaller weight comes earlier).
class TotalOrder {
 public:
  static TotalOrder default_order(int n);
  // The order used for the sl_3 / gl_3 tables; defined for n = 3.
  static TotalOrder stord(int n);
  // Block-adapted order for the cut Z_{n+m} -> Z_n (x) Z_m: cross-block
  // lowering generators first, block-internal generators next, cross-block
  // raising generators last; each segment sorted by the default rule.
  static TotalOrder block_adapted(int n, int m);
  // Explicit permutation, earliest first. Validated for cone compatibility.
  static TotalOrder custom(int n, std::vector<GeneratorId> seq, const std::string& name = "custom");

  int n() const { return n_; }
  const std::string& id() const { return id_; }
  const std::vector<GeneratorId>& sequence() const { return seq_; }

  int rank(GeneratorId g) const { return rank_[idx(g)]; }
  bool less(GeneratorId a, GeneratorId b) const { return rank(a) < rank(b); }

 private:
  TotalOrder(int n, std::vector<GeneratorId> seq, std::string id);
  int idx(GeneratorId g) const { return (g.row - 1) * n_ + (g.col - 1); }
  void validate() const;

  int n_ = 0;
  std::vector<GeneratorId> seq_;
  std::vector<int> rank_;
  std::string id_;
};

// Comparator of the default order (not tied to a TotalOrder instance).
bool default_less(GeneratorId a, GeneratorId b);

// The set of positive roots the multiplication sees. For the diagonal
// reduction algebra of gl_n this is all eps_i - eps_j with i < j; for the
// tensor algebra Z_n (x) Z_m sitting inside Z_{n+m} it is the block-internal
// subset.
class RootSupport {
 public:
  static RootSupport full(int n);
  static RootSupport block(int n, int m);  // inside gl_{n+m}, split after n

  int n() const { return n_; }
  int split() const { return split_; }  // 0 for full
  bool is_full() const { return split_ == 0; }
  const std::string& id() const { return id_; }

  bool contains_root(int i, int j) const;  // positive root eps_i - eps_j, i < j
  const std::vector<std::pair<int, int>>& positive_roots() const { return roots_; }
  // Membership in the positive cone spanned by the supported simple roots.
  bool in_cone(const Weight& w) const;
  // Generators available in this support (all for full; block-internal otherwise).
  std::vector<GeneratorId> generators() const;
  bool contains_generator(GeneratorId g) const;

 private:
  int n_ = 0, split_ = 0;
  std::vector<std::pair<int, int>> roots_;
  std::string id_;
};

// Integer vectors lambda in the support's positive cone with
// sum_k |(mu + lambda)_k| <= bound_b and sum_k |(nu - lambda)_k| <= bound_a.
std::vector<Weight> enumerate_cone_box(const RootSupport& support, const Weight& nu_a,
                                       int bound_a, const Weight& nu_b, int bound_b);

}  // namespace dra
