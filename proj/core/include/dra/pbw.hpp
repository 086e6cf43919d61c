#pragma once

#include <map>
#include <vector>

#include "dra/coeff.hpp"
#include "dra/lattice.hpp"

namespace dra {

// Generator of gl_n (+) gl_n in the symmetric-pair basis: small=true is e_ij
// of the diagonal copy (i != j in monomials; Cartan elements live in
// coefficients), small=false is E_ij (E_ii allowed).
struct LieGen {
  bool small = false;
  int row = 1, col = 1;

  bool operator==(const LieGen& o) const {
    return small == o.small && row == o.row && col == o.col;
  }
  auto operator<=>(const LieGen& o) const = default;
};

inline LieGen lower_e(int i, int j) { return {true, std::max(i, j), std::min(i, j)}; }
inline LieGen small_e(int i, int j) { return {true, i, j}; }
inline LieGen big_E(int i, int j) { return {false, i, j}; }

using LieWord = std::vector<LieGen>;

Weight weight_of(const LieGen& g, int n);
Weight weight_of(const LieWord& w, int n);

// 0: lowering e (row > col), 1: E, 2: raising e (row < col)
int letter_class(const LieGen& g);

// PBW position comparator under a total order on the E family.
bool pbw_letter_less(const LieGen& a, const LieGen& b, const TotalOrder& order);

// Sum of words with a coefficient on the right of each word.
struct PbwElement {
  int n = 0;
  std::map<LieWord, CoeffFrac> terms;

  explicit PbwElement(int n = 0) : n(n) {}
  static PbwElement zero(int n) { return PbwElement(n); }
  static PbwElement unit(int n);
  static PbwElement letter(const LieGen& g, int n);
  static PbwElement coefficient(const CoeffFrac& c);

  bool is_zero() const { return terms.empty(); }
  void add_term(const LieWord& w, const CoeffFrac& c);
  PbwElement& operator+=(const PbwElement& o);
  PbwElement operator+(const PbwElement& o) const;
  PbwElement operator-() const;
  PbwElement operator-(const PbwElement& o) const;
  PbwElement right_mul(const CoeffFrac& c) const;
  bool operator==(const PbwElement& o) const { return n == o.n && terms == o.terms; }
};

// Structure constants of the symmetric pair. Cartan outputs are returned as
// degree-0 coefficient terms (h_a = theta_a + a).
PbwElement bracket(const LieGen& x, const LieGen& y, int n);

// Straighten into PBW canonical form: lowering e's, then E's under `order`,
// then raising e's; coefficients transported with shifts.
PbwElement pbw_normal_order(const PbwElement& x, const TotalOrder& order);

PbwElement pbw_mul(const PbwElement& a, const PbwElement& b, const TotalOrder& order);

// Adjoint action of a raising/lowering generator, as a derivation that also
// acts on coefficients: hat_g(W c) = sum_j W[..j) [g,W_j] W(j..] c + W g (c - c^{+gamma}).
PbwElement ad_letter(const LieGen& g, const PbwElement& x);
// Right bracket [x, f], used for transporting a past lowering factors.
PbwElement ad_letter_right(const PbwElement& x, const LieGen& f);

// The signed index-swap automorphism of the cover of S_n.
PbwElement sigma_automorphism(int i, const PbwElement& x);

// Basis element of the double coset space: an ordered word in the z/t
// generators with a coefficient on the right.
template <typename Tag>
struct GenWordSum {
  int n = 0;
  std::map<std::vector<GeneratorId>, CoeffFrac> terms;

  explicit GenWordSum(int n = 0) : n(n) {}
  static GenWordSum zero(int n) { return GenWordSum(n); }
  static GenWordSum unit(int n) {
    GenWordSum r(n);
    r.terms.emplace(std::vector<GeneratorId>{}, CoeffFrac::one(n));
    return r;
  }
  static GenWordSum generator(GeneratorId g, int n) {
    GenWordSum r(n);
    r.terms.emplace(std::vector<GeneratorId>{g}, CoeffFrac::one(n));
    return r;
  }
  static GenWordSum coefficient(const CoeffFrac& c) {
    GenWordSum r(c.n());
    if (!c.is_zero()) r.terms.emplace(std::vector<GeneratorId>{}, c);
    return r;
  }
  static GenWordSum word(std::vector<GeneratorId> w, const CoeffFrac& c, int n) {
    GenWordSum r(n);
    if (!c.is_zero()) r.terms.emplace(std::move(w), c);
    return r;
  }

  bool is_zero() const { return terms.empty(); }
  int max_degree() const {
    size_t d = 0;
    for (const auto& [w, c] : terms) d = std::max(d, w.size());
    return static_cast<int>(d);
  }
  void add_term(const std::vector<GeneratorId>& w, const CoeffFrac& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
      terms.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  GenWordSum& operator+=(const GenWordSum& o) {
    for (const auto& [w, c] : o.terms) add_term(w, c);
    return *this;
  }
  GenWordSum& operator-=(const GenWordSum& o) { return *this += -o; }
  GenWordSum operator+(const GenWordSum& o) const { GenWordSum r = *this; r += o; return r; }
  GenWordSum operator-() const {
    GenWordSum r = *this;
    for (auto& [w, c] : r.terms) c = -c;
    return r;
  }
  GenWordSum operator-(const GenWordSum& o) const { return *this + (-o); }
  GenWordSum right_mul(const CoeffFrac& c) const {
    GenWordSum r(n);
    for (const auto& [w, d] : terms) r.add_term(w, d * c);
    return r;
  }
  GenWordSum left_mul(const CoeffFrac& c) const {
    GenWordSum r(n);
    for (const auto& [w, d] : terms) r.add_term(w, c.shifted(word_weight(w)) * d);
    return r;
  }
  GenWordSum scaled(const Rat& q) const {
    GenWordSum r(n);
    for (const auto& [w, d] : terms) r.add_term(w, d.scaled(q));
    return r;
  }
  Weight word_weight(const std::vector<GeneratorId>& w) const {
    Weight v(n);
    for (GeneratorId g : w) v += weight_of(g, n);
    return v;
  }
  bool operator==(const GenWordSum& o) const { return n == o.n && terms == o.terms; }
};

struct CircTag {};
struct CosetTag {};

// Canonical element of Z_n: ordered circle-product monomials over the active order.
using ZEl = GenWordSum<CircTag>;
// Image of an ordered E-monomial basis element of the coset space.
using CosetEl = GenWordSum<CosetTag>;

// Lift a coset word sum back to the ambient algebra (E letters).
PbwElement inject(const CosetEl& x);
// Keep the pure-E monomials of a PBW-canonical element; requires input normal-ordered.
CosetEl coset_reduce_canonical(const PbwElement& x);
// Normal-order then reduce.
CosetEl coset_reduce(const PbwElement& x, const TotalOrder& order);

}  // namespace dra
