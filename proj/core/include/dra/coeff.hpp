#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dra/lattice.hpp"

namespace dra {

using Rat = mpq_class;

std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

// Sparse polynomial in theta_1..theta_n with rational coefficients.
// Terms are kept in graded-lex order on exponent vectors; no zero terms.
struct ThetaPoly {
  struct GrlexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
  };
  using Terms = std::map<std::vector<int>, Rat, GrlexLess>;

  int n = 0;
  Terms terms;

  explicit ThetaPoly(int n = 0) : n(n) {}
  static ThetaPoly constant(int n, const Rat& q);
  static ThetaPoly theta(int k, int n);  // the variable theta_k

  bool is_zero() const { return terms.empty(); }
  int total_degree() const;
  void add_term(const std::vector<int>& e, const Rat& q);

  ThetaPoly operator+(const ThetaPoly& o) const;
  ThetaPoly operator-(const ThetaPoly& o) const;
  ThetaPoly operator*(const ThetaPoly& o) const;
  ThetaPoly operator-() const;
  ThetaPoly scaled(const Rat& q) const;
  bool operator==(const ThetaPoly& o) const { return n == o.n && terms == o.terms; }

  // Substitute theta_k -> images[k-1] (each a polynomial).
  ThetaPoly substitute(const std::vector<ThetaPoly>& images) const;
  // theta_k -> theta_k + lambda_k
  ThetaPoly shifted(const Weight& lambda) const;
  // theta_k -> theta_{perm[k-1]} (perm is 1-based images)
  ThetaPoly weyl(const std::vector<int>& perm) const;
  // Univariate coefficients of s^d under theta_k = ray_k * s. Index = degree.
  std::vector<Rat> on_ray(const std::vector<Rat>& ray) const;
};

// Affine-linear form sum a_k theta_k + c with integer theta-coefficients,
// normalized so the first nonzero a_k is positive and gcd(a) = 1.
struct LinearFactor {
  int n = 0;
  std::vector<long> a;
  Rat c;

  explicit LinearFactor(int n = 0) : n(n), a(n, 0), c(0) {}
  // theta_i - theta_j + cst
  static LinearFactor theta_diff(int i, int j, long cst, int n);
  // theta_lambda + cst = sum lambda_k theta_k + cst
  static LinearFactor from_weight(const Weight& lambda, const Rat& cst);

  bool is_valid() const;  // some a_k nonzero
  // Normalize in place; returns the rational that the factor was divided by.
  Rat normalize();
  ThetaPoly as_poly() const;
  LinearFactor shifted(const Weight& lambda) const;
  bool operator==(const LinearFactor& o) const { return n == o.n && a == o.a && c == o.c; }
  bool operator<(const LinearFactor& o) const;
};

// Element of the localized ring U(h): scale * num / prod(den), where num is a
// primitive integer-coefficient polynomial, scale > 0, and no den factor
// divides num.
class CoeffFrac {
 public:
  CoeffFrac() = default;
  explicit CoeffFrac(int n) : n_(n), num_(n), scale_(1) {}

  static CoeffFrac zero(int n);
  static CoeffFrac one(int n);
  static CoeffFrac constant(int n, const Rat& q);
  static CoeffFrac theta(int k, int n);
  static CoeffFrac h_var(int k, int n);          // h_k = theta_k + k
  static CoeffFrac theta_diff(int i, int j, int n);
  static CoeffFrac from_poly(ThetaPoly p);
  static CoeffFrac from_parts(ThetaPoly num, std::vector<LinearFactor> den, Rat scale);

  int n() const { return n_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const;
  // Defined for denominator-free, degree-0 fractions.
  Rat constant_value() const;

  const ThetaPoly& num() const { return num_; }
  const std::vector<LinearFactor>& den() const { return den_; }
  const Rat& scale() const { return scale_; }

  CoeffFrac operator+(const CoeffFrac& o) const;
  CoeffFrac operator-(const CoeffFrac& o) const;
  CoeffFrac operator*(const CoeffFrac& o) const;
  CoeffFrac operator-() const;
  CoeffFrac& operator+=(const CoeffFrac& o) { *this = *this + o; return *this; }
  CoeffFrac& operator-=(const CoeffFrac& o) { *this = *this - o; return *this; }
  CoeffFrac& operator*=(const CoeffFrac& o) { *this = *this * o; return *this; }
  CoeffFrac scaled(const Rat& q) const;
  CoeffFrac div_by_factor(const LinearFactor& f) const;
  CoeffFrac mul_factor(const LinearFactor& f) const;
  // Multiplicative inverse; requires the numerator to be affine-linear or constant.
  CoeffFrac inverse() const;
  CoeffFrac divided_by(const CoeffFrac& o) const { return *this * o.inverse(); }

  bool operator==(const CoeffFrac& o) const;

  CoeffFrac shifted(const Weight& lambda) const;
  // Shifted Weyl action (plain permutation of the theta variables).
  CoeffFrac weyl(const std::vector<int>& perm) const;
  // Natural Weyl action, h_k -> h_{perm(k)}: theta_k -> theta_{perm(k)} + perm(k) - k.
  CoeffFrac weyl_natural(const std::vector<int>& perm) const;
  // theta_k -> -theta_{n+1-k} - (n+1), the coefficient action of omega.
  CoeffFrac omega_image() const;
  // As a univariate rational function of s along theta_k = ray_k * s:
  // (num coefficients, den coefficients), both lowest-degree-first.
  std::pair<std::vector<Rat>, std::vector<Rat>> on_ray(const std::vector<Rat>& ray) const;

 private:
  void canonicalize();

  int n_ = 0;
  ThetaPoly num_{0};
  std::vector<LinearFactor> den_;
  Rat scale_ = 1;
};

// Exact division of p by f; nullopt if f does not divide p.
std::optional<ThetaPoly> divide_by_linear(const ThetaPoly& p, const LinearFactor& f);

enum class NamedFactor { A, Ap, B, Bp, Cp };

// The coefficient functions of section 4.1: A_ij = th_ij/(th_ij - 1),
// A'_ij = (th_ij-1)/th_ij, B_ij = (th_ij-1)/(th_ij-2), B'_ij = (th_ij-2)/(th_ij-1),
// C'_ij = (th_ij-3)/(th_ij-2).
CoeffFrac named_factor(NamedFactor kind, int i, int j, int n);

}  // namespace dra
