#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dra/context.hpp"
#include "dra/vars.hpp"

namespace dra {

// One concrete relation from the defining set: family tag, defining indices,
// and the element LHS - RHS that must verify to zero.
struct RelationId {
  std::string family;  // "1" | "2" | "3a" | "3ac" | "3b" | "4a" | "4b"
  int line = 0;
  std::vector<int> idx;
};

std::string to_string(const RelationId& id);

std::vector<std::string> relation_family_tags();  // the families of "all"
std::vector<RelationId> enumerate_relations(int n, const std::string& family);

ZEl relation_residual(const AlgebraContext& ctx, const RelationId& id, Backend backend);

struct VerifyResult {
  RelationId id;
  bool zero = false;
  ZEl residual;
};

struct VerifyReport {
  int total = 0;
  std::vector<VerifyResult> failures;
  bool ok() const { return failures.empty(); }
};

VerifyReport verify_relations(const AlgebraContext& ctx, const std::vector<std::string>& families,
                              Backend backend, int threads = 1);

// Commutative-limit data for the ordering relation of one generator pair
// (section 4.4): each quadratic coefficient evaluated along theta_k = ray_k s.
struct LimitEntry {
  std::vector<GeneratorId> word;
  bool is_swap = false;
  int degree_difference = 0;
  Rat leading_ratio;
};

struct LimitReport {
  std::vector<LimitEntry> entries;
  bool ok = false;  // swap -> ratio 1 at degree 0, all others negative degree
};

LimitReport homogeneous_limit_check(const AlgebraContext& ctx, GeneratorId g1, GeneratorId g2,
                                    const std::vector<Rat>& ray);

// Denominator shape of section 2: products of (theta_i - theta_j + l), i < j,
// integer l >= -1.
bool denominator_shape_ok(const CoeffFrac& c);
bool denominator_shape_ok(const ZEl& x);

// Structure-table-wide checks used by tests and the acceptance suite.
bool structure_table_denominators_ok(const AlgebraContext& ctx);

// Coefficients chi_m in z_hat_ij o t_ring_l = sum_m chi_m t_ring_m o z_hat_ij
// + (z z terms); their sum is 1 exactly when the sl_n subspace closes.
std::vector<CoeffFrac> chi_coefficients(const AlgebraContext& ctx, int i, int j, int l,
                                        Backend backend);

}  // namespace dra
