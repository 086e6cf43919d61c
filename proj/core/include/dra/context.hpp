#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "dra/pbw.hpp"

namespace dra {

enum class Backend { Oracle, Rewrite };

Backend backend_from_string(const std::string& s);

// Weight component J_lambda of the extremal-projector tensor: a sum of
// (lowering word) (x) (raising word) * coefficient.
struct JTriple {
  LieWord lower;
  LieWord raise;
  CoeffFrac coeff;
};

struct JComponent {
  Weight lambda;
  std::vector<JTriple> terms;
};

// One algebra instance: Z_n for a total order (full support), or the tensor
// algebra U(h).(Z_n (x) Z_m) inside Z_{n+m} (block support). Owns the caches.
class AlgebraContext {
 public:
  AlgebraContext(TotalOrder order, RootSupport support);
  static std::shared_ptr<AlgebraContext> make(int n);
  static std::shared_ptr<AlgebraContext> make(TotalOrder order);
  static std::shared_ptr<AlgebraContext> make(TotalOrder order, RootSupport support);

  int n() const { return order_.n(); }
  const TotalOrder& order() const { return order_; }
  const RootSupport& support() const { return support_; }
  std::vector<GeneratorId> generators() const { return support_.generators(); }

  // J_lambda via the ABRR recurrence, memoized. lambda must lie in the cone.
  JComponent j_component(const Weight& lambda) const;

  // Oracle multiplication on the coset basis.
  CosetEl oracle_mul(const CosetEl& a, const CosetEl& b) const;

  // Change of basis between ordered circle-monomials and coset monomials.
  CosetEl circ_to_coset(const ZEl& x) const;
  ZEl coset_to_circ(const CosetEl& x) const;

  // Structure-table entry: the ordered expansion of g1 o g2 (needed when
  // g1 > g2; defined for every pair).
  ZEl structure_entry(GeneratorId g1, GeneratorId g2) const;

  // Canonical product of canonical elements.
  ZEl mul(const ZEl& a, const ZEl& b, Backend backend = Backend::Rewrite) const;
  ZEl mul_word(const std::vector<ZEl>& factors, Backend backend = Backend::Rewrite) const;

  // Rewriting normalization of a raw word sum (words need not be ordered).
  ZEl rewrite_normalize(const ZEl& raw) const;

  ZEl generator(GeneratorId g) const { return ZEl::generator(g, n()); }
  ZEl one() const { return ZEl::unit(n()); }

  // Oracle multiplication with an enlarged truncation window; used by tests
  // to validate the default window.
  CosetEl oracle_mul_window(const CosetEl& a, const CosetEl& b, int margin) const;

  size_t rewrite_budget = 2000000;

 private:
  CosetEl oracle_mul_impl(const CosetEl& a, const CosetEl& b, int margin) const;
  CosetEl circ_word_coset(const std::vector<GeneratorId>& w) const;
  const CosetEl& pair_coset(GeneratorId g1, GeneratorId g2) const;

  TotalOrder order_;
  RootSupport support_;

  mutable std::mutex jmu_;
  mutable std::map<Weight, JComponent> jcache_;
  mutable std::mutex pairmu_;
  mutable std::map<std::pair<GeneratorId, GeneratorId>, CosetEl> paircache_;
  mutable std::mutex wordmu_;
  mutable std::map<std::vector<GeneratorId>, CosetEl> wordcache_;
  mutable std::mutex tablemu_;
  mutable std::map<std::pair<GeneratorId, GeneratorId>, ZEl> table_;
};

using ContextPtr = std::shared_ptr<AlgebraContext>;

}  // namespace dra
