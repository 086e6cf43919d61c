#pragma once

#include "dra/context.hpp"

namespace dra {

// The catalog of central elements the engine can build.
enum class CasimirId {
  LinearH,    // h_1 + ... + h_n
  LinearT,    // t_1 + ... + t_n
  Quadratic,  // sum (h_i - 2i) t_i
  SlLinear,   // sum C^{uv} (theta_{u,u+1} + 1) t_{v,v+1}, C the inverse Cartan matrix
  Sl3C1,
  Sl3C2,
  Sl2C1,
  Sl2C2,
};

CasimirId casimir_from_string(const std::string& s);
std::string to_string(CasimirId id);

// The element, in canonical ordered form, for the algebra of ctx. Throws when
// the tag needs a different n (sl3 tags need n = 3, sl2 tags n = 2).
ZEl central_element(const AlgebraContext& ctx, CasimirId id,
                    Backend backend = Backend::Rewrite);

// Definition check: x o g = g o x for every generator of the context.
bool is_central(const AlgebraContext& ctx, const ZEl& x, Backend backend = Backend::Rewrite);

// The pair of algebras around the embedding Z_n (x) Z_m -> Z_{n+m}. Tensor
// elements are represented with ambient indices (the Z_m letters use rows and
// columns n+1..n+m) and multiply through the block-restricted projector.
struct BlockSplit {
  int n = 0, m = 0;
  ContextPtr full;       // Z_{n+m}
  ContextPtr tensor;     // U(h).(Z_n (x) Z_m)
  ContextPtr block_ord;  // Z_{n+m} under the block-adapted order (for the cut)

  static BlockSplit make(int n, int m);
};

// iota_{n,m}: linear on coset monomials, not an algebra map.
ZEl embed_iota(const BlockSplit& split, const ZEl& x_tensor);
// pi_{n,m}: expand in the block-adapted coset basis, drop every monomial with
// a cross-block generator, return to the tensor algebra. pi o iota = id.
ZEl cut_pi(const BlockSplit& split, const ZEl& x_full);

struct StabilizationReport {
  ZEl difference;   // iota(x) o iota(y) - iota(x o y), in Z_{n+m}
  bool in_J = false;  // every monomial carries a cross raising and a cross lowering
};

StabilizationReport check_stabilization(const BlockSplit& split, const ZEl& x, const ZEl& y,
                                        Backend backend = Backend::Rewrite);

struct CutHomReport {
  bool input_central = false;
  bool left_homomorphic = false;   // pi(x o y) = pi(x) o pi(y)
  bool right_homomorphic = false;  // pi(y o x) = pi(y) o pi(x)
  bool image_central = false;      // pi(x) central in the tensor algebra
  bool ok() const {
    return input_central && left_homomorphic && right_homomorphic && image_central;
  }
};

CutHomReport check_cut_homomorphism(const BlockSplit& split, const ZEl& x_central, const ZEl& y,
                                    Backend backend = Backend::Rewrite);

// For the (2,1) cut: collect a tensor element by (t_3 power, h_3 power); the
// remaining coefficients live in Z_2. Throws if a denominator involves theta_3.
std::map<std::pair<int, int>, ZEl> collect_by_tail_factors(const BlockSplit& split, const ZEl& x);

}  // namespace dra
