#pragma once

#include "dra/context.hpp"

namespace dra {

// Zhelobenko automorphism q_i via the closed-form action on generators,
// extended multiplicatively; coefficients transform by the shifted Weyl action.
ZEl zhelobenko_fast(const AlgebraContext& ctx, int i, const ZEl& x,
                    Backend backend = Backend::Rewrite);

// q_i from its defining series: sigma_i twist, powers of ad e_{i,i+1}, right
// factors e_{i+1,i}^k and the Cartan product, evaluated in the ambient PBW
// algebra and reduced. Slow; used to cross-check the closed form.
ZEl zhelobenko_oracle(const AlgebraContext& ctx, int i, const ZEl& x);

ZEl zhelobenko_inverse(const AlgebraContext& ctx, int i, const ZEl& x,
                       Backend backend = Backend::Rewrite);

// The signed-swap automorphism squared (a sign character), on canonical elements.
ZEl sigma_squared(const AlgebraContext& ctx, int i, const ZEl& x);

struct BraidWord {
  std::vector<int> letters;  // signed indices: k applies q_k, -k applies q_k^{-1}
  static BraidWord parse(const std::string& csv);
};

ZEl braid_apply(const AlgebraContext& ctx, const BraidWord& w, const ZEl& x,
                Backend backend = Backend::Rewrite);
// q_{w0}, the longest element, as a concrete reduced word.
BraidWord longest_word(int n);

// Chevalley anti-involution: reverses products, z_ij -> z_ji, fixes h.
ZEl epsilon_involution(const AlgebraContext& ctx, const ZEl& x,
                       Backend backend = Backend::Rewrite);

// Diagram involution: z_ij -> (-1)^{i+j+1} z_{j'i'}, h_k -> -h_{k'}.
ZEl omega_involution(const AlgebraContext& ctx, const ZEl& x,
                     Backend backend = Backend::Rewrite);

// The general weight-reversing automorphism family of DR(sl_2):
// h -> -h-2, t -> beta t (h+2)/h, z+ -> z- /((h-1) gamma(h)),
// z- -> z+ (h+3) gamma(h+2). gamma is a coefficient in h = h_12 of Z_2.
struct Sl2AutParams {
  int beta = 1;  // +1 or -1
  CoeffFrac gamma;
};

ZEl sl2_general_automorphism(const AlgebraContext& ctx, const Sl2AutParams& p, const ZEl& x,
                             Backend backend = Backend::Rewrite);

}  // namespace dra
