#pragma once

#include "dra/context.hpp"

namespace dra {

// Complete ordering-relation tables for DR(sl_3) (under the section-6 order)
// and DR(sl_2), computed by the engine in the sl generator sets.

// sl_3 generator ranks, ascending:
//   0 z_{-a-b}, 1 z_{-a}, 2 z_{-b}, 3 t_a, 4 t_b, 5 z_b, 6 z_a, 7 z_{a+b}
// sl_2 generator ranks, ascending: 0 z_-, 1 t, 2 z_+
struct SlTable {
  struct Relation {
    int lhs1 = 0, lhs2 = 0;  // ranks with lhs1 > lhs2
    std::map<std::vector<int>, CoeffFrac> rhs;
  };
  int which = 3;  // 2 or 3
  std::vector<std::string> names;
  std::vector<Relation> relations;
};

// Lift an sl generator rank to the ambient Z_n element.
ZEl sl_lift(const AlgebraContext& ctx, int rank, int which);

// Express a Z_n element over ascending sl monomials; throws when the center
// I^{(n,t)} fails to cancel (the element then does not lie in DR(sl_n)).
std::map<std::vector<int>, CoeffFrac> sl_convert(const ZEl& x, int which);

SlTable emit_sl_table(int which, Backend backend = Backend::Rewrite);

// Rendering in the alpha/beta variables (h or theta convention).
std::string sl_coeff_to_text(const CoeffFrac& c, int which, bool h_style);
std::string sl_table_to_text(const SlTable& table, bool h_style);

}  // namespace dra
