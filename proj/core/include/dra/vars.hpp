#pragma once

#include "dra/pbw.hpp"

namespace dra {

// The braid-rotated Cartan generators t_ring_l = q_{l-1}...q_1(t_1) as
// U(h)-linear combinations of the t's, and the renormalized off-diagonal
// generators z_hat_ij = z_ij prod_{k<i} A_ki.

// Row of the change of variables: t_ring_l = sum_k row[k] t_k.
std::vector<CoeffFrac> tring_in_t_row(int l, int n);
// Inverse row: t_l = sum_k row[k] t_ring_k.
std::vector<CoeffFrac> t_in_tring_row(int l, int n);

// t_ring_l expressed in the t generators.
ZEl tring_element(int l, int n);

// prod_{k<i} A_ki, the renormalization factor of z_hat_ij (depends on i only).
CoeffFrac zhat_factor(int i, int n);
ZEl zhat_element(int i, int j, int n);

enum class VarDirection { To, From };

// Formal substitution on the diagonal letters: From reads the t-letters of x
// as t_ring's and expands them in t's; To does the inverse. Off-diagonal
// letters and coefficients pass through.
ZEl change_vars_tring(VarDirection dir, const ZEl& x);

// Formal substitution on the off-diagonal letters: From reads them as z_hat's
// and rescales into plain z's; To divides the factors back out.
ZEl change_vars_hs(VarDirection dir, const ZEl& x);

}  // namespace dra
