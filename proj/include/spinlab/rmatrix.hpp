#pragma once
// R-matrices from restriction matrices, the w=2 closed forms, and the braid
// consistency check.

#include "spinlab/weights.hpp"

namespace spinlab {

struct RMatrixResult {
    SpinProfile prof;
    int v = 0;
    Perm sigma_prime, sigma;
    OpMatrix mat; // rows/cols = S(ell; v) canonical descending
};

// R_{sigma', sigma} = [W^{sigma'}|]^{-1} [W^{sigma}|] over the full z's.
// concrete_spins substitutes l_j -> ell_j before inverting (much faster for
// larger v; the generic check keeps the spins symbolic)
RMatrixResult r_matrix(const Ctx& cx, const Perm& sigma_prime,
                       const Perm& sigma, int v, bool concrete_spins = false);

// w=2 R_{id,(21)} specialized to z := z_1 - z_2 (realized as z_2 -> 0);
// asserts translation invariance of every entry first
OpMatrix r_matrix_w2(const Ctx& cx, int v, bool concrete_spins = false);

// closed forms, w=2, index j labels the fixed point (v-j, j), z := z_1
RFunc a_inverse_closed_form(const Ctx& cx, int j, int i, int v); // (A^id)^{-1}_{ji}
RFunc a21_closed_form(const Ctx& cx, int i, int j, int v);       // (A^{(21)})_{ij}
RFunc r_closed_form_w2(const Ctx& cx, int j, int jp, int v,
                       bool concrete_spins = false); // R_{j j'}(z)

// denominator divisor scan: every denominator factor of every entry is of the
// form z_i - z_j - a hbar with |a| <= 2(ell_i + ell_j)
Report denominator_divisor_check(const Ctx& cx, const OpMatrix& m,
                                 bool specialized_w2);

// R_{sigma,sigma} = Id and the cocycle R_{s'',s'} R_{s',s} = R_{s'',s}
Report verify_rmatrix_properties(const SpinProfile& prof, int v_max);

// w=3: R_{id,321} = R_{id,213} R_{213,231} R_{231,321}
//               = R_{id,132} R_{132,312} R_{312,321}, all computed directly
Report braid_consistency_check(const SpinProfile& prof, int v);

// LaTeX pretty-printer (entries as \frac{num}{den})
std::string latex_matrix(const OpMatrix& m);

} // namespace spinlab
