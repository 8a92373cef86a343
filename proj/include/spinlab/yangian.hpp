#pragma once
// Yangian action on the fixed-point basis: psi eigenvalues, e/f/psi operator
// blocks, relation checks Y1-Y5, the w=1 evaluation module, and the
// coproduct factorization.

#include "spinlab/fixedpoints.hpp"
#include "spinlab/report.hpp"

#include <random>

namespace spinlab {

// Evaluation environment: hbar and the z_j enter as MPoly values so the same
// code runs symbolically (values = variables) or with exact random rationals.
// Spins are always concrete here: the truncation of the module at v_j = ell_j
// is only consistent at integer spin.
struct YEnv {
    VarTablePtr vt;
    int ui = -1;          // index of the spectral variable u
    MPoly hbar;
    std::vector<MPoly> z; // one value per framing column
    std::vector<int> ell;

    SpinProfile prof() const { return {(int)ell.size(), ell}; }
    // weight of box k (0-based) in column j (1-based): z_j - (ell_j - 2k) hbar
    MPoly xbox(int j, int k) const;
};

// symbolic environment over a fresh table {hbar, z_1..z_w, u}
YEnv yenv_symbolic(const SpinProfile& prof);

// randomized environment over the table {u}: exact random rationals with
// numerator/denominator <= 10^4, rejection-sampled so that hbar != 0 and
// z_i - z_j - a hbar != 0 for all i != j, |a| <= 2 sum(ell)
YEnv yenv_randomized(const SpinProfile& prof, std::mt19937& rng);

// eigenvalue of psi(u) on [lam], a rational function of u
RFunc psi_eigenvalue(const YEnv& env, const FixedPoint& lam);

// e_r block from grade v to v+1: rows S(v+1), cols S(v);
// entry (lam+box, lam) = Res_{u=x_box} u^r prod (u-x)/(u-x-2h) prod (u-z_j-l_j h)/(u-z_j+l_j h)
OpMatrix e_matrix(const YEnv& env, int r, int v);

// f_m block from grade v+1 to v: rows S(v), cols S(v+1);
// entry (lam, lam+box) = (u^m prod_{sq in lam} (u-x+2h)/(u-x)) |_{u=x_box}
OpMatrix f_matrix(const YEnv& env, int m, int v);

// psi_r diagonal block on grade v: (coeff of u^{-r-1} in psi_eigenvalue)/(2 hbar)
OpMatrix psi_matrix(const YEnv& env, int r, int v);

// relation suite Y1-Y5 on all grades <= v_max, generator indices <= r_max
Report verify_yangian_relations(const YEnv& env, int v_max, int r_max);
Report verify_yangian_relations_symbolic(const SpinProfile& prof, int v_max,
                                         int r_max);
Report verify_yangian_relations_randomized(const SpinProfile& prof, int v_max,
                                           int r_max, unsigned seed, int trials);

// w=1 module: ladder formulas, basis change to v_s = C(l,s) b_{l-s} at
// hbar = -1/2, and the Drinfeld-polynomial identities
Report evaluation_rep_check(int ell, int k_max = 3);

// Drinfeld-coproduct factorization of the global e/f/psi data into per-column
// w=1 data times the displayed prefactors
Report coproduct_factorization_check(const SpinProfile& prof, int v_max,
                                     int r_max = 2);

} // namespace spinlab
