#pragma once
// Higher-spin lattice model: states, Boltzmann weights, partition function
// tilde W, and the identity tilde W = prefactor * W^id.

#include "spinlab/weights.hpp"

namespace spinlab {

// Vertical edge labels only; c_0 is the north boundary (v_1..v_w), c_v the
// south boundary (all zero), and c_i the labels just below row i. Horizontal
// labels are recovered from conservation (west boundary = 1), which makes the
// per-vertex conservation law true by construction.
struct LatticeState {
    int v = 0, w = 0;
    std::vector<std::vector<int>> vertical; // (v+1) x w, rows c_0..c_v

    // horizontal label h_{i,j} right of column j in row i (j = 0 is west)
    int hlabel(int i, int j) const {
        int h = 1;
        for (int t = 1; t <= j; ++t) h += vertical[i][t - 1] - vertical[i - 1][t - 1];
        return h;
    }
};

std::vector<LatticeState> enumerate_states(const SpinProfile& prof, int v,
                                           const FixedPoint& boundary);

// product over vertices of the four-case weight table, u = y_i - z_j, spin l_j
// symbolic
MPoly boltzmann_weight(const Ctx& cx, const LatticeState& st);

// tilde W_{(v_1..v_w)} = sum of Boltzmann weights over all states
MPoly partition_function(const Ctx& cx, const FixedPoint& boundary);

// prod_j (-1)^{v_j(v+w-j-sum_{s<=j} v_s)} (2 hbar)^{v_j} l_j (l_j-1) ... ,
// the spin factorial ratio kept symbolic
MPoly tildeW_prefactor(const Ctx& cx, const FixedPoint& boundary);

// tilde W = prefactor * W^id for every boundary, each v <= v_max; compared
// symbolically in the l's when no label bound can bind (min ell_j >= v),
// otherwise at the concrete spins. Also asserts y-symmetry of tilde W.
Report theorem_tildeW_check(const SpinProfile& prof, int v_max);

std::string ascii_state(const LatticeState& st);

} // namespace spinlab
