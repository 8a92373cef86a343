#pragma once
// Torus fixed points S(l_1..l_w; v), Chern roots, addible/removable boxes,
// sigma-dependent orders, and the shared symbol context.
//
// Spins enter polynomial data as ring variables l_1..l_w; the concrete
// integer bounds in SpinProfile gate only the combinatorics (enumeration).

#include "spinlab/opmatrix.hpp"

#include <algorithm>
#include <numeric>

namespace spinlab {

struct SpinProfile {
    int w = 0;
    std::vector<int> ell; // concrete bounds, ell[j] >= 1

    int sum() const { return std::accumulate(ell.begin(), ell.end(), 0); }
};

using FixedPoint = std::vector<int>; // v_parts, length w

// Permutations in one-line notation, 1-based: sigma[i-1] = sigma(i).
using Perm = std::vector<int>;

inline Perm perm_identity(int w) {
    Perm p(w);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

inline Perm perm_inverse(const Perm& s) {
    Perm p(s.size());
    for (size_t i = 0; i < s.size(); ++i) p[s[i] - 1] = (int)i + 1;
    return p;
}

inline Perm perm_compose(const Perm& a, const Perm& b) { // (a o b)(i) = a(b(i))
    Perm p(a.size());
    for (size_t i = 0; i < a.size(); ++i) p[i] = a[b[i] - 1];
    return p;
}

// Shared symbol context: hbar < z_1..z_w < l_1..l_w < y_1..y_v < u
struct Ctx {
    SpinProfile prof;
    int vmax = 0;
    VarTablePtr vt;

    Ctx(SpinProfile p, int v_max, std::vector<std::string> extra = {});

    int hbar_i() const { return 0; }
    int z_i(int j) const { return 1 + (j - 1); }               // 1-based j
    int l_i(int j) const { return 1 + prof.w + (j - 1); }
    int y_i(int i) const { return 1 + 2 * prof.w + (i - 1); }  // 1-based i
    int u_i() const { return 1 + 2 * prof.w + vmax; }

    MPoly hbar() const { return MPoly::variable(vt, "hbar"); }
    MPoly z(int j) const { return MPoly::variable(vt, vt->names[z_i(j)]); }
    MPoly l(int j) const { return MPoly::variable(vt, vt->names[l_i(j)]); }
    MPoly y(int i) const { return MPoly::variable(vt, vt->names[y_i(i)]); }
    MPoly u() const { return MPoly::variable(vt, vt->names[u_i()]); }
    MPoly c(const Q& q) const { return MPoly(vt, q); }

    // substitution map l_j -> concrete spins
    std::map<int, Q> concrete_spins() const;
    // weights for the degree grading: z,y,u count 1; hbar,l count 0
    std::vector<int> degree_weights() const;
};

std::vector<FixedPoint> enumerate_fixed_points(const SpinProfile& prof, int v);

// Chern roots of V at lambda: column-major, z_j - (l_j - 2k) hbar, k < v_j.
// Spins symbolic; spins of column j taken from spin_of(j) (defaults l_j).
std::vector<MPoly> chern_roots(const Ctx& cx, const FixedPoint& lam);

struct Box {
    int column;   // 1-based
    MPoly weight; // addible: z_j-(l_j-2 v_j)hbar ; removable: z_j-(l_j-2v_j+2)hbar
};

std::vector<Box> addible_boxes(const Ctx& cx, const FixedPoint& lam);
std::vector<Box> removable_boxes(const Ctx& cx, const FixedPoint& lam);

// three-way comparison in the sigma-order: negative / zero / positive
int sigma_compare(const FixedPoint& a, const FixedPoint& b, const Perm& sigma);

// canonical ordering used for all matrices: plain lexicographic descending
bool canonical_less(const FixedPoint& a, const FixedPoint& b); // a before b

} // namespace spinlab
