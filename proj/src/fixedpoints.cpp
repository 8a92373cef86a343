#include "spinlab/fixedpoints.hpp"

namespace spinlab {

Ctx::Ctx(SpinProfile p, int v_max, std::vector<std::string> extra)
    : prof(std::move(p)), vmax(v_max) {
    std::vector<std::string> names;
    names.push_back("hbar");
    for (int j = 1; j <= prof.w; ++j) names.push_back("z_" + std::to_string(j));
    for (int j = 1; j <= prof.w; ++j) names.push_back("l_" + std::to_string(j));
    for (int i = 1; i <= vmax; ++i) names.push_back("y_" + std::to_string(i));
    names.push_back("u");
    for (auto& e : extra) names.push_back(e);
    vt = make_vartable(std::move(names));
}

std::map<int, Q> Ctx::concrete_spins() const {
    std::map<int, Q> m;
    for (int j = 1; j <= prof.w; ++j) m[l_i(j)] = Q(prof.ell[j - 1]);
    return m;
}

std::vector<int> Ctx::degree_weights() const {
    std::vector<int> w(vt->size(), 1);
    w[hbar_i()] = 0;
    for (int j = 1; j <= prof.w; ++j) w[l_i(j)] = 0;
    return w;
}

static void enum_rec(const SpinProfile& prof, int j, int rem, FixedPoint& cur,
                     std::vector<FixedPoint>& out) {
    if (j == prof.w) {
        if (rem == 0) out.push_back(cur);
        return;
    }
    // descending lexicographic: largest coordinate first
    for (int vj = std::min(prof.ell[j], rem); vj >= 0; --vj) {
        cur[j] = vj;
        enum_rec(prof, j + 1, rem - vj, cur, out);
    }
}

std::vector<FixedPoint> enumerate_fixed_points(const SpinProfile& prof, int v) {
    std::vector<FixedPoint> out;
    if (v < 0) return out;
    FixedPoint cur(prof.w, 0);
    enum_rec(prof, 0, v, cur, out);
    return out;
}

std::vector<MPoly> chern_roots(const Ctx& cx, const FixedPoint& lam) {
    if ((int)lam.size() != cx.prof.w)
        throw std::invalid_argument("fixed point has wrong length");
    std::vector<MPoly> roots;
    for (int j = 1; j <= cx.prof.w; ++j) {
        int vj = lam[j - 1];
        if (vj < 0 || vj > cx.prof.ell[j - 1])
            throw std::invalid_argument("fixed point out of bounds");
        for (int k = 0; k < vj; ++k)
            roots.push_back(cx.z(j) - (cx.l(j) - cx.c(Q(2 * k))) * cx.hbar());
    }
    return roots;
}

std::vector<Box> addible_boxes(const Ctx& cx, const FixedPoint& lam) {
    std::vector<Box> out;
    for (int j = 1; j <= cx.prof.w; ++j) {
        int vj = lam[j - 1];
        if (vj < cx.prof.ell[j - 1])
            out.push_back({j, cx.z(j) - (cx.l(j) - cx.c(Q(2 * vj))) * cx.hbar()});
    }
    return out;
}

std::vector<Box> removable_boxes(const Ctx& cx, const FixedPoint& lam) {
    std::vector<Box> out;
    for (int j = 1; j <= cx.prof.w; ++j) {
        int vj = lam[j - 1];
        if (vj > 0)
            out.push_back({j, cx.z(j) - (cx.l(j) - cx.c(Q(2 * vj - 2))) * cx.hbar()});
    }
    return out;
}

int sigma_compare(const FixedPoint& a, const FixedPoint& b, const Perm& sigma) {
    // a <_sigma b  iff  (a_{sigma(1)},..,a_{sigma(w)}) < (b_{sigma(1)},..) lex
    for (size_t i = 0; i < a.size(); ++i) {
        int ai = a[sigma[i] - 1], bi = b[sigma[i] - 1];
        if (ai != bi) return ai < bi ? -1 : 1;
    }
    return 0;
}

bool canonical_less(const FixedPoint& a, const FixedPoint& b) {
    return a > b; // lexicographic descending
}

} // namespace spinlab
