#include "spinlab/lattice.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace spinlab {

namespace {

void fill_rows(const SpinProfile& prof, int v, LatticeState& st, int i,
               std::vector<LatticeState>& out) {
    if (i > v) {
        out.push_back(st);
        return;
    }
    const std::vector<int>& prev = st.vertical[i - 1];
    std::vector<int>& cur = st.vertical[i];
    // choose cur[0..w-1] column by column, tracking the horizontal label
    std::function<void(int, int)> fill_col = [&](int j, int h) {
        if (j == prof.w) {
            if (h == 0) fill_rows(prof, v, st, i + 1, out);
            return;
        }
        for (int hn = 0; hn <= 1; ++hn) {
            int label = prev[j] + hn - h; // conservation around vertex (i, j+1)
            if (label < 0 || label > prof.ell[j]) continue;
            if (i == v && label != 0) continue; // south boundary
            cur[j] = label;
            fill_col(j + 1, hn);
        }
    };
    fill_col(0, 1); // west boundary = 1
}

} // namespace

std::vector<LatticeState> enumerate_states(const SpinProfile& prof, int v,
                                           const FixedPoint& boundary) {
    if ((int)boundary.size() != prof.w)
        throw std::invalid_argument("boundary size must be w");
    int sum = 0;
    for (int j = 0; j < prof.w; ++j) {
        if (boundary[j] < 0 || boundary[j] > prof.ell[j])
            throw std::invalid_argument("boundary label out of range");
        sum += boundary[j];
    }
    if (sum != v) throw std::invalid_argument("boundary labels must sum to v");

    LatticeState st;
    st.v = v;
    st.w = prof.w;
    st.vertical.assign(v + 1, std::vector<int>(prof.w, 0));
    st.vertical[0] = boundary; // north
    std::vector<LatticeState> out;
    if (v == 0) out.push_back(st);
    else fill_rows(prof, v, st, 1, out);
    return out;
}

MPoly boltzmann_weight(const Ctx& cx, const LatticeState& st) {
    if (st.v > cx.vmax)
        throw std::invalid_argument("state needs more y variables than Ctx has");
    MPoly h = cx.hbar();
    MPoly out(cx.vt, Q(1));
    for (int i = 1; i <= st.v; ++i) {
        int hl = 1; // west
        for (int j = 1; j <= st.w; ++j) {
            int m = st.vertical[i][j - 1];       // bottom label
            int top = st.vertical[i - 1][j - 1]; // top label
            MPoly u = cx.y(i) - cx.z(j), l = cx.l(j);
            if (top == m) {
                MPoly d = (l - cx.c(Q(2 * m))) * h;
                out *= (hl == 0) ? u - d : u + d;
            } else if (top == m - 1) {
                out *= h * Q(2 * m);
            } else if (top == m + 1) {
                out *= (l - cx.c(Q(m))) * h * Q(2);
            } else {
                throw std::logic_error("vertical labels differ by more than 1");
            }
            hl += m - top;
            if (hl < 0 || hl > 1)
                throw std::logic_error("horizontal label out of range");
        }
        if (hl != 0) throw std::logic_error("east boundary label must be 0");
    }
    return out;
}

MPoly partition_function(const Ctx& cx, const FixedPoint& boundary) {
    int v = 0;
    for (int b : boundary) v += b;
    MPoly sum(cx.vt, Q(0));
    for (const LatticeState& st : enumerate_states(cx.prof, v, boundary))
        sum += boltzmann_weight(cx, st);
    return sum;
}

MPoly tildeW_prefactor(const Ctx& cx, const FixedPoint& boundary) {
    int v = 0;
    for (int b : boundary) v += b;
    MPoly h2 = cx.hbar() * Q(2);
    MPoly out(cx.vt, Q(1));
    int partial = 0;
    for (int j = 1; j <= cx.prof.w; ++j) {
        int vj = boundary[j - 1];
        partial += vj;
        long expo = (long)vj * (v + cx.prof.w - j - partial);
        if (expo % 2 != 0) out = -out;
        out *= h2.pow(vj);
        for (int t = 0; t < vj; ++t) out *= cx.l(j) - cx.c(Q(t));
    }
    return out;
}

Report theorem_tildeW_check(const SpinProfile& prof, int v_max) {
    Report rep;
    Ctx cx(prof, v_max);
    std::map<int, Q> spins = cx.concrete_spins();
    int min_ell = *std::min_element(prof.ell.begin(), prof.ell.end());
    for (int v = 0; v <= v_max && v <= prof.sum(); ++v) {
        // a label bound can only bind when some ell_j < v; keep the spins
        // symbolic otherwise
        bool symbolic = min_ell >= v;
        for (const FixedPoint& bd : enumerate_fixed_points(prof, v)) {
            MPoly lhs = partition_function(cx, bd);
            MPoly rhs = tildeW_prefactor(cx, bd) * weight_function_id(cx, bd);
            if (!symbolic) {
                lhs = lhs.subst_scalar(spins);
                rhs = rhs.subst_scalar(spins);
            }
            std::ostringstream ce;
            if (!(lhs == rhs)) ce << "boundary mismatch, lhs " << lhs.to_string();
            rep.add(symbolic ? "thm:tildeW" : "thm:tildeW-concrete", v, bd,
                    lhs == rhs, ce.str());

            // y-symmetry of tilde W under adjacent transpositions
            for (int i = 1; i < v; ++i) {
                std::map<int, int> swp{{cx.y_i(i), cx.y_i(i + 1)},
                                       {cx.y_i(i + 1), cx.y_i(i)}};
                MPoly ls = lhs.rename_vars(swp);
                rep.add("tildeW-y-symmetric", v, {i}, ls == lhs);
            }
        }
    }
    return rep;
}

std::string ascii_state(const LatticeState& st) {
    std::ostringstream os;
    for (int j = 0; j < st.w; ++j) os << "  " << st.vertical[0][j] << " ";
    os << "\n";
    for (int i = 1; i <= st.v; ++i) {
        os << "1";
        for (int j = 1; j <= st.w; ++j)
            os << "-+" << (st.hlabel(i, j) ? "-1" : "- ");
        os << "\n";
        if (i <= st.v) {
            for (int j = 0; j < st.w; ++j) os << "  " << st.vertical[i][j] << " ";
            os << "\n";
        }
    }
    return os.str();
}

} // namespace spinlab
