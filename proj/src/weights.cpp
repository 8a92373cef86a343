#include "spinlab/weights.hpp"

#include <algorithm>
#include <sstream>

namespace spinlab {

namespace {

struct Slot {
    int zvar;  // var index of the framing variable
    int lvar;  // var index of the spin symbol
    int occ;   // occupation (block size)
};

// Wformula over an explicit slot sequence. Terms are accumulated over the
// common Vandermonde denominator V = prod_{p<q}(y_p - y_q) and divided out
// exactly at the end (the sum of weights is a polynomial).
MPoly weight_function_core(const Ctx& cx, const std::vector<Slot>& slots) {
    int v = 0;
    for (auto& s : slots) v += s.occ;
    const VarTablePtr& vt = cx.vt;
    if (v == 0) return MPoly(vt, Q(1));

    std::vector<MPoly> y(v);
    for (int i = 0; i < v; ++i) y[i] = cx.y(i + 1);
    MPoly two_hbar = cx.hbar() * Q(2);

    MPoly vand(vt, Q(1));
    for (int p = 0; p < v; ++p)
        for (int q = p + 1; q < v; ++q) vand *= y[p] - y[q];

    MPoly acc(vt);
    std::vector<int> blk(v, -1);
    std::vector<int> left;
    for (auto& s : slots) left.push_back(s.occ);

    // iterate over all assignments of indices 0..v-1 to blocks with the given
    // sizes, building each term
    std::function<void(int)> rec = [&](int idx) {
        if (idx == v) {
            MPoly term(vt, Q(1));
            int inversions = 0;
            for (int p = 0; p < v; ++p)
                for (int q = p + 1; q < v; ++q) {
                    if (blk[p] < blk[q]) {
                        term *= y[q] - y[p] - two_hbar; // cross numerator
                    } else if (blk[p] > blk[q]) {
                        term *= y[p] - y[q] - two_hbar;
                        ++inversions;
                    } else {
                        term *= y[p] - y[q]; // same block: stays in numerator
                    }
                }
            for (int p = 0; p < v; ++p) {
                int s = blk[p];
                for (int a = 0; a < (int)slots.size(); ++a) {
                    MPoly za = MPoly::variable(vt, vt->names[slots[a].zvar]);
                    MPoly la = MPoly::variable(vt, vt->names[slots[a].lvar]);
                    if (a > s) term *= za - y[p] + la * cx.hbar();
                    else if (a < s) term *= y[p] - za + la * cx.hbar();
                }
            }
            if (inversions % 2) term = -term;
            acc += term;
            return;
        }
        for (int s = 0; s < (int)slots.size(); ++s) {
            if (left[s] == 0) continue;
            --left[s];
            blk[idx] = s;
            rec(idx + 1);
            ++left[s];
        }
    };
    rec(0);

    auto q = acc.divide_exact(vand);
    if (!q) throw std::logic_error("weight function sum not divisible by Vandermonde");
    return *q;
}

std::vector<Slot> sigma_slots(const Ctx& cx, const Perm& sigma, const FixedPoint& lam) {
    std::vector<Slot> slots;
    for (int a = 1; a <= cx.prof.w; ++a) {
        int col = sigma[a - 1];
        slots.push_back({cx.z_i(col), cx.l_i(col), lam[col - 1]});
    }
    return slots;
}

void check_point(const Ctx& cx, const FixedPoint& lam) {
    if ((int)lam.size() != cx.prof.w)
        throw std::invalid_argument("fixed point has wrong length");
    for (int j = 0; j < cx.prof.w; ++j)
        if (lam[j] < 0 || lam[j] > cx.prof.ell[j])
            throw std::invalid_argument("fixed point out of bounds");
}

std::string pt_str(const FixedPoint& p) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ")";
    return os.str();
}

} // namespace

ShuffleElement shuffle_product(const Ctx& cx, const ShuffleElement& f,
                               const ShuffleElement& g) {
    int w = cx.prof.w;
    if ((int)f.n.size() != w || (int)g.n.size() != w)
        throw std::invalid_argument("shuffle: framing vector length mismatch");
    std::vector<int> n(w);
    for (int j = 0; j < w; ++j) {
        if (f.n[j] < 0 || f.n[j] > 1 || g.n[j] < 0 || g.n[j] > 1 ||
            f.n[j] + g.n[j] > 1)
            throw std::invalid_argument("shuffle: framing vectors overlap");
        n[j] = f.n[j] + g.n[j];
    }
    int v1 = f.v, v2 = g.v, v = v1 + v2;
    const VarTablePtr& vt = cx.vt;
    if (v > cx.vmax) throw std::invalid_argument("shuffle: v exceeds context vmax");

    // shift g's y's to y_{v1+1}..y_{v1+v2}
    std::map<int, int> shift;
    for (int i = 1; i <= v2; ++i) shift[cx.y_i(i)] = cx.y_i(v1 + i);
    MPoly gsh = g.value.rename_vars(shift);

    MPoly two_hbar = cx.hbar() * Q(2);
    MPoly fac_num(vt, Q(1)), fac_den(vt, Q(1));
    for (int s = 1; s <= v2; ++s)
        for (int t = 1; t <= v1; ++t) {
            fac_num *= cx.y(v1 + s) - cx.y(t) - two_hbar;
            fac_den *= cx.y(t) - cx.y(v1 + s);
        }
    for (int j = 1; j <= w; ++j) {
        if (g.n[j - 1] == 1)
            for (int a = 1; a <= v1; ++a)
                fac_num *= cx.z(j) - cx.y(a) + cx.l(j) * cx.hbar();
        if (f.n[j - 1] == 1)
            for (int b = 1; b <= v2; ++b)
                fac_num *= cx.y(v1 + b) - cx.z(j) + cx.l(j) * cx.hbar();
    }
    MPoly base = f.value * gsh * fac_num;
    if (v1 == 0 || v2 == 0) return {v, n, base};

    // sum over (v1, v2)-shuffles with a common Vandermonde denominator: each
    // shuffle is a permutation of the y's, so the summand is base renamed,
    // with denominator prod_{cross pairs}(y_p - y_q); multiplying by the
    // missing same-group pairs lifts every term to V = prod_{p<q}(y_p - y_q)
    MPoly vand(vt, Q(1));
    for (int p = 1; p <= v; ++p)
        for (int q = p + 1; q <= v; ++q) vand *= cx.y(p) - cx.y(q);

    MPoly acc(vt);
    std::vector<int> pick(v1);
    std::function<void(int, int)> choose = [&](int start, int k) {
        if (k == v1) {
            std::vector<int> target(v, 0); // old position -> new position
            std::vector<bool> used(v, false);
            for (int t = 0; t < v1; ++t) { target[t] = pick[t]; used[pick[t]] = true; }
            int s = v1;
            for (int i = 0; i < v; ++i)
                if (!used[i]) target[s++] = i;
            std::map<int, int> ren;
            for (int i = 0; i < v; ++i) ren[cx.y_i(i + 1)] = cx.y_i(target[i] + 1);
            MPoly term = base.rename_vars(ren);
            // the term's denominator is prod_{t<=v1<s}(y_{target[t]} - y_{target[s]});
            // flip cross pairs into increasing order and supply same-group pairs
            int sign = 0;
            for (int t = 0; t < v1; ++t)
                for (int u = v1; u < v; ++u)
                    if (target[t] > target[u]) ++sign;
            for (int grp = 0; grp < 2; ++grp) {
                int lo = grp ? v1 : 0, hi = grp ? v : v1;
                for (int p = lo; p < hi; ++p)
                    for (int q = p + 1; q < hi; ++q) {
                        int a = std::min(target[p], target[q]);
                        int b = std::max(target[p], target[q]);
                        term *= cx.y(a + 1) - cx.y(b + 1);
                    }
            }
            if (sign % 2) term = -term;
            acc += term;
            return;
        }
        for (int i = start; i <= v - (v1 - k); ++i) {
            pick[k] = i;
            choose(i + 1, k + 1);
        }
    };
    choose(0, 0);

    auto quot = acc.divide_exact(vand);
    if (!quot)
        throw std::logic_error("shuffle product did not clear its denominator");
    return {v, n, *quot};
}

MPoly weight_function_id(const Ctx& cx, const FixedPoint& lam) {
    check_point(cx, lam);
    return weight_function_core(cx, sigma_slots(cx, perm_identity(cx.prof.w), lam));
}

MPoly weight_function_id_star(const Ctx& cx, const FixedPoint& lam) {
    check_point(cx, lam);
    int w = cx.prof.w;
    ShuffleElement acc{0, std::vector<int>(w, 0), MPoly(cx.vt, Q(1))};
    for (int j = 1; j <= w; ++j) {
        std::vector<int> ej(w, 0);
        ej[j - 1] = 1;
        ShuffleElement unit{lam[j - 1], ej, MPoly(cx.vt, Q(1))};
        acc = shuffle_product(cx, acc, unit);
    }
    return acc.value;
}

WeightFunction weight_function(const Ctx& cx, const Perm& sigma,
                               const FixedPoint& lam) {
    check_point(cx, lam);
    if ((int)sigma.size() != cx.prof.w)
        throw std::invalid_argument("sigma has wrong length");
    return {lam, sigma, weight_function_core(cx, sigma_slots(cx, sigma, lam))};
}

MPoly restrict_weight(const Ctx& cx, const MPoly& value, const FixedPoint& mu) {
    std::vector<MPoly> roots = chern_roots(cx, mu);
    std::map<int, MPoly> sub;
    for (size_t i = 0; i < roots.size(); ++i) sub[cx.y_i((int)i + 1)] = roots[i];
    return value.subst_poly(sub);
}

OpMatrix restriction_matrix(const Ctx& cx, const Perm& sigma, int v) {
    std::vector<FixedPoint> pts = enumerate_fixed_points(cx.prof, v);
    std::vector<Label> labels(pts.begin(), pts.end());
    OpMatrix m(labels, labels, cx.vt);
    for (size_t j = 0; j < pts.size(); ++j) {
        WeightFunction wf = weight_function(cx, sigma, pts[j]);
        for (size_t i = 0; i < pts.size(); ++i)
            m.at(i, j) = RFunc(restrict_weight(cx, wf.value, pts[i]));
    }
    return m;
}

RFunc closed_form_restriction_w2(const Ctx& cx, int v1, int v2, int mu1, int mu2) {
    if (cx.prof.w != 2) throw std::invalid_argument("closed form needs w = 2");
    if (v1 + v2 != mu1 + mu2)
        throw std::invalid_argument("closed form: grade mismatch");
    const VarTablePtr& vt = cx.vt;
    if (mu2 < v2) return RFunc(vt, Q(0)); // binomial vanishes (lambda < mu)

    MPoly z = cx.z(1); // z := z_1 - z_2 realized as z_2 -> 0
    MPoly h = cx.hbar();
    MPoly l1 = cx.l(1), l2 = cx.l(2);

    Q coef = q_binomial(mu2, v2);
    if (((v1 * v2 + mu1 + v2) % 2) != 0) coef = -coef;
    MPoly out(vt, coef);
    for (int k = v2; k <= mu2 - 1; ++k) out *= l2 - MPoly(vt, Q(k)); // (l2-v2)!/(l2-mu2)!
    out *= (h * Q(2)).pow(mu2 - v2);
    for (int b = 0; b <= v2 - 1; ++b)
        out *= z + (l2 - l1 + MPoly(vt, Q(2 * (mu1 - b)))) * h;
    for (int a = 0; a <= mu1 - 1; ++a)
        out *= z - (l1 + l2 - MPoly(vt, Q(2 * a))) * h;
    return RFunc(out);
}

namespace {

// diagonal closed form over the sigma-permuted slot sequence
MPoly diagonal_closed_form_slots(const Ctx& cx, const std::vector<Slot>& slots) {
    const VarTablePtr& vt = cx.vt;
    MPoly h = cx.hbar();
    MPoly out(vt, Q(1));
    int flips = 0;
    int w = (int)slots.size();
    for (int s = 0; s < w; ++s)
        for (int a = s + 1; a < w; ++a) {
            MPoly zs = MPoly::variable(vt, vt->names[slots[s].zvar]);
            MPoly za = MPoly::variable(vt, vt->names[slots[a].zvar]);
            MPoly ls = MPoly::variable(vt, vt->names[slots[s].lvar]);
            MPoly la = MPoly::variable(vt, vt->names[slots[a].lvar]);
            int vs = slots[s].occ, va = slots[a].occ;
            for (int i = vs - va + 1; i <= vs; ++i)
                out *= zs - za + MPoly(vt, Q(2 * i)) * h + (la - ls) * h;
            for (int i = 0; i <= vs - 1; ++i)
                out *= za - zs - MPoly(vt, Q(2 * i)) * h + (ls + la) * h;
            flips += va * (vs + 1); // per-pair sign (-1)^{v_a (v_s + 1)}
        }
    if (flips % 2) out = -out;
    return out;
}

} // namespace

MPoly diagonal_closed_form(const Ctx& cx, const FixedPoint& lam) {
    check_point(cx, lam);
    return diagonal_closed_form_slots(
        cx, sigma_slots(cx, perm_identity(cx.prof.w), lam));
}

Report verify_weight_properties(const Ctx& cx, int v) {
    Report rep;
    int w = cx.prof.w;
    std::vector<FixedPoint> pts = enumerate_fixed_points(cx.prof, v);
    std::vector<int> dw = cx.degree_weights();

    Perm sigma = perm_identity(w);
    std::vector<Perm> sigmas;
    do sigmas.push_back(sigma);
    while (std::next_permutation(sigma.begin(), sigma.end()));

    for (const Perm& sg : sigmas) {
        std::vector<int> sgid(sg); // for report indices
        // restrictions for this sigma
        std::vector<std::vector<MPoly>> r(pts.size(),
                                          std::vector<MPoly>(pts.size()));
        for (size_t j = 0; j < pts.size(); ++j) {
            WeightFunction wf = weight_function(cx, sg, pts[j]);
            for (size_t i = 0; i < pts.size(); ++i)
                r[i][j] = restrict_weight(cx, wf.value, pts[i]);
        }
        bool tri = true, diag = true, deg = true;
        std::string tri_ce, diag_ce, deg_ce;
        for (size_t j = 0; j < pts.size(); ++j) {
            const FixedPoint& lam = pts[j];
            long ddeg = r[j][j].weighted_degree(dw);
            if (ddeg != (long)(w - 1) * v && deg) {
                deg = false;
                deg_ce = "deg W|_" + pt_str(lam) + " = " + std::to_string(ddeg);
            }
            MPoly cf = diagonal_closed_form_slots(cx, sigma_slots(cx, sg, lam));
            if (r[j][j] != cf && diag) {
                diag = false;
                diag_ce = "diagonal at " + pt_str(lam);
            }
            for (size_t i = 0; i < pts.size(); ++i) {
                if (i == j) continue;
                const FixedPoint& mu = pts[i];
                int cmp = sigma_compare(lam, mu, sg);
                if (cmp < 0) { // lambda <_sigma mu
                    if (!r[i][j].is_zero() && tri) {
                        tri = false;
                        tri_ce = "W_" + pt_str(lam) + "|_" + pt_str(mu) + " != 0";
                    }
                } else if (!r[i][j].is_zero()) {
                    long d = r[i][j].weighted_degree(dw);
                    if (d > ddeg && deg) {
                        deg = false;
                        deg_ce = "deg W_" + pt_str(lam) + "|_" + pt_str(mu) +
                                 " = " + std::to_string(d) + " > " +
                                 std::to_string(ddeg);
                    }
                }
            }
        }
        rep.add("triangularity", v, sgid, tri, tri_ce);
        rep.add("diagonal-closed-form", v, sgid, diag, diag_ce);
        rep.add("degree-bounds", v, sgid, deg, deg_ce);
    }
    return rep;
}

} // namespace spinlab
