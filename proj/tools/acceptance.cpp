// Acceptance gate: one PASS/FAIL line per criterion, with enforced runtime
// bounds.  Criterion 10 invokes the CLI binary (path = argv[1], default
// "./spinlab").  Exit code 0 iff every criterion passes.

#include "spinlab/rmatrix.hpp"
#include "spinlab/sixvertex.hpp"
#include "spinlab/yangian.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>

using namespace spinlab;

namespace {

std::string g_cli = "./spinlab";
bool g_all = true;

void criterion(int n, const std::string& what, double limit_s,
               const std::function<bool()>& run) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string err;
    try {
        ok = run();
    } catch (const std::exception& e) {
        err = e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
    bool pass = ok && dt < limit_s;
    g_all = g_all && pass;
    std::printf("criterion %2d: %s (%.2fs < %.0fs) %s%s%s\n", n,
                pass ? "PASS" : "FAIL", dt, limit_s, what.c_str(),
                err.empty() ? "" : " EXCEPTION: ", err.c_str());
    std::fflush(stdout);
}

MPoly spec_z(const Ctx& cx, const MPoly& p) {
    std::map<int, Q> sub{{cx.z_i(2), Q(0)}};
    return p.subst_scalar(sub);
}

bool crit1() {
    Ctx cx({2, {2, 2}}, 1);
    MPoly h = cx.hbar(), z = cx.z(1), l1 = cx.l(1), l2 = cx.l(2);
    OpMatrix R = r_matrix_w2(cx, 1);
    MPoly den = z - (l1 + l2) * h;
    bool ok = R.at(0, 0) == RFunc(-z + (l1 - l2) * h, den) &&
              R.at(0, 1) == RFunc(-l1 * h * Q(2), den) &&
              R.at(1, 0) == RFunc(-l2 * h * Q(2), den) &&
              R.at(1, 1) == RFunc(-z - (l1 - l2) * h, den);
    // pure spin: substitute l_2 -> l_1 =: l, expect (-z Id - 2 l h P)/(z - 2 l h)
    std::map<int, RFunc> eq{{cx.l_i(2), RFunc(l1)}};
    OpMatrix P = r_matrix_w2(cx, 1).map_entries(
        [&](const RFunc& e) { return e.subst(eq); });
    MPoly dp = z - l1 * h * Q(2);
    ok = ok && P.at(0, 0) == RFunc(-z, dp) && P.at(1, 1) == RFunc(-z, dp) &&
         P.at(0, 1) == RFunc(-l1 * h * Q(2), dp) &&
         P.at(1, 0) == RFunc(-l1 * h * Q(2), dp);
    return ok;
}

bool crit2() {
    Ctx cx({2, {2, 2}}, 2);
    MPoly h = cx.hbar(), z = cx.z(1), l1 = cx.l(1), l2 = cx.l(2);
    MPoly two = cx.c(Q(2));
    auto sp = [&](const RFunc& r) { return spec_z(cx, r.num()); };

    OpMatrix mid = restriction_matrix(cx, perm_identity(2), 2);
    bool ok =
        sp(mid.at(0, 0)) == (z - (l1 + l2) * h) * (z - (l1 + l2 - two) * h) &&
        sp(mid.at(0, 1)).is_zero() && sp(mid.at(0, 2)).is_zero() &&
        sp(mid.at(1, 0)) == -(z - (l1 + l2) * h) * l2 * h * Q(2) &&
        sp(mid.at(1, 1)) == -(z - (l1 - l2 - two) * h) * (z - (l1 + l2) * h) &&
        sp(mid.at(1, 2)).is_zero() &&
        sp(mid.at(2, 0)) == l2 * (l2 * Q(2) - two) * h * h * Q(2) &&
        sp(mid.at(2, 1)) == (l2 * Q(2) - two) * h * (z - (l1 - l2) * h) * Q(2) &&
        sp(mid.at(2, 2)) == (z - (l1 - l2) * h) * (z - (l1 - l2 + two) * h);

    OpMatrix msw = restriction_matrix(cx, {2, 1}, 2);
    ok = ok &&
         sp(msw.at(0, 0)) == (z - (l1 - l2) * h) * (z - (l1 - l2 - two) * h) &&
         sp(msw.at(0, 1)) == -(l1 * Q(2) - two) * h * (z - (l1 - l2) * h) * Q(2) &&
         sp(msw.at(0, 2)) == l1 * (l1 * Q(2) - two) * h * h * Q(2) &&
         sp(msw.at(1, 0)).is_zero() &&
         sp(msw.at(1, 1)) == -(z - (l1 - l2 + two) * h) * (z + (l1 + l2) * h) &&
         sp(msw.at(1, 2)) == l1 * h * (z + (l1 + l2) * h) * Q(2) &&
         sp(msw.at(2, 0)).is_zero() && sp(msw.at(2, 1)).is_zero() &&
         sp(msw.at(2, 2)) == (z + (l1 + l2) * h) * (z + (l1 + l2 - two) * h);

    // R(z) printed 3x3, with simple poles at z = (l1+l2) h, (l1+l2-2) h
    OpMatrix R = r_matrix_w2(cx, 2);
    MPoly den = (z - (l1 + l2) * h) * (z - (l1 + l2 - two) * h);
    ok = ok &&
         R.at(0, 0) == RFunc((z - (l1 - l2) * h) * (z - (l1 - l2 - two) * h), den) &&
         R.at(0, 1) == RFunc(-(l1 * Q(2) - two) * h * Q(2) * (z - (l1 - l2) * h), den) &&
         R.at(0, 2) == RFunc(l1 * (l1 * Q(2) - two) * h * h * Q(2), den) &&
         R.at(1, 0) == RFunc(-l2 * h * Q(2) * (z - (l1 - l2) * h), den) &&
         R.at(1, 1) == RFunc(z * z - z * h * Q(2) -
                                 (l1 * Q(2) + l1 * l1 + l2 * Q(2) -
                                  l1 * l2 * Q(6) + l2 * l2) * h * h,
                             den) &&
         R.at(1, 2) == RFunc(-l1 * h * Q(2) * (z + (l1 - l2) * h), den) &&
         R.at(2, 0) == RFunc(l2 * (l2 * Q(2) - two) * h * h * Q(2), den) &&
         R.at(2, 1) == RFunc(-(l2 * Q(2) - two) * h * Q(2) * (z + (l1 - l2) * h), den) &&
         R.at(2, 2) == RFunc((z + (l1 - l2) * h) * (z + (l1 - l2 + two) * h), den);
    return ok;
}

bool crit3() {
    for (int l1 : {3, 4})
        for (int l2 : {3, 4}) {
            Ctx cx({2, {l1, l2}}, 3);
            for (int v = 1; v <= 3; ++v) {
                OpMatrix R = r_matrix_w2(cx, v, true);
                for (int j = 0; j <= v; ++j)
                    for (int jp = 0; jp <= v; ++jp)
                        if (!(r_closed_form_w2(cx, j, jp, v, true) == R.at(j, jp)))
                            return false;
            }
        }
    return true;
}

bool crit4() {
    // the worked (1,1) example
    Ctx cx({2, {2, 2}}, 2);
    MPoly c4 = cx.hbar() * cx.hbar() * Q(4) * cx.l(1) * cx.l(2);
    if (!(partition_function(cx, {1, 1}) == c4 * weight_function_id(cx, {1, 1})))
        return false;
    // all profiles, w <= 3, ell_j <= 3, v <= 3
    for (int w = 1; w <= 3; ++w) {
        std::vector<int> ell(w, 1);
        while (true) {
            if (!theorem_tildeW_check({w, ell}, 3).all_pass()) return false;
            int j = 0;
            while (j < w && ell[j] == 3) ell[j++] = 1;
            if (j == w) break;
            ++ell[j];
        }
    }
    return true;
}

bool crit5() {
    for (int l1 = 1; l1 <= 3; ++l1) {
        if (!verify_yangian_relations_symbolic({1, {l1}}, 3, 2).all_pass())
            return false;
        for (int l2 = 1; l2 <= 3; ++l2)
            if (!verify_yangian_relations_symbolic({2, {l1, l2}}, 3, 2).all_pass())
                return false;
    }
    return verify_yangian_relations_randomized({3, {1, 1, 1}}, 3, 2, 20260823, 20)
        .all_pass();
}

bool crit6() {
    for (int l = 1; l <= 4; ++l)
        if (!evaluation_rep_check(l).all_pass()) return false;
    return true;
}

bool crit7() {
    // The restriction-matrix entries are symbolic in the spins l_j, so the
    // maximal profile (3,..,3) at each w covers every profile with ell_j <= 3:
    // a smaller profile's matrix is the sub-matrix indexed by its fixed points,
    // entry for entry the same polynomials.
    for (int w = 1; w <= 3; ++w) {
        SpinProfile prof{w, std::vector<int>(w, 3)};
        for (int v = 1; v <= 3; ++v) {
            Ctx cx(prof, v);
            if (!verify_weight_properties(cx, v).all_pass()) return false;
        }
    }
    return true;
}

bool crit8() {
    if (!check_sixvertex_identities().all_pass()) return false;
    if (!check_rll(3).all_pass()) return false;
    for (int v = 1; v <= 4; ++v)
        if (!check_fbasis_duality(v).all_pass()) return false;
    for (int l = 1; l <= 3; ++l)
        for (int v = 1; v <= 4; ++v)
            if (!lemma_lm_check(l, v).all_pass()) return false;

    // worked quasi-diagonal entries: b = (1,1,0,1), m = 2, symbolic spin l
    Ctx cx({1, {4}}, 4);
    std::vector<MPoly> ys;
    for (int i = 1; i <= 4; ++i) ys.push_back(cx.y(i));
    MPoly l = cx.l(1), x = cx.z(1), h = cx.hbar();
    FBasis fb = f_basis(cx.vt, 4, ys);
    OpMatrix T = column_transfer(cx.vt, 4, ys, l, 4, x, 2, 0);
    int rb = fb.bras.row_index({1, 1, 0, 1});
    auto entry = [&](const Label& a) {
        int ca = fb.kets.col_index(a);
        RFunc out(cx.vt, Q(0));
        for (size_t r = 0; r < fb.basis.size(); ++r) {
            if (fb.bras.at(rb, r).is_zero()) continue;
            for (size_t c = 0; c < fb.basis.size(); ++c) {
                const RFunc& t = T.at(r, c);
                if (t.is_zero() || fb.kets.at(c, ca).is_zero()) continue;
                out = out + fb.bras.at(rb, r) * t * fb.kets.at(c, ca);
            }
        }
        return out;
    };
    if (!entry({0, 0, 1, 0}).is_zero()) return false;
    MPoly num = (h * Q(2)).pow(2) * l * (l - cx.c(Q(1)));
    num *= ys[0] - ys[2] - h * Q(2);
    num *= ys[3] - ys[2] - h * Q(2);
    num *= ys[1] - x + l * h;
    num *= ys[2] - x - l * h;
    MPoly den = (ys[0] - ys[2]) * (ys[3] - ys[2]);
    return entry({0, 1, 0, 0}) == RFunc(num, den);
}

bool crit9() {
    for (int v = 0; v <= 1; ++v) {
        if (!braid_consistency_check({3, {1, 1, 1}}, v).all_pass()) return false;
        if (!braid_consistency_check({3, {2, 1, 1}}, v).all_pass()) return false;
    }
    return true;
}

bool crit10() {
    std::string base;
    for (int threads : {1, 2, 8}) {
        std::string cmd =
            g_cli + " verify all --threads " + std::to_string(threads);
        FILE* p = popen(cmd.c_str(), "r");
        if (!p) return false;
        std::string got;
        char buf[4096];
        size_t n;
        while ((n = fread(buf, 1, sizeof buf, p)) > 0) got.append(buf, n);
        if (pclose(p) != 0) return false;
        if (threads == 1) base = got;
        else if (got != base) return false;
    }
    return !base.empty();
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli = argv[1];
    setvbuf(stdout, nullptr, _IONBF, 0);

    criterion(1, "w=2 v=1 R-matrix printed form + pure-spin specialization", 1,
              crit1);
    criterion(2, "w=2 v=2 restriction matrices and R(z) printed displays", 5,
              crit2);
    criterion(3, "closed-form R equals inversion-based R, v<=3, l in {3,4}", 60,
              crit3);
    criterion(4, "theorem tildeW, all profiles w<=3 ell<=3 v<=3", 120, crit4);
    criterion(5, "Yangian Y1-Y5 symbolic w<=2 + randomized w=3", 300, crit5);
    criterion(6, "w=1 evaluation representation, l<=4", 10, crit6);
    criterion(7, "triangularity/diagonal/degree lemmas, w<=3 ell<=3 v<=3", 60,
              crit7);
    criterion(8, "six-vertex suite: YBE/unitarity/RLL/duality/lem:lm", 120,
              crit8);
    criterion(9, "braid consistency w=3, ell (1,1,1) and (2,1,1)", 60, crit9);
    criterion(10, "verify-all output byte-identical across 1/2/8 threads", 600,
              crit10);

    std::printf("%s\n", g_all ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL");
    return g_all ? 0 : 1;
}
