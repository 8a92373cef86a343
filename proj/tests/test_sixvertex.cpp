#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinlab/sixvertex.hpp"

using namespace spinlab;

static void check_report(const Report& rep) {
    for (auto& c : rep.checks) {
        INFO(c.relation << " v=" << c.grade << " ce=" << c.counterexample);
        CHECK(c.pass);
    }
}

TEST_CASE("crossing amplitudes and the 4x4 crossing matrix") {
    Ctx cx({2, {1, 1}}, 0);
    MPoly u = cx.z(1) - cx.z(2), h2 = cx.hbar() * Q(2);
    CHECK(sv_beta(cx.vt, u) == RFunc(u, u - h2));
    // straight-through amplitude 2 hbar/(2 hbar - u): this sign is forced by
    // the braid relation and the duality below (with 2 hbar/(u - 2 hbar) both
    // fail), and agrees with the standard form (u Id + eta P)/(u + eta) at
    // eta = -2 hbar
    CHECK(sv_gamma(cx.vt, u) == RFunc(h2, h2 - u));

    OpMatrix R = sixvertex_R(cx.vt, 2, 1, RFunc(u));
    RFunc one(cx.vt, Q(1)), zero(cx.vt, Q(0));
    RFunc b = sv_beta(cx.vt, u), g = sv_gamma(cx.vt, u);
    auto e = [&](Label r, Label c) { return R.at(R.row_index(r), R.col_index(c)); };
    CHECK(e({0, 0}, {0, 0}) == one);
    CHECK(e({1, 1}, {1, 1}) == one);
    CHECK(e({0, 1}, {0, 1}) == g);
    CHECK(e({1, 0}, {1, 0}) == g);
    CHECK(e({0, 1}, {1, 0}) == b);
    CHECK(e({1, 0}, {0, 1}) == b);
    CHECK(e({0, 0}, {0, 1}) == zero);
    CHECK(e({1, 1}, {1, 0}) == zero);
}

TEST_CASE("YBE, unitarity, word independence, R_231 factorization") {
    check_report(check_sixvertex_identities());
}

TEST_CASE("tilded kets and bras: the printed v=4 expansions") {
    Ctx cx({1, {1}}, 4);
    std::vector<MPoly> ys;
    for (int i = 1; i <= 4; ++i) ys.push_back(cx.y(i));
    FBasis fb = f_basis(cx.vt, 4, ys);
    auto col = [&](const Label& a) { return fb.kets.col_index(a); };

    // tilde|0010> = beta(y3-y4)|0010> + gamma(y3-y4)|0001>
    {
        int c = col({0, 0, 1, 0});
        RFunc b34 = sv_beta(cx.vt, ys[2] - ys[3]);
        RFunc g34 = sv_gamma(cx.vt, ys[2] - ys[3]);
        for (size_t r = 0; r < fb.basis.size(); ++r) {
            RFunc want(cx.vt, Q(0));
            if (fb.basis[r] == Label{0, 0, 1, 0}) want = b34;
            if (fb.basis[r] == Label{0, 0, 0, 1}) want = g34;
            INFO("ket 0010 row " << r);
            CHECK(fb.kets.at(r, c) == want);
        }
    }
    // tilde|0100> = b23 b24 |0100> + g23 b24 |0010> + g24 |0001>
    {
        int c = col({0, 1, 0, 0});
        RFunc b23 = sv_beta(cx.vt, ys[1] - ys[2]);
        RFunc b24 = sv_beta(cx.vt, ys[1] - ys[3]);
        RFunc g23 = sv_gamma(cx.vt, ys[1] - ys[2]);
        RFunc g24 = sv_gamma(cx.vt, ys[1] - ys[3]);
        for (size_t r = 0; r < fb.basis.size(); ++r) {
            RFunc want(cx.vt, Q(0));
            if (fb.basis[r] == Label{0, 1, 0, 0}) want = b23 * b24;
            if (fb.basis[r] == Label{0, 0, 1, 0}) want = g23 * b24;
            if (fb.basis[r] == Label{0, 0, 0, 1}) want = g24;
            INFO("ket 0100 row " << r);
            CHECK(fb.kets.at(r, c) == want);
        }
    }
    // tilde<1101| = kappa^{-1} (beta(y4-y3) <1101| + gamma(y4-y3) <1110|)
    {
        int rb = fb.bras.row_index({1, 1, 0, 1});
        RFunc kinv = fb.kappa[rb].inv();
        RFunc b43 = sv_beta(cx.vt, ys[3] - ys[2]);
        RFunc g43 = sv_gamma(cx.vt, ys[3] - ys[2]);
        for (size_t c = 0; c < fb.basis.size(); ++c) {
            RFunc want(cx.vt, Q(0));
            if (fb.basis[c] == Label{1, 1, 0, 1}) want = kinv * b43;
            if (fb.basis[c] == Label{1, 1, 1, 0}) want = kinv * g43;
            INFO("bra 1101 col " << c);
            CHECK(fb.bras.at(rb, c) == want);
        }
    }
}

TEST_CASE("F-basis duality and coset independence, v <= 4") {
    for (int v = 1; v <= 4; ++v) check_report(check_fbasis_duality(v));
}

TEST_CASE("column transfer: conservation and the vacuum eigenvalue") {
    Ctx cx({1, {3}}, 3);
    std::vector<MPoly> ys;
    for (int i = 1; i <= 3; ++i) ys.push_back(cx.y(i));
    MPoly l = cx.l(1), x = cx.z(1);
    // entry <b| T_{m,n} |a> vanishes unless m + sum(a) = n + sum(b)
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n) {
            OpMatrix T = column_transfer(cx.vt, 3, ys, l, 3, x, m, n);
            for (size_t r = 0; r < T.nrows(); ++r)
                for (size_t c = 0; c < T.ncols(); ++c) {
                    int sa = 0, sb = 0;
                    for (int t : T.cols()[c]) sa += t;
                    for (int t : T.rows()[r]) sb += t;
                    if (m + sa != n + sb) CHECK(T.at(r, c).is_zero());
                }
        }
    // T_{0,0}|0..0> = prod_i (y_i - x - l hbar) |0..0>
    OpMatrix T00 = column_transfer(cx.vt, 3, ys, l, 3, x, 0, 0);
    MPoly want(cx.vt, Q(1));
    for (int i = 0; i < 3; ++i) want *= ys[i] - x - l * cx.hbar();
    int c0 = T00.col_index({0, 0, 0});
    for (size_t r = 0; r < T00.nrows(); ++r) {
        RFunc e = T00.at(r, c0);
        if ((int)r == c0) CHECK(e == RFunc(want));
        else CHECK(e.is_zero());
    }
}

TEST_CASE("quasi-diagonal transfer entries: the worked v=4 examples") {
    // symbolic spin l, label bound 4; b = (1,1,0,1), m = 2
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
    // a = (0,0,1,0) is not dominated by b: the entry vanishes
    CHECK(entry({0, 0, 1, 0}).is_zero());
    // a = (0,1,0,0): (2h)^2 l(l-1) (y1-y3-2h)(y4-y3-2h)/((y1-y3)(y4-y3))
    //                * (y2-x+lh)(y3-x-lh)
    MPoly num = (h * Q(2)).pow(2) * l * (l - cx.c(Q(1)));
    num *= ys[0] - ys[2] - h * Q(2);
    num *= ys[3] - ys[2] - h * Q(2);
    num *= ys[1] - x + l * h;
    num *= ys[2] - x - l * h;
    MPoly den = (ys[0] - ys[2]) * (ys[3] - ys[2]);
    CHECK(entry({0, 1, 0, 0}) == RFunc(num, den));
}

TEST_CASE("lem:lm(iii) closed form, concrete spins") {
    for (int l = 1; l <= 3; ++l)
        for (int v = 1; v <= 3; ++v) check_report(lemma_lm_check(l, v));
    check_report(lemma_lm_check(2, 4)); // label bound binds hard at v=4
}

TEST_CASE("RLL: concrete quantum spaces and symbolic weights") {
    check_report(check_rll(3));
}

TEST_CASE("eq:W1: transfer-matrix form of the partition function") {
    check_report(check_w1_identity({2, {2, 2}}, 2));
    check_report(check_w1_identity({3, {2, 1, 2}}, 3));
    check_report(check_w1_identity({2, {1, 3}}, 3));
}

TEST_CASE("thin-line crossing through the thick lines") {
    check_report(yaybe_diagnostic());
}

TEST_CASE("negative control: flipped straight-through sign breaks the YBE") {
    Ctx cx({3, {1, 1, 1}}, 0);
    std::vector<MPoly> us{cx.z(1), cx.z(2), cx.z(3)};
    MPoly u12 = us[0] - us[1], u13 = us[0] - us[2], u23 = us[1] - us[2];
    auto bad_R = [&](int slot, const MPoly& u) {
        OpMatrix m = sixvertex_R(cx.vt, 3, slot, RFunc(u));
        // flip the straight-through amplitude g -> -g on the mixed columns
        for (size_t c = 0; c < m.ncols(); ++c) {
            const Label& a = m.cols()[c];
            if (a[slot - 1] != a[slot]) m.at(c, c) = -m.at(c, c);
        }
        return m;
    };
    OpMatrix lhs = bad_R(1, u12) * bad_R(2, u13) * bad_R(1, u23);
    OpMatrix rhs = bad_R(2, u23) * bad_R(1, u13) * bad_R(2, u12);
    CHECK(!(lhs == rhs));
}
