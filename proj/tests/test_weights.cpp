#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinlab/weights.hpp"

using namespace spinlab;

// specialize z_2 -> 0 (and z_3 -> 0 when present), so z_1 plays z := z_1 - z_2
static MPoly spec_z(const Ctx& cx, const MPoly& p) {
    std::map<int, Q> sub{{cx.z_i(2), Q(0)}};
    return p.subst_scalar(sub);
}

TEST_CASE("w=1 weight functions are 1") {
    Ctx cx({1, {3}}, 3);
    for (int v = 0; v <= 3; ++v) {
        MPoly w = weight_function_id(cx, {v});
        CHECK(w == MPoly(cx.vt, Q(1)));
        CHECK(weight_function_id_star(cx, {v}) == w);
    }
}

TEST_CASE("printed v=1 weight functions") {
    Ctx cx({2, {2, 2}}, 1);
    MPoly h = cx.hbar(), y = cx.y(1);
    MPoly z1 = cx.z(1), z2 = cx.z(2), l1 = cx.l(1), l2 = cx.l(2);

    CHECK(weight_function_id(cx, {1, 0}) == z2 - y + l2 * h);
    CHECK(weight_function_id(cx, {0, 1}) == y - z1 + l1 * h);

    Perm sw = {2, 1};
    CHECK(weight_function(cx, sw, {1, 0}).value == y - z2 + l2 * h);
    CHECK(weight_function(cx, sw, {0, 1}).value == z1 - y + l1 * h);

    CHECK(weight_function_id(cx, {0, 0}) == MPoly(cx.vt, Q(1)));
}

TEST_CASE("printed v=1 restrictions") {
    Ctx cx({2, {2, 2}}, 1);
    MPoly h = cx.hbar(), z = cx.z(1), l1 = cx.l(1), l2 = cx.l(2);
    Perm id2 = perm_identity(2), sw = {2, 1};
    auto entry = [&](const Perm& sg, FixedPoint lam, FixedPoint mu) {
        return spec_z(cx, restrict_weight(cx, weight_function(cx, sg, lam).value, mu));
    };

    CHECK(entry(id2, {1, 0}, {1, 0}) == -z + (l1 + l2) * h);
    CHECK(entry(id2, {1, 0}, {0, 1}) == l2 * h * Q(2));
    CHECK(entry(id2, {0, 1}, {1, 0}).is_zero());
    CHECK(entry(id2, {0, 1}, {0, 1}) == -z + (l1 - l2) * h);

    CHECK(entry(sw, {1, 0}, {1, 0}) == z - (l1 - l2) * h);
    CHECK(entry(sw, {1, 0}, {0, 1}).is_zero());
    CHECK(entry(sw, {0, 1}, {1, 0}) == l1 * h * Q(2));
    CHECK(entry(sw, {0, 1}, {0, 1}) == z + (l1 + l2) * h);
}

TEST_CASE("printed v=2 restriction matrices") {
    Ctx cx({2, {2, 2}}, 2);
    MPoly h = cx.hbar(), z = cx.z(1), l1 = cx.l(1), l2 = cx.l(2);
    Perm id2 = perm_identity(2), sw = {2, 1};

    OpMatrix mid = restriction_matrix(cx, id2, 2);
    REQUIRE(mid.nrows() == 3);
    CHECK(mid.rows()[0] == Label{2, 0});
    CHECK(mid.rows()[1] == Label{1, 1});
    CHECK(mid.rows()[2] == Label{0, 2});
    auto sp = [&](const RFunc& r) { return spec_z(cx, r.num()); };

    CHECK(sp(mid.at(0, 0)) == (z - (l1 + l2) * h) * (z - (l1 + l2 - cx.c(Q(2))) * h));
    CHECK(sp(mid.at(0, 1)).is_zero());
    CHECK(sp(mid.at(0, 2)).is_zero());
    CHECK(sp(mid.at(1, 0)) == -(z - (l1 + l2) * h) * l2 * h * Q(2));
    CHECK(sp(mid.at(1, 1)) == -(z - (l1 - l2 - cx.c(Q(2))) * h) * (z - (l1 + l2) * h));
    CHECK(sp(mid.at(1, 2)).is_zero());
    CHECK(sp(mid.at(2, 0)) == l2 * (l2 * Q(2) - cx.c(Q(2))) * h * h * Q(2));
    CHECK(sp(mid.at(2, 1)) == (l2 * Q(2) - cx.c(Q(2))) * h * (z - (l1 - l2) * h) * Q(2));
    CHECK(sp(mid.at(2, 2)) == (z - (l1 - l2) * h) * (z - (l1 - l2 + cx.c(Q(2))) * h));

    OpMatrix msw = restriction_matrix(cx, sw, 2);
    CHECK(sp(msw.at(0, 0)) == (z - (l1 - l2) * h) * (z - (l1 - l2 - cx.c(Q(2))) * h));
    CHECK(sp(msw.at(0, 1)) == -(l1 * Q(2) - cx.c(Q(2))) * h * (z - (l1 - l2) * h) * Q(2));
    CHECK(sp(msw.at(0, 2)) == l1 * (l1 * Q(2) - cx.c(Q(2))) * h * h * Q(2));
    CHECK(sp(msw.at(1, 0)).is_zero());
    CHECK(sp(msw.at(1, 1)) == -(z - (l1 - l2 + cx.c(Q(2))) * h) * (z + (l1 + l2) * h));
    CHECK(sp(msw.at(1, 2)) == l1 * h * (z + (l1 + l2) * h) * Q(2));
    CHECK(sp(msw.at(2, 0)).is_zero());
    CHECK(sp(msw.at(2, 1)).is_zero());
    CHECK(sp(msw.at(2, 2)) == (z + (l1 + l2) * h) * (z + (l1 + l2 - cx.c(Q(2))) * h));
}

TEST_CASE("shuffle product unit and printed cases") {
    Ctx cx({2, {2, 2}}, 2);
    MPoly h = cx.hbar(), y = cx.y(1);

    // 1 * 1 in SH_{1,e1} x SH_{0,e2} -> z_2 - y + l_2 h
    ShuffleElement a{1, {1, 0}, MPoly(cx.vt, Q(1))};
    ShuffleElement b{0, {0, 1}, MPoly(cx.vt, Q(1))};
    ShuffleElement ab = shuffle_product(cx, a, b);
    CHECK(ab.value == cx.z(2) - y + cx.l(2) * h);
    CHECK(ab.n == std::vector<int>{1, 1});

    // f * 1 with trivial right factor leaves f unchanged
    ShuffleElement f{1, {1, 0}, y * y + h};
    ShuffleElement unit{0, {0, 0}, MPoly(cx.vt, Q(1))};
    CHECK(shuffle_product(cx, f, unit).value == f.value);

    // 1 * 1 in SH_{1,e1} x SH_{1,e2} -> W^id_{(1,1)}
    ShuffleElement c{1, {0, 1}, MPoly(cx.vt, Q(1))};
    CHECK(shuffle_product(cx, a, c).value == weight_function_id(cx, {1, 1}));

    // framing overlap is an error
    CHECK_THROWS_AS(shuffle_product(cx, a, a), std::invalid_argument);
}

TEST_CASE("iterated shuffle equals partition formula") {
    for (auto& pr : std::vector<std::pair<std::vector<int>, int>>{
             {{2, 2}, 2}, {{3, 1}, 2}, {{1, 2, 1}, 2}, {{2, 2, 2}, 3}}) {
        SpinProfile prof{(int)pr.first.size(), pr.first};
        Ctx cx(prof, pr.second);
        for (int v = 0; v <= pr.second; ++v)
            for (auto& lam : enumerate_fixed_points(prof, v))
                CHECK(weight_function_id_star(cx, lam) ==
                      weight_function_id(cx, lam));
    }
}

TEST_CASE("y-symmetry of weight functions") {
    SpinProfile prof{2, {2, 2}};
    Ctx cx(prof, 3);
    for (int v = 2; v <= 3; ++v)
        for (auto& lam : enumerate_fixed_points(prof, v)) {
            MPoly w = weight_function_id(cx, lam);
            for (int i = 1; i < v; ++i) {
                std::map<int, int> swp{{cx.y_i(i), cx.y_i(i + 1)},
                                       {cx.y_i(i + 1), cx.y_i(i)}};
                CHECK(w.rename_vars(swp) == w);
            }
        }
}

TEST_CASE("closed form restriction w=2") {
    SpinProfile prof{2, {3, 3}};
    Ctx cx(prof, 3);

    // sign check at (1,0)|(1,0): formula gives -(z - (l1+l2)h)
    RFunc c10 = closed_form_restriction_w2(cx, 1, 0, 1, 0);
    CHECK(c10.num() == -cx.z(1) + (cx.l(1) + cx.l(2)) * cx.hbar());

    for (int v = 0; v <= 3; ++v)
        for (auto& lam : enumerate_fixed_points(prof, v)) {
            MPoly w = weight_function_id(cx, lam);
            for (auto& mu : enumerate_fixed_points(prof, v)) {
                RFunc direct(spec_z(cx, restrict_weight(cx, w, mu)));
                RFunc closed =
                    closed_form_restriction_w2(cx, lam[0], lam[1], mu[0], mu[1]);
                CHECK(direct == closed);
            }
        }
}

TEST_CASE("triangularity, diagonal and degree lemmas") {
    for (auto& pr : std::vector<std::vector<int>>{
             {1, 1}, {2, 2}, {3, 2}, {1, 2, 1}, {2, 2, 2}}) {
        SpinProfile prof{(int)pr.size(), pr};
        int vtop = std::min(3, prof.sum());
        Ctx cx(prof, vtop);
        for (int v = 0; v <= vtop; ++v) {
            Report rep = verify_weight_properties(cx, v);
            for (auto& c : rep.checks) {
                INFO(c.relation << " v=" << c.grade << " ce=" << c.counterexample);
                CHECK(c.pass);
            }
        }
    }
}
