#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinlab/rmatrix.hpp"

using namespace spinlab;

static void check_report(const Report& rep) {
    for (auto& c : rep.checks) {
        INFO(c.relation << " v=" << c.grade << " ce=" << c.counterexample);
        CHECK(c.pass);
    }
}

TEST_CASE("v=1 R-matrix, symbolic spins") {
    Ctx cx({2, {2, 2}}, 1);
    MPoly h = cx.hbar(), z = cx.z(1), l1 = cx.l(1), l2 = cx.l(2);
    OpMatrix R = r_matrix_w2(cx, 1);
    MPoly den = z - (l1 + l2) * h;
    CHECK(R.at(0, 0) == RFunc(-z + (l1 - l2) * h, den));
    CHECK(R.at(0, 1) == RFunc(-l1 * h * Q(2), den));
    CHECK(R.at(1, 0) == RFunc(-l2 * h * Q(2), den));
    CHECK(R.at(1, 1) == RFunc(-z - (l1 - l2) * h, den));
}

TEST_CASE("v=1 pure-spin form (-z Id - 2 l hbar P)/(z - 2 l hbar)") {
    Ctx cx({2, {3, 3}}, 1);
    MPoly h = cx.hbar(), z = cx.z(1), l = cx.l(1);
    // equal spins: substitute l_2 -> l_1 =: l
    std::map<int, RFunc> eq{{cx.l_i(2), RFunc(l)}};
    OpMatrix R = r_matrix_w2(cx, 1).map_entries(
        [&](const RFunc& e) { return e.subst(eq); });
    MPoly den = z - l * h * Q(2);
    // P swaps the two one-box fixed points
    CHECK(R.at(0, 0) == RFunc(-z, den));
    CHECK(R.at(1, 1) == RFunc(-z, den));
    CHECK(R.at(0, 1) == RFunc(-l * h * Q(2), den));
    CHECK(R.at(1, 0) == RFunc(-l * h * Q(2), den));
}

TEST_CASE("v=2 R-matrix, symbolic spins") {
    Ctx cx({2, {2, 2}}, 2);
    MPoly h = cx.hbar(), z = cx.z(1), l1 = cx.l(1), l2 = cx.l(2);
    OpMatrix R = r_matrix_w2(cx, 2);
    // every entry has the same denominator (simple poles at z = (l1+l2) hbar
    // and z = (l1+l2-2) hbar)
    MPoly den = (z - (l1 + l2) * h) * (z - (l1 + l2 - cx.c(Q(2))) * h);
    MPoly two = cx.c(Q(2));

    CHECK(R.at(0, 0) ==
          RFunc((z - (l1 - l2) * h) * (z - (l1 - l2 - two) * h), den));
    CHECK(R.at(0, 1) ==
          RFunc(-(l1 * Q(2) - two) * h * Q(2) * (z - (l1 - l2) * h), den));
    CHECK(R.at(0, 2) == RFunc(l1 * (l1 * Q(2) - two) * h * h * Q(2), den));
    CHECK(R.at(1, 0) == RFunc(-l2 * h * Q(2) * (z - (l1 - l2) * h), den));
    CHECK(R.at(1, 1) ==
          RFunc(z * z - z * h * Q(2) -
                    (l1 * Q(2) + l1 * l1 + l2 * Q(2) - l1 * l2 * Q(6) + l2 * l2) *
                        h * h,
                den));
    CHECK(R.at(1, 2) == RFunc(-l1 * h * Q(2) * (z + (l1 - l2) * h), den));
    CHECK(R.at(2, 0) == RFunc(l2 * (l2 * Q(2) - two) * h * h * Q(2), den));
    CHECK(R.at(2, 1) ==
          RFunc(-(l2 * Q(2) - two) * h * Q(2) * (z + (l1 - l2) * h), den));
    CHECK(R.at(2, 2) ==
          RFunc((z + (l1 - l2) * h) * (z + (l1 - l2 + two) * h), den));
}

TEST_CASE("closed-form R equals inversion-based R, symbolic spins, v<=2") {
    Ctx cx({2, {4, 4}}, 2);
    for (int v = 1; v <= 2; ++v) {
        OpMatrix R = r_matrix_w2(cx, v);
        for (int j = 0; j <= v; ++j)
            for (int jp = 0; jp <= v; ++jp) {
                INFO("v=" << v << " j=" << j << " j'=" << jp);
                CHECK(r_closed_form_w2(cx, j, jp, v) == R.at(j, jp));
            }
    }
}

TEST_CASE("closed-form R equals inversion-based R, concrete spins, v<=3") {
    for (int l1 : {3, 4})
        for (int l2 : {3, 4}) {
            Ctx cx({2, {l1, l2}}, 3);
            for (int v = 1; v <= 3; ++v) {
                OpMatrix R = r_matrix_w2(cx, v, true);
                for (int j = 0; j <= v; ++j)
                    for (int jp = 0; jp <= v; ++jp) {
                        INFO("l=(" << l1 << "," << l2 << ") v=" << v << " j="
                                   << j << " j'=" << jp);
                        CHECK(r_closed_form_w2(cx, j, jp, v, true) ==
                              R.at(j, jp));
                    }
            }
        }
}

TEST_CASE("negative control: shifted closed-form index breaks the match") {
    Ctx cx({2, {3, 3}}, 2);
    OpMatrix R = r_matrix_w2(cx, 2, true);
    CHECK(r_closed_form_w2(cx, 0, 1, 2, true) != R.at(0, 0));
    CHECK(r_closed_form_w2(cx, 1, 0, 2, true) != R.at(0, 1));
}

TEST_CASE("R-matrix properties: identity, cocycle, inverse pair, poles") {
    check_report(verify_rmatrix_properties({2, {2, 2}}, 2));
    check_report(verify_rmatrix_properties({2, {1, 3}}, 2));
    check_report(verify_rmatrix_properties({3, {1, 1, 1}}, 1));
}

TEST_CASE("denominator divisors of the specialized w=2 R") {
    Ctx cx({2, {2, 3}}, 2);
    for (int v = 1; v <= 2; ++v)
        check_report(
            denominator_divisor_check(cx, r_matrix_w2(cx, v, true), true));
}

TEST_CASE("braid consistency, w=3") {
    check_report(braid_consistency_check({3, {1, 1, 1}}, 0)); // trivial grade
    check_report(braid_consistency_check({3, {1, 1, 1}}, 1));
    check_report(braid_consistency_check({3, {2, 1, 1}}, 1));
}
