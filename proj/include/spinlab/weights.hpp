#pragma once
// Framed shuffle product, weight functions W^sigma_lambda, restrictions to
// fixed points, and the triangularity/degree verifiers.

#include "spinlab/fixedpoints.hpp"
#include "spinlab/report.hpp"

namespace spinlab {

// Element of SH_{v, n}: polynomial in hbar, y_1..y_v and the z_j with n_j = 1.
struct ShuffleElement {
    int v = 0;
    std::vector<int> n; // framing vector in {0,1}^w
    MPoly value;
};

// eq:shuffle. Throws std::invalid_argument on framing overlap (n1_j + n2_j > 1).
ShuffleElement shuffle_product(const Ctx& cx, const ShuffleElement& f,
                               const ShuffleElement& g);

// W^id_lambda by the direct partition-sum formula (Wformula), accumulated over
// the common Vandermonde denominator and divided out exactly at the end.
MPoly weight_function_id(const Ctx& cx, const FixedPoint& lam);

// W^id_lambda as the iterated shuffle 1 * 1 * ... * 1 (eq star1, left-assoc).
MPoly weight_function_id_star(const Ctx& cx, const FixedPoint& lam);

struct WeightFunction {
    FixedPoint lam;
    Perm sigma;
    MPoly value;
};

// W^sigma_lambda: Wformula over slots a = 1..w with slot data
// (z_sigma(a), l_sigma(a), lambda_sigma(a)); lambda is a physical fixed point.
WeightFunction weight_function(const Ctx& cx, const Perm& sigma,
                               const FixedPoint& lam);

// substitute y's by the Chern roots of mu (plain physical substitution)
MPoly restrict_weight(const Ctx& cx, const MPoly& value, const FixedPoint& mu);

// rows mu, cols lambda over S(ell; v) in canonical descending order
OpMatrix restriction_matrix(const Ctx& cx, const Perm& sigma, int v);

// closed form for W^id_{(v1,v2)}|_{(mu1,mu2)} at w=2, symbolic in l1, l2,
// expressed in z := z_1 (i.e. after z_2 -> 0); requires l_1, l_2 >= v.
RFunc closed_form_restriction_w2(const Ctx& cx, int v1, int v2, int mu1, int mu2);

// diagonal closed form of the triangularity lemma for W^id_lambda|_lambda
MPoly diagonal_closed_form(const Ctx& cx, const FixedPoint& lam);

// triangularity, diagonal product formula, and degree bounds, all sigma
Report verify_weight_properties(const Ctx& cx, int v);

} // namespace spinlab
