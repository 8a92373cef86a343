#pragma once
// Reduced fractions of MPoly. Canonical form: gcd(num, den) trivial, den is
// integer-primitive with positive leading coefficient (so den == 1 exactly
// when the value is polynomial with that normalization).

#include "spinlab/mpoly.hpp"

#include <vector>

namespace spinlab {

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("rfunc: division by zero") {}
};

class RFunc {
public:
    RFunc() = default;
    RFunc(MPoly n, MPoly d);                 // normalizes
    explicit RFunc(MPoly n);                 // den = 1
    RFunc(const VarTablePtr& vt, const Q& c) : RFunc(MPoly(vt, c)) {}

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    const VarTablePtr& table() const { return num_.table(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Q constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RFunc operator-() const;
    RFunc operator+(const RFunc& o) const;
    RFunc operator-(const RFunc& o) const;
    RFunc operator*(const RFunc& o) const;
    RFunc operator/(const RFunc& o) const;
    RFunc& operator+=(const RFunc& o) { *this = *this + o; return *this; }
    RFunc& operator-=(const RFunc& o) { *this = *this - o; return *this; }
    RFunc& operator*=(const RFunc& o) { *this = *this * o; return *this; }

    RFunc inv() const;

    // equality by cross-multiplication (avoids GCDs)
    bool operator==(const RFunc& o) const;
    bool operator!=(const RFunc& o) const { return !(*this == o); }

    RFunc subst(const std::map<int, RFunc>& bindings) const;
    RFunc subst_scalar(const std::map<int, Q>& bindings) const;
    RFunc rename_vars(const std::map<int, int>& perm) const;

    std::string to_string() const;

private:
    MPoly num_, den_;
};

// spec ops ------------------------------------------------------------------

// simultaneous substitution var -> RFunc into a polynomial
RFunc poly_substitute(const MPoly& p, const std::map<int, RFunc>& bindings);

RFunc rfunc_normalize(const MPoly& num, const MPoly& den);

struct ResidueError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// residue of f at the simple pole u = pole (pole's denominator must be
// scalar); errors if there is no pole there or the pole is not simple
RFunc residue_simple_pole(const RFunc& f, int u_var, const RFunc& pole);

// coefficients of u^0, u^-1, ..., u^-order of the expansion at infinity
std::vector<RFunc> laurent_at_infinity(const RFunc& f, int u_var, int order);

} // namespace spinlab
