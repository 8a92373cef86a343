#pragma once
// Multivariate polynomials with exact rational coefficients.
//
// Representation: dense exponent vectors (length = #vars in the VarTable),
// sparse term map ordered by graded-lex (total degree first, ties broken
// lexicographically with the *last* table variable most significant).

#include "spinlab/scalar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace spinlab {

struct VarTable {
    std::vector<std::string> names;

    int index(const std::string& n) const {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == n) return (int)i;
        return -1;
    }
    size_t size() const { return names.size(); }
    bool operator==(const VarTable& o) const { return names == o.names; }
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline VarTablePtr make_vartable(std::vector<std::string> names) {
    auto vt = std::make_shared<VarTable>();
    vt->names = std::move(names);
    return vt;
}

using Expo = std::vector<int>;

struct MonoCmp {
    bool operator()(const Expo& a, const Expo& b) const {
        long ta = 0, tb = 0;
        for (int e : a) ta += e;
        for (int e : b) tb += e;
        if (ta != tb) return ta < tb;
        for (int i = (int)a.size() - 1; i >= 0; --i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

class RFunc; // fwd (rfunc.hpp)

class MPoly {
public:
    MPoly() = default;
    explicit MPoly(VarTablePtr vt) : vt_(std::move(vt)) {}
    MPoly(VarTablePtr vt, const Q& c) : vt_(std::move(vt)) {
        if (c != 0) terms_[Expo(vt_->size(), 0)] = c;
    }

    static MPoly variable(const VarTablePtr& vt, const std::string& name, int pow = 1);
    static MPoly constant(const VarTablePtr& vt, const Q& c) { return MPoly(vt, c); }

    const VarTablePtr& table() const { return vt_; }
    const std::map<Expo, Q, MonoCmp>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // constant term (asserts is_constant() when strict)
    Q constant_value() const;

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Q& c) const;
    MPoly& operator+=(const MPoly& o) { *this = *this + o; return *this; }
    MPoly& operator-=(const MPoly& o) { *this = *this - o; return *this; }
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }
    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly pow(long e) const;

    // leading term under the canonical order
    const std::pair<const Expo, Q>& leading() const;

    // total degree in the given variable (0-degree if absent / zero poly)
    int degree_in(int var) const;
    bool depends_on(int var) const { return degree_in(var) > 0; }
    // weighted total degree; weight per variable (e.g. z,y,u = 1; hbar,l = 0)
    long weighted_degree(const std::vector<int>& w) const;

    // view as univariate in `var` with MPoly coefficients (exponent of var
    // zeroed out in the coefficient keys)
    std::map<int, MPoly> coeffs_in_var(int var) const;
    static MPoly from_coeffs_in_var(const VarTablePtr& vt, int var,
                                    const std::map<int, MPoly>& cs);

    MPoly derivative(int var) const;

    // exact division; nullopt if not divisible
    std::optional<MPoly> divide_exact(const MPoly& d) const;

    // substitute variables by polynomials (missing vars pass through)
    MPoly subst_poly(const std::map<int, MPoly>& bindings) const;
    // substitute variables by rationals
    MPoly subst_scalar(const std::map<int, Q>& bindings) const;
    // rename variables (var i contributes its exponent to perm[i])
    MPoly rename_vars(const std::map<int, int>& perm) const;

    // make coefficients integral & coprime, leading coefficient positive;
    // returns the scalar c with  this == c * primitive
    std::pair<Q, MPoly> primitive_part() const;

    std::string to_string() const;

private:
    void prune();
    VarTablePtr vt_;
    std::map<Expo, Q, MonoCmp> terms_;
    friend MPoly mpoly_gcd(const MPoly&, const MPoly&);
};

MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

} // namespace spinlab
