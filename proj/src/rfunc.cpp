#include "spinlab/rfunc.hpp"

namespace spinlab {

RFunc::RFunc(MPoly n) : num_(std::move(n)), den_(num_.table(), Q(1)) {}

RFunc::RFunc(MPoly n, MPoly d) {
    if (d.is_zero()) throw DivisionByZero();
    if (n.is_zero()) {
        num_ = n;
        den_ = MPoly(n.table(), Q(1));
        return;
    }
    MPoly g = mpoly_gcd(n, d);
    if (!g.is_constant()) {
        n = *n.divide_exact(g);
        d = *d.divide_exact(g);
    }
    auto [scale, dprim] = d.primitive_part();
    num_ = n * (Q(1) / scale);
    den_ = dprim;
}

bool RFunc::is_polynomial() const {
    return den_.is_constant();
}

RFunc RFunc::operator-() const {
    RFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RFunc RFunc::operator+(const RFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RFunc(num_ + o.num_, den_);
    return RFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RFunc RFunc::operator-(const RFunc& o) const { return *this + (-o); }

RFunc RFunc::operator*(const RFunc& o) const {
    if (is_zero()) return *this;
    if (o.is_zero()) return o;
    // cross-reduce first to keep intermediates small
    MPoly g1 = mpoly_gcd(num_, o.den_), g2 = mpoly_gcd(o.num_, den_);
    MPoly n1 = g1.is_constant() ? num_ : *num_.divide_exact(g1);
    MPoly d2 = g1.is_constant() ? o.den_ : *o.den_.divide_exact(g1);
    MPoly n2 = g2.is_constant() ? o.num_ : *o.num_.divide_exact(g2);
    MPoly d1 = g2.is_constant() ? den_ : *den_.divide_exact(g2);
    return RFunc(n1 * n2, d1 * d2);
}

RFunc RFunc::operator/(const RFunc& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return *this * o.inv();
}

RFunc RFunc::inv() const {
    if (is_zero()) throw DivisionByZero();
    return RFunc(den_, num_);
}

bool RFunc::operator==(const RFunc& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

RFunc RFunc::subst(const std::map<int, RFunc>& bindings) const {
    RFunc n = poly_substitute(num_, bindings);
    RFunc d = poly_substitute(den_, bindings);
    return n / d;
}

RFunc RFunc::subst_scalar(const std::map<int, Q>& bindings) const {
    MPoly n = num_.subst_scalar(bindings);
    MPoly d = den_.subst_scalar(bindings);
    return RFunc(n, d);
}

RFunc RFunc::rename_vars(const std::map<int, int>& perm) const {
    return RFunc(num_.rename_vars(perm), den_.rename_vars(perm));
}

std::string RFunc::to_string() const {
    if (is_polynomial()) {
        Q c = den_.constant_value();
        if (c == 1) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + q_to_string(c) + ")";
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RFunc poly_substitute(const MPoly& p, const std::map<int, RFunc>& bindings) {
    // fast path: all bindings polynomial
    bool all_poly = true;
    for (auto& [v, r] : bindings)
        if (!r.is_polynomial()) { all_poly = false; break; }
    if (all_poly) {
        std::map<int, MPoly> pb;
        for (auto& [v, r] : bindings)
            pb.emplace(v, r.num() * (Q(1) / r.den().constant_value()));
        return RFunc(p.subst_poly(pb));
    }
    RFunc acc(p.table(), Q(0));
    std::map<int, std::vector<RFunc>> powers;
    for (auto& [v, r] : bindings) powers[v] = {RFunc(p.table(), Q(1)), r};
    for (auto& [e, c] : p.terms()) {
        RFunc t(p.table(), c);
        Expo e2 = e;
        for (auto& [v, vec0] : powers) {
            int k = e2[v];
            if (!k) continue;
            e2[v] = 0;
            auto& vec = powers[v];
            while ((int)vec.size() <= k) vec.push_back(vec.back() * vec[1]);
            t = t * vec[k];
        }
        // residual monomial in the unbound variables
        MPoly m(p.table(), Q(1));
        for (size_t i = 0; i < e2.size(); ++i)
            if (e2[i]) m = m * MPoly::variable(p.table(), p.table()->names[i], e2[i]);
        acc = acc + t * RFunc(m);
    }
    return acc;
}

RFunc rfunc_normalize(const MPoly& num, const MPoly& den) {
    return RFunc(num, den);
}

RFunc residue_simple_pole(const RFunc& f, int u_var, const RFunc& pole) {
    if (!pole.den().is_constant())
        throw ResidueError("residue: pole must be polynomial (scalar denominator)");
    const VarTablePtr& vt = f.table();
    MPoly a = pole.num() * (Q(1) / pole.den().constant_value());
    MPoly linear = MPoly::variable(vt, vt->names[u_var]) - a;
    std::map<int, RFunc> at_pole{{u_var, RFunc(a)}};
    auto q = f.den().divide_exact(linear);
    if (!q) {
        RFunc d_at = poly_substitute(f.den(), at_pole);
        if (!d_at.is_zero())
            throw ResidueError("residue: no pole at the given point");
        // den vanishes at the point but (u - a) does not divide it: this can
        // only happen through content in other variables; treat as error
        throw ResidueError("residue: degenerate pole location");
    }
    RFunc q_at = poly_substitute(*q, at_pole);
    if (q_at.is_zero())
        throw ResidueError("residue: pole of order >= 2");
    RFunc n_at = poly_substitute(f.num(), at_pole);
    return n_at / q_at;
}

std::vector<RFunc> laurent_at_infinity(const RFunc& f, int u_var, int order) {
    const VarTablePtr& vt = f.table();
    auto nc = f.num().coeffs_in_var(u_var);
    auto dc = f.den().coeffs_in_var(u_var);
    int dn = f.num().is_zero() ? -1 : f.num().degree_in(u_var);
    int dd = f.den().degree_in(u_var);
    if (dn > dd)
        throw std::domain_error("laurent_at_infinity: unbounded at infinity");
    auto coeff = [&](std::map<int, MPoly>& cs, int k) -> MPoly {
        auto it = cs.find(k);
        return it == cs.end() ? MPoly(vt) : it->second;
    };
    RFunc lead_inv = RFunc(MPoly(vt, Q(1)), coeff(dc, dd));
    std::vector<RFunc> c;
    for (int m = 0; m <= order; ++m) {
        RFunc s(RFunc(coeff(nc, dd - m)));
        for (int j = 0; j < m; ++j)
            s = s - c[j] * RFunc(coeff(dc, dd - m + j));
        c.push_back(s * lead_inv);
    }
    return c;
}

} // namespace spinlab
