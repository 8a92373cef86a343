#include "spinlab/mpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace spinlab {

void MPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

MPoly MPoly::variable(const VarTablePtr& vt, const std::string& name, int pow) {
    int i = vt->index(name);
    if (i < 0) throw std::invalid_argument("variable not in table: " + name);
    MPoly p(vt);
    Expo e(vt->size(), 0);
    e[i] = pow;
    p.terms_[e] = 1;
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (int e : terms_.begin()->first)
        if (e != 0) return false;
    return true;
}

Q MPoly::constant_value() const {
    if (terms_.empty()) return Q(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant poly");
    return terms_.begin()->second;
}

MPoly MPoly::operator-() const {
    MPoly r(vt_);
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    if (!vt_) return o;
    if (!o.vt_) return *this;
    if (!(*vt_ == *o.vt_)) throw std::logic_error("MPoly: mixed var tables");
    MPoly r = *this;
    for (auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) r.terms_[e] = c;
        else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
    if (!vt_) return *this;
    if (!o.vt_) return o;
    if (!(*vt_ == *o.vt_)) throw std::logic_error("MPoly: mixed var tables");
    MPoly r(vt_);
    Expo e(vt_->size());
    for (auto& [ea, ca] : terms_)
        for (auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) r.terms_[e] = ca * cb;
            else it->second += ca * cb;
        }
    r.prune();
    return r;
}

MPoly MPoly::operator*(const Q& c) const {
    MPoly r(vt_);
    if (c == 0) return r;
    for (auto& [e, cc] : terms_) r.terms_[e] = cc * c;
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || it->second != jt->second) return false;
    return true;
}

MPoly MPoly::pow(long e) const {
    if (e < 0) throw std::invalid_argument("MPoly::pow negative exponent");
    MPoly r(vt_, Q(1)), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = (e >>= 1) ? b * b : b;
    }
    return r;
}

const std::pair<const Expo, Q>& MPoly::leading() const {
    if (terms_.empty()) throw std::logic_error("leading() of zero polynomial");
    return *terms_.rbegin();
}

int MPoly::degree_in(int var) const {
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

long MPoly::weighted_degree(const std::vector<int>& w) const {
    long d = 0; // zero poly -> 0 by convention (callers check is_zero first)
    for (auto& [e, c] : terms_) {
        long t = 0;
        for (size_t i = 0; i < e.size(); ++i) t += (long)e[i] * w[i];
        d = std::max(d, t);
    }
    return d;
}

std::map<int, MPoly> MPoly::coeffs_in_var(int var) const {
    std::map<int, MPoly> cs;
    for (auto& [e, c] : terms_) {
        Expo e2 = e;
        int k = e2[var];
        e2[var] = 0;
        auto it = cs.find(k);
        if (it == cs.end()) it = cs.emplace(k, MPoly(vt_)).first;
        it->second.terms_[e2] = c; // distinct keys per k, safe to insert
    }
    return cs;
}

MPoly MPoly::from_coeffs_in_var(const VarTablePtr& vt, int var,
                                const std::map<int, MPoly>& cs) {
    MPoly r(vt);
    for (auto& [k, p] : cs)
        for (auto& [e, c] : p.terms_) {
            Expo e2 = e;
            e2[var] += k;
            auto it = r.terms_.find(e2);
            if (it == r.terms_.end()) r.terms_[e2] = c;
            else it->second += c;
        }
    r.prune();
    return r;
}

MPoly MPoly::derivative(int var) const {
    MPoly r(vt_);
    for (auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Expo e2 = e;
        e2[var] -= 1;
        r.terms_[e2] = c * Q(e[var]);
    }
    return r;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (is_zero()) return MPoly(vt_);
    MPoly q(vt_), r = *this;
    const auto& dl = d.leading();
    while (!r.is_zero()) {
        const auto& rl = r.leading();
        Expo e(vt_->size());
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = rl.first[i] - dl.first[i];
            if (e[i] < 0) return std::nullopt;
        }
        MPoly t(vt_);
        t.terms_[e] = rl.second / dl.second;
        q = q + t;
        r = r - t * d;
    }
    return q;
}

MPoly MPoly::subst_poly(const std::map<int, MPoly>& bindings) const {
    // cache powers of each bound variable
    std::map<int, std::vector<MPoly>> powers;
    for (auto& [v, p] : bindings) powers[v] = {MPoly(vt_, Q(1)), p};
    MPoly r(vt_);
    for (auto& [e, c] : terms_) {
        Expo e2 = e;
        MPoly t(vt_, c);
        bool have_factor = false;
        for (auto& [v, pw] : powers) {
            int k = e2[v];
            if (!k) continue;
            e2[v] = 0;
            auto& vec = powers[v];
            while ((int)vec.size() <= k) vec.push_back(vec.back() * vec[1]);
            t = t * vec[k];
            have_factor = true;
        }
        MPoly mono(vt_);
        mono.terms_[e2] = 1;
        r = r + (have_factor ? t * mono : [&] { MPoly m(vt_); m.terms_[e2] = c; return m; }());
    }
    return r;
}

MPoly MPoly::subst_scalar(const std::map<int, Q>& bindings) const {
    MPoly r(vt_);
    for (auto& [e, c] : terms_) {
        Expo e2 = e;
        Q cc = c;
        for (auto& [v, val] : bindings) {
            for (int k = 0; k < e2[v]; ++k) cc *= val;
            e2[v] = 0;
        }
        if (cc == 0) continue;
        auto it = r.terms_.find(e2);
        if (it == r.terms_.end()) r.terms_[e2] = cc;
        else it->second += cc;
    }
    r.prune();
    return r;
}

MPoly MPoly::rename_vars(const std::map<int, int>& perm) const {
    MPoly r(vt_);
    for (auto& [e, c] : terms_) {
        Expo e2(e.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            auto it = perm.find((int)i);
            e2[it == perm.end() ? i : (size_t)it->second] += e[i];
        }
        auto it = r.terms_.find(e2);
        if (it == r.terms_.end()) r.terms_[e2] = c;
        else it->second += c;
    }
    r.prune();
    return r;
}

std::pair<Q, MPoly> MPoly::primitive_part() const {
    if (is_zero()) return {Q(1), *this};
    // lcm of denominators / gcd of numerators
    Z den_lcm = 1, num_gcd = 0;
    for (auto& [e, c] : terms_) {
        Z d = c.get_den();
        Z g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    for (auto& [e, c] : terms_) {
        Z n = c.get_num() * den_lcm / c.get_den();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Q scale(num_gcd, den_lcm);
    scale.canonicalize();
    if (leading().second < 0) scale = -scale;
    MPoly prim = *this * (Q(1) / scale);
    return {scale, prim};
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print in descending canonical order
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Q c = it->second;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool any_var = false;
        for (int e : it->first)
            if (e) { any_var = true; break; }
        if (!any_var || c != 1) {
            os << q_to_string(c);
            if (any_var) os << "*";
        }
        bool firstv = true;
        for (size_t i = 0; i < it->first.size(); ++i) {
            int e = it->first[i];
            if (!e) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << vt_->names[i];
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// GCD: primitive-part recursive, pseudo-remainder sequence by the most
// significant variable present.

namespace {

int top_var(const MPoly& p) {
    int top = -1;
    for (auto& [e, c] : p.terms())
        for (int i = (int)e.size() - 1; i > top; --i)
            if (e[i] > 0) { top = i; break; }
    return top;
}

// content of p w.r.t. var = gcd of its coefficients (recursively)
MPoly content_wrt(const MPoly& p, int var) {
    MPoly g(p.table());
    for (auto& [k, c] : p.coeffs_in_var(var)) g = mpoly_gcd(g, c);
    return g;
}

// pseudo-remainder of a by b in var (deg_a >= deg_b > 0 coefficients-wise)
MPoly prem(const MPoly& a, const MPoly& b, int var) {
    auto bc = b.coeffs_in_var(var);
    int db = bc.rbegin()->first;
    MPoly lb = bc.rbegin()->second;
    MPoly r = a;
    int dr = r.is_zero() ? -1 : r.degree_in(var);
    if (dr < db) return r;
    int steps = dr - db + 1;
    MPoly xv = MPoly::variable(a.table(), a.table()->names[var]);
    while (!r.is_zero() && (dr = r.degree_in(var)) >= db) {
        auto rc = r.coeffs_in_var(var);
        auto it = rc.find(dr);
        if (it == rc.end() || it->second.is_zero()) break;
        MPoly lead = it->second;
        r = r * lb - b * lead * xv.pow(dr - db);
        --steps;
    }
    // pad so that the total multiplier is lb^(da-db+1) (keeps exactness)
    for (int s = 0; s < steps; ++s) r = r * lb;
    return r;
}

} // namespace

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part().second;
    if (b.is_zero()) return a.primitive_part().second;
    if (a.is_constant() || b.is_constant())
        return MPoly(a.table(), Q(1));
    int va = top_var(a), vb = top_var(b);
    if (va != vb) {
        // the higher variable appears only on one side: gcd divides its content
        if (va > vb) return mpoly_gcd(content_wrt(a, va), b);
        return mpoly_gcd(a, content_wrt(b, vb));
    }
    int v = va;
    MPoly ca = content_wrt(a, v), cb = content_wrt(b, v);
    MPoly c = mpoly_gcd(ca, cb);
    MPoly A = a.divide_exact(ca)->primitive_part().second;
    MPoly B = b.divide_exact(cb)->primitive_part().second;
    if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
    while (true) {
        if (B.is_zero()) break;
        if (B.degree_in(v) == 0) { B = MPoly(a.table(), Q(1)); break; }
        MPoly r = prem(A, B, v);
        if (r.is_zero()) break;
        // strip both the polynomial content and the rational content, or the
        // coefficients of the remainder sequence blow up exponentially
        MPoly rc = content_wrt(r, v);
        A = B;
        B = r.divide_exact(rc)->primitive_part().second;
        if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
    }
    MPoly g = (B.is_zero() ? A : B);
    g = g.primitive_part().second;
    MPoly res = c * g;
    return res.primitive_part().second;
}

} // namespace spinlab
