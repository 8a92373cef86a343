#pragma once
// Exact rational scalars on top of GMP. mpq_class already maintains the
// canonical form we need (reduced, positive denominator, 0 == 0/1).

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace spinlab {

using Q = mpq_class;
using Z = mpz_class;

inline std::string q_to_string(const Q& q) {
    // mpq_class(int, int) does not canonicalize, so do it on a copy here
    Q c = q;
    c.canonicalize();
    return c.get_str();
}

inline Q q_from_string(const std::string& s) {
    Q q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline Q q_binomial(long n, long k) {
    if (k < 0 || k > n) return Q(0);
    Z num = 1, den = 1;
    for (long t = 0; t < k; ++t) { num *= (n - t); den *= (t + 1); }
    Q r(num, den);
    r.canonicalize();
    return r;
}

inline Z z_factorial(long n) {
    Z r = 1;
    for (long t = 2; t <= n; ++t) r *= t;
    return r;
}

} // namespace spinlab
