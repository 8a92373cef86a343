#include "spinlab/opmatrix.hpp"

#include <functional>
#include <sstream>

namespace spinlab {

OpMatrix OpMatrix::identity(const std::vector<Label>& labels, const VarTablePtr& vt) {
    OpMatrix m(labels, labels, vt);
    for (size_t i = 0; i < labels.size(); ++i) m.at(i, i) = RFunc(vt, Q(1));
    return m;
}

int OpMatrix::row_index(const Label& l) const {
    for (size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i] == l) return (int)i;
    return -1;
}

int OpMatrix::col_index(const Label& l) const {
    for (size_t j = 0; j < cols_.size(); ++j)
        if (cols_[j] == l) return (int)j;
    return -1;
}

OpMatrix OpMatrix::operator+(const OpMatrix& o) const {
    OpMatrix r = *this;
    for (size_t i = 0; i < nrows(); ++i)
        for (size_t j = 0; j < ncols(); ++j) r.a_[i][j] += o.a_[i][j];
    return r;
}

OpMatrix OpMatrix::operator-(const OpMatrix& o) const {
    OpMatrix r = *this;
    for (size_t i = 0; i < nrows(); ++i)
        for (size_t j = 0; j < ncols(); ++j) r.a_[i][j] -= o.a_[i][j];
    return r;
}

OpMatrix OpMatrix::operator*(const OpMatrix& o) const {
    if (ncols() != o.nrows())
        throw std::logic_error("OpMatrix: shape mismatch in product");
    OpMatrix r(rows_, o.cols_, vt_);
    for (size_t i = 0; i < nrows(); ++i)
        for (size_t j = 0; j < o.ncols(); ++j) {
            RFunc s(vt_, Q(0));
            for (size_t k = 0; k < ncols(); ++k)
                if (!a_[i][k].is_zero() && !o.a_[k][j].is_zero())
                    s += a_[i][k] * o.a_[k][j];
            r.a_[i][j] = s;
        }
    return r;
}

OpMatrix OpMatrix::operator*(const RFunc& s) const {
    OpMatrix r = *this;
    for (auto& row : r.a_)
        for (auto& e : row) e = e * s;
    return r;
}

bool OpMatrix::operator==(const OpMatrix& o) const {
    if (nrows() != o.nrows() || ncols() != o.ncols()) return false;
    for (size_t i = 0; i < nrows(); ++i)
        for (size_t j = 0; j < ncols(); ++j)
            if (a_[i][j] != o.a_[i][j]) return false;
    return true;
}

bool OpMatrix::is_zero() const {
    for (auto& row : a_)
        for (auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

OpMatrix OpMatrix::map_entries(const std::function<RFunc(const RFunc&)>& fn) const {
    OpMatrix r = *this;
    for (auto& row : r.a_)
        for (auto& e : row) e = fn(e);
    return r;
}

std::string OpMatrix::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < nrows(); ++i) {
        os << "[ ";
        for (size_t j = 0; j < ncols(); ++j) {
            if (j) os << " , ";
            os << a_[i][j].to_string();
        }
        os << " ]\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

RFunc det_small(const OpMatrix& m) {
    size_t n = m.nrows();
    const VarTablePtr& vt = m.table();
    if (n == 0) return RFunc(vt, Q(1));
    if (n == 1) return m.at(0, 0);
    if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    // n == 3
    RFunc d(vt, Q(0));
    int sgn = 1;
    for (size_t j = 0; j < 3; ++j) {
        size_t c1 = (j + 1) % 3, c2 = (j + 2) % 3;
        if (c1 > c2) std::swap(c1, c2);
        RFunc minor = m.at(1, c1) * m.at(2, c2) - m.at(1, c2) * m.at(2, c1);
        d += m.at(0, j) * minor * RFunc(vt, Q(sgn));
        sgn = -sgn;
    }
    return d;
}

OpMatrix inverse_adjugate(const OpMatrix& m) {
    size_t n = m.nrows();
    const VarTablePtr& vt = m.table();
    RFunc d = det_small(m);
    if (d.is_zero()) throw SingularMatrix();
    OpMatrix inv(m.cols(), m.rows(), vt);
    if (n == 1) {
        inv.at(0, 0) = d.inv();
        return inv;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            // cofactor C_ji / det
            std::vector<std::vector<RFunc>> sub;
            RFunc minor(vt, Q(0));
            if (n == 2) {
                minor = m.at(1 - j, 1 - i);
            } else { // n == 3
                size_t r[2], c[2], ri = 0, ci = 0;
                for (size_t t = 0; t < 3; ++t) {
                    if (t != j) r[ri++] = t;
                    if (t != i) c[ci++] = t;
                }
                minor = m.at(r[0], c[0]) * m.at(r[1], c[1]) -
                        m.at(r[0], c[1]) * m.at(r[1], c[0]);
            }
            RFunc cof = ((i + j) % 2 == 0) ? minor : -minor;
            inv.at(i, j) = cof / d;
        }
    return inv;
}

// fraction-free Bareiss elimination on den-cleared rows, then one division
// per entry in the back-substitution
OpMatrix inverse_bareiss(const OpMatrix& m) {
    size_t n = m.nrows();
    const VarTablePtr& vt = m.table();
    MPoly one(vt, Q(1));

    // clear denominators per row: M' = D M, D diagonal of row lcms
    std::vector<MPoly> rowden(n, one);
    for (size_t i = 0; i < n; ++i) {
        MPoly l = one;
        for (size_t j = 0; j < n; ++j) {
            const MPoly& d = m.at(i, j).den();
            MPoly g = mpoly_gcd(l, d);
            l = *(l * d).divide_exact(g);
        }
        rowden[i] = l;
    }
    // augmented [M' | D]
    std::vector<std::vector<MPoly>> a(n, std::vector<MPoly>(2 * n, MPoly(vt)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            const RFunc& e = m.at(i, j);
            MPoly scaled = *rowden[i].divide_exact(e.den());
            a[i][j] = e.num() * scaled;
        }
        a[i][n + i] = rowden[i];
    }

    MPoly prev = one;
    for (size_t k = 0; k < n; ++k) {
        // pivot
        size_t p = k;
        while (p < n && a[p][k].is_zero()) ++p;
        if (p == n) throw SingularMatrix();
        if (p != k) std::swap(a[p], a[k]);
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                MPoly t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = *t.divide_exact(prev);
            }
            a[i][k] = MPoly(vt);
        }
        prev = a[k][k];
    }

    // back-substitution over RFunc; result is (M')^{-1}, then times D
    OpMatrix inv(m.cols(), m.rows(), vt);
    for (size_t col = 0; col < n; ++col) {
        std::vector<RFunc> x(n, RFunc(vt, Q(0)));
        for (int i = (int)n - 1; i >= 0; --i) {
            RFunc s(RFunc(a[i][n + col]));
            for (size_t j = i + 1; j < n; ++j)
                s -= RFunc(a[i][j]) * x[j];
            x[i] = s / RFunc(a[i][i]);
        }
        for (size_t i = 0; i < n; ++i) inv.at(i, col) = x[i];
    }
    return inv;
}

} // namespace

RFunc matrix_determinant(const OpMatrix& m) {
    if (m.nrows() != m.ncols()) throw std::logic_error("determinant of non-square");
    size_t n = m.nrows();
    if (n <= 3) return det_small(m);
    // fraction-free elimination determinant with row-denominator tracking
    const VarTablePtr& vt = m.table();
    RFunc scale(vt, Q(1));
    std::vector<std::vector<RFunc>> a(n, std::vector<RFunc>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    int sgn = 1;
    RFunc det(vt, Q(1));
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && a[p][k].is_zero()) ++p;
        if (p == n) return RFunc(vt, Q(0));
        if (p != k) { std::swap(a[p], a[k]); sgn = -sgn; }
        det = det * a[k][k];
        RFunc pivot_inv = a[k][k].inv();
        for (size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            RFunc f = a[i][k] * pivot_inv;
            for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det * RFunc(vt, Q(sgn));
}

OpMatrix matrix_inverse(const OpMatrix& m) {
    if (m.nrows() != m.ncols()) throw std::logic_error("inverse of non-square");
    return m.nrows() <= 3 ? inverse_adjugate(m) : inverse_bareiss(m);
}

} // namespace spinlab
