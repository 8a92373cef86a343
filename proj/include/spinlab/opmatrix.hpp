#pragma once
// Dense matrices over RFunc with labelled row/column index lists.

#include "spinlab/rfunc.hpp"

#include <functional>
#include <vector>

namespace spinlab {

using Label = std::vector<int>; // fixed point / binary string / generic tag

struct SingularMatrix : std::runtime_error {
    SingularMatrix() : std::runtime_error("matrix is singular") {}
};

class OpMatrix {
public:
    OpMatrix() = default;
    OpMatrix(std::vector<Label> rows, std::vector<Label> cols,
             const VarTablePtr& vt)
        : rows_(std::move(rows)), cols_(std::move(cols)), vt_(vt),
          a_(rows_.size(), std::vector<RFunc>(cols_.size(), RFunc(vt, Q(0)))) {}

    static OpMatrix identity(const std::vector<Label>& labels, const VarTablePtr& vt);

    size_t nrows() const { return rows_.size(); }
    size_t ncols() const { return cols_.size(); }
    const std::vector<Label>& rows() const { return rows_; }
    const std::vector<Label>& cols() const { return cols_; }
    const VarTablePtr& table() const { return vt_; }

    RFunc& at(size_t i, size_t j) { return a_[i][j]; }
    const RFunc& at(size_t i, size_t j) const { return a_[i][j]; }

    int row_index(const Label& l) const;
    int col_index(const Label& l) const;

    OpMatrix operator+(const OpMatrix& o) const;
    OpMatrix operator-(const OpMatrix& o) const;
    OpMatrix operator*(const OpMatrix& o) const; // labels: rows_ x o.cols_
    OpMatrix operator*(const RFunc& s) const;
    bool operator==(const OpMatrix& o) const;    // entrywise (labels ignored)
    bool operator!=(const OpMatrix& o) const { return !(*this == o); }
    bool is_zero() const;

    OpMatrix map_entries(const std::function<RFunc(const RFunc&)>& fn) const;

    std::string to_string() const;

private:
    std::vector<Label> rows_, cols_;
    VarTablePtr vt_;
    std::vector<std::vector<RFunc>> a_;
};

RFunc matrix_determinant(const OpMatrix& m);
OpMatrix matrix_inverse(const OpMatrix& m);

} // namespace spinlab
