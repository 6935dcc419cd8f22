#pragma once

#include <vector>

#include "greenbn/poly.hpp"

namespace greenbn {

// Dense row-major matrix over the rational function field Q(t).
class MatrixRF {
public:
    MatrixRF() : rows_(0), cols_(0) {}
    MatrixRF(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

    static MatrixRF identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    RatFunc& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const RatFunc& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    MatrixRF transposed() const;
    MatrixRF submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

    friend MatrixRF operator*(const MatrixRF& a, const MatrixRF& b);
    friend MatrixRF operator-(const MatrixRF& a, const MatrixRF& b);
    friend bool operator==(const MatrixRF& a, const MatrixRF& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    bool is_zero() const;
    bool is_symmetric() const;

private:
    int rows_, cols_;
    std::vector<RatFunc> e_;
};

// Solves A x = b exactly over Q(t) by Gaussian elimination.
// Throws "singular system" if A is singular.
std::vector<RatFunc> linsolve(const MatrixRF& a, const std::vector<RatFunc>& b);

}  // namespace greenbn
