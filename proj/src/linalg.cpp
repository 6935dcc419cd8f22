#include "greenbn/linalg.hpp"

#include <stdexcept>

namespace greenbn {

MatrixRF MatrixRF::identity(int n) {
    MatrixRF m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RatFunc(Rational(1));
    return m;
}

MatrixRF MatrixRF::transposed() const {
    MatrixRF m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

MatrixRF MatrixRF::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    MatrixRF m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c)
            m.at(static_cast<int>(r), static_cast<int>(c)) = at(rows[r], cols[c]);
    return m;
}

MatrixRF operator*(const MatrixRF& a, const MatrixRF& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("MatrixRF: shape mismatch");
    MatrixRF m(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int k = 0; k < a.cols_; ++k) {
            const RatFunc& f = a.at(r, k);
            if (f.is_zero()) continue;
            for (int c = 0; c < b.cols_; ++c) {
                const RatFunc& g = b.at(k, c);
                if (g.is_zero()) continue;
                m.at(r, c) += f * g;
            }
        }
    return m;
}

MatrixRF operator-(const MatrixRF& a, const MatrixRF& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("MatrixRF: shape mismatch");
    MatrixRF m(a.rows_, a.cols_);
    for (size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] - b.e_[i];
    return m;
}

bool MatrixRF::is_zero() const {
    for (const auto& f : e_)
        if (!f.is_zero()) return false;
    return true;
}

bool MatrixRF::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r + 1; c < cols_; ++c)
            if (at(r, c) != at(c, r)) return false;
    return true;
}

std::vector<RatFunc> linsolve(const MatrixRF& a, const std::vector<RatFunc>& b) {
    const int n = a.rows();
    if (a.cols() != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("linsolve: shape mismatch");
    MatrixRF m = a;
    std::vector<RatFunc> rhs = b;
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;

    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!m.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("singular system");
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(m.at(piv, c), m.at(col, c));
            std::swap(rhs[static_cast<size_t>(piv)], rhs[static_cast<size_t>(col)]);
        }
        const RatFunc p = m.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (m.at(r, col).is_zero()) continue;
            RatFunc f = m.at(r, col) / p;
            for (int c = col; c < n; ++c) m.at(r, c) -= f * m.at(col, c);
            rhs[static_cast<size_t>(r)] -= f * rhs[static_cast<size_t>(col)];
        }
    }
    std::vector<RatFunc> x(static_cast<size_t>(n));
    for (int r = n - 1; r >= 0; --r) {
        RatFunc acc = rhs[static_cast<size_t>(r)];
        for (int c = r + 1; c < n; ++c) acc -= m.at(r, c) * x[static_cast<size_t>(c)];
        x[static_cast<size_t>(r)] = acc / m.at(r, r);
    }
    return x;
}

}  // namespace greenbn
