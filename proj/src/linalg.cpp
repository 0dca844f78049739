#include "tauforge/linalg.hpp"

namespace tauforge {

namespace {

using IMatrix = std::vector<std::vector<Integer>>;

// Clear denominators row by row; the augmented column goes last.
IMatrix to_integer_rows(const Matrix& a, const Vector* rhs) {
    IMatrix m(a.size());
    for (size_t r = 0; r < a.size(); ++r) {
        Integer l = 1;
        for (const auto& q : a[r]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
        if (rhs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*rhs)[r].get_den().get_mpz_t());
        m[r].reserve(a[r].size() + (rhs ? 1 : 0));
        for (const auto& q : a[r]) m[r].push_back(Integer(q.get_num() * (l / q.get_den())));
        if (rhs) m[r].push_back(Integer((*rhs)[r].get_num() * (l / (*rhs)[r].get_den())));
    }
    return m;
}

// Bareiss fraction-free elimination in place over the first n_cols
// columns; returns the pivot row index used for each column (rank =
// number of pivots found).
std::vector<int> bareiss(IMatrix& m, size_t n_cols) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    Integer prev = 1;
    size_t row = 0;
    for (size_t col = 0; col < n_cols && row < m.size(); ++col) {
        size_t p = row;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[row], m[p]);
        for (size_t r = row + 1; r < m.size(); ++r) {
            for (size_t c = col + 1; c < m[r].size(); ++c) {
                Integer num = m[r][c] * m[row][col] - m[r][col] * m[row][c];
                Integer q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0) throw std::logic_error("fraction-free elimination lost exactness");
                m[r][c] = q;
            }
            m[r][col] = 0;
        }
        prev = m[row][col];
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

}  // namespace

Vector exact_linear_solve(const Matrix& a, const Vector& rhs) {
    const size_t rows = a.size();
    if (rows == 0 || rhs.size() != rows)
        throw std::invalid_argument("exact_linear_solve: shape mismatch");
    const size_t cols = a[0].size();
    for (const auto& r : a)
        if (r.size() != cols) throw std::invalid_argument("exact_linear_solve: ragged matrix");
    if (rows < cols) throw std::domain_error("singular system");

    IMatrix m = to_integer_rows(a, &rhs);
    auto pivots = bareiss(m, cols);
    if (pivots.size() < cols) throw std::domain_error("singular system");
    for (size_t r = cols; r < rows; ++r)
        if (m[r][cols] != 0) throw std::domain_error("inconsistent system");

    Vector x(cols, Rational(0));
    for (size_t ri = cols; ri-- > 0;) {
        Rational s = make_rational(m[ri][cols], 1);
        for (size_t c = ri + 1; c < cols; ++c) s -= m[ri][c] * x[c];
        x[ri] = s / make_rational(m[ri][ri], 1);
    }
    return x;
}

int matrix_rank(const Matrix& a) {
    if (a.empty()) return 0;
    IMatrix m = to_integer_rows(a, nullptr);
    return static_cast<int>(bareiss(m, a[0].size()).size());
}

}  // namespace tauforge
