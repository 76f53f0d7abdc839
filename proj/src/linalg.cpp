#include "homni/linalg.hpp"

#include "homni/errors.hpp"

namespace homni {

std::vector<int> rref(Matrix& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    const std::size_t rows = a.size();
    const std::size_t cols = a[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[row], a[piv]);
        const Rational inv = a[row][col];
        for (std::size_t j = col; j < cols; ++j) a[row][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            const Rational factor = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= factor * a[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

int rank(Matrix a) { return static_cast<int>(rref(a).size()); }

std::vector<std::vector<Rational>> nullspace(Matrix a, int n_cols) {
    for (auto& r : a) r.resize(static_cast<std::size_t>(n_cols), Rational(0));
    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n_cols), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < n_cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Rational> v(static_cast<std::size_t>(n_cols), Rational(0));
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
            const auto pc = static_cast<std::size_t>(pivots[pr]);
            v[pc] = -a[pr][static_cast<std::size_t>(free)];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int nullspace_dim(Matrix a, int n_cols) {
    return n_cols - rank(std::move(a));
}

Rational determinant(Matrix a) {
    const std::size_t n = a.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(a[col], a[piv]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            const Rational factor = a[i][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= factor * a[col][j];
        }
    }
    return det;
}

Matrix inverse(Matrix a) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        a[i].resize(2 * n, Rational(0));
        a[i][n + i] = 1;
    }
    std::vector<int> pivots = rref(a);
    if (pivots.size() != n || (n > 0 && static_cast<std::size_t>(pivots.back()) != n - 1))
        throw DegeneracyError("matrix is singular");
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i].assign(a[i].begin() + static_cast<std::ptrdiff_t>(n), a[i].end());
    return out;
}

}  // namespace homni
