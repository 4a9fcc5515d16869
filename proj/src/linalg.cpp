#include "hamcheck/linalg.hpp"

#include "hamcheck/errors.hpp"

namespace hamcheck {

ExprMatrix make_matrix(const VariableContext::Ptr& ctx, int rows, int cols) {
    return ExprMatrix(static_cast<std::size_t>(rows),
                      ExprVector(static_cast<std::size_t>(cols),
                                 Expression::integer(ctx, 0)));
}

ExprVector make_vector(const VariableContext::Ptr& ctx, int size) {
    return ExprVector(static_cast<std::size_t>(size), Expression::integer(ctx, 0));
}

ExprTensor3 make_tensor3(const VariableContext::Ptr& ctx, int n) {
    return ExprTensor3(static_cast<std::size_t>(n), make_matrix(ctx, n, n));
}

ExprTensor4 make_tensor4(const VariableContext::Ptr& ctx, int n) {
    return ExprTensor4(static_cast<std::size_t>(n), make_tensor3(ctx, n));
}

ExprMatrix identity_matrix(const VariableContext::Ptr& ctx, int n) {
    ExprMatrix m = make_matrix(ctx, n, n);
    for (int i = 0; i < n; ++i)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
            Expression::integer(ctx, 1);
    return m;
}

Expression determinant(const ExprMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) throw DimensionMismatch("determinant of empty matrix");
    auto ctx = m[0][0].context();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    // Laplace expansion along the first row; n stays small here.
    Expression det = Expression::integer(ctx, 0);
    for (std::size_t j = 0; j < n; ++j) {
        ExprMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            ExprVector row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Expression term = m[0][j] * determinant(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

ExprMatrix invert_matrix(const ExprMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DimensionMismatch("matrix is not square");
    auto ctx = m[0][0].context();

    ExprMatrix a = m;
    ExprMatrix inv = identity_matrix(ctx, static_cast<int>(n));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_identically_zero()) ++pivot;
        if (pivot == n) throw DegenerateMetric();
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Expression p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] = a[col][j] / p;
            inv[col][j] = inv[col][j] / p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_identically_zero()) continue;
            Expression f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] = a[r][j] - f * a[col][j];
                inv[r][j] = inv[r][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

ExprMatrix matmul(const ExprMatrix& a, const ExprMatrix& b) {
    const std::size_t n = a.size(), m = b[0].size(), k = b.size();
    auto ctx = a[0][0].context();
    ExprMatrix out = make_matrix(ctx, static_cast<int>(n), static_cast<int>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Expression acc = Expression::integer(ctx, 0);
            for (std::size_t s = 0; s < k; ++s) acc = acc + a[i][s] * b[s][j];
            out[i][j] = acc;
        }
    return out;
}

}  // namespace hamcheck
