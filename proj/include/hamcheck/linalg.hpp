#ifndef HAMCHECK_LINALG_HPP
#define HAMCHECK_LINALG_HPP

#include <vector>

#include "hamcheck/expression.hpp"

namespace hamcheck {

using ExprVector = std::vector<Expression>;
using ExprMatrix = std::vector<ExprVector>;
using ExprTensor3 = std::vector<ExprMatrix>;   // [i][j][k]
using ExprTensor4 = std::vector<ExprTensor3>;  // [i][j][l][k]

ExprMatrix make_matrix(const VariableContext::Ptr& ctx, int rows, int cols);
ExprVector make_vector(const VariableContext::Ptr& ctx, int size);
ExprTensor3 make_tensor3(const VariableContext::Ptr& ctx, int n);
ExprTensor4 make_tensor4(const VariableContext::Ptr& ctx, int n);
ExprMatrix identity_matrix(const VariableContext::Ptr& ctx, int n);

Expression determinant(const ExprMatrix& m);

// Exact inverse by Gaussian elimination; throws DegenerateMetric when the
// determinant vanishes identically.
ExprMatrix invert_matrix(const ExprMatrix& m);

ExprMatrix matmul(const ExprMatrix& a, const ExprMatrix& b);

}  // namespace hamcheck

#endif
