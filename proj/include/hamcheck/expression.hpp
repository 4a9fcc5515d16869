#ifndef HAMCHECK_EXPRESSION_HPP
#define HAMCHECK_EXPRESSION_HPP

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hamcheck/context.hpp"
#include "hamcheck/ratfunc.hpp"

namespace hamcheck {

class Expression;

enum class ExprKind {
    Constant,
    Variable,
    Sum,
    Product,
    Power,     // integer exponent
    Quotient,
    Canonical  // a rational function kept in canonical form
};

struct ExprNode {
    ExprKind kind;
    Rational value;                     // Constant
    VarId var = -1;                     // Variable
    std::vector<Expression> children;   // Sum, Product, Quotient, Power(base)
    long exponent = 0;                  // Power
    RationalFunction canon;             // Canonical
};

// Immutable expression over a VariableContext.  The arithmetic operators
// canonicalize eagerly (they return Canonical nodes); the structural factory
// functions build explicit trees, which is what the parser produces.
class Expression {
public:
    Expression() = default;

    static Expression constant(VariableContext::Ptr ctx, Rational c);
    static Expression integer(VariableContext::Ptr ctx, long v) {
        return constant(std::move(ctx), Rational(v));
    }
    static Expression variable(VariableContext::Ptr ctx, VarId v);
    static Expression sum(VariableContext::Ptr ctx, std::vector<Expression> terms);
    static Expression product(VariableContext::Ptr ctx, std::vector<Expression> factors);
    static Expression power(Expression base, long exponent);
    static Expression quotient(Expression numerator, Expression denominator);
    static Expression from_canonical(VariableContext::Ptr ctx, RationalFunction rf);

    bool valid() const { return node_ != nullptr; }
    const VariableContext::Ptr& context() const { return ctx_; }
    ExprKind kind() const { return node_->kind; }
    const ExprNode& node() const { return *node_; }

    // Eagerly-canonicalizing arithmetic.
    Expression operator-() const;
    Expression operator+(const Expression& o) const;
    Expression operator-(const Expression& o) const;
    Expression operator*(const Expression& o) const;
    Expression operator/(const Expression& o) const;
    Expression pow(long e) const;

    // Partial derivative; every other variable is treated as independent.
    // Structural nodes differentiate structurally (sum/Leibniz/power/quotient
    // rules), canonical nodes differentiate on the reduced form.
    Expression diff(VarId v) const;
    Expression diff_by_name(const std::string& name) const;

    // Simultaneous substitution of variables by expressions.
    Expression substitute(const std::map<VarId, Expression>& bindings) const;

    // Canonical form; throws ZeroDenominator if a denominator vanishes
    // identically.
    const RationalFunction& canonical() const;
    bool is_identically_zero() const { return canonical().is_zero(); }
    bool equals(const Expression& o) const {
        return canonical() == o.canonical();
    }

    bool depends_on(VarId v) const { return canonical().depends_on(v); }

    // Exact evaluation of the raw tree (no canonicalization); nullopt when a
    // subexpression hits a pole at the given point.
    std::optional<Rational> evaluate(std::span<const Rational> point) const;

    // Deterministic text form of the canonical form.
    std::string str() const;

private:
    Expression(VariableContext::Ptr ctx, std::shared_ptr<const ExprNode> node);
    void require_same_context(const Expression& o) const;

    VariableContext::Ptr ctx_;
    std::shared_ptr<const ExprNode> node_;
};

Expression operator*(const Rational& c, const Expression& e);
Expression operator+(const Rational& c, const Expression& e);

// e must be polynomial in the jet variables of its covering-mode context.
// Returns jet-part monomial -> coefficient (jet-free), covering every jet
// monomial present in e plus every requested basis monomial (as exact zero).
std::map<Monomial, Expression, GrlexLess> collect_jet_coefficients(
    const Expression& e, std::span<const Monomial> basis = {});

// Builds an explicit tree (sum of monomial terms over a quotient) from a
// canonical form; used by round-trip tests.
Expression reconstruct_tree(const VariableContext::Ptr& ctx,
                            const RationalFunction& rf);

}  // namespace hamcheck

#endif
