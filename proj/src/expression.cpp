#include "hamcheck/expression.hpp"

#include <algorithm>
#include <mutex>

#include "hamcheck/errors.hpp"

namespace hamcheck {

namespace {

struct NodeStorage : ExprNode {
    mutable std::once_flag canon_once;
    mutable std::shared_ptr<const RationalFunction> canon_cache;
};

const NodeStorage& storage(const ExprNode& n) {
    return static_cast<const NodeStorage&>(n);
}

}  // namespace

Expression::Expression(VariableContext::Ptr ctx, std::shared_ptr<const ExprNode> node)
    : ctx_(std::move(ctx)), node_(std::move(node)) {}

void Expression::require_same_context(const Expression& o) const {
    if (ctx_ != o.ctx_) throw Error("expressions belong to different variable contexts");
}

Expression Expression::constant(VariableContext::Ptr ctx, Rational c) {
    auto n = std::make_shared<NodeStorage>();
    n->kind = ExprKind::Constant;
    n->value = std::move(c);
    return Expression(std::move(ctx), std::move(n));
}

Expression Expression::variable(VariableContext::Ptr ctx, VarId v) {
    if (v < 0 || static_cast<std::size_t>(v) >= ctx->var_count())
        throw Error("variable id out of range");
    auto n = std::make_shared<NodeStorage>();
    n->kind = ExprKind::Variable;
    n->var = v;
    return Expression(std::move(ctx), std::move(n));
}

Expression Expression::sum(VariableContext::Ptr ctx, std::vector<Expression> terms) {
    if (terms.empty()) return constant(std::move(ctx), Rational(0));
    for (const auto& t : terms)
        if (t.ctx_ != ctx) throw Error("sum over mixed contexts");
    if (terms.size() == 1) return terms.front();
    auto n = std::make_shared<NodeStorage>();
    n->kind = ExprKind::Sum;
    n->children = std::move(terms);
    return Expression(std::move(ctx), std::move(n));
}

Expression Expression::product(VariableContext::Ptr ctx, std::vector<Expression> factors) {
    if (factors.empty()) return constant(std::move(ctx), Rational(1));
    for (const auto& f : factors)
        if (f.ctx_ != ctx) throw Error("product over mixed contexts");
    if (factors.size() == 1) return factors.front();
    auto n = std::make_shared<NodeStorage>();
    n->kind = ExprKind::Product;
    n->children = std::move(factors);
    return Expression(std::move(ctx), std::move(n));
}

Expression Expression::power(Expression base, long exponent) {
    auto ctx = base.ctx_;
    auto n = std::make_shared<NodeStorage>();
    n->kind = ExprKind::Power;
    n->children.push_back(std::move(base));
    n->exponent = exponent;
    return Expression(std::move(ctx), std::move(n));
}

Expression Expression::quotient(Expression numerator, Expression denominator) {
    numerator.require_same_context(denominator);
    auto ctx = numerator.ctx_;
    auto n = std::make_shared<NodeStorage>();
    n->kind = ExprKind::Quotient;
    n->children.push_back(std::move(numerator));
    n->children.push_back(std::move(denominator));
    return Expression(std::move(ctx), std::move(n));
}

Expression Expression::from_canonical(VariableContext::Ptr ctx, RationalFunction rf) {
    if (rf.nvars() != ctx->var_count())
        throw Error("canonical form arity does not match context");
    auto n = std::make_shared<NodeStorage>();
    n->kind = ExprKind::Canonical;
    n->canon = std::move(rf);
    return Expression(std::move(ctx), std::move(n));
}

Expression Expression::operator-() const {
    return from_canonical(ctx_, -canonical());
}

Expression Expression::operator+(const Expression& o) const {
    require_same_context(o);
    return from_canonical(ctx_, canonical() + o.canonical());
}

Expression Expression::operator-(const Expression& o) const {
    require_same_context(o);
    return from_canonical(ctx_, canonical() - o.canonical());
}

Expression Expression::operator*(const Expression& o) const {
    require_same_context(o);
    return from_canonical(ctx_, canonical() * o.canonical());
}

Expression Expression::operator/(const Expression& o) const {
    require_same_context(o);
    return from_canonical(ctx_, canonical() / o.canonical());
}

Expression Expression::pow(long e) const {
    return from_canonical(ctx_, canonical().pow(e));
}

Expression operator*(const Rational& c, const Expression& e) {
    return Expression::constant(e.context(), c) * e;
}

Expression operator+(const Rational& c, const Expression& e) {
    return Expression::constant(e.context(), c) + e;
}

Expression Expression::diff(VarId v) const {
    switch (node_->kind) {
        case ExprKind::Constant:
            return constant(ctx_, Rational(0));
        case ExprKind::Variable:
            return constant(ctx_, Rational(node_->var == v ? 1 : 0));
        case ExprKind::Sum: {
            std::vector<Expression> d;
            d.reserve(node_->children.size());
            for (const auto& c : node_->children) d.push_back(c.diff(v));
            return sum(ctx_, std::move(d));
        }
        case ExprKind::Product: {
            // Leibniz rule.
            std::vector<Expression> terms;
            const auto& f = node_->children;
            for (std::size_t i = 0; i < f.size(); ++i) {
                std::vector<Expression> factors = f;
                factors[i] = f[i].diff(v);
                terms.push_back(product(ctx_, std::move(factors)));
            }
            return sum(ctx_, std::move(terms));
        }
        case ExprKind::Power: {
            const Expression& b = node_->children[0];
            long k = node_->exponent;
            if (k == 0) return constant(ctx_, Rational(0));
            std::vector<Expression> factors{constant(ctx_, Rational(k)),
                                            power(b, k - 1), b.diff(v)};
            return product(ctx_, std::move(factors));
        }
        case ExprKind::Quotient: {
            const Expression& a = node_->children[0];
            const Expression& b = node_->children[1];
            // (a/b)' = (a' b - a b') / b^2
            Expression top = sum(
                ctx_, {product(ctx_, {a.diff(v), b}),
                       product(ctx_, {constant(ctx_, Rational(-1)), a, b.diff(v)})});
            return quotient(std::move(top), power(b, 2));
        }
        case ExprKind::Canonical:
            return from_canonical(ctx_, node_->canon.derivative(v));
    }
    throw Error("unreachable");
}

Expression Expression::diff_by_name(const std::string& name) const {
    auto v = ctx_->find(name);
    if (!v) throw UnknownIdentifier(name, 0);
    return diff(*v);
}

Expression Expression::substitute(const std::map<VarId, Expression>& bindings) const {
    for (const auto& [v, e] : bindings) {
        if (v < 0 || static_cast<std::size_t>(v) >= ctx_->var_count())
            throw Error("substitution target out of range");
        e.require_same_context(*this);
    }
    switch (node_->kind) {
        case ExprKind::Constant:
            return *this;
        case ExprKind::Variable: {
            auto it = bindings.find(node_->var);
            return it == bindings.end() ? *this : it->second;
        }
        case ExprKind::Sum:
        case ExprKind::Product:
        case ExprKind::Quotient: {
            std::vector<Expression> ch;
            ch.reserve(node_->children.size());
            for (const auto& c : node_->children) ch.push_back(c.substitute(bindings));
            if (node_->kind == ExprKind::Sum) return sum(ctx_, std::move(ch));
            if (node_->kind == ExprKind::Product) return product(ctx_, std::move(ch));
            return quotient(std::move(ch[0]), std::move(ch[1]));
        }
        case ExprKind::Power:
            return power(node_->children[0].substitute(bindings), node_->exponent);
        case ExprKind::Canonical: {
            // Apply the ring homomorphism determined by the bindings.
            auto var_image = [&](int v) -> Expression {
                auto it = bindings.find(v);
                if (it != bindings.end()) return it->second;
                return variable(ctx_, v);
            };
            auto const_image = [&](const Rational& c) -> Expression {
                return constant(ctx_, c);
            };
            Expression num =
                node_->canon.num().map_terms<Expression>(var_image, const_image);
            if (node_->canon.is_polynomial()) return num;
            Expression den =
                node_->canon.den().map_terms<Expression>(var_image, const_image);
            return num / den;
        }
    }
    throw Error("unreachable");
}

const RationalFunction& Expression::canonical() const {
    const auto& st = storage(*node_);
    if (node_->kind == ExprKind::Canonical) return node_->canon;
    std::call_once(st.canon_once, [&] {
        const std::size_t nv = ctx_->var_count();
        RationalFunction rf;
        switch (node_->kind) {
            case ExprKind::Constant:
                rf = RationalFunction::constant(nv, node_->value);
                break;
            case ExprKind::Variable:
                rf = RationalFunction::variable(nv, node_->var);
                break;
            case ExprKind::Sum: {
                rf = RationalFunction(nv);
                for (const auto& c : node_->children) rf = rf + c.canonical();
                break;
            }
            case ExprKind::Product: {
                rf = RationalFunction::constant(nv, 1);
                for (const auto& c : node_->children) rf = rf * c.canonical();
                break;
            }
            case ExprKind::Power:
                rf = node_->children[0].canonical().pow(node_->exponent);
                break;
            case ExprKind::Quotient:
                rf = node_->children[0].canonical() / node_->children[1].canonical();
                break;
            case ExprKind::Canonical:
                break;
        }
        st.canon_cache = std::make_shared<const RationalFunction>(std::move(rf));
    });
    return *st.canon_cache;
}

std::optional<Rational> Expression::evaluate(std::span<const Rational> point) const {
    switch (node_->kind) {
        case ExprKind::Constant:
            return node_->value;
        case ExprKind::Variable:
            return point[static_cast<std::size_t>(node_->var)];
        case ExprKind::Sum: {
            Rational acc(0);
            for (const auto& c : node_->children) {
                auto v = c.evaluate(point);
                if (!v) return std::nullopt;
                acc += *v;
            }
            return acc;
        }
        case ExprKind::Product: {
            Rational acc(1);
            for (const auto& c : node_->children) {
                auto v = c.evaluate(point);
                if (!v) return std::nullopt;
                acc *= *v;
            }
            return acc;
        }
        case ExprKind::Power: {
            auto b = node_->children[0].evaluate(point);
            if (!b) return std::nullopt;
            if (node_->exponent < 0 && *b == 0) return std::nullopt;
            return rational_pow(*b, node_->exponent);
        }
        case ExprKind::Quotient: {
            auto a = node_->children[0].evaluate(point);
            auto b = node_->children[1].evaluate(point);
            if (!a || !b || *b == 0) return std::nullopt;
            return *a / *b;
        }
        case ExprKind::Canonical:
            return node_->canon.evaluate(point);
    }
    return std::nullopt;
}

std::string Expression::str() const {
    const auto& ctx = *ctx_;
    return canonical().str([&](int v) { return ctx.name(v); });
}

std::map<Monomial, Expression, GrlexLess> collect_jet_coefficients(
    const Expression& e, std::span<const Monomial> basis) {
    const auto& ctx = *e.context();
    if (!ctx.covering_mode())
        throw Error("jet collection requires a covering-mode context");
    const std::size_t nv = ctx.var_count();
    const RationalFunction& rf = e.canonical();

    auto jet_free = [&](const Polynomial& p) {
        for (const auto& [m, c] : p.terms())
            for (std::size_t v = 0; v < nv; ++v)
                if (m[v] > 0 && ctx.is_jet(static_cast<VarId>(v))) return false;
        return true;
    };
    if (!jet_free(rf.den()))
        throw NonPolynomialInJets("a jet variable appears in a denominator");

    std::map<Monomial, Polynomial, GrlexLess> buckets;
    for (const auto& [m, c] : rf.num().terms()) {
        Monomial jet(nv, 0u), rest(nv, 0u);
        for (std::size_t v = 0; v < nv; ++v) {
            if (ctx.is_jet(static_cast<VarId>(v)))
                jet[v] = m[v];
            else
                rest[v] = m[v];
        }
        auto [it, inserted] = buckets.emplace(std::move(jet), Polynomial(nv));
        it->second = it->second + Polynomial::from_terms(nv, {{rest, c}});
    }

    std::map<Monomial, Expression, GrlexLess> out;
    for (auto& [jet, poly] : buckets) {
        out.emplace(jet, Expression::from_canonical(
                             e.context(), RationalFunction::quotient(
                                              std::move(poly), rf.den())));
    }
    for (const auto& m : basis) {
        if (m.size() != nv) throw Error("basis monomial width mismatch");
        if (!out.count(m))
            out.emplace(m, Expression::constant(e.context(), Rational(0)));
    }
    return out;
}

Expression reconstruct_tree(const VariableContext::Ptr& ctx,
                            const RationalFunction& rf) {
    auto poly_tree = [&](const Polynomial& p) {
        std::vector<Expression> terms;
        for (const auto& [m, c] : p.terms()) {
            std::vector<Expression> factors{Expression::constant(ctx, c)};
            for (std::size_t v = 0; v < m.size(); ++v) {
                if (m[v] == 0) continue;
                Expression var = Expression::variable(ctx, static_cast<VarId>(v));
                factors.push_back(m[v] == 1
                                      ? var
                                      : Expression::power(var, static_cast<long>(m[v])));
            }
            terms.push_back(Expression::product(ctx, std::move(factors)));
        }
        return Expression::sum(ctx, std::move(terms));
    };
    if (rf.is_polynomial()) return poly_tree(rf.num());
    return Expression::quotient(poly_tree(rf.num()), poly_tree(rf.den()));
}

}  // namespace hamcheck
