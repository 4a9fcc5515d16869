#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hamcheck/operators.hpp"
#include "hamcheck/parser.hpp"
#include "test_util.hpp"

using namespace hamcheck;
using namespace hamcheck::testing;

namespace {

ExprMatrix parse_matrix(const VariableContext::Ptr& ctx,
                        const std::vector<std::vector<std::string>>& rows) {
    ExprMatrix m;
    for (const auto& row : rows) {
        ExprVector r;
        for (const auto& s : row) r.push_back(parse_expression(s, ctx));
        m.push_back(std::move(r));
    }
    return m;
}

ExprVector parse_vec(const VariableContext::Ptr& ctx,
                     const std::vector<std::string>& entries) {
    ExprVector v;
    for (const auto& s : entries) v.push_back(parse_expression(s, ctx));
    return v;
}

Metric antidiag(const VariableContext::Ptr& ctx) {
    return Metric::from_contravariant(parse_matrix(ctx, {{"0", "1"}, {"1", "0"}}));
}

Metric astig_p(const VariableContext::Ptr& ctx) {
    return Metric::from_contravariant(parse_matrix(ctx, {{"2*u", "0"}, {"0", "2/u"}}));
}

Metric chaplygin(const VariableContext::Ptr& ctx) {
    return Metric::from_contravariant(
        parse_matrix(ctx, {{"-((c1+k)+c2*u+c3*u^2)*(u-v)^2", "0"},
                           {"0", "(c1+c2*v+c3*v^2)*(u-v)^2"}}));
}

}  // namespace

TEST_CASE("dubrovin-novikov hamiltonianity") {
    auto ctx = VariableContext::base({"u", "v"}, {"k", "c1", "c2", "c3"});
    CHECK(check_dn_hamiltonian({antidiag(ctx), std::nullopt}).passed());
    CHECK(check_dn_hamiltonian({astig_p(ctx), std::nullopt}).passed());

    CheckReport curved = check_dn_hamiltonian({chaplygin(ctx), std::nullopt});
    CHECK_FALSE(curved.passed());
    CHECK(curved.failing_conditions() == std::vector<std::string>{"flatness"});
}

TEST_CASE("supplied connections are validated against Levi-Civita") {
    auto ctx = VariableContext::base({"u", "v"});
    Metric g = astig_p(ctx);
    ExprTensor3 good = g.christoffel_contra();
    CHECK(check_dn_hamiltonian({g, good}).passed());

    ExprTensor3 bad = good;
    bad[0][0][0] = bad[0][0][0] + Expression::integer(ctx, 1);
    CHECK_THROWS_AS(check_dn_hamiltonian({g, bad}), GammaMismatch);
}

TEST_CASE("ferapontov hamiltonianity") {
    auto ctx = VariableContext::base({"u", "v"});
    // f = 0 reduces to the local check, condition for condition.
    Ferapontov trivial{astig_p(ctx), std::nullopt, Expression::integer(ctx, 2),
                       parse_vec(ctx, {"0", "0"})};
    CheckReport fer = check_ferapontov_hamiltonian(trivial);
    CheckReport dn = check_dn_hamiltonian({astig_p(ctx), std::nullopt});
    REQUIRE(fer.conditions.size() == dn.conditions.size() + 2);
    for (std::size_t i = 0; i < dn.conditions.size(); ++i) {
        CHECK(fer.conditions[i].name == dn.conditions[i].name);
        CHECK(fer.conditions[i].passed() == dn.conditions[i].passed());
    }
    CHECK(fer.passed());

    // The isometry-extended operator of the astigmatism system.
    Ferapontov p{astig_p(ctx), std::nullopt, Expression::integer(ctx, 2),
                 parse_vec(ctx, {"0", "1"})};
    CHECK(check_ferapontov_hamiltonian(p).passed());

    // f = (1, 0) is not Killing for this metric.
    Ferapontov wrong{astig_p(ctx), std::nullopt, Expression::integer(ctx, 2),
                     parse_vec(ctx, {"1", "0"})};
    CheckReport bad = check_ferapontov_hamiltonian(wrong);
    CHECK_FALSE(bad.passed());
    CHECK_FALSE(bad.find("killing-symmetric")->passed());
}

TEST_CASE("the 3-component example operator is hamiltonian") {
    auto ctx = VariableContext::base({"u", "v", "w"});
    Ferapontov b{Metric::from_contravariant(parse_matrix(
                     ctx, {{"v^3/w^2", "-3*v^2/(2*w)", "-v+1"},
                           {"-3*v^2/(2*w)", "2*v+1", "w"},
                           {"-v+1", "w", "0"}})),
                 std::nullopt, Expression::integer(ctx, 1),
                 parse_vec(ctx, {"1", "0", "0"})};
    CHECK(check_ferapontov_hamiltonian(b).passed());
}

TEST_CASE("ferapontov-mokhov hamiltonianity") {
    auto ctx = VariableContext::base({"u", "v"}, {"k", "c1", "c2", "c3"});

    FerapontovMokhov flat{antidiag(ctx), std::nullopt, Expression::integer(ctx, 0)};
    CHECK(check_fm_hamiltonian(flat).passed());

    FerapontovMokhov chap{chaplygin(ctx), std::nullopt,
                          Expression::variable(ctx, *ctx->find("k"))};
    CHECK(check_fm_hamiltonian(chap).passed());

    FerapontovMokhov off{chaplygin(ctx), std::nullopt,
                         Expression::variable(ctx, *ctx->find("k")) +
                             Expression::integer(ctx, 1)};
    CheckReport bad = check_fm_hamiltonian(off);
    CHECK_FALSE(bad.passed());
    CHECK_FALSE(bad.find("constant-curvature")->passed());

    // c = 0 passes exactly when the local part is flat.
    FerapontovMokhov curved0{chaplygin(ctx), std::nullopt, Expression::integer(ctx, 0)};
    CHECK(check_fm_hamiltonian(curved0).passed() ==
          check_dn_hamiltonian({chaplygin(ctx), std::nullopt}).passed());
    FerapontovMokhov flat0{astig_p(ctx), std::nullopt, Expression::integer(ctx, 0)};
    CHECK(check_fm_hamiltonian(flat0).passed());
}

TEST_CASE("operator input validation") {
    auto ctx = VariableContext::base({"u", "v"});
    // alpha and c must be constants.
    Ferapontov bad_alpha{astig_p(ctx), std::nullopt,
                         Expression::variable(ctx, *ctx->find("u")),
                         parse_vec(ctx, {"0", "1"})};
    CHECK_THROWS_AS(check_ferapontov_hamiltonian(bad_alpha), InputError);

    FerapontovMokhov bad_c{antidiag(ctx), std::nullopt,
                           Expression::variable(ctx, *ctx->find("x"))};
    CHECK_THROWS_AS(check_fm_hamiltonian(bad_c), InputError);

    // f may not depend on x.
    Ferapontov bad_f{astig_p(ctx), std::nullopt, Expression::integer(ctx, 1),
                     parse_vec(ctx, {"x", "0"})};
    CHECK_THROWS_AS(check_ferapontov_hamiltonian(bad_f), InputError);

    // Asymmetric metrics are rejected at construction.
    CHECK_THROWS_AS(
        Metric::from_contravariant(parse_matrix(ctx, {{"1", "u"}, {"0", "1"}})),
        AsymmetricMetric);

    // Degenerate metrics surface when geometry is needed.
    Metric deg = Metric::from_contravariant(parse_matrix(ctx, {{"u", "0"}, {"0", "0"}}));
    CHECK_THROWS_AS(check_dn_hamiltonian({deg, std::nullopt}), DegenerateMetric);
}

TEST_CASE("metric-compatibility row passes automatically for derived connections") {
    std::mt19937 rng(53);
    auto ctx = VariableContext::base({"u", "v"});
    std::vector<VarId> uv{*ctx->find("u"), *ctx->find("v")};
    int built = 0;
    for (int trial = 0; trial < 30 && built < 6; ++trial) {
        ExprMatrix m = make_matrix(ctx, 2, 2);
        m[0][0] = random_poly_tree(rng, ctx, uv, 2) +
                  Expression::constant(ctx, rand_nonzero_rational(rng));
        m[1][1] = random_poly_tree(rng, ctx, uv, 2) +
                  Expression::constant(ctx, rand_nonzero_rational(rng));
        m[0][1] = m[1][0] = random_poly_tree(rng, ctx, uv, 1);
        if (determinant(m).is_identically_zero()) continue;
        CheckReport rep = check_dn_hamiltonian({Metric::from_contravariant(m), std::nullopt});
        CHECK(rep.find("metric-compatibility")->passed());
        CHECK(rep.find("metric-symmetry")->passed());
        ++built;
    }
    CHECK(built == 6);
}
