#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hamcheck/compat.hpp"
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

QuasilinearSystem astigmatism(const VariableContext::Ptr& ctx,
                              const std::string& w2 = "-2*x") {
    return QuasilinearSystem::make(ctx,
                                   parse_matrix(ctx, {{"0", "1"}, {"1/u^2", "0"}}),
                                   parse_vec(ctx, {"0", w2}));
}

DubrovinNovikov op_Q(const VariableContext::Ptr& ctx) {
    return {Metric::from_contravariant(parse_matrix(ctx, {{"0", "1"}, {"1", "0"}})),
            std::nullopt};
}

Ferapontov op_P(const VariableContext::Ptr& ctx) {
    return {Metric::from_contravariant(parse_matrix(ctx, {{"2*u", "0"}, {"0", "2/u"}})),
            std::nullopt, Expression::integer(ctx, 2), parse_vec(ctx, {"0", "1"})};
}

QuasilinearSystem exam1(const VariableContext::Ptr& ctx) {
    return QuasilinearSystem::make(
        ctx,
        parse_matrix(ctx, {{"0", "-3*v^2/(2*w^2)", "v^3/w^3"},
                           {"1", "3*v/w", "-3*v^2/(2*w^2)"},
                           {"0", "1", "0"}}),
        parse_vec(ctx, {"-x", "0", "0"}));
}

}  // namespace

TEST_CASE("local compatibility: astigmatism with Q passes all five conditions") {
    auto ctx = VariableContext::covering({"u", "v"});
    CheckReport rep = check_local_compatibility(astigmatism(ctx), op_Q(ctx));
    REQUIRE(rep.conditions.size() == 5);
    CHECK(rep.passed());
    for (const auto& c : rep.conditions) CHECK(c.residuals.empty());
}

TEST_CASE("local compatibility: the 3-component example with the constant operator") {
    auto ctx = VariableContext::covering({"u", "v", "w"});
    DubrovinNovikov a{Metric::from_contravariant(parse_matrix(
                          ctx, {{"0", "0", "1"}, {"0", "1", "0"}, {"1", "0", "0"}})),
                      std::nullopt};
    CHECK(check_local_compatibility(exam1(ctx), a).passed());
}

TEST_CASE("local compatibility: perturbed tail fails the x-derivative condition") {
    auto ctx = VariableContext::covering({"u", "v"});
    CheckReport rep = check_local_compatibility(astigmatism(ctx, "-2*x*u"), op_Q(ctx));
    CHECK_FALSE(rep.passed());
    CHECK_FALSE(rep.find("w-x-derivative")->passed());
    // eta^{il) W^j_{,xl} picks up the constant -2.
    bool found = false;
    for (const auto& r : rep.find("w-x-derivative")->residuals)
        if (r.value == "-2") found = true;
    CHECK(found);
    // The broken Killing condition shows as well.
    CHECK_FALSE(rep.find("w-killing")->passed());
    // Conditions on V stay intact.
    CHECK(rep.find("tsarev-nabla-symmetry")->passed());
    CHECK(rep.find("tsarev-metric-symmetry")->passed());
    CHECK(rep.find("w-second-covariant")->passed());
}

TEST_CASE("non-hamiltonian operators are rejected up front") {
    auto ctx = VariableContext::covering({"u", "v"}, {"k", "c1", "c2", "c3"});
    DubrovinNovikov curved{
        Metric::from_contravariant(parse_matrix(
            ctx, {{"-((c1+k)+c2*u+c3*u^2)*(u-v)^2", "0"},
                  {"0", "(c1+c2*v+c3*v^2)*(u-v)^2"}})),
        std::nullopt};
    QuasilinearSystem sys = astigmatism(ctx);
    CHECK_THROWS_AS(check_local_compatibility(sys, curved), OperatorNotHamiltonian);
    try {
        check_local_compatibility(sys, curved);
    } catch (const OperatorNotHamiltonian& e) {
        CHECK_FALSE(e.precondition_report().passed());
        CHECK_FALSE(e.precondition_report().find("flatness")->passed());
    }
    // With enforcement off, conditions are evaluated and a warning attached.
    CheckReport rep = check_local_compatibility(sys, curved, {false});
    CHECK_FALSE(rep.warnings.empty());
    REQUIRE(rep.conditions.size() == 5);
}

TEST_CASE("ferapontov compatibility: astigmatism with P (alpha = 2)") {
    auto ctx = VariableContext::covering({"u", "v"});
    CheckReport rep = check_ferapontov_compatibility(astigmatism(ctx), op_P(ctx));
    REQUIRE(rep.conditions.size() == 6);
    CHECK(rep.passed());
}

TEST_CASE("ferapontov compatibility: the 3-component example with its nonlocal operator") {
    auto ctx = VariableContext::covering({"u", "v", "w"});
    Ferapontov b{Metric::from_contravariant(parse_matrix(
                     ctx, {{"v^3/w^2", "-3*v^2/(2*w)", "-v+1"},
                           {"-3*v^2/(2*w)", "2*v+1", "w"},
                           {"-v+1", "w", "0"}})),
                 std::nullopt, Expression::integer(ctx, 1),
                 parse_vec(ctx, {"1", "0", "0"})};
    CheckReport rep = check_ferapontov_compatibility(exam1(ctx), b);
    CHECK(rep.passed());
    CHECK(rep.find("f-symmetry")->passed());
}

TEST_CASE("ferapontov compatibility: broken isometry fails the symmetry condition") {
    auto ctx = VariableContext::covering({"u", "v"});
    Ferapontov wrong = op_P(ctx);
    wrong.f = parse_vec(ctx, {"1", "0"});
    QuasilinearSystem sys = astigmatism(ctx);
    // The default contract: the operator precondition fires first.
    CHECK_THROWS_AS(check_ferapontov_compatibility(sys, wrong), OperatorNotHamiltonian);
    // Evaluating anyway shows condition (1) broken.
    CheckReport rep = check_ferapontov_compatibility(sys, wrong, {false});
    CHECK_FALSE(rep.find("f-symmetry")->passed());
}

TEST_CASE("ferapontov compatibility is invariant under f -> l f, alpha -> alpha/l^2") {
    auto ctx = VariableContext::covering({"u", "v"});
    QuasilinearSystem sys = astigmatism(ctx);
    Ferapontov scaled = op_P(ctx);
    scaled.f = parse_vec(ctx, {"0", "3/2"});
    scaled.alpha = Expression::constant(ctx, Rational(8, 9));  // 2 / (3/2)^2
    CheckReport rep = check_ferapontov_compatibility(sys, scaled);
    CHECK(rep.passed());
}

TEST_CASE("the two printed arrangements of the homogeneous tail condition agree") {
    auto ctx = VariableContext::covering({"u", "v"});
    QuasilinearSystem sys = astigmatism(ctx);
    ExprVector f = parse_vec(ctx, {"u+v", "u*v"});
    ExprVector fv;
    for (int j = 0; j < 2; ++j) {
        Expression acc = Expression::integer(ctx, 0);
        for (int k = 0; k < 2; ++k)
            acc = acc + sys.V[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] *
                            f[static_cast<std::size_t>(k)];
        fv.push_back(std::move(acc));
    }
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            // statement form: f^k V^j_k f^i - f^j V^i_k f^k
            Expression lhs = fv[static_cast<std::size_t>(j)] * f[static_cast<std::size_t>(i)] -
                             f[static_cast<std::size_t>(j)] * fv[static_cast<std::size_t>(i)];
            // proof form with free indices (i, k) relabelled to (i, j)
            Expression rhs = fv[static_cast<std::size_t>(j)] * f[static_cast<std::size_t>(i)] -
                             fv[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(j)];
            CHECK((lhs - rhs).is_identically_zero());
        }
}

TEST_CASE("fm compatibility: the diagonal gas system with the family operator") {
    auto ctx = VariableContext::covering({"u", "v"}, {"k", "c1", "c2", "c3"});
    QuasilinearSystem sys = QuasilinearSystem::make(
        ctx, parse_matrix(ctx, {{"v", "0"}, {"0", "u"}}), parse_vec(ctx, {"0", "0"}));
    FerapontovMokhov fm{
        Metric::from_contravariant(parse_matrix(
            ctx, {{"-((c1+k)+c2*u+c3*u^2)*(u-v)^2", "0"},
                  {"0", "(c1+c2*v+c3*v^2)*(u-v)^2"}})),
        std::nullopt, Expression::variable(ctx, *ctx->find("k"))};
    CheckReport rep = check_fm_compatibility(sys, fm);
    REQUIRE(rep.conditions.size() == 3);  // homogeneous: Tsarev pair + symmetry
    CHECK(rep.passed());
    CHECK(rep.warnings.empty());
}

TEST_CASE("fm compatibility: x-dependence in V breaks the u_x symmetry") {
    auto ctx = VariableContext::covering({"u", "v"}, {"k", "c1", "c2", "c3"});
    QuasilinearSystem sys = QuasilinearSystem::make(
        ctx, parse_matrix(ctx, {{"v+x", "0"}, {"0", "u"}}), parse_vec(ctx, {"0", "0"}));
    FerapontovMokhov fm{
        Metric::from_contravariant(parse_matrix(
            ctx, {{"-((c1+k)+c2*u+c3*u^2)*(u-v)^2", "0"},
                  {"0", "(c1+c2*v+c3*v^2)*(u-v)^2"}})),
        std::nullopt, Expression::variable(ctx, *ctx->find("k"))};
    CheckReport rep = check_fm_compatibility(sys, fm);
    CHECK_FALSE(rep.passed());
    CHECK_FALSE(rep.find("phi-symmetry")->passed());
    bool warned = false;
    for (const auto& w : rep.warnings)
        if (w.find("V depends on x") != std::string::npos) warned = true;
    CHECK(warned);
}

TEST_CASE("fm compatibility: trivial constant pair and an x-dependent tail warning") {
    auto ctx = VariableContext::covering({"u", "v"});
    QuasilinearSystem trivial = QuasilinearSystem::make(
        ctx, parse_matrix(ctx, {{"1", "2"}, {"2", "1"}}), parse_vec(ctx, {"0", "0"}));
    FerapontovMokhov fm{Metric::from_contravariant(parse_matrix(ctx, {{"1", "0"}, {"0", "1"}})),
                        std::nullopt, Expression::integer(ctx, 0)};
    CHECK(check_fm_compatibility(trivial, fm).passed());

    QuasilinearSystem withw = QuasilinearSystem::make(
        ctx, parse_matrix(ctx, {{"1", "2"}, {"2", "1"}}), parse_vec(ctx, {"0", "-2*x"}));
    CheckReport rep = check_fm_compatibility(withw, fm);
    REQUIRE(rep.conditions.size() == 6);  // W-rows appear
    bool warned = false;
    for (const auto& w : rep.warnings)
        if (w.find("W depends on x") != std::string::npos) warned = true;
    CHECK(warned);
}

TEST_CASE("fm compatibility: non-identity tail matrices are flagged") {
    auto ctx = VariableContext::covering({"u", "v"});
    // Constant eta-compatible flow; with c = 0 the tail drops out of the lift
    // and the oracle reduces to the local one, so verdicts must still agree.
    QuasilinearSystem sys = QuasilinearSystem::make(
        ctx, parse_matrix(ctx, {{"1", "2"}, {"2", "1"}}), parse_vec(ctx, {"0", "0"}));
    FerapontovMokhov fm{Metric::from_contravariant(parse_matrix(ctx, {{"1", "0"}, {"0", "1"}})),
                        std::nullopt, Expression::integer(ctx, 0)};
    ExprMatrix w = sys.V;  // the system's own flow is a hydrodynamic symmetry
    CheckReport rep = check_fm_compatibility(sys, fm, w);
    CHECK(rep.passed());
    bool warned = false;
    for (const auto& s : rep.warnings)
        if (s.find("differs from the identity") != std::string::npos) warned = true;
    CHECK(warned);
    CHECK(rep.passed() == oracle_check(sys, HydroOperator(fm), w).first);
}

TEST_CASE("one-component systems") {
    auto ctx = VariableContext::covering({"u"});
    // Hopf flow with a pure x-forcing: compatible with d_x.
    QuasilinearSystem sys = QuasilinearSystem::make(ctx, parse_matrix(ctx, {{"u"}}),
                                                    parse_vec(ctx, {"3*x^2"}));
    DubrovinNovikov op{Metric::from_contravariant(parse_matrix(ctx, {{"1"}})),
                       std::nullopt};
    CheckReport rep = check_local_compatibility(sys, op);
    CHECK(rep.passed());
    CHECK(oracle_check(sys, HydroOperator(op)).first);

    // A linear-in-u tail breaks it: n = 1 admits no nonzero tail matrix.
    QuasilinearSystem bad = QuasilinearSystem::make(ctx, parse_matrix(ctx, {{"u"}}),
                                                    parse_vec(ctx, {"u"}));
    CheckReport brep = check_local_compatibility(bad, op);
    CHECK_FALSE(brep.passed());
    CHECK_FALSE(brep.find("w-killing")->passed());
    CHECK(brep.passed() == oracle_check(bad, HydroOperator(op)).first);

    // Every 1x1 metric is flat with constant curvature zero.
    Metric g1 = Metric::from_contravariant(parse_matrix(ctx, {{"2*u"}}));
    CHECK(g1.is_flat());
    auto c = g1.constant_curvature();
    REQUIRE(c.has_value());
    CHECK(c->is_identically_zero());
}

TEST_CASE("reduction consistency: W = 0 and f = 0") {
    std::mt19937 rng(59);
    auto ctx = VariableContext::covering({"u", "v"});
    std::vector<VarId> uv{*ctx->find("u"), *ctx->find("v")};
    DubrovinNovikov q = op_Q(ctx);
    for (int trial = 0; trial < 6; ++trial) {
        ExprMatrix V = make_matrix(ctx, 2, 2);
        for (auto& row : V)
            for (auto& e : row) e = random_poly_tree(rng, ctx, uv, 1);
        QuasilinearSystem hom =
            QuasilinearSystem::make(ctx, V, parse_vec(ctx, {"0", "0"}));
        CheckReport full = check_local_compatibility(hom, q);
        bool tsarev = full.find("tsarev-nabla-symmetry")->passed() &&
                      full.find("tsarev-metric-symmetry")->passed();
        CHECK(full.passed() == tsarev);
        CHECK(full.find("w-killing")->passed());
        CHECK(full.find("w-x-derivative")->passed());
        CHECK(full.find("w-second-covariant")->passed());

        // f = 0 (any alpha): same verdict as the local theorem.
        std::vector<VarId> xuv{*ctx->find("x"), *ctx->find("u"), *ctx->find("v")};
        ExprVector W{random_poly_tree(rng, ctx, xuv, 1),
                     random_poly_tree(rng, ctx, xuv, 1)};
        QuasilinearSystem sys = QuasilinearSystem::make(ctx, V, W);
        Ferapontov zerof{q.g, std::nullopt, Expression::integer(ctx, 7),
                         parse_vec(ctx, {"0", "0"})};
        CheckReport fer = check_ferapontov_compatibility(sys, zerof);
        CheckReport loc = check_local_compatibility(sys, q);
        CHECK(fer.passed() == loc.passed());
    }
}

TEST_CASE("flat-coordinate form: admissible and broken tails") {
    auto ctx = VariableContext::covering({"u", "v"}, {"a"});
    Metric eta = Metric::from_contravariant(parse_matrix(ctx, {{"0", "1"}, {"1", "0"}}));

    // The astigmatism tail: a = 0.
    CheckReport r1 = check_flat_coordinate_form(eta, parse_vec(ctx, {"0", "-2*x"}));
    CHECK(r1.passed());
    REQUIRE(r1.find("tail-matrix-antisymmetry") != nullptr);

    // Admissible linear tail for antidiagonal eta: W = (a u + x^2, -a v + 1 - x).
    CheckReport r2 = check_flat_coordinate_form(
        eta, parse_vec(ctx, {"a*u+x^2", "-a*v+1-x"}));
    CHECK(r2.passed());
    const auto* tail = r2.find("tail-matrix-antisymmetry");
    REQUIRE(tail != nullptr);
    CHECK(tail->passed());
    bool saw_a = false;
    for (const auto& n : tail->notes)
        if (n == "a[1][1] = a") saw_a = true;
    CHECK(saw_a);

    // The raised-symmetric arrangement violates the Killing condition.
    CheckReport r3 = check_flat_coordinate_form(eta, parse_vec(ctx, {"a*v+x^2", "a*u"}));
    CHECK_FALSE(r3.passed());
    CHECK_FALSE(r3.find("flat-w-killing")->passed());

    // Identity eta, W = (v, 0): residual of condition (3) at (1,2) is exactly 1.
    Metric id2 = Metric::from_contravariant(parse_matrix(ctx, {{"1", "0"}, {"0", "1"}}));
    CheckReport r4 = check_flat_coordinate_form(id2, parse_vec(ctx, {"v", "0"}));
    CHECK_FALSE(r4.passed());
    REQUIRE(r4.find("flat-w-killing")->residuals.size() == 1);
    CHECK(r4.find("flat-w-killing")->residuals[0].index == "[1][2]");
    CHECK(r4.find("flat-w-killing")->residuals[0].value == "1");

    // Nonlinear-in-u tails break condition (5).
    CheckReport r5 = check_flat_coordinate_form(eta, parse_vec(ctx, {"0", "u^2"}));
    CHECK_FALSE(r5.find("flat-w-linearity")->passed());

    // Non-constant eta is rejected.
    Metric var = Metric::from_contravariant(parse_matrix(ctx, {{"2*u", "0"}, {"0", "2/u"}}));
    CHECK_THROWS_AS(check_flat_coordinate_form(var, parse_vec(ctx, {"0", "0"})),
                    NonConstantMetric);
}

TEST_CASE("oracle and conditions agree on corpus and perturbations") {
    auto ctx = VariableContext::covering({"u", "v"});
    QuasilinearSystem sys = astigmatism(ctx);
    // Positive pairs.
    CHECK(check_local_compatibility(sys, op_Q(ctx)).passed() ==
          oracle_check(sys, HydroOperator(op_Q(ctx))).first);
    CHECK(check_ferapontov_compatibility(sys, op_P(ctx)).passed() ==
          oracle_check(sys, HydroOperator(op_P(ctx))).first);
    // Negative pair.
    QuasilinearSystem pert = astigmatism(ctx, "-2*x*u");
    CHECK(check_local_compatibility(pert, op_Q(ctx)).passed() ==
          oracle_check(pert, HydroOperator(op_Q(ctx))).first);
}
