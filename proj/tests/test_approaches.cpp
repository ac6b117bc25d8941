#include "jetkit/approaches.hpp"
#include "jetkit/errors.hpp"
#include "jetkit/maps.hpp"
#include "jetkit/random.hpp"

#include "oracles.hpp"
#include "support.hpp"

using namespace jetkit;
using testing::element;
using testing::q;

namespace {

// (0, 0, a, b): p = q = 1, order 2, u_1 = a, u_11 = b.
JetCoord line_jet(const Rational& a, const Rational& b)
{
    JetCoord j(1, 1, 2);
    j.derivative({1})[0] = a;
    j.derivative({2})[0] = b;
    return j;
}

TaylorElement input_at(Rng& rng, const SmallObject& obj, const JetCoord& j)
{
    return random_element(rng, obj, j.p(), j.x());
}

}  // namespace

TEST_SUITE("approaches") {

TEST_CASE("first-order lift of a tangent")
{
    JetCoord j(1, 1, 1);
    j.x()[0] = q("1/2");
    j.u()[0] = 3;
    j.derivative({1})[0] = q("-2");
    const TaylorElement t = element(SmallObject::d(), 1, {{{0}, {q("1/2")}}, {{1}, {q("5")}}});
    CHECK(apply_first(j, t) == element(SmallObject::d(), 2, {{{0}, {q("1/2"), 3}}, {{1}, {5, -10}}}));
    const TaylorElement rest = TaylorElement::constant(SmallObject::d(), j.x());
    CHECK(apply_first(j, rest) == TaylorElement::constant(SmallObject::d(), project(j).tuple()));
}

TEST_CASE("second-order cube prolongation")
{
    Rng rng(41);
    for (int t = 0; t < 10; ++t) {
        const Rational a = rng.rational();
        const Rational b = rng.rational();
        const Rational y1 = rng.rational();
        const Rational y2 = rng.rational();
        const Rational y12 = rng.rational();
        const TaylorElement g = element(SmallObject::dpow(2), 1, {{{1, 0}, {y1}}, {{0, 1}, {y2}}, {{1, 1}, {y12}}});
        const TaylorElement out = apply_dpow(line_jet(a, b), g);
        CHECK(out.coeff_of({1, 0})[1] == a * y1);
        CHECK(out.coeff_of({0, 1})[1] == a * y2);
        CHECK(out.coeff_of({1, 1})[1] == a * y12 + b * y1 * y2);
    }
}

TEST_CASE("second-order curve prolongation")
{
    const Rational a = q("2/3");
    const Rational b = q("-5");
    const Rational y1 = q("3/2");
    const Rational y2 = q("4");
    const TaylorElement curve = element(SmallObject::dn(2), 1, {{{1}, {y1}}, {{2}, {y2 / 2}}});
    const TaylorElement out = apply_dn(line_jet(a, b), curve);
    CHECK(out.coeff_of({1})[1] == a * y1);
    CHECK(out.coeff_of({2})[1] == (b * y1 * y1 + a * y2) / 2);

    // The same curve on the cube has cross coefficient y2.
    const TaylorElement cube = reparam(curve, maps::sum(2));
    CHECK(cube.coeff_of({1, 1})[0] == y2);
    CHECK(reparam(out, maps::sum(2)) == apply_dpow(line_jet(a, b), cube));
}

TEST_CASE("constant inputs give constant outputs")
{
    Rng rng(42);
    for (Rep rep : {Rep::dpow, Rep::dn}) {
        const JetCoord j = random_jet(rng, 2, 2, 3);
        const Operator op = theta(rep, j);
        const TaylorElement rest = TaylorElement::constant(op.input_object(), j.x());
        const Vector coords = j.tuple();
        CHECK(op(rest) == TaylorElement::constant(op.input_object(), std::span<const Rational>(coords).first(4)));
    }
}

TEST_CASE("order one: line and cube agree")
{
    Rng rng(43);
    const JetCoord j = random_jet(rng, 2, 1, 1);
    const TaylorElement curve = input_at(rng, SmallObject::dn(1), j);
    CHECK(reparam(psi(j, curve), maps::same_variables(SmallObject::dpow(1), SmallObject::dn(1))) ==
          apply_dpow(j, reparam(curve, maps::same_variables(SmallObject::dpow(1), SmallObject::dn(1)))));
}

TEST_CASE("curve prolongation composes truncated series")
{
    Rng rng(44);
    for (int n = 1; n <= 4; ++n)
        for (int t = 0; t < 10; ++t) {
            const JetCoord j = random_jet(rng, rng.uniform(1, 2), rng.uniform(1, 2), n);
            const TaylorElement curve = input_at(rng, SmallObject::dn(n), j);
            CHECK(apply_dn(j, curve) == oracle::compose_series(j, curve));
        }
}

TEST_CASE("cube prolongation matches the peeling recursion")
{
    Rng rng(45);
    for (int n = 1; n <= 3; ++n)
        for (int t = 0; t < 10; ++t) {
            const JetCoord j = random_jet(rng, rng.uniform(1, 2), rng.uniform(1, 2), n);
            const TaylorElement g = input_at(rng, SmallObject::dpow(n), j);
            CHECK(apply_dpow(j, g) == oracle::cube_by_peeling(j, g));
            CHECK(apply_first_iterated(j, g) == oracle::cube_by_peeling(j, g));
        }
}

TEST_CASE("the base of the output is the input")
{
    Rng rng(46);
    for (Rep rep : {Rep::dpow, Rep::dn}) {
        const JetCoord j = random_jet(rng, 2, 1, 2);
        const Operator op = theta(rep, j);
        const TaylorElement g = input_at(rng, op.input_object(), j);
        CHECK(pushforward(PolyMap::projection(3, 2), op(g)) == g);
    }
}

TEST_CASE("operators check their inputs")
{
    Rng rng(47);
    const JetCoord j = random_jet(rng, 1, 1, 2);
    const Operator op = theta(Rep::dpow, j);
    CHECK_THROWS_AS((void)op(random_element(rng, SmallObject::dn(2), 1, j.x())), PreconditionError);
    TaylorElement away = input_at(rng, SmallObject::dpow(2), j);
    away.coeff(0)[0] += 1;
    CHECK_THROWS_AS((void)op(away), PreconditionError);
    CHECK_THROWS_AS((void)parse_rep("second"), SchemaError);
}

TEST_CASE("form evaluation")
{
    SymFormCoord s(1, 1, 2);
    s.entry(0)[0] = 7;
    const Rational y1 = q("2");
    const Rational y2 = q("-3/2");
    const TaylorElement g = element(SmallObject::dpow(2), 1, {{{1, 0}, {y1}}, {{0, 1}, {y2}}, {{1, 1}, {5}}});
    const TaylorElement out = apply_form(Rep::dpow, s, g);
    CHECK(out.object() == SmallObject::d());
    CHECK(out.coeff_of({1})[0] == 0);
    CHECK(out.coeff_of({1})[1] == 7 * y1 * y2);

    SymFormCoord zero(1, 1, 2);
    CHECK(is_zero(apply_form(Rep::dpow, zero, g).coeff_of({1})));
}

TEST_CASE("differences of prolongations are forms of the coordinate difference")
{
    Rng rng(48);
    for (Rep rep : {Rep::dpow, Rep::dn})
        for (int t = 0; t < 10; ++t) {
            const JetCoord minus = random_jet(rng, rng.uniform(1, 2), rng.uniform(1, 2), rng.uniform(1, 3));
            const JetCoord plus = random_jet_over(rng, project(minus));
            const TaylorElement g = input_at(rng, theta(rep, plus).input_object(), plus);
            const AffineFamily fam = output_family(rep, plus.order());
            CHECK(strong_minus(fam, theta(rep, plus)(g), theta(rep, minus)(g)) == apply_form(rep, jet_minus(plus, minus), g));
        }
}

TEST_CASE("reconstruction and tables")
{
    Rng rng(49);
    for (Rep rep : {Rep::first, Rep::dpow, Rep::dn}) {
        const JetCoord j = random_jet(rng, 2, 2, 2);
        const Operator op = theta(rep, j);
        CHECK(reconstruct(op) == j);
        const OperatorTable table = tabulate(op);
        CHECK(reconstruct(from_table(table)) == j);
        CHECK(table_from_json(Json::parse(to_json(table).dump())).entries == table.entries);
        const TaylorElement dense = random_element(rng, op.input_object(), 2, j.x());
        const bool probed = std::ranges::any_of(table.entries, [&](const auto& e) { return e.first == dense; });
        if (!probed) CHECK_THROWS_AS((void)from_table(table)(dense), PreconditionError);
    }
}

TEST_CASE("conversions between representations")
{
    Rng rng(50);
    for (int n = 1; n <= 3; ++n) {
        const JetCoord j = random_jet(rng, 2, 1, n);
        const Operator cube = phi_operator(theta(Rep::first, j));
        const Operator line = psi_operator(theta(Rep::dpow, j));
        const TaylorElement g = input_at(rng, SmallObject::dpow(n), j);
        const TaylorElement c = input_at(rng, SmallObject::dn(n), j);
        CHECK(cube(g) == apply_dpow(j, g));
        CHECK(line(c) == apply_dn(j, c));
        if (n >= 2) {
            CHECK(reconstruct(project(theta(Rep::dpow, j))) == project(j));
            CHECK(reconstruct(project(theta(Rep::dn, j))) == project(j));
            CHECK(reconstruct(project(theta(Rep::first, j))) == project(j));
        }
    }
}

TEST_CASE("restricting cube forms to the line")
{
    Rng rng(51);
    for (int n = 1; n <= 3; ++n) {
        const SymFormCoord s = random_symform(rng, 2, 1, n);
        const FormOperator restricted = restrict_to_line(theta_form(Rep::dpow, s));
        const TaylorElement c = random_element(rng, SmallObject::dn(n), 2, s.x());
        CHECK(restricted(c) == fiber_scale(factorial(n), apply_form(Rep::dn, s, c)));
        CHECK(reconstruct(theta_form(Rep::dn, s)) == s);
    }
}

}
