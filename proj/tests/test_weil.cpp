#include "jetkit/errors.hpp"
#include "jetkit/maps.hpp"
#include "jetkit/random.hpp"
#include "jetkit/weil.hpp"

#include "oracles.hpp"
#include "support.hpp"

using namespace jetkit;

namespace {

std::vector<SmallObject> sample_objects()
{
    return {SmallObject::d(),          SmallObject::dn(3),          SmallObject::dpow(3),
            SmallObject::dsym(2, 2),   SmallObject::dhole(3),       SmallObject::dmany(3),
            SmallObject::product(SmallObject::dpow(2), SmallObject::dn(2)),
            SmallObject::wedge(SmallObject::dpow(2), SmallObject::d()),
            SmallObject::wedge(SmallObject::dsym(2, 2), SmallObject::dmany(3))};
}

}  // namespace

TEST_SUITE("weil") {

TEST_CASE("bases of the basic objects")
{
    CHECK(SmallObject::dpow(2).basis() == std::vector<MultiIndex>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(SmallObject::dn(2).basis() == std::vector<MultiIndex>{{0}, {1}, {2}});
    CHECK(SmallObject::wedge(SmallObject::dpow(2), SmallObject::d()).basis() ==
          std::vector<MultiIndex>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
    CHECK(SmallObject::wedge(SmallObject::d(), SmallObject::d()).basis() == std::vector<MultiIndex>{{0, 0}, {1, 0}, {0, 1}});
    CHECK(SmallObject::dsym(2, 2).dim() == 6);
    CHECK(SmallObject::dmany(4).dim() == 5);
    CHECK(SmallObject::dhole(3).dim() == 7);
    CHECK(SmallObject::point().dim() == 1);
}

TEST_CASE("zero reduction")
{
    CHECK_FALSE(SmallObject::dn(2).reduce({3}).has_value());
    CHECK_FALSE(SmallObject::dpow(3).reduce({2, 1, 0}).has_value());
    CHECK_FALSE(SmallObject::dhole(3).survives({1, 1, 1}));
    CHECK(SmallObject::dhole(3).reduce({1, 1, 0}) == MultiIndex{1, 1, 0});
    CHECK_FALSE(SmallObject::wedge(SmallObject::dpow(2), SmallObject::d()).survives({1, 0, 1}));
    CHECK_FALSE(SmallObject::dmany(3).survives({1, 1, 0}));
}

TEST_CASE("vanishing monomials form an ideal")
{
    for (const SmallObject& obj : sample_objects()) {
        const auto all = oracle::exponents_up_to(obj.num_vars(), 4);
        for (const MultiIndex& m : all) {
            if (obj.survives(m)) continue;
            for (int v = 0; v < obj.num_vars(); ++v) {
                MultiIndex bigger = m;
                ++bigger[static_cast<std::size_t>(v)];
                CHECK_FALSE(obj.survives(bigger));
            }
        }
    }
}

TEST_CASE("names parse back")
{
    for (const SmallObject& obj : sample_objects()) CHECK(SmallObject::parse(obj.name()) == obj);
    CHECK(SmallObject::parse("Wedge(Dsym(2,2),Dmany(4))").name() == "Wedge(Dsym(2,2),Dmany(4))");
    CHECK_THROWS_AS((void)SmallObject::parse("Dfoo(2)"), SchemaError);
    CHECK_THROWS_AS((void)SmallObject::parse("Dpow(2"), SchemaError);
    CHECK_THROWS_AS((void)SmallObject::parse("Dn(-1)"), SchemaError);
}

TEST_CASE("algebra of Dpow(2)")
{
    const SmallObject obj = SmallObject::dpow(2);
    const WeilElement d1 = WeilElement::variable(obj, 0);
    const WeilElement d2 = WeilElement::variable(obj, 1);
    CHECK((d1 + d2).pow(2) == WeilElement::monomial(obj, {1, 1}, 2));
    CHECK((d1 * d1).is_zero());
    CHECK((WeilElement(obj, 3) * (d1 + d2)).constant() == 0);
}

TEST_CASE("sum map coefficients")
{
    const ObjectMap sum = maps::sum(2);
    const Matrix& m = sum.induced_coeff_map();
    REQUIRE(m.rows() == 4);
    REQUIRE(m.cols() == 3);
    // Columns: 1, d, d^2 of Dn(2). Rows: 1, d1, d2, d1 d2 of Dpow(2).
    CHECK(m(0, 0) == 1);
    CHECK(m(1, 1) == 1);
    CHECK(m(2, 1) == 1);
    CHECK(m(3, 1) == 0);
    CHECK(m(3, 2) == 2);
    CHECK(m(1, 2) == 0);
}

TEST_CASE("identity and composition of maps")
{
    for (const SmallObject& obj : sample_objects()) CHECK(ObjectMap::identity(obj).induced_coeff_map() == Matrix::identity(obj.dim()));
    const ObjectMap sigma = maps::permutation({1, 0, 2});
    CHECK(same_map(compose(sigma, sigma), ObjectMap::identity(SmallObject::dpow(3))));
    const ObjectMap contract = maps::contract_last_pair(3);
    CHECK(compose(maps::sum(2), contract).induced_coeff_map() == contract.induced_coeff_map() * maps::sum(2).induced_coeff_map());
}

TEST_CASE("maps into wedges")
{
    for (int n = 1; n <= 3; ++n) {
        const SmallObject w = SmallObject::wedge(SmallObject::dpow(n), SmallObject::d());
        std::vector<IntPoly> comps;
        IntPoly top{{MultiIndex(static_cast<std::size_t>(n), 1), 1}};
        for (int v = 0; v < n; ++v) comps.push_back(var_poly(n, v));
        comps.push_back(top);
        CHECK_NOTHROW(ObjectMap(SmallObject::dpow(n), w, comps));

        const SmallObject line = SmallObject::dn(n + 1);
        const SmallObject wl = SmallObject::wedge(line, SmallObject::d());
        CHECK_NOTHROW(ObjectMap(line, wl, {var_poly(1, 0), monomial_poly({n + 1})}));
    }
}

TEST_CASE("maps must preserve the ideal")
{
    CHECK_THROWS_AS(ObjectMap(SmallObject::dn(2), SmallObject::d(), {var_poly(1, 0)}), PreconditionError);
    CHECK_THROWS_AS(ObjectMap(SmallObject::dpow(2), SmallObject::dpow(1), {IntPoly{{{0, 0}, 1}}}), PreconditionError);
    CHECK_NOTHROW(ObjectMap(SmallObject::d(), SmallObject::dn(2), {var_poly(1, 0)}));
}

TEST_CASE("random object maps are found between common objects")
{
    Rng rng(11);
    int found = 0;
    const auto objs = sample_objects();
    for (const SmallObject& a : objs)
        for (const SmallObject& b : objs)
            if (random_object_map(rng, a, b)) ++found;
    // Every object maps to itself, and the constant map always exists.
    CHECK(found >= static_cast<int>(objs.size() * objs.size()) / 2);
}

}
