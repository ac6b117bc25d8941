#include "jetkit/errors.hpp"
#include "jetkit/maps.hpp"
#include "jetkit/random.hpp"
#include "jetkit/taylor.hpp"

#include "support.hpp"

using namespace jetkit;
using testing::element;
using testing::q;
using Terms = std::vector<std::vector<PolyMap::Term>>;

TEST_SUITE("taylor") {

TEST_CASE("pushforward along polynomial maps")
{
    const PolyMap square(1, 1, Terms{{{Rational(1), {2}}}});
    const TaylorElement g = element(SmallObject::d(), 1, {{{0}, {1}}, {{1}, {1}}});
    CHECK(pushforward(square, g) == element(SmallObject::d(), 1, {{{0}, {1}}, {{1}, {2}}}));
    CHECK(pushforward(PolyMap::identity(1), g) == g);

    const PolyMap cube(1, 1, Terms{{{Rational(1), {3}}}});
    const TaylorElement curve = element(SmallObject::dn(2), 1, {{{0}, {1}}, {{1}, {1}}, {{2}, {1}}});
    CHECK(pushforward(cube, curve) == element(SmallObject::dn(2), 1, {{{0}, {1}}, {{1}, {3}}, {{2}, {6}}}));
}

TEST_CASE("polynomial maps merge duplicate terms")
{
    const PolyMap f(1, 1, Terms{{{Rational(1), {1}}, {Rational(2), {1}}, {Rational(0), {2}}}});
    CHECK(f.components()[0].size() == 1);
    CHECK(f.components()[0].at({1}) == 3);
    CHECK(f.degree() == 1);
}

TEST_CASE("pullback along the sum map")
{
    const Rational x = q("2/3");
    const Rational y1 = q("-5/2");
    const Rational y2 = q("7");
    const TaylorElement curve = element(SmallObject::dn(2), 1, {{{0}, {x}}, {{1}, {y1}}, {{2}, {y2}}});
    const TaylorElement cube = reparam(curve, maps::sum(2));
    CHECK(cube == element(SmallObject::dpow(2), 1, {{{0, 0}, {x}}, {{1, 0}, {y1}}, {{0, 1}, {y1}}, {{1, 1}, {2 * y2}}}));
    CHECK(reparam(curve, ObjectMap::identity(curve.object())) == curve);
}

TEST_CASE("extracting the wedge coordinate")
{
    const SmallObject w = SmallObject::wedge(SmallObject::dpow(2), SmallObject::d());
    const TaylorElement g = element(w, 1, {{{0, 0, 0}, {1}}, {{1, 0, 0}, {2}}, {{0, 1, 0}, {3}}, {{1, 1, 0}, {4}}, {{0, 0, 1}, {5}}});
    CHECK(reparam(g, maps::wedge_right(w)) == element(SmallObject::d(), 1, {{{0}, {1}}, {{1}, {5}}}));
    CHECK(reparam(g, maps::wedge_left(w)) == element(SmallObject::dpow(2), 1, {{{0, 0}, {1}}, {{1, 0}, {2}}, {{0, 1}, {3}}, {{1, 1}, {4}}}));
}

TEST_CASE("axis scaling")
{
    const TaylorElement g = element(SmallObject::dpow(2), 1, {{{0, 0}, {1}}, {{1, 0}, {2}}, {{0, 1}, {3}}, {{1, 1}, {4}}});
    CHECK(scalar_action(3, 1, g) == element(SmallObject::dpow(2), 1, {{{0, 0}, {1}}, {{1, 0}, {6}}, {{0, 1}, {3}}, {{1, 1}, {12}}}));
    CHECK(scalar_action(1, 2, g) == g);
    CHECK(scalar_action(0, 2, g) == element(SmallObject::dpow(2), 1, {{{0, 0}, {1}}, {{1, 0}, {2}}}));
    CHECK_THROWS_AS((void)scalar_action(2, 3, g), PreconditionError);
}

TEST_CASE("permutations")
{
    const TaylorElement g = element(SmallObject::dpow(2), 1, {{{0, 0}, {1}}, {{1, 0}, {2}}, {{0, 1}, {3}}, {{1, 1}, {4}}});
    CHECK(permute(g, {0, 1}) == g);
    CHECK(permute(g, {1, 0}) == element(SmallObject::dpow(2), 1, {{{0, 0}, {1}}, {{1, 0}, {3}}, {{0, 1}, {2}}, {{1, 1}, {4}}}));
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        const TaylorElement h = random_element(rng, SmallObject::dpow(3), 2);
        const std::vector<int> sigma = rng.permutation(3);
        std::vector<int> inverse(3);
        for (int i = 0; i < 3; ++i) inverse[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = i;
        CHECK(permute(permute(h, sigma), inverse) == h);
        CHECK(permute(h, sigma) == reparam(h, maps::permutation(sigma)));
    }
}

TEST_CASE("faces and degeneracies")
{
    Rng rng(6);
    for (int t = 0; t < 20; ++t) {
        const int n = rng.uniform(1, 3);
        const TaylorElement g = random_element(rng, SmallObject::dpow(n), 2);
        for (int i = 1; i <= n + 1; ++i) {
            const TaylorElement up = degeneracy_s(i, g);
            CHECK(face_d(i, up) == g);
            for (std::size_t b = 0; b < up.object().dim(); ++b)
                if (up.object().basis()[b][static_cast<std::size_t>(i - 1)] == 1) CHECK(is_zero(up.coeff(b)));
        }
    }
    const TaylorElement line = element(SmallObject::dpow(1), 2, {{{0}, {1, 2}}, {{1}, {3, 4}}});
    CHECK(face_d(1, line) == TaylorElement::constant(SmallObject::point(), line.base()));
}

TEST_CASE("directional differences")
{
    Rng rng(7);
    const TaylorElement g = random_element(rng, SmallObject::dpow(2), 2);
    const TaylorElement diff = directional_minus(1, g, g);
    CHECK(is_zero(diff.coeff_of({1, 0})));
    CHECK(is_zero(diff.coeff_of({1, 1})));
    CHECK(std::ranges::equal(diff.coeff_of({0, 1}), g.coeff_of({0, 1})));

    const TaylorElement a = element(SmallObject::dpow(1), 1, {{{0}, {1}}, {{1}, {5}}});
    const TaylorElement b = element(SmallObject::dpow(1), 1, {{{0}, {1}}, {{1}, {2}}});
    CHECK(directional_minus(1, a, b) == element(SmallObject::dpow(1), 1, {{{0}, {1}}, {{1}, {3}}}));
    const TaylorElement c = element(SmallObject::dpow(1), 1, {{{0}, {0}}, {{1}, {2}}});
    CHECK_THROWS_AS((void)directional_minus(1, a, c), PreconditionError);
}

TEST_CASE("descending along an injective pullback")
{
    Rng rng(8);
    for (int t = 0; t < 10; ++t) {
        const TaylorElement curve = random_element(rng, SmallObject::dn(3), 2);
        CHECK(descend(reparam(curve, maps::sum(3)), maps::sum(3)) == curve);
    }
    TaylorElement off = reparam(random_element(rng, SmallObject::dn(2), 1), maps::sum(2));
    off.coeff_of({1, 0})[0] += 1;
    CHECK_THROWS_AS((void)descend(off, maps::sum(2)), InvariantError);
}

TEST_CASE("slices of product objects")
{
    Rng rng(9);
    const SmallObject prod = SmallObject::product(SmallObject::dpow(2), SmallObject::dn(2));
    const TaylorElement g = random_element(rng, prod, 2);
    const auto slices = split_product(g);
    CHECK(slices.size() == 3);
    CHECK(join_product(prod, slices) == g);
}

TEST_CASE("scaling the curve parameter")
{
    const TaylorElement curve = element(SmallObject::dn(2), 1, {{{0}, {1}}, {{1}, {2}}, {{2}, {3}}});
    CHECK(scale_parameter(2, curve) == element(SmallObject::dn(2), 1, {{{0}, {1}}, {{1}, {4}}, {{2}, {12}}}));
}

TEST_CASE("element arithmetic checks shapes")
{
    TaylorElement a(SmallObject::d(), 1);
    const TaylorElement b(SmallObject::dn(2), 1);
    CHECK_THROWS_AS(a += b, PreconditionError);
}

}
