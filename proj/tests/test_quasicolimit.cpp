#include "jetkit/errors.hpp"
#include "jetkit/jets.hpp"
#include "jetkit/maps.hpp"
#include "jetkit/quasicolimit.hpp"
#include "jetkit/random.hpp"

#include "support.hpp"

using namespace jetkit;
using testing::element;

namespace {

std::vector<AffineFamily> families()
{
    std::vector<AffineFamily> out;
    for (int n = 1; n <= 3; ++n) {
        out.push_back(dpow_family(n));
        out.push_back(dn_family(n));
        out.push_back(dsym_family(1, n));
        out.push_back(dsym_family(2, n));
    }
    return out;
}

}  // namespace

TEST_SUITE("quasicolimit") {

TEST_CASE("every family square is a quasi-colimit")
{
    for (const AffineFamily& fam : families()) {
        CAPTURE(fam.side.name());
        CHECK(is_quasi_colimit(fam.minus));
        CHECK(is_quasi_colimit(fam.plus));
        CHECK(fam.minus.corner_to_left.source() == fam.minus.corner_to_right.source());
    }
}

TEST_CASE("a non-pushout square is rejected by the solver")
{
    // Gluing two copies of D along the point into D itself loses information.
    const SmallObject d = SmallObject::d();
    const PushoutSpec collapse("collapse", maps::from_point(d), maps::from_point(d), ObjectMap::identity(d), ObjectMap::identity(d));
    CHECK_FALSE(is_quasi_colimit(collapse));
}

TEST_CASE("equal sides glue to a zero difference")
{
    Rng rng(21);
    for (const AffineFamily& fam : families()) {
        const TaylorElement g = random_element(rng, fam.side, 2);
        const TaylorElement glued = solve_pair(fam.minus, g, g);
        CHECK(reparam(glued, fam.minus.left_to_apex) == g);
        const TaylorElement diff = strong_minus(fam, g, g);
        for (std::size_t b = 1; b < diff.object().dim(); ++b) CHECK(is_zero(diff.coeff(b)));
        CHECK(diff.base() == g.base());
    }
}

TEST_CASE("first-order cube difference is the tangent difference")
{
    const AffineFamily fam = dpow_family(1);
    const TaylorElement plus = element(SmallObject::dpow(1), 2, {{{0}, {1, 2}}, {{1}, {5, 7}}});
    const TaylorElement minus = element(SmallObject::dpow(1), 2, {{{0}, {1, 2}}, {{1}, {3, -1}}});
    CHECK(strong_minus(fam, plus, minus) == element(SmallObject::d(), 2, {{{0}, {1, 2}}, {{1}, {2, 8}}}));
}

TEST_CASE("curve difference is the top coefficient difference")
{
    const AffineFamily fam = dn_family(2);
    const TaylorElement plus = element(SmallObject::dn(2), 1, {{{0}, {1}}, {{1}, {2}}, {{2}, {9}}});
    const TaylorElement minus = element(SmallObject::dn(2), 1, {{{0}, {1}}, {{1}, {2}}, {{2}, {4}}});
    CHECK(strong_minus(fam, plus, minus) == element(SmallObject::d(), 1, {{{0}, {1}}, {{1}, {5}}}));
    const TaylorElement bad = element(SmallObject::dn(2), 1, {{{0}, {1}}, {{1}, {3}}, {{2}, {4}}});
    CHECK_THROWS_AS((void)strong_minus(fam, plus, bad), PreconditionError);
}

TEST_CASE("jet-family difference subtracts the top block")
{
    JetCoord a(1, 1, 1);
    JetCoord b(1, 1, 1);
    a.derivative({1})[0] = 5;
    b.derivative({1})[0] = 2;
    const TaylorElement diff = strong_minus(jet_family(1, 1), embed(a), embed(b));
    CHECK(diff == element(SmallObject::dmany(1), 2, {{{0}, {0, 0}}, {{1}, {0, 3}}}));
}

TEST_CASE("jet-family translation adds onto the top block")
{
    JetCoord j(1, 1, 1);
    j.x()[0] = 1;
    j.u()[0] = 2;
    j.derivative({1})[0] = 4;
    SymFormCoord s(1, 1, 1);
    s.x()[0] = 1;
    s.u()[0] = 2;
    s.entry(0)[0] = 3;
    JetCoord expected = j;
    expected.derivative({1})[0] = 7;
    CHECK(strong_plus(jet_family(1, 1), embed(s), embed(j)) == embed(expected));
}

TEST_CASE("zero translation is the identity")
{
    Rng rng(22);
    for (const AffineFamily& fam : families()) {
        const TaylorElement g = random_element(rng, fam.side, 2);
        const Vector base = g.base();
        const TaylorElement zero = TaylorElement::constant(fam.tangent, base);
        CHECK(strong_plus(fam, zero, g) == g);
    }
}

TEST_CASE("translation needs matching base points")
{
    Rng rng(23);
    const AffineFamily fam = dn_family(2);
    const TaylorElement g = random_element(rng, fam.side, 1);
    TaylorElement t = random_element(rng, fam.tangent, 1);
    t.coeff(0)[0] = g.coeff(0)[0] + 1;
    CHECK_THROWS_AS((void)strong_plus(fam, t, g), PreconditionError);
}

TEST_CASE("fibre operations")
{
    const TaylorElement s = element(SmallObject::d(), 1, {{{0}, {1}}, {{1}, {2}}});
    const TaylorElement t = element(SmallObject::d(), 1, {{{0}, {1}}, {{1}, {5}}});
    CHECK(fiber_sum(s, t) == element(SmallObject::d(), 1, {{{0}, {1}}, {{1}, {7}}}));
    CHECK(fiber_scale(3, s) == element(SmallObject::d(), 1, {{{0}, {1}}, {{1}, {6}}}));
}

}
