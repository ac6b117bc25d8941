#include "jetkit/errors.hpp"
#include "jetkit/jets.hpp"
#include "jetkit/json_io.hpp"
#include "jetkit/random.hpp"

#include "oracles.hpp"
#include "support.hpp"

using namespace jetkit;

TEST_SUITE("jets") {

TEST_CASE("tuple lengths")
{
    CHECK(JetCoord::tuple_length(1, 1, 2) == 4);
    CHECK(JetCoord::tuple_length(2, 1, 2) == 3 + 2 + 3);
    CHECK(SymFormCoord::tuple_length(2, 3, 2) == 5 + 9);
    for (int p = 1; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q)
            for (int n = 0; n <= 4; ++n) {
                CHECK(Rational(static_cast<unsigned long>(JetCoord::tuple_length(p, q, n))) == oracle::jet_length(p, q, n));
                CHECK(Rational(static_cast<unsigned long>(SymFormCoord::tuple_length(p, q, n + 1))) == oracle::form_length(p, q, n));
            }
}

TEST_CASE("tuple positions")
{
    Rng rng(31);
    const JetCoord j = random_jet(rng, 2, 2, 3);
    const Vector t = j.tuple();
    for (const MultiIndex& m : oracle::exponents_up_to(2, 3)) {
        const std::size_t pos = JetCoord::tuple_position(2, 2, 3, m);
        const auto d = j.derivative(m);
        CHECK(std::equal(d.begin(), d.end(), t.begin() + static_cast<std::ptrdiff_t>(pos)));
    }
}

TEST_CASE("projection drops the top block")
{
    Rng rng(32);
    const JetCoord j = random_jet(rng, 2, 1, 2);
    const JetCoord low = project(j);
    CHECK(low.order() == 1);
    CHECK(std::ranges::equal(low.derivative({1, 0}), j.derivative({1, 0})));
    CHECK(project(extend_with_zero(low)) == low);
    const JetCoord first = project(project(j));
    CHECK(first.tuple().size() == 3);
    CHECK_THROWS_AS((void)project(first), PreconditionError);
}

TEST_CASE("coordinate difference and translation")
{
    JetCoord a(1, 1, 1);
    JetCoord b(1, 1, 1);
    a.derivative({1})[0] = 5;
    b.derivative({1})[0] = 2;
    CHECK(jet_minus(a, b).entry(0)[0] == 3);
    CHECK(is_zero(jet_minus(a, a).entry(0)));

    Rng rng(33);
    for (int t = 0; t < 20; ++t) {
        const JetCoord j = random_jet(rng, rng.uniform(1, 2), rng.uniform(1, 2), rng.uniform(1, 3));
        const SymFormCoord s = random_symform_at(rng, j);
        CHECK(jet_minus(jet_plus(s, j), j) == s);
        SymFormCoord zero(j.p(), j.q(), j.order());
        std::copy(j.x().begin(), j.x().end(), zero.x().begin());
        std::copy(j.u().begin(), j.u().end(), zero.u().begin());
        CHECK(jet_plus(zero, j) == j);
    }
}

TEST_CASE("difference needs equal projections")
{
    Rng rng(34);
    const JetCoord a = random_jet(rng, 1, 1, 2);
    JetCoord b = a;
    b.derivative({1})[0] += 1;
    CHECK_THROWS_AS((void)jet_minus(a, b), PreconditionError);
}

TEST_CASE("embedding and extraction")
{
    Rng rng(35);
    JetCoord point(2, 1, 0);
    point.x()[0] = 1;
    point.u()[0] = 4;
    CHECK(embed(point) == TaylorElement::constant(SmallObject::dsym(2, 0), point.tuple()));
    for (int t = 0; t < 20; ++t) {
        const JetCoord j = random_jet(rng, rng.uniform(1, 2), rng.uniform(1, 2), rng.uniform(0, 3));
        const TaylorElement g = embed(j);
        CHECK(is_degenerate(g, j.p()));
        CHECK(extract_jet(g, j.p()) == j);
        const SymFormCoord s = random_symform(rng, j.p(), j.q(), rng.uniform(1, 3));
        CHECK(extract_symform(embed(s), s.p(), s.degree()) == s);
    }
}

TEST_CASE("the image of embed is the degenerate elements")
{
    Rng rng(36);
    for (int t = 0; t < 20; ++t) {
        const int p = rng.uniform(1, 2);
        const SmallObject obj = SmallObject::dsym(p, rng.uniform(1, 3));
        TaylorElement g = random_element(rng, obj, p + 1);
        for (std::size_t b = 1; b < obj.dim(); ++b)
            for (int k = 0; k < p; ++k) g.at(b, k) = 0;
        CHECK(is_degenerate(g, p));
        CHECK(embed(extract_jet(g, p)) == g);

        const auto b = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(obj.dim()) - 1));
        g.at(b, rng.uniform(0, p - 1)) = rng.nonzero_rational();
        CHECK_FALSE(is_degenerate(g, p));
        CHECK_THROWS_AS((void)extract_jet(g, p), PreconditionError);
    }
}

TEST_CASE("JSON encodings round trip")
{
    Rng rng(37);
    for (int t = 0; t < 20; ++t) {
        const JetCoord j = random_jet(rng, rng.uniform(1, 3), rng.uniform(0, 2), rng.uniform(0, 3));
        CHECK(jet_from_json(Json::parse(to_json(j).dump())) == j);
        const SymFormCoord s = random_symform(rng, rng.uniform(1, 3), rng.uniform(1, 2), rng.uniform(1, 3));
        CHECK(symform_from_json(Json::parse(to_json(s).dump())) == s);
    }
}

TEST_CASE("jet JSON layout")
{
    JetCoord j(2, 1, 2);
    j.derivative({1, 1})[0] = Rational(1, 2);
    const Json doc = to_json(j);
    CHECK(doc["derivatives"].size() == 5);
    CHECK(doc["derivatives"][3]["index"] == Json::array({1, 2}));
    CHECK(doc["derivatives"][3]["value"][0] == "1/2");
}

TEST_CASE("malformed jet JSON")
{
    CHECK_THROWS_AS((void)jet_from_json(Json::parse(R"({"p":1,"q":1})")), SchemaError);
    CHECK_THROWS_AS(
        (void)jet_from_json(Json::parse(R"({"p":1,"q":1,"order":1,"x":["0"],"u":["0"],"derivatives":[{"index":[2],"value":["1"]}]})")),
        SchemaError);
    CHECK_THROWS_AS((void)jet_from_json(Json::parse(R"({"p":1,"q":1,"order":1,"x":["a"],"u":["0"],"derivatives":[]})")),
                    SchemaError);
}

}
