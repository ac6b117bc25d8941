#include "jetkit/errors.hpp"
#include "jetkit/holonomy.hpp"
#include "jetkit/random.hpp"

#include "support.hpp"

using namespace jetkit;
using testing::element;

TEST_SUITE("holonomy") {

TEST_CASE("semiholonomic predicate on one variable")
{
    IteratedJet2 j(1, 1);
    j.base_derivative(0)[0] = 3;
    j.lifted_derivative(0)[0] = 3;
    CHECK(is_semiholonomic(j));
    j.base_derivative(0)[0] = 1;
    j.lifted_derivative(0)[0] = 2;
    CHECK_FALSE(is_semiholonomic(j));
    CHECK(is_holonomic(j));
}

TEST_CASE("ordinary jets give holonomic data")
{
    Rng rng(61);
    for (int t = 0; t < 20; ++t) {
        const IteratedJet2 j = from_jet(random_jet(rng, rng.uniform(1, 3), rng.uniform(1, 2), 2));
        CHECK(is_semiholonomic(j));
        CHECK(is_holonomic(j));
        CHECK(passes_exchange_test(j));
        const TaylorElement g = random_element(rng, SmallObject::dpow(2), j.p(), j.x());
        const ExchangePair e = exchange_evaluations(j, g);
        CHECK(e.lift_first_axis == e.lift_second_axis);
    }
}

TEST_CASE("an asymmetric second block breaks the exchange")
{
    IteratedJet2 j(2, 1);
    j.second(0, 1)[0] = 1;
    CHECK(is_semiholonomic(j));
    CHECK_FALSE(is_holonomic(j));
    CHECK_FALSE(passes_exchange_test(j));

    const Rational y11 = 2, y12 = 3, y21 = 5, y22 = 7;
    const TaylorElement g = element(SmallObject::dpow(2), 2, {{{1, 0}, {y11, y12}}, {{0, 1}, {y21, y22}}, {{1, 1}, {11, 13}}});
    const ExchangePair e = exchange_evaluations(j, g);
    const Rational defect = e.lift_first_axis.coeff_of({1, 1})[2] - e.lift_second_axis.coeff_of({1, 1})[2];
    // (u_{1;2} - u_{2;1}) times (y_1^2 y_2^1 - y_1^1 y_2^2).
    CHECK(defect == y12 * y21 - y11 * y22);
}

TEST_CASE("tuple round trip")
{
    Rng rng(62);
    const IteratedJet2 j = random_iterated_jet(rng, 2, 2);
    const Vector t = tuple(j);
    CHECK(t.size() == 4 + (4 + 4) * 2);
    CHECK(iterated_from_tuple(2, 2, t) == j);
    CHECK_THROWS_AS((void)iterated_from_tuple(2, 2, std::span<const Rational>(t).first(3)), PreconditionError);
}

TEST_CASE("evaluation checks its input")
{
    Rng rng(63);
    const IteratedJet2 j = random_iterated_jet(rng, 1, 1);
    CHECK_THROWS_AS((void)iterated_evaluation(j, random_element(rng, SmallObject::dpow(2), 1, j.x()), 3), PreconditionError);
    CHECK_THROWS_AS((void)iterated_evaluation(j, random_element(rng, SmallObject::dn(2), 1, j.x()), 1), PreconditionError);
}

}
