#include "jetkit/holonomy.hpp"

#include "jetkit/errors.hpp"

#include <algorithm>

namespace jetkit {

namespace {

std::size_t block(int index, int q) { return static_cast<std::size_t>(index) * static_cast<std::size_t>(q); }

}  // namespace

IteratedJet2::IteratedJet2(int p, int q)
    : p_(p), q_(q)
{
    if (p < 1 || q < 0) throw PreconditionError("iterated jets need p >= 1 and q >= 0");
    x_ = zeros(static_cast<std::size_t>(p));
    u_ = zeros(static_cast<std::size_t>(q));
    base_ = zeros(block(p, q));
    lifted_ = zeros(block(p, q));
    second_ = zeros(block(p * p, q));
}

std::span<const Rational> IteratedJet2::base_derivative(int i) const
{
    return std::span<const Rational>(base_).subspan(block(i, q_), static_cast<std::size_t>(q_));
}
std::span<Rational> IteratedJet2::base_derivative(int i)
{
    return std::span<Rational>(base_).subspan(block(i, q_), static_cast<std::size_t>(q_));
}
std::span<const Rational> IteratedJet2::lifted_derivative(int i) const
{
    return std::span<const Rational>(lifted_).subspan(block(i, q_), static_cast<std::size_t>(q_));
}
std::span<Rational> IteratedJet2::lifted_derivative(int i)
{
    return std::span<Rational>(lifted_).subspan(block(i, q_), static_cast<std::size_t>(q_));
}
std::span<const Rational> IteratedJet2::second(int i1, int i2) const
{
    return std::span<const Rational>(second_).subspan(block(i1 * p_ + i2, q_), static_cast<std::size_t>(q_));
}
std::span<Rational> IteratedJet2::second(int i1, int i2)
{
    return std::span<Rational>(second_).subspan(block(i1 * p_ + i2, q_), static_cast<std::size_t>(q_));
}

IteratedJet2 from_jet(const JetCoord& j)
{
    if (j.order() != 2) throw PreconditionError("from_jet needs an order-2 jet");
    const int p = j.p();
    IteratedJet2 out(p, j.q());
    std::copy(j.x().begin(), j.x().end(), out.x().begin());
    std::copy(j.u().begin(), j.u().end(), out.u().begin());
    for (int i = 0; i < p; ++i) {
        MultiIndex e(static_cast<std::size_t>(p), 0);
        e[static_cast<std::size_t>(i)] = 1;
        const auto d = j.derivative(e);
        std::copy(d.begin(), d.end(), out.base_derivative(i).begin());
        std::copy(d.begin(), d.end(), out.lifted_derivative(i).begin());
        for (int k = 0; k < p; ++k) {
            MultiIndex m = e;
            ++m[static_cast<std::size_t>(k)];
            const auto s = j.derivative(m);
            std::copy(s.begin(), s.end(), out.second(i, k).begin());
        }
    }
    return out;
}

bool is_semiholonomic(const IteratedJet2& j)
{
    for (int i = 0; i < j.p(); ++i)
        if (!std::ranges::equal(j.base_derivative(i), j.lifted_derivative(i))) return false;
    return true;
}

bool is_holonomic(const IteratedJet2& j)
{
    for (int a = 0; a < j.p(); ++a)
        for (int b = a + 1; b < j.p(); ++b)
            if (!std::ranges::equal(j.second(a, b), j.second(b, a))) return false;
    return true;
}

TaylorElement iterated_evaluation(const IteratedJet2& j, const TaylorElement& g, int first_axis)
{
    const SmallObject obj = SmallObject::dpow(2);
    if (!(g.object() == obj) || g.target_dim() != j.p()) throw PreconditionError("iterated_evaluation needs an element over Dpow(2) in M");
    if (!std::ranges::equal(g.coeff(0), j.x())) throw PreconditionError("iterated_evaluation: base point mismatch");
    if (first_axis != 1 && first_axis != 2) throw PreconditionError("iterated_evaluation: axis must be 1 or 2");
    const int p = j.p();
    const int q = j.q();
    const int other = 3 - first_axis;
    const WeilElement da = WeilElement::variable(obj, first_axis - 1);
    const WeilElement db = WeilElement::variable(obj, other - 1);
    const auto ya = g.coeff_of(first_axis == 1 ? MultiIndex{1, 0} : MultiIndex{0, 1});
    const auto yb = g.coeff_of(other == 1 ? MultiIndex{1, 0} : MultiIndex{0, 1});
    const auto yab = g.coeff_of({1, 1});

    std::vector<WeilElement> comps;
    for (int i = 0; i < p; ++i) comps.push_back(g.component(i));
    for (int c = 0; c < q; ++c) {
        const auto cc = static_cast<std::size_t>(c);
        // Lift along the first axis: u and u_{i1} move with the lifted derivatives.
        WeilElement value(obj, j.u()[cc]);
        for (int i = 0; i < p; ++i) value += da * ya[static_cast<std::size_t>(i)] * WeilElement(obj, j.lifted_derivative(i)[cc]);
        for (int i1 = 0; i1 < p; ++i1) {
            WeilElement slope(obj, j.base_derivative(i1)[cc]);
            for (int i2 = 0; i2 < p; ++i2) slope += da * ya[static_cast<std::size_t>(i2)] * WeilElement(obj, j.second(i1, i2)[cc]);
            // Then apply the lifted first jet along the other axis.
            const WeilElement dir = WeilElement(obj, yb[static_cast<std::size_t>(i1)]) + da * yab[static_cast<std::size_t>(i1)];
            value += db * dir * slope;
        }
        comps.push_back(std::move(value));
    }
    return TaylorElement::from_components(obj, comps);
}

ExchangePair exchange_evaluations(const IteratedJet2& j, const TaylorElement& g)
{
    return ExchangePair{iterated_evaluation(j, g, 1), iterated_evaluation(j, g, 2)};
}

bool passes_exchange_test(const IteratedJet2& j)
{
    for (int a = 0; a < j.p(); ++a)
        for (int b = 0; b < j.p(); ++b) {
            TaylorElement g = TaylorElement::constant(SmallObject::dpow(2), j.x());
            g.coeff_of({1, 0})[static_cast<std::size_t>(a)] = 1;
            g.coeff_of({0, 1})[static_cast<std::size_t>(b)] = 1;
            const ExchangePair e = exchange_evaluations(j, g);
            if (!(e.lift_first_axis == e.lift_second_axis)) return false;
        }
    return true;
}

Vector tuple(const IteratedJet2& j)
{
    Vector out(j.x().begin(), j.x().end());
    out.insert(out.end(), j.u().begin(), j.u().end());
    for (int i = 0; i < j.p(); ++i) out.insert(out.end(), j.base_derivative(i).begin(), j.base_derivative(i).end());
    for (int i = 0; i < j.p(); ++i) out.insert(out.end(), j.lifted_derivative(i).begin(), j.lifted_derivative(i).end());
    for (int a = 0; a < j.p(); ++a)
        for (int b = 0; b < j.p(); ++b) out.insert(out.end(), j.second(a, b).begin(), j.second(a, b).end());
    return out;
}

IteratedJet2 iterated_from_tuple(int p, int q, std::span<const Rational> values)
{
    IteratedJet2 j(p, q);
    const std::size_t expected = static_cast<std::size_t>(p + q) + block(2 * p + p * p, q);
    if (values.size() != expected) throw PreconditionError("iterated jet tuple has the wrong length");
    auto it = values.begin();
    auto take = [&it](std::span<Rational> dst) {
        std::copy_n(it, dst.size(), dst.begin());
        it += static_cast<std::ptrdiff_t>(dst.size());
    };
    take(j.x());
    take(j.u());
    for (int i = 0; i < p; ++i) take(j.base_derivative(i));
    for (int i = 0; i < p; ++i) take(j.lifted_derivative(i));
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) take(j.second(a, b));
    return j;
}

}  // namespace jetkit
