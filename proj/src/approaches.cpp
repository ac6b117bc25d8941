#include "jetkit/approaches.hpp"

#include "jetkit/errors.hpp"
#include "jetkit/maps.hpp"

#include <algorithm>
#include <bit>
#include <memory>

namespace jetkit {

std::string to_string(Rep rep)
{
    switch (rep) {
    case Rep::first: return "first";
    case Rep::dpow: return "dpow";
    case Rep::dn: return "dn";
    }
    return "?";
}

Rep parse_rep(std::string_view text)
{
    if (text == "first") return Rep::first;
    if (text == "dpow") return Rep::dpow;
    if (text == "dn") return Rep::dn;
    throw SchemaError("unknown operator representation '" + std::string(text) + "'");
}

namespace {

using Lookup = std::function<std::span<const Rational>(const MultiIndex&)>;

std::span<const Rational> head(std::span<const Rational> v, int p) { return v.first(static_cast<std::size_t>(p)); }

void require_base(const TaylorElement& g, std::span<const Rational> x, const char* who)
{
    if (g.target_dim() != static_cast<int>(x.size()))
        throw PreconditionError(std::string(who) + ": input lives in the wrong dimension");
    const auto b = g.coeff(0);
    if (!std::equal(b.begin(), b.end(), x.begin())) throw PreconditionError(std::string(who) + ": base point mismatch");
}

// sum over ordered (i_1..i_r) in [p]^r of prod_m ys[m]^{i_m} * tensor(sorted i).
Vector contract(int p, std::size_t width, const Lookup& tensor, const std::vector<std::span<const Rational>>& ys)
{
    Vector out = zeros(width);
    IndexTuple labels(ys.size());
    auto recurse = [&](auto&& self, std::size_t pos, const Rational& weight) -> void {
        if (weight == 0) return;
        if (pos == ys.size()) {
            IndexTuple sorted = labels;
            std::sort(sorted.begin(), sorted.end());
            const auto t = tensor(from_index_tuple(p, sorted));
            for (std::size_t c = 0; c < width; ++c) out[c] += weight * t[c];
            return;
        }
        for (int i = 1; i <= p; ++i) {
            labels[pos] = i;
            self(self, pos + 1, weight * ys[pos][static_cast<std::size_t>(i - 1)]);
        }
    };
    recurse(recurse, 0, Rational(1));
    return out;
}

Lookup jet_lookup(const JetCoord& j)
{
    return [&j](const MultiIndex& m) { return j.derivative(m); };
}

MultiIndex indicator(int n, const std::vector<int>& labels)
{
    MultiIndex m(static_cast<std::size_t>(n), 0);
    for (int l : labels) m[static_cast<std::size_t>(l - 1)] = 1;
    return m;
}

MultiIndex unit(int p, int i)
{
    MultiIndex m(static_cast<std::size_t>(p), 0);
    m[static_cast<std::size_t>(i - 1)] = 1;
    return m;
}

Vector unit_vector(int p, int i)
{
    Vector v = zeros(static_cast<std::size_t>(p));
    v[static_cast<std::size_t>(i - 1)] = 1;
    return v;
}

void require_object(const TaylorElement& g, const SmallObject& expected, const char* who)
{
    if (!(g.object() == expected))
        throw PreconditionError(std::string(who) + ": expected an element over " + expected.name() + ", got " +
                                g.object().name());
}

// Velocity of an order-k jet tuple along y, as an order-(k-1) tuple with
// zero base: x-part y, slot I carries sum_i y^i u_{I+e_i}.
template <typename Scalar>
std::vector<Scalar> velocity(int p, int q, int k, const std::vector<Scalar>& jet, const std::vector<Scalar>& y,
                             const Scalar& zero)
{
    std::vector<Scalar> out(JetCoord::tuple_length(p, q, k - 1), zero);
    for (int i = 0; i < p; ++i) out[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)];
    for (int deg = 0; deg <= k - 1; ++deg) {
        for (const MultiIndex& m : symmetric_multi_indices(p, deg)) {
            const std::size_t dst = JetCoord::tuple_position(p, q, k - 1, m);
            for (int i = 0; i < p; ++i) {
                MultiIndex up = m;
                ++up[static_cast<std::size_t>(i)];
                const std::size_t src = JetCoord::tuple_position(p, q, k, up);
                for (int c = 0; c < q; ++c)
                    out[dst + static_cast<std::size_t>(c)] += y[static_cast<std::size_t>(i)] * jet[src + static_cast<std::size_t>(c)];
            }
        }
    }
    return out;
}

std::vector<TaylorElement> dpow_probes(int p, int order, std::span<const Rational> x)
{
    const SmallObject obj = SmallObject::dpow(order);
    std::vector<TaylorElement> out{TaylorElement::constant(obj, x)};
    for (int k = 1; k <= order; ++k)
        for (const MultiIndex& m : symmetric_multi_indices(p, k)) {
            const IndexTuple t = to_index_tuple(m);
            TaylorElement g = TaylorElement::constant(obj, x);
            for (int a = 1; a <= k; ++a) g.coeff_of(unit(order, a))[static_cast<std::size_t>(t[static_cast<std::size_t>(a - 1)] - 1)] = 1;
            out.push_back(std::move(g));
        }
    return out;
}

TaylorElement line_probe(const SmallObject& obj, std::span<const Rational> x, const Vector& v)
{
    TaylorElement g = TaylorElement::constant(obj, x);
    std::copy(v.begin(), v.end(), g.coeff(1).begin());
    return g;
}

Vector subset_sum(int p, const IndexTuple& t, unsigned mask)
{
    Vector v = zeros(static_cast<std::size_t>(p));
    for (std::size_t a = 0; a < t.size(); ++a)
        if (mask & (1u << a)) v[static_cast<std::size_t>(t[a] - 1)] += 1;
    return v;
}

// Curves x + d v over `obj` with v a 0/1 sum of the labels of t, every
// subset of the labels once including the empty one.
std::vector<TaylorElement> polarization_probes(const SmallObject& obj, int p, std::span<const Rational> x)
{
    std::vector<TaylorElement> out{TaylorElement::constant(obj, x)};
    const int order = obj.first_param();
    for (int k = 1; k <= order; ++k)
        for (const MultiIndex& m : symmetric_multi_indices(p, k)) {
            const IndexTuple t = to_index_tuple(m);
            for (unsigned mask = 1; mask < (1u << k); ++mask) {
                TaylorElement g = line_probe(obj, x, subset_sum(p, t, mask));
                if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
            }
        }
    return out;
}

// Polarization of the degree-k symmetric tensor F(v) = coefficient at d^k.
Vector polarize(const std::function<TaylorElement(const TaylorElement&)>& eval, const SmallObject& obj, int p, int q,
                std::span<const Rational> x, const IndexTuple& t, std::size_t coeff_index)
{
    const int k = static_cast<int>(t.size());
    Vector out = zeros(static_cast<std::size_t>(q));
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        const int size = std::popcount(mask);
        const TaylorElement res = eval(line_probe(obj, x, subset_sum(p, t, mask)));
        const auto c = res.coeff(coeff_index);
        const Rational sign = ((k - size) % 2 == 0) ? 1 : -1;
        for (int i = 0; i < q; ++i) out[static_cast<std::size_t>(i)] += sign * c[static_cast<std::size_t>(p + i)];
    }
    return out;
}

}  // namespace

SmallObject Operator::input_object() const
{
    switch (rep) {
    case Rep::first: return SmallObject::d();
    case Rep::dpow: return SmallObject::dpow(order);
    case Rep::dn: return SmallObject::dn(order);
    }
    throw PreconditionError("unknown representation");
}

SmallObject Operator::output_object() const { return input_object(); }

int Operator::output_dim() const
{
    if (rep == Rep::first) return static_cast<int>(JetCoord::tuple_length(p, q, order - 1));
    return p + q;
}

TaylorElement Operator::operator()(const TaylorElement& g) const
{
    require_object(g, input_object(), "operator");
    require_base(g, point, "operator");
    TaylorElement out = fn(g);
    if (!(out.object() == output_object()) || out.target_dim() != output_dim())
        throw InvariantError("operator returned an element of the wrong shape");
    return out;
}

TaylorElement apply_first(const JetCoord& j, const TaylorElement& tangent)
{
    if (j.order() < 1) throw PreconditionError("apply_first needs order >= 1");
    require_object(tangent, SmallObject::d(), "apply_first");
    require_base(tangent, j.x(), "apply_first");
    const int p = j.p();
    const int q = j.q();
    const Vector jet = j.tuple();
    const auto y_span = tangent.coeff(1);
    const Vector y(y_span.begin(), y_span.end());
    const Vector vel = velocity<Rational>(p, q, j.order(), jet, y, Rational(0));
    const Vector base = project(j).tuple();
    TaylorElement out(SmallObject::d(), static_cast<int>(base.size()));
    std::copy(base.begin(), base.end(), out.coeff(0).begin());
    std::copy(vel.begin(), vel.end(), out.coeff(1).begin());
    return out;
}

TaylorElement apply_dpow(const JetCoord& j, const TaylorElement& g)
{
    const int n = j.order();
    const int p = j.p();
    const int q = j.q();
    const SmallObject obj = SmallObject::dpow(n);
    require_object(g, obj, "apply_dpow");
    require_base(g, j.x(), "apply_dpow");
    TaylorElement out(obj, p + q);
    const Lookup tensor = jet_lookup(j);
    for (std::size_t b = 0; b < obj.dim(); ++b) {
        const MultiIndex& m = obj.basis()[b];
        const auto src = g.coeff(b);
        auto dst = out.coeff(b);
        std::copy_n(src.begin(), p, dst.begin());
        if (b == 0) {
            std::copy(j.u().begin(), j.u().end(), dst.begin() + p);
            continue;
        }
        std::vector<int> labels;
        for (int a = 0; a < n; ++a)
            if (m[static_cast<std::size_t>(a)] == 1) labels.push_back(a + 1);
        for (const SetPartition& part : set_partitions(labels)) {
            std::vector<std::span<const Rational>> ys;
            for (const auto& block : part.blocks) ys.push_back(head(g.coeff_of(indicator(n, block)), p));
            const Vector term = contract(p, static_cast<std::size_t>(q), tensor, ys);
            for (int c = 0; c < q; ++c) dst[static_cast<std::size_t>(p + c)] += term[static_cast<std::size_t>(c)];
        }
    }
    return out;
}

TaylorElement apply_dn(const JetCoord& j, const TaylorElement& g)
{
    const int n = j.order();
    const int p = j.p();
    const int q = j.q();
    const SmallObject obj = SmallObject::dn(n);
    require_object(g, obj, "apply_dn");
    require_base(g, j.x(), "apply_dn");
    // Derivatives of the curve: y_k = k! c_k.
    std::vector<Vector> y(static_cast<std::size_t>(n + 1));
    for (int k = 1; k <= n; ++k) {
        const auto c = head(g.coeff(static_cast<std::size_t>(k)), p);
        for (const Rational& v : c) y[static_cast<std::size_t>(k)].push_back(factorial(k) * v);
    }
    TaylorElement out(obj, p + q);
    std::copy_n(g.coeff(0).begin(), p, out.coeff(0).begin());
    std::copy(j.u().begin(), j.u().end(), out.coeff(0).begin() + p);
    const Lookup tensor = jet_lookup(j);
    for (int k = 1; k <= n; ++k) {
        auto dst = out.coeff(static_cast<std::size_t>(k));
        std::copy_n(g.coeff(static_cast<std::size_t>(k)).begin(), p, dst.begin());
        Vector z = zeros(static_cast<std::size_t>(q));
        for (const IntPartition& parts : integer_partitions(k)) {
            std::vector<std::span<const Rational>> ys;
            for (int part : parts) ys.emplace_back(y[static_cast<std::size_t>(part)]);
            const Rational mult = set_partitions_of_shape(parts);
            const Vector term = contract(p, static_cast<std::size_t>(q), tensor, ys);
            for (int c = 0; c < q; ++c) z[static_cast<std::size_t>(c)] += mult * term[static_cast<std::size_t>(c)];
        }
        const Rational scale = 1 / factorial(k);
        for (int c = 0; c < q; ++c) dst[static_cast<std::size_t>(p + c)] = scale * z[static_cast<std::size_t>(c)];
    }
    return out;
}

TaylorElement apply_first_iterated(const JetCoord& j, const TaylorElement& g)
{
    const int n = j.order();
    const int p = j.p();
    const int q = j.q();
    const SmallObject obj = SmallObject::dpow(n);
    require_object(g, obj, "apply_first_iterated");
    require_base(g, j.x(), "apply_first_iterated");
    const WeilElement zero(obj);

    std::vector<WeilElement> jet;
    for (const Rational& v : j.tuple()) jet.emplace_back(obj, v);
    // gamma[b]: coordinates of the coefficient at basis monomial b, lifted
    // into the algebra; only masks over the first k axes stay live.
    std::vector<std::vector<WeilElement>> gamma(obj.dim());
    for (std::size_t b = 0; b < obj.dim(); ++b)
        for (int i = 0; i < p; ++i) gamma[b].emplace_back(obj, g.at(b, i));

    for (int k = n; k >= 1; --k) {
        const WeilElement dk = WeilElement::variable(obj, k - 1);
        const std::vector<WeilElement>& y = gamma[*obj.index_of(unit(n, k))];
        std::vector<WeilElement> next = velocity<WeilElement>(p, q, k, jet, y, zero);
        for (std::size_t i = 0; i < next.size(); ++i) next[i] = jet[i] + dk * next[i];
        std::vector<std::vector<WeilElement>> lowered(obj.dim());
        for (std::size_t b = 0; b < obj.dim(); ++b) {
            const MultiIndex& m = obj.basis()[b];
            if (std::any_of(m.begin() + (k - 1), m.end(), [](int e) { return e != 0; })) continue;
            MultiIndex with = m;
            with[static_cast<std::size_t>(k - 1)] = 1;
            const auto& upper = gamma[*obj.index_of(with)];
            for (int i = 0; i < p; ++i)
                lowered[b].push_back(gamma[b][static_cast<std::size_t>(i)] + dk * upper[static_cast<std::size_t>(i)]);
        }
        jet = std::move(next);
        gamma = std::move(lowered);
    }
    return TaylorElement::from_components(obj, std::vector<WeilElement>(jet.begin(), jet.begin() + p + q));
}

TaylorElement psi(const JetCoord& j, const TaylorElement& g)
{
    const ObjectMap sum = maps::sum(j.order());
    TaylorElement on_line = apply_dn(j, g);
    if (!(apply_dpow(j, reparam(g, sum)) == reparam(on_line, sum)))
        throw InvariantError("psi: line and cube prolongations disagree");
    return on_line;
}

Operator theta(Rep rep, const JetCoord& j)
{
    const Vector x(j.x().begin(), j.x().end());
    switch (rep) {
    case Rep::first:
        if (j.order() < 1) throw PreconditionError("first-approach operators need order >= 1");
        return Operator{rep, j.p(), j.q(), j.order(), x, [j](const TaylorElement& g) { return apply_first(j, g); }};
    case Rep::dpow:
        return Operator{rep, j.p(), j.q(), j.order(), x, [j](const TaylorElement& g) { return apply_dpow(j, g); }};
    case Rep::dn:
        return Operator{rep, j.p(), j.q(), j.order(), x, [j](const TaylorElement& g) { return apply_dn(j, g); }};
    }
    throw PreconditionError("unknown representation");
}

Operator phi_operator(const Operator& first)
{
    if (first.rep != Rep::first) throw PreconditionError("phi_operator needs a first-approach operator");
    const JetCoord j = reconstruct(first);
    return Operator{Rep::dpow, first.p, first.q, first.order, first.point,
                    [j](const TaylorElement& g) { return apply_first_iterated(j, g); }};
}

Operator psi_operator(const Operator& dpow)
{
    if (dpow.rep != Rep::dpow) throw PreconditionError("psi_operator needs a dpow operator");
    const ObjectMap sum = maps::sum(dpow.order);
    return Operator{Rep::dn, dpow.p, dpow.q, dpow.order, dpow.point,
                    [dpow, sum](const TaylorElement& g) { return descend(dpow(reparam(g, sum)), sum); }};
}

Operator project(const Operator& op)
{
    const int n = op.order;
    switch (op.rep) {
    case Rep::first: {
        if (n < 2) throw PreconditionError("project: first-approach operators of order 1 have no projection");
        const PolyMap drop = PolyMap::projection(static_cast<int>(JetCoord::tuple_length(op.p, op.q, n - 1)),
                                                 static_cast<int>(JetCoord::tuple_length(op.p, op.q, n - 2)));
        return Operator{op.rep, op.p, op.q, n - 1, op.point,
                        [op, drop](const TaylorElement& g) { return pushforward(drop, op(g)); }};
    }
    case Rep::dpow:
        if (n < 1) throw PreconditionError("project: order 0 has no projection");
        return Operator{op.rep, op.p, op.q, n - 1, op.point,
                        [op, n](const TaylorElement& g) { return face_d(n, op(degeneracy_s(n, g))); }};
    case Rep::dn: {
        if (n < 1) throw PreconditionError("project: order 0 has no projection");
        const ObjectMap incl = maps::same_variables(SmallObject::dn(n - 1), SmallObject::dn(n));
        return Operator{op.rep, op.p, op.q, n - 1, op.point, [op, incl, n](const TaylorElement& g) {
                            TaylorElement padded(SmallObject::dn(n), g.target_dim());
                            for (std::size_t b = 0; b < g.object().dim(); ++b)
                                std::copy(g.coeff(b).begin(), g.coeff(b).end(), padded.coeff(b).begin());
                            return reparam(op(padded), incl);
                        }};
    }
    }
    throw PreconditionError("unknown representation");
}

std::vector<TaylorElement> canonical_probes(Rep rep, int p, int q, int order, std::span<const Rational> x)
{
    (void)q;
    if (static_cast<int>(x.size()) != p) throw PreconditionError("canonical_probes: point has the wrong dimension");
    switch (rep) {
    case Rep::first: {
        std::vector<TaylorElement> out{TaylorElement::constant(SmallObject::d(), x)};
        for (int i = 1; i <= p; ++i) out.push_back(line_probe(SmallObject::d(), x, unit_vector(p, i)));
        return out;
    }
    case Rep::dpow: return dpow_probes(p, order, x);
    case Rep::dn: return polarization_probes(SmallObject::dn(order), p, x);
    }
    throw PreconditionError("unknown representation");
}

JetCoord reconstruct(const Operator& op)
{
    const int p = op.p;
    const int q = op.q;
    const int n = op.order;
    JetCoord j(p, q, n);
    std::copy(op.point.begin(), op.point.end(), j.x().begin());
    switch (op.rep) {
    case Rep::first: {
        const TaylorElement rest = op(TaylorElement::constant(SmallObject::d(), op.point));
        const JetCoord lower = JetCoord::from_tuple(p, q, n - 1, rest.coeff(0));
        for (int k = 0; k < n; ++k)
            for (const MultiIndex& m : symmetric_multi_indices(p, k)) {
                const auto src = lower.derivative(m);
                std::copy(src.begin(), src.end(), j.derivative(m).begin());
            }
        std::vector<TaylorElement> along;
        for (int i = 1; i <= p; ++i) along.push_back(op(line_probe(SmallObject::d(), op.point, unit_vector(p, i))));
        for (const MultiIndex& m : symmetric_multi_indices(p, n)) {
            int i = p;
            while (m[static_cast<std::size_t>(i - 1)] == 0) --i;
            MultiIndex below = m;
            --below[static_cast<std::size_t>(i - 1)];
            const std::size_t pos = JetCoord::tuple_position(p, q, n - 1, below);
            const auto vel = along[static_cast<std::size_t>(i - 1)].coeff(1);
            std::copy_n(vel.begin() + static_cast<std::ptrdiff_t>(pos), q, j.derivative(m).begin());
        }
        return j;
    }
    case Rep::dpow: {
        const std::vector<TaylorElement> probes = dpow_probes(p, n, op.point);
        const TaylorElement at_rest = op(probes.front());
        std::copy_n(at_rest.coeff(0).begin() + p, q, j.u().begin());
        std::size_t next = 1;
        for (int k = 1; k <= n; ++k)
            for (const MultiIndex& m : symmetric_multi_indices(p, k)) {
                const TaylorElement res = op(probes[next++]);
                MultiIndex corner(static_cast<std::size_t>(n), 0);
                std::fill_n(corner.begin(), k, 1);
                std::copy_n(res.coeff_of(corner).begin() + p, q, j.derivative(m).begin());
            }
        return j;
    }
    case Rep::dn: {
        const SmallObject obj = SmallObject::dn(n);
        const TaylorElement at_rest = op(TaylorElement::constant(obj, op.point));
        std::copy_n(at_rest.coeff(0).begin() + p, q, j.u().begin());
        for (int k = 1; k <= n; ++k)
            for (const MultiIndex& m : symmetric_multi_indices(p, k)) {
                const Vector v = polarize(op, obj, p, q, op.point, to_index_tuple(m), static_cast<std::size_t>(k));
                std::copy(v.begin(), v.end(), j.derivative(m).begin());
            }
        return j;
    }
    }
    throw PreconditionError("unknown representation");
}

OperatorTable tabulate(const Operator& op)
{
    OperatorTable table{op.rep, op.p, op.q, op.order, op.point, {}};
    for (TaylorElement& probe : canonical_probes(op.rep, op.p, op.q, op.order, op.point)) {
        TaylorElement value = op(probe);
        table.entries.emplace_back(std::move(probe), std::move(value));
    }
    return table;
}

Operator from_table(OperatorTable table)
{
    auto entries = std::make_shared<const std::vector<std::pair<TaylorElement, TaylorElement>>>(std::move(table.entries));
    return Operator{table.rep, table.p, table.q, table.order, table.point, [entries](const TaylorElement& g) {
                        for (const auto& [in, out] : *entries)
                            if (in == g) return out;
                        throw PreconditionError("operator table has no entry for this input");
                    }};
}

SmallObject FormOperator::input_object() const
{
    if (rep == Rep::dpow) return SmallObject::dpow(degree);
    if (rep == Rep::dn) return SmallObject::dn(degree);
    throw PreconditionError("symmetric forms use the dpow or dn representation");
}

TaylorElement FormOperator::operator()(const TaylorElement& g) const
{
    require_object(g, input_object(), "form");
    require_base(g, std::span<const Rational>(point).first(static_cast<std::size_t>(p)), "form");
    TaylorElement out = fn(g);
    if (!(out.object() == SmallObject::d()) || out.target_dim() != p + q)
        throw InvariantError("form returned an element of the wrong shape");
    return out;
}

TaylorElement apply_form(Rep rep, const SymFormCoord& s, const TaylorElement& g)
{
    const int p = s.p();
    const int q = s.q();
    const int n = s.degree();
    const Lookup tensor = [&s](const MultiIndex& m) { return s.entry(m); };
    std::vector<std::span<const Rational>> ys;
    Rational scale = 1;
    if (rep == Rep::dpow) {
        require_object(g, SmallObject::dpow(n), "apply_form");
        for (int a = 1; a <= n; ++a) ys.push_back(head(g.coeff_of(unit(n, a)), p));
    } else if (rep == Rep::dn) {
        require_object(g, SmallObject::dn(n), "apply_form");
        ys.assign(static_cast<std::size_t>(n), head(g.coeff(1), p));
        scale = 1 / factorial(n);
    } else {
        throw PreconditionError("symmetric forms use the dpow or dn representation");
    }
    require_base(g, s.x(), "apply_form");
    const Vector value = contract(p, static_cast<std::size_t>(q), tensor, ys);
    TaylorElement out(SmallObject::d(), p + q);
    std::copy(s.x().begin(), s.x().end(), out.coeff(0).begin());
    std::copy(s.u().begin(), s.u().end(), out.coeff(0).begin() + p);
    for (int c = 0; c < q; ++c) out.at(1, p + c) = scale * value[static_cast<std::size_t>(c)];
    return out;
}

FormOperator theta_form(Rep rep, const SymFormCoord& s)
{
    Vector point(s.x().begin(), s.x().end());
    point.insert(point.end(), s.u().begin(), s.u().end());
    return FormOperator{rep, s.p(), s.q(), s.degree(), std::move(point),
                        [rep, s](const TaylorElement& g) { return apply_form(rep, s, g); }};
}

std::vector<TaylorElement> canonical_form_probes(Rep rep, int p, int degree, std::span<const Rational> x)
{
    if (rep == Rep::dpow) {
        std::vector<TaylorElement> all = dpow_probes(p, degree, x);
        std::vector<TaylorElement> top;
        const std::size_t skip = all.size() - binomial(p + degree - 1, degree);
        top.assign(all.begin() + static_cast<std::ptrdiff_t>(skip), all.end());
        return top;
    }
    if (rep == Rep::dn) {
        const SmallObject obj = SmallObject::dn(degree);
        std::vector<TaylorElement> out{TaylorElement::constant(obj, x)};
        for (const MultiIndex& m : symmetric_multi_indices(p, degree)) {
            const IndexTuple t = to_index_tuple(m);
            for (unsigned mask = 1; mask < (1u << degree); ++mask) {
                TaylorElement g = line_probe(obj, x, subset_sum(p, t, mask));
                if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
            }
        }
        return out;
    }
    throw PreconditionError("symmetric forms use the dpow or dn representation");
}

SymFormCoord reconstruct(const FormOperator& form)
{
    const int p = form.p;
    const int q = form.q;
    const int n = form.degree;
    SymFormCoord s(p, q, n);
    std::copy_n(form.point.begin(), p, s.x().begin());
    std::copy_n(form.point.begin() + p, q, s.u().begin());
    const std::span<const Rational> x = std::span<const Rational>(form.point).first(static_cast<std::size_t>(p));
    if (form.rep == Rep::dpow) {
        const std::vector<TaylorElement> probes = canonical_form_probes(Rep::dpow, p, n, x);
        for (std::size_t m = 0; m < s.entry_count(); ++m) {
            const TaylorElement res = form(probes[m]);
            std::copy_n(res.coeff(1).begin() + p, q, s.entry(m).begin());
        }
        return s;
    }
    const auto indices = symmetric_multi_indices(p, n);
    for (std::size_t m = 0; m < indices.size(); ++m) {
        const Vector v = polarize(form, SmallObject::dn(n), p, q, x, to_index_tuple(indices[m]), 1);
        std::copy(v.begin(), v.end(), s.entry(m).begin());
    }
    return s;
}

FormOperator restrict_to_line(const FormOperator& cube)
{
    if (cube.rep != Rep::dpow) throw PreconditionError("restrict_to_line needs a dpow form");
    const ObjectMap sum = maps::sum(cube.degree);
    return FormOperator{Rep::dn, cube.p, cube.q, cube.degree, cube.point,
                        [cube, sum](const TaylorElement& g) { return cube(reparam(g, sum)); }};
}

AffineFamily output_family(Rep rep, int order)
{
    if (rep == Rep::dpow) return dpow_family(order);
    if (rep == Rep::dn) return dn_family(order);
    throw PreconditionError("only dpow and dn operators carry an affine structure on their outputs");
}

namespace {

void require_same_shape(const Operator& a, const Operator& b)
{
    if (a.rep != b.rep || a.p != b.p || a.q != b.q || a.order != b.order || a.point != b.point)
        throw PreconditionError("operators have different shapes or base points");
}

}  // namespace

FormOperator operator_minus(const Operator& plus, const Operator& minus)
{
    require_same_shape(plus, minus);
    const AffineFamily fam = output_family(plus.rep, plus.order);
    const TaylorElement at_rest = plus(TaylorElement::constant(plus.input_object(), plus.point));
    return FormOperator{plus.rep, plus.p, plus.q, plus.order, at_rest.base(),
                        [fam, plus, minus](const TaylorElement& g) { return strong_minus(fam, plus(g), minus(g)); }};
}

Operator operator_plus(const FormOperator& form, const Operator& op)
{
    if (form.rep != op.rep || form.p != op.p || form.q != op.q || form.degree != op.order)
        throw PreconditionError("form and operator have different shapes");
    const AffineFamily fam = output_family(op.rep, op.order);
    return Operator{op.rep, op.p, op.q, op.order, op.point,
                    [fam, form, op](const TaylorElement& g) { return strong_plus(fam, form(g), op(g)); }};
}

}  // namespace jetkit
