#include "jetkit/jets.hpp"

#include "jetkit/errors.hpp"

#include <algorithm>

namespace jetkit {

namespace {

// Offset of the first entry of degree k (k >= 1) in a blocks vector.
std::size_t block_start(int p, int q, int k)
{
    std::size_t start = 0;
    for (int d = 1; d < k; ++d) start += binomial(p + d - 1, d) * static_cast<std::size_t>(q);
    return start;
}

std::size_t position_in_degree(int p, const MultiIndex& exponents)
{
    const auto all = symmetric_multi_indices(p, total_degree(exponents));
    const auto it = std::find(all.begin(), all.end(), exponents);
    return static_cast<std::size_t>(it - all.begin());
}

void check_shape(int p, int q, int order)
{
    if (p < 1 || q < 0 || order < 0) throw PreconditionError("jet shape needs p >= 1, q >= 0, order >= 0");
}

}  // namespace

JetCoord::JetCoord(int p, int q, int order)
    : p_(p), q_(q), order_(order), x_(zeros(static_cast<std::size_t>(std::max(p, 0)))), u_(zeros(static_cast<std::size_t>(std::max(q, 0))))
{
    check_shape(p, q, order);
    blocks_ = zeros(block_start(p, q, order + 1));
}

std::size_t JetCoord::offset(const MultiIndex& exponents) const
{
    if (static_cast<int>(exponents.size()) != p_) throw PreconditionError("multi-index arity mismatch");
    const int k = total_degree(exponents);
    if (k < 1 || k > order_) throw PreconditionError("multi-index degree outside 1..order");
    return block_start(p_, q_, k) + position_in_degree(p_, exponents) * static_cast<std::size_t>(q_);
}

std::span<const Rational> JetCoord::derivative(const MultiIndex& exponents) const
{
    if (total_degree(exponents) == 0) return u_;
    return std::span<const Rational>(blocks_).subspan(offset(exponents), static_cast<std::size_t>(q_));
}

std::span<Rational> JetCoord::derivative(const MultiIndex& exponents)
{
    if (total_degree(exponents) == 0) return u_;
    return std::span<Rational>(blocks_).subspan(offset(exponents), static_cast<std::size_t>(q_));
}

Vector JetCoord::tuple() const
{
    Vector out = x_;
    out.insert(out.end(), u_.begin(), u_.end());
    out.insert(out.end(), blocks_.begin(), blocks_.end());
    return out;
}

JetCoord JetCoord::from_tuple(int p, int q, int order, std::span<const Rational> values)
{
    JetCoord j(p, q, order);
    if (values.size() != tuple_length(p, q, order)) throw PreconditionError("jet tuple has the wrong length");
    auto it = values.begin();
    std::copy_n(it, p, j.x_.begin());
    std::copy_n(it + p, q, j.u_.begin());
    std::copy(it + p + q, values.end(), j.blocks_.begin());
    return j;
}

std::size_t JetCoord::tuple_length(int p, int q, int order)
{
    check_shape(p, q, order);
    return static_cast<std::size_t>(p + q) + block_start(p, q, order + 1);
}

std::size_t JetCoord::tuple_position(int p, int q, int order, const MultiIndex& exponents)
{
    check_shape(p, q, order);
    if (static_cast<int>(exponents.size()) != p) throw PreconditionError("multi-index arity mismatch");
    const int k = total_degree(exponents);
    if (k > order) throw PreconditionError("multi-index degree exceeds the jet order");
    if (k == 0) return static_cast<std::size_t>(p);
    return static_cast<std::size_t>(p + q) + block_start(p, q, k) + position_in_degree(p, exponents) * static_cast<std::size_t>(q);
}

SymFormCoord::SymFormCoord(int p, int q, int degree)
    : p_(p), q_(q), degree_(degree), x_(zeros(static_cast<std::size_t>(std::max(p, 0)))), u_(zeros(static_cast<std::size_t>(std::max(q, 0))))
{
    check_shape(p, q, degree);
    if (degree < 1) throw PreconditionError("symmetric forms need degree >= 1");
    block_ = zeros(binomial(p + degree - 1, degree) * static_cast<std::size_t>(q));
}

std::size_t SymFormCoord::entry_count() const { return binomial(p_ + degree_ - 1, degree_); }

std::span<const Rational> SymFormCoord::entry(std::size_t m) const
{
    return std::span<const Rational>(block_).subspan(m * static_cast<std::size_t>(q_), static_cast<std::size_t>(q_));
}

std::span<Rational> SymFormCoord::entry(std::size_t m)
{
    return std::span<Rational>(block_).subspan(m * static_cast<std::size_t>(q_), static_cast<std::size_t>(q_));
}

std::span<const Rational> SymFormCoord::entry(const MultiIndex& exponents) const
{
    if (static_cast<int>(exponents.size()) != p_ || total_degree(exponents) != degree_)
        throw PreconditionError("symmetric form index has the wrong shape");
    return entry(position_in_degree(p_, exponents));
}

std::span<Rational> SymFormCoord::entry(const MultiIndex& exponents)
{
    if (static_cast<int>(exponents.size()) != p_ || total_degree(exponents) != degree_)
        throw PreconditionError("symmetric form index has the wrong shape");
    return entry(position_in_degree(p_, exponents));
}

Vector SymFormCoord::tuple() const
{
    Vector out = x_;
    out.insert(out.end(), u_.begin(), u_.end());
    out.insert(out.end(), block_.begin(), block_.end());
    return out;
}

SymFormCoord SymFormCoord::from_tuple(int p, int q, int degree, std::span<const Rational> values)
{
    SymFormCoord s(p, q, degree);
    if (values.size() != tuple_length(p, q, degree)) throw PreconditionError("symmetric form tuple has the wrong length");
    auto it = values.begin();
    std::copy_n(it, p, s.x_.begin());
    std::copy_n(it + p, q, s.u_.begin());
    std::copy(it + p + q, values.end(), s.block_.begin());
    return s;
}

std::size_t SymFormCoord::tuple_length(int p, int q, int degree)
{
    check_shape(p, q, degree);
    return static_cast<std::size_t>(p + q) + binomial(p + degree - 1, degree) * static_cast<std::size_t>(q);
}

JetCoord project(const JetCoord& j)
{
    if (j.order() < 1) throw PreconditionError("cannot project an order-0 jet");
    Vector t = j.tuple();
    t.resize(JetCoord::tuple_length(j.p(), j.q(), j.order() - 1));
    return JetCoord::from_tuple(j.p(), j.q(), j.order() - 1, t);
}

JetCoord extend_with_zero(const JetCoord& j)
{
    Vector t = j.tuple();
    t.resize(JetCoord::tuple_length(j.p(), j.q(), j.order() + 1), Rational(0));
    return JetCoord::from_tuple(j.p(), j.q(), j.order() + 1, t);
}

SymFormCoord jet_minus(const JetCoord& plus, const JetCoord& minus)
{
    if (plus.p() != minus.p() || plus.q() != minus.q() || plus.order() != minus.order())
        throw PreconditionError("jet_minus: jets have different shapes");
    if (plus.order() < 1) throw PreconditionError("jet_minus needs order >= 1");
    if (!(project(plus) == project(minus))) throw PreconditionError("jet_minus: projections differ");
    SymFormCoord s(plus.p(), plus.q(), plus.order());
    std::copy(plus.x().begin(), plus.x().end(), s.x().begin());
    std::copy(plus.u().begin(), plus.u().end(), s.u().begin());
    const auto indices = symmetric_multi_indices(plus.p(), plus.order());
    for (std::size_t m = 0; m < indices.size(); ++m) {
        const auto a = plus.derivative(indices[m]);
        const auto b = minus.derivative(indices[m]);
        for (int k = 0; k < plus.q(); ++k) s.entry(m)[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k)] - b[static_cast<std::size_t>(k)];
    }
    return s;
}

JetCoord jet_plus(const SymFormCoord& s, const JetCoord& j)
{
    if (s.p() != j.p() || s.q() != j.q() || s.degree() != j.order())
        throw PreconditionError("jet_plus: shapes differ");
    if (!std::equal(s.x().begin(), s.x().end(), j.x().begin()) || !std::equal(s.u().begin(), s.u().end(), j.u().begin()))
        throw PreconditionError("jet_plus: base points differ");
    JetCoord out = j;
    const auto indices = symmetric_multi_indices(j.p(), j.order());
    for (std::size_t m = 0; m < indices.size(); ++m) {
        auto dst = out.derivative(indices[m]);
        const auto add = s.entry(m);
        for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += add[k];
    }
    return out;
}

TaylorElement embed(const JetCoord& j)
{
    const SmallObject obj = SmallObject::dsym(j.p(), j.order());
    TaylorElement out(obj, j.p() + j.q());
    for (std::size_t b = 0; b < obj.dim(); ++b) {
        const MultiIndex& m = obj.basis()[b];
        if (b == 0) std::copy(j.x().begin(), j.x().end(), out.coeff(b).begin());
        const auto d = j.derivative(m);
        std::copy(d.begin(), d.end(), out.coeff(b).begin() + j.p());
    }
    return out;
}

TaylorElement embed(const SymFormCoord& s)
{
    const SmallObject obj = SmallObject::dmany(static_cast<int>(s.entry_count()));
    TaylorElement out(obj, s.p() + s.q());
    std::copy(s.x().begin(), s.x().end(), out.coeff(0).begin());
    std::copy(s.u().begin(), s.u().end(), out.coeff(0).begin() + s.p());
    for (std::size_t m = 0; m < s.entry_count(); ++m) {
        const auto e = s.entry(m);
        std::copy(e.begin(), e.end(), out.coeff(m + 1).begin() + s.p());
    }
    return out;
}

bool is_degenerate(const TaylorElement& g, int p)
{
    if (p > g.target_dim()) throw PreconditionError("is_degenerate: p exceeds the target dimension");
    for (std::size_t b = 1; b < g.object().dim(); ++b)
        for (int k = 0; k < p; ++k)
            if (g.at(b, k) != 0) return false;
    return true;
}

JetCoord extract_jet(const TaylorElement& g, int p)
{
    const SmallObject& obj = g.object();
    if (obj.kind() != SmallObject::Kind::Dsym || obj.first_param() != p)
        throw PreconditionError("extract_jet needs an element over Dsym(p, n)");
    if (!is_degenerate(g, p)) throw PreconditionError("extract_jet: x part is not degenerate");
    JetCoord j(p, g.target_dim() - p, obj.second_param());
    for (std::size_t b = 0; b < obj.dim(); ++b) {
        const auto c = g.coeff(b);
        if (b == 0) std::copy_n(c.begin(), p, j.x().begin());
        auto d = j.derivative(obj.basis()[b]);
        std::copy(c.begin() + p, c.end(), d.begin());
    }
    return j;
}

SymFormCoord extract_symform(const TaylorElement& g, int p, int degree)
{
    const SmallObject& obj = g.object();
    if (obj.kind() != SmallObject::Kind::Dmany) throw PreconditionError("extract_symform needs an element over Dmany(k)");
    if (!is_degenerate(g, p)) throw PreconditionError("extract_symform: x part is not degenerate");
    const int q = g.target_dim() - p;
    if (binomial(p + degree - 1, degree) != static_cast<std::uint64_t>(obj.first_param()))
        throw PreconditionError("extract_symform: Dmany size does not match the degree");
    SymFormCoord s(p, q, degree);
    std::copy_n(g.coeff(0).begin(), p, s.x().begin());
    std::copy(g.coeff(0).begin() + p, g.coeff(0).end(), s.u().begin());
    for (std::size_t m = 0; m < s.entry_count(); ++m) {
        const auto c = g.coeff(m + 1);
        std::copy(c.begin() + p, c.end(), s.entry(m).begin());
    }
    return s;
}

AffineFamily jet_family(int p, int order) { return dsym_family(p, order); }

}  // namespace jetkit
