#include "jetkit/taylor.hpp"

#include "jetkit/errors.hpp"
#include "jetkit/maps.hpp"

#include <algorithm>

namespace jetkit {

TaylorElement::TaylorElement(SmallObject obj, int target_dim)
    : obj_(std::move(obj)), dim_(target_dim), c_(zeros(obj_.dim() * static_cast<std::size_t>(target_dim)))
{
    if (target_dim < 0) throw PreconditionError("negative target dimension");
}

TaylorElement TaylorElement::constant(SmallObject obj, std::span<const Rational> point)
{
    TaylorElement out(std::move(obj), static_cast<int>(point.size()));
    std::copy(point.begin(), point.end(), out.coeff(0).begin());
    return out;
}

TaylorElement TaylorElement::from_components(SmallObject obj, const std::vector<WeilElement>& comps)
{
    TaylorElement out(std::move(obj), static_cast<int>(comps.size()));
    for (std::size_t k = 0; k < comps.size(); ++k) {
        if (!(comps[k].object() == out.obj_)) throw PreconditionError("component over the wrong object");
        for (std::size_t b = 0; b < out.obj_.dim(); ++b) out.at(b, static_cast<int>(k)) = comps[k][b];
    }
    return out;
}

std::span<const Rational> TaylorElement::coeff(std::size_t b) const
{
    return std::span<const Rational>(c_).subspan(b * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_));
}

std::span<Rational> TaylorElement::coeff(std::size_t b)
{
    return std::span<Rational>(c_).subspan(b * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_));
}

std::span<const Rational> TaylorElement::coeff_of(const MultiIndex& m) const
{
    const auto idx = obj_.index_of(m);
    if (!idx) throw PreconditionError("monomial is not in the basis of " + obj_.name());
    return coeff(*idx);
}

std::span<Rational> TaylorElement::coeff_of(const MultiIndex& m)
{
    const auto idx = obj_.index_of(m);
    if (!idx) throw PreconditionError("monomial is not in the basis of " + obj_.name());
    return coeff(*idx);
}

const Rational& TaylorElement::at(std::size_t b, int k) const { return c_[b * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(k)]; }
Rational& TaylorElement::at(std::size_t b, int k) { return c_[b * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(k)]; }

Vector TaylorElement::base() const
{
    const auto c = coeff(0);
    return Vector(c.begin(), c.end());
}

WeilElement TaylorElement::component(int k) const
{
    WeilElement out(obj_);
    for (std::size_t b = 0; b < obj_.dim(); ++b) out[b] = at(b, k);
    return out;
}

TaylorElement& TaylorElement::operator+=(const TaylorElement& o)
{
    if (!(obj_ == o.obj_) || dim_ != o.dim_) throw PreconditionError("adding elements of different shapes");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

TaylorElement& TaylorElement::operator-=(const TaylorElement& o)
{
    if (!(obj_ == o.obj_) || dim_ != o.dim_) throw PreconditionError("subtracting elements of different shapes");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

TaylorElement& TaylorElement::operator*=(const Rational& s)
{
    for (auto& c : c_) c *= s;
    return *this;
}

// ---------------------------------------------------------------------------
// PolyMap

PolyMap::PolyMap(int in_dim, int out_dim, std::vector<Component> comps)
    : in_(in_dim), out_(out_dim), comps_(std::move(comps))
{
}

PolyMap::PolyMap(int in_dim, int out_dim, const std::vector<std::vector<Term>>& terms) : in_(in_dim), out_(out_dim)
{
    if (static_cast<int>(terms.size()) != out_dim) throw PreconditionError("PolyMap needs one term list per output");
    for (const auto& list : terms) {
        Component comp;
        for (const auto& [coeff, exps] : list) {
            if (static_cast<int>(exps.size()) != in_dim) throw PreconditionError("PolyMap monomial arity mismatch");
            if (std::any_of(exps.begin(), exps.end(), [](int e) { return e < 0; }))
                throw PreconditionError("PolyMap exponent must be non-negative");
            comp[exps] += coeff;
        }
        std::erase_if(comp, [](const auto& kv) { return kv.second == 0; });
        comps_.push_back(std::move(comp));
    }
}

PolyMap PolyMap::identity(int dim) { return projection(dim, dim); }

PolyMap PolyMap::projection(int in_dim, int keep)
{
    std::vector<Component> comps;
    for (int k = 0; k < keep; ++k) {
        MultiIndex m(static_cast<std::size_t>(in_dim), 0);
        m.at(static_cast<std::size_t>(k)) = 1;
        comps.push_back(Component{{m, Rational(1)}});
    }
    return PolyMap(in_dim, keep, std::move(comps));
}

int PolyMap::degree() const
{
    int d = 0;
    for (const auto& comp : comps_)
        for (const auto& [m, c] : comp) d = std::max(d, total_degree(m));
    return d;
}

Vector PolyMap::operator()(std::span<const Rational> x) const
{
    if (static_cast<int>(x.size()) != in_) throw PreconditionError("PolyMap input dimension mismatch");
    Vector out;
    for (const auto& comp : comps_) {
        Rational value = 0;
        for (const auto& [m, c] : comp) {
            Rational term = c;
            for (std::size_t v = 0; v < m.size(); ++v) term *= power(x[v], m[v]);
            value += term;
        }
        out.push_back(value);
    }
    return out;
}

std::vector<WeilElement> PolyMap::apply(const std::vector<WeilElement>& x) const
{
    if (static_cast<int>(x.size()) != in_) throw PreconditionError("PolyMap input dimension mismatch");
    if (x.empty()) throw PreconditionError("PolyMap::apply needs at least one input");
    const SmallObject& obj = x.front().object();
    std::vector<WeilElement> out;
    for (const auto& comp : comps_) {
        WeilElement value(obj);
        for (const auto& [m, c] : comp) {
            WeilElement term(obj, c);
            for (std::size_t v = 0; v < m.size(); ++v)
                if (m[v] > 0) term = term * x[v].pow(m[v]);
            value += term;
        }
        out.push_back(std::move(value));
    }
    return out;
}

PolyMap compose(const PolyMap& f, const PolyMap& g)
{
    if (f.in_ != g.out_) throw PreconditionError("compose: dimension mismatch");
    // Expand f(g(x)) symbolically with plain maps of monomials.
    using Poly = PolyMap::Component;
    auto mul = [](const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& [ma, ca] : a)
            for (const auto& [mb, cb] : b) {
                MultiIndex m = ma;
                for (std::size_t v = 0; v < m.size(); ++v) m[v] += mb[v];
                out[m] += ca * cb;
            }
        std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
        return out;
    };
    const Poly one{{MultiIndex(static_cast<std::size_t>(g.in_), 0), Rational(1)}};
    std::vector<PolyMap::Component> comps;
    for (const auto& fc : f.comps_) {
        Poly total;
        for (const auto& [m, c] : fc) {
            Poly term = one;
            for (std::size_t v = 0; v < m.size(); ++v)
                for (int e = 0; e < m[v]; ++e) term = mul(term, g.comps_[v]);
            for (const auto& [tm, tc] : term) total[tm] += c * tc;
        }
        std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
        comps.push_back(std::move(total));
    }
    return PolyMap(g.in_, f.out_, std::move(comps));
}

// ---------------------------------------------------------------------------
// Operations on elements

TaylorElement pushforward(const PolyMap& f, const TaylorElement& g)
{
    if (f.in_dim() != g.target_dim()) throw PreconditionError("pushforward: dimension mismatch");
    std::vector<WeilElement> comps;
    for (int k = 0; k < g.target_dim(); ++k) comps.push_back(g.component(k));
    if (comps.empty()) {
        TaylorElement out(g.object(), f.out_dim());
        const Vector value = f(Vector{});
        std::copy(value.begin(), value.end(), out.coeff(0).begin());
        return out;
    }
    return TaylorElement::from_components(g.object(), f.apply(comps));
}

TaylorElement reparam(const TaylorElement& g, const ObjectMap& phi)
{
    if (!(phi.target() == g.object()))
        throw PreconditionError("reparam: element over " + g.object().name() + ", map into " + phi.target().name());
    const Matrix& mat = phi.induced_coeff_map();
    TaylorElement out(phi.source(), g.target_dim());
    for (std::size_t r = 0; r < mat.rows(); ++r)
        for (std::size_t c = 0; c < mat.cols(); ++c) {
            const Rational& w = mat(r, c);
            if (w == 0) continue;
            for (int k = 0; k < g.target_dim(); ++k) out.at(r, k) += w * g.at(c, k);
        }
    return out;
}

TaylorElement descend(const TaylorElement& g, const ObjectMap& phi)
{
    if (!(phi.source() == g.object()))
        throw PreconditionError("descend: element over " + g.object().name() + ", map from " + phi.source().name());
    Matrix rhs(g.object().dim(), static_cast<std::size_t>(g.target_dim()));
    for (std::size_t r = 0; r < rhs.rows(); ++r)
        for (int k = 0; k < g.target_dim(); ++k) rhs(r, static_cast<std::size_t>(k)) = g.at(r, k);
    const Solution sol = solve(phi.induced_coeff_map(), rhs);
    if (sol.status != SolveStatus::unique)
        throw InvariantError("descend: element does not come from " + phi.target().name());
    TaylorElement out(phi.target(), g.target_dim());
    for (std::size_t r = 0; r < phi.target().dim(); ++r)
        for (int k = 0; k < g.target_dim(); ++k) out.at(r, k) = sol.x(r, static_cast<std::size_t>(k));
    return out;
}

namespace {

int dpow_arity(const TaylorElement& g, const char* op)
{
    if (g.object().kind() != SmallObject::Kind::Dpow)
        throw PreconditionError(std::string(op) + " needs an element over Dpow(n), got " + g.object().name());
    return g.object().num_vars();
}

}  // namespace

TaylorElement scalar_action(const Rational& alpha, int i, const TaylorElement& g)
{
    const int n = dpow_arity(g, "scalar_action");
    if (i < 1 || i > n) throw PreconditionError("scalar_action: axis out of range");
    TaylorElement out = g;
    const auto& basis = g.object().basis();
    for (std::size_t b = 0; b < basis.size(); ++b)
        if (basis[b][static_cast<std::size_t>(i - 1)] > 0)
            for (auto& c : out.coeff(b)) c *= alpha;
    return out;
}

TaylorElement scale_parameter(const Rational& alpha, const TaylorElement& g)
{
    TaylorElement out = g;
    const auto& basis = g.object().basis();
    for (std::size_t b = 0; b < basis.size(); ++b) {
        const Rational factor = power(alpha, total_degree(basis[b]));
        for (auto& c : out.coeff(b)) c *= factor;
    }
    return out;
}

TaylorElement permute(const TaylorElement& g, const std::vector<int>& sigma)
{
    const int n = dpow_arity(g, "permute");
    if (static_cast<int>(sigma.size()) != n) throw PreconditionError("permute: permutation length mismatch");
    return reparam(g, maps::permutation(sigma));
}

TaylorElement degeneracy_s(int i, const TaylorElement& g)
{
    const int n = dpow_arity(g, "degeneracy_s");
    return reparam(g, maps::drop_axis(n + 1, i));
}

TaylorElement face_d(int i, const TaylorElement& g)
{
    const int n = dpow_arity(g, "face_d");
    return reparam(g, maps::insert_zero(n, i));
}

TaylorElement directional_minus(int i, const TaylorElement& plus, const TaylorElement& minus)
{
    const int n = dpow_arity(plus, "directional_minus");
    if (!(minus.object() == plus.object()) || minus.target_dim() != plus.target_dim())
        throw PreconditionError("directional_minus: operands have different shapes");
    if (i < 1 || i > n) throw PreconditionError("directional_minus: axis out of range");
    if (!(face_d(i, plus) == face_d(i, minus)))
        throw PreconditionError("directional_minus: operands differ away from axis " + std::to_string(i));
    TaylorElement out = plus;
    const auto& basis = plus.object().basis();
    for (std::size_t b = 0; b < basis.size(); ++b) {
        if (basis[b][static_cast<std::size_t>(i - 1)] == 0) continue;
        for (int k = 0; k < plus.target_dim(); ++k) out.at(b, k) = plus.at(b, k) - minus.at(b, k);
    }
    return out;
}

std::vector<TaylorElement> split_product(const TaylorElement& g)
{
    const SmallObject& obj = g.object();
    if (obj.kind() != SmallObject::Kind::Product) throw PreconditionError("split_product needs a product object");
    const SmallObject& a = obj.left();
    const SmallObject& b = obj.right();
    std::vector<TaylorElement> slices(b.dim(), TaylorElement(a, g.target_dim()));
    for (std::size_t idx = 0; idx < obj.dim(); ++idx) {
        const MultiIndex& m = obj.basis()[idx];
        const MultiIndex ma(m.begin(), m.begin() + a.num_vars());
        const MultiIndex mb(m.begin() + a.num_vars(), m.end());
        const std::size_t ia = *a.index_of(ma);
        const std::size_t ib = *b.index_of(mb);
        for (int k = 0; k < g.target_dim(); ++k) slices[ib].at(ia, k) = g.at(idx, k);
    }
    return slices;
}

TaylorElement join_product(const SmallObject& product, const std::vector<TaylorElement>& slices)
{
    if (product.kind() != SmallObject::Kind::Product) throw PreconditionError("join_product needs a product object");
    const SmallObject& a = product.left();
    const SmallObject& b = product.right();
    if (slices.size() != b.dim()) throw PreconditionError("join_product: slice count mismatch");
    const int dim = slices.empty() ? 0 : slices.front().target_dim();
    TaylorElement out(product, dim);
    for (std::size_t idx = 0; idx < product.dim(); ++idx) {
        const MultiIndex& m = product.basis()[idx];
        const std::size_t ia = *a.index_of(MultiIndex(m.begin(), m.begin() + a.num_vars()));
        const std::size_t ib = *b.index_of(MultiIndex(m.begin() + a.num_vars(), m.end()));
        if (!(slices[ib].object() == a) || slices[ib].target_dim() != dim)
            throw PreconditionError("join_product: slice has the wrong shape");
        for (int k = 0; k < dim; ++k) out.at(idx, k) = slices[ib].at(ia, k);
    }
    return out;
}

}  // namespace jetkit
