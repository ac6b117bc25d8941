#include "jetkit/random.hpp"

#include "jetkit/errors.hpp"

#include <algorithm>
#include <numeric>

namespace jetkit {

namespace {

std::uint64_t fnv1a(std::string_view text)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

Rng Rng::for_trial(std::uint64_t seed, std::string_view stream, std::uint64_t trial)
{
    const std::uint64_t h = fnv1a(stream);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    Rng rng(0);
    rng.engine_.seed(seq);
    return rng;
}

int Rng::uniform(int lo, int hi)
{
    if (hi < lo) throw PreconditionError("Rng::uniform: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
}

Rational Rng::rational()
{
    Rational r(uniform(-6, 6), uniform(1, 5));
    r.canonicalize();
    return r;
}

Rational Rng::nonzero_rational()
{
    for (;;) {
        Rational r = rational();
        if (r != 0) return r;
    }
}

Vector Rng::vector(std::size_t n)
{
    Vector v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(rational());
    return v;
}

std::vector<int> Rng::permutation(int n)
{
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(uniform(0, i))]);
    return sigma;
}

std::vector<int> Rng::composition(int n, int m)
{
    if (m < 1 || m > n) throw PreconditionError("Rng::composition needs 1 <= m <= n");
    // Choose m - 1 cut points among the n - 1 gaps.
    std::vector<int> gaps(static_cast<std::size_t>(n - 1));
    std::iota(gaps.begin(), gaps.end(), 1);
    for (int i = 0; i < m - 1; ++i)
        std::swap(gaps[static_cast<std::size_t>(i)], gaps[static_cast<std::size_t>(uniform(i, n - 2))]);
    std::vector<int> cuts(gaps.begin(), gaps.begin() + (m - 1));
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(n);
    std::vector<int> parts;
    int prev = 0;
    for (int c : cuts) {
        parts.push_back(c - prev);
        prev = c;
    }
    return parts;
}

TaylorElement random_element(Rng& rng, const SmallObject& obj, int dim, std::optional<std::span<const Rational>> base)
{
    TaylorElement g(obj, dim);
    for (std::size_t b = 0; b < obj.dim(); ++b)
        for (int k = 0; k < dim; ++k) g.at(b, k) = rng.rational();
    if (base) {
        if (static_cast<int>(base->size()) != dim) throw PreconditionError("random_element: base has the wrong dimension");
        std::copy(base->begin(), base->end(), g.coeff(0).begin());
    }
    return g;
}

JetCoord random_jet(Rng& rng, int p, int q, int order)
{
    const Vector t = rng.vector(JetCoord::tuple_length(p, q, order));
    return JetCoord::from_tuple(p, q, order, t);
}

JetCoord random_jet_over(Rng& rng, const JetCoord& lower)
{
    JetCoord j = extend_with_zero(lower);
    for (const MultiIndex& m : symmetric_multi_indices(j.p(), j.order()))
        for (Rational& v : j.derivative(m)) v = rng.rational();
    return j;
}

SymFormCoord random_symform(Rng& rng, int p, int q, int degree)
{
    return SymFormCoord::from_tuple(p, q, degree, rng.vector(SymFormCoord::tuple_length(p, q, degree)));
}

SymFormCoord random_symform_at(Rng& rng, const JetCoord& j)
{
    SymFormCoord s = random_symform(rng, j.p(), j.q(), j.order());
    std::copy(j.x().begin(), j.x().end(), s.x().begin());
    std::copy(j.u().begin(), j.u().end(), s.u().begin());
    return s;
}

IteratedJet2 random_iterated_jet(Rng& rng, int p, int q)
{
    const std::size_t len = static_cast<std::size_t>(p + q + (2 * p + p * p) * q);
    return iterated_from_tuple(p, q, rng.vector(len));
}

PolyMap random_polymap(Rng& rng, int in_dim, int out_dim, int max_degree, int terms)
{
    std::vector<std::vector<PolyMap::Term>> comps(static_cast<std::size_t>(out_dim));
    for (auto& comp : comps) {
        const int count = rng.uniform(1, terms);
        for (int t = 0; t < count; ++t) {
            MultiIndex m(static_cast<std::size_t>(in_dim), 0);
            const int deg = rng.uniform(0, max_degree);
            for (int d = 0; d < deg && in_dim > 0; ++d) ++m[static_cast<std::size_t>(rng.uniform(0, in_dim - 1))];
            comp.emplace_back(rng.nonzero_rational(), std::move(m));
        }
    }
    return PolyMap(in_dim, out_dim, comps);
}

std::optional<ObjectMap> random_object_map(Rng& rng, const SmallObject& source, const SmallObject& target, int tries)
{
    const auto& basis = source.basis();
    for (int attempt = 0; attempt < tries; ++attempt) {
        std::vector<IntPoly> comps;
        for (int v = 0; v < target.num_vars(); ++v) {
            IntPoly poly;
            for (std::size_t b = 1; b < basis.size(); ++b) {
                // Sparse: roughly one in three monomials gets a coefficient.
                if (rng.uniform(0, 2) != 0) continue;
                const int c = rng.uniform(-2, 2);
                if (c != 0) poly[basis[b]] = c;
            }
            comps.push_back(std::move(poly));
        }
        try {
            return ObjectMap(source, target, std::move(comps));
        } catch (const PreconditionError&) {
        }
    }
    return std::nullopt;
}

TaylorElement random_agreeing(Rng& rng, const AffineFamily& fam, const TaylorElement& g)
{
    if (!(g.object() == fam.side)) throw PreconditionError("random_agreeing: element is not over the family's side");
    const SmallObject& corner = fam.minus.corner_to_left.source();
    TaylorElement out = g;
    for (std::size_t b = 0; b < fam.side.dim(); ++b) {
        if (corner.survives(fam.side.basis()[b])) continue;
        for (int k = 0; k < g.target_dim(); ++k) out.at(b, k) = rng.rational();
    }
    return out;
}

}  // namespace jetkit
