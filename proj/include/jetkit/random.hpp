#pragma once

#include "jetkit/approaches.hpp"
#include "jetkit/holonomy.hpp"
#include "jetkit/jets.hpp"
#include "jetkit/taylor.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace jetkit {

// Deterministic source of small random inputs. Bounded integers are drawn
// by reduction so that streams agree across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    // Independent stream for one trial of one named property.
    static Rng for_trial(std::uint64_t seed, std::string_view stream, std::uint64_t trial);

    std::uint64_t next() { return engine_(); }
    // Uniform on [lo, hi].
    int uniform(int lo, int hi);
    bool coin() { return (next() & 1u) != 0; }
    // Numerator in [-6, 6], denominator in [1, 5].
    Rational rational();
    Rational nonzero_rational();
    Vector vector(std::size_t n);
    // A uniformly random 0-based permutation of n symbols.
    std::vector<int> permutation(int n);
    // A random composition of n into m positive parts.
    std::vector<int> composition(int n, int m);

private:
    std::mt19937_64 engine_;
};

// Random coefficients everywhere; the base point is `base` when given.
[[nodiscard]] TaylorElement random_element(Rng& rng, const SmallObject& obj, int dim,
                                           std::optional<std::span<const Rational>> base = std::nullopt);
[[nodiscard]] JetCoord random_jet(Rng& rng, int p, int q, int order);
// A jet of order lower.order() + 1 projecting to `lower`.
[[nodiscard]] JetCoord random_jet_over(Rng& rng, const JetCoord& lower);
[[nodiscard]] SymFormCoord random_symform(Rng& rng, int p, int q, int degree);
// A form based at the (x, u) of j.
[[nodiscard]] SymFormCoord random_symform_at(Rng& rng, const JetCoord& j);
[[nodiscard]] IteratedJet2 random_iterated_jet(Rng& rng, int p, int q);
// Polynomial map with small rational coefficients with at most `terms` terms per component.
[[nodiscard]] PolyMap random_polymap(Rng& rng, int in_dim, int out_dim, int max_degree, int terms = 3);
// Rejection sampling over small integer polynomials; nullopt after `tries`.
[[nodiscard]] std::optional<ObjectMap> random_object_map(Rng& rng, const SmallObject& source, const SmallObject& target,
                                                         int tries = 200);
// An element over fam.side agreeing with g on the corner: the monomials
// outside the corner are redrawn.
[[nodiscard]] TaylorElement random_agreeing(Rng& rng, const AffineFamily& fam, const TaylorElement& g);

}  // namespace jetkit
