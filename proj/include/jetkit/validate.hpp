#pragma once

#include "jetkit/approaches.hpp"
#include "jetkit/json_io.hpp"
#include "jetkit/random.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace jetkit {

struct PropertyResult {
    std::string name;
    std::string reference;  // the law being checked, in words
    bool pass = true;
    std::optional<Json> counterexample;
};

struct Report {
    std::string suite;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<PropertyResult> properties;

    [[nodiscard]] bool all_pass() const;
    // Appends the properties of `other`; the result does not depend on how
    // a list of reports is grouped.
    void merge(const Report& other);
};

[[nodiscard]] Json to_json(const Report& r);

// One randomized trial; returns a counterexample payload on failure.
using Trial = std::function<std::optional<Json>(Rng&)>;

// Runs `trials` independent trials with streams derived from (seed, name,
// trial index) and stops at the first failure. Exceptions count as failures.
[[nodiscard]] PropertyResult run_property(const std::string& name, const std::string& reference, int trials,
                                          std::uint64_t seed, const Trial& trial);

// (f (x) id_{W_{D_m}})(g) for g over Product(A, Dn(m)), where every output
// coefficient of f is a polynomial of degree <= `degree` in the input
// coefficients: f is sampled along the parameter and interpolated exactly.
[[nodiscard]] TaylorElement with_parameter(const std::function<TaylorElement(const TaylorElement&)>& f,
                                           const TaylorElement& g, int degree);

// Conditions of a Dpow(n)-tangential operator: projection, axis scaling,
// parameter squares for m = 1, 2, permutations, compatibility of the
// contraction d_{n-1} d_n with projection, block substitutions, and the
// square relating projection with the passage to Dn. The projected
// operators are checked recursively.
[[nodiscard]] Report validate_pseudotangential(const Operator& op, int trials, std::uint64_t seed);

// Conditions of a Dn(n)-tangential operator: projection, homogeneity along
// the curve parameter, the parameter square and power substitutions.
[[nodiscard]] Report validate_line_tangential(const Operator& op, int trials, std::uint64_t seed);

// Laws of a symmetric form: vertical values, homogeneity, parameter square,
// and vanishing on degenerate inputs; for dpow also linearity in each axis
// and permutation invariance.
[[nodiscard]] Report validate_form(const FormOperator& form, int trials, std::uint64_t seed);

}  // namespace jetkit
