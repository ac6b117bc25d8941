#pragma once

#include "jetkit/json_io.hpp"
#include "jetkit/rational.hpp"
#include "jetkit/taylor.hpp"

#include <doctest.h>

#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>

namespace jetkit {

// Readable failure messages for the value types compared in tests.
inline std::ostream& operator<<(std::ostream& os, const TaylorElement& g) { return os << to_json(g).dump(); }
inline std::ostream& operator<<(std::ostream& os, const JetCoord& j) { return os << to_json(j).dump(); }
inline std::ostream& operator<<(std::ostream& os, const SymFormCoord& s) { return os << to_json(s).dump(); }

}  // namespace jetkit

namespace testing {

inline jetkit::Rational q(const char* text) { return jetkit::parse_rational(text); }

// An element given as (monomial, values) pairs; unlisted monomials are zero.
inline jetkit::TaylorElement element(const jetkit::SmallObject& obj, int dim,
                                     std::initializer_list<std::pair<jetkit::MultiIndex, jetkit::Vector>> coeffs)
{
    jetkit::TaylorElement out(obj, dim);
    for (const auto& [m, values] : coeffs) {
        auto dst = out.coeff_of(m);
        REQUIRE(dst.size() == values.size());
        std::copy(values.begin(), values.end(), dst.begin());
    }
    return out;
}

}  // namespace testing
