#pragma once

#include "jetkit/approaches.hpp"
#include "jetkit/holonomy.hpp"
#include "jetkit/jets.hpp"
#include "jetkit/taylor.hpp"

#include <json.hpp>

#include <optional>

// JSON encodings. Rationals are "p/q" strings; with Format::decimal set they
// are rendered as rounded decimals for reading, and such output cannot be
// parsed back. Parsers throw SchemaError on malformed input.
namespace jetkit {

using Json = nlohmann::ordered_json;

struct Format {
    std::optional<int> decimal;
};

[[nodiscard]] Json to_json(const Rational& r, const Format& fmt = {});
[[nodiscard]] Json to_json(std::span<const Rational> v, const Format& fmt = {});
[[nodiscard]] Rational rational_from_json(const Json& j);
[[nodiscard]] Vector vector_from_json(const Json& j);

// {"object", "target_dim", "coeffs": [[monomial, values], ...]}, one pair per
// basis monomial in basis order. Parsing treats absent monomials as zero.
[[nodiscard]] Json to_json(const TaylorElement& g, const Format& fmt = {});
[[nodiscard]] TaylorElement taylor_from_json(const Json& j);

// {"p", "q", "order", "x", "u", "derivatives": [{"index": [1,1,2], "value": [...]}]}
// with 1-based non-decreasing index tuples, degree-major and lexicographic
// within a degree. Parsing treats absent derivatives as zero.
[[nodiscard]] Json to_json(const JetCoord& j, const Format& fmt = {});
[[nodiscard]] JetCoord jet_from_json(const Json& j);

// {"p", "q", "degree", "x", "u", "entries": [{"index": [...], "value": [...]}]}.
[[nodiscard]] Json to_json(const SymFormCoord& s, const Format& fmt = {});
[[nodiscard]] SymFormCoord symform_from_json(const Json& j);

[[nodiscard]] Json to_json(const IteratedJet2& j, const Format& fmt = {});

// {"rep", "p", "q", "order", "point", "entries": [{"input", "output"}]}.
[[nodiscard]] Json to_json(const OperatorTable& t, const Format& fmt = {});
[[nodiscard]] OperatorTable table_from_json(const Json& j);

// {"error": {"kind", "message"}}.
[[nodiscard]] Json error_json(std::string_view kind, std::string_view message);

}  // namespace jetkit
