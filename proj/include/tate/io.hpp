#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tate/abelian.hpp"
#include "tate/verify.hpp"

namespace tate {

using Json = nlohmann::json;

struct FormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Rationals as "num/den" strings, residues as integers.
Json to_json(const Scalar& s);
Scalar scalar_from_json(Field f, const Json& j);

// {"name", "order", "table"}
Json to_json(const FiniteGroup& G);
FiniteGroup group_from_json(const Json& j);

// Classes with representatives, sizes, centralizers and coset representatives.
Json conjugacy_json(const ConjugacyData& cd);

// {"kind": "tate", "field", "degree", "terms": [...]}. Chains: {"key": [g_0..g_s], "coeff"}.
// Cochains group terms by tuple and nest the kG value: {"key": [g_1..g_m], "value": [{"element", "coeff"}]}.
Json to_json(const TateElement& e);
// {"kind": "decomposed", "field", "degree", "terms": [{"class", "key": [h..], "coeff"}]}
Json to_json(const DecomposedElement& e);
// {"kind": "abelian", "field", "degree", "terms": [{"key": [...], "coeff"}]}
Json to_json(const AbelianCochain& e);

// The field comes from the document when present, otherwise from the argument.
// Keys are validated against the group.
TateElement tate_from_json(const FiniteGroup& G, const Json& j, Field fallback);
DecomposedElement decomposed_from_json(const ConjugacyData& cd, const Json& j, Field fallback);
AbelianCochain abelian_from_json(const FiniteGroup& G, const Json& j, Field fallback);

// "tate", "decomposed" or "abelian"; inferred from "class" entries when "kind" is absent.
std::string element_kind(const Json& j);

struct ReportFormat {
    bool timing = false;  // seconds are left out unless asked for, so reports stay reproducible
};
Json to_json(const Report& r, ReportFormat fmt = {});
Json to_json(const std::vector<Report>& rs, ReportFormat fmt = {});

}  // namespace tate
