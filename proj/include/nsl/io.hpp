#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "nsl/classify.hpp"
#include "nsl/duality.hpp"
#include "nsl/orbit.hpp"

namespace nsl::io {

/// "5,6,8" -> {5,6,8}. Whitespace tolerated. Throws ParseError with the
/// offending character offset.
std::vector<Int> parse_semigroup_spec(std::string_view text);

/// "0,1,3", "0@5", "-5", and the rendered forms "(0,2)+S", "5+S", "S".
/// An "@t" suffix translates by t.
RelativeIdeal parse_ideal_spec(std::string_view text, const SemigroupPtr& S);

/// "star,kdual" -> operator list.
std::vector<DualityOp> parse_ops(std::string_view text);

/// Generator notation: "S", "5+S", "(-5)+S", "(0,2)+S".
std::string ideal_text(const RelativeIdeal& I);
/// Explicit elements from min(I) through min(I) + F(S) + 1, then "...".
std::string ideal_elements_text(const RelativeIdeal& I);
std::string semigroup_text(const NumericalSemigroup& S);

nlohmann::json semigroup_json(const NumericalSemigroup& S);
nlohmann::json ideal_json(const RelativeIdeal& I);
nlohmann::json liaison_json(const LiaisonClassResult& r);
nlohmann::json orbit_json(const OrbitGraph& g);
nlohmann::json report_json(const ClassificationReport& r);

std::string liaison_text(const LiaisonClassResult& r);
std::string orbit_text(const OrbitGraph& g);
std::string orbit_dot(const OrbitGraph& g);
std::string report_text(const ClassificationReport& r);

/// A worked-example value as published, next to the value recomputed from
/// the definitions.
struct PublishedComparison {
    std::string quantity;
    std::string published;
    std::string computed;
    bool agrees = false;
};

/// Rows for the semigroups that have published worked examples
/// (<5,6,8> and <7,9,10,12>); empty for any other semigroup.
std::vector<PublishedComparison> published_comparison(const SemigroupPtr& S);

std::string comparison_text(const std::vector<PublishedComparison>& rows);
nlohmann::json comparison_json(const std::vector<PublishedComparison>& rows);

} // namespace nsl::io
