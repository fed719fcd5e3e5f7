#pragma once

// JSON documents for certificates, diagonals, factor listings and lemma
// sweeps, plus a plain-text rendering of the same documents. Every list is
// emitted in canonical order so identical inputs give identical bytes.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ainf/checker.hpp"
#include "ainf/combinatorics.hpp"
#include "ainf/polytope.hpp"

namespace ainf {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

json word_json(const TensorWord& w);
/// {"k": tensor length, "terms": [{"word": [[i,j],...], "coeff": c}, ...]}
json element_json(const Element& x);
json report_json(const RelationReport& r);
json face_json(const OrderedPartition& f);
/// A leaf is its label; an internal vertex is the array of its children.
json tree_json(const PlanarTree& t);

json certificate_json(const Certificate& c);
json perm_diagonal_json(int n, const DiagonalElement& d, bool chain_map);
json assoc_diagonal_json(int n, const AssocDiagonal& d, std::size_t degenerate_terms,
                         bool chain_map);
json factors_json(Prime p, const std::vector<StructureParams>& factors,
                  const std::vector<std::optional<Certificate>>& certificates);
json lemma_json(const LemmaSweep& s);

/// Human summary of any document produced above.
std::string render_text(const json& doc);

}  // namespace ainf
