#ifndef HOPFIND_DOCUMENT_HPP
#define HOPFIND_DOCUMENT_HPP

// JSON interchange. Algebra documents:
//   {"schema": "hopf-v1", "p": .., "dim": .., "labels": [..],
//    "mult": [[i, j, k, c], ..], "unit": [..], "comult": [[k, i, j, c], ..],
//    "counit": [..], "antipode": [[i, j, c], ..], "degrees": [..]?}
// Constructor documents are objects with a "kind" key: "group", "function",
// "lie", "h_delta", "dual", "tensor", "op", "cop". Wherever a subdocument is
// expected a string may be given instead; it names a file relative to the
// including document.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopfind/constructors.hpp"
#include "hopfind/filtration.hpp"
#include "hopfind/indicators.hpp"

namespace hopfind {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "hopf-v1";

struct LoadedAlgebra {
  HopfAlgebraData algebra;
  std::optional<std::vector<std::size_t>> degrees;
  std::string name;
};

// Every parse failure is reported as ParseError.
Json parse_json(const std::string& text);
Json read_json_file(const std::filesystem::path& path);

Json algebra_to_json(const HopfAlgebraData& h, const std::vector<std::size_t>* degrees = nullptr);
LoadedAlgebra algebra_from_json(const Json& doc);

Json group_to_json(const GroupTable& g);
GroupTable group_from_json(const Json& doc);

Json lie_to_json(const RestrictedLieData& lie);
RestrictedLieData lie_from_json(const Json& doc);

// Accepts an algebra document or a constructor document. Relative include
// paths are resolved against base_dir.
LoadedAlgebra build_algebra(const Json& doc, const std::filesystem::path& base_dir);
LoadedAlgebra load_algebra(const std::filesystem::path& path);

Json report_to_json(const IndicatorReport& r);
Json filtration_to_json(const Filtration& f);
Json radical_to_json(const Subspace& j);

// One top-level key per line, values compact. Sparse arrays come out in the
// canonical index order produced by algebra_to_json, so equal algebras give
// byte-identical documents.
std::string format_document(const Json& doc);

}  // namespace hopfind

#endif
