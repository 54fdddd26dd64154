#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>

#include "novikov/catalog.hpp"
#include "novikov/extensions.hpp"

namespace novikov {

// Default object type keeps keys sorted, which gives a stable emit order.
using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// An algebra with an optional form. The same shape carries a Lie bracket (levi-civita input)
// or the algebra H and its form Ω (tensor input).
struct AlgebraDocument {
  int schema_version = kSchemaVersion;
  SuperAlgebra algebra;
  std::optional<HomBilinearForm> form;
  Json metadata;  // null when absent

  // Throws Parse when there is no form.
  PseudoEuclideanAlgebra pseudo_euclidean() const;

  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

AlgebraDocument make_document(const PseudoEuclideanAlgebra& p, Json metadata = nullptr);
AlgebraDocument make_document(const SuperAlgebra& a, Json metadata = nullptr);

// Syntax errors report line and column, schema errors the JSON path ("space.gram[1][0]").
Json parse_json(std::string_view text);
AlgebraDocument document_from_json(const Json& j);
AlgebraDocument parse_document(std::string_view text);
Json to_json(const AlgebraDocument& doc);
// Two-space indent, trailing newline.
std::string emit(const Json& j);

Json rational_to_json(const Rational& r);
// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const Json& j, const std::string& path);
Json to_json(const Vec& v);
Json to_json(const Mat& m);  // list of rows
Vec vec_from_json(const Json& j, const std::string& path, Index size);
Mat mat_from_json(const Json& j, const std::string& path, Index rows, Index cols);

Json space_to_json(const SuperSpace& s, const HomBilinearForm* form);
Json product_to_json(const SuperAlgebra& a);

Json to_json(const ExtensionData& d);  // base not included
ExtensionData extension_data_from_json(const Json& j, const PseudoEuclideanAlgebra& base);

Json to_json(const IdentityReport& r);
Json to_json(const Fingerprint& f);
Json to_json(const Basis& b);

// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace novikov
