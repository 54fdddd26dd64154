#include "novikov/io.hpp"

#include <cstdint>
#include <cstdio>

namespace novikov {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::Parse, (path.empty() ? std::string("<root>") : path) + ": " + msg);
}

const Json& field(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

Index index_from_json(const Json& j, const std::string& path, Index bound) {
  if (!j.is_number_integer()) fail(path, "expected an integer index");
  auto v = j.get<long long>();
  if (v < 0 || v >= bound) fail(path, "index " + std::to_string(v) + " out of range [0, " + std::to_string(bound) + ")");
  return static_cast<Index>(v);
}

int parity_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    auto v = j.get<long long>();
    if (v == 0 || v == 1) return static_cast<int>(v);
  }
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "even") return 0;
    if (s == "odd") return 1;
  }
  fail(path, "expected parity 0/1 or \"even\"/\"odd\"");
}

// Same message as the constructor throws, but prefixed with the field path.
template <typename F>
auto with_path(const std::string& path, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw;
    fail(path, e.what());
  }
}

}  // namespace

PseudoEuclideanAlgebra AlgebraDocument::pseudo_euclidean() const {
  if (!form) throw Error(ErrorKind::Parse, "space: document has no gram, a form is required here");
  return PseudoEuclideanAlgebra(algebra, *form);
}

AlgebraDocument make_document(const PseudoEuclideanAlgebra& p, Json metadata) {
  return AlgebraDocument{kSchemaVersion, p.algebra, p.form, std::move(metadata)};
}

AlgebraDocument make_document(const SuperAlgebra& a, Json metadata) {
  return AlgebraDocument{kSchemaVersion, a, std::nullopt, std::move(metadata)};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
  }
}

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (!j.is_string()) fail(path, "expected a rational as a string (\"-3/2\") or an integer");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(rational_to_json(v(i)));
  return out;
}

Json to_json(const Mat& m) {
  Json out = Json::array();
  for (Index r = 0; r < m.rows(); ++r) out.push_back(to_json(Vec(m.row(r).transpose())));
  return out;
}

Vec vec_from_json(const Json& j, const std::string& path, Index size) {
  if (!j.is_array()) fail(path, "expected an array");
  if (static_cast<Index>(j.size()) != size)
    fail(path, "expected " + std::to_string(size) + " entries, got " + std::to_string(j.size()));
  Vec v(size);
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = rational_from_json(j[i], at(path, i));
  return v;
}

Mat mat_from_json(const Json& j, const std::string& path, Index rows, Index cols) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  if (static_cast<Index>(j.size()) != rows)
    fail(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  Mat m(rows, cols);
  for (std::size_t r = 0; r < j.size(); ++r) m.row(static_cast<Index>(r)) = vec_from_json(j[r], at(path, r), cols).transpose();
  return m;
}

Json space_to_json(const SuperSpace& s, const HomBilinearForm* form) {
  Json out;
  out["parity"] = s.parities();
  if (form) {
    out["gram"] = to_json(form->gram());
    out["form_parity"] = form->parity() ? "odd" : "even";
  }
  return out;
}

Json product_to_json(const SuperAlgebra& a) {
  Json out = Json::array();
  const Index n = a.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (!a.c(i, j, k).is_zero()) out.push_back(Json::array({i, j, k, rational_to_json(a.c(i, j, k))}));
  return out;
}

Json to_json(const AlgebraDocument& doc) {
  Json out;
  out["schema_version"] = doc.schema_version;
  out["space"] = space_to_json(doc.algebra.space(), doc.form ? &*doc.form : nullptr);
  out["product"] = product_to_json(doc.algebra);
  if (!doc.metadata.is_null()) out["metadata"] = doc.metadata;
  return out;
}

AlgebraDocument document_from_json(const Json& j) {
  if (!j.is_object()) fail("", "expected an object");
  AlgebraDocument doc;
  if (auto it = j.find("schema_version"); it != j.end()) {
    if (!it->is_number_integer() || it->get<long long>() != kSchemaVersion)
      fail("schema_version", "unsupported schema version (expected " + std::to_string(kSchemaVersion) + ")");
  }
  const Json& space = field(j, "", "space");
  const Json& parity = field(space, "space", "parity");
  if (!parity.is_array()) fail("space.parity", "expected an array");
  std::vector<int> par;
  for (std::size_t i = 0; i < parity.size(); ++i) par.push_back(parity_from_json(parity[i], at("space.parity", i)));
  SuperSpace s(par);
  const Index n = s.dim();

  // The gram and form parity may sit inside "space" or at top level.
  auto lookup = [&](const char* key) -> std::pair<const Json*, std::string> {
    if (auto it = space.find(key); it != space.end()) return {&*it, join("space", key)};
    if (auto it = j.find(key); it != j.end()) return {&*it, key};
    return {nullptr, {}};
  };
  auto [gram, gram_path] = lookup("gram");
  auto [fp, fp_path] = lookup("form_parity");
  if (gram) {
    Mat g = mat_from_json(*gram, gram_path, n, n);
    int form_parity = fp ? parity_from_json(*fp, fp_path) : 0;
    // A singular gram is a mathematical failure, not a malformed document.
    if (auto v = check_form(s, g, form_parity); v && v->invariant == "non-degeneracy")
      throw Error(ErrorKind::SingularForm, gram_path + ": " + v->message());
    doc.form = with_path(gram_path, [&] { return HomBilinearForm(s, g, form_parity); });
  } else if (fp) {
    fail(fp_path, "form_parity given without a gram");
  }

  ProductTable table(s);
  const Json& prod = field(j, "", "product");
  if (!prod.is_array()) fail("product", "expected an array of [i, j, k, coeff]");
  for (std::size_t t = 0; t < prod.size(); ++t) {
    const std::string p = at("product", t);
    const Json& e = prod[t];
    if (!e.is_array() || e.size() != 4) fail(p, "expected [i, j, k, coeff]");
    Index a = index_from_json(e[0], at(p, 0), n);
    Index b = index_from_json(e[1], at(p, 1), n);
    Index c = index_from_json(e[2], at(p, 2), n);
    table.add(a, b, c, rational_from_json(e[3], at(p, 3)));
  }
  doc.algebra = with_path("product", [&] { return table.build(); });
  if (auto it = j.find("metadata"); it != j.end()) doc.metadata = *it;
  return doc;
}

AlgebraDocument parse_document(std::string_view text) { return document_from_json(parse_json(text)); }

std::string emit(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const ExtensionData& d) {
  Json out;
  out["kind"] = to_string(d.kind);
  out["D"] = to_json(d.D);
  out["xi"] = to_json(d.xi);
  out["b0"] = to_json(d.b0);
  out["c0"] = d.c0 ? to_json(*d.c0) : Json(nullptr);
  return out;
}

ExtensionData extension_data_from_json(const Json& j, const PseudoEuclideanAlgebra& base) {
  if (!j.is_object()) fail("", "expected an object");
  const Json& kind = field(j, "", "kind");
  if (!kind.is_string()) fail("kind", "expected a string");
  ExtensionData d;
  d.base = base;
  d.kind = with_path("kind", [&] { return extension_kind_from_string(kind.get<std::string>()); });
  if ((e_parity(d.kind) ^ extension_parity(d.kind)) != base.form.parity())
    fail("kind", std::string(to_string(d.kind)) + " does not match the base form parity");
  const Index n = base.dim();
  d.D = mat_from_json(field(j, "", "D"), "D", n, n);
  d.xi = mat_from_json(field(j, "", "xi"), "xi", n, n);
  d.b0 = vec_from_json(field(j, "", "b0"), "b0", n);
  if (auto it = j.find("c0"); it != j.end() && !it->is_null()) d.c0 = vec_from_json(*it, "c0", n);
  if (extension_parity(d.kind) == 1 && !d.c0) fail("c0", "odd extensions need c0");
  if (extension_parity(d.kind) == 0 && d.c0) fail("c0", "even extensions take no c0");
  return d;
}

Json to_json(const IdentityReport& r) {
  Json out;
  out["name"] = r.name;
  out["pass"] = r.pass;
  if (!r.detail.empty()) out["detail"] = r.detail;
  if (r.witness) {
    Json w;
    w["basis"] = Json::array();
    for (auto i : r.witness->basis) w["basis"].push_back(i);
    w["residual"] = to_json(r.witness->residual);
    out["witness"] = w;
  }
  if (!r.parts.empty()) {
    out["parts"] = Json::array();
    for (const auto& p : r.parts) out["parts"].push_back(to_json(p));
  }
  return out;
}

Json to_json(const Fingerprint& f) {
  Json out;
  out["sdim"] = std::to_string(f.even) + "|" + std::to_string(f.odd);
  out["form_parity"] = f.form_parity ? "odd" : "even";
  out["dim_product"] = f.dim_product;
  out["degenerate"] = f.degenerate ? Json(*f.degenerate) : Json(nullptr);
  out["nilpotent"] = f.nilpotent;
  out["dim_center_minus"] = f.dim_center_minus;
  out["dim_right_normalizer"] = f.dim_right_normalizer;
  out["trace_rank"] = f.trace_rank;
  out["trace_discriminant"] = f.trace_discriminant;
  return out;
}

Json to_json(const Basis& b) {
  Json out = Json::array();
  for (const auto& v : b) out.push_back(to_json(v));
  return out;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace novikov
