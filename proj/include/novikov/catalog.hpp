#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "novikov/metric.hpp"

namespace novikov {

using Params = std::map<std::string, Rational>;

std::string params_string(const Params& p);

enum class ParamDomain { any, nonzero, sign };

struct ParamSpec {
  std::string name;
  ParamDomain domain = ParamDomain::any;
  std::vector<Rational> grid;
};

// Where the classification places a family.
enum class Section { nondegenerate, degenerate };
const char* to_string(Section s);

struct FamilySpec {
  std::string id;     // "A4_2:form1"
  std::string group;  // "A4_2"
  int even = 0, odd = 0;
  int form_parity = 0;
  std::vector<std::string> basis;
  std::vector<ParamSpec> params;
  Section section = Section::nondegenerate;
  // A•A degenerate; nullopt when the product vanishes at these parameters.
  std::function<std::optional<bool>(const Params&)> product_degenerate;
  std::function<bool(const Params&)> nilpotent;
  std::function<PseudoEuclideanAlgebra(const Params&)> build;
  // Points outside the declared domain that are run and reported but not asserted.
  std::vector<Params> boundary;
};

const std::vector<FamilySpec>& catalog_families();
// Exact id, or a group name ("A4_2") expanding to its variants. Throws UnknownFamily.
std::vector<const FamilySpec*> lookup_family(const std::string& id);
// Checks the domain of every parameter. Throws BadParams.
PseudoEuclideanAlgebra instantiate(const FamilySpec& f, const Params& params);
PseudoEuclideanAlgebra instantiate(const std::string& id, const Params& params);
std::vector<Params> default_grid(const FamilySpec& f);
// Cartesian product of per-parameter value lists, in declaration order.
std::vector<Params> grid_product(const FamilySpec& f, const std::map<std::string, std::vector<Rational>>& values);

struct Instance {
  const FamilySpec* family = nullptr;
  Params params;
  bool boundary = false;
};
// Every default grid point of every family, in catalog order.
std::vector<Instance> catalog_instances(bool include_boundary = false);

struct Fingerprint {
  int even = 0, odd = 0;
  int form_parity = 0;
  int dim_product = 0;
  std::optional<bool> degenerate;  // n/a for a zero product
  bool nilpotent = false;
  int dim_center_minus = 0;
  int dim_right_normalizer = 0;
  // Rank and square class (square-free integer) of the trace form tr(L_u L_v).
  int trace_rank = 0;
  std::string trace_discriminant;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};
Fingerprint fingerprint(const PseudoEuclideanAlgebra& p);
std::string to_string(const Fingerprint& f);

// A•A meets its orthogonal complement.
bool product_is_degenerate(const PseudoEuclideanAlgebra& p);
bool is_nilpotent(const SuperAlgebra& a);

struct InstanceResult {
  std::string family;
  Params params;
  bool boundary = false;
  IdentityReport suite;
  bool flags_ok = true;
  std::string flag_detail;
  bool pass() const { return suite.pass && flags_ok; }
};

struct VerifyReport {
  std::vector<InstanceResult> results;
  int asserted() const;
  int failures() const;
  bool pass() const { return failures() == 0; }
};

// Full suite plus declared-flag cross-check at each point; jobs <= 1 runs inline.
VerifyReport verify_instances(const std::vector<Instance>& instances, int jobs);
VerifyReport verify_family(const std::string& id, const std::vector<Params>& grid, int jobs);

struct ScanOptions {
  SuperSpace space;
  int form_parity = 0;
  std::vector<Rational> grid{Rational(-1), Rational(0), Rational(1)};
  long long budget = 5'000'000;  // tensors x forms
};

struct ScanHit {
  PseudoEuclideanAlgebra algebra;
};

struct ScanReport {
  long long tensors = 0;
  long long forms = 0;
  long long novikov_tensors = 0;
  long long pseudo_euclidean_pairs = 0;  // nontrivial product, all checks pass
  std::vector<ScanHit> degenerate_hits;
};

// Throws GridTooLarge when tensors x forms exceeds the budget.
ScanReport nonexistence_scan(const ScanOptions& opt);

}  // namespace novikov
