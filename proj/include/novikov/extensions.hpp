#pragma once

#include <cstdint>

#include "novikov/metric.hpp"

namespace novikov {

// even/odd extension of an even/odd-form base
enum class ExtensionKind { even_ext_even_form, odd_ext_even_form, even_ext_odd_form, odd_ext_odd_form };
const char* to_string(ExtensionKind k);
ExtensionKind extension_kind_from_string(const std::string& s);  // throws Parse
ExtensionKind extension_kind(int extension_parity, int form_parity);
int extension_parity(ExtensionKind k);  // parity of D, ξ and d
int e_parity(ExtensionKind k);

struct ExtensionData {
  PseudoEuclideanAlgebra base;
  ExtensionKind kind = ExtensionKind::even_ext_even_form;
  Mat D;
  Mat xi;
  Vec b0;
  std::optional<Vec> c0;  // odd extensions only
};
bool operator==(const ExtensionData& a, const ExtensionData& b);

// Zero maps and vectors of the right shape.
ExtensionData zero_extension_data(const PseudoEuclideanAlgebra& base, ExtensionKind kind);

// The three systems. Throw ParityMismatch on badly graded D, ξ, b0, c0 and ShapeMismatch on sizes.
// "D antisymmetric" is reported as one more named equation.
IdentityReport check_even_admissible(const PseudoEuclideanAlgebra& base, const Mat& D, const Mat& xi, const Vec& b0);
IdentityReport check_odd_admissible_even_form(const PseudoEuclideanAlgebra& base, const Mat& D, const Mat& xi, const Vec& b0,
                                              const Vec& c0);
IdentityReport check_odd_admissible_odd_form(const PseudoEuclideanAlgebra& base, const Mat& D, const Mat& xi, const Vec& b0,
                                             const Vec& c0);
// Dispatches on data.kind (even extensions of either form use the same system).
IdentityReport check_admissible(const ExtensionData& data);

// Product table on Kd ⊕ B ⊕ Ke (basis order d, base basis, e) without checking admissibility.
PseudoEuclideanAlgebra double_extend_unchecked(const ExtensionData& data);
// Throws NotAdmissible naming the first failed equation.
PseudoEuclideanAlgebra double_extend(const ExtensionData& data);

// Same algebra and form written in the homogeneous basis given by the columns of q.
PseudoEuclideanAlgebra rebase(const PseudoEuclideanAlgebra& p, const Mat& q);

struct SplitResult {
  Vec e;
  Vec d;
  Mat basis;  // columns d, base basis, e
  PseudoEuclideanAlgebra input_in_basis;
  ExtensionData data;
  IdentityReport admissible;
};

// Candidates for e come from A•A ∩ (A•A)⊥, or for a zero product from an isotropic basis-like vector.
// Throws NonDegenerateProduct when there is none, PreconditionUnverified when the input is not
// pseudo-Euclidean Novikov, NotAdmissible when no candidate e rebuilds the input.
SplitResult split_double_extension(const PseudoEuclideanAlgebra& p);

// Semidirect product A ⋉ V for a representation (r, l) of A on V: basis (A basis, carrier basis),
// u∗x = l(u)x, x∗u = (-1)^{|x||u|} r(u)x, x∗y = 0.
SuperAlgebra semidirect(const SuperAlgebra& a, const Representation& rep);

// Throw StarPropertiesFail if A is not left-Leibniz with commuting L or the star laws (a),(c),(d),(e) fail.
PseudoEuclideanAlgebra tstar_extension(const SuperAlgebra& a, const SuperAlgebra& star);
PseudoEuclideanAlgebra pi_tstar_extension(const SuperAlgebra& a, const SuperAlgebra& star);

// ▷ from its closed formula on A ⊕ A* (or A ⊕ ΠA*), and the check <X∗Y,Z> = <X, Y▷Z> on basis triples.
SuperAlgebra tstar_triangle(const SuperAlgebra& a, const SuperAlgebra& star, bool pi);
IdentityReport check_triangle_pairing(const PseudoEuclideanAlgebra& ext, const SuperAlgebra& triangle);

// Random search over graded data with entries in {-1,0,1}; returns up to `count` distinct admissible
// sets (the zero data included), deterministic in the seed.
std::vector<ExtensionData> sample_admissible_data(const PseudoEuclideanAlgebra& base, ExtensionKind kind, int count,
                                                  std::uint64_t seed, int max_attempts = 20000);

// B ⊗ H with (u⊗a)•(v⊗b) = (-1)^{|a||v|}(u•v)⊗ab. Throws HNotAssociative, OmegaNotInvariant.
PseudoEuclideanAlgebra tensor_construct(const PseudoEuclideanAlgebra& b, const SuperAlgebra& h, const HomBilinearForm& omega);

}  // namespace novikov
