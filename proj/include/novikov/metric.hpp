#pragma once

#include <variant>

#include "novikov/algebra.hpp"

namespace novikov {

struct PseudoEuclideanAlgebra {
  SuperAlgebra algebra;
  HomBilinearForm form;

  PseudoEuclideanAlgebra() = default;
  // Throws ShapeMismatch when the two live on different spaces.
  PseudoEuclideanAlgebra(SuperAlgebra a, HomBilinearForm f);

  const SuperSpace& space() const { return algebra.space(); }
  Index dim() const { return algebra.dim(); }

  friend bool operator==(const PseudoEuclideanAlgebra&, const PseudoEuclideanAlgebra&) = default;
};

IdentityReport check_form_report(const HomBilinearForm& form);
IdentityReport check_left_mul_antisymmetric(const PseudoEuclideanAlgebra& p);
IdentityReport check_pseudo_euclidean_novikov(const PseudoEuclideanAlgebra& p);
// Throws PreconditionUnverified unless L_u is antisymmetric and the R half of Novikov holds.
IdentityReport check_vanishing_lemma(const PseudoEuclideanAlgebra& p);

// Product from the super Koszul formula. Throws NotLie, ShapeMismatch.
SuperAlgebra levi_civita(const SuperAlgebra& lie, const HomBilinearForm& form);
// R(u,v) = L_{[u,v]} - [L_u, L_v]
Endo curvature(const PseudoEuclideanAlgebra& p, const Vec& u, const Vec& v);
bool is_flat(const PseudoEuclideanAlgebra& p);
IdentityReport check_flat(const PseudoEuclideanAlgebra& p);

// <u•v, w> = <u, v⋆w>
SuperAlgebra star_product(const PseudoEuclideanAlgebra& p);
IdentityReport check_star_properties(const PseudoEuclideanAlgebra& p);
IdentityReport check_star_properties(const PseudoEuclideanAlgebra& p, const SuperAlgebra& star);
// Same laws; none of them involve the form.
IdentityReport check_star_properties(const SuperAlgebra& a, const SuperAlgebra& star);

// Pseudo-Euclidean Novikov suite plus vanishing lemma, star properties and flatness.
IdentityReport full_suite(const PseudoEuclideanAlgebra& p);

struct MilnorDecomposition {
  Basis ideal;
  Basis complement;
};
struct NotMilnor {
  Vec witness;  // nonzero vector of A•A ∩ (A•A)⊥
};
std::variant<MilnorDecomposition, NotMilnor> milnor_decomposition(const PseudoEuclideanAlgebra& p);

// {u : [u, A] = 0} in the commutator superalgebra.
Basis center_of_minus(const SuperAlgebra& a);

// Does e satisfy the isotropic reduction hypotheses (homogeneous, nonzero, L_e = R_e = 0, <e,e> = 0)?
bool is_reducing_vector(const PseudoEuclideanAlgebra& p, const Vec& e);
// Coset representatives for e⊥ / Ke: echelon vectors of e⊥ that extend [e].
Basis reduction_representatives(const PseudoEuclideanAlgebra& p, const Vec& e);
// Throws NotAdmissible when e fails the hypotheses.
PseudoEuclideanAlgebra isotropic_reduction(const PseudoEuclideanAlgebra& p, const Vec& e);
// Vector used by reduction_chain: first echelon vector of A•A ∩ (A•A)⊥, or for a trivial
// product an isotropic homogeneous vector among v_i, v_i ± v_j.
std::optional<Vec> choose_reducing_vector(const PseudoEuclideanAlgebra& p);
// Successive quotients, starting with p itself; stops at a trivial product or after max_steps.
std::vector<PseudoEuclideanAlgebra> reduction_chain(const PseudoEuclideanAlgebra& p, int max_steps);

// A representation (r, l) of A on carrier; r[i], l[i] are the images of the basis vector v_i.
struct Representation {
  SuperSpace carrier;
  std::vector<Mat> r;
  std::vector<Mat> l;
};
Representation adjoint_representation(const SuperAlgebra& a);
IdentityReport check_representation(const SuperAlgebra& a, const Representation& rep);

// Matrix on A* (dual basis v_j*) of phi*(u), where phi(u) has matrix m:
// phi*(u)(f)(x) = -(-1)^{|f|(|phi|+|u|)} f(phi(u)(x)).
Mat dual_operator(const SuperSpace& space, const Mat& m, int phi_parity, int u_parity);
Representation build_dual_representation(const PseudoEuclideanAlgebra& p);
IdentityReport check_phi_isomorphism(const PseudoEuclideanAlgebra& p);

}  // namespace novikov
