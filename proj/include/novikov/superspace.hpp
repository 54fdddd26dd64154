#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "novikov/linalg.hpp"

namespace novikov {

using Basis = std::vector<Vec>;

class SuperSpace {
 public:
  SuperSpace() = default;
  explicit SuperSpace(std::vector<int> parity);
  // sdim (p|q): p even vectors first, then q odd vectors.
  static SuperSpace of_sdim(int even, int odd);

  Index dim() const { return static_cast<Index>(parity_.size()); }
  int parity(Index i) const { return parity_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& parities() const { return parity_; }
  std::pair<int, int> sdim() const;
  // Parity of a homogeneous vector; nullopt when it mixes parities. The zero vector reads as even.
  std::optional<int> parity_of(const Vec& v) const;
  int require_homogeneous(const Vec& v, const char* what) const;
  // Same space with every parity flipped.
  SuperSpace flipped() const;

  friend bool operator==(const SuperSpace&, const SuperSpace&) = default;

 private:
  std::vector<int> parity_;
};

std::string sdim_string(const SuperSpace& s);

// Homogeneous endomorphism; matrix(k, i) is the v_k coefficient of f(v_i).
struct Endo {
  SuperSpace space;
  Mat matrix;
  int parity = 0;

  static Endo zero(const SuperSpace& s, int parity);
  static Endo identity(const SuperSpace& s);
  // Checks the grading of `m` and wraps it.
  static Endo make(const SuperSpace& s, Mat m, int parity);
  Vec operator()(const Vec& v) const { return mul(matrix, v); }
};

bool endo_respects_parity(const SuperSpace& s, const Mat& m, int parity);
Endo compose(const Endo& f, const Endo& g);  // f after g

struct FormViolation {
  std::string invariant;  // "shape", "grading", "super-symmetry", "non-degeneracy"
  Index i = -1, j = -1;
  std::string message() const;
};

std::optional<FormViolation> check_form(const SuperSpace& space, const Mat& gram, int form_parity);

class HomBilinearForm {
 public:
  HomBilinearForm() = default;
  // Throws InvalidForm naming the first violated invariant.
  HomBilinearForm(SuperSpace space, Mat gram, int form_parity);

  const SuperSpace& space() const { return space_; }
  const Mat& gram() const { return gram_; }
  int parity() const { return parity_; }
  Index dim() const { return space_.dim(); }
  const Mat& gram_inverse() const { return gram_inv_; }

  Rational operator()(const Vec& u, const Vec& v) const;

  friend bool operator==(const HomBilinearForm& a, const HomBilinearForm& b) {
    return a.space_ == b.space_ && a.parity_ == b.parity_ && a.gram_ == b.gram_;
  }

 private:
  SuperSpace space_;
  Mat gram_;
  Mat gram_inv_;
  int parity_ = 0;
};

bool check_parity_dimension(const HomBilinearForm& form);
Basis orthogonal_complement(const HomBilinearForm& form, const Basis& subspace);
// Form restricted to span(basis) is non-degenerate.
bool restriction_nondegenerate(const HomBilinearForm& form, const Basis& basis);

Endo adjoint(const HomBilinearForm& form, const Endo& f);
bool is_antisymmetric(const HomBilinearForm& form, const Endo& f);
bool is_symmetric(const HomBilinearForm& form, const Endo& f);

}  // namespace novikov
