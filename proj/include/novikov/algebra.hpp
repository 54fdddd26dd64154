#pragma once

#include <optional>
#include <string>
#include <vector>

#include "novikov/superspace.hpp"

namespace novikov {

// Structure constants stored as the left multiplication matrices: left(i)(k, j) = c[i][j][k],
// the v_k coefficient of v_i • v_j.
class SuperAlgebra {
 public:
  SuperAlgebra() = default;
  // Throws ParityMismatch if some c[i][j][k] breaks the grading.
  SuperAlgebra(SuperSpace space, std::vector<Mat> left);
  static SuperAlgebra trivial(const SuperSpace& space);

  const SuperSpace& space() const { return space_; }
  Index dim() const { return space_.dim(); }
  const Rational& c(Index i, Index j, Index k) const { return left_[static_cast<std::size_t>(i)](k, j); }
  const Mat& left(Index i) const { return left_[static_cast<std::size_t>(i)]; }
  const std::vector<Mat>& lefts() const { return left_; }
  Vec product_basis(Index i, Index j) const { return left_[static_cast<std::size_t>(i)].col(j); }
  bool is_trivial() const;

  friend bool operator==(const SuperAlgebra& a, const SuperAlgebra& b) {
    return a.space_ == b.space_ && a.left_ == b.left_;
  }

 private:
  SuperSpace space_;
  std::vector<Mat> left_;
};

// Mutable table used to assemble an algebra one product at a time.
class ProductTable {
 public:
  explicit ProductTable(SuperSpace space);
  ProductTable& add(Index i, Index j, Index k, const Rational& coeff);
  ProductTable& set(Index i, Index j, const Vec& value);
  SuperAlgebra build() const { return SuperAlgebra(space_, left_); }

 private:
  SuperSpace space_;
  std::vector<Mat> left_;
};

inline int koszul(int a, int b) { return (a & b) & 1; }
inline Rational koszul_sign(int a, int b) { return (a & b) ? Rational(-1) : Rational(1); }

struct Witness {
  std::vector<Index> basis;
  Vec residual;
};

struct IdentityReport {
  std::string name;
  bool pass = true;
  std::optional<Witness> witness;
  std::string detail;
  std::vector<IdentityReport> parts;

  static IdentityReport ok(std::string name);
  static IdentityReport fail(std::string name, std::vector<Index> basis, Vec residual, std::string detail = {});
  // Passes iff all parts pass; otherwise carries the first failing part's witness.
  static IdentityReport all_of(std::string name, std::vector<IdentityReport> parts);
  const IdentityReport* first_failure() const;
  std::string summary() const;
};

// sum_m x(m) * ms[m]
Mat linear_combination(const std::vector<Mat>& ms, const Vec& x);
// xy - (-1)^{px py} yx
Mat super_commutator(const Mat& x, const Mat& y, int px, int py);

// Scans ordered basis pairs (i, j); the first nonzero column k of residual(i, j) becomes witness (i, j, k).
template <typename F>
IdentityReport pair_identity(const std::string& name, Index n, F residual) {
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Mat r = residual(i, j);
      for (Index k = 0; k < r.cols(); ++k)
        if (!is_zero(r.col(k))) return IdentityReport::fail(name, {i, j, k}, r.col(k));
    }
  return IdentityReport::ok(name);
}

Vec product(const SuperAlgebra& a, const Vec& u, const Vec& v);
Mat left_matrix(const SuperAlgebra& a, const Vec& u);
// Signed right multiplication R_{v_i}: v_j -> (-1)^{|v_i||v_j|} v_j • v_i.
Mat right_matrix(const SuperAlgebra& a, Index i);
Mat right_matrix(const SuperAlgebra& a, const Vec& u);
Endo left_mul(const SuperAlgebra& a, const Vec& u);
Endo right_mul(const SuperAlgebra& a, const Vec& u);

SuperAlgebra commutator(const SuperAlgebra& a);
SuperAlgebra anticommutator(const SuperAlgebra& a);

IdentityReport check_grading(const SuperAlgebra& a);
IdentityReport check_left_symmetric(const SuperAlgebra& a);
IdentityReport check_novikov(const SuperAlgebra& a);
IdentityReport check_L(const SuperAlgebra& a);
IdentityReport check_R(const SuperAlgebra& a);
IdentityReport check_LR(const SuperAlgebra& a);
IdentityReport check_left_leibniz(const SuperAlgebra& a);
// L_{u•v} = 0 and [L_u, L_v] = 0.
IdentityReport check_left_ops_commuting(const SuperAlgebra& a);
// (u•v)•w = 0 on all basis triples, with no preconditions.
IdentityReport check_products_annihilate(const SuperAlgebra& a);
IdentityReport check_super_jacobi(const SuperAlgebra& a);
bool check_two_step_solvable(const SuperAlgebra& lie);
IdentityReport check_associative(const SuperAlgebra& a);
IdentityReport check_supercommutative(const SuperAlgebra& a);

Basis subspace_product(const SuperAlgebra& a, const Basis& u, const Basis& w);
Basis span_product(const SuperAlgebra& a);
Basis span_derived(const SuperAlgebra& a);
Basis full_basis(Index dim);

struct Normalizers {
  Basis left, right, both;
};
Normalizers normalizers(const SuperAlgebra& a);

enum class SeriesKind { solvable, left_nilpotent, right_nilpotent, nilpotent };
const char* to_string(SeriesKind k);
// Descending chain starting at A; consecutive repeats are dropped, so the last entry is where it settles.
std::vector<Basis> series(const SuperAlgebra& a, SeriesKind kind);
bool series_reaches_zero(const std::vector<Basis>& chain);

bool is_nilpotent_matrix(const Mat& m);

}  // namespace novikov
