#include "novikov/superspace.hpp"

#include <sstream>

namespace novikov {

SuperSpace::SuperSpace(std::vector<int> parity) : parity_(std::move(parity)) {
  for (int p : parity_)
    if (p != 0 && p != 1) throw Error(ErrorKind::Parse, "parity entries must be 0 or 1");
}

SuperSpace SuperSpace::of_sdim(int even, int odd) {
  std::vector<int> p(static_cast<std::size_t>(even), 0);
  p.insert(p.end(), static_cast<std::size_t>(odd), 1);
  return SuperSpace(std::move(p));
}

std::pair<int, int> SuperSpace::sdim() const {
  int odd = 0;
  for (int p : parity_) odd += p;
  return {static_cast<int>(parity_.size()) - odd, odd};
}

std::optional<int> SuperSpace::parity_of(const Vec& v) const {
  if (v.size() != dim()) throw Error(ErrorKind::ShapeMismatch, "vector length differs from space dimension");
  bool even = false, odd = false;
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i).is_zero()) continue;
    (parity(i) ? odd : even) = true;
  }
  if (even && odd) return std::nullopt;
  return odd ? 1 : 0;
}

int SuperSpace::require_homogeneous(const Vec& v, const char* what) const {
  auto p = parity_of(v);
  if (!p) throw Error(ErrorKind::NonHomogeneous, std::string(what) + " mixes even and odd components");
  return *p;
}

SuperSpace SuperSpace::flipped() const {
  std::vector<int> p = parity_;
  for (int& x : p) x ^= 1;
  return SuperSpace(std::move(p));
}

std::string sdim_string(const SuperSpace& s) {
  auto [p, q] = s.sdim();
  return std::to_string(p) + "|" + std::to_string(q);
}

bool endo_respects_parity(const SuperSpace& s, const Mat& m, int parity) {
  if (m.rows() != s.dim() || m.cols() != s.dim()) return false;
  for (Index i = 0; i < m.cols(); ++i)
    for (Index k = 0; k < m.rows(); ++k)
      if (!m(k, i).is_zero() && s.parity(k) != ((s.parity(i) + parity) & 1)) return false;
  return true;
}

Endo Endo::zero(const SuperSpace& s, int parity) { return Endo{s, Mat::Zero(s.dim(), s.dim()), parity}; }

Endo Endo::identity(const SuperSpace& s) { return Endo{s, Mat::Identity(s.dim(), s.dim()), 0}; }

Endo Endo::make(const SuperSpace& s, Mat m, int parity) {
  if (m.rows() != s.dim() || m.cols() != s.dim())
    throw Error(ErrorKind::ShapeMismatch, "endomorphism matrix must be " + std::to_string(s.dim()) + "x" + std::to_string(s.dim()));
  if (!endo_respects_parity(s, m, parity))
    throw Error(ErrorKind::ParityMismatch, "matrix is not homogeneous of parity " + std::to_string(parity));
  return Endo{s, std::move(m), parity};
}

Endo compose(const Endo& f, const Endo& g) {
  return Endo{f.space, mul(f.matrix, g.matrix), (f.parity + g.parity) & 1};
}

std::string FormViolation::message() const {
  std::ostringstream os;
  os << invariant;
  if (i >= 0) os << " violated at (" << i << "," << j << ")";
  return os.str();
}

std::optional<FormViolation> check_form(const SuperSpace& space, const Mat& gram, int form_parity) {
  const Index n = space.dim();
  if (gram.rows() != n || gram.cols() != n) return FormViolation{"shape", -1, -1};
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (!gram(i, j).is_zero() && ((space.parity(i) + space.parity(j)) & 1) != form_parity)
        return FormViolation{"grading", i, j};
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Rational expect = (space.parity(i) & space.parity(j)) ? -gram(j, i) : gram(j, i);
      if (gram(i, j) != expect) return FormViolation{"super-symmetry", i, j};
    }
  if (mat_det(gram).is_zero()) return FormViolation{"non-degeneracy", -1, -1};
  return std::nullopt;
}

HomBilinearForm::HomBilinearForm(SuperSpace space, Mat gram, int form_parity)
    : space_(std::move(space)), gram_(std::move(gram)), parity_(form_parity) {
  if (form_parity != 0 && form_parity != 1) throw Error(ErrorKind::InvalidForm, "form parity must be 0 or 1");
  if (auto v = check_form(space_, gram_, parity_)) throw Error(ErrorKind::InvalidForm, v->message());
  gram_inv_ = mat_inverse(gram_);
}

Rational HomBilinearForm::operator()(const Vec& u, const Vec& v) const {
  Rational s(0);
  for (Index i = 0; i < u.size(); ++i) {
    if (u(i).is_zero()) continue;
    for (Index j = 0; j < v.size(); ++j)
      if (!v(j).is_zero() && !gram_(i, j).is_zero()) s += u(i) * gram_(i, j) * v(j);
  }
  return s;
}

bool check_parity_dimension(const HomBilinearForm& form) {
  auto [even, odd] = form.space().sdim();
  return form.parity() == 0 ? odd % 2 == 0 : even == odd;
}

Basis orthogonal_complement(const HomBilinearForm& form, const Basis& subspace) {
  const Index n = form.dim();
  if (subspace.empty()) {
    Basis all;
    for (Index i = 0; i < n; ++i) all.push_back(unit(n, i));
    return all;
  }
  Mat rows(static_cast<Index>(subspace.size()), n);
  for (std::size_t r = 0; r < subspace.size(); ++r)
    rows.row(static_cast<Index>(r)) = mul(subspace[r].transpose(), form.gram());
  return echelon_basis(mat_kernel(rows), n);
}

bool restriction_nondegenerate(const HomBilinearForm& form, const Basis& basis) {
  if (basis.empty()) return true;
  Mat b = cols_of(basis, form.dim());
  return !mat_det(mul(mul(b.transpose(), form.gram()), b)).is_zero();
}

// <f(u),v> = (-1)^{a|u|} <u, f*(v)>  gives  f* = G^{-1} S F^T G with S = diag((-1)^{a p_i}).
Endo adjoint(const HomBilinearForm& form, const Endo& f) {
  const auto& s = form.space();
  Mat sft = f.matrix.transpose();
  for (Index i = 0; i < s.dim(); ++i)
    if ((f.parity & s.parity(i)) != 0) sft.row(i) = -sft.row(i);
  return Endo{s, mul(mul(form.gram_inverse(), sft), form.gram()), f.parity};
}

bool is_antisymmetric(const HomBilinearForm& form, const Endo& f) {
  return adjoint(form, f).matrix == -f.matrix;
}

bool is_symmetric(const HomBilinearForm& form, const Endo& f) { return adjoint(form, f).matrix == f.matrix; }

}  // namespace novikov
