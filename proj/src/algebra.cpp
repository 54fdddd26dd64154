#include "novikov/algebra.hpp"

#include <sstream>

namespace novikov {

namespace {

// Unsigned right multiplications: rho[j] sends w to w • v_j.
std::vector<Mat> rho_matrices(const SuperAlgebra& a) {
  const Index n = a.dim();
  std::vector<Mat> rho(static_cast<std::size_t>(n), Mat::Zero(n, n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) rho[static_cast<std::size_t>(j)].col(i) = a.left(i).col(j);
  return rho;
}

std::vector<Mat> signed_right_matrices(const SuperAlgebra& a) {
  std::vector<Mat> out;
  for (Index i = 0; i < a.dim(); ++i) out.push_back(right_matrix(a, i));
  return out;
}

Basis to_vectors(const Mat& m) {
  Basis out;
  for (Index j = 0; j < m.cols(); ++j) out.push_back(m.col(j));
  return out;
}

Mat vectorize_ops(const std::vector<Mat>& ops, Index n) {
  Mat m(n * n, n);
  for (Index c = 0; c < n; ++c) {
    const Mat& op = ops[static_cast<std::size_t>(c)];
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < n; ++i) m(j * n + i, c) = op(i, j);
  }
  return m;
}

}  // namespace

Mat linear_combination(const std::vector<Mat>& ms, const Vec& x) {
  if (ms.empty()) return Mat(0, 0);
  Mat out = Mat::Zero(ms.front().rows(), ms.front().cols());
  for (Index m = 0; m < x.size(); ++m)
    if (!x(m).is_zero()) out += x(m) * ms[static_cast<std::size_t>(m)];
  return out;
}

Mat super_commutator(const Mat& x, const Mat& y, int px, int py) {
  Mat xy = mul(x, y), yx = mul(y, x);
  return koszul(px, py) ? Mat(xy + yx) : Mat(xy - yx);
}

SuperAlgebra::SuperAlgebra(SuperSpace space, std::vector<Mat> left) : space_(std::move(space)), left_(std::move(left)) {
  const Index n = space_.dim();
  if (static_cast<Index>(left_.size()) != n) throw Error(ErrorKind::ShapeMismatch, "need one left matrix per basis vector");
  for (Index i = 0; i < n; ++i) {
    const Mat& l = left_[static_cast<std::size_t>(i)];
    if (l.rows() != n || l.cols() != n) throw Error(ErrorKind::ShapeMismatch, "left matrix has wrong size");
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (!l(k, j).is_zero() && ((space_.parity(i) + space_.parity(j)) & 1) != space_.parity(k)) {
          std::ostringstream os;
          os << "c[" << i << "][" << j << "][" << k << "] = " << l(k, j) << " breaks the grading";
          throw Error(ErrorKind::ParityMismatch, os.str());
        }
  }
}

SuperAlgebra SuperAlgebra::trivial(const SuperSpace& space) {
  return SuperAlgebra(space, std::vector<Mat>(static_cast<std::size_t>(space.dim()), Mat::Zero(space.dim(), space.dim())));
}

bool SuperAlgebra::is_trivial() const {
  for (const auto& l : left_)
    if (!is_zero(l)) return false;
  return true;
}

ProductTable::ProductTable(SuperSpace space)
    : space_(std::move(space)), left_(static_cast<std::size_t>(space_.dim()), Mat::Zero(space_.dim(), space_.dim())) {}

ProductTable& ProductTable::add(Index i, Index j, Index k, const Rational& coeff) {
  left_[static_cast<std::size_t>(i)](k, j) += coeff;
  return *this;
}

ProductTable& ProductTable::set(Index i, Index j, const Vec& value) {
  left_[static_cast<std::size_t>(i)].col(j) = value;
  return *this;
}

IdentityReport IdentityReport::ok(std::string name) {
  IdentityReport r;
  r.name = std::move(name);
  return r;
}

IdentityReport IdentityReport::fail(std::string name, std::vector<Index> basis, Vec residual, std::string detail) {
  IdentityReport r;
  r.name = std::move(name);
  r.pass = false;
  r.witness = Witness{std::move(basis), std::move(residual)};
  r.detail = std::move(detail);
  return r;
}

IdentityReport IdentityReport::all_of(std::string name, std::vector<IdentityReport> parts) {
  IdentityReport r;
  r.name = std::move(name);
  r.parts = std::move(parts);
  for (const auto& p : r.parts)
    if (!p.pass) {
      const IdentityReport* leaf = p.first_failure();
      r.pass = false;
      r.witness = leaf->witness ? leaf->witness : Witness{};
      r.detail = leaf->name + (leaf->detail.empty() ? "" : ": " + leaf->detail);
      break;
    }
  return r;
}

const IdentityReport* IdentityReport::first_failure() const {
  if (pass) return nullptr;
  for (const auto& p : parts)
    if (!p.pass) return p.first_failure();
  return this;
}

std::string IdentityReport::summary() const {
  std::ostringstream os;
  os << name << ": " << (pass ? "pass" : "FAIL");
  if (!pass) {
    if (!detail.empty()) os << " [" << detail << "]";
    if (witness && !witness->basis.empty()) {
      os << " witness (";
      for (std::size_t i = 0; i < witness->basis.size(); ++i) os << (i ? "," : "") << witness->basis[i];
      os << ")";
    }
  }
  return os.str();
}

Vec product(const SuperAlgebra& a, const Vec& u, const Vec& v) {
  Vec out = Vec::Zero(a.dim());
  for (Index i = 0; i < a.dim(); ++i)
    if (!u(i).is_zero()) out += u(i) * mul(a.left(i), v);
  return out;
}

Mat left_matrix(const SuperAlgebra& a, const Vec& u) { return linear_combination(a.lefts(), u); }

Mat right_matrix(const SuperAlgebra& a, Index i) {
  const Index n = a.dim();
  Mat r(n, n);
  for (Index j = 0; j < n; ++j) {
    Vec col = a.left(j).col(i);
    r.col(j) = koszul(a.space().parity(i), a.space().parity(j)) ? Vec(-col) : col;
  }
  return r;
}

Mat right_matrix(const SuperAlgebra& a, const Vec& u) {
  Mat out = Mat::Zero(a.dim(), a.dim());
  for (Index i = 0; i < a.dim(); ++i)
    if (!u(i).is_zero()) out += u(i) * right_matrix(a, i);
  return out;
}

Endo left_mul(const SuperAlgebra& a, const Vec& u) {
  int p = a.space().require_homogeneous(u, "left_mul argument");
  return Endo{a.space(), left_matrix(a, u), p};
}

Endo right_mul(const SuperAlgebra& a, const Vec& u) {
  int p = a.space().require_homogeneous(u, "right_mul argument");
  return Endo{a.space(), right_matrix(a, u), p};
}

namespace {
SuperAlgebra graded_bracket(const SuperAlgebra& a, int sign) {
  const Index n = a.dim();
  std::vector<Mat> out(static_cast<std::size_t>(n), Mat::Zero(n, n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Vec ji = a.product_basis(j, i);
      bool flip = koszul(a.space().parity(i), a.space().parity(j)) != 0;
      // [u,v] = u•v - (-1)^{|u||v|} v•u ; anticommutator uses +.
      Rational s = Rational(flip ? -sign : sign);
      out[static_cast<std::size_t>(i)].col(j) = a.product_basis(i, j) - s * ji;
    }
  return SuperAlgebra(a.space(), std::move(out));
}
}  // namespace

SuperAlgebra commutator(const SuperAlgebra& a) { return graded_bracket(a, 1); }
SuperAlgebra anticommutator(const SuperAlgebra& a) { return graded_bracket(a, -1); }

IdentityReport check_grading(const SuperAlgebra& a) {
  const auto& s = a.space();
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j)
      for (Index k = 0; k < a.dim(); ++k)
        if (!a.c(i, j, k).is_zero() && ((s.parity(i) + s.parity(j)) & 1) != s.parity(k))
          return IdentityReport::fail("grading", {i, j, k}, unit(a.dim(), k) * a.c(i, j, k));
  return IdentityReport::ok("grading");
}

IdentityReport check_left_symmetric(const SuperAlgebra& a) {
  const Index n = a.dim();
  const auto& s = a.space();
  // (u,v,w) = L_{u•v} w - L_u L_v w
  return pair_identity("left_symmetric", n, [&](Index i, Index j) {
    Mat aij = linear_combination(a.lefts(), a.product_basis(i, j)) - mul(a.left(i), a.left(j));
    Mat aji = linear_combination(a.lefts(), a.product_basis(j, i)) - mul(a.left(j), a.left(i));
    return Mat(koszul(s.parity(i), s.parity(j)) ? Mat(aij + aji) : Mat(aij - aji));
  });
}

IdentityReport check_novikov(const SuperAlgebra& a) {
  const Index n = a.dim();
  const auto& s = a.space();
  SuperAlgebra br = commutator(a);
  auto left_part = pair_identity("L_[u,v]=[L_u,L_v]", n, [&](Index i, Index j) {
    return Mat(linear_combination(a.lefts(), br.product_basis(i, j)) - super_commutator(a.left(i), a.left(j), s.parity(i), s.parity(j)));
  });
  auto r = signed_right_matrices(a);
  auto right_part = pair_identity("R_uR_v=(-1)^{|u||v|}R_vR_u", n, [&](Index i, Index j) {
    return super_commutator(r[static_cast<std::size_t>(i)], r[static_cast<std::size_t>(j)], s.parity(i), s.parity(j));
  });
  return IdentityReport::all_of("novikov", {left_part, right_part});
}

IdentityReport check_L(const SuperAlgebra& a) {
  const auto& s = a.space();
  return pair_identity("L", a.dim(), [&](Index i, Index j) {
    return super_commutator(a.left(i), a.left(j), s.parity(i), s.parity(j));
  });
}

IdentityReport check_R(const SuperAlgebra& a) {
  const auto& s = a.space();
  auto rho = rho_matrices(a);
  // (w•u)•v - (-1)^{|u||v|} (w•v)•u  =  (rho_v rho_u - s rho_u rho_v) w
  return pair_identity("R", a.dim(), [&](Index i, Index j) {
    return super_commutator(rho[static_cast<std::size_t>(j)], rho[static_cast<std::size_t>(i)], s.parity(i), s.parity(j));
  });
}

IdentityReport check_LR(const SuperAlgebra& a) { return IdentityReport::all_of("LR", {check_L(a), check_R(a)}); }

IdentityReport check_left_leibniz(const SuperAlgebra& a) {
  const Index n = a.dim();
  const auto& s = a.space();
  return pair_identity("left_leibniz", n, [&](Index i, Index j) {
    return Mat(linear_combination(a.lefts(), a.product_basis(i, j)) - super_commutator(a.left(i), a.left(j), s.parity(i), s.parity(j)));
  });
}

IdentityReport check_left_ops_commuting(const SuperAlgebra& a) {
  const Index n = a.dim();
  const auto& s = a.space();
  auto l_prod = pair_identity("L_{u.v}=0", n, [&](Index i, Index j) { return linear_combination(a.lefts(), a.product_basis(i, j)); });
  auto l_comm = pair_identity("[L_u,L_v]=0", n, [&](Index i, Index j) {
    return super_commutator(a.left(i), a.left(j), s.parity(i), s.parity(j));
  });
  return IdentityReport::all_of("L_{u.v}=0_and_[L_u,L_v]=0", {l_prod, l_comm});
}

IdentityReport check_products_annihilate(const SuperAlgebra& a) {
  const Index n = a.dim();
  return pair_identity("(u.v).w=0", n, [&](Index i, Index j) { return linear_combination(a.lefts(), a.product_basis(i, j)); });
}

IdentityReport check_super_jacobi(const SuperAlgebra& a) {
  const Index n = a.dim();
  const auto& s = a.space();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Vec r = a.product_basis(i, j) + koszul_sign(s.parity(i), s.parity(j)) * a.product_basis(j, i);
      if (!is_zero(r))
        return IdentityReport::all_of("super_jacobi", {IdentityReport::fail("graded_antisymmetry", {i, j}, r)});
    }
  // With antisymmetry in hand, Jacobi is ad_{[u,v]} = [ad_u, ad_v].
  auto jac = pair_identity("jacobi", n, [&](Index i, Index j) {
    return Mat(linear_combination(a.lefts(), a.product_basis(i, j)) - super_commutator(a.left(i), a.left(j), s.parity(i), s.parity(j)));
  });
  return IdentityReport::all_of("super_jacobi", {IdentityReport::ok("graded_antisymmetry"), jac});
}

bool check_two_step_solvable(const SuperAlgebra& lie) {
  if (!check_super_jacobi(lie).pass) throw Error(ErrorKind::NotLie, "bracket fails super Jacobi");
  Basis d = span_product(lie);
  return subspace_product(lie, d, d).empty();
}

IdentityReport check_associative(const SuperAlgebra& a) {
  const Index n = a.dim();
  return pair_identity("associative", n, [&](Index i, Index j) {
    return Mat(linear_combination(a.lefts(), a.product_basis(i, j)) - mul(a.left(i), a.left(j)));
  });
}

IdentityReport check_supercommutative(const SuperAlgebra& a) {
  const auto& s = a.space();
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      Vec r = a.product_basis(i, j) - koszul_sign(s.parity(i), s.parity(j)) * a.product_basis(j, i);
      if (!is_zero(r)) return IdentityReport::fail("supercommutative", {i, j}, r);
    }
  return IdentityReport::ok("supercommutative");
}

Basis subspace_product(const SuperAlgebra& a, const Basis& u, const Basis& w) {
  Basis prods;
  for (const auto& x : u)
    for (const auto& y : w) {
      Vec p = product(a, x, y);
      if (!is_zero(p)) prods.push_back(std::move(p));
    }
  return echelon_basis(prods, a.dim());
}

Basis full_basis(Index dim) {
  Basis b;
  for (Index i = 0; i < dim; ++i) b.push_back(unit(dim, i));
  return b;
}

Basis span_product(const SuperAlgebra& a) {
  Basis prods;
  for (Index i = 0; i < a.dim(); ++i) {
    auto cols = to_vectors(a.left(i));
    for (auto& c : cols)
      if (!is_zero(c)) prods.push_back(std::move(c));
  }
  return echelon_basis(prods, a.dim());
}

Basis span_derived(const SuperAlgebra& a) { return span_product(commutator(a)); }

Normalizers normalizers(const SuperAlgebra& a) {
  const Index n = a.dim();
  Normalizers out;
  out.left = echelon_basis(mat_kernel(vectorize_ops(a.lefts(), n)), n);
  out.right = echelon_basis(mat_kernel(vectorize_ops(signed_right_matrices(a), n)), n);
  out.both = intersect(out.left, out.right, n);
  return out;
}

const char* to_string(SeriesKind k) {
  switch (k) {
    case SeriesKind::solvable: return "solvable";
    case SeriesKind::left_nilpotent: return "left_nilpotent";
    case SeriesKind::right_nilpotent: return "right_nilpotent";
    case SeriesKind::nilpotent: return "nilpotent";
  }
  return "?";
}

std::vector<Basis> series(const SuperAlgebra& a, SeriesKind kind) {
  const Index n = a.dim();
  Basis whole = full_basis(n);
  std::vector<Basis> chain{whole};
  if (kind == SeriesKind::nilpotent) {
    // A_1 = A, A_k = sum_{i=1}^{k-1} A_i • A_{k-i}; the chain is monotone but may pause, so run to a fixed length.
    std::vector<Basis> terms{whole};
    const Index max_terms = 2 * n + 2;
    while (!terms.back().empty() && static_cast<Index>(terms.size()) < max_terms) {
      const std::size_t k = terms.size() + 1;
      Basis acc;
      for (std::size_t i = 1; i < k; ++i) {
        Basis p = subspace_product(a, terms[i - 1], terms[k - i - 1]);
        acc.insert(acc.end(), p.begin(), p.end());
      }
      terms.push_back(echelon_basis(acc, n));
    }
    for (std::size_t i = 1; i < terms.size(); ++i)
      if (terms[i] != chain.back()) chain.push_back(terms[i]);
    return chain;
  }
  while (true) {
    const Basis& prev = chain.back();
    Basis next;
    switch (kind) {
      case SeriesKind::solvable: next = subspace_product(a, prev, prev); break;
      case SeriesKind::left_nilpotent: next = subspace_product(a, whole, prev); break;
      case SeriesKind::right_nilpotent: next = subspace_product(a, prev, whole); break;
      default: break;
    }
    if (next == prev) break;
    chain.push_back(std::move(next));
    if (chain.back().empty()) break;
  }
  return chain;
}

bool series_reaches_zero(const std::vector<Basis>& chain) { return !chain.empty() && chain.back().empty(); }

bool is_nilpotent_matrix(const Mat& m) {
  Mat p = m;
  for (Index k = 1; k < m.rows(); ++k) p = mul(p, m);
  return is_zero(p);
}

}  // namespace novikov
