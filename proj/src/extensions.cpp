#include "novikov/extensions.hpp"

#include <random>
#include <set>
#include <sstream>

namespace novikov {

const char* to_string(ExtensionKind k) {
  switch (k) {
    case ExtensionKind::even_ext_even_form: return "even_ext_even_form";
    case ExtensionKind::odd_ext_even_form: return "odd_ext_even_form";
    case ExtensionKind::even_ext_odd_form: return "even_ext_odd_form";
    case ExtensionKind::odd_ext_odd_form: return "odd_ext_odd_form";
  }
  return "?";
}

ExtensionKind extension_kind_from_string(const std::string& s) {
  for (auto k : {ExtensionKind::even_ext_even_form, ExtensionKind::odd_ext_even_form, ExtensionKind::even_ext_odd_form,
                 ExtensionKind::odd_ext_odd_form})
    if (s == to_string(k)) return k;
  throw Error(ErrorKind::Parse, "unknown extension kind " + s);
}

ExtensionKind extension_kind(int ext, int form) {
  if (form == 0) return ext ? ExtensionKind::odd_ext_even_form : ExtensionKind::even_ext_even_form;
  return ext ? ExtensionKind::odd_ext_odd_form : ExtensionKind::even_ext_odd_form;
}

int extension_parity(ExtensionKind k) { return k == ExtensionKind::odd_ext_even_form || k == ExtensionKind::odd_ext_odd_form; }

static int form_parity_of(ExtensionKind k) { return k == ExtensionKind::even_ext_odd_form || k == ExtensionKind::odd_ext_odd_form; }

int e_parity(ExtensionKind k) { return (extension_parity(k) + form_parity_of(k)) & 1; }

ExtensionData zero_extension_data(const PseudoEuclideanAlgebra& base, ExtensionKind kind) {
  const Index m = base.dim();
  ExtensionData d{base, kind, Mat::Zero(m, m), Mat::Zero(m, m), Vec::Zero(m), std::nullopt};
  if (extension_parity(kind)) d.c0 = Vec::Zero(m);
  return d;
}

namespace {

bool same(const Mat& a, const Mat& b) { return a.rows() == b.rows() && a.cols() == b.cols() && a == b; }
bool same(const Vec& a, const Vec& b) { return a.size() == b.size() && a == b; }

}  // namespace

bool operator==(const ExtensionData& a, const ExtensionData& b) {
  if (a.kind != b.kind || !(a.base == b.base) || !same(a.D, b.D) || !same(a.xi, b.xi) || !same(a.b0, b.b0)) return false;
  if (a.c0.has_value() != b.c0.has_value()) return false;
  return !a.c0 || same(*a.c0, *b.c0);
}

namespace {

template <typename F>
IdentityReport index_identity(const std::string& name, Index n, F residual) {
  for (Index i = 0; i < n; ++i) {
    Mat r = residual(i);
    for (Index k = 0; k < r.cols(); ++k)
      if (!is_zero(r.col(k))) return IdentityReport::fail(name, {i, k}, r.col(k));
  }
  return IdentityReport::ok(name);
}

IdentityReport vector_zero(const std::string& name, const Vec& v) {
  return is_zero(v) ? IdentityReport::ok(name) : IdentityReport::fail(name, {}, v);
}

IdentityReport scalar_zero(const std::string& name, const Rational& x) {
  if (x.is_zero()) return IdentityReport::ok(name);
  Vec v(1);
  v(0) = x;
  return IdentityReport::fail(name, {}, v);
}

Mat parity_signs(const SuperSpace& s) {
  const Index n = s.dim();
  Mat m = Mat::Zero(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = sign_pow(s.parity(i));
  return m;
}

enum class System { claim2, claim4, claim6 };

void require_data_shape(const PseudoEuclideanAlgebra& base, const Mat& D, const Mat& xi, const Vec& b0, const Vec* c0, int map_parity) {
  const auto& s = base.space();
  const Index m = base.dim();
  if (D.rows() != m || D.cols() != m || xi.rows() != m || xi.cols() != m || b0.size() != m || (c0 && c0->size() != m))
    throw Error(ErrorKind::ShapeMismatch, "extension data does not match the base dimension");
  if (!endo_respects_parity(s, D, map_parity))
    throw Error(ErrorKind::ParityMismatch, std::string("D must be ") + (map_parity ? "odd" : "even"));
  if (!endo_respects_parity(s, xi, map_parity))
    throw Error(ErrorKind::ParityMismatch, std::string("xi must be ") + (map_parity ? "odd" : "even"));
  if (s.parity_of(b0) != 0) throw Error(ErrorKind::ParityMismatch, "b0 must be even");
  if (c0 && s.parity_of(*c0) != 0) throw Error(ErrorKind::ParityMismatch, "c0 must be even");
}

IdentityReport admissibility(System sys, const PseudoEuclideanAlgebra& base, const Mat& D, const Mat& xi, const Vec& b0, const Vec* c0) {
  const int mp = sys == System::claim2 ? 0 : 1;
  require_data_shape(base, D, xi, b0, c0, mp);
  const auto& a = base.algebra;
  const auto& s = base.space();
  const Index m = base.dim();
  const auto& L = a.lefts();
  auto Li = [&](Index i) -> const Mat& { return a.left(i); };
  Endo d_endo{s, D, mp}, xi_endo{s, xi, mp};
  Mat xi_adj = adjoint(base.form, xi_endo).matrix;
  Mat r_b0 = right_matrix(a, b0);

  std::vector<IdentityReport> parts;
  parts.push_back(index_identity("D antisymmetric", 1, [&](Index) { return Mat(adjoint(base.form, d_endo).matrix + D); }));
  parts.push_back(index_identity("xi(u.v)=0", m, [&](Index i) { return mul(xi, Li(i)); }));
  parts.push_back(index_identity("xi(u).v=0", m, [&](Index i) { return linear_combination(L, xi.col(i)); }));
  parts.push_back(index_identity("D(u).v=0", m, [&](Index i) { return linear_combination(L, D.col(i)); }));
  parts.push_back(pair_identity("u.xi(v)=(-1)^{|u||v|}v.xi(u)", m, [&](Index i, Index j) {
    return Mat(mul(Li(i), Vec(xi.col(j))) - koszul_sign(s.parity(i), s.parity(j)) * mul(Li(j), Vec(xi.col(i))));
  }));
  parts.push_back(index_identity("D(u.v)=u.D(v)", m, [&](Index i) { return Mat(mul(D, Li(i)) - mul(Li(i), D)); }));
  if (sys == System::claim2)
    parts.push_back(index_identity("D o xi=R_b0", 1, [&](Index) { return Mat(mul(D, xi) - r_b0); }));
  else
    parts.push_back(index_identity("D o xi(u)=(-1)^{|u|}u.b0", 1, [&](Index) { return Mat(mul(D, xi) - mul(r_b0, parity_signs(s))); }));
  parts.push_back(index_identity("xi^2=0", 1, [&](Index) { return mul(xi, xi); }));
  if (sys != System::claim2) {
    parts.push_back(index_identity("D^2=0", 1, [&](Index) { return mul(D, D); }));
    parts.push_back(index_identity("xi* o xi=0", 1, [&](Index) { return mul(xi_adj, xi); }));
  }
  parts.push_back(index_identity("xi o D=0", 1, [&](Index) { return mul(xi, D); }));
  parts.push_back(index_identity("L_b0=0", 1, [&](Index) { return left_matrix(a, b0); }));
  if (sys != System::claim2) parts.push_back(index_identity("R_c0=0", 1, [&](Index) { return right_matrix(a, *c0); }));
  parts.push_back(vector_zero("xi(b0)=0", mul(xi, b0)));
  if (sys != System::claim2) {
    parts.push_back(vector_zero("D(b0)=0", mul(D, b0)));
    if (sys == System::claim6) parts.push_back(vector_zero("xi*(b0)=0", mul(xi_adj, b0)));
    parts.push_back(vector_zero("xi*(c0)=0", mul(xi_adj, *c0)));
    parts.push_back(vector_zero("D(c0)=0", mul(D, *c0)));
  }
  if (sys == System::claim4) {
    parts.push_back(scalar_zero("<b0,c0>=0", base.form(b0, *c0)));
    parts.push_back(scalar_zero("<b0,b0>=0", base.form(b0, b0)));
  }
  const char* name = sys == System::claim2 ? "even_admissible" : (sys == System::claim4 ? "odd_admissible_even_form" : "odd_admissible_odd_form");
  return IdentityReport::all_of(name, std::move(parts));
}

}  // namespace

IdentityReport check_even_admissible(const PseudoEuclideanAlgebra& base, const Mat& D, const Mat& xi, const Vec& b0) {
  return admissibility(System::claim2, base, D, xi, b0, nullptr);
}

IdentityReport check_odd_admissible_even_form(const PseudoEuclideanAlgebra& base, const Mat& D, const Mat& xi, const Vec& b0,
                                              const Vec& c0) {
  if (base.form.parity() != 0) throw Error(ErrorKind::ParityMismatch, "this system needs an even-form base");
  return admissibility(System::claim4, base, D, xi, b0, &c0);
}

IdentityReport check_odd_admissible_odd_form(const PseudoEuclideanAlgebra& base, const Mat& D, const Mat& xi, const Vec& b0,
                                             const Vec& c0) {
  if (base.form.parity() != 1) throw Error(ErrorKind::ParityMismatch, "this system needs an odd-form base");
  return admissibility(System::claim6, base, D, xi, b0, &c0);
}

IdentityReport check_admissible(const ExtensionData& data) {
  if (form_parity_of(data.kind) != data.base.form.parity())
    throw Error(ErrorKind::ParityMismatch, std::string(to_string(data.kind)) + " does not match the base form parity");
  if (!extension_parity(data.kind)) return check_even_admissible(data.base, data.D, data.xi, data.b0);
  if (!data.c0) throw Error(ErrorKind::ShapeMismatch, "odd extensions need c0");
  if (data.kind == ExtensionKind::odd_ext_even_form) return check_odd_admissible_even_form(data.base, data.D, data.xi, data.b0, *data.c0);
  return check_odd_admissible_odd_form(data.base, data.D, data.xi, data.b0, *data.c0);
}

PseudoEuclideanAlgebra double_extend_unchecked(const ExtensionData& data) {
  const auto& base = data.base;
  const auto& bs = base.space();
  const Index m = base.dim();
  const Index n = m + 2;
  const int pd = extension_parity(data.kind);
  const int pe = e_parity(data.kind);
  if (form_parity_of(data.kind) != base.form.parity())
    throw Error(ErrorKind::ParityMismatch, std::string(to_string(data.kind)) + " does not match the base form parity");
  require_data_shape(base, data.D, data.xi, data.b0, data.c0 ? &*data.c0 : nullptr, pd);
  const Index d = 0, e = m + 1;

  std::vector<int> par{pd};
  for (Index i = 0; i < m; ++i) par.push_back(bs.parity(i));
  par.push_back(pe);
  SuperSpace s(par);

  const Mat& g = base.form.gram();
  const bool odd_ext = pd == 1;
  // Only the odd extension over an odd form adds <b0,u>e to d•u; the others subtract it.
  const Rational b0_sign = data.kind == ExtensionKind::odd_ext_odd_form ? Rational(1) : Rational(-1);
  auto pair = [&](const Vec& x, Index j) {  // <x, u_j>
    Rational t(0);
    for (Index k = 0; k < m; ++k) t += x(k) * g(k, j);
    return t;
  };
  auto embed = [&](const Vec& b, const Rational& e_coeff) {
    Vec v = Vec::Zero(n);
    v.segment(1, m) = b;
    v(e) = e_coeff;
    return v;
  };

  ProductTable t(s);
  for (Index j = 0; j < m; ++j) {
    t.set(d, 1 + j, embed(data.D.col(j), b0_sign * pair(data.b0, j)));
    Rational c = data.c0 ? pair(*data.c0, j) : Rational(0);
    t.set(1 + j, d, embed(data.xi.col(j), c));
  }
  t.set(d, d, embed(data.b0, 0));
  for (Index i = 0; i < m; ++i) {
    Vec xi_u = data.xi.col(i);
    for (Index j = 0; j < m; ++j) {
      Rational sj = odd_ext ? sign_pow(bs.parity(j)) : Rational(1);
      t.set(1 + i, 1 + j, embed(base.algebra.product_basis(i, j), -sj * pair(xi_u, j)));
    }
  }

  Mat gram = Mat::Zero(n, n);
  gram.block(1, 1, m, m) = g;
  gram(e, d) = 1;
  gram(d, e) = data.kind == ExtensionKind::odd_ext_even_form ? Rational(-1) : Rational(1);
  return PseudoEuclideanAlgebra(t.build(), HomBilinearForm(s, gram, base.form.parity()));
}

PseudoEuclideanAlgebra double_extend(const ExtensionData& data) {
  auto report = check_admissible(data);
  if (!report.pass) throw Error(ErrorKind::NotAdmissible, report.summary());
  return double_extend_unchecked(data);
}

PseudoEuclideanAlgebra rebase(const PseudoEuclideanAlgebra& p, const Mat& q) {
  const Index n = p.dim();
  if (q.rows() != n || q.cols() != n) throw Error(ErrorKind::ShapeMismatch, "basis matrix must be square of the algebra's dimension");
  Mat qinv = mat_inverse(q);
  std::vector<int> par;
  for (Index i = 0; i < n; ++i) par.push_back(p.space().require_homogeneous(q.col(i), "basis vector"));
  SuperSpace s(par);
  std::vector<Mat> left(static_cast<std::size_t>(n), Mat(n, n));
  Mat gram(n, n);
  for (Index i = 0; i < n; ++i) {
    Mat li = mul(left_matrix(p.algebra, q.col(i)), q);
    left[static_cast<std::size_t>(i)] = mul(qinv, li);
  }
  gram = mul(mul(Mat(q.transpose()), p.form.gram()), q);
  return PseudoEuclideanAlgebra(SuperAlgebra(s, std::move(left)), HomBilinearForm(s, gram, p.form.parity()));
}

namespace {

// Homogeneous components of echelon vectors, in order.
Basis homogeneous_candidates(const SuperSpace& s, const Basis& vs) {
  Basis out;
  for (const auto& v : vs) {
    if (s.parity_of(v)) {
      out.push_back(v);
      continue;
    }
    for (int p : {0, 1}) {
      Vec part = v;
      for (Index i = 0; i < v.size(); ++i)
        if (s.parity(i) != p) part(i) = 0;
      if (!is_zero(part)) out.push_back(part);
    }
  }
  return out;
}

struct Attempt {
  std::optional<SplitResult> result;
  std::string why;
};

Attempt try_split(const PseudoEuclideanAlgebra& p, const Vec& e) {
  const Index n = p.dim();
  const Mat& g = p.form.gram();
  Vec r = mul(Mat(g.transpose()), e);  // r(k) = <e, v_k>
  Index k = 0;
  while (k < n && r(k).is_zero()) ++k;
  if (k == n) return {std::nullopt, "e is in the radical"};
  Vec d = unit(n, k) / r(k);
  if (!p.form(d, d).is_zero()) d -= (p.form(d, d) / Rational(2)) * e;

  Basis b = orthogonal_complement(p.form, {e, d});
  const Index m = static_cast<Index>(b.size());
  Mat q(n, n);
  q.col(0) = d;
  for (Index i = 0; i < m; ++i) q.col(1 + i) = b[static_cast<std::size_t>(i)];
  q.col(n - 1) = e;
  if (mat_det(q).is_zero()) return {std::nullopt, "d, B, e do not form a basis"};
  PseudoEuclideanAlgebra t = rebase(p, q);

  const auto& ts = t.space();
  const int pd = ts.parity(0), pe = ts.parity(n - 1);
  const int fp = p.form.parity();
  ExtensionKind kind = extension_kind(pd, fp);
  if (e_parity(kind) != pe) return {std::nullopt, "parities of e and d do not fit any kind"};

  std::vector<int> bpar;
  for (Index i = 0; i < m; ++i) bpar.push_back(ts.parity(1 + i));
  SuperSpace bsp(bpar);
  std::vector<Mat> bleft;
  for (Index i = 0; i < m; ++i) bleft.push_back(t.algebra.left(1 + i).block(1, 1, m, m));
  Mat gb = t.form.gram().block(1, 1, m, m);
  PseudoEuclideanAlgebra base(SuperAlgebra(bsp, std::move(bleft)), HomBilinearForm(bsp, gb, fp));

  ExtensionData data = zero_extension_data(base, kind);
  Vec tvec(m);
  for (Index j = 0; j < m; ++j) {
    data.D.col(j) = t.algebra.product_basis(0, 1 + j).segment(1, m);
    data.xi.col(j) = t.algebra.product_basis(1 + j, 0).segment(1, m);
    tvec(j) = t.algebra.product_basis(1 + j, 0)(n - 1);
  }
  data.b0 = t.algebra.product_basis(0, 0).segment(1, m);
  if (data.c0) data.c0 = mul(mat_inverse(Mat(gb.transpose())), tvec);

  PseudoEuclideanAlgebra rebuilt;
  try {
    rebuilt = double_extend_unchecked(data);
  } catch (const Error& err) {
    return {std::nullopt, err.what()};
  }
  if (!(rebuilt == t)) {
    std::ostringstream os;
    os << "rebuild differs";
    if (!t.algebra.product_basis(0, 0)(n - 1).is_zero()) os << " (d.d has an e-component)";
    return {std::nullopt, os.str()};
  }
  SplitResult out{e, d, q, t, data, check_admissible(data)};
  return {std::move(out), {}};
}

}  // namespace

SplitResult split_double_extension(const PseudoEuclideanAlgebra& p) {
  const Index n = p.dim();
  Basis ideal = span_product(p.algebra);
  Basis meet = intersect(ideal, orthogonal_complement(p.form, ideal), n);
  // A zero product splits along any isotropic homogeneous vector, with zero data.
  if (p.algebra.is_trivial())
    if (auto e = choose_reducing_vector(p)) meet.push_back(*e);
  if (meet.empty()) throw Error(ErrorKind::NonDegenerateProduct, "A.A meets its orthogonal complement only in 0");
  if (auto r = check_pseudo_euclidean_novikov(p); !r.pass) throw Error(ErrorKind::PreconditionUnverified, r.summary());
  std::string why;
  for (const auto& e : homogeneous_candidates(p.space(), meet)) {
    Attempt a = try_split(p, e);
    if (a.result) return std::move(*a.result);
    why += (why.empty() ? "" : "; ") + a.why;
  }
  throw Error(ErrorKind::NotAdmissible, "no vector of A.A ∩ (A.A)⊥ rebuilds the algebra: " + why);
}

SuperAlgebra semidirect(const SuperAlgebra& a, const Representation& rep) {
  const Index n = a.dim();
  const Index m = rep.carrier.dim();
  if (static_cast<Index>(rep.l.size()) != n || static_cast<Index>(rep.r.size()) != n)
    throw Error(ErrorKind::ShapeMismatch, "representation needs one operator per basis vector");
  std::vector<int> par = a.space().parities();
  for (Index j = 0; j < m; ++j) par.push_back(rep.carrier.parity(j));
  SuperSpace s(par);
  std::vector<Mat> left(static_cast<std::size_t>(n + m), Mat::Zero(n + m, n + m));
  for (Index i = 0; i < n; ++i) {
    auto& li = left[static_cast<std::size_t>(i)];
    li.block(0, 0, n, n) = a.left(i);
    li.block(n, n, m, m) = rep.l[static_cast<std::size_t>(i)];
  }
  for (Index j = 0; j < m; ++j) {
    auto& lx = left[static_cast<std::size_t>(n + j)];
    for (Index i = 0; i < n; ++i)
      lx.block(n, i, m, 1) = koszul_sign(rep.carrier.parity(j), a.space().parity(i)) * rep.r[static_cast<std::size_t>(i)].col(j);
  }
  return SuperAlgebra(s, std::move(left));
}

namespace {

void require_tstar_inputs(const SuperAlgebra& a, const SuperAlgebra& star) {
  if (!(a.space() == star.space())) throw Error(ErrorKind::ShapeMismatch, "product and star live on different spaces");
  if (auto r = check_left_leibniz(a); !r.pass) throw Error(ErrorKind::StarPropertiesFail, "A is not left-Leibniz: " + r.summary());
  if (auto r = check_L(a); !r.pass) throw Error(ErrorKind::StarPropertiesFail, r.summary());
  auto laws = check_star_properties(a, star);
  for (const auto& part : laws.parts) {
    const char c = part.name.empty() ? ' ' : part.name[0];
    if ((c == 'a' || c == 'c' || c == 'd' || c == 'e') && part.name.size() > 1 && part.name[1] == ':' && !part.pass)
      throw Error(ErrorKind::StarPropertiesFail, part.summary());
  }
}

Representation tstar_rep(const SuperAlgebra& a, const SuperAlgebra& star, bool pi) {
  const auto& s = a.space();
  // On Π(A*) the sign in φ* is taken with the parity of Π(f); the A*-parity reading breaks antisymmetry.
  Representation rep{pi ? s.flipped() : s, {}, {}};
  for (Index i = 0; i < a.dim(); ++i) {
    rep.l.push_back(dual_operator(rep.carrier, a.left(i), 0, s.parity(i)));
    rep.r.push_back(-dual_operator(rep.carrier, star.left(i), 0, s.parity(i)));
  }
  return rep;
}

PseudoEuclideanAlgebra tstar_impl(const SuperAlgebra& a, const SuperAlgebra& star, bool pi) {
  require_tstar_inputs(a, star);
  SuperAlgebra prod = semidirect(a, tstar_rep(a, star, pi));
  const Index n = a.dim();
  Mat g = Mat::Zero(2 * n, 2 * n);
  // T*: <v_i, v_i*> = (-1)^{|v_i|}, <v_i*, v_i> = 1.  ΠT*: both 1.
  for (Index i = 0; i < n; ++i) {
    g(i, n + i) = pi ? Rational(1) : sign_pow(a.space().parity(i));
    g(n + i, i) = 1;
  }
  return PseudoEuclideanAlgebra(prod, HomBilinearForm(prod.space(), g, pi ? 1 : 0));
}

}  // namespace

PseudoEuclideanAlgebra tstar_extension(const SuperAlgebra& a, const SuperAlgebra& star) { return tstar_impl(a, star, false); }
PseudoEuclideanAlgebra pi_tstar_extension(const SuperAlgebra& a, const SuperAlgebra& star) { return tstar_impl(a, star, true); }

SuperAlgebra tstar_triangle(const SuperAlgebra& a, const SuperAlgebra& star, bool pi) {
  const auto& s = a.space();
  const Index n = a.dim();
  std::vector<int> par = s.parities();
  for (Index j = 0; j < n; ++j) par.push_back((s.parity(j) + (pi ? 1 : 0)) & 1);
  SuperSpace big(par);
  std::vector<Mat> left(static_cast<std::size_t>(2 * n), Mat::Zero(2 * n, 2 * n));
  for (Index i = 0; i < n; ++i) {
    Mat r = right_matrix(a, i);
    auto& li = left[static_cast<std::size_t>(i)];
    li.block(0, 0, n, n) = star.left(i);
    // v_i ▷ h = (-1)^{|v_i||h|} h∘R_{v_i};  g ▷ v_i = -g∘R_{v_i}
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        li(n + k, n + j) = koszul_sign(s.parity(i), big.parity(n + j)) * r(j, k);
        left[static_cast<std::size_t>(n + j)](n + k, i) = -r(j, k);
      }
  }
  return SuperAlgebra(big, std::move(left));
}

IdentityReport check_triangle_pairing(const PseudoEuclideanAlgebra& ext, const SuperAlgebra& triangle) {
  const Index n = ext.dim();
  const Mat& g = ext.form.gram();
  return pair_identity("<X*Y,Z>=<X,Y|>Z>", n, [&](Index y, Index z) {
    Mat res(n, 1);
    Vec yz = triangle.product_basis(y, z);
    for (Index x = 0; x < n; ++x) {
      Vec xy = ext.algebra.product_basis(x, y);
      Rational lhs(0), rhs(0);
      for (Index k = 0; k < n; ++k) {
        lhs += xy(k) * g(k, z);
        rhs += g(x, k) * yz(k);
      }
      res(x, 0) = lhs - rhs;
    }
    return res;
  });
}

PseudoEuclideanAlgebra tensor_construct(const PseudoEuclideanAlgebra& b, const SuperAlgebra& h, const HomBilinearForm& omega) {
  if (!(h.space() == omega.space())) throw Error(ErrorKind::ShapeMismatch, "H and Omega live on different spaces");
  if (auto r = check_pseudo_euclidean_novikov(b); !r.pass) throw Error(ErrorKind::PreconditionUnverified, r.summary());
  if (auto r = check_associative(h); !r.pass) throw Error(ErrorKind::HNotAssociative, r.summary());
  if (auto r = check_supercommutative(h); !r.pass) throw Error(ErrorKind::HNotAssociative, "H is not supercommutative: " + r.summary());
  if (omega.parity() != 0) throw Error(ErrorKind::OmegaNotInvariant, "Omega must be even");
  const Index hn = h.dim();
  const Mat& om = omega.gram();
  for (Index x = 0; x < hn; ++x)
    for (Index y = 0; y < hn; ++y)
      for (Index z = 0; z < hn; ++z) {
        Vec xy = h.product_basis(x, y), yz = h.product_basis(y, z);
        Rational lhs(0), rhs(0);
        for (Index k = 0; k < hn; ++k) {
          lhs += xy(k) * om(k, z);
          rhs += om(x, k) * yz(k);
        }
        if (lhs != rhs) {
          std::ostringstream os;
          os << "Omega(ab,c) != Omega(a,bc) at basis (" << x << "," << y << "," << z << ")";
          throw Error(ErrorKind::OmegaNotInvariant, os.str());
        }
      }

  const auto& bs = b.space();
  const auto& hs = h.space();
  const Index bn = b.dim(), n = bn * hn;
  auto idx = [&](Index i, Index al) { return i * hn + al; };
  std::vector<int> par;
  for (Index i = 0; i < bn; ++i)
    for (Index al = 0; al < hn; ++al) par.push_back((bs.parity(i) + hs.parity(al)) & 1);
  SuperSpace s(par);
  std::vector<Mat> left(static_cast<std::size_t>(n), Mat::Zero(n, n));
  Mat g = Mat::Zero(n, n);
  for (Index i = 0; i < bn; ++i)
    for (Index al = 0; al < hn; ++al)
      for (Index j = 0; j < bn; ++j)
        for (Index be = 0; be < hn; ++be) {
          const Rational sg = koszul_sign(hs.parity(al), bs.parity(j));
          g(idx(i, al), idx(j, be)) = sg * b.form.gram()(i, j) * om(al, be);
          auto& l = left[static_cast<std::size_t>(idx(i, al))];
          for (Index k = 0; k < bn; ++k) {
            if (b.algebra.c(i, j, k).is_zero()) continue;
            for (Index ga = 0; ga < hn; ++ga)
              if (!h.c(al, be, ga).is_zero()) l(idx(k, ga), idx(j, be)) = sg * b.algebra.c(i, j, k) * h.c(al, be, ga);
          }
        }
  return PseudoEuclideanAlgebra(SuperAlgebra(s, std::move(left)), HomBilinearForm(s, g, b.form.parity()));
}

std::vector<ExtensionData> sample_admissible_data(const PseudoEuclideanAlgebra& base, ExtensionKind kind, int count,
                                                  std::uint64_t seed, int max_attempts) {
  const auto& s = base.space();
  const Index m = base.dim();
  const int pd = extension_parity(kind);
  std::mt19937_64 rng(seed);
  // Sparse draws: zero four times as likely as each sign.
  std::uniform_int_distribution<int> pick(-1, 4);
  auto draw = [&] {
    int v = pick(rng);
    return Rational(v > 1 ? 0 : v == 0 ? 0 : v);
  };
  auto graded = [&](int parity) {
    Mat x = Mat::Zero(m, m);
    for (Index k = 0; k < m; ++k)
      for (Index i = 0; i < m; ++i)
        if (((s.parity(k) + s.parity(i)) & 1) == parity) x(k, i) = draw();
    return x;
  };
  auto even_vec = [&] {
    Vec v = Vec::Zero(m);
    for (Index i = 0; i < m; ++i)
      if (s.parity(i) == 0) v(i) = draw();
    return v;
  };

  std::vector<ExtensionData> out;
  std::set<std::string> seen;
  for (int t = 0; t < max_attempts && static_cast<int>(out.size()) < count; ++t) {
    ExtensionData d = zero_extension_data(base, kind);
    if (t > 0) {
      d.D = graded(pd);
      d.xi = graded(pd);
      d.b0 = even_vec();
      if (pd) d.c0 = even_vec();
    }
    if (!check_admissible(d).pass) continue;
    std::ostringstream key;
    key << d.D << '|' << d.xi << '|' << d.b0.transpose();
    if (d.c0) key << '|' << d.c0->transpose();
    if (seen.insert(key.str()).second) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace novikov
