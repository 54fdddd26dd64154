#include "novikov/metric.hpp"

namespace novikov {

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

template <typename F>
IdentityReport pair_vector_identity(const std::string& name, Index n, F residual) {
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Vec r = residual(i, j);
      if (!is_zero(r)) return IdentityReport::fail(name, {i, j}, r);
    }
  return IdentityReport::ok(name);
}

Rational sgn(int a, int b) { return koszul_sign(a, b); }

IdentityReport right_half_of_novikov(const SuperAlgebra& a) {
  std::vector<Mat> r;
  for (Index i = 0; i < a.dim(); ++i) r.push_back(right_matrix(a, i));
  const auto& s = a.space();
  return pair_identity("R_uR_v=(-1)^{|u||v|}R_vR_u", a.dim(), [&](Index i, Index j) {
    return super_commutator(r[static_cast<std::size_t>(i)], r[static_cast<std::size_t>(j)], s.parity(i), s.parity(j));
  });
}

}  // namespace

PseudoEuclideanAlgebra::PseudoEuclideanAlgebra(SuperAlgebra a, HomBilinearForm f) : algebra(std::move(a)), form(std::move(f)) {
  if (!(algebra.space() == form.space())) throw Error(ErrorKind::ShapeMismatch, "algebra and form live on different spaces");
}

IdentityReport check_form_report(const HomBilinearForm& form) {
  if (auto v = check_form(form.space(), form.gram(), form.parity())) {
    std::vector<Index> where;
    if (v->i >= 0) where = {v->i, v->j};
    return IdentityReport::fail("form", where, Vec(), v->invariant);
  }
  return IdentityReport::ok("form");
}

IdentityReport check_left_mul_antisymmetric(const PseudoEuclideanAlgebra& p) {
  const auto& s = p.space();
  return index_identity("left_mul_antisymmetric", p.dim(), [&](Index i) {
    Endo l{s, p.algebra.left(i), s.parity(i)};
    return Mat(adjoint(p.form, l).matrix + l.matrix);
  });
}

IdentityReport check_pseudo_euclidean_novikov(const PseudoEuclideanAlgebra& p) {
  return IdentityReport::all_of("pseudo_euclidean_novikov",
                                {check_form_report(p.form), check_novikov(p.algebra), check_left_mul_antisymmetric(p)});
}

IdentityReport check_vanishing_lemma(const PseudoEuclideanAlgebra& p) {
  auto anti = check_left_mul_antisymmetric(p);
  auto rhalf = right_half_of_novikov(p.algebra);
  if (!anti.pass || !rhalf.pass)
    throw Error(ErrorKind::PreconditionUnverified,
                "vanishing lemma needs antisymmetric L and commuting R: " + (anti.pass ? rhalf : anti).summary());
  const auto& a = p.algebra;
  std::vector<Mat> r;
  for (Index i = 0; i < a.dim(); ++i) r.push_back(right_matrix(a, i));
  return IdentityReport::all_of(
      "vanishing_lemma",
      {check_products_annihilate(a),
       pair_identity("L_{u.v}=0", a.dim(), [&](Index i, Index j) { return linear_combination(a.lefts(), a.product_basis(i, j)); }),
       pair_identity("R_uR_v=0", a.dim(), [&](Index i, Index j) {
         return mul(r[static_cast<std::size_t>(i)], r[static_cast<std::size_t>(j)]);
       })});
}

SuperAlgebra levi_civita(const SuperAlgebra& lie, const HomBilinearForm& form) {
  if (!(lie.space() == form.space())) throw Error(ErrorKind::ShapeMismatch, "bracket and form live on different spaces");
  if (auto j = check_super_jacobi(lie); !j.pass) throw Error(ErrorKind::NotLie, j.summary());
  const auto& s = lie.space();
  const Index n = lie.dim();
  const Mat& g = form.gram();
  Mat ginv_t = form.gram_inverse().transpose();
  const Rational half(1, 2);
  // <[v_a, v_b], v_c>
  auto br = [&](Index a, Index b, Index c) {
    Rational t(0);
    for (Index k = 0; k < n; ++k)
      if (!lie.c(a, b, k).is_zero()) t += lie.c(a, b, k) * g(k, c);
    return t;
  };
  std::vector<Mat> left(static_cast<std::size_t>(n), Mat::Zero(n, n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const int pi = s.parity(i), pj = s.parity(j);
      Vec rhs(n);
      for (Index l = 0; l < n; ++l) {
        const int pl = s.parity(l);
        rhs(l) = half * (br(i, j, l) - sgn(pi, pj) * sgn(pi, pl) * br(j, l, i) + sgn(pj, pl) * sgn(pi, pl) * br(l, i, j));
      }
      left[static_cast<std::size_t>(i)].col(j) = mul(ginv_t, rhs);
    }
  SuperAlgebra out(s, std::move(left));
  if (!(commutator(out) == lie)) throw Error(ErrorKind::Internal, "Levi-Civita product is not torsion free");
  if (auto a = check_left_mul_antisymmetric(PseudoEuclideanAlgebra(out, form)); !a.pass)
    throw Error(ErrorKind::Internal, "Levi-Civita product is not metric: " + a.summary());
  return out;
}

Endo curvature(const PseudoEuclideanAlgebra& p, const Vec& u, const Vec& v) {
  const auto& s = p.space();
  int pu = s.require_homogeneous(u, "curvature argument u");
  int pv = s.require_homogeneous(v, "curvature argument v");
  Vec b = product(commutator(p.algebra), u, v);
  Mat m = left_matrix(p.algebra, b) - super_commutator(left_matrix(p.algebra, u), left_matrix(p.algebra, v), pu, pv);
  return Endo{s, std::move(m), (pu + pv) & 1};
}

IdentityReport check_flat(const PseudoEuclideanAlgebra& p) {
  const auto& a = p.algebra;
  const auto& s = p.space();
  SuperAlgebra br = commutator(a);
  return pair_identity("flat", a.dim(), [&](Index i, Index j) {
    return Mat(linear_combination(a.lefts(), br.product_basis(i, j)) - super_commutator(a.left(i), a.left(j), s.parity(i), s.parity(j)));
  });
}

bool is_flat(const PseudoEuclideanAlgebra& p) { return check_flat(p).pass; }

SuperAlgebra star_product(const PseudoEuclideanAlgebra& p) {
  const auto& a = p.algebra;
  const Index n = a.dim();
  const Mat& g = p.form.gram();
  // With C_j(k, i) = c[i][j][k] (right multiplication by v_j), star left matrix is G^{-1} C_j^T G.
  std::vector<Mat> left;
  for (Index j = 0; j < n; ++j) {
    Mat cj_t(n, n);
    for (Index i = 0; i < n; ++i) cj_t.row(i) = a.left(i).col(j).transpose();
    left.push_back(mul(mul(p.form.gram_inverse(), cj_t), g));
  }
  SuperAlgebra star(a.space(), std::move(left));
  if (check_left_mul_antisymmetric(p).pass) {
    const auto& s = a.space();
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (!is_zero(Vec(star.product_basis(i, j) + sgn(s.parity(i), s.parity(j)) * star.product_basis(j, i))))
          throw Error(ErrorKind::Internal, "star product is not graded antisymmetric");
  }
  return star;
}

IdentityReport check_star_properties(const PseudoEuclideanAlgebra& p) { return check_star_properties(p, star_product(p)); }

IdentityReport check_star_properties(const PseudoEuclideanAlgebra& p, const SuperAlgebra& star) {
  return check_star_properties(p.algebra, star);
}

IdentityReport check_star_properties(const SuperAlgebra& a, const SuperAlgebra& star) {
  const auto& s = a.space();
  const Index n = a.dim();
  const auto& ls = star.lefts();
  auto L = [&](Index i) -> const Mat& { return a.left(i); };
  auto S = [&](Index i) -> const Mat& { return ls[static_cast<std::size_t>(i)]; };
  std::vector<IdentityReport> parts;
  parts.push_back(pair_vector_identity("a: v*w=-(-1)^{|v||w|}w*v", n, [&](Index i, Index j) {
    return Vec(star.product_basis(i, j) + sgn(s.parity(i), s.parity(j)) * star.product_basis(j, i));
  }));
  parts.push_back(pair_identity("b: v*(w*z)+v.(w*z)=(v.w)*z+(-1)^{|v||w|}w*(v.z)", n, [&](Index i, Index j) {
    return Mat(mul(S(i), S(j)) + mul(L(i), S(j)) - linear_combination(ls, a.product_basis(i, j)) -
               sgn(s.parity(i), s.parity(j)) * mul(S(j), L(i)));
  }));
  parts.push_back(pair_identity("c: u*(v*w)=0", n, [&](Index i, Index j) { return mul(S(i), S(j)); }));
  parts.push_back(pair_identity("d: u.(v*w)=0", n, [&](Index i, Index j) { return mul(L(i), S(j)); }));
  parts.push_back(pair_identity("e: (u.v)*w=-(-1)^{|u||v|}v*(u.w)", n, [&](Index i, Index j) {
    return Mat(linear_combination(ls, a.product_basis(i, j)) + sgn(s.parity(i), s.parity(j)) * mul(S(j), L(i)));
  }));
  parts.push_back(check_super_jacobi(star));
  parts.push_back(pair_identity("two_step: (x*y)*z=0", n, [&](Index i, Index j) { return linear_combination(ls, star.product_basis(i, j)); }));
  return IdentityReport::all_of("star_properties", std::move(parts));
}

IdentityReport full_suite(const PseudoEuclideanAlgebra& p) {
  std::vector<IdentityReport> parts{check_pseudo_euclidean_novikov(p)};
  try {
    parts.push_back(check_vanishing_lemma(p));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::PreconditionUnverified) throw;
    parts.push_back(IdentityReport::fail("vanishing_lemma", {}, Vec(), "precondition unverified"));
  }
  parts.push_back(check_star_properties(p));
  parts.push_back(check_flat(p));
  return IdentityReport::all_of("full_suite", std::move(parts));
}

std::variant<MilnorDecomposition, NotMilnor> milnor_decomposition(const PseudoEuclideanAlgebra& p) {
  const auto& a = p.algebra;
  const Index n = a.dim();
  Basis ideal = span_product(a);
  Basis perp = orthogonal_complement(p.form, ideal);
  Basis meet = intersect(ideal, perp, n);
  if (!meet.empty()) return NotMilnor{meet.front()};

  auto fail = [](const std::string& what) { throw Error(ErrorKind::Internal, "Milnor decomposition: " + what); };
  if (!subspace_product(a, ideal, ideal).empty()) fail("I is not a trivial subalgebra");
  if (!subspace_product(a, perp, perp).empty()) fail("complement is not a trivial subalgebra");
  Basis both = ideal;
  both.insert(both.end(), perp.begin(), perp.end());
  if (static_cast<Index>(echelon_basis(both, n).size()) != n) fail("I and its complement do not span A");
  if (!same_span(ideal, span_derived(a), n)) fail("A.A differs from [A,A]");
  for (const auto& u : ideal)
    if (!is_zero(left_matrix(a, u))) fail("L_u is nonzero for some u in I");
  for (const auto& u : perp)
    if (!is_zero(right_matrix(a, u))) fail("L_u differs from ad_u on the complement");
  return MilnorDecomposition{std::move(ideal), std::move(perp)};
}

Basis center_of_minus(const SuperAlgebra& a) { return normalizers(commutator(a)).left; }

bool is_reducing_vector(const PseudoEuclideanAlgebra& p, const Vec& e) {
  if (e.size() != p.dim() || is_zero(e)) return false;
  if (!p.space().parity_of(e)) return false;
  return is_zero(left_matrix(p.algebra, e)) && is_zero(right_matrix(p.algebra, e)) && p.form(e, e).is_zero();
}

Basis reduction_representatives(const PseudoEuclideanAlgebra& p, const Vec& e) {
  Basis span{e}, reps;
  for (const auto& v : orthogonal_complement(p.form, {e}))
    if (!in_span(span, v)) {
      span.push_back(v);
      reps.push_back(v);
    }
  return reps;
}

PseudoEuclideanAlgebra isotropic_reduction(const PseudoEuclideanAlgebra& p, const Vec& e) {
  if (!is_reducing_vector(p, e))
    throw Error(ErrorKind::NotAdmissible, "reduction vector must be nonzero, homogeneous, isotropic, with L_e = R_e = 0");
  Basis reps = reduction_representatives(p, e);
  Basis basis{e};
  basis.insert(basis.end(), reps.begin(), reps.end());
  const Index m = static_cast<Index>(reps.size());
  std::vector<int> par;
  for (const auto& r : reps) par.push_back(p.space().require_homogeneous(r, "coset representative"));
  SuperSpace q(par);
  std::vector<Mat> left(static_cast<std::size_t>(m), Mat::Zero(m, m));
  Mat gram(m, m);
  for (Index x = 0; x < m; ++x)
    for (Index y = 0; y < m; ++y) {
      const Vec& rx = reps[static_cast<std::size_t>(x)];
      const Vec& ry = reps[static_cast<std::size_t>(y)];
      Vec c = coordinates(basis, product(p.algebra, rx, ry));
      left[static_cast<std::size_t>(x)].col(y) = c.tail(m);
      gram(x, y) = p.form(rx, ry);
    }
  return PseudoEuclideanAlgebra(SuperAlgebra(q, std::move(left)), HomBilinearForm(q, std::move(gram), p.form.parity()));
}

std::optional<Vec> choose_reducing_vector(const PseudoEuclideanAlgebra& p) {
  const Index n = p.dim();
  Basis ideal = span_product(p.algebra);
  for (const auto& v : intersect(ideal, orthogonal_complement(p.form, ideal), n))
    if (is_reducing_vector(p, v)) return v;
  if (!p.algebra.is_trivial()) return std::nullopt;
  for (Index i = 0; i < n; ++i)
    if (is_reducing_vector(p, unit(n, i))) return unit(n, i);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (int sign : {1, -1}) {
        Vec v = unit(n, i) + Rational(sign) * unit(n, j);
        if (is_reducing_vector(p, v)) return v;
      }
  return std::nullopt;
}

std::vector<PseudoEuclideanAlgebra> reduction_chain(const PseudoEuclideanAlgebra& p, int max_steps) {
  std::vector<PseudoEuclideanAlgebra> chain{p};
  for (int step = 0; step < max_steps && !chain.back().algebra.is_trivial(); ++step) {
    auto e = choose_reducing_vector(chain.back());
    if (!e) break;
    chain.push_back(isotropic_reduction(chain.back(), *e));
  }
  return chain;
}

Representation adjoint_representation(const SuperAlgebra& a) {
  Representation rep{a.space(), {}, a.lefts()};
  for (Index i = 0; i < a.dim(); ++i) rep.r.push_back(right_matrix(a, i));
  return rep;
}

IdentityReport check_representation(const SuperAlgebra& a, const Representation& rep) {
  const auto& s = a.space();
  const Index n = a.dim();
  if (static_cast<Index>(rep.r.size()) != n || static_cast<Index>(rep.l.size()) != n)
    throw Error(ErrorKind::ShapeMismatch, "representation needs one operator per basis vector");
  auto r = [&](Index i) -> const Mat& { return rep.r[static_cast<std::size_t>(i)]; };
  auto l = [&](Index i) -> const Mat& { return rep.l[static_cast<std::size_t>(i)]; };
  std::vector<IdentityReport> parts;
  IdentityReport grading = IdentityReport::ok("grading");
  for (Index i = 0; i < n && grading.pass; ++i)
    if (!endo_respects_parity(rep.carrier, r(i), s.parity(i)) || !endo_respects_parity(rep.carrier, l(i), s.parity(i)))
      grading = IdentityReport::fail("grading", {i}, Vec());
  parts.push_back(grading);
  parts.push_back(pair_identity("[l(u),l(v)]=0", n, [&](Index i, Index j) {
    return super_commutator(l(i), l(j), s.parity(i), s.parity(j));
  }));
  parts.push_back(pair_identity("l(u)r(v)=r(u.v)", n, [&](Index i, Index j) {
    return Mat(mul(l(i), r(j)) - linear_combination(rep.r, a.product_basis(i, j)));
  }));
  parts.push_back(pair_identity("l(u.v)=0", n, [&](Index i, Index j) { return linear_combination(rep.l, a.product_basis(i, j)); }));
  parts.push_back(pair_identity("r(u)r(v)=0", n, [&](Index i, Index j) { return mul(r(i), r(j)); }));
  parts.push_back(pair_identity("r(u)l(v)=0", n, [&](Index i, Index j) { return mul(r(i), l(j)); }));
  return IdentityReport::all_of("representation", std::move(parts));
}

Mat dual_operator(const SuperSpace& space, const Mat& m, int phi_parity, int u_parity) {
  const Index n = space.dim();
  Mat out(n, n);
  for (Index j = 0; j < n; ++j) {
    const bool flip = (space.parity(j) & (phi_parity + u_parity)) & 1;
    for (Index k = 0; k < n; ++k) out(k, j) = flip ? m(j, k) : Rational(-m(j, k));
  }
  return out;
}

Representation build_dual_representation(const PseudoEuclideanAlgebra& p) {
  const auto& s = p.space();
  SuperAlgebra star = star_product(p);
  Representation rep{s, {}, {}};
  for (Index i = 0; i < p.dim(); ++i) {
    rep.l.push_back(dual_operator(s, p.algebra.left(i), 0, s.parity(i)));
    rep.r.push_back(-dual_operator(s, star.left(i), 0, s.parity(i)));
  }
  return rep;
}

IdentityReport check_phi_isomorphism(const PseudoEuclideanAlgebra& p) {
  const auto& s = p.space();
  const auto& a = p.algebra;
  SuperAlgebra star = star_product(p);
  // Phi(v_a) = <v_a, .> = sum_j G(a, j) v_j*
  Mat phi = p.form.gram().transpose();
  const int fp = p.form.parity();
  IdentityReport inv = mat_det(phi).is_zero() ? IdentityReport::fail("Phi invertible", {}, Vec()) : IdentityReport::ok("Phi invertible");
  auto left_part = index_identity("Phi(L_u a)=(-1)^{|Phi||u|}(L_u)*(Phi a)", a.dim(), [&](Index i) {
    Mat n = dual_operator(s, a.left(i), 0, s.parity(i));
    return Mat(mul(phi, a.left(i)) - sgn(fp, s.parity(i)) * mul(n, phi));
  });
  auto right_part = index_identity("Phi(R_u a)=-(-1)^{|Phi||u|}(L*_u)*(Phi a)", a.dim(), [&](Index i) {
    Mat n = dual_operator(s, star.left(i), 0, s.parity(i));
    return Mat(mul(phi, right_matrix(a, i)) + sgn(fp, s.parity(i)) * mul(n, phi));
  });
  return IdentityReport::all_of("phi_isomorphism", {inv, left_part, right_part});
}

}  // namespace novikov
