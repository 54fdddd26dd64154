#pragma once

// Brute-force identities on basis triples, written directly from the product so they share no
// code path with the operator-matrix checkers.

#include "helpers.hpp"

namespace testing {

inline Vec basis_product(const SuperAlgebra& a, Index i, Index j) { return product(a, unit(a.dim(), i), unit(a.dim(), j)); }

inline Vec associator(const SuperAlgebra& a, Index i, Index j, Index k) {
  const Index n = a.dim();
  Vec u = unit(n, i), v = unit(n, j), w = unit(n, k);
  return product(a, product(a, u, v), w) - product(a, u, product(a, v, w));
}

template <typename F>
bool all_triples(const SuperAlgebra& a, F f) {
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j)
      for (Index k = 0; k < a.dim(); ++k)
        if (!f(i, j, k)) return false;
  return true;
}

inline bool oracle_left_symmetric(const SuperAlgebra& a) {
  const auto& s = a.space();
  return all_triples(a, [&](Index i, Index j, Index k) {
    return associator(a, i, j, k) == koszul_sign(s.parity(i), s.parity(j)) * associator(a, j, i, k);
  });
}

// (x•y)•z = (-1)^{|y||z|} (x•z)•y
inline bool oracle_right_commutative(const SuperAlgebra& a) {
  const auto& s = a.space();
  const Index n = a.dim();
  return all_triples(a, [&](Index i, Index j, Index k) {
    Vec x = unit(n, i), y = unit(n, j), z = unit(n, k);
    return product(a, product(a, x, y), z) == koszul_sign(s.parity(j), s.parity(k)) * product(a, product(a, x, z), y);
  });
}

inline bool oracle_novikov(const SuperAlgebra& a) { return oracle_left_symmetric(a) && oracle_right_commutative(a); }

// x•(y•z) = (x•y)•z + (-1)^{|x||y|} y•(x•z)
inline bool oracle_left_leibniz(const SuperAlgebra& a) {
  const auto& s = a.space();
  const Index n = a.dim();
  return all_triples(a, [&](Index i, Index j, Index k) {
    Vec x = unit(n, i), y = unit(n, j), z = unit(n, k);
    return product(a, x, product(a, y, z)) ==
           product(a, product(a, x, y), z) + koszul_sign(s.parity(i), s.parity(j)) * product(a, y, product(a, x, z));
  });
}

// x•(y•z) = (-1)^{|x||y|} y•(x•z)
inline bool oracle_L(const SuperAlgebra& a) {
  const auto& s = a.space();
  const Index n = a.dim();
  return all_triples(a, [&](Index i, Index j, Index k) {
    Vec x = unit(n, i), y = unit(n, j), z = unit(n, k);
    return product(a, x, product(a, y, z)) == koszul_sign(s.parity(i), s.parity(j)) * product(a, y, product(a, x, z));
  });
}

// <x•y, z> = -(-1)^{|x||y|} <y, x•z>
inline bool oracle_left_antisymmetric(const PseudoEuclideanAlgebra& p) {
  const auto& s = p.space();
  const Index n = p.dim();
  return all_triples(p.algebra, [&](Index i, Index j, Index k) {
    Vec x = unit(n, i), y = unit(n, j), z = unit(n, k);
    return p.form(product(p.algebra, x, y), z) == -koszul_sign(s.parity(i), s.parity(j)) * p.form(y, product(p.algebra, x, z));
  });
}

inline bool oracle_products_annihilate(const SuperAlgebra& a) {
  const Index n = a.dim();
  return all_triples(a, [&](Index i, Index j, Index k) {
    return is_zero(product(a, basis_product(a, i, j), unit(n, k)));
  });
}

// Graded antisymmetry plus the cyclic Jacobi sum
// (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0.
inline bool oracle_lie(const SuperAlgebra& b) {
  const auto& s = b.space();
  const Index n = b.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (basis_product(b, i, j) != -koszul_sign(s.parity(i), s.parity(j)) * basis_product(b, j, i)) return false;
  return all_triples(b, [&](Index i, Index j, Index k) {
    Vec x = unit(n, i), y = unit(n, j), z = unit(n, k);
    int px = s.parity(i), py = s.parity(j), pz = s.parity(k);
    Vec sum = koszul_sign(px, pz) * product(b, x, product(b, y, z)) + koszul_sign(py, px) * product(b, y, product(b, z, x)) +
              koszul_sign(pz, py) * product(b, z, product(b, x, y));
    return is_zero(sum);
  });
}

// Span of all products, computed by stacking.
inline Basis oracle_span_product(const SuperAlgebra& a) {
  Basis all;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) all.push_back(basis_product(a, i, j));
  return echelon_basis(all, a.dim());
}

}  // namespace testing
