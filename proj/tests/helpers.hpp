#pragma once

#include <initializer_list>

#include "novikov/catalog.hpp"
#include "novikov/extensions.hpp"

namespace testing {

using namespace novikov;

inline Mat M(std::initializer_list<std::initializer_list<Rational>> rows) {
  Mat m(static_cast<Index>(rows.size()), rows.size() ? static_cast<Index>(rows.begin()->size()) : 0);
  Index r = 0;
  for (const auto& row : rows) {
    Index c = 0;
    for (const auto& x : row) m(r, c++) = x;
    ++r;
  }
  return m;
}

inline Vec V(std::initializer_list<Rational> xs) {
  Vec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

inline Rational Q(long n, long d = 1) { return Rational(n, d); }

inline Mat I(Index n) { return Mat::Identity(n, n); }

inline PseudoEuclideanAlgebra trivial(int even, int odd, const Mat& gram, int form_parity) {
  auto s = SuperSpace::of_sdim(even, odd);
  return PseudoEuclideanAlgebra(SuperAlgebra::trivial(s), HomBilinearForm(s, gram, form_parity));
}

inline PseudoEuclideanAlgebra family(const std::string& id, Params p = {}) { return instantiate(id, p); }

// Coefficient of basis vector k in v_i • v_j.
inline Rational c(const PseudoEuclideanAlgebra& p, Index i, Index j, Index k) { return p.algebra.c(i, j, k); }

inline bool is_kind(const Error& e, ErrorKind k) { return e.kind() == k; }

}  // namespace testing

#define CHECK_THROWS_KIND(expr, kind_)                                        \
  do {                                                                        \
    bool thrown_ = false;                                                     \
    try {                                                                     \
      (void)(expr);                                                           \
    } catch (const novikov::Error& e_) {                                      \
      thrown_ = true;                                                         \
      CHECK_MESSAGE(e_.kind() == novikov::ErrorKind::kind_, e_.what());       \
    }                                                                         \
    CHECK_MESSAGE(thrown_, "expected " #kind_);                               \
  } while (0)
