#include "novikov/catalog.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <sstream>
#include <thread>

namespace novikov {

std::string params_string(const Params& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : p) {
    os << (first ? "" : ",") << k << "=" << v;
    first = false;
  }
  return os.str();
}

const char* to_string(Section s) { return s == Section::nondegenerate ? "nondegenerate" : "degenerate"; }

namespace {

// Assembles one catalog instance from named basis vectors.
// sym(x, y, c) is c x*⊙y*: <x,y> gets c (-1)^{|x||y|} and <y,x> gets c, so mixed pairs are symmetric
// and two odd vectors give <x,y> = -c, <y,x> = c. sq(x, c) is c x*⊗x*.
struct Builder {
  std::vector<std::string> names;
  std::vector<int> par;
  ProductTable table;
  Mat g;

  Builder(std::vector<std::string> n, std::vector<int> p)
      : names(std::move(n)), par(std::move(p)), table(SuperSpace(par)), g(Mat::Zero(static_cast<Index>(par.size()), static_cast<Index>(par.size()))) {}

  Index ix(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw Error(ErrorKind::Internal, "catalog basis has no vector " + name);
    return static_cast<Index>(it - names.begin());
  }
  Builder& prod(const std::string& x, const std::string& y, const std::string& z, const Rational& c) {
    if (!c.is_zero()) table.add(ix(x), ix(y), ix(z), c);
    return *this;
  }
  Builder& sym(const std::string& x, const std::string& y, const Rational& c) {
    Index i = ix(x), j = ix(y);
    g(i, j) += koszul_sign(par[static_cast<std::size_t>(i)], par[static_cast<std::size_t>(j)]) * c;
    g(j, i) += c;
    return *this;
  }
  Builder& sq(const std::string& x, const Rational& c) {
    g(ix(x), ix(x)) += c;
    return *this;
  }
  PseudoEuclideanAlgebra done(int form_parity) const {
    SuperSpace s(par);
    return PseudoEuclideanAlgebra(table.build(), HomBilinearForm(s, g, form_parity));
  }
};

const Rational& P(const Params& p, const char* name) {
  auto it = p.find(name);
  if (it == p.end()) throw Error(ErrorKind::Internal, std::string("missing parameter ") + name);
  return it->second;
}

std::vector<Rational> rats(std::initializer_list<int> xs) {
  std::vector<Rational> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

ParamSpec scale_nz(std::string name) { return {std::move(name), ParamDomain::nonzero, rats({1, 2, -3})}; }
ParamSpec scale_any(std::string name) { return {std::move(name), ParamDomain::any, rats({0, 1, 2, -3})}; }
ParamSpec coef(std::string name) { return {std::move(name), ParamDomain::any, rats({0, 1, -2})}; }
ParamSpec coef_nz(std::string name) { return {std::move(name), ParamDomain::nonzero, rats({1, -2})}; }
ParamSpec sign(std::string name) { return {std::move(name), ParamDomain::sign, rats({1, -1})}; }

using Deg = std::function<std::optional<bool>(const Params&)>;
using Nil = std::function<bool(const Params&)>;

Deg deg_always(std::optional<bool> v) {
  return [v](const Params&) { return v; };
}
Nil nil_always(bool v) {
  return [v](const Params&) { return v; };
}

std::vector<FamilySpec> make_catalog() {
  std::vector<FamilySpec> out;
  auto add = [&](FamilySpec f) { out.push_back(std::move(f)); };
  const auto ND = Section::nondegenerate;
  const auto DG = Section::degenerate;

  // ---- dimension 2

  add({"A2_1", "A2_1", 2, 0, 0, {"e1", "e2"}, {sign("eps")}, ND, deg_always(std::nullopt), nil_always(true),
       [](const Params& p) { return Builder({"e1", "e2"}, {0, 0}).sq("e1", 1).sq("e2", P(p, "eps")).done(0); }, {}});
  add({"A2_1:odd", "A2_1", 1, 1, 1, {"e1", "f1"}, {}, ND, deg_always(std::nullopt), nil_always(true),
       [](const Params&) { return Builder({"e1", "f1"}, {0, 1}).sym("e1", "f1", 1).done(1); }, {}});
  add({"A2_2", "A2_2", 1, 1, 1, {"e1", "f1"}, {coef_nz("alpha")}, DG, deg_always(true), nil_always(true),
       [](const Params& p) {
         return Builder({"e1", "f1"}, {0, 1}).prod("f1", "f1", "e1", P(p, "alpha")).sym("e1", "f1", 1).done(1);
       },
       {}});

  // ---- dimension 3

  add({"A3_1", "A3_1", 3, 0, 0, {"e1", "e2", "e3"}, {}, ND, deg_always(std::nullopt), nil_always(true),
       [](const Params&) { return Builder({"e1", "e2", "e3"}, {0, 0, 0}).sq("e1", 1).sq("e2", 1).sq("e3", 1).done(0); }, {}});
  add({"A3_2", "A3_2", 3, 0, 0, {"e1", "e2", "f1"}, {scale_nz("lambda"), sign("eps")}, ND, deg_always(false), nil_always(false),
       [](const Params& p) {
         const auto &l = P(p, "lambda"), &e = P(p, "eps");
         return Builder({"e1", "e2", "f1"}, {0, 0, 0})
             .prod("f1", "e1", "e2", l)
             .prod("f1", "e2", "e1", -e * l)
             .sq("e1", 1).sq("e2", e).sq("f1", 1)
             .done(0);
       },
       {}});
  // -e1⊙e2 with e1, e2 odd: G(e1,e2) = 1, G(e2,e1) = -1
  add({"A3_3", "A3_3", 1, 2, 0, {"f1", "e1", "e2"}, {scale_nz("lambda")}, ND, deg_always(false), nil_always(false),
       [](const Params& p) {
         const auto& l = P(p, "lambda");
         return Builder({"f1", "e1", "e2"}, {0, 1, 1})
             .prod("f1", "e1", "e1", l)
             .prod("f1", "e2", "e2", -l)
             .sym("e1", "e2", -1).sq("f1", 1)
             .done(0);
       },
       {}});
  add({"A3_4", "A3_4", 1, 2, 0, {"f1", "e1", "e2"}, {scale_nz("lambda")}, ND, deg_always(false), nil_always(false),
       [](const Params& p) {
         return Builder({"f1", "e1", "e2"}, {0, 1, 1})
             .prod("f1", "e1", "e2", P(p, "lambda"))
             .prod("f1", "e2", "e1", 1)
             .sym("e1", "e2", -1).sq("f1", 1)
             .done(0);
       },
       {}});
  add({"A3_5", "A3_5", 3, 0, 0, {"e1", "e2", "e3"}, {scale_nz("lambda")}, DG, deg_always(true), nil_always(true),
       [](const Params& p) {
         const auto& l = P(p, "lambda");
         return Builder({"e1", "e2", "e3"}, {0, 0, 0})
             .prod("e1", "e1", "e2", l)
             .prod("e1", "e2", "e3", -l)
             .sym("e1", "e3", 1).sq("e2", 1)
             .done(0);
       },
       {}});
  add({"A3_6", "A3_6", 1, 2, 0, {"e1", "e2", "e3"}, {scale_nz("lambda")}, DG, deg_always(true), nil_always(true),
       [](const Params& p) {
         return Builder({"e1", "e2", "e3"}, {0, 1, 1})
             .prod("e1", "e2", "e3", P(p, "lambda"))
             .sq("e1", 1).sym("e2", "e3", 1)
             .done(0);
       },
       {}});

  // ---- dimension 4, A•A non-degenerate

  add({"A4_1", "A4_1", 4, 0, 0, {"e1", "e2", "e3", "e4"}, {}, ND, deg_always(std::nullopt), nil_always(true),
       [](const Params&) {
         return Builder({"e1", "e2", "e3", "e4"}, {0, 0, 0, 0}).sq("e1", 1).sq("e2", 1).sq("e3", 1).sq("e4", 1).done(0);
       },
       {}});
  add({"A4_1:odd", "A4_1", 2, 2, 1, {"e1", "f1", "e2", "f2"}, {}, ND, deg_always(std::nullopt), nil_always(true),
       [](const Params&) {
         return Builder({"e1", "f1", "e2", "f2"}, {0, 0, 1, 1}).sym("e1", "e2", 1).sym("f1", "f2", 1).done(1);
       },
       {}});

  auto a42_product = [](Builder& b, const Params& p) {
    const auto &l = P(p, "lambda"), &e = P(p, "eps");
    b.prod("f1", "e1", "e2", l).prod("f1", "e2", "e1", -e * l);
  };
  // -alpha f1⊙f2, both even: G(f1,f2) = G(f2,f1) = -alpha
  add({"A4_2:form1", "A4_2", 4, 0, 0, {"e1", "e2", "f1", "f2"}, {scale_nz("lambda"), sign("eps")}, ND, deg_always(false), nil_always(false),
       [a42_product](const Params& p) {
         Builder b({"e1", "e2", "f1", "f2"}, {0, 0, 0, 0});
         a42_product(b, p);
         return b.sq("e1", 1).sq("e2", P(p, "eps")).sq("f1", 1).sq("f2", 1).done(0);
       },
       {}});
  add({"A4_2:form2", "A4_2", 4, 0, 0, {"e1", "e2", "f1", "f2"}, {scale_nz("lambda"), sign("eps"), coef("alpha")}, ND, deg_always(false),
       nil_always(false),
       [a42_product](const Params& p) {
         Builder b({"e1", "e2", "f1", "f2"}, {0, 0, 0, 0});
         a42_product(b, p);
         const auto& al = P(p, "alpha");
         return b.sq("e1", 1).sq("e2", P(p, "eps")).sq("f1", 1).sym("f1", "f2", -al).sq("f2", al * al - 1).done(0);
       },
       {}});
  add({"A4_2:form3", "A4_2", 4, 0, 0, {"e1", "e2", "f1", "f2"}, {scale_nz("lambda"), sign("eps")}, ND, deg_always(false), nil_always(false),
       [a42_product](const Params& p) {
         Builder b({"e1", "e2", "f1", "f2"}, {0, 0, 0, 0});
         a42_product(b, p);
         return b.sq("e1", 1).sq("e2", P(p, "eps")).sq("f1", -1).sq("f2", 1).done(0);
       },
       {}});
  add({"A4_3:form1", "A4_3", 2, 2, 0, {"f1", "f2", "e1", "e2"}, {scale_nz("lambda"), sign("eps")}, ND, deg_always(false), nil_always(false),
       [a42_product](const Params& p) {
         Builder b({"f1", "f2", "e1", "e2"}, {0, 0, 1, 1});
         a42_product(b, p);
         return b.sym("e1", "e2", -1).sq("f1", 1).sq("f2", 1).done(0);
       },
       {}});
  add({"A4_3:form2", "A4_3", 2, 2, 0, {"f1", "f2", "e1", "e2"}, {scale_nz("lambda"), sign("eps"), coef("alpha")}, ND, deg_always(false),
       nil_always(false),
       [a42_product](const Params& p) {
         Builder b({"f1", "f2", "e1", "e2"}, {0, 0, 1, 1});
         a42_product(b, p);
         const auto& al = P(p, "alpha");
         return b.sym("e1", "e2", 1).sq("f1", 1).sym("f1", "f2", -al).sq("f2", al * al - 1).done(0);
       },
       {}});

  auto a44 = [](bool second) {
    return [second](const Params& p) {
      const auto &l = P(p, "lambda"), &e = P(p, "eps");
      return Builder({"f1", "f2", "e1", "e2"}, {0, 0, 1, 1})
          .prod("f1", "e1", "e1", l)
          .prod("f1", "e2", "e2", -l)
          .sym("e1", "e2", -1)
          .sq("f1", second ? Rational(1) : e)
          .sq("f2", second ? e : Rational(1))
          .done(0);
    };
  };
  add({"A4_4:form1", "A4_4", 2, 2, 0, {"f1", "f2", "e1", "e2"}, {scale_nz("lambda"), sign("eps")}, ND, deg_always(false), nil_always(false),
       a44(false), {}});
  add({"A4_4:form2", "A4_4", 2, 2, 0, {"f1", "f2", "e1", "e2"}, {scale_nz("lambda"), sign("eps")}, ND, deg_always(false), nil_always(false),
       a44(true), {}});

  auto a45_product = [](Builder& b, const Params& p) { b.prod("f1", "e1", "e2", P(p, "lambda")).prod("f1", "e2", "e1", 1); };
  auto a45 = [a45_product](bool second) {
    return [second, a45_product](const Params& p) {
      const auto& e = P(p, "eps");
      Builder b({"f1", "f2", "e1", "e2"}, {0, 0, 1, 1});
      a45_product(b, p);
      return b.sym("e1", "e2", -1).sq("f1", second ? Rational(1) : e).sq("f2", second ? e : Rational(1)).done(0);
    };
  };
  add({"A4_5:form1", "A4_5", 2, 2, 0, {"f1", "f2", "e1", "e2"}, {scale_nz("lambda"), sign("eps")}, ND, deg_always(false), nil_always(false),
       a45(false), {}});
  add({"A4_5:form2", "A4_5", 2, 2, 0, {"f1", "f2", "e1", "e2"}, {scale_nz("lambda"), sign("eps")}, ND, deg_always(false), nil_always(false),
       a45(true), {}});
  add({"A4_5:form_gamma", "A4_5", 2, 2, 0, {"f1", "f2", "e1", "e2"}, {scale_nz("lambda"), coef("gamma")}, ND, deg_always(false),
       nil_always(false),
       [a45_product](const Params& p) {
         const auto& ga = P(p, "gamma");
         Builder b({"f1", "f2", "e1", "e2"}, {0, 0, 1, 1});
         a45_product(b, p);
         return b.sym("e1", "e2", -1).sq("f1", 1).sym("f1", "f2", -ga).sq("f2", ga * ga + 1).done(0);
       },
       {}});
  // odd form; every pair is mixed so ⊙ is symmetric
  add({"A4_6", "A4_6", 2, 2, 1, {"e1", "f1", "e2", "f2"}, {scale_nz("lambda")}, ND, deg_always(false), nil_always(false),
       [](const Params& p) {
         const auto& l = P(p, "lambda");
         return Builder({"e1", "f1", "e2", "f2"}, {0, 0, 1, 1})
             .prod("f1", "e1", "e1", l)
             .prod("f1", "e2", "e2", -l)
             .sym("e1", "e2", 1).sym("f1", "f2", 1)
             .done(1);
       },
       {}});

  // ---- dimension 4 even, A•A degenerate

  // Nilpotent exactly when a = 0; then the product is zero iff alpha = beta = 0.
  add({"A4_7", "A4_7", 4, 0, 0, {"e", "e1", "e2", "d"}, {scale_any("a"), coef("alpha"), coef("beta"), sign("eps")}, DG,
       [](const Params& p) -> std::optional<bool> {
         if (!P(p, "a").is_zero()) return false;
         if (P(p, "alpha").is_zero() && P(p, "beta").is_zero()) return std::nullopt;
         return true;
       },
       [](const Params& p) { return P(p, "a").is_zero(); },
       [](const Params& p) {
         const auto &a = P(p, "a"), &al = P(p, "alpha"), &be = P(p, "beta"), &e = P(p, "eps");
         return Builder({"e", "e1", "e2", "d"}, {0, 0, 0, 0})
             .prod("d", "e1", "e2", -a * e).prod("d", "e1", "e", -al)
             .prod("d", "e2", "e1", a).prod("d", "e2", "e", -be * e)
             .prod("d", "d", "e1", al).prod("d", "d", "e2", be)
             .sym("e", "d", 1).sq("e1", 1).sq("e2", e)
             .done(0);
       },
       {}});
  add({"A4_8", "A4_8", 4, 0, 0, {"e", "e1", "e2", "d"}, {scale_nz("a"), coef("alpha"), sign("eps"), sign("rho")}, DG, deg_always(true),
       nil_always(true),
       [](const Params& p) {
         const auto &a = P(p, "a"), &al = P(p, "alpha"), &e = P(p, "eps");
         return Builder({"e", "e1", "e2", "d"}, {0, 0, 0, 0})
             .prod("e2", "e1", "e", -a * e).prod("e2", "d", "e1", a)
             .prod("d", "e1", "e", -al * e).prod("d", "d", "e1", al)
             .sym("e", "d", 1).sq("e1", e).sq("e2", P(p, "rho"))
             .done(0);
       },
       {}});
  add({"A4_9", "A4_9", 4, 0, 0, {"e", "e1", "e2", "d"}, {scale_nz("a"), coef("alpha")}, DG, deg_always(true), nil_always(true),
       [](const Params& p) {
         const auto &a = P(p, "a"), &al = P(p, "alpha");
         return Builder({"e", "e1", "e2", "d"}, {0, 0, 0, 0})
             .prod("e2", "e2", "e", -a).prod("e2", "d", "e1", a)
             .prod("d", "e2", "e", -al).prod("d", "d", "e1", al)
             .sym("e", "d", 1).sym("e1", "e2", 1)
             .done(0);
       },
       {}});
  // e1, e2 odd: -e1⊙e2 gives G(e1,e2) = 1, G(e2,e1) = -1
  add({"A4_10", "A4_10", 2, 2, 0, {"e", "d", "e1", "e2"}, {scale_any("a")}, DG,
       [](const Params& p) -> std::optional<bool> {
         if (P(p, "a").is_zero()) return std::nullopt;
         return false;
       },
       [](const Params& p) { return P(p, "a").is_zero(); },
       [](const Params& p) {
         const auto& a = P(p, "a");
         return Builder({"e", "d", "e1", "e2"}, {0, 0, 1, 1})
             .prod("d", "e1", "e1", a).prod("d", "e2", "e2", -a)
             .sym("e", "d", 1).sym("e1", "e2", -1)
             .done(0);
       },
       {}});
  add({"A4_11", "A4_11", 2, 2, 0, {"e", "d", "e1", "e2"}, {scale_nz("a")}, DG, deg_always(true), nil_always(true),
       [](const Params& p) {
         const auto& a = P(p, "a");
         return Builder({"e", "d", "e1", "e2"}, {0, 0, 1, 1})
             .prod("e2", "e2", "e", -a).prod("e2", "d", "e1", a)
             .sym("e", "d", 1).sym("e1", "e2", -1)
             .done(0);
       },
       {}});
  // e, d odd here, so -e⊙d gives G(e,d) = 1, G(d,e) = -1
  add({"A4_12", "A4_12", 2, 2, 0, {"e1", "e2", "e", "d"}, {coef("alpha"), coef("beta"), sign("eps")}, DG,
       [](const Params& p) -> std::optional<bool> {
         if (P(p, "alpha").is_zero() && P(p, "beta").is_zero()) return std::nullopt;
         return true;
       },
       nil_always(true),
       [](const Params& p) {
         const auto& e = P(p, "eps");
         return Builder({"e1", "e2", "e", "d"}, {0, 0, 1, 1})
             .prod("e1", "d", "e", P(p, "alpha")).prod("e2", "d", "e", e * P(p, "beta"))
             .sq("e1", 1).sq("e2", e).sym("e", "d", -1)
             .done(0);
       },
       {}});
  add({"A4_13", "A4_13", 2, 2, 0, {"e1", "e2", "e", "d"}, {coef("alpha"), scale_nz("lambda")}, DG, deg_always(true), nil_always(true),
       [](const Params& p) {
         const auto& l = P(p, "lambda");
         return Builder({"e1", "e2", "e", "d"}, {0, 0, 1, 1})
             .prod("e2", "d", "e", P(p, "alpha"))
             .prod("d", "d", "e1", l).prod("d", "e2", "e", -l)
             .sym("e1", "e2", 1).sym("e", "d", -1)
             .done(0);
       },
       {}});

  // ---- dimension 4 odd, A•A degenerate

  add({"A4_14", "A4_14", 2, 2, 1, {"d", "e1", "f1", "e"}, {scale_any("a"), coef("alpha")}, DG,
       [](const Params& p) -> std::optional<bool> {
         if (!P(p, "a").is_zero()) return false;
         if (P(p, "alpha").is_zero()) return std::nullopt;
         return true;
       },
       [](const Params& p) { return P(p, "a").is_zero(); },
       [](const Params& p) {
         const auto &a = P(p, "a"), &al = P(p, "alpha");
         return Builder({"d", "e1", "f1", "e"}, {0, 0, 1, 1})
             .prod("d", "e1", "e1", a)
             .prod("d", "f1", "f1", -a).prod("d", "f1", "e", -al)
             .prod("d", "d", "e1", al)
             .sym("e", "d", 1).sym("e1", "f1", 1)
             .done(1);
       },
       {}});
  add({"A4_15", "A4_15", 2, 2, 1, {"e", "e1", "f1", "d"}, {coef("alpha"), coef("beta")}, DG,
       [](const Params& p) -> std::optional<bool> {
         if (P(p, "alpha").is_zero() && P(p, "beta").is_zero()) return std::nullopt;
         return true;
       },
       nil_always(true),
       [](const Params& p) {
         const auto &al = P(p, "alpha"), &be = P(p, "beta");
         return Builder({"e", "e1", "f1", "d"}, {0, 0, 1, 1})
             .prod("d", "f1", "e", al).prod("f1", "d", "e", be).prod("d", "d", "e1", al)
             .sym("e", "d", 1).sym("e1", "f1", 1)
             .done(1);
       },
       {}});
  add({"A4_16", "A4_16", 2, 2, 1, {"e", "e1", "f1", "d"}, {scale_nz("a")}, DG, deg_always(true), nil_always(true),
       [](const Params& p) {
         const auto& a = P(p, "a");
         return Builder({"e", "e1", "f1", "d"}, {0, 0, 1, 1})
             .prod("e1", "d", "f1", a).prod("e1", "e1", "e", -a)
             .sym("e", "d", 1).sym("e1", "f1", 1)
             .done(1);
       },
       {}});
  add({"A4_17", "A4_17", 2, 2, 1, {"e", "e1", "f1", "d"}, {scale_nz("a"), coef("alpha"), coef("beta")}, DG, deg_always(true), nil_always(true),
       [](const Params& p) {
         const auto &a = P(p, "a"), &al = P(p, "alpha"), &be = P(p, "beta");
         return Builder({"e", "e1", "f1", "d"}, {0, 0, 1, 1})
             .prod("d", "f1", "e", al)
             .prod("f1", "d", "e1", a).prod("f1", "d", "e", be)
             .prod("f1", "f1", "e", a)
             .prod("d", "d", "e1", al)
             .sym("e", "d", 1).sym("e1", "f1", 1)
             .done(1);
       },
       {}});
  add({"A4_18", "A4_18", 2, 2, 1, {"d", "e1", "f1", "e"}, {coef_nz("alpha"), coef_nz("beta")}, DG, deg_always(true), nil_always(true),
       [](const Params& p) {
         const auto &al = P(p, "alpha"), &be = P(p, "beta");
         return Builder({"d", "e1", "f1", "e"}, {0, 0, 1, 1})
             .prod("d", "f1", "e", -be).prod("f1", "f1", "e1", al).prod("d", "d", "e1", be)
             .sym("d", "e", 1).sym("e1", "f1", 1)
             .done(1);
       },
       {}});

  FamilySpec a419{"A4_19", "A4_19", 2, 2, 1, {"e", "e1", "f1", "d"},
                  {coef_nz("alpha"), scale_nz("lambda"), coef_nz("beta"), scale_nz("a"), scale_nz("b")}, DG, deg_always(true),
                  nil_always(true),
                  [](const Params& p) {
                    const auto &al = P(p, "alpha"), &l = P(p, "lambda"), &be = P(p, "beta"), &a = P(p, "a"), &b = P(p, "b");
                    return Builder({"e", "e1", "f1", "d"}, {0, 0, 1, 1})
                        .prod("d", "f1", "e1", b).prod("d", "f1", "e", be)
                        .prod("f1", "d", "e1", a).prod("f1", "d", "e", l)
                        .prod("f1", "f1", "e1", al).prod("f1", "f1", "e", a)
                        .prod("d", "d", "e1", be)
                        .sym("e", "d", 1).sym("e1", "f1", 1)
                        .done(1);
                  },
                  {}};
  // One parameter at zero, the rest at 1.
  for (const auto& ps : a419.params) {
    Params q;
    for (const auto& other : a419.params) q[other.name] = Rational(1);
    q[ps.name] = Rational(0);
    a419.boundary.push_back(q);
  }
  add(std::move(a419));
  return out;
}

void check_domain(const FamilySpec& f, const Params& params) {
  for (const auto& [k, v] : params)
    if (std::none_of(f.params.begin(), f.params.end(), [&](const ParamSpec& s) { return s.name == k; }))
      throw Error(ErrorKind::BadParams, f.id + " has no parameter " + k);
  for (const auto& s : f.params) {
    auto it = params.find(s.name);
    if (it == params.end()) throw Error(ErrorKind::BadParams, f.id + " needs parameter " + s.name);
    const Rational& v = it->second;
    if (s.domain == ParamDomain::nonzero && v.is_zero()) throw Error(ErrorKind::BadParams, f.id + ": " + s.name + " must be nonzero");
    if (s.domain == ParamDomain::sign && v != Rational(1) && v != Rational(-1))
      throw Error(ErrorKind::BadParams, f.id + ": " + s.name + " must be 1 or -1");
  }
}

}  // namespace

const std::vector<FamilySpec>& catalog_families() {
  static const std::vector<FamilySpec> families = make_catalog();
  return families;
}

std::vector<const FamilySpec*> lookup_family(const std::string& id) {
  std::vector<const FamilySpec*> out;
  for (const auto& f : catalog_families())
    if (f.id == id) return {&f};
  for (const auto& f : catalog_families())
    if (f.group == id) out.push_back(&f);
  if (out.empty()) throw Error(ErrorKind::UnknownFamily, id);
  return out;
}

PseudoEuclideanAlgebra instantiate(const FamilySpec& f, const Params& params) {
  check_domain(f, params);
  return f.build(params);
}

PseudoEuclideanAlgebra instantiate(const std::string& id, const Params& params) {
  auto fs = lookup_family(id);
  if (fs.size() != 1) throw Error(ErrorKind::UnknownFamily, id + " names several form variants; pick one of them");
  return instantiate(*fs.front(), params);
}

std::vector<Params> grid_product(const FamilySpec& f, const std::map<std::string, std::vector<Rational>>& values) {
  std::vector<Params> out{Params{}};
  for (const auto& s : f.params) {
    auto it = values.find(s.name);
    const auto& vs = it == values.end() ? s.grid : it->second;
    std::vector<Params> next;
    for (const auto& base : out)
      for (const auto& v : vs) {
        Params q = base;
        q[s.name] = v;
        next.push_back(std::move(q));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Params> default_grid(const FamilySpec& f) { return grid_product(f, {}); }

std::vector<Instance> catalog_instances(bool include_boundary) {
  std::vector<Instance> out;
  for (const auto& f : catalog_families()) {
    for (auto& p : default_grid(f)) out.push_back({&f, std::move(p), false});
    if (include_boundary)
      for (const auto& p : f.boundary) out.push_back({&f, p, true});
  }
  return out;
}

bool product_is_degenerate(const PseudoEuclideanAlgebra& p) {
  Basis ideal = span_product(p.algebra);
  return !intersect(ideal, orthogonal_complement(p.form, ideal), p.dim()).empty();
}

bool is_nilpotent(const SuperAlgebra& a) { return series_reaches_zero(series(a, SeriesKind::nilpotent)); }

namespace {

mpz_class square_free(mpz_class n) {
  if (n == 0) return 0;
  mpz_class sign = n < 0 ? -1 : 1;
  n = abs(n);
  mpz_class out = 1;
  for (mpz_class p = 2; p * p <= n; ++p) {
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k & 1) out *= p;
  }
  return sign * out * n;
}

// Square class of the form induced on A / radical, as a square-free integer.
std::pair<int, std::string> trace_form_class(const SuperAlgebra& a) {
  const Index n = a.dim();
  Mat t(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) t(i, j) = mul(a.left(i), a.left(j)).trace();
  Basis chosen = mat_kernel(t);
  Basis w;
  for (Index i = 0; i < n; ++i) {
    Vec u = unit(n, i);
    if (!in_span(chosen, u)) {
      chosen.push_back(u);
      w.push_back(u);
    }
  }
  if (w.empty()) return {0, "1"};
  Mat wm = cols_of(w, n);
  Rational d = mat_det(Mat(mul(mul(Mat(wm.transpose()), t), wm)));
  mpz_class q = square_free(mpz_class(d.num() * d.den()));
  return {static_cast<int>(w.size()), q.get_str()};
}

}  // namespace

Fingerprint fingerprint(const PseudoEuclideanAlgebra& p) {
  Fingerprint f;
  std::tie(f.even, f.odd) = p.space().sdim();
  f.form_parity = p.form.parity();
  Basis ideal = span_product(p.algebra);
  f.dim_product = static_cast<int>(ideal.size());
  if (!ideal.empty()) f.degenerate = product_is_degenerate(p);
  f.nilpotent = is_nilpotent(p.algebra);
  f.dim_center_minus = static_cast<int>(center_of_minus(p.algebra).size());
  f.dim_right_normalizer = static_cast<int>(normalizers(p.algebra).right.size());
  std::tie(f.trace_rank, f.trace_discriminant) = trace_form_class(p.algebra);
  return f;
}

std::string to_string(const Fingerprint& f) {
  std::ostringstream os;
  os << "(" << f.even << "|" << f.odd << ", " << (f.form_parity ? "odd" : "even") << ", dim A.A " << f.dim_product << ", "
     << (f.degenerate ? (*f.degenerate ? "degenerate" : "non-degenerate") : "n/a") << ", "
     << (f.nilpotent ? "nilpotent" : "not nilpotent") << ", center " << f.dim_center_minus << ", N_r " << f.dim_right_normalizer
     << ", trace form rank " << f.trace_rank << " disc " << f.trace_discriminant << ")";
  return os.str();
}

int VerifyReport::asserted() const {
  return static_cast<int>(std::count_if(results.begin(), results.end(), [](const InstanceResult& r) { return !r.boundary; }));
}

int VerifyReport::failures() const {
  return static_cast<int>(
      std::count_if(results.begin(), results.end(), [](const InstanceResult& r) { return !r.boundary && !r.pass(); }));
}

namespace {

InstanceResult verify_one(const Instance& in) {
  InstanceResult r;
  r.family = in.family->id;
  r.params = in.params;
  r.boundary = in.boundary;
  try {
    auto p = in.boundary ? in.family->build(in.params) : instantiate(*in.family, in.params);
    r.suite = full_suite(p);
    std::ostringstream detail;
    std::optional<bool> deg;
    if (!p.algebra.is_trivial()) deg = product_is_degenerate(p);
    auto declared = in.family->product_degenerate(in.params);
    if (declared != deg) {
      r.flags_ok = false;
      auto show = [](std::optional<bool> b) { return b ? (*b ? "degenerate" : "non-degenerate") : "n/a"; };
      detail << "A.A declared " << show(declared) << ", computed " << show(deg) << "; ";
    }
    bool nil = is_nilpotent(p.algebra);
    if (nil != in.family->nilpotent(in.params)) {
      r.flags_ok = false;
      detail << "nilpotent declared " << !nil << ", computed " << nil << "; ";
    }
    r.flag_detail = detail.str();
  } catch (const Error& e) {
    r.suite = IdentityReport::fail("full_suite", {}, Vec(), e.what());
  }
  return r;
}

}  // namespace

VerifyReport verify_instances(const std::vector<Instance>& instances, int jobs) {
  VerifyReport rep;
  rep.results.resize(instances.size());
  if (jobs <= 1 || instances.size() < 2) {
    for (std::size_t i = 0; i < instances.size(); ++i) rep.results[i] = verify_one(instances[i]);
    return rep;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), instances.size());
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < instances.size(); i = next++) rep.results[i] = verify_one(instances[i]);
    });
  for (auto& t : pool) t.join();
  return rep;
}

VerifyReport verify_family(const std::string& id, const std::vector<Params>& grid, int jobs) {
  std::vector<Instance> in;
  for (const auto* f : lookup_family(id)) {
    if (grid.empty()) {
      for (auto& p : default_grid(*f)) in.push_back({f, std::move(p), false});
      for (const auto& p : f->boundary) in.push_back({f, p, true});
    } else {
      for (const auto& p : grid) in.push_back({f, p, false});
    }
  }
  return verify_instances(in, jobs);
}

ScanReport nonexistence_scan(const ScanOptions& opt) {
  const SuperSpace& s = opt.space;
  const Index n = s.dim();
  if (n > 3) throw Error(ErrorKind::GridTooLarge, "scan is limited to total dimension 3");
  const auto g = static_cast<long long>(opt.grid.size());

  // graded slots of the tensor and of the Gram matrix (upper triangle, the rest follows by super-symmetry)
  std::vector<std::array<Index, 3>> slots;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (((s.parity(i) + s.parity(j)) & 1) == s.parity(k)) slots.push_back({i, j, k});
  std::vector<std::pair<Index, Index>> gslots;
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j)
      if (((s.parity(i) + s.parity(j)) & 1) == opt.form_parity && !(i == j && s.parity(i) && !opt.form_parity)) gslots.push_back({i, j});

  auto power = [&](std::size_t e) {
    long long r = 1;
    for (std::size_t k = 0; k < e; ++k) {
      if (r > opt.budget) return opt.budget + 1;
      r *= g;
    }
    return r;
  };
  const long long tensors = power(slots.size()), forms = power(gslots.size());
  if (tensors > opt.budget || forms > opt.budget || tensors * forms > opt.budget)
    throw Error(ErrorKind::GridTooLarge, "grid^" + std::to_string(slots.size()) + " tensors x grid^" + std::to_string(gslots.size()) +
                                             " forms exceeds the budget of " + std::to_string(opt.budget));

  // all non-degenerate forms once
  std::vector<HomBilinearForm> valid_forms;
  std::vector<std::size_t> digit(gslots.size(), 0);
  for (long long f = 0; f < forms; ++f) {
    Mat gm = Mat::Zero(n, n);
    for (std::size_t k = 0; k < gslots.size(); ++k) {
      auto [i, j] = gslots[k];
      const Rational& v = opt.grid[digit[k]];
      gm(i, j) = v;
      if (i != j) gm(j, i) = koszul_sign(s.parity(i), s.parity(j)) * v;
    }
    if (!check_form(s, gm, opt.form_parity)) valid_forms.emplace_back(s, gm, opt.form_parity);
    for (std::size_t k = 0; k < digit.size() && ++digit[k] == opt.grid.size(); ++k) digit[k] = 0;
  }

  ScanReport rep;
  rep.tensors = tensors;
  rep.forms = static_cast<long long>(valid_forms.size());
  std::vector<std::size_t> td(slots.size(), 0);
  for (long long t = 0; t < tensors; ++t) {
    std::vector<Mat> left(static_cast<std::size_t>(n), Mat::Zero(n, n));
    bool nontrivial = false;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      const auto& [i, j, l] = slots[k];
      const Rational& v = opt.grid[td[k]];
      left[static_cast<std::size_t>(i)](l, j) = v;
      nontrivial = nontrivial || !v.is_zero();
    }
    for (std::size_t k = 0; k < td.size() && ++td[k] == opt.grid.size(); ++k) td[k] = 0;
    if (!nontrivial) continue;
    SuperAlgebra a(s, std::move(left));
    if (!check_novikov(a).pass) continue;
    ++rep.novikov_tensors;
    for (const auto& form : valid_forms) {
      PseudoEuclideanAlgebra p(a, form);
      if (!check_left_mul_antisymmetric(p).pass || !full_suite(p).pass) continue;
      ++rep.pseudo_euclidean_pairs;
      if (product_is_degenerate(p)) rep.degenerate_hits.push_back({p});
    }
  }
  return rep;
}

}  // namespace novikov
