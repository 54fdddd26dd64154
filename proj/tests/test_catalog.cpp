#include <doctest.h>

#include <set>

#include "oracles.hpp"

using namespace testing;

TEST_SUITE("catalog") {
  TEST_CASE("family list") {
    const auto& fs = catalog_families();
    // one entry per theorem clause, form variants counted separately
    CHECK(fs.size() == 35);
    std::set<std::string> groups, ids;
    for (const auto& f : fs) {
      groups.insert(f.group);
      ids.insert(f.id);
      CHECK(static_cast<int>(f.basis.size()) == f.even + f.odd);
      CHECK(!default_grid(f).empty());
    }
    CHECK(ids.size() == fs.size());
    for (int i = 1; i <= 2; ++i) CHECK(groups.count("A2_" + std::to_string(i)));
    for (int i = 1; i <= 6; ++i) CHECK(groups.count("A3_" + std::to_string(i)));
    for (int i = 1; i <= 19; ++i) CHECK(groups.count("A4_" + std::to_string(i)));
    CHECK(catalog_instances().size() >= 200);
  }

  TEST_CASE("lookup") {
    auto f = lookup_family("A4_6");
    REQUIRE(f.size() == 1);
    CHECK(f[0]->even == 2);
    CHECK(f[0]->odd == 2);
    CHECK(f[0]->form_parity == 1);
    REQUIRE(f[0]->params.size() == 1);
    CHECK(f[0]->params[0].name == "lambda");
    CHECK(f[0]->params[0].domain == ParamDomain::nonzero);

    auto t = lookup_family("A2_1");
    REQUIRE(t.size() == 1);
    CHECK(t[0]->form_parity == 0);
    for (const auto& p : default_grid(*t[0])) CHECK(t[0]->build(p).algebra.is_trivial());

    CHECK(lookup_family("A4_2").size() == 3);
    CHECK_THROWS_KIND(lookup_family("A9_9"), UnknownFamily);
    CHECK_THROWS_KIND(instantiate("A4_2", {{"lambda", 1}, {"eps", 1}}), UnknownFamily);
  }

  TEST_CASE("instantiate") {
    auto p = family("A3_2", {{"lambda", 1}, {"eps", 1}});  // e1 e2 f1
    CHECK(basis_product(p.algebra, 2, 0) == unit(3, 1));
    CHECK(basis_product(p.algebra, 2, 1) == -unit(3, 0));
    CHECK(oracle_span_product(p.algebra).size() == 2);
    CHECK(p.form.gram() == I(3));

    auto q = family("A4_8", {{"a", 1}, {"alpha", 2}, {"eps", 1}, {"rho", 1}});  // e e1 e2 d
    CHECK(basis_product(q.algebra, 2, 1) == -unit(4, 0));
    CHECK(basis_product(q.algebra, 2, 3) == unit(4, 1));
    CHECK(basis_product(q.algebra, 3, 1) == Q(-2) * unit(4, 0));
    CHECK(basis_product(q.algebra, 3, 3) == Q(2) * unit(4, 1));

    CHECK_THROWS_KIND(family("A2_2", {{"alpha", 0}}), BadParams);
    CHECK_THROWS_KIND(family("A2_1", {{"eps", 2}}), BadParams);
    CHECK_THROWS_KIND(family("A3_2", {{"lambda", 1}}), BadParams);
    CHECK_THROWS_KIND(family("A3_2", {{"lambda", 1}, {"eps", 1}, {"mu", 1}}), BadParams);
  }

  TEST_CASE("verify_family") {
    const auto& a47 = *lookup_family("A4_7")[0];
    auto grid = grid_product(a47, {{"a", {0, 1, 2}}, {"alpha", {0, 1}}, {"beta", {0, 1}}, {"eps", {1, -1}}});
    CHECK(grid.size() == 24);
    auto r = verify_family("A4_7", grid, 2);
    CHECK(r.asserted() == 24);
    CHECK(r.pass());

    const auto& a42 = *lookup_family("A4_2:form2")[0];
    std::vector<Params> g42;
    for (const auto& p : grid_product(a42, {{"lambda", {1, -2}}, {"eps", {1, -1}}, {"alpha", {0}}})) g42.push_back(p);
    auto r2 = verify_family("A4_2:form2", g42, 1);
    CHECK(r2.pass());
    for (const auto* f : lookup_family("A4_2")) {
      auto rep = verify_family(f->id, {}, 1);
      CHECK(rep.pass());
      for (const auto& res : rep.results) CHECK(!product_is_degenerate(f->build(res.params)));
    }
    CHECK(verify_family("A3_1", {}, 1).pass());
  }

  TEST_CASE("boundary points of A4_19 are reported, not asserted") {
    auto r = verify_family("A4_19", {}, 1);
    int boundary = 0;
    for (const auto& res : r.results) boundary += res.boundary;
    CHECK(boundary == 5);
    CHECK(r.asserted() == static_cast<int>(r.results.size()) - 5);
  }

  TEST_CASE("fingerprint") {
    auto t = fingerprint(trivial(2, 0, I(2), 0));
    CHECK(t.even == 2);
    CHECK(t.odd == 0);
    CHECK(t.form_parity == 0);
    CHECK(t.dim_product == 0);
    CHECK(!t.degenerate);
    CHECK(t.nilpotent);
    CHECK(t.dim_center_minus == 2);
    CHECK(t.dim_right_normalizer == 2);

    auto f32 = fingerprint(family("A3_2", {{"lambda", 1}, {"eps", 1}}));
    CHECK(f32.dim_product == 2);
    CHECK(f32.degenerate == false);
    CHECK(!f32.nilpotent);

    auto f49 = fingerprint(family("A4_9", {{"a", 1}, {"alpha", 1}}));
    CHECK(f49.degenerate == true);
    CHECK(f49.nilpotent);

    // the trace form separates these two at lambda = 2 but not at lambda = 1
    CHECK(fingerprint(family("A3_3", {{"lambda", 2}})) != fingerprint(family("A3_4", {{"lambda", 2}})));
    CHECK(fingerprint(family("A3_3", {{"lambda", 1}})) == fingerprint(family("A3_4", {{"lambda", 1}})));
    CHECK(!to_string(f49).empty());
  }

  TEST_CASE("flags agree with the computed structure") {
    for (const auto& in : catalog_instances()) {
      auto p = in.family->build(in.params);
      INFO(in.family->id << " {" << params_string(in.params) << "}");
      CHECK(is_nilpotent(p.algebra) == in.family->nilpotent(in.params));
      std::optional<bool> deg;
      if (!p.algebra.is_trivial()) deg = product_is_degenerate(p);
      CHECK(deg == in.family->product_degenerate(in.params));
    }
  }

  TEST_CASE("nonexistence scan") {
    ScanOptions o;
    o.space = SuperSpace::of_sdim(2, 0);
    auto r = nonexistence_scan(o);
    CHECK(r.tensors == 6561);
    CHECK(r.degenerate_hits.empty());

    o.space = SuperSpace::of_sdim(1, 1);
    o.form_parity = 1;
    r = nonexistence_scan(o);
    CHECK(!r.degenerate_hits.empty());
    for (const auto& h : r.degenerate_hits) {
      // only f•f = αe with α ≠ 0
      const auto& a = h.algebra.algebra;
      for (Index i = 0; i < 2; ++i)
        for (Index j = 0; j < 2; ++j)
          for (Index k = 0; k < 2; ++k)
            if (!(i == 1 && j == 1 && k == 0)) CHECK(a.c(i, j, k).is_zero());
      CHECK(!a.c(1, 1, 0).is_zero());
    }

    o.space = SuperSpace::of_sdim(1, 0);
    o.form_parity = 0;
    r = nonexistence_scan(o);
    CHECK(r.pseudo_euclidean_pairs == 0);

    o.space = SuperSpace::of_sdim(2, 2);
    CHECK_THROWS_KIND(nonexistence_scan(o), GridTooLarge);
    o.space = SuperSpace::of_sdim(3, 0);
    o.budget = 1000;
    CHECK_THROWS_KIND(nonexistence_scan(o), GridTooLarge);
  }
}
