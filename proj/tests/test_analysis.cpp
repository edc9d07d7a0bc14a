#include <doctest.h>

#include "vhess/analysis.hpp"
#include "vhess/examples.hpp"
#include "vhess/parse.hpp"
#include "vhess/properties.hpp"
#include "vhess/regression.hpp"
#include "vhess/report.hpp"

using namespace vhess;

namespace {

MultiPoly P(const char* text, std::size_t nvars) { return parse_poly(PolySource{text, nvars}).poly; }

MultiPoly family(const char* name) {
  FamilySpec s;
  s.family = name;
  return generate(s);
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("labels") {
    CHECK(classify(P("x0*x3^2 + 2*x1*x3*x4 + x2*x4^2", 5)).label == "P4-unique");
    FamilySpec mu1;
    mu1.family = "mu1";
    mu1.N = 5;
    CHECK(classify(generate(mu1)).label == "P5-special-conic");
    CHECK(classify(P("x0^3 + x1^3 + x2^3", 3)).label == "hess \xe2\x89\xa0 0");

    auto cone = classify(P("x0*x2^2", 4));
    CHECK(cone.label == "cone");
    REQUIRE(cone.vertex.has_value());
    CHECK(cone.vertex->contains(RVector{0, 1, 0, 0}));
    CHECK_FALSE(cone.relations.has_value());
  }

  TEST_CASE("profile of the determinantal section") {
    auto r = classify(family("det3_section"));
    CHECK(r.label == "profile");
    CHECK(r.codimZ == 1);
    REQUIRE(r.perazzo.has_value());
    CHECK(r.perazzo->mu == 2);
    CHECK_FALSE(r.perazzo->special.special);
    CHECK(r.rank_mod_f->claimed_rank == 6);
    for (const auto& c : r.checks) CHECK_MESSAGE(c.holds, c.name);
  }

  TEST_CASE("codim Z = 2 keeps the weaker estimate") {
    auto r = classify(family("concat"));
    CHECK(r.codimZ == 2);
    REQUIRE(r.perazzo.has_value());
    CHECK(r.perazzo->zstar.dim <= 2 - 1 + r.perazzo->mu);
    for (const auto& c : r.checks) CHECK_MESSAGE(c.holds, c.name);
  }

  TEST_CASE("JSON reports are tagged and reproducible") {
    AnalysisOptions o;
    o.sampling.seed = 5;
    auto a = to_json(classify(family("bs"), o)).dump();
    auto b = to_json(classify(family("bs"), o)).dump();
    CHECK(a == b);
    auto j = nlohmann::json::parse(a);
    CHECK(j["hess_vanishes"]["value"] == true);
    CHECK(j["hess_vanishes"]["certainty"] == "exact-symbolic");
    CHECK(j["hess_vanishes"]["log2_failure_bound"].is_null());
    CHECK(j["is_cone"]["value"] == false);
    CHECK(j["codimZ"]["value"] == 1);
    CHECK(j["mu"]["value"] == 1);
    CHECK(j["special"]["value"] == true);
    CHECK(j["label"] == "P4-unique");
    CHECK(j["generic_rank"]["value"] == 4);
    CHECK(j["generic_rank"]["log2_failure_bound"].get<double>() < -40);
    CHECK(j["relations"]["basis"][0] == "y0*y2 - y1^2");
    CHECK_FALSE(j.contains("timings_ms"));
    CHECK(to_json(classify(family("bs"), o), true).contains("timings_ms"));
  }

  TEST_CASE("text reports name the label") {
    auto text = to_text(classify(family("exdet")));
    CHECK(text.find("label: P6-dimZ*2-quadric-or-cubic-surface") != std::string::npos);
    CHECK(text.find("x0*x2 - x1*x3") != std::string::npos);
  }
}

TEST_SUITE("properties") {
  TEST_CASE("the corpus holds only non-cones with vanishing Hessian") {
    for (const auto& e : vanishing_corpus(1, 6)) {
      CHECK_MESSAGE(vertex_space(e.f).empty(), e.name);
      CHECK_MESSAGE(e.generic_rank < e.f.nvars(), e.name);
    }
  }

  TEST_CASE("small runs of the cheap suites pass") {
    for (const auto& r : {check_reciprocity(3, 30), check_euler(3, 30), check_hyperplane_restriction(3, 30),
                          check_pencil_span(3, 30), check_fiber_linearity(3, 30), check_zstar_singular(3, 30)}) {
      CHECK_MESSAGE(r.passed(), r.name << ": " << r.first_failure);
      CHECK(r.cases >= 30);
    }
  }
}

TEST_SUITE("regression") {
  TEST_CASE("filters and the slow switch") {
    SuiteOptions o;
    o.filter = "exdet";
    auto only = run_acceptance(o);
    REQUIRE(only.size() == 1);
    CHECK(only[0].id == 3);
    CHECK(only[0].passed);

    o.filter = "pf6";
    auto slow = run_acceptance(o);
    REQUIRE(slow.size() == 1);
    CHECK(slow[0].skipped);
    CHECK(all_passed(slow));

    o.filter = "no such criterion";
    CHECK(run_acceptance(o).empty());
  }

  TEST_CASE("report formats") {
    SuiteOptions o;
    o.filter = "control";
    auto r = run_acceptance(o);
    CHECK(to_table(r).find("PASS") != std::string::npos);
    auto j = to_json(r);
    CHECK(j["all_passed"] == true);
    CHECK(j["criteria"][0]["status"] == "pass");
  }
}
