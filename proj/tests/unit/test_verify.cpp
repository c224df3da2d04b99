#include <doctest.h>

#include "corel/verify.hpp"

using namespace corel;
using namespace corel::verify;

TEST_CASE("counting oracles") {
  auto bell = bell_numbers(6);
  CHECK(bell == std::vector<long long>{1, 1, 2, 5, 15, 52, 203});
  CHECK(partial_partition_count(0) == 1);
  CHECK(partial_partition_count(2) == 5);
  CHECK(partial_partition_count(4) == 52);
  CHECK(fp_subspace_count(2, 0) == 1);
  CHECK(fp_subspace_count(2, 1) == 2);
  CHECK(fp_subspace_count(2, 2) == 5);
  CHECK(fp_subspace_count(2, 4) == 67);
  CHECK(fp_subspace_count(3, 2) == 6);
}

TEST_CASE("degenerate bound still passes with one instance") {
  FinSetEngine fin;
  SuiteConfig cfg;
  cfg.bound = 0;
  auto rep = suite_square_commutes(fin, cfg);
  CHECK(rep.passed());
  CHECK(rep.instances == 1);  // the single empty identity
}

TEST_CASE("the full function category fails the mediator check with the minimal witness") {
  FinSetEngine fin;
  SuiteConfig cfg;
  cfg.bound = 2;
  auto rep = suite_assumption(fin, Subcat::All, Direction::primal, cfg, true);
  CHECK(rep.ok());           // expected-fail honoured
  CHECK_FALSE(rep.passed());
  REQUIRE(!rep.witnesses.empty());
  auto w = nlohmann::json::parse(rep.witnesses.front().input);
  // shape 0 -> 1 <- 2
  CHECK(w["left"]["dom"] == 0);
  CHECK(w["left"]["cod"] == 1);
  CHECK(w["right"]["dom"] == 2);
  CHECK(w["right"]["cod"] == 1);
}

TEST_CASE("the dual failure has the 2<-3->2 shape with a non-surjective mediator") {
  FinSetEngine fin;
  SuiteConfig cfg;
  cfg.bound = 3;
  auto rep = suite_assumption(fin, Subcat::All, Direction::dual, cfg, true);
  CHECK(rep.ok());
  REQUIRE(!rep.witnesses.empty());
  auto w = nlohmann::json::parse(rep.witnesses.front().input);
  CHECK(w["left"]["dom"] == 3);
  CHECK(w["left"]["cod"] == 2);
  CHECK(w["right"]["dom"] == 3);
  CHECK(w["right"]["cod"] == 2);
  auto med = nlohmann::json::parse(rep.witnesses.front().got);
  CHECK(med["dom"] == 3);
  CHECK(med["cod"] == 4);
}

TEST_CASE("injections pass the mediator check") {
  FinSetEngine fin;
  SuiteConfig cfg;
  cfg.bound = 3;
  CHECK(suite_assumption(fin, Subcat::M, Direction::primal, cfg, false).passed());
  CHECK(suite_assumption(fin, Subcat::M, Direction::dual, cfg, false).passed());
}

TEST_CASE("reports are deterministic apart from timing") {
  FinSetEngine fin;
  SuiteConfig cfg;
  cfg.bound = 2;
  auto a = suite_assumption(fin, Subcat::All, Direction::primal, cfg, true);
  auto b = suite_assumption(fin, Subcat::All, Direction::primal, cfg, true);
  CHECK(a.instances == b.instances);
  CHECK(a.failure_count == b.failure_count);
  REQUIRE(a.witnesses.size() == b.witnesses.size());
  for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
    CHECK(a.witnesses[i].input == b.witnesses[i].input);
    CHECK(a.witnesses[i].expected == b.witnesses[i].expected);
    CHECK(a.witnesses[i].got == b.witnesses[i].got);
  }
}

TEST_CASE("sampled suites reproduce under the same seed") {
  LinQEngine lq;
  SuiteConfig cfg;
  cfg.bound = 2;
  cfg.samples = 25;
  cfg.seed = 99;
  auto a = suite_square_commutes(lq, cfg);
  auto b = suite_square_commutes(lq, cfg);
  CHECK(a.instances == b.instances);
  CHECK(a.params == b.params);
}

TEST_CASE("lattice suite checks hom counts and corelation collapse") {
  CHECK(suite_lattice(named_lattice("chain2"), "chain2").passed());
  CHECK(suite_lattice(named_lattice("diamond"), "diamond").passed());
  auto co = named_lattice("coproduct2");
  CHECK(co.component_count() == 2);
  CHECK(suite_lattice(co, "coproduct2").passed());
  CHECK(co.corel_class_count(0, 2) == 0);  // across summands
  CHECK(co.corel_class_count(0, 1) == 1);
  // two one-point lattices: no cospans at all between the summands
  auto points = FiniteLattice::coproduct(FiniteLattice::chain(1), FiniteLattice::chain(1));
  CHECK(suite_lattice(points, "points").passed());
  CHECK(points.upper_bound_count(0, 1) == 0);
  CHECK(points.corel_class_count(0, 1) == 0);
}

TEST_CASE("lattice construction validates the order axioms") {
  // not transitive: 0<=1, 1<=2 but not 0<=2
  std::vector<std::vector<bool>> bad = {{true, true, false},
                                        {false, true, true},
                                        {false, false, true}};
  CHECK_THROWS_AS(FiniteLattice::from_leq(bad), PreconditionError);
  // incomparable pair with two minimal upper bounds is not a lattice
  std::vector<std::vector<bool>> bowtie = {{true, false, true, true},
                                           {false, true, true, true},
                                           {false, false, true, false},
                                           {false, false, false, true}};
  CHECK_THROWS_AS(FiniteLattice::from_leq(bowtie), PreconditionError);
}

TEST_CASE("run_suite surfaces unknown names as parse errors") {
  RunOptions opts;
  CHECK_THROWS_AS(run_suite("no-such-suite", opts), ParseError);
}

TEST_CASE("json report shape") {
  std::vector<SuiteReport> reps = {suite_scalar_dichotomy(-2, 2)};
  auto j = reports_to_json(reps, 7);
  CHECK(j["seed"] == 7);
  CHECK(j["status"] == "ok");
  CHECK(j["suites"].size() == 1);
  CHECK(j["suites"][0]["suite"] == "scalar-dichotomy");
  CHECK(j["suites"][0]["failures"] == 0);
  CHECK(j.contains("note"));
}

TEST_CASE("iso-factorisation validates the canonical forms") {
  SuiteConfig cfg;
  cfg.bound = 2;
  CHECK(suite_iso_factorisation_finset(cfg).passed());
  CHECK(suite_iso_factorisation_fp(LinFpEngine{FpField(2)}, cfg).passed());
}

TEST_CASE("abelian iso suites pass on small bounds") {
  SuiteConfig cfg;
  cfg.bound = 1;
  CHECK(suite_abelian_iso_fp(LinFpEngine{FpField(3)}, cfg).passed());
  cfg.samples = 25;
  CHECK(suite_abelian_iso_q(cfg).passed());
}
