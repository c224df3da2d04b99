#include <doctest.h>

#include "corel/enumerate.hpp"
#include "corel/expr.hpp"

using namespace corel;
using corel::expr::parse_expr;
using json = nlohmann::json;

namespace {
const FinSetEngine fin;
const PidEngine zz;
const PartialFnEngine pfe;
}  // namespace

TEST_CASE("morphism JSON round trips") {
  enumerate::Rng rng(43);
  for (int it = 0; it < 50; ++it) {
    const int n = static_cast<int>(rng.below(4));
    const int m = 1 + static_cast<int>(rng.below(4));
    auto f = enumerate::random_fn(rng, n, m);
    CHECK(io::decode_morphism(fin, io::encode(fin, f)) == f);
    auto p = enumerate::random_partial_fn(rng, n, m);
    CHECK(io::decode_morphism(pfe, io::encode(pfe, p)) == p);
    auto z = enumerate::random_z_matrix(rng, m, n, -9, 9);
    CHECK(io::decode_morphism(zz, io::encode(zz, z)) == z);
  }
  LinQEngine lq;
  enumerate::Rng qrng(3);
  auto q = enumerate::random_q_matrix(qrng, 2, 3, -5, 5);
  CHECK(io::decode_morphism(lq, io::encode(lq, q)) == q);
  LinFpEngine g5{FpField(5)};
  Matrix<std::int64_t> m5 = mat_identity(g5.field, 2);
  CHECK(io::decode_morphism(g5, io::encode(g5, m5)) == m5);
}

TEST_CASE("rationals serialize as fraction strings") {
  LinQEngine lq;
  Matrix<mpq_class> m(1, 2);
  m.at(0, 0) = mpq_class(3, 4);
  m.at(0, 1) = mpq_class(-2);
  auto j = io::encode(lq, m);
  CHECK(j["matrix"][0][0] == "3/4");
  CHECK(j["matrix"][0][1] == "-2");
  CHECK(j["field"] == "Q");
}

TEST_CASE("field tags are enforced") {
  LinQEngine lq;
  json j = {{"field", "Fp"}, {"p", 5}, {"dom", 1}, {"cod", 1}, {"matrix", {{"1"}}}};
  CHECK_THROWS_AS(io::decode_morphism(lq, j), TypeError);
  LinFpEngine g5{FpField(5)};
  json j3 = {{"field", "Fp"}, {"p", 3}, {"dom", 1}, {"cod", 1}, {"matrix", {{"1"}}}};
  CHECK_THROWS_AS(io::decode_morphism(g5, j3), TypeError);
}

TEST_CASE("partitions decode only in normal form") {
  json good = {{"n", 1}, {"m", 1}, {"blocks", {0, 0}}};
  CHECK(io::decode_corel(fin, good) == Partition{1, 1, {0, 0}});
  json bad = {{"n", 1}, {"m", 1}, {"blocks", {1, 0}}};
  CHECK_THROWS_AS(io::decode_corel(fin, bad), ParseError);
}

TEST_CASE("the unit-counit composite collapses to the empty corelation") {
  json j = {
      {"op", "compose"},
      {"args",
       {{{"op", "gamma"},
         {"arg",
          {{"op", "cospan"},
           {"left", {{"dom", 0}, {"cod", 1}, {"table", json::array()}}},
           {"right", {{"dom", 1}, {"cod", 1}, {"table", {0}}}}}}},
        {{"op", "gamma"},
         {"arg",
          {{"op", "cospan"},
           {"left", {{"dom", 1}, {"cod", 1}, {"table", {0}}}},
           {"right", {{"dom", 0}, {"cod", 1}, {"table", json::array()}}}}}}}}};
  auto value = corel::expr::eval(fin, parse_expr(j));
  auto out = corel::expr::value_to_json(fin, value);
  CHECK(out == json({{"n", 0}, {"m", 0}, {"blocks", json::array()}}));
}

TEST_CASE("scalar chain over the integers keeps its content") {
  json j = {{"op", "gamma"},
            {"arg",
             {{"op", "cospan"},
              {"left", {{"ring", "Z"}, {"dom", 1}, {"cod", 1}, {"matrix", {{2}}}}},
              {"right", {{"ring", "Z"}, {"dom", 1}, {"cod", 1}, {"matrix", {{2}}}}}}}};
  auto out = corel::expr::value_to_json(zz, corel::expr::eval(zz, parse_expr(j)));
  CHECK(out["matrix"] == json({{2, 2}}));
}

TEST_CASE("kind mismatches are type errors") {
  json span_j = {{"op", "span"},
                 {"left", {{"dom", 1}, {"cod", 1}, {"table", {0}}}},
                 {"right", {{"dom", 1}, {"cod", 1}, {"table", {0}}}}};
  json corel_j = {{"op", "gamma"},
                  {"arg",
                   {{"op", "cospan"},
                    {"left", {{"dom", 1}, {"cod", 1}, {"table", {0}}}},
                    {"right", {{"dom", 1}, {"cod", 1}, {"table", {0}}}}}}};
  json mixed = {{"op", "compose"}, {"args", {span_j, corel_j}}};
  CHECK_THROWS_AS(corel::expr::eval(fin, parse_expr(mixed)), TypeError);

  json gamma_on_morphism = {{"op", "gamma"}, {"arg", {{"dom", 1}, {"cod", 1}, {"table", {0}}}}};
  CHECK_THROWS_AS(corel::expr::eval(fin, parse_expr(gamma_on_morphism)), TypeError);

  json rho_j = {{"op", "rho"},
                {"arg",
                 {{"op", "span"},
                  {"left", {{"dom", 1}, {"cod", 1}, {"table", {0}}}},
                  {"right", {{"dom", 1}, {"cod", 1}, {"table", {0}}}}}}};
  CHECK_THROWS_AS(corel::expr::eval(pfe, parse_expr(rho_j)), TypeError);
}

TEST_CASE("boundary mismatches surface as dimension errors") {
  json j = {{"op", "compose"},
            {"args",
             {json{{"dom", 1}, {"cod", 2}, {"table", {0}}},
              json{{"dom", 1}, {"cod", 1}, {"table", {0}}}}}};
  CHECK_THROWS_AS(corel::expr::eval(fin, parse_expr(j)), DimensionError);
}

TEST_CASE("malformed expressions are parse errors") {
  CHECK_THROWS_AS(parse_expr(json::array()), ParseError);
  CHECK_THROWS_AS(parse_expr(json{{"op", "frobnicate"}}), ParseError);
  CHECK_THROWS_AS(parse_expr(json{{"op", "compose"}}), ParseError);
  CHECK_THROWS_AS(parse_expr(json{{"op", "zigzag"}, {"target", "span"}}), ParseError);
}

TEST_CASE("dagger and zigzag expressions evaluate") {
  json dag = {{"op", "dagger"},
              {"arg",
               {{"op", "gamma"},
                {"arg",
                 {{"op", "cospan"},
                  {"left", {{"dom", 2}, {"cod", 2}, {"table", {0, 1}}}},
                  {"right", {{"dom", 1}, {"cod", 2}, {"table", {0}}}}}}}}};
  auto out = corel::expr::value_to_json(fin, corel::expr::eval(fin, parse_expr(dag)));
  CHECK(out == json({{"n", 1}, {"m", 2}, {"blocks", {0, 0, 1}}}));

  json zig = {{"op", "zigzag"},
              {"target", "cospan"},
              {"dom", 1},
              {"steps",
               {{{"dir", "fwd"}, {"mor", {{"dom", 1}, {"cod", 2}, {"table", {0}}}}},
                {{"dir", "bwd"}, {"mor", {{"dom", 1}, {"cod", 2}, {"table", {1}}}}}}}};
  auto zout = corel::expr::value_to_json(fin, corel::expr::eval(fin, parse_expr(zig)));
  CHECK(zout["kind"] == "cospan");
  CHECK(zout["left"]["table"] == json({0}));
  CHECK(zout["right"]["table"] == json({1}));
}

TEST_CASE("tensor expressions act blockwise") {
  json unit_corel = {{"op", "gamma"},
                     {"arg",
                      {{"op", "cospan"},
                       {"left", {{"dom", 1}, {"cod", 1}, {"table", {0}}}},
                       {"right", {{"dom", 1}, {"cod", 1}, {"table", {0}}}}}}};
  json t = {{"op", "tensor"}, {"args", {unit_corel, unit_corel}}};
  auto out = corel::expr::value_to_json(fin, corel::expr::eval(fin, parse_expr(t)));
  CHECK(out == json({{"n", 2}, {"m", 2}, {"blocks", {0, 1, 0, 1}}}));
}
