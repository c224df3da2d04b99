#include "corel/expr.hpp"

namespace corel::expr {

namespace {

DiagramExpr parse_node(const nlohmann::json& j);

std::vector<DiagramExpr> parse_args(const nlohmann::json& j, std::size_t at_least) {
  if (!j.contains("args") || !j["args"].is_array() || j["args"].size() < at_least)
    throw ParseError("expression needs an 'args' array with at least " +
                     std::to_string(at_least) + " entries");
  std::vector<DiagramExpr> out;
  for (const auto& a : j["args"]) out.push_back(parse_node(a));
  return out;
}

DiagramExpr parse_unary(const nlohmann::json& j, DiagramExpr::Op op) {
  if (!j.contains("arg")) throw ParseError("expression needs an 'arg' field");
  DiagramExpr x;
  x.op = op;
  x.args.push_back(parse_node(j["arg"]));
  return x;
}

DiagramExpr parse_node(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("expression nodes must be JSON objects");
  if (!j.contains("op")) {
    DiagramExpr x;
    x.op = DiagramExpr::Op::Leaf;
    x.leaf = j;
    return x;
  }
  if (!j["op"].is_string()) throw ParseError("'op' must be a string");
  const std::string op = j["op"].get<std::string>();

  if (op == "mor") {
    if (!j.contains("value")) throw ParseError("'mor' needs a 'value' field");
    DiagramExpr x;
    x.op = DiagramExpr::Op::Leaf;
    x.leaf = j["value"];
    return x;
  }
  if (op == "compose" || op == "seq") {
    DiagramExpr x;
    x.op = DiagramExpr::Op::Compose;
    x.args = parse_args(j, 1);
    return x;
  }
  if (op == "tensor") {
    DiagramExpr x;
    x.op = DiagramExpr::Op::Tensor;
    x.args = parse_args(j, 1);
    return x;
  }
  if (op == "dagger") return parse_unary(j, DiagramExpr::Op::Dagger);
  if (op == "gamma") return parse_unary(j, DiagramExpr::Op::Gamma);
  if (op == "pi") return parse_unary(j, DiagramExpr::Op::Pi);
  if (op == "rho") return parse_unary(j, DiagramExpr::Op::Rho);
  if (op == "span" || op == "cospan") {
    if (!j.contains("left") || !j.contains("right"))
      throw ParseError("'" + op + "' needs 'left' and 'right' fields");
    DiagramExpr x;
    x.op = op == "span" ? DiagramExpr::Op::MakeSpan : DiagramExpr::Op::MakeCospan;
    x.args.push_back(parse_node(j["left"]));
    x.args.push_back(parse_node(j["right"]));
    return x;
  }
  if (op == "zigzag") {
    DiagramExpr x;
    x.op = DiagramExpr::Op::Zigzag;
    if (!j.contains("target") || !j["target"].is_string())
      throw ParseError("'zigzag' needs a 'target' of \"span\" or \"cospan\"");
    x.target = j["target"].get<std::string>();
    if (x.target != "span" && x.target != "cospan")
      throw ParseError("zigzag target must be \"span\" or \"cospan\"");
    if (!j.contains("dom") || !j["dom"].is_number_integer() || j["dom"].get<int>() < 0)
      throw ParseError("'zigzag' needs a natural 'dom' boundary");
    x.boundary = j["dom"].get<int>();
    if (!j.contains("steps") || !j["steps"].is_array())
      throw ParseError("'zigzag' needs a 'steps' array");
    for (const auto& st : j["steps"]) {
      if (!st.is_object() || !st.contains("dir") || !st.contains("mor"))
        throw ParseError("zigzag steps need 'dir' and 'mor'");
      const std::string d = st["dir"].get<std::string>();
      if (d != "fwd" && d != "bwd") throw ParseError("zigzag dir must be \"fwd\" or \"bwd\"");
      x.steps.emplace_back(d == "fwd" ? Dir::fwd : Dir::bwd, st["mor"]);
    }
    return x;
  }
  throw ParseError("unknown expression op: '" + op + "'");
}

}  // namespace

DiagramExpr parse_expr(const nlohmann::json& j) { return parse_node(j); }

}  // namespace corel::expr
