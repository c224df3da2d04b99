#pragma once

// Diagram expressions: a small JSON syntax tree over one engine.  Leaves
// are engine-specific morphisms; nodes are sequential composition, tensor,
// dagger, the span/cospan constructors, the quotients gamma/pi/rho, and
// zigzag evaluation.  Boundaries are checked during evaluation.

#include <variant>
#include <vector>

#include "corel/diagrams.hpp"
#include "corel/json_io.hpp"

namespace corel::expr {

struct DiagramExpr {
  enum class Op {
    Leaf,
    Compose,
    Tensor,
    Dagger,
    Gamma,
    Pi,
    Rho,
    MakeSpan,
    MakeCospan,
    Zigzag
  };

  Op op = Op::Leaf;
  nlohmann::json leaf;                                 // Leaf: morphism JSON
  std::vector<DiagramExpr> args;                       // children
  std::vector<std::pair<Dir, nlohmann::json>> steps;   // Zigzag
  std::string target;                                  // Zigzag: "span" | "cospan"
  int boundary = 0;                                    // Zigzag: starting boundary
};

// Throws ParseError on malformed input.
DiagramExpr parse_expr(const nlohmann::json& j);

namespace detail {
template <typename E, bool HasRel>
struct ValueTypes {
  using type = std::variant<typename E::Morphism, Span<typename E::Morphism>,
                            Cospan<typename E::Morphism>, Corelation<E>, Relation<E>>;
};
template <typename E>
struct ValueTypes<E, false> {
  using type = std::variant<typename E::Morphism, Span<typename E::Morphism>,
                            Cospan<typename E::Morphism>, Corelation<E>>;
};
}  // namespace detail

template <typename E>
using Value = typename detail::ValueTypes<E, RelEngine<E>>::type;

template <typename E>
Value<E> compose_values(const E& e, const Value<E>& a, const Value<E>& b) {
  using M = typename E::Morphism;
  return std::visit(
      [&](const auto& x, const auto& y) -> Value<E> {
        using X = std::decay_t<decltype(x)>;
        using Y = std::decay_t<decltype(y)>;
        if constexpr (!std::same_as<X, Y>) {
          throw TypeError("compose: operands have different kinds");
        } else if constexpr (std::same_as<X, M>) {
          return e.compose(x, y);
        } else if constexpr (std::same_as<X, Span<M>>) {
          return compose_span(e, x, y);
        } else if constexpr (std::same_as<X, Cospan<M>>) {
          return compose_cospan(e, x, y);
        } else if constexpr (std::same_as<X, Corelation<E>>) {
          return compose_corel(e, x, y);
        } else {
          return compose_rel(e, x, y);
        }
      },
      a, b);
}

template <typename E>
Value<E> tensor_values(const E& e, const Value<E>& a, const Value<E>& b) {
  using M = typename E::Morphism;
  return std::visit(
      [&](const auto& x, const auto& y) -> Value<E> {
        using X = std::decay_t<decltype(x)>;
        using Y = std::decay_t<decltype(y)>;
        if constexpr (!std::same_as<X, Y>) {
          throw TypeError("tensor: operands have different kinds");
        } else if constexpr (std::same_as<X, M>) {
          return e.tensor(x, y);
        } else if constexpr (std::same_as<X, Span<M>>) {
          return tensor_span(e, x, y);
        } else if constexpr (std::same_as<X, Cospan<M>>) {
          return tensor_cospan(e, x, y);
        } else if constexpr (std::same_as<X, Corelation<E>>) {
          return tensor_corel(e, x, y);
        } else {
          return tensor_rel(e, x, y);
        }
      },
      a, b);
}

template <typename E>
Value<E> dagger_value(const E& e, const Value<E>& a) {
  using M = typename E::Morphism;
  return std::visit(
      [&](const auto& x) -> Value<E> {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::same_as<X, M>) {
          throw TypeError("dagger applies to spans, cospans and (co)relations");
        } else if constexpr (std::same_as<X, Span<M>>) {
          return dagger_span(x);
        } else if constexpr (std::same_as<X, Cospan<M>>) {
          return dagger_cospan(x);
        } else if constexpr (std::same_as<X, Corelation<E>>) {
          return dagger_corel(e, x);
        } else {
          return dagger_rel(e, x);
        }
      },
      a);
}

template <typename E>
Value<E> eval(const E& e, const DiagramExpr& x) {
  using M = typename E::Morphism;
  switch (x.op) {
    case DiagramExpr::Op::Leaf:
      return io::decode_morphism(e, x.leaf);
    case DiagramExpr::Op::Compose: {
      Value<E> acc = eval(e, x.args.front());
      for (std::size_t i = 1; i < x.args.size(); ++i)
        acc = compose_values(e, acc, eval(e, x.args[i]));
      return acc;
    }
    case DiagramExpr::Op::Tensor: {
      Value<E> acc = eval(e, x.args.front());
      for (std::size_t i = 1; i < x.args.size(); ++i)
        acc = tensor_values(e, acc, eval(e, x.args[i]));
      return acc;
    }
    case DiagramExpr::Op::Dagger:
      return dagger_value(e, eval(e, x.args.front()));
    case DiagramExpr::Op::Gamma: {
      auto v = eval(e, x.args.front());
      if (auto* c = std::get_if<Cospan<M>>(&v)) return gamma(e, *c);
      throw TypeError("gamma applies to a cospan");
    }
    case DiagramExpr::Op::Pi: {
      auto v = eval(e, x.args.front());
      if (auto* s = std::get_if<Span<M>>(&v)) return pi(e, *s);
      throw TypeError("pi applies to a span");
    }
    case DiagramExpr::Op::Rho: {
      if constexpr (RelEngine<E>) {
        auto v = eval(e, x.args.front());
        if (auto* s = std::get_if<Span<M>>(&v)) return rho(e, *s);
        throw TypeError("rho applies to a span");
      } else {
        throw TypeError("engine '" + e.name() + "' has no relation quotient");
      }
    }
    case DiagramExpr::Op::MakeSpan: {
      auto l = eval(e, x.args[0]);
      auto r = eval(e, x.args[1]);
      auto* lm = std::get_if<M>(&l);
      auto* rm = std::get_if<M>(&r);
      if (!lm || !rm) throw TypeError("span legs must be morphisms");
      return Span<M>(*lm, *rm);
    }
    case DiagramExpr::Op::MakeCospan: {
      auto l = eval(e, x.args[0]);
      auto r = eval(e, x.args[1]);
      auto* lm = std::get_if<M>(&l);
      auto* rm = std::get_if<M>(&r);
      if (!lm || !rm) throw TypeError("cospan legs must be morphisms");
      return Cospan<M>(*lm, *rm);
    }
    case DiagramExpr::Op::Zigzag: {
      std::vector<ZigzagStep<M>> steps;
      steps.reserve(x.steps.size());
      for (const auto& [dir, mj] : x.steps)
        steps.push_back(ZigzagStep<M>{dir, io::decode_morphism(e, mj)});
      auto z = Zigzag<M>::make(e, x.boundary, std::move(steps));
      if (x.target == "span") return zigzag_to_span(e, z);
      return zigzag_to_cospan(e, z);
    }
  }
  throw TypeError("unhandled expression node");
}

template <typename E>
nlohmann::json value_to_json(const E& e, const Value<E>& v) {
  using M = typename E::Morphism;
  return std::visit(
      [&](const auto& x) -> nlohmann::json {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::same_as<X, M>) {
          return io::encode(e, x);
        } else if constexpr (std::same_as<X, Span<M>>) {
          return io::encode_span(e, e.canonical_span(x));
        } else if constexpr (std::same_as<X, Cospan<M>>) {
          return io::encode_cospan(e, e.canonical_cospan(x));
        } else {
          return io::encode(e, x.form);
        }
      },
      v);
}

}  // namespace corel::expr
