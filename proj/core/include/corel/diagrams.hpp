#pragma once

// Engine-generic machinery for spans, cospans, (co)relations and zigzags.
//
// An engine models a prop (objects are natural numbers, tensor is addition)
// together with a factorisation system (E, M) and a subcategory A used to
// restrict the span-to-corelation functor.  Engines supply pullbacks,
// pushouts with mediator contracts, epi-mono style factorisation and
// canonical forms; everything in this header is written against that
// interface and never inspects a concrete morphism representation.

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace corel {

// Boundary mismatch between composed diagrams.
class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation applied outside its stated domain (e.g. pi on a span whose
// legs are not in A).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ill-typed diagram expression (kind mismatch, wrong engine tag, ...).
class TypeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A span X <- apex -> Y.  `left` points at the domain, `right` at the
// codomain; both legs share the apex as their domain.
template <typename M>
struct Span {
  M left;
  M right;

  Span(M l, M r) : left(std::move(l)), right(std::move(r)) {
    if (left.dom() != right.dom())
      throw DimensionError("span legs disagree on the apex");
  }

  int apex() const { return left.dom(); }
  int dom() const { return left.cod(); }
  int cod() const { return right.cod(); }
};

// A cospan X -> apex <- Y.
template <typename M>
struct Cospan {
  M left;
  M right;

  Cospan(M l, M r) : left(std::move(l)), right(std::move(r)) {
    if (left.cod() != right.cod())
      throw DimensionError("cospan legs disagree on the apex");
  }

  int apex() const { return left.cod(); }
  int dom() const { return left.dom(); }
  int cod() const { return right.dom(); }
};

template <typename E>
concept Engine = requires(const E& e, const typename E::Morphism& f,
                          const typename E::Morphism& g, int n) {
  { e.name() } -> std::convertible_to<std::string>;
  { e.identity(n) } -> std::same_as<typename E::Morphism>;
  { e.compose(f, g) } -> std::same_as<typename E::Morphism>;
  { e.equal(f, g) } -> std::same_as<bool>;
  { e.is_in_E(f) } -> std::same_as<bool>;
  { e.is_in_M(f) } -> std::same_as<bool>;
  { e.is_in_A(f) } -> std::same_as<bool>;
  { e.factor(f) } -> std::same_as<std::pair<typename E::Morphism, typename E::Morphism>>;
  { e.tensor(f, g) } -> std::same_as<typename E::Morphism>;
};

// Engines with pushouts: enough to compose cospans and to take corelation
// quotients.  corel_canonical implements the jointly-in-E reduction; its
// output is a unique concrete value per corelation.
template <typename E>
concept CorelEngine = Engine<E> &&
    requires(const E& e, const Span<typename E::Morphism>& s,
             const Cospan<typename E::Morphism>& c, const typename E::CorelForm& k) {
  { e.pushout(s) } -> std::same_as<Cospan<typename E::Morphism>>;
  { e.pushout_mediator(s, c) } -> std::same_as<typename E::Morphism>;
  { e.canonical_cospan(c) } -> std::same_as<Cospan<typename E::Morphism>>;
  { e.corel_canonical(c) } -> std::same_as<typename E::CorelForm>;
  { e.corel_cospan(k) } -> std::same_as<Cospan<typename E::Morphism>>;
};

// Engines with pullbacks and a stable factorisation: enough to compose
// spans and take relation quotients.
template <typename E>
concept RelEngine = Engine<E> &&
    requires(const E& e, const Span<typename E::Morphism>& s,
             const Cospan<typename E::Morphism>& c, const typename E::RelForm& r) {
  { e.pullback(c) } -> std::same_as<Span<typename E::Morphism>>;
  { e.pullback_mediator(c, s) } -> std::same_as<typename E::Morphism>;
  { e.canonical_span(s) } -> std::same_as<Span<typename E::Morphism>>;
  { e.rel_canonical(s) } -> std::same_as<typename E::RelForm>;
  { e.rel_span(r) } -> std::same_as<Span<typename E::Morphism>>;
};

// Engines that can compose spans (pullbacks) without necessarily having a
// relation canonical form.
template <typename E>
concept PullbackEngine = Engine<E> &&
    requires(const E& e, const Cospan<typename E::Morphism>& c,
             const Span<typename E::Morphism>& s) {
  { e.pullback(c) } -> std::same_as<Span<typename E::Morphism>>;
  { e.pullback_mediator(c, s) } -> std::same_as<typename E::Morphism>;
  { e.canonical_span(s) } -> std::same_as<Span<typename E::Morphism>>;
};

// Canonical quotient representatives.  The form value is the unique normal
// form per equivalence class, so equality on forms decides equality of
// (co)relations.
template <typename E>
struct Corelation {
  int dom = 0;
  int cod = 0;
  typename E::CorelForm form;

  friend bool operator==(const Corelation& a, const Corelation& b) {
    return a.dom == b.dom && a.cod == b.cod && a.form == b.form;
  }
};

template <typename E>
struct Relation {
  int dom = 0;
  int cod = 0;
  typename E::RelForm form;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.dom == b.dom && a.cod == b.cod && a.form == b.form;
  }
};

// --- composition --------------------------------------------------------

template <CorelEngine E>
Cospan<typename E::Morphism> compose_cospan(const E& e,
                                            const Cospan<typename E::Morphism>& a,
                                            const Cospan<typename E::Morphism>& b) {
  if (a.cod() != b.dom())
    throw DimensionError("cospan composition: boundary mismatch");
  Span<typename E::Morphism> middle(a.right, b.left);
  auto po = e.pushout(middle);
  return e.canonical_cospan(Cospan<typename E::Morphism>(
      e.compose(a.left, po.left), e.compose(b.right, po.right)));
}

template <PullbackEngine E>
Span<typename E::Morphism> compose_span(const E& e,
                                        const Span<typename E::Morphism>& a,
                                        const Span<typename E::Morphism>& b) {
  if (a.cod() != b.dom())
    throw DimensionError("span composition: boundary mismatch");
  Cospan<typename E::Morphism> middle(a.right, b.left);
  auto pb = e.pullback(middle);
  return e.canonical_span(Span<typename E::Morphism>(
      e.compose(pb.left, a.left), e.compose(pb.right, b.right)));
}

// --- quotient functors --------------------------------------------------

// Cospan -> corelation: factor the copairing and keep the jointly-in-E part.
template <CorelEngine E>
Corelation<E> gamma(const E& e, const Cospan<typename E::Morphism>& c) {
  return Corelation<E>{c.dom(), c.cod(), e.corel_canonical(c)};
}

// Span -> corelation: pushout, then jointly-in-E part.  Only defined on
// spans with both legs in A; silently accepting arbitrary legs is unsound,
// so reject instead.
template <CorelEngine E>
Corelation<E> pi(const E& e, const Span<typename E::Morphism>& s) {
  if (!e.is_in_A(s.left) || !e.is_in_A(s.right))
    throw PreconditionError("pi: span leg outside the subcategory A");
  return gamma(e, e.pushout(s));
}

// Span -> relation: factor the pairing and keep the jointly-in-M part.
template <RelEngine E>
Relation<E> rho(const E& e, const Span<typename E::Morphism>& s) {
  return Relation<E>{s.dom(), s.cod(), e.rel_canonical(s)};
}

template <CorelEngine E>
Corelation<E> compose_corel(const E& e, const Corelation<E>& a, const Corelation<E>& b) {
  if (a.cod != b.dom)
    throw DimensionError("corelation composition: boundary mismatch");
  return gamma(e, compose_cospan(e, e.corel_cospan(a.form), e.corel_cospan(b.form)));
}

template <RelEngine E>
Relation<E> compose_rel(const E& e, const Relation<E>& a, const Relation<E>& b) {
  if (a.cod != b.dom)
    throw DimensionError("relation composition: boundary mismatch");
  return rho(e, compose_span(e, e.rel_span(a.form), e.rel_span(b.form)));
}

template <CorelEngine E>
Corelation<E> identity_corel(const E& e, int n) {
  return gamma(e, Cospan<typename E::Morphism>(e.identity(n), e.identity(n)));
}

template <RelEngine E>
Relation<E> identity_rel(const E& e, int n) {
  return rho(e, Span<typename E::Morphism>(e.identity(n), e.identity(n)));
}

// --- tensor -------------------------------------------------------------

template <Engine E>
Cospan<typename E::Morphism> tensor_cospan(const E& e,
                                           const Cospan<typename E::Morphism>& a,
                                           const Cospan<typename E::Morphism>& b) {
  return Cospan<typename E::Morphism>(e.tensor(a.left, b.left),
                                      e.tensor(a.right, b.right));
}

template <Engine E>
Span<typename E::Morphism> tensor_span(const E& e,
                                       const Span<typename E::Morphism>& a,
                                       const Span<typename E::Morphism>& b) {
  return Span<typename E::Morphism>(e.tensor(a.left, b.left),
                                    e.tensor(a.right, b.right));
}

template <CorelEngine E>
Corelation<E> tensor_corel(const E& e, const Corelation<E>& a, const Corelation<E>& b) {
  return gamma(e, tensor_cospan(e, e.corel_cospan(a.form), e.corel_cospan(b.form)));
}

template <RelEngine E>
Relation<E> tensor_rel(const E& e, const Relation<E>& a, const Relation<E>& b) {
  return rho(e, tensor_span(e, e.rel_span(a.form), e.rel_span(b.form)));
}

// --- dagger (swap the two boundaries) ------------------------------------

template <typename M>
Cospan<M> dagger_cospan(const Cospan<M>& c) {
  return Cospan<M>(c.right, c.left);
}

template <typename M>
Span<M> dagger_span(const Span<M>& s) {
  return Span<M>(s.right, s.left);
}

template <CorelEngine E>
Corelation<E> dagger_corel(const E& e, const Corelation<E>& a) {
  return gamma(e, dagger_cospan(e.corel_cospan(a.form)));
}

template <RelEngine E>
Relation<E> dagger_rel(const E& e, const Relation<E>& a) {
  return rho(e, dagger_span(e.rel_span(a.form)));
}

// --- equality through canonical forms ------------------------------------

template <CorelEngine E>
bool equal_cospan(const E& e, const Cospan<typename E::Morphism>& a,
                  const Cospan<typename E::Morphism>& b) {
  if (a.dom() != b.dom() || a.cod() != b.cod()) return false;
  auto ca = e.canonical_cospan(a);
  auto cb = e.canonical_cospan(b);
  return e.equal(ca.left, cb.left) && e.equal(ca.right, cb.right);
}

template <PullbackEngine E>
bool equal_span(const E& e, const Span<typename E::Morphism>& a,
                const Span<typename E::Morphism>& b) {
  if (a.dom() != b.dom() || a.cod() != b.cod()) return false;
  auto ca = e.canonical_span(a);
  auto cb = e.canonical_span(b);
  return e.equal(ca.left, cb.left) && e.equal(ca.right, cb.right);
}

// --- zigzags --------------------------------------------------------------

enum class Dir : std::uint8_t { fwd, bwd };

template <typename M>
struct ZigzagStep {
  Dir dir;
  M mor;
};

// Alternating sequence of forward/backward morphisms between two boundaries.
// Stored pre-normalised: directions alternate, no identity steps, endpoints
// chain.  A fwd step f : a -> b moves the boundary a ~> b; a bwd step g
// moves g.cod ~> g.dom.
template <typename M>
class Zigzag {
 public:
  explicit Zigzag(int boundary) : dom_(boundary), cod_(boundary) {}

  template <Engine E>
    requires std::same_as<typename E::Morphism, M>
  static Zigzag make(const E& e, int dom, std::vector<ZigzagStep<M>> steps) {
    Zigzag z(dom);
    int at = dom;
    Dir prev = Dir::fwd;
    bool first = true;
    for (const auto& st : steps) {
      const int from = st.dir == Dir::fwd ? st.mor.dom() : st.mor.cod();
      const int to = st.dir == Dir::fwd ? st.mor.cod() : st.mor.dom();
      if (from != at)
        throw DimensionError("zigzag: step does not chain with the current boundary");
      if (!first && st.dir == prev)
        throw PreconditionError("zigzag: consecutive steps share a direction");
      if (st.mor.dom() == st.mor.cod() && e.equal(st.mor, e.identity(st.mor.dom())))
        throw PreconditionError("zigzag: identity steps are not stored");
      at = to;
      prev = st.dir;
      first = false;
    }
    z.steps_ = std::move(steps);
    z.cod_ = at;
    return z;
  }

  int dom() const { return dom_; }
  int cod() const { return cod_; }
  const std::vector<ZigzagStep<M>>& steps() const { return steps_; }
  bool empty() const { return steps_.empty(); }

 private:
  int dom_;
  int cod_;
  std::vector<ZigzagStep<M>> steps_;
};

namespace detail {
template <Engine E>
void require_steps_in_A(const E& e, const Zigzag<typename E::Morphism>& z) {
  for (const auto& st : z.steps())
    if (!e.is_in_A(st.mor))
      throw PreconditionError("zigzag: step outside the subcategory A");
}
}  // namespace detail

// Fold a zigzag into a single cospan via f |-> (f, id) and g |-> (id, g).
template <CorelEngine E>
Cospan<typename E::Morphism> zigzag_to_cospan(const E& e,
                                              const Zigzag<typename E::Morphism>& z) {
  detail::require_steps_in_A(e, z);
  Cospan<typename E::Morphism> acc(e.identity(z.dom()), e.identity(z.dom()));
  for (const auto& st : z.steps()) {
    Cospan<typename E::Morphism> step =
        st.dir == Dir::fwd
            ? Cospan<typename E::Morphism>(st.mor, e.identity(st.mor.cod()))
            : Cospan<typename E::Morphism>(e.identity(st.mor.cod()), st.mor);
    acc = compose_cospan(e, acc, step);
  }
  return acc;
}

// Fold a zigzag into a single span via f |-> (id, f) and g |-> (g, id).
template <PullbackEngine E>
Span<typename E::Morphism> zigzag_to_span(const E& e,
                                          const Zigzag<typename E::Morphism>& z) {
  detail::require_steps_in_A(e, z);
  Span<typename E::Morphism> acc(e.identity(z.dom()), e.identity(z.dom()));
  for (const auto& st : z.steps()) {
    Span<typename E::Morphism> step =
        st.dir == Dir::fwd
            ? Span<typename E::Morphism>(e.identity(st.mor.dom()), st.mor)
            : Span<typename E::Morphism>(st.mor, e.identity(st.mor.dom()));
    acc = compose_span(e, acc, step);
  }
  return acc;
}

}  // namespace corel
