#pragma once

// JSON encodings for every engine's morphisms and canonical forms.
//
//   finset   {"dom":n,"cod":m,"table":[...]}            (null = undefined)
//   partition {"n":n,"m":m,"blocks":[...]}              (null = unassigned)
//   relation {"dom":n,"cod":m,"pairs":[[i,j],...]}
//   linear   {"field":"Q","dom":n,"cod":m,"matrix":[["1","1/2"],...]}
//            {"field":"Fp","p":5, ...}
//   integer  {"ring":"Z","dom":n,"cod":m,"matrix":[[...]]}
//
// Matrices are stored row-major; entry [i][j] is row i, column j of the
// cod x dom matrix.

#include <json.hpp>

#include "corel/finset.hpp"
#include "corel/linear.hpp"
#include "corel/partial.hpp"
#include "corel/pid.hpp"

namespace corel::io {

using json = nlohmann::json;

// --- finset ---------------------------------------------------------------

json encode(const FinSetEngine&, const FinFn& f);
FinFn decode_morphism(const FinSetEngine&, const json& j);

json encode(const FinSetEngine&, const Partition& p);
Partition decode_corel(const FinSetEngine&, const json& j);

json encode(const FinSetEngine&, const RelationTable& r);
RelationTable decode_rel(const FinSetEngine&, const json& j);

// --- partial functions ------------------------------------------------------

json encode(const PartialFnEngine&, const PartialFn& f);
PartialFn decode_morphism(const PartialFnEngine&, const json& j);

json encode(const PartialFnEngine&, const PartialPartition& p);
PartialPartition decode_corel(const PartialFnEngine&, const json& j);

// --- linear over Q / GF(p) --------------------------------------------------

json encode(const LinQEngine& e, const Matrix<mpq_class>& m);
Matrix<mpq_class> decode_morphism(const LinQEngine& e, const json& j);
json encode(const LinQEngine& e, const LinCorelForm<mpq_class>& c);
LinCorelForm<mpq_class> decode_corel(const LinQEngine& e, const json& j);
json encode(const LinQEngine& e, const LinRelForm<mpq_class>& r);
LinRelForm<mpq_class> decode_rel(const LinQEngine& e, const json& j);

json encode(const LinFpEngine& e, const Matrix<std::int64_t>& m);
Matrix<std::int64_t> decode_morphism(const LinFpEngine& e, const json& j);
json encode(const LinFpEngine& e, const LinCorelForm<std::int64_t>& c);
LinCorelForm<std::int64_t> decode_corel(const LinFpEngine& e, const json& j);
json encode(const LinFpEngine& e, const LinRelForm<std::int64_t>& r);
LinRelForm<std::int64_t> decode_rel(const LinFpEngine& e, const json& j);

// --- integers ---------------------------------------------------------------

json encode(const PidEngine&, const ZMatrix& m);
ZMatrix decode_morphism(const PidEngine&, const json& j);
json encode(const PidEngine&, const ZCorelForm& c);
ZCorelForm decode_corel(const PidEngine&, const json& j);

// --- generic wrappers ---------------------------------------------------------

template <typename E>
json encode_span(const E& e, const Span<typename E::Morphism>& s) {
  return json{{"kind", "span"}, {"left", encode(e, s.left)}, {"right", encode(e, s.right)}};
}

template <typename E>
json encode_cospan(const E& e, const Cospan<typename E::Morphism>& c) {
  return json{{"kind", "cospan"}, {"left", encode(e, c.left)}, {"right", encode(e, c.right)}};
}

}  // namespace corel::io
