#include "corel/json_io.hpp"

#include <algorithm>

namespace corel::io {

namespace {

int require_nat(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0)
    throw ParseError(std::string("expected a natural number field '") + key + "'");
  return j[key].get<int>();
}

const json& require_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw ParseError(std::string("expected an array field '") + key + "'");
  return j[key];
}

std::vector<int> int_table(const json& arr, bool allow_null) {
  std::vector<int> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (v.is_null()) {
      if (!allow_null) throw ParseError("null entry not allowed here");
      out.push_back(kUndef);
    } else if (v.is_number_integer()) {
      out.push_back(v.get<int>());
    } else {
      throw ParseError("table entries must be integers");
    }
  }
  return out;
}

// Matrix entries come in as strings ("3/4") or plain numbers.
template <typename F>
Matrix<typename F::Scalar> decode_matrix(const F& field, const json& j, int rows, int cols) {
  const json& arr = require_array(j, "matrix");
  if (static_cast<int>(arr.size()) != rows)
    throw ParseError("matrix row count disagrees with cod");
  Matrix<typename F::Scalar> m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!arr[i].is_array() || static_cast<int>(arr[i].size()) != cols)
      throw ParseError("matrix column count disagrees with dom");
    for (int c = 0; c < cols; ++c) {
      const auto& v = arr[i][c];
      if (v.is_string())
        m.at(i, c) = field.parse(v.template get<std::string>());
      else if (v.is_number_integer())
        m.at(i, c) = field.from_long(v.template get<long long>());
      else
        throw ParseError("matrix entries must be strings or integers");
    }
  }
  return m;
}

template <typename F>
json encode_matrix(const F& field, const Matrix<typename F::Scalar>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(field.to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json encode_z_matrix(const ZMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) {
      const mpz_class& v = m.at(i, j);
      if (v.fits_slong_p())
        row.push_back(v.get_si());
      else
        row.push_back(v.get_str());  // beyond 64 bits: fall back to strings
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void check_field_tag(const json& j, const std::string& expect) {
  if (!j.contains("field") || !j["field"].is_string() || j["field"] != expect)
    throw TypeError("morphism carries field tag '" +
                    (j.contains("field") && j["field"].is_string()
                         ? j["field"].get<std::string>()
                         : std::string("<none>")) +
                    "', engine expects '" + expect + "'");
}

}  // namespace

// --- finset -----------------------------------------------------------------

json encode(const FinSetEngine&, const FinFn& f) {
  return json{{"dom", f.dom()}, {"cod", f.cod()}, {"table", f.table()}};
}

FinFn decode_morphism(const FinSetEngine&, const json& j) {
  const int dom = require_nat(j, "dom"), cod = require_nat(j, "cod");
  auto t = int_table(require_array(j, "table"), false);
  try {
    return FinFn(dom, cod, std::move(t));
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  }
}

json encode(const FinSetEngine&, const Partition& p) {
  return json{{"n", p.n}, {"m", p.m}, {"blocks", p.blocks}};
}

Partition decode_corel(const FinSetEngine&, const json& j) {
  const int n = require_nat(j, "n"), m = require_nat(j, "m");
  auto blocks = int_table(require_array(j, "blocks"), false);
  if (static_cast<int>(blocks.size()) != n + m)
    throw ParseError("partition block table must cover n+m points");
  auto norm = normalize_partition(n, m, blocks);
  if (norm.blocks != blocks) throw ParseError("partition blocks are not in normal form");
  return norm;
}

json encode(const FinSetEngine&, const RelationTable& r) {
  json pairs = json::array();
  for (auto& [a, b] : r.pairs) pairs.push_back(json::array({a, b}));
  return json{{"dom", r.dom}, {"cod", r.cod}, {"pairs", pairs}};
}

RelationTable decode_rel(const FinSetEngine&, const json& j) {
  const int dom = require_nat(j, "dom"), cod = require_nat(j, "cod");
  RelationTable r{dom, cod, {}};
  for (const auto& p : require_array(j, "pairs")) {
    if (!p.is_array() || p.size() != 2) throw ParseError("relation pairs must be [i, j]");
    const int a = p[0].get<int>(), b = p[1].get<int>();
    if (a < 0 || a >= dom || b < 0 || b >= cod)
      throw ParseError("relation pair out of range");
    r.pairs.emplace_back(a, b);
  }
  auto sorted = r.pairs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted != r.pairs) throw ParseError("relation pairs must be sorted and distinct");
  return r;
}

// --- partial functions --------------------------------------------------------

json encode(const PartialFnEngine&, const PartialFn& f) {
  json table = json::array();
  for (int v : f.table())
    if (v == kUndef)
      table.push_back(nullptr);
    else
      table.push_back(v);
  return json{{"dom", f.dom()}, {"cod", f.cod()}, {"table", table}};
}

PartialFn decode_morphism(const PartialFnEngine&, const json& j) {
  const int dom = require_nat(j, "dom"), cod = require_nat(j, "cod");
  auto t = int_table(require_array(j, "table"), true);
  try {
    return PartialFn(dom, cod, std::move(t));
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  }
}

json encode(const PartialFnEngine&, const PartialPartition& p) {
  json blocks = json::array();
  for (int v : p.blocks)
    if (v == kUndef)
      blocks.push_back(nullptr);
    else
      blocks.push_back(v);
  return json{{"n", p.n}, {"m", p.m}, {"blocks", blocks}};
}

PartialPartition decode_corel(const PartialFnEngine&, const json& j) {
  const int n = require_nat(j, "n"), m = require_nat(j, "m");
  auto blocks = int_table(require_array(j, "blocks"), true);
  if (static_cast<int>(blocks.size()) != n + m)
    throw ParseError("partition block table must cover n+m points");
  auto norm = normalize_partial_partition(n, m, blocks);
  if (norm.blocks != blocks)
    throw ParseError("partial partition blocks are not in normal form");
  return norm;
}

// --- linear -------------------------------------------------------------------

namespace {
template <typename E>
json linear_tag(const E& e);

template <>
json linear_tag<LinQEngine>(const LinQEngine&) {
  return json{{"field", "Q"}};
}

template <>
json linear_tag<LinFpEngine>(const LinFpEngine& e) {
  return json{{"field", "Fp"}, {"p", e.field.p}};
}

template <typename E>
void check_linear_tag(const E& e, const json& j);

template <>
void check_linear_tag<LinQEngine>(const LinQEngine&, const json& j) {
  check_field_tag(j, "Q");
}

template <>
void check_linear_tag<LinFpEngine>(const LinFpEngine& e, const json& j) {
  check_field_tag(j, "Fp");
  if (!j.contains("p") || !j["p"].is_number_integer() ||
      j["p"].get<std::int64_t>() != e.field.p)
    throw TypeError("GF(p) modulus disagrees with the engine");
}

template <typename E>
json encode_linear_morphism(const E& e, const Matrix<typename E::Scalar>& m) {
  json j = linear_tag(e);
  j["dom"] = m.dom();
  j["cod"] = m.cod();
  j["matrix"] = encode_matrix(e.field, m);
  return j;
}

template <typename E>
Matrix<typename E::Scalar> decode_linear_morphism(const E& e, const json& j) {
  check_linear_tag(e, j);
  const int dom = require_nat(j, "dom"), cod = require_nat(j, "cod");
  return decode_matrix(e.field, j, cod, dom);
}
}  // namespace

json encode(const LinQEngine& e, const Matrix<mpq_class>& m) { return encode_linear_morphism(e, m); }
Matrix<mpq_class> decode_morphism(const LinQEngine& e, const json& j) {
  return decode_linear_morphism(e, j);
}

json encode(const LinQEngine& e, const LinCorelForm<mpq_class>& c) {
  json j = linear_tag(e);
  j["dom"] = c.dom;
  j["cod"] = c.cod;
  j["matrix"] = encode_matrix(e.field, c.mat);
  return j;
}

LinCorelForm<mpq_class> decode_corel(const LinQEngine& e, const json& j) {
  check_linear_tag(e, j);
  const int dom = require_nat(j, "dom"), cod = require_nat(j, "cod");
  const int rows = static_cast<int>(require_array(j, "matrix").size());
  return LinCorelForm<mpq_class>{dom, cod, decode_matrix(e.field, j, rows, dom + cod)};
}

json encode(const LinQEngine& e, const LinRelForm<mpq_class>& r) {
  json j = linear_tag(e);
  j["dom"] = r.dom;
  j["cod"] = r.cod;
  j["basis"] = encode_matrix(e.field, r.basis);
  return j;
}

LinRelForm<mpq_class> decode_rel(const LinQEngine& e, const json& j) {
  check_linear_tag(e, j);
  const int dom = require_nat(j, "dom"), cod = require_nat(j, "cod");
  const int rows = static_cast<int>(require_array(j, "basis").size());
  json jj = j;
  jj["matrix"] = j["basis"];
  return LinRelForm<mpq_class>{dom, cod, decode_matrix(e.field, jj, rows, dom + cod)};
}

json encode(const LinFpEngine& e, const Matrix<std::int64_t>& m) {
  return encode_linear_morphism(e, m);
}
Matrix<std::int64_t> decode_morphism(const LinFpEngine& e, const json& j) {
  return decode_linear_morphism(e, j);
}

json encode(const LinFpEngine& e, const LinCorelForm<std::int64_t>& c) {
  json j = linear_tag(e);
  j["dom"] = c.dom;
  j["cod"] = c.cod;
  j["matrix"] = encode_matrix(e.field, c.mat);
  return j;
}

LinCorelForm<std::int64_t> decode_corel(const LinFpEngine& e, const json& j) {
  check_linear_tag(e, j);
  const int dom = require_nat(j, "dom"), cod = require_nat(j, "cod");
  const int rows = static_cast<int>(require_array(j, "matrix").size());
  return LinCorelForm<std::int64_t>{dom, cod, decode_matrix(e.field, j, rows, dom + cod)};
}

json encode(const LinFpEngine& e, const LinRelForm<std::int64_t>& r) {
  json j = linear_tag(e);
  j["dom"] = r.dom;
  j["cod"] = r.cod;
  j["basis"] = encode_matrix(e.field, r.basis);
  return j;
}

LinRelForm<std::int64_t> decode_rel(const LinFpEngine& e, const json& j) {
  check_linear_tag(e, j);
  const int dom = require_nat(j, "dom"), cod = require_nat(j, "cod");
  const int rows = static_cast<int>(require_array(j, "basis").size());
  json jj = j;
  jj["matrix"] = j["basis"];
  return LinRelForm<std::int64_t>{dom, cod, decode_matrix(e.field, jj, rows, dom + cod)};
}

// --- integers -------------------------------------------------------------------

json encode(const PidEngine&, const ZMatrix& m) {
  return json{{"ring", "Z"}, {"dom", m.dom()}, {"cod", m.cod()}, {"matrix", encode_z_matrix(m)}};
}

ZMatrix decode_morphism(const PidEngine& e, const json& j) {
  if (!j.contains("ring") || j["ring"] != "Z")
    throw TypeError("integer morphism must carry the ring tag \"Z\"");
  const int dom = require_nat(j, "dom"), cod = require_nat(j, "cod");
  return decode_matrix(e.ring, j, cod, dom);
}

json encode(const PidEngine&, const ZCorelForm& c) {
  return json{{"ring", "Z"}, {"dom", c.dom}, {"cod", c.cod}, {"matrix", encode_z_matrix(c.mat)}};
}

ZCorelForm decode_corel(const PidEngine& e, const json& j) {
  if (!j.contains("ring") || j["ring"] != "Z")
    throw TypeError("integer corelation must carry the ring tag \"Z\"");
  const int dom = require_nat(j, "dom"), cod = require_nat(j, "cod");
  const int rows = static_cast<int>(require_array(j, "matrix").size());
  return ZCorelForm{dom, cod, decode_matrix(e.ring, j, rows, dom + cod)};
}

}  // namespace corel::io
