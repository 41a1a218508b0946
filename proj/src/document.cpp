#include "hopfind/document.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "hopfind/error.hpp"

namespace hopfind {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg); }

const Json& member(const Json& obj, const char* key) {
  if (!obj.is_object()) fail("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(std::string("missing key \"") + key + "\"");
  return *it;
}

std::int64_t as_int(const Json& v, const std::string& what) {
  if (!v.is_number_integer()) fail(what + " must be an integer");
  return v.get<std::int64_t>();
}

std::size_t as_index(const Json& v, std::size_t bound, const std::string& what) {
  const std::int64_t x = as_int(v, what);
  if (x < 0 || static_cast<std::uint64_t>(x) >= bound) fail(what + " out of range: " + std::to_string(x));
  return static_cast<std::size_t>(x);
}

Residue as_coeff(const Json& v, const PrimeField& f, const std::string& what) {
  const std::int64_t x = as_int(v, what);
  if (x < 0 || x >= static_cast<std::int64_t>(f.modulus()))
    fail(what + " must lie in [0, p): " + std::to_string(x));
  return static_cast<Residue>(x);
}

const Json& as_array(const Json& v, const std::string& what) {
  if (!v.is_array()) fail(what + " must be an array");
  return v;
}

PrimeField parse_field(const Json& doc) {
  const std::int64_t p = as_int(member(doc, "p"), "p");
  if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(static_cast<std::uint64_t>(p)))
    fail("p must be a prime below 2^31, got " + std::to_string(p));
  return PrimeField(static_cast<std::uint64_t>(p));
}

std::vector<std::string> parse_labels(const Json& doc, std::size_t n, const char* fallback) {
  std::vector<std::string> labels;
  auto it = doc.find("labels");
  if (it == doc.end() || it->is_null()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(fallback + std::to_string(i));
    return labels;
  }
  as_array(*it, "labels");
  if (it->size() != n) fail("labels must have one entry per basis element");
  for (const auto& l : *it) {
    if (!l.is_string()) fail("labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  return labels;
}

Vector parse_dense(const Json& v, const PrimeField& f, std::size_t n, const std::string& what) {
  as_array(v, what);
  if (v.size() != n) fail(what + " must have length " + std::to_string(n));
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = as_coeff(v[i], f, what + " entry");
  return out;
}

// Entries [i_1, .., i_{arity}, c] with indices below dim and no repeats.
template <typename Store>
void parse_sparse(const Json& v, const PrimeField& f, std::size_t dim, std::size_t arity, const std::string& what,
                  Store store) {
  as_array(v, what);
  std::set<std::vector<std::size_t>> seen;
  for (const auto& e : v) {
    if (!e.is_array() || e.size() != arity + 1)
      fail(what + " entries must be arrays of " + std::to_string(arity + 1) + " integers");
    std::vector<std::size_t> idx(arity);
    for (std::size_t a = 0; a < arity; ++a) idx[a] = as_index(e[a], dim, what + " index");
    if (!seen.insert(idx).second) fail("duplicate " + what + " entry");
    store(idx, as_coeff(e[arity], f, what + " coefficient"));
  }
}

std::string describe(const Json& doc) {
  if (doc.is_string()) return std::filesystem::path(doc.get<std::string>()).stem().string();
  if (doc.is_object()) {
    if (auto it = doc.find("name"); it != doc.end() && it->is_string()) return it->get<std::string>();
  }
  return "";
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json(buf.str());
  } catch (const ParseError& e) {
    fail(path.string() + ": " + e.what());
  }
}

Json algebra_to_json(const HopfAlgebraData& h, const std::vector<std::size_t>* degrees) {
  const std::size_t d = h.dim;
  Json mult = Json::array(), comult = Json::array(), antipode = Json::array();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (auto c = h.mult.at(i, j, k)) mult.push_back({i, j, k, c});
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (auto c = h.comult.at(k, i, j)) comult.push_back({k, i, j, c});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (auto c = h.antipode.at(i, j)) antipode.push_back({i, j, c});
  Json doc;
  doc["schema"] = kSchema;
  doc["p"] = h.field.modulus();
  doc["dim"] = d;
  doc["labels"] = h.labels;
  doc["mult"] = std::move(mult);
  doc["unit"] = h.unit;
  doc["comult"] = std::move(comult);
  doc["counit"] = h.counit;
  doc["antipode"] = std::move(antipode);
  if (degrees) doc["degrees"] = *degrees;
  return doc;
}

LoadedAlgebra algebra_from_json(const Json& doc) {
  const Json& schema = member(doc, "schema");
  if (!schema.is_string() || schema.get<std::string>() != kSchema) fail("unsupported schema, expected hopf-v1");
  const PrimeField f = parse_field(doc);
  const std::int64_t dim = as_int(member(doc, "dim"), "dim");
  if (dim < 1) fail("dim must be positive");
  const auto d = static_cast<std::size_t>(dim);
  check_dimension(d);
  HopfAlgebraData h{f,
                    d,
                    parse_labels(doc, d, "e"),
                    Tensor3(f, d, d, d),
                    parse_dense(member(doc, "unit"), f, d, "unit"),
                    Tensor3(f, d, d, d),
                    parse_dense(member(doc, "counit"), f, d, "counit"),
                    FieldMatrix(f, d, d)};
  parse_sparse(member(doc, "mult"), f, d, 3, "mult",
               [&](const auto& i, Residue c) { h.mult.set(i[0], i[1], i[2], c); });
  parse_sparse(member(doc, "comult"), f, d, 3, "comult",
               [&](const auto& i, Residue c) { h.comult.set(i[0], i[1], i[2], c); });
  parse_sparse(member(doc, "antipode"), f, d, 2, "antipode",
               [&](const auto& i, Residue c) { h.antipode.set(i[0], i[1], c); });
  LoadedAlgebra out{std::move(h), std::nullopt, describe(doc)};
  if (auto it = doc.find("degrees"); it != doc.end() && !it->is_null()) {
    as_array(*it, "degrees");
    if (it->size() != d) fail("degrees must have one entry per basis element");
    std::vector<std::size_t> deg;
    for (const auto& x : *it) {
      const std::int64_t v = as_int(x, "degree");
      if (v < 0) fail("degrees must be nonnegative");
      deg.push_back(static_cast<std::size_t>(v));
    }
    out.degrees = std::move(deg);
  }
  return out;
}

Json group_to_json(const GroupTable& g) {
  Json doc;
  doc["order"] = g.order;
  doc["identity"] = g.identity;
  doc["table"] = g.table;
  if (!g.labels.empty()) doc["labels"] = g.labels;
  return doc;
}

GroupTable group_from_json(const Json& doc) {
  GroupTable g;
  const std::int64_t order = as_int(member(doc, "order"), "order");
  if (order < 1) fail("group order must be positive");
  g.order = static_cast<std::size_t>(order);
  g.identity = as_index(member(doc, "identity"), g.order, "identity");
  const Json& table = as_array(member(doc, "table"), "table");
  if (table.size() != g.order) fail("table must have one row per element");
  for (const auto& row : table) {
    as_array(row, "table row");
    if (row.size() != g.order) fail("table rows must have one entry per element");
    std::vector<std::size_t> r;
    for (const auto& x : row) r.push_back(as_index(x, g.order, "table entry"));
    g.table.push_back(std::move(r));
  }
  if (doc.contains("labels")) g.labels = parse_labels(doc, g.order, "g");
  return g;
}

Json lie_to_json(const RestrictedLieData& lie) {
  const std::size_t d = lie.dim;
  Json bracket = Json::array(), pmap = Json::array();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (auto c = lie.bracket.at(i, j, k)) bracket.push_back({i, j, k, c});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      if (auto c = lie.pmap.at(i, k)) pmap.push_back({i, k, c});
  Json doc;
  doc["kind"] = "lie";
  doc["p"] = lie.field.modulus();
  doc["dim"] = d;
  doc["bracket"] = std::move(bracket);
  doc["pmap"] = std::move(pmap);
  if (!lie.labels.empty()) doc["labels"] = lie.labels;
  return doc;
}

RestrictedLieData lie_from_json(const Json& doc) {
  const PrimeField f = parse_field(doc);
  const std::int64_t dim = as_int(member(doc, "dim"), "dim");
  if (dim < 1) fail("dim must be positive");
  const auto d = static_cast<std::size_t>(dim);
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::int64_t>> bracket;
  std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> pmap;
  parse_sparse(member(doc, "bracket"), f, d, 3, "bracket", [&](const auto& i, Residue c) {
    if (i[0] >= i[1]) fail("bracket entries must have i < j");
    bracket.emplace_back(i[0], i[1], i[2], c);
  });
  if (doc.contains("pmap"))
    parse_sparse(doc["pmap"], f, d, 2, "pmap", [&](const auto& i, Residue c) { pmap.emplace_back(i[0], i[1], c); });
  RestrictedLieData lie = make_lie_data(f.modulus(), d, bracket, pmap);
  if (doc.contains("labels")) lie.labels = parse_labels(doc, d, "e");
  return lie;
}

namespace {

std::vector<LoadedAlgebra> operands(const Json& doc, const std::filesystem::path& base_dir) {
  const Json& of = member(doc, "of");
  std::vector<LoadedAlgebra> out;
  if (of.is_array()) {
    for (const auto& sub : of) out.push_back(build_algebra(sub, base_dir));
  } else {
    out.push_back(build_algebra(of, base_dir));
  }
  return out;
}

GroupTable group_operand(const Json& doc, const std::filesystem::path& base_dir) {
  const Json& cayley = member(doc, "cayley");
  if (cayley.is_string()) return group_from_json(read_json_file(base_dir / cayley.get<std::string>()));
  return group_from_json(cayley);
}

std::string joined(const std::string& op, const std::vector<LoadedAlgebra>& args) {
  std::string s = op + "(";
  for (std::size_t i = 0; i < args.size(); ++i) s += (i ? ", " : "") + args[i].name;
  return s + ")";
}

}  // namespace

LoadedAlgebra build_algebra(const Json& doc, const std::filesystem::path& base_dir) {
  if (doc.is_string()) {
    LoadedAlgebra out = load_algebra(base_dir / doc.get<std::string>());
    return out;
  }
  if (!doc.is_object()) fail("expected an algebra or constructor document");
  if (doc.contains("schema")) return algebra_from_json(doc);
  const Json& kind_v = member(doc, "kind");
  if (!kind_v.is_string()) fail("kind must be a string");
  const std::string kind = kind_v.get<std::string>();
  std::string name = describe(doc);
  auto named = [&](HopfAlgebraData h, std::string fallback) {
    return LoadedAlgebra{std::move(h), std::nullopt, name.empty() ? std::move(fallback) : name};
  };
  if (kind == "group" || kind == "function") {
    const PrimeField f = parse_field(doc);
    const GroupTable g = group_operand(doc, base_dir);
    const std::string fallback = (kind == "group" ? "kG" : "k^G") + std::string("[") + std::to_string(g.order) + "]";
    return named(kind == "group" ? group_algebra(g, f.modulus()) : function_algebra(g, f.modulus()), fallback);
  }
  if (kind == "lie") return named(restricted_enveloping(lie_from_json(doc)), "u(g)");
  if (kind == "h_delta") {
    const PrimeField f = parse_field(doc);
    const std::int64_t delta = as_int(member(doc, "delta"), "delta");
    if (delta != 0 && delta != 1) fail("delta must be 0 or 1");
    return named(h_delta(f.modulus(), static_cast<int>(delta)),
                 "H(" + std::to_string(delta) + ")_" + std::to_string(f.modulus()));
  }
  if (kind == "dual" || kind == "op" || kind == "cop") {
    auto args = operands(doc, base_dir);
    if (args.size() != 1) fail(kind + " takes exactly one operand");
    const auto& h = args[0].algebra;
    HopfAlgebraData r = kind == "dual" ? dual(h) : kind == "op" ? opposite(h) : co_opposite(h);
    return named(std::move(r), joined(kind, args));
  }
  if (kind == "tensor") {
    auto args = operands(doc, base_dir);
    if (args.size() < 2) fail("tensor takes at least two operands");
    HopfAlgebraData r = args[0].algebra;
    for (std::size_t i = 1; i < args.size(); ++i) r = tensor(r, args[i].algebra);
    return named(std::move(r), joined(kind, args));
  }
  fail("unknown constructor kind \"" + kind + "\"");
}

LoadedAlgebra load_algebra(const std::filesystem::path& path) {
  const Json doc = read_json_file(path);
  LoadedAlgebra out = build_algebra(doc, path.parent_path());
  if (!doc.contains("name")) out.name = path.stem().string();
  return out;
}

Json report_to_json(const IndicatorReport& r) {
  Json doc;
  doc["algebra"] = r.algebra;
  doc["p"] = r.p;
  doc["window"] = {r.lo, r.hi};
  doc["values"] = r.sequence.values;
  doc["min_poly"] = r.min_poly.coeffs();
  doc["period"] = r.period;
  doc["p_pertinent"] = r.p_pertinent;
  return doc;
}

Json filtration_to_json(const Filtration& f) {
  Json doc;
  doc["kind"] = std::string(to_string(f.kind));
  doc["dims"] = f.dims();
  doc["degrees"] = adapted_basis(f).degrees;
  return doc;
}

Json radical_to_json(const Subspace& j) {
  Json basis = Json::array();
  for (std::size_t r = 0; r < j.dim(); ++r) basis.push_back(j.basis_vector(r));
  Json doc;
  doc["kind"] = "radical";
  doc["dims"] = {j.dim()};
  doc["basis"] = std::move(basis);
  return doc;
}

std::string format_document(const Json& doc) {
  if (!doc.is_object() || doc.empty()) return doc.dump() + "\n";
  std::string out = "{\n";
  bool first = true;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += "  " + Json(it.key()).dump() + ": " + it.value().dump();
  }
  return out + "\n}\n";
}

}  // namespace hopfind
