#include "chevalley/json_io.hpp"

#include "chevalley/errors.hpp"

namespace chevalley {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer())
    throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

Rational scalar_from_json(const Json& v) {
  if (v.is_string())
    return parse_rational(v.get<std::string>());
  if (v.is_number_integer())
    return Rational(v.get<long>());
  throw ParseError("scalar must be a fraction string");
}

std::vector<Rational> scalars_from_json(const Json& arr) {
  if (!arr.is_array())
    throw ParseError("expected an array of fraction strings");
  std::vector<Rational> out;
  for (const auto& v : arr)
    out.push_back(scalar_from_json(v));
  return out;
}

Json scalars_to_json(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const auto& q : v)
    arr.push_back(to_string(q));
  return arr;
}

} // namespace

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.dim(); ++c)
      row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"dim", m.dim()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j) {
  const int dim = int_field(j, "dim");
  if (dim < 1)
    throw ParseError("matrix dimension must be positive");
  const auto& rows = field(j, "entries");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(dim))
    throw ParseError("entries must hold dim rows");
  Matrix m(static_cast<std::size_t>(dim));
  for (std::size_t r = 0; r < m.dim(); ++r) {
    const auto row = scalars_from_json(rows[r]);
    if (row.size() != m.dim())
      throw ParseError("row " + std::to_string(r + 1) + " does not have dim entries");
    for (std::size_t c = 0; c < m.dim(); ++c)
      m(r, c) = row[c];
  }
  return m;
}

Json lie_element_to_json(const LieElement& x) {
  return {{"n", x.rank()}, {"coords", scalars_to_json(x.coords())}};
}

LieElement lie_element_from_json(const Json& j) {
  const int n = int_field(j, "n");
  if (n < 1)
    throw ParseError("rank must be at least 1");
  auto coords = scalars_from_json(field(j, "coords"));
  if (coords.size() != lie_dimension(n))
    throw ParseError("coords has the wrong length for the rank");
  return LieElement(n, std::move(coords));
}

Json section_to_json(const TitsSection& s) {
  return {{"n", s.rank()}, {"a", scalars_to_json(s.params())}};
}

TitsSection section_from_json(const Json& j) {
  const int n = int_field(j, "n");
  if (n < 1)
    throw ParseError("rank must be at least 1");
  auto a = scalars_from_json(field(j, "a"));
  if (a.size() != static_cast<std::size_t>(n))
    throw ParseError("section needs n parameters");
  for (const auto& q : a)
    if (is_zero(q))
      throw ParseError("section parameters must be nonzero");
  return TitsSection(n, std::move(a));
}

Json report_to_json(const Report& r) {
  Json rels = Json::array();
  for (const auto& rel : r.relations) {
    Json o = {{"tag", rel.tag}, {"i", rel.i}, {"j", rel.j}, {"pass", rel.pass}};
    if (rel.left)
      o["left"] = matrix_to_json(*rel.left);
    if (rel.right)
      o["right"] = matrix_to_json(*rel.right);
    rels.push_back(std::move(o));
  }
  return {{"n", r.n}, {"relations", std::move(rels)}, {"all_pass", r.all_pass()}};
}

Report report_from_json(const Json& j) {
  Report r;
  r.n = int_field(j, "n");
  const auto& rels = field(j, "relations");
  if (!rels.is_array())
    throw ParseError("relations must be an array");
  for (const auto& o : rels) {
    RelationResult rel;
    const auto& tag = field(o, "tag");
    const auto& pass = field(o, "pass");
    if (!tag.is_string() || !pass.is_boolean())
      throw ParseError("relation entries need a string tag and a boolean pass");
    rel.tag = tag.get<std::string>();
    rel.i = int_field(o, "i");
    rel.j = int_field(o, "j");
    rel.pass = pass.get<bool>();
    if (o.contains("left"))
      rel.left = matrix_from_json(o.at("left"));
    if (o.contains("right"))
      rel.right = matrix_from_json(o.at("right"));
    r.relations.push_back(std::move(rel));
  }
  const auto& all = field(j, "all_pass");
  if (!all.is_boolean() || all.get<bool>() != r.all_pass())
    throw ParseError("all_pass is inconsistent with the relation entries");
  return r;
}

Json permutation_to_json(const Permutation& p) { return p.images(); }

Json decomposition_to_json(const MonomialDecomposition& d) {
  return {{"permutation", permutation_to_json(d.sigma)},
          {"cycles", d.sigma.cycles()},
          {"scales", scalars_to_json(d.scales)}};
}

} // namespace chevalley
