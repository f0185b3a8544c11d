#include "gtutte/io.hpp"

#include <limits>
#include <sstream>

#include "gtutte/errors.hpp"

namespace gtutte {

namespace {

using nlohmann::json;

bool is_decimal_string(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

std::vector<Int> int_vector(const json& j, const char* where) {
  if (!j.is_array()) throw ParseError(std::string(where) + ": expected array");
  std::vector<Int> v;
  for (const auto& e : j) v.push_back(int_from_json(e));
  return v;
}

IntMatrix columns_matrix(const json& j, std::size_t rows, const char* where) {
  std::vector<std::vector<Int>> cols;
  if (!j.is_array()) throw ParseError(std::string(where) + ": expected array");
  for (const auto& c : j) {
    auto col = int_vector(c, where);
    if (col.size() != rows)
      throw ParseError(std::string(where) + ": column length != ambient_rank");
    cols.push_back(std::move(col));
  }
  return IntMatrix::from_columns(rows, cols);
}

json vector_json(const std::vector<Int>& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(int_to_json(x));
  return a;
}

json term_json(const std::vector<long>& exponents, const Int& coefficient) {
  json t;
  t["exponents"] = exponents;
  t["coefficient"] = int_to_json(coefficient);
  return t;
}

}  // namespace

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (!is_decimal_string(s))
      throw ParseError("not a decimal integer: \"" + s + "\"");
    return Int(s);
  }
  throw ParseError("expected integer or decimal string");
}

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return json(static_cast<long long>(v.get_si()));
  return json(v.get_str());
}

Arrangement arrangement_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("arrangement: expected object");
  if (!j.contains("ambient_rank") || !j["ambient_rank"].is_number_integer())
    throw ParseError("arrangement: missing integer field ambient_rank");
  const long long rank = j["ambient_rank"].get<long long>();
  if (rank < 0) throw ParseError("arrangement: ambient_rank must be >= 0");
  const auto m = static_cast<std::size_t>(rank);

  IntMatrix relations(m, 0);
  if (j.contains("relations"))
    relations = columns_matrix(j["relations"], m, "relations");

  std::vector<std::vector<Int>> lift_cols;
  std::vector<std::string> labels;
  if (j.contains("elements")) {
    if (!j["elements"].is_array())
      throw ParseError("elements: expected array");
    for (const auto& e : j["elements"]) {
      if (!e.is_object() || !e.contains("vector"))
        throw ParseError("elements: each entry needs a vector field");
      auto v = int_vector(e["vector"], "elements");
      if (v.size() != m)
        throw ParseError("elements: vector length != ambient_rank");
      lift_cols.push_back(std::move(v));
      labels.push_back(e.contains("label") ? e["label"].get<std::string>()
                                           : "e" + std::to_string(labels.size() + 1));
    }
  }

  Arrangement a{ElementList(FgGroup(m, std::move(relations)),
                            IntMatrix::from_columns(m, lift_cols),
                            std::move(labels)),
                std::nullopt};
  if (j.contains("group")) a.group = group_from_json(j["group"]);
  return a;
}

json arrangement_to_json(const Arrangement& a) {
  const ElementList& list = a.list;
  json j;
  j["ambient_rank"] = list.group().ambient_rank();
  json rels = json::array();
  for (std::size_t c = 0; c < list.group().relations().cols(); ++c)
    rels.push_back(vector_json(list.group().relations().column(c)));
  j["relations"] = std::move(rels);
  json elems = json::array();
  for (std::size_t i = 0; i < list.size(); ++i) {
    json e;
    e["label"] = list.labels()[i];
    e["vector"] = vector_json(list.lift(i));
    elems.push_back(std::move(e));
  }
  j["elements"] = std::move(elems);
  if (a.group) j["group"] = group_to_json(*a.group);
  return j;
}

TargetGroup parse_group_spec(const std::string& spec) {
  TargetGroup g;
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : spec) {
    if (ch == ' ' || ch == '\t') continue;
    cur.push_back(ch);
  }
  // split on 'x' separators; the only token containing 'x' is "Cx",
  // so scan for literal factor names greedily
  std::size_t pos = 0;
  while (pos < cur.size()) {
    std::size_t next = pos;
    // "Cx" is the one factor name containing 'x'; it only parses as such
    // when followed by a separator or the end, otherwise read it as "C x ..."
    if (cur.compare(pos, 2, "Cx") == 0 &&
        (pos + 2 == cur.size() || cur[pos + 2] == 'x')) {
      next = pos + 2;
    } else {
      next = cur.find('x', pos);
      if (next == std::string::npos) next = cur.size();
    }
    tokens.push_back(cur.substr(pos, next - pos));
    pos = next;
    if (pos < cur.size()) {
      if (cur[pos] != 'x')
        throw ParseError("group spec: expected 'x' between factors");
      ++pos;
      if (pos == cur.size())
        throw ParseError("group spec: trailing 'x'");
    }
  }
  if (tokens.empty()) throw ParseError("group spec: empty");
  for (const std::string& tok : tokens) {
    if (tok == "triv") {
      // trivial factor: contributes nothing
    } else if (tok == "S1") {
      g.torus_rank += 1;
    } else if (tok == "Cx") {
      g.torus_rank += 1;
      g.real_rank += 1;
    } else if (tok == "C") {
      g.real_rank += 2;
    } else if (tok == "R") {
      g.real_rank += 1;
    } else if (tok.compare(0, 2, "Z/") == 0) {
      std::string num = tok.substr(2);
      if (!is_decimal_string(num) || num[0] == '-')
        throw ParseError("group spec: bad cyclic order in \"" + tok + "\"");
      Int k(num);
      if (k < 1) throw ParseError("group spec: cyclic order must be >= 1");
      if (k > 1) g.finite_factors.push_back(std::move(k));
    } else {
      throw ParseError("group spec: unknown factor \"" + tok + "\"");
    }
  }
  return g;
}

std::string group_spec_string(const TargetGroup& g) {
  std::vector<std::string> parts;
  for (const Int& f : g.finite_factors) parts.push_back("Z/" + f.get_str());
  for (std::size_t i = 0; i < g.torus_rank; ++i) parts.push_back("S1");
  for (std::size_t i = 0; i < g.real_rank; ++i) parts.push_back("R");
  if (parts.empty()) return "triv";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " x " + parts[i];
  return out;
}

json group_to_json(const TargetGroup& g) {
  json j;
  j["finite"] = vector_json(g.finite_factors);
  j["tori"] = g.torus_rank;
  j["reals"] = g.real_rank;
  return j;
}

TargetGroup group_from_json(const json& j) {
  if (j.is_string()) return parse_group_spec(j.get<std::string>());
  if (!j.is_object()) throw ParseError("group: expected object or spec string");
  TargetGroup g;
  if (j.contains("finite"))
    for (const Int& f : int_vector(j["finite"], "group.finite")) {
      if (f < 1) throw ParseError("group.finite: orders must be >= 1");
      if (f > 1) g.finite_factors.push_back(f);
    }
  if (j.contains("tori")) g.torus_rank = j["tori"].get<std::size_t>();
  if (j.contains("reals")) g.real_rank = j["reals"].get<std::size_t>();
  return g;
}

json poly_to_json(const UniPoly& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back(term_json({it->first}, it->second));
  return terms;
}

json poly_to_json(const BiPoly& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back(term_json({it->first.first, it->first.second}, it->second));
  return terms;
}

json poly_to_json(const LaurentMulti& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back(term_json(it->first, it->second));
  return terms;
}

}  // namespace gtutte
