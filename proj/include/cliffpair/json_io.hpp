#pragma once

// JSON interchange.  Groups referenced by file are cached per canonical
// path, so two homomorphism files naming the same group file end up on
// one shared object; nothing in the library compares groups by value.

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "cliffpair/cliffordpairs.hpp"
#include "cliffpair/cohomology.hpp"
#include "json.hpp"

namespace cliffpair {

using Json = nlohmann::ordered_json;

inline Json json_parse_text(const std::string& text, const std::string& what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw parse_error("invalid JSON in " + what);
  return j;
}

inline Json json_read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return json_parse_text(buf.str(), path.string());
}

namespace detail {

inline const Json& json_field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key))
    throw parse_error(what + " is missing \"" + key + "\"");
  return j.at(key);
}

inline long json_long(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw parse_error(what + " must be an integer");
  return j.get<long>();
}

}  // namespace detail

inline Json cyclotomic_to_json(const Cyclotomic& z) {
  Json coeffs = Json::array();
  for (const auto& c : z.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"conductor", z.conductor()}, {"coeffs", coeffs}};
}

inline Cyclotomic cyclotomic_from_json(const Json& j) {
  long n = detail::json_long(detail::json_field(j, "conductor", "cyclotomic"), "conductor");
  const Json& cj = detail::json_field(j, "coeffs", "cyclotomic");
  if (!cj.is_array()) throw parse_error("cyclotomic coeffs must be an array");
  std::vector<Rational> coeffs;
  for (const auto& c : cj) {
    if (!c.is_string()) throw parse_error("cyclotomic coefficients must be strings");
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  return Cyclotomic(n, coeffs);
}

// Fields render as the familiar shorthand when there is one, otherwise as
// the full conductor/stabilizer object; parsing accepts either form.
inline std::string field_name(const FieldSpec& f) {
  if (f.conductor() == 1) return "Q";
  if (f.stabilizer() == std::vector<long>{1})
    return "Q(zeta" + std::to_string(f.conductor()) + ")";
  if (f.conductor() == 8 && f.stabilizer() == std::vector<long>{1, 7}) return "Q(sqrt2)";
  if (f.conductor() == 5 && f.stabilizer() == std::vector<long>{1, 4}) return "Q(sqrt5)";
  return "";
}

inline Json field_to_json(const FieldSpec& f) {
  return Json{{"conductor", f.conductor()}, {"stabilizer", f.stabilizer()}};
}

inline Json field_render(const FieldSpec& f) {
  std::string name = field_name(f);
  if (!name.empty()) return name;
  return field_to_json(f);
}

inline FieldSpec field_parse(const Json& j);

inline FieldSpec field_from_text(const std::string& text) {
  if (text == "Q") return FieldSpec::rationals();
  if (text.rfind("Q(zeta", 0) == 0 && text.back() == ')') {
    std::string num = text.substr(6, text.size() - 7);
    if (num.empty() || num.size() > 6 ||
        num.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error("bad field shorthand: " + text);
    return FieldSpec::cyclotomic(std::stol(num));
  }
  if (text == "Q(sqrt2)") return FieldSpec(8, {1, 7});
  if (text == "Q(sqrt5)") return FieldSpec(5, {1, 4});
  if (!text.empty() && text.front() == '{')
    return field_parse(json_parse_text(text, "field argument"));
  throw parse_error("unrecognized field: " + text +
                    " (use Q, Q(zetaN), Q(sqrt2), Q(sqrt5), or a JSON object)");
}

inline FieldSpec field_parse(const Json& j) {
  if (j.is_string()) return field_from_text(j.get<std::string>());
  long n = detail::json_long(detail::json_field(j, "conductor", "field"), "conductor");
  const Json& sj = detail::json_field(j, "stabilizer", "field");
  if (!sj.is_array()) throw parse_error("field stabilizer must be an array");
  std::vector<long> stab;
  for (const auto& k : sj) stab.push_back(detail::json_long(k, "stabilizer entry"));
  return FieldSpec(n, stab);
}

inline Json group_to_json(const Group& g) {
  Json table = Json::array();
  for (const auto& row : g.table()) table.push_back(row);
  return Json{{"type", "cayley"}, {"table", table}};
}

inline GroupPtr group_from_json(const Json& j) {
  std::string type =
      detail::json_field(j, "type", "group").is_string() ? j.at("type").get<std::string>() : "";
  if (type == "cayley") {
    const Json& tj = detail::json_field(j, "table", "group");
    if (!tj.is_array()) throw parse_error("group table must be an array");
    std::vector<std::vector<int>> table;
    for (const auto& row : tj) {
      if (!row.is_array()) throw parse_error("group table rows must be arrays");
      table.push_back(row.get<std::vector<int>>());
    }
    return Group::from_cayley(table);
  }
  if (type == "perm") {
    int degree = static_cast<int>(
        detail::json_long(detail::json_field(j, "degree", "group"), "degree"));
    const Json& gj = detail::json_field(j, "generators", "group");
    if (!gj.is_array()) throw parse_error("group generators must be an array");
    std::vector<std::string> gens;
    for (const auto& s : gj) {
      if (!s.is_string()) throw parse_error("group generators must be strings");
      gens.push_back(s.get<std::string>());
    }
    return Group::from_permutations(degree, gens);
  }
  throw parse_error("group type must be \"cayley\" or \"perm\"");
}

// one group object per canonical file path
struct JsonRegistry {
  std::map<std::string, GroupPtr> groups;

  GroupPtr group_file(const std::filesystem::path& path) {
    std::error_code ec;
    std::filesystem::path canon = std::filesystem::weakly_canonical(path, ec);
    std::string key = ec ? path.string() : canon.string();
    auto it = groups.find(key);
    if (it != groups.end()) return it->second;
    GroupPtr g = group_from_json(json_read_file(path));
    groups.emplace(key, g);
    return g;
  }
};

// homs carry their endpoints as file references resolved next to the
// file the hom itself came from
struct LoadedHom {
  Hom hom;
  std::string src_ref, dst_ref;
};

inline LoadedHom hom_from_json(const Json& j, const std::filesystem::path& base,
                               JsonRegistry& reg) {
  const Json& sj = detail::json_field(j, "src", "hom");
  const Json& dj = detail::json_field(j, "dst", "hom");
  if (!sj.is_string() || !dj.is_string())
    throw parse_error("hom src/dst must be file path strings");
  GroupPtr src = reg.group_file(base / sj.get<std::string>());
  GroupPtr dst = reg.group_file(base / dj.get<std::string>());
  const Json& ij = detail::json_field(j, "images", "hom");
  if (!ij.is_array()) throw parse_error("hom images must be an array");
  std::vector<int> images;
  for (const auto& v : ij) images.push_back(static_cast<int>(detail::json_long(v, "image")));
  return LoadedHom{make_hom(src, dst, images), sj.get<std::string>(), dj.get<std::string>()};
}

inline LoadedHom hom_file(const std::filesystem::path& path, JsonRegistry& reg) {
  return hom_from_json(json_read_file(path), path.parent_path(), reg);
}

inline Json hom_to_json(const LoadedHom& h) {
  return Json{{"src", h.src_ref}, {"dst", h.dst_ref}, {"images", h.hom.images}};
}

inline Json alg_coeffs_json(const AlgElem& a) {
  Json coeffs = Json::object();
  for (int x = 0; x < a.group->order(); ++x)
    if (!a.coeffs[x].is_zero()) coeffs[std::to_string(x)] = cyclotomic_to_json(a.coeffs[x]);
  return coeffs;
}

inline Json alg_to_json(const AlgElem& a, const std::string& group_ref) {
  return Json{{"group", group_ref}, {"coeffs", alg_coeffs_json(a)}};
}

inline AlgElem alg_from_json(const Json& j, GroupPtr g) {
  AlgElem out = alg_zero(g);
  const Json& cj = detail::json_field(j, "coeffs", "algebra element");
  if (!cj.is_object()) throw parse_error("algebra element coeffs must be an object");
  for (const auto& [key, val] : cj.items()) {
    int x = -1;
    if (!key.empty() && key.size() <= 6 &&
        key.find_first_not_of("0123456789") == std::string::npos)
      x = std::stoi(key);
    if (x < 0 || x >= g->order()) throw parse_error("bad element index: " + key);
    out.coeffs[x] = cyclotomic_from_json(val);
  }
  return out;
}

struct LoadedPair {
  CliffordPair pair;
  FieldSpec field;
  LoadedHom kappa;
};

inline Json pair_to_json(const LoadedPair& p) {
  Json values = Json::array();
  for (const auto& v : p.pair.theta.values) values.push_back(cyclotomic_to_json(v));
  return Json{{"kappa", hom_to_json(p.kappa)},
              {"theta", Json{{"values", values}}},
              {"field", field_render(p.field)}};
}

inline LoadedPair pair_from_json(const Json& j, const std::filesystem::path& base,
                                 JsonRegistry& reg) {
  LoadedHom kappa = hom_from_json(detail::json_field(j, "kappa", "pair"), base, reg);
  auto view = subgroup_group(kappa.hom.src, kernel_of(kappa.hom));
  ConjClasses cls = conj_classes(view.group);
  const Json& tj = detail::json_field(detail::json_field(j, "theta", "pair"), "values", "theta");
  if (!tj.is_array() || static_cast<int>(tj.size()) != cls.size())
    throw parse_error("theta must list one value per kernel class (" +
                      std::to_string(cls.size()) + " expected)");
  std::vector<Cyclotomic> values;
  for (const auto& v : tj) values.push_back(cyclotomic_from_json(v));
  FieldSpec field = field_parse(detail::json_field(j, "field", "pair"));
  CliffordPair pair = pair_make(kappa.hom, Character{view.group, std::move(values)});
  return LoadedPair{std::move(pair), std::move(field), std::move(kappa)};
}

// Picks a kernel character by name: "trivial", "faithful" (the first
// faithful row in table order), or "index:<i>" into the table rows.
inline Character theta_select(GroupPtr kernel_view, const std::string& spec) {
  CharTable t = character_table(kernel_view);
  if (spec == "trivial") return trivial_character(kernel_view);
  if (spec == "faithful") {
    for (const auto& row : t.rows)
      if (is_faithful_character(t.cls, row)) return row;
    throw domain_error("the kernel has no faithful irreducible character");
  }
  if (spec.rfind("index:", 0) == 0) {
    const std::string num = spec.substr(6);
    if (num.empty() || num.size() > 4 || num.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error("bad character index: " + spec);
    int i = std::stoi(num);
    if (i < 0 || i >= static_cast<int>(t.rows.size()))
      throw domain_error("character index out of range: " + num + " (table has " +
                         std::to_string(t.rows.size()) + " rows)");
    return t.rows[i];
  }
  throw parse_error("unrecognized theta selector: " + spec +
                    " (use trivial, faithful, or index:<i>)");
}

inline Json center_to_json(const CenterAlgebraInfo& c) {
  Json action = Json::object();
  for (std::size_t i = 0; i < c.stabilizer.size(); ++i)
    action[std::to_string(c.stabilizer[i])] = c.action.map[i].rep;
  return Json{{"field", field_render(c.field)},
              {"r", c.orbit_size},
              {"stabilizer", c.stabilizer},
              {"action", action},
              {"field_spec", field_to_json(c.field)}};
}

inline Json h2_to_json(const H2Result& h) {
  return Json{{"invariant_factors", h.invariant_factors},
              {"modulus", h.coefficient_modulus}};
}

inline H2Result h2_from_json(const Json& j) {
  H2Result out;
  out.coefficient_modulus = detail::json_long(detail::json_field(j, "modulus", "h2"), "modulus");
  const Json& fj = detail::json_field(j, "invariant_factors", "h2");
  if (!fj.is_array()) throw parse_error("invariant_factors must be an array");
  for (const auto& f : fj) out.invariant_factors.push_back(detail::json_long(f, "factor"));
  return out;
}

// An action map as an object keyed by element index; the inverse expects
// one unit per element of the group it is handed.
inline Json action_to_json(const GaloisActionMap& a) {
  Json map = Json::object();
  for (int b = 0; b < a.group->order(); ++b) map[std::to_string(b)] = a.map[b].rep;
  return Json{{"field", field_render(a.field)}, {"map", map}};
}

inline GaloisActionMap action_from_json(const Json& j, GroupPtr g) {
  FieldSpec field = field_parse(detail::json_field(j, "field", "action"));
  const Json& mj = detail::json_field(j, "map", "action");
  std::vector<GaloisElem> map(g->order(), GaloisElem(field, 1));
  std::vector<bool> seen(g->order(), false);
  if (mj.is_array()) {
    if (static_cast<int>(mj.size()) != g->order())
      throw parse_error("action map must list one unit per group element (" +
                        std::to_string(g->order()) + " expected)");
    for (int b = 0; b < g->order(); ++b) {
      map[b] = GaloisElem(field, detail::json_long(mj[b], "action entry"));
      seen[b] = true;
    }
  } else if (mj.is_object()) {
    for (const auto& [key, val] : mj.items()) {
      int b = -1;
      if (!key.empty() && key.size() <= 6 &&
          key.find_first_not_of("0123456789") == std::string::npos)
        b = std::stoi(key);
      if (b < 0 || b >= g->order()) throw parse_error("bad element index: " + key);
      map[b] = GaloisElem(field, detail::json_long(val, "action entry"));
      seen[b] = true;
    }
  } else {
    throw parse_error("action map must be an array or an object");
  }
  for (int b = 0; b < g->order(); ++b)
    if (!seen[b]) throw parse_error("action map is missing element " + std::to_string(b));
  return make_galois_action(g, field, std::move(map));
}

// One-line rendering for text output: "1", "-1/2", "zeta8 - zeta8^3", ...
inline std::string cyclotomic_str(const Cyclotomic& z) {
  if (z.is_zero()) return "0";
  std::string out;
  for (std::size_t j = 0; j < z.coeffs().size(); ++j) {
    const Rational& c = z.coeffs()[j];
    if (c == 0) continue;
    Rational a = c < 0 ? Rational(-c) : c;
    std::string term;
    if (j == 0) {
      term = to_string(a);
    } else {
      term = "zeta" + std::to_string(z.conductor());
      if (j > 1) term += "^" + std::to_string(j);
      if (a != 1) term = to_string(a) + "*" + term;
    }
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

inline Json chartable_to_json(const CharTable& t) {
  Json sizes = Json::array(), reps = Json::array(), degrees = Json::array();
  for (int j = 0; j < t.cls.size(); ++j) {
    sizes.push_back(t.cls.classes[j].size());
    reps.push_back(t.cls.rep(j));
  }
  Json rows = Json::array();
  for (const auto& chi : t.rows) {
    degrees.push_back(to_string(chi.degree()));
    Json row = Json::array();
    for (const auto& v : chi.values) row.push_back(cyclotomic_to_json(v));
    rows.push_back(row);
  }
  return Json{{"group_order", t.group->order()},
              {"class_sizes", sizes},
              {"class_reps", reps},
              {"degrees", degrees},
              {"rows", rows}};
}

}  // namespace cliffpair
