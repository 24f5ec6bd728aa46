// Command line front end.  Subcommands map onto the library one to one, and
// every structured result goes out through the json layer, so a printed
// report re-parses to the value it came from.  Exit codes: 0 on success,
// 1 when a precondition fails (domain errors), 2 on malformed input.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cliffpair/verify.hpp"

namespace cp = cliffpair;
using cp::Json;

namespace {

std::filesystem::path corpus_dir() {
  if (const char* env = std::getenv("CLIFFPAIR_CORPUS")) return env;
  return "corpus";
}

std::string field_label(const cp::FieldSpec& f) {
  std::string name = cp::field_name(f);
  return name.empty() ? cp::field_to_json(f).dump() : name;
}

// ---------------------------------------------------------------------------
// loading pairs from flags

struct PairArgs {
  std::string kappa;
  std::string theta = "faithful";
  std::string field = "Q";
};

void add_pair_options(CLI::App* cmd, PairArgs& a) {
  cmd->add_option("--kappa", a.kappa, "homomorphism file (kappa: Ghat onto G)")->required();
  cmd->add_option("--theta", a.theta,
                  "kernel character: trivial, faithful, index:<i>, or {\"values\": [...]}");
  cmd->add_option("--field", a.field,
                  "base field: Q, Q(zetaN), Q(sqrt2), Q(sqrt5), or a JSON object");
}

cp::Character theta_from_arg(cp::GroupPtr kernel_view, const std::string& spec) {
  if (!spec.empty() && spec.front() == '{') {
    Json j = cp::json_parse_text(spec, "theta argument");
    const Json& tj = cp::detail::json_field(j, "values", "theta");
    cp::ConjClasses cls = cp::conj_classes(kernel_view);
    if (!tj.is_array() || static_cast<int>(tj.size()) != cls.size())
      throw cp::parse_error("theta must list one value per kernel class (" +
                            std::to_string(cls.size()) + " expected)");
    std::vector<cp::Cyclotomic> values;
    for (const auto& v : tj) values.push_back(cp::cyclotomic_from_json(v));
    return cp::Character{kernel_view, std::move(values)};
  }
  return cp::theta_select(kernel_view, spec);
}

cp::LoadedPair load_pair(const PairArgs& a, cp::JsonRegistry& reg) {
  cp::LoadedHom h = cp::hom_file(a.kappa, reg);
  auto view = cp::subgroup_group(h.hom.src, cp::kernel_of(h.hom));
  cp::Character theta = theta_from_arg(view.group, a.theta);
  cp::FieldSpec field = cp::field_from_text(a.field);
  return cp::LoadedPair{cp::pair_make(h.hom, theta), std::move(field), std::move(h)};
}

// ---------------------------------------------------------------------------
// text renderings (the json forms live in the library)

std::string center_text(const cp::CenterAlgebraInfo& c) {
  std::ostringstream out;
  out << "center field " << field_label(c.field) << ", r = " << c.orbit_size << "\n";
  out << "stabilizer:";
  for (int b : c.stabilizer) out << " " << b;
  out << "\naction:";
  for (std::size_t i = 0; i < c.stabilizer.size(); ++i)
    out << " " << c.stabilizer[i] << "->" << c.action.map[i].rep;
  out << "\n";
  return out.str();
}

Json pair_summary_json(const cp::CliffordPair& p, const cp::FieldSpec& F) {
  return Json{{"ghat_order", p.ghat()->order()},
              {"kernel_order", p.n.group->order()},
              {"theta_degree", cp::to_string(p.theta.degree())},
              {"center", cp::center_to_json(cp::center_algebra(p, F))}};
}

std::string pair_summary_text(const cp::CliffordPair& p, const cp::FieldSpec& F) {
  std::ostringstream out;
  out << "ghat order " << p.ghat()->order() << ", kernel order " << p.n.group->order()
      << ", theta degree " << cp::to_string(p.theta.degree()) << "\n"
      << center_text(cp::center_algebra(p, F));
  return out.str();
}

std::string chartab_text(const cp::CharTable& t) {
  std::ostringstream out;
  out << "group order " << t.group->order() << ", " << t.cls.size() << " classes\n";
  out << "class sizes:";
  for (int j = 0; j < t.cls.size(); ++j) out << " " << t.cls.classes[j].size();
  out << "\nclass reps:";
  for (int j = 0; j < t.cls.size(); ++j) out << " " << t.cls.rep(j);
  out << "\ndegrees:";
  for (const auto& chi : t.rows) out << " " << cp::to_string(chi.degree());
  out << "\n";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    out << "chi" << i << ":";
    for (std::size_t j = 0; j < t.rows[i].values.size(); ++j)
      out << (j ? ", " : " ") << cp::cyclotomic_str(t.rows[i].values[j]);
    out << "\n";
  }
  return out.str();
}

std::string h2_text(const cp::H2Result& h, bool with_modulus) {
  std::ostringstream out;
  if (h.invariant_factors.empty()) {
    out << "trivial";
  } else {
    for (std::size_t i = 0; i < h.invariant_factors.size(); ++i)
      out << (i ? " x " : "") << "Z/" << h.invariant_factors[i];
  }
  if (with_modulus) out << " (coefficients Z/" << h.coefficient_modulus << ")";
  out << "\n";
  return out.str();
}

void emit(const std::string& format, const Json& j, const std::string& text) {
  if (format == "json")
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"characters, central idempotents, Clifford pairs, and low cohomology\n"
               "for small finite groups, over cyclotomic base fields"};
  app.require_subcommand(1);

  std::string format = "json";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };
  add_format(&app);

  int command_rc = 0;
  cp::JsonRegistry reg;

  // ---- chartab ------------------------------------------------------------
  auto* c_chartab = app.add_subcommand("chartab", "character table of a group file");
  std::string chartab_path;
  c_chartab->add_option("group", chartab_path, "group json file")->required();
  add_format(c_chartab);
  c_chartab->callback([&] {
    cp::CharTable t = cp::character_table(reg.group_file(chartab_path));
    emit(format, cp::chartable_to_json(t), chartab_text(t));
  });

  // ---- idempotents --------------------------------------------------------
  auto* c_idem = app.add_subcommand(
      "idempotents", "primitive central idempotents of the group algebra");
  std::string idem_path, idem_field;
  c_idem->add_option("group", idem_path, "group json file")->required();
  c_idem->add_option("--field", idem_field,
                     "sum the idempotents over Galois orbits for this base field");
  add_format(c_idem);
  c_idem->callback([&] {
    cp::GroupPtr g = reg.group_file(idem_path);
    cp::CharTable t = cp::character_table(g);
    Json list = Json::array();
    std::ostringstream text;
    std::vector<cp::AlgElem> seen;
    if (idem_field.empty()) {
      for (std::size_t i = 0; i < t.rows.size(); ++i) {
        cp::AlgElem e = cp::idempotent_e(t.rows[i]);
        list.push_back(Json{{"character", i}, {"coeffs", cp::alg_coeffs_json(e)}});
        text << "e" << i << " (chi " << i << "):";
        for (int x = 0; x < g->order(); ++x)
          if (!e.coeffs[x].is_zero()) text << " [" << x << "] " << cp::cyclotomic_str(e.coeffs[x]);
        text << "\n";
      }
    } else {
      cp::FieldSpec F = cp::field_from_text(idem_field);
      for (std::size_t i = 0; i < t.rows.size(); ++i) {
        cp::AlgElem e = cp::idempotent_eF(t.rows[i], F);
        auto it = std::find(seen.begin(), seen.end(), e);
        if (it != seen.end()) {
          std::size_t k = static_cast<std::size_t>(it - seen.begin());
          list[k]["characters"].push_back(i);
          continue;
        }
        seen.push_back(e);
        list.push_back(Json{{"characters", Json::array({i})}, {"coeffs", cp::alg_coeffs_json(e)}});
      }
      for (std::size_t k = 0; k < seen.size(); ++k) {
        text << "e" << k << " (chi";
        for (const auto& i : list[k]["characters"]) text << " " << i.get<std::size_t>();
        text << "):";
        for (int x = 0; x < g->order(); ++x)
          if (!seen[k].coeffs[x].is_zero())
            text << " [" << x << "] " << cp::cyclotomic_str(seen[k].coeffs[x]);
        text << "\n";
      }
    }
    std::ostringstream head;
    head << "group order " << g->order() << ", " << list.size() << " idempotent"
         << (list.size() == 1 ? "" : "s") << "\n";
    emit(format, Json{{"group_order", g->order()}, {"idempotents", list}},
         head.str() + text.str());
  });

  // ---- pair ---------------------------------------------------------------
  auto* c_pair = app.add_subcommand("pair", "operations on Clifford pairs");
  c_pair->require_subcommand(1);

  auto* c_check = c_pair->add_subcommand("check", "report semi-invariance over the base field");
  PairArgs a_check;
  add_pair_options(c_check, a_check);
  add_format(c_check);
  c_check->callback([&] {
    cp::LoadedPair lp = load_pair(a_check, reg);
    cp::FieldSpec e = cp::field_of_values(lp.pair.theta.values, lp.field);
    auto alpha = cp::semi_invariance(lp.pair, lp.field);
    Json out{{"semi_invariant", alpha.has_value()}, {"field_of_values", cp::field_render(e)}};
    std::ostringstream text;
    text << "semi-invariant: " << (alpha ? "yes" : "no") << "\n"
         << "field of values: " << field_label(e) << "\n";
    if (alpha) {
      out["action"] = cp::action_to_json(*alpha);
      text << "action:";
      for (int b = 0; b < alpha->group->order(); ++b)
        text << " " << b << "->" << alpha->map[b].rep;
      text << "\n";
    }
    emit(format, out, text.str());
  });

  auto* c_center = c_pair->add_subcommand(
      "center", "center of the algebra generated by the orbit of e_theta_F");
  PairArgs a_center;
  add_pair_options(c_center, a_center);
  add_format(c_center);
  c_center->callback([&] {
    cp::LoadedPair lp = load_pair(a_center, reg);
    cp::CenterAlgebraInfo c = cp::center_algebra(lp.pair, lp.field);
    emit(format, cp::center_to_json(c), center_text(c));
  });

  auto* c_conj = c_pair->add_subcommand("conj", "complex conjugate pair");
  PairArgs a_conj;
  add_pair_options(c_conj, a_conj);
  add_format(c_conj);
  c_conj->callback([&] {
    cp::LoadedPair lp = load_pair(a_conj, reg);
    cp::LoadedPair out{cp::conjugate_pair(lp.pair), lp.field, lp.kappa};
    std::ostringstream text;
    text << "kappa: " << lp.kappa.src_ref << " -> " << lp.kappa.dst_ref << ", images";
    for (int x : lp.kappa.hom.images) text << " " << x;
    text << "\ntheta:";
    for (std::size_t j = 0; j < out.pair.theta.values.size(); ++j)
      text << (j ? ", " : " ") << cp::cyclotomic_str(out.pair.theta.values[j]);
    text << "\nfield: " << field_label(lp.field) << "\n";
    emit(format, cp::pair_to_json(out), text.str());
  });

  auto* c_prod = c_pair->add_subcommand(
      "product", "fiber product of two semi-invariant pairs over the shared target");
  PairArgs a_prod;
  std::string prod_kappa2, prod_theta2 = "faithful";
  add_pair_options(c_prod, a_prod);
  c_prod->add_option("--kappa2", prod_kappa2, "homomorphism file for the second pair")
      ->required();
  c_prod->add_option("--theta2", prod_theta2, "kernel character for the second pair");
  add_format(c_prod);
  c_prod->callback([&] {
    cp::LoadedPair lp = load_pair(a_prod, reg);
    cp::LoadedPair lp2 = load_pair(PairArgs{prod_kappa2, prod_theta2, a_prod.field}, reg);
    cp::CliffordPair q = cp::product_pair(lp.pair, lp2.pair, lp.field);
    emit(format, pair_summary_json(q, lp.field), pair_summary_text(q, lp.field));
  });

  auto* c_ident = c_pair->add_subcommand(
      "identity", "pair with trivial class: cyclic kernel, prescribed field action");
  std::string ident_group, ident_action, ident_field = "Q";
  long ident_root = 0;
  c_ident->add_option("--group", ident_group, "group json file for G")->required();
  c_ident->add_option("--action", ident_action,
                      "action json file: {\"field\": ..., \"map\": [unit per element]}")
      ->required();
  c_ident->add_option("--root", ident_root, "order of the root of unity generating the kernel")
      ->required()
      ->check(CLI::PositiveNumber);
  c_ident->add_option("--field", ident_field, "base field");
  add_format(c_ident);
  c_ident->callback([&] {
    cp::GroupPtr g = reg.group_file(ident_group);
    cp::GaloisActionMap beta = cp::action_from_json(cp::json_read_file(ident_action), g);
    cp::FieldSpec F = cp::field_from_text(ident_field);
    cp::CliffordPair p = cp::identity_pair(g, beta, ident_root, F);
    emit(format, pair_summary_json(p, F), pair_summary_text(p, F));
  });

  auto* c_reduce = c_pair->add_subcommand(
      "reduce-cyclic", "quotient out ker theta; kernel becomes cyclic, theta faithful");
  PairArgs a_reduce;
  add_pair_options(c_reduce, a_reduce);
  add_format(c_reduce);
  c_reduce->callback([&] {
    cp::LoadedPair lp = load_pair(a_reduce, reg);
    cp::CliffordPair q = cp::cyclic_reduction(lp.pair, lp.field);
    Json out = pair_summary_json(q, lp.field);
    out["kernel_cyclic"] = true;
    emit(format, out, pair_summary_text(q, lp.field) + "kernel is cyclic, theta faithful\n");
  });

  auto* c_restrict = c_pair->add_subcommand(
      "restrict", "pull the pair back along a subgroup of the target");
  PairArgs a_restrict;
  std::string restrict_incl;
  add_pair_options(c_restrict, a_restrict);
  c_restrict->add_option("--incl", restrict_incl, "homomorphism file H -> G into the target")
      ->required();
  add_format(c_restrict);
  c_restrict->callback([&] {
    cp::LoadedPair lp = load_pair(a_restrict, reg);
    cp::LoadedHom incl = cp::hom_file(restrict_incl, reg);
    cp::RestrictedPair rp = cp::restrict_pair(lp.pair, incl.hom, lp.field);
    Json out{{"g_orbit_size", rp.info.g_orbit_size},
             {"h_orbit_sizes", rp.info.h_orbit_sizes},
             {"base_orbit", rp.info.base_orbit},
             {"pair", pair_summary_json(rp.pair, lp.field)}};
    std::ostringstream text;
    text << "orbit of e_theta_F under G: " << rp.info.g_orbit_size << ", parts under H:";
    for (long s : rp.info.h_orbit_sizes) text << " " << s;
    text << " (base part " << rp.info.base_orbit << ")\n"
         << pair_summary_text(rp.pair, lp.field);
    emit(format, out, text.str());
  });

  auto* c_induce = c_pair->add_subcommand(
      "induce", "push the pair forward along an inclusion of the target");
  PairArgs a_induce;
  std::string induce_incl;
  add_pair_options(c_induce, a_induce);
  c_induce->add_option("--incl", induce_incl, "homomorphism file G -> Gamma, one-to-one")
      ->required();
  add_format(c_induce);
  c_induce->callback([&] {
    cp::LoadedPair lp = load_pair(a_induce, reg);
    cp::LoadedHom incl = cp::hom_file(induce_incl, reg);
    cp::CliffordPair q = cp::induce_pair(lp.pair, incl.hom, lp.field);
    emit(format, pair_summary_json(q, lp.field), pair_summary_text(q, lp.field));
  });

  auto* c_cor = c_pair->add_subcommand(
      "corestrict", "corestriction along an inclusion, for a prescribed extended action");
  PairArgs a_cor;
  std::string cor_incl, cor_action;
  add_pair_options(c_cor, a_cor);
  c_cor->add_option("--incl", cor_incl, "homomorphism file G -> Gamma, one-to-one")->required();
  c_cor->add_option("--action", cor_action,
                    "action json file on Gamma extending the pair's own")
      ->required();
  add_format(c_cor);
  c_cor->callback([&] {
    cp::LoadedPair lp = load_pair(a_cor, reg);
    cp::LoadedHom incl = cp::hom_file(cor_incl, reg);
    cp::GaloisActionMap beta =
        cp::action_from_json(cp::json_read_file(cor_action), incl.hom.dst);
    cp::CliffordPair q = cp::corestrict_pair(lp.pair, incl.hom, beta, lp.field);
    emit(format, pair_summary_json(q, lp.field), pair_summary_text(q, lp.field));
  });

  auto* c_fc = c_pair->add_subcommand(
      "fieldcheck", "compare the pair over the base field and a larger field");
  PairArgs a_fc;
  std::string fc_field2;
  add_pair_options(c_fc, a_fc);
  c_fc->add_option("--field2", fc_field2, "comparison field containing the base field")
      ->required();
  add_format(c_fc);
  c_fc->callback([&] {
    cp::LoadedPair lp = load_pair(a_fc, reg);
    cp::FieldSpec K = cp::field_from_text(fc_field2);
    cp::BaseFieldReport r = cp::base_field_check(lp.pair, lp.field, K);
    Json out{{"fixed_field", cp::field_render(r.fixed_field)},
             {"k_in_fixed", r.k_in_fixed},
             {"theta_field_match", r.theta_field_match},
             {"actions_agree", r.actions_agree},
             {"compatible", r.compatible}};
    std::ostringstream text;
    text << "fixed field of the action: " << field_label(r.fixed_field) << "\n"
         << "comparison field inside it: " << (r.k_in_fixed ? "yes" : "no") << "\n"
         << "field of values unchanged: " << (r.theta_field_match ? "yes" : "no") << "\n"
         << "actions agree: " << (r.actions_agree ? "yes" : "no") << "\n"
         << "compatible: " << (r.compatible ? "yes" : "no") << "\n";
    emit(format, out, text.str());
  });

  // ---- h2 / multiplier ----------------------------------------------------
  auto* c_h2 = app.add_subcommand("h2", "second cohomology with Z/m coefficients");
  std::string h2_path;
  long h2_mod = 0;
  c_h2->add_option("group", h2_path, "group json file")->required();
  c_h2->add_option("--mod", h2_mod, "coefficient modulus m")
      ->required()
      ->check(CLI::PositiveNumber);
  add_format(c_h2);
  c_h2->callback([&] {
    cp::H2Result h = cp::h2_cyclic(reg.group_file(h2_path), h2_mod);
    emit(format, cp::h2_to_json(h), "H2: " + h2_text(h, true));
  });

  auto* c_mult = app.add_subcommand("multiplier", "Schur multiplier of a group file");
  std::string mult_path;
  c_mult->add_option("group", mult_path, "group json file")->required();
  add_format(c_mult);
  c_mult->callback([&] {
    cp::H2Result h = cp::schur_multiplier(reg.group_file(mult_path));
    emit(format, cp::h2_to_json(h), "Schur multiplier: " + h2_text(h, false));
  });

  // ---- verify -------------------------------------------------------------
  auto* c_verify = app.add_subcommand("verify", "replay a suite of library guarantees");
  std::string verify_suite_arg;
  std::vector<std::string> suite_names = cp::verify_suite_names();
  suite_names.push_back("all");
  c_verify->add_option("suite", verify_suite_arg, "suite name, or all")
      ->required()
      ->check(CLI::IsMember(suite_names));
  add_format(c_verify);
  c_verify->callback([&] {
    std::vector<cp::SuiteReport> reports = cp::verify_run(verify_suite_arg, corpus_dir());
    bool ok = true;
    Json arr = Json::array();
    for (const auto& r : reports) {
      ok = ok && r.ok();
      Json checks = Json::array();
      for (const auto& c : r.checks) checks.push_back(Json{{"label", c.label}, {"ok", c.ok}});
      arr.push_back(Json{{"suite", r.suite}, {"ok", r.ok()}, {"checks", checks}});
    }
    emit(format, arr, cp::reports_text(reports));
    if (!ok) command_rc = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const cp::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cp::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const cp::error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return command_rc;
}
