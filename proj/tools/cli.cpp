#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "checks/acceptance.hpp"
#include "handlecalc/report/json.hpp"

namespace handlecalc::cli {

namespace {

using report::Json;

struct Globals {
  std::optional<std::uint64_t> seed;
  bool verbose = false;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

BigInt parse_integer(const std::string& s) { return report::parse_big(Json(s)); }

int parse_int(const std::string& s) {
  const auto v = to_int64(parse_integer(s));
  if (!v || *v < std::numeric_limits<int>::min() || *v > std::numeric_limits<int>::max())
    throw Error("integer out of range: " + s);
  return static_cast<int>(*v);
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split(s, ',')) out.push_back(parse_int(item));
  if (out.empty()) throw Error("empty list");
  return out;
}

/// A class argument: a named vector of the model or a comma list of integers.
IntegerVector parse_class(const IntersectionLattice& lattice, const std::string& arg) {
  if (lattice.has_name(arg)) return lattice.named(arg);
  std::vector<BigInt> entries;
  for (const auto& item : split(arg, ',')) entries.push_back(parse_integer(item));
  if (static_cast<Index>(entries.size()) != lattice.rank())
    throw Error("'" + arg + "' is neither a named class nor a vector of length " +
                std::to_string(lattice.rank()));
  IntegerVector v(lattice.rank());
  for (Index i = 0; i < v.size(); ++i) v(i) = entries[static_cast<std::size_t>(i)];
  return v;
}

sw::ModelWithClasses read_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return report::model_from_json(Json::parse(in));
  } catch (const Json::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

void emit(std::ostream& out, Json body) {
  body["schema"] = report::kSchemaVersion;
  out << body.dump(2) << '\n';
}

/// Result of a diagram move: JSON summary plus the canonical text.
Json diagram_result(const hbd::DiagramDocument& source, const HandleDecomposition& d,
                    const std::string& hbd_path) {
  // Fronts survive only on handles that still exist.
  legendrian::LegendrianAnnotation fronts;
  for (const auto& [k, f] : source.fronts) {
    if (d.has_two_handle(k)) fronts[k] = f;
  }
  const std::string text = hbd::print_hbd(d, fronts);
  if (!hbd_path.empty()) {
    std::ofstream file(hbd_path);
    if (!file) throw Error("cannot write '" + hbd_path + "'");
    file << text;
  }
  Json out;
  out["diagram"] = report::to_json(d);
  out["boundary"] = report::to_json(boundary_first_homology(d));
  out["hbd"] = text;
  return out;
}

Json homology_json(const hbd::DiagramDocument& doc) {
  Json out;
  out["name"] = doc.name;
  out["homology"] = report::to_json(homology(doc.decomposition));
  out["boundary"] = report::to_json(boundary_first_homology(doc.decomposition));
  if (!doc.warnings.empty()) out["warnings"] = doc.warnings;
  return out;
}

Json criteria_json(const std::vector<acceptance::CriterionResult>& results, bool& all) {
  Json list = Json::array();
  all = true;
  for (const auto& r : results) {
    all = all && r.passed();
    Json item = {{"id", r.id},
                 {"name", r.name},
                 {"passed", r.passed()},
                 {"seconds", r.seconds},
                 {"budget_seconds", r.budget_seconds}};
    if (!r.detail.empty()) item["detail"] = r.detail;
    list.push_back(item);
  }
  return list;
}

struct Export {
  std::string file;
  HandleDecomposition diagram;
  legendrian::LegendrianAnnotation fronts;
  Json expect;
};

std::vector<Export> scenario_exports(const std::string& name, int size) {
  std::vector<Export> out;
  if (name == "lens") {
    for (int p = 2; p <= size; ++p) {
      const Json order = {{"boundary_order", p * p}};
      out.push_back({"C" + std::to_string(p) + ".hbd", catalog::build_Cp(p), {}, order});
      out.push_back({"B" + std::to_string(p) + ".hbd", catalog::build_Bp(p), {}, order});
    }
  } else if (name == "cork") {
    for (int n = 1; n <= size; ++n) {
      out.push_back({"W" + std::to_string(n) + ".hbd", catalog::build_Wn(n), {}, {{"homology_trivial", true}}});
    }
  } else if (name == "stein") {
    auto add = [&](const std::string& file, const catalog::AnnotatedDiagram& a) {
      out.push_back({file, a.diagram, a.fronts, {{"stein", true}}});
    };
    add("S.hbd", catalog::stein_S());
    for (int p = 2; p <= size; ++p) add("Dtilde" + std::to_string(p) + ".hbd", catalog::stein_D_tilde_sum({p}));
    for (int n = 2; n <= size; ++n) add("Ntilde" + std::to_string(n) + ".hbd", catalog::stein_N_tilde(n));
  } else if (name == "mn") {
    for (int n = 1; n <= size; ++n) {
      const auto mn = catalog::build_Mn_Nn(n);
      const Json expect = {{"homology_trivial", false}, {"h2_rank", 1}};
      out.push_back({"M" + std::to_string(n) + ".hbd", mn.m, {}, expect});
      out.push_back({"N" + std::to_string(n) + ".hbd", mn.n, {}, expect});
    }
  } else {
    throw Error("no exportable scenario named '" + name + "' (lens, cork, stein, mn)");
  }
  return out;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Handlebody calculus and Seiberg-Witten bookkeeping", "handlecalc"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  bool json_flag = true;
  app.add_flag("--json", json_flag, "Emit JSON (the only output format)");
  app.add_option("--seed", globals.seed, "Seed for randomized checks; seed count for `scenario count`");
  app.add_flag("--verbose", globals.verbose, "Extra detail in reports");

  std::function<int()> action;

  // Diagram subcommands.
  std::vector<std::string> files;
  std::string file;
  std::string hbd_out;
  auto read_doc = [&] { return hbd::read_hbd_file(file); };

  auto* homology_cmd = app.add_subcommand("homology", "Homology of a handlebody and its boundary");
  homology_cmd->add_option("files", files, "Diagram files (.hbd)")->required();
  homology_cmd->callback([&] {
    action = [&] {
      if (files.size() == 1) {
        emit(out, homology_json(hbd::read_hbd_file(files[0])));
        return kOk;
      }
      Json results = Json::array();
      for (const auto& f : files) results.push_back(homology_json(hbd::read_hbd_file(f)));
      emit(out, {{"results", results}});
      return kOk;
    };
  });

  auto* boundary_cmd = app.add_subcommand("boundary", "First homology of the boundary");
  boundary_cmd->add_option("file", file, "Diagram file")->required();
  boundary_cmd->callback([&] {
    action = [&] {
      const auto doc = read_doc();
      emit(out, {{"name", doc.name},
                 {"boundary", report::to_json(boundary_first_homology(doc.decomposition))},
                 {"presentation", report::to_json(boundary_presentation(doc.decomposition))}});
      return kOk;
    };
  });

  auto* stein_cmd = app.add_subcommand("stein", "Check framing = tb - 1 on every 2-handle");
  stein_cmd->add_option("file", file, "Annotated diagram file")->required();
  stein_cmd->callback([&] {
    action = [&] {
      const auto doc = read_doc();
      const auto r = legendrian::stein_check(doc.decomposition, doc.fronts);
      Json body = report::to_json(r);
      body["name"] = doc.name;
      emit(out, body);
      return r.ok ? kOk : kUserError;
    };
  });

  std::string slide_a, slide_b;
  int slide_sign = 1;
  auto* slide_cmd = app.add_subcommand("slide", "Slide one 2-handle over another");
  slide_cmd->add_option("file", file)->required();
  slide_cmd->add_option("--a", slide_a, "Handle that moves")->required();
  slide_cmd->add_option("--b", slide_b, "Handle slid over")->required();
  slide_cmd->add_option("--sign", slide_sign, "+1 or -1")->check(CLI::IsMember({-1, 1}));
  slide_cmd->add_option("--hbd", hbd_out, "Also write the result to this file");
  slide_cmd->callback([&] {
    action = [&] {
      const auto doc = read_doc();
      emit(out, diagram_result(doc, handle_slide(doc.decomposition, slide_a, slide_b, slide_sign), hbd_out));
      return kOk;
    };
  });

  std::vector<std::string> attach;
  std::string new_id;
  auto* blowup_cmd = app.add_subcommand("blowup", "Add a -1-framed unknot");
  blowup_cmd->add_option("file", file)->required();
  blowup_cmd->add_option("--attach", attach, "id=linking, repeatable");
  blowup_cmd->add_option("--id", new_id, "Name of the new handle");
  blowup_cmd->add_option("--hbd", hbd_out);
  blowup_cmd->callback([&] {
    action = [&] {
      const auto doc = read_doc();
      std::vector<std::pair<std::string, BigInt>> attachments;
      for (const auto& a : attach) {
        const auto eq = a.find('=');
        if (eq == std::string::npos) throw Error("--attach expects id=value, got '" + a + "'");
        attachments.emplace_back(a.substr(0, eq), parse_integer(a.substr(eq + 1)));
      }
      emit(out, diagram_result(doc, blow_up(doc.decomposition, attachments, new_id), hbd_out));
      return kOk;
    };
  });

  std::string handle;
  auto* blowdown_cmd = app.add_subcommand("blowdown", "Remove a +-1-framed unknot");
  blowdown_cmd->add_option("file", file)->required();
  blowdown_cmd->add_option("--handle", handle)->required();
  blowdown_cmd->add_option("--hbd", hbd_out);
  blowdown_cmd->callback([&] {
    action = [&] {
      const auto doc = read_doc();
      emit(out, diagram_result(doc, blow_down(doc.decomposition, handle), hbd_out));
      return kOk;
    };
  });

  std::string one, two;
  auto* cork_cmd = app.add_subcommand("corktwist", "Exchange a dotted circle and a 0-framed 2-handle");
  cork_cmd->add_option("file", file)->required();
  cork_cmd->add_option("--one", one, "Dotted circle")->required();
  cork_cmd->add_option("--two", two, "0-framed 2-handle")->required();
  cork_cmd->add_option("--hbd", hbd_out);
  cork_cmd->callback([&] {
    action = [&] {
      const auto doc = read_doc();
      emit(out, diagram_result(doc, dot_zero_swap(doc.decomposition, one, two), hbd_out));
      return kOk;
    };
  });

  std::string chain_arg, prefix = "b";
  int rbd_p = 0;
  auto* rbd_cmd = app.add_subcommand("rbd", "Replace a C_p chain by B_p");
  rbd_cmd->add_option("file", file)->required();
  rbd_cmd->add_option("--chain", chain_arg, "Comma-separated 2-handle ids in chain order")->required();
  rbd_cmd->add_option("--p", rbd_p)->required()->check(CLI::Range(2, 1000));
  rbd_cmd->add_option("--prefix", prefix, "Prefix for the new handles");
  rbd_cmd->add_option("--hbd", hbd_out);
  rbd_cmd->callback([&] {
    action = [&] {
      const auto doc = read_doc();
      emit(out, diagram_result(
                    doc, rational_blowdown_splice(doc.decomposition, split(chain_arg, ','), rbd_p, prefix),
                    hbd_out));
      return kOk;
    };
  });

  // Seiberg-Witten bookkeeping on JSON models.
  auto* sw_cmd = app.add_subcommand("sw", "Basic-class operations on lattice models");
  sw_cmd->require_subcommand(1);
  std::string model_path;
  bool literal = false;
  auto predicate = [&] { return literal ? sw::SimpleTypePredicate::Literal : sw::SimpleTypePredicate::Standard; };

  int blow_n = 1;
  auto* sw_blowup = sw_cmd->add_subcommand("blowup", "Blow up n times");
  sw_blowup->add_option("model", model_path)->required();
  sw_blowup->add_option("--n", blow_n)->check(CLI::Range(0, 24));
  sw_blowup->callback([&] {
    action = [&] {
      const auto m = read_model(model_path);
      emit(out, report::model_to_json(sw::blow_up_basic_classes(m.model, m.classes, blow_n)));
      return kOk;
    };
  });

  std::vector<std::string> chain_classes;
  auto* sw_descend = sw_cmd->add_subcommand("descend", "Rational blowdown along a C_p chain");
  sw_descend->add_option("model", model_path)->required();
  sw_descend->add_option("--chain", chain_classes, "Chain classes u_1..u_{p-1}, in order")->required();
  sw_descend->callback([&] {
    action = [&] {
      const auto m = read_model(model_path);
      std::vector<IntegerVector> chain;
      for (const auto& c : chain_classes) chain.push_back(parse_class(m.model.lattice, c));
      const auto r = sw::rational_blowdown_descend(m.model, m.classes, chain);
      Json body = report::model_to_json(r.result);
      Json lifts = Json::array();
      for (const auto& [down, up] : r.lifts)
        lifts.push_back({{"class", report::to_json(down)}, {"lift", report::to_json(up)}});
      body["lifts"] = lifts;
      if (globals.verbose) body["complement_basis"] = report::to_json(IntegerMatrix(r.complement_basis.transpose()));
      emit(out, body);
      return kOk;
    };
  });

  std::string torus_arg, knot_arg;
  auto* sw_knot = sw_cmd->add_subcommand("knotsurgery", "Knot surgery along a square-zero torus");
  sw_knot->add_option("model", model_path)->required();
  sw_knot->add_option("--torus", torus_arg, "Torus class")->required();
  sw_knot->add_option("--knot", knot_arg, "Torus knot p,q")->required();
  sw_knot->callback([&] {
    action = [&] {
      const auto m = read_model(model_path);
      const auto pq = parse_int_list(knot_arg);
      if (pq.size() != 2) throw Error("--knot expects p,q");
      const auto delta = alexander_polynomial_torus(pq[0], pq[1]);
      sw::ModelWithClasses result{m.model,
                                  sw::knot_surgery_basic_classes(m.model, m.classes,
                                                                 parse_class(m.model.lattice, torus_arg), delta)};
      Json body = report::model_to_json(result);
      body["alexander"] = report::to_json(delta);
      emit(out, body);
      return kOk;
    };
  });

  std::string alpha_arg;
  long genus = 1;
  auto* sw_adj = sw_cmd->add_subcommand("adjunction", "Check the adjunction inequality");
  sw_adj->add_option("model", model_path)->required();
  sw_adj->add_option("--alpha", alpha_arg, "Surface class")->required();
  sw_adj->add_option("--genus", genus)->required();
  sw_adj->add_flag("--literal", literal, "Simple type means K^2 = d(K)");
  sw_adj->callback([&] {
    action = [&] {
      const auto m = read_model(model_path);
      const auto r = sw::adjunction_check(m.model, m.classes, parse_class(m.model.lattice, alpha_arg), genus,
                                          predicate());
      Json violators = Json::array();
      for (const auto& k : r.violators) violators.push_back(report::to_json(k));
      emit(out, {{"ok", r.ok}, {"violators", violators}});
      return r.ok ? kOk : kUserError;
    };
  });

  auto* sw_genus = sw_cmd->add_subcommand("genusbound", "Least genus allowed by adjunction");
  sw_genus->add_option("model", model_path)->required();
  sw_genus->add_option("--alpha", alpha_arg, "Surface class")->required();
  sw_genus->add_flag("--literal", literal, "Simple type means K^2 = d(K)");
  sw_genus->callback([&] {
    action = [&] {
      const auto m = read_model(model_path);
      const auto b =
          sw::min_genus_bound(m.model, m.classes, parse_class(m.model.lattice, alpha_arg), predicate());
      Json body = {{"applicable", b.applicable}, {"max_pairing", report::big(b.max_pairing)}};
      body["genus"] = b.applicable ? report::big(b.genus) : Json(nullptr);
      emit(out, body);
      return kOk;
    };
  });

  // Scenarios.
  auto* scenario_cmd = app.add_subcommand("scenario", "Named end-to-end scenarios");
  scenario_cmd->require_subcommand(1);
  std::string ps_arg = "2";
  int chain_index = 1;
  auto seeds = [&] {
    const std::uint64_t s = globals.seed.value_or(2);
    if (s < 1 || s > 64) throw Error("seed count must be between 1 and 64");
    return static_cast<int>(s);
  };

  auto* sc_count = scenario_cmd->add_subcommand("count", "N(X_i) = 2^(p_i - 1) N(X_0)");
  sc_count->add_option("--p", ps_arg, "Chain lengths, comma-separated");
  sc_count->add_option("--i", chain_index, "Which chain to blow down (1-based)");
  sc_count->callback([&] {
    action = [&] {
      const auto ps = parse_int_list(ps_arg);
      if (chain_index < 1 || chain_index > static_cast<int>(ps.size())) throw Error("--i out of range");
      const auto c = catalog::verify_count_lemma(ps, static_cast<std::size_t>(chain_index - 1), seeds());
      Json body = {{"N0", c.n0}, {"Ni", c.ni}, {"ok", c.ok}};
      if (globals.verbose) body["descended"] = c.descended;
      emit(out, body);
      return c.ok ? kOk : kUserError;
    };
  });

  int p_single = 2;
  auto* sc_restr = scenario_cmd->add_subcommand("restriction", "Restrictions of basic classes are distinct");
  sc_restr->add_option("--p", p_single)->check(CLI::Range(2, 30));
  sc_restr->callback([&] {
    action = [&] {
      const auto r = catalog::verify_restriction_lemma(p_single, seeds());
      emit(out, {{"alpha_orthogonal", r.alpha_orthogonal},
                 {"alpha_pairing", r.alpha_pairing},
                 {"restrictions_distinct", r.restrictions_distinct},
                 {"alpha_distinguishes_sign", r.alpha_distinguishes_sign},
                 {"ok", r.ok()}});
      return r.ok() ? kOk : kUserError;
    };
  });

  int n_arg = 2;
  long k_arg = 1;
  auto* sc_genus = scenario_cmd->add_subcommand("genus", "Genus obstruction for k alpha");
  sc_genus->add_option("--n", n_arg)->check(CLI::Range(2, 50));
  sc_genus->add_option("--k", k_arg);
  sc_genus->callback([&] {
    action = [&] {
      const auto g = catalog::genus_obstruction_Nn(n_arg, k_arg);
      emit(out, {{"genus", report::big(g.bound.genus)},
                 {"max_pairing", report::big(g.bound.max_pairing)},
                 {"expected_pairing", report::big(g.expected_pairing)},
                 {"forced_k", g.forced_k},
                 {"ok", g.ok}});
      return g.ok ? kOk : kUserError;
    };
  });

  std::string knots_arg = "2,3;2,5;2,7;3,4;3,5";
  auto* sc_knot = scenario_cmd->add_subcommand("knotted", "Knot surgery with several torus knots");
  sc_knot->add_option("--knots", knots_arg, "p,q pairs separated by ';'");
  sc_knot->callback([&] {
    action = [&] {
      std::vector<catalog::TorusKnot> knots;
      for (const auto& item : split(knots_arg, ';')) {
        const auto pq = parse_int_list(item);
        if (pq.size() != 2) throw Error("knot '" + item + "' is not p,q");
        knots.push_back({pq[0], pq[1]});
      }
      const auto r = catalog::knotted_cork_scenario(knots);
      Json outcomes = Json::array();
      for (const auto& o : r.outcomes) {
        Json item = {{"knot", {o.knot.p, o.knot.q}},
                     {"alexander", report::to_json(o.delta)},
                     {"class_count", o.classes.size()}};
        if (globals.verbose) item["classes"] = report::to_json(o.classes);
        outcomes.push_back(item);
      }
      emit(out, {{"outcomes", outcomes},
                 {"pairwise_distinct", r.pairwise_distinct},
                 {"all_nonzero", r.all_nonzero},
                 {"distinguished_from_x", r.distinguished_from_x},
                 {"ok", r.ok()}});
      return r.ok() ? kOk : kUserError;
    };
  });

  int size = 0;
  auto report_command = [&](const std::string& name, const std::string& help, int default_size,
                            std::function<catalog::ScenarioReport(int)> build) {
    auto* sub = scenario_cmd->add_subcommand(name, help);
    sub->add_option("--size", size, "Largest parameter (default " + std::to_string(default_size) + ")")
        ->check(CLI::Range(1, 30));
    sub->callback([&, sub, build, default_size] {
      if (sub->count("--size") == 0) size = default_size;
      action = [&, build] {
        const auto r = build(size);
        emit(out, report::to_json(r));
        return r.ok() ? kOk : kUserError;
      };
    });
  };
  report_command("lens", "Boundary orders of C_p and B_p", 10, catalog::lens_scenario);
  report_command("cork", "Homology of W_n and their sums", 5, [](int n) { return catalog::cork_scenario(n, 5); });
  report_command("mn", "M_n and N_n", 3, catalog::mn_scenario);
  report_command("stein", "Stein framing checks on the catalog", 8, catalog::stein_scenario);

  std::string export_name, export_dir = ".";
  int export_size = 4;
  auto* sc_export = scenario_cmd->add_subcommand("export", "Write scenario diagrams and a manifest");
  sc_export->add_option("name", export_name, "lens, cork, stein or mn")->required();
  sc_export->add_option("--dir", export_dir, "Output directory");
  sc_export->add_option("--size", export_size)->check(CLI::Range(1, 30));
  sc_export->callback([&] {
    action = [&] {
      std::filesystem::create_directories(export_dir);
      Json manifest_files = Json::array();
      for (const auto& e : scenario_exports(export_name, export_size)) {
        const auto path = std::filesystem::path(export_dir) / e.file;
        std::ofstream f(path);
        if (!f) throw Error("cannot write '" + path.string() + "'");
        f << hbd::print_hbd(e.diagram, e.fronts);
        manifest_files.push_back({{"file", e.file}, {"expect", e.expect}});
      }
      Json manifest = {{"scenario", export_name}, {"files", manifest_files}, {"schema", report::kSchemaVersion}};
      const auto path = std::filesystem::path(export_dir) / (export_name + ".json");
      std::ofstream(path) << manifest.dump(2) << '\n';
      emit(out, {{"manifest", path.string()}, {"count", manifest_files.size()}});
      return kOk;
    };
  });

  auto* check_cmd = app.add_subcommand("check", "Run the acceptance suite");
  check_cmd->callback([&] {
    action = [&] {
      const auto results = acceptance::run_acceptance(globals.seed.value_or(1));
      if (globals.verbose) {
        for (const auto& r : results) err << acceptance::format_line(r) << '\n';
      }
      bool all = false;
      Json criteria = criteria_json(results, all);
      emit(out, {{"criteria", criteria}, {"ok", all}});
      return all ? kOk : kUserError;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUserError;
  }

  try {
    return action ? action() : kUserError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUserError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace handlecalc::cli
