#include "qder/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include "qder/derivations.hpp"
#include "qder/json_io.hpp"
#include "qder/lietransform.hpp"
#include "qder/qalgebra.hpp"
#include "qder/reference.hpp"

namespace qder {

namespace {

using nlohmann::json;

// Carries an exit code and a machine-readable error object out of a command.
struct CommandError {
  int code;
  json error;
};

CommandError usage_error(const std::string& message) {
  return {kExitUsage, json{{"kind", "usage"}, {"message", message}}};
}

struct Options {
  std::string quandle;
  std::string file;
  std::string field = "Q";
  std::string format = "json";
  bool verbose = false;
};

struct LoadedQuandle {
  std::string source;
  std::optional<Quandle> quandle;
  std::optional<AxiomViolation> violation;
};

json violation_json(const AxiomViolation& v) {
  return json{{"axiom", v.axiom_name()}, {"witness", v.witness}, {"message", v.describe()}};
}

LoadedQuandle load(const Options& o) {
  if (o.quandle.empty() == o.file.empty()) throw usage_error("give exactly one of --quandle or --file");
  LoadedQuandle out;
  if (!o.quandle.empty()) {
    out.source = o.quandle;
    try {
      out.quandle = quandle_from_source(o.quandle);
    } catch (const GroupError& e) {
      throw CommandError{kExitFailure, json{{"kind", "not_a_group"}, {"message", e.what()}}};
    } catch (const QuandleError& e) {
      out.violation = e.violation();
    } catch (const std::invalid_argument& e) {
      throw usage_error(e.what());
    }
    return out;
  }
  out.source = o.file;
  std::ifstream in(o.file);
  if (!in) throw usage_error("cannot open " + o.file);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw usage_error("cannot parse " + o.file + ": " + e.what());
  }
  CayleyTable table;
  try {
    table = table_from_json(j);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
  if (auto v = check_axioms(table)) out.violation = *v;
  else out.quandle = Quandle::from_table(table);
  return out;
}

Quandle require_valid(const LoadedQuandle& l) {
  if (l.violation)
    throw CommandError{kExitFailure, json{{"kind", "invalid_quandle"}, {"violation", violation_json(*l.violation)}}};
  return *l.quandle;
}

FieldSpec parse_field(const std::string& s) {
  try {
    return FieldSpec::parse(s);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
}

std::string matrix_text(const Matrix& m, const std::string& indent) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << indent;
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c).to_string();
    os << '\n';
  }
  return os.str();
}

struct Output {
  json data;
  std::string text;
  int code = kExitOk;
};

Output cmd_validate(const Options& o) {
  auto l = load(o);
  if (l.violation) {
    std::string text = "invalid: " + l.violation->describe() + "\n";
    return {json{{"source", l.source}, {"valid", false}, {"violation", violation_json(*l.violation)}}, text,
            kExitFailure};
  }
  return {json{{"source", l.source}, {"valid", true}, {"n", l.quandle->order()}},
          "valid quandle of order " + std::to_string(l.quandle->order()) + "\n"};
}

Output cmd_props(const Options& o) {
  auto q = require_valid(load(o));
  auto p = props(q);
  json j{{"n", q.order()},
         {"involutive", p.involutive},
         {"latin", p.latin},
         {"medial", p.medial},
         {"connected", p.connected},
         {"orbits", p.orbits}};
  std::ostringstream t;
  t << "order " << q.order() << "\ninvolutive " << p.involutive << "\nlatin " << p.latin << "\nmedial "
    << p.medial << "\nconnected " << p.connected << "\norbits";
  for (const auto& orb : p.orbits) {
    t << " {";
    for (std::size_t i = 0; i < orb.size(); ++i) t << (i ? "," : "") << orb[i];
    t << "}";
  }
  t << '\n';
  return {j, t.str()};
}

Output cmd_derivations(const Options& o) {
  auto l = load(o);
  auto q = require_valid(l);
  auto f = parse_field(o.field);
  auto d = derivation_space(q, f);
  std::ostringstream t;
  t << "dim " << d.dim() << " over " << f.name() << '\n';
  for (std::size_t i = 0; i < d.basis.size(); ++i) t << "D" << i << ":\n" << matrix_text(d.basis[i].matrix(), "  ");
  return {derivations_to_json(d, l.source), t.str()};
}

Output cmd_symmetries(const Options& o) {
  auto q = require_valid(load(o));
  const auto n = q.order();
  if (q != dihedral(n))
    throw CommandError{kExitFailure, json{{"kind", "precondition"}, {"message", "symmetries needs a dihedral quandle"}}};
  auto f = parse_field(o.field);
  auto d = derivation_space(q, f);
  auto pred = predicted_dim_dihedral(n);

  json rel = json::array();
  std::ostringstream t;
  t << "dihedral(" << n << ") over " << f.name() << ": solver dim " << d.dim() << ", predicted ";
  if (pred.value) t << *pred.value << " (" << pred.note << ")";
  else t << "none (" << pred.note << ")";
  t << '\n';
  bool all_hold = true;
  for (std::size_t i = 0; i < d.basis.size(); ++i) {
    auto rep = dihedral_symmetry_report(d.basis[i], n);
    all_hold = all_hold && rep.all_hold();
    json per = json::array();
    t << "D" << i << ":";
    for (const auto& r : rep.relations) {
      json e{{"relation", r.name}, {"status", to_string(r.status)}};
      if (r.witness) e["witness"] = *r.witness;
      per.push_back(std::move(e));
      t << ' ' << r.name << '=' << to_string(r.status);
    }
    json entry{{"index", i}, {"relations", std::move(per)}};
    if (n % 2 == 0) {
      auto b = block_decomposition(d.basis[i], n);
      if (b.pp_form) entry["pp_form"] = *b.pp_form;
      if (b.uv_form) entry["uv_form"] = *b.uv_form;
      if (b.row_shift_form) entry["row_shift_form"] = *b.row_shift_form;
    }
    rel.push_back(std::move(entry));
    t << '\n';
  }
  json j{{"n", n},
         {"field", f.name()},
         {"dim", d.dim()},
         {"predicted_dim", pred.value ? json(*pred.value) : json(nullptr)},
         {"prediction_note", pred.note},
         {"prediction_from_formula", pred.from_formula},
         {"basis", std::move(rel)},
         {"all_hold", all_hold}};
  return {j, t.str()};
}

Output cmd_lietransform(const Options& o) {
  auto q = require_valid(load(o));
  auto f = parse_field(o.field);
  auto lie = lie_transformation_algebra(q, f);
  auto inner = inner_derivations(q, f);
  auto j = lietransform_to_json(lie, inner);
  std::ostringstream t;
  t << "dim " << lie.dim() << "\ninner_dim " << inner.inner_dim() << "\nouter_dim " << inner.outer_dim() << '\n';
  if (o.verbose) {
    json log = json::array();
    for (const auto& e : lie.log) {
      log.push_back(json{{"origin", e.origin}, {"dim_after", e.dim_after}});
      t << "  " << e.origin << " -> " << e.dim_after << '\n';
    }
    j["generator_log"] = std::move(log);
  }
  return {j, t.str()};
}

Output cmd_inner(const Options& o) {
  auto q = require_valid(load(o));
  auto f = parse_field(o.field);
  auto inner = inner_derivations(q, f);
  json basis = json::array();
  std::ostringstream t;
  t << "der_dim " << inner.der_dim << "\ninner_dim " << inner.inner_dim() << "\nouter_dim " << inner.outer_dim()
    << '\n';
  for (const auto& v : inner.inner.vectors()) {
    auto m = unflatten_col_major(f, q.order(), v);
    basis.push_back(to_json(m.matrix()));
    t << "inner:\n" << matrix_text(m.matrix(), "  ");
  }
  return {json{{"der_dim", inner.der_dim},
               {"lie_dim", inner.lie_dim},
               {"inner_dim", inner.inner_dim()},
               {"outer_dim", inner.outer_dim()},
               {"basis", std::move(basis)}},
          t.str()};
}

json subspace_json(const SubspaceBasis& s) {
  json rows = json::array();
  for (const auto& v : s.vectors()) {
    json row = json::array();
    for (const auto& x : v) row.push_back(to_json(x));
    rows.push_back(std::move(row));
  }
  return json{{"dim", s.dim()}, {"basis", std::move(rows)}};
}

Output cmd_ideals(const Options& o) {
  auto q = require_valid(load(o));
  auto f = parse_field(o.field);
  auto ix = augmentation_ideal(q, f);
  auto jx = jx_ideal(q, f);
  bool inside = is_subspace_of(jx, ix);
  std::ostringstream t;
  t << "I_X dim " << ix.dim() << "\nJ_X dim " << jx.dim() << "\nJ_X inside I_X " << inside << '\n';
  return {json{{"augmentation_ideal", subspace_json(ix)}, {"jx", subspace_json(jx)}, {"jx_in_ix", inside}},
          t.str(), inside ? kExitOk : kExitFailure};
}

Output cmd_tables(const Options& o) {
  const auto& entries = reference_entries();
  std::vector<std::future<ReferenceCheck>> jobs;
  for (const auto& e : entries) jobs.push_back(std::async(std::launch::async, [&e] { return check_reference(e); }));
  json rows = json::array();
  std::ostringstream t;
  std::size_t failed = 0;
  for (auto& job : jobs) {
    auto r = job.get();
    if (!r.pass()) ++failed;
    json row{{"label", r.label}, {"pass", r.pass()}, {"solver_dim", r.solver_dim}, {"reference_dim", r.reference_dim}};
    if (o.verbose) {
      row["parameters"] = r.parameters;
      row["relation"] = to_string(r.relation);
    }
    rows.push_back(std::move(row));
    t << (r.pass() ? "PASS  " : "FAIL  ") << r.label << "  solver " << r.solver_dim << ", reference "
      << r.reference_dim;
    if (o.verbose) t << ", " << r.parameters << " parameters, " << to_string(r.relation);
    t << '\n';
  }
  t << (failed ? "FAIL" : "PASS") << ": " << (entries.size() - failed) << "/" << entries.size() << " entries\n";
  return {json{{"entries", std::move(rows)},
               {"passed", entries.size() - failed},
               {"failed", failed},
               {"status", failed ? "FAIL" : "PASS"}},
          t.str(), failed ? kExitFailure : kExitOk};
}

void emit_error(std::ostream& out, const Options& o, const json& error) {
  if (o.format == "text") out << "error: " << error.value("message", error.dump()) << '\n';
  else out << json{{"error", error}}.dump(2) << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  if (const char* v = std::getenv("QDER_VERBOSE")) o.verbose = std::string(v) != "" && std::string(v) != "0";

  CLI::App app{"Exact derivation and Lie transformation algebras of finite quandle algebras", "qder"};
  app.require_subcommand(1);
  app.fallthrough();
  auto add_common = [&](CLI::App* sub, bool with_field) {
    sub->add_option("--quandle", o.quandle,
                    "trivial:N, dihedral:N, alexander:N:ALPHA, catalog:LABEL, conjugation:s3, conjugation:cyclic:N");
    sub->add_option("--file", o.file, "quandle JSON file {\"n\": N, \"table\": [[...]]}");
    if (with_field) sub->add_option("--field", o.field, "Q or GF(p)")->capture_default_str();
  };
  using Handler = Output (*)(const Options&);
  std::vector<std::pair<CLI::App*, Handler>> subs;
  auto add = [&](const char* name, const char* help, Handler h, bool quandle, bool field) {
    auto* s = app.add_subcommand(name, help);
    if (quandle) add_common(s, field);
    subs.emplace_back(s, h);
  };
  add("validate", "check the quandle axioms", cmd_validate, true, false);
  add("props", "involutive, latin, medial, connected and orbits", cmd_props, true, false);
  add("derivations", "canonical basis of the derivation algebra", cmd_derivations, true, true);
  add("symmetries", "dihedral symmetry relations of every derivation", cmd_symmetries, true, true);
  add("lietransform", "Lie transformation algebra with inner/outer split", cmd_lietransform, true, true);
  add("inner", "inner derivations", cmd_inner, true, true);
  add("ideals", "augmentation ideal and J_X", cmd_ideals, true, true);
  add("tables", "compare every embedded reference parametrization with the solver", cmd_tables, false, false);
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  std::vector<char*> argv;
  std::vector<std::string> storage(args);
  if (storage.empty()) storage.emplace_back("qder");
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit_error(out, o, json{{"kind", "usage"}, {"message", e.what()}});
    err << app.help();
    return kExitUsage;
  }

  for (auto& [sub, handler] : subs) {
    if (!sub->parsed()) continue;
    try {
      auto res = handler(o);
      if (o.format == "text") out << res.text;
      else out << res.data.dump(2) << '\n';
      return res.code;
    } catch (const CommandError& e) {
      emit_error(out, o, e.error);
      return e.code;
    } catch (const std::exception& e) {
      emit_error(out, o, json{{"kind", "internal"}, {"message", e.what()}});
      return kExitFailure;
    }
  }
  return kExitUsage;
}

}  // namespace qder
