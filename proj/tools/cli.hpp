#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "k3acm/serialize.hpp"
#include "region_svg.hpp"
#include "render.hpp"

namespace k3acm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

inline constexpr const char* kOutputDirEnv = "K3ACM_OUTPUT_DIR";

// ---------------------------------------------------------------------------
// Payload builders, shared by the commands and the golden-table writer.

inline json divisor_rows(const std::vector<DivisorClass>& classes) {
  json rows = json::array();
  for (const auto& d : classes) rows.push_back(d);
  return rows;
}

inline json candidates_payload(CandidateBranch branch, int box) {
  CandidateList list = branch == CandidateBranch::effective ? enumerate_c1_effective(box)
                                                            : enumerate_c1_noneffective(box);
  return json{{"branch", to_string(list.branch)},
              {"box", list.box},
              {"count", list.size()},
              {"rows", divisor_rows(list.classes)}};
}

inline json acm_lines_payload(int box) {
  auto list = enumerate_initialized_acm_lines(box);
  json rows = json::array();
  for (const auto& d : list.classes) {
    json row = d;
    auto report = is_acm_line(d);
    row["case"] = report.matched ? to_string(*report.matched) : "";
    rows.push_back(std::move(row));
  }
  return json{{"box", list.box}, {"count", list.size()}, {"rows", rows}};
}

inline json table_a_payload(const TableA& table) {
  std::vector<DivisorClass> groups;
  for (const auto& r : table.rows)
    if (groups.empty() || groups.back() != r.c1) groups.push_back(r.c1);
  json rows = json::array();
  for (const auto& r : table.rows) rows.push_back(r);
  return json{{"count", table.rows.size()}, {"groups", groups.size()}, {"rows", rows}};
}

inline json classification_payload(const std::vector<CandidateVerdict>& verdicts) {
  json rows = json::array();
  std::size_t realized = 0;
  for (const auto& v : verdicts) {
    rows.push_back(v);
    realized += v.realized();
  }
  return json{{"count", verdicts.size()}, {"realized_count", realized}, {"rows", rows}};
}

/// The realized part of the classification without proof traces; stable
/// enough to commit as a golden file.
inline json main_theorem_json() {
  json realized = json::array();
  json eliminated = json::array();
  for (const auto& v : full_classification()) {
    if (!v.realized()) {
      eliminated.push_back(json{{"c1", v.c1}, {"rule", v.as_eliminated().rule}});
      continue;
    }
    const auto& r = v.as_realized();
    realized.push_back(json{{"c1", v.c1},
                            {"branch", to_string(v.branch)},
                            {"c2_set", integers_to_json(r.c2_set)},
                            {"h0_values", integers_to_json(r.h0_values)},
                            {"ulrich", r.ulrich},
                            {"zero_locus", r.zero_locus},
                            {"zero_locus_cases", r.zero_locus_cases},
                            {"existence_citations", r.existence_citations},
                            {"tags", r.tags}});
  }
  return json{{"schema_version", kSchemaVersion},
              {"realized_count", realized.size()},
              {"realized", realized},
              {"eliminated", eliminated}};
}

/// File name -> contents for the four canonical tables.
inline std::map<std::string, std::string> golden_files() {
  return {
      {"effective-candidates.csv",
       render_csv(tabulate(candidates_payload(CandidateBranch::effective, kDefaultScanBox)))},
      {"noneffective-candidates.csv",
       render_csv(tabulate(candidates_payload(CandidateBranch::noneffective, kDefaultScanBox)))},
      {"table-a.csv", render_csv(tabulate(table_a_payload(generate_table_a())))},
      {"main-theorem.json", main_theorem_json().dump(2) + "\n"},
  };
}

inline json line_report_payload(const DivisorClass& d, const GramLattice& lattice) {
  require_default_lattice(lattice);
  const auto status = effectivity(d, lattice);
  const auto parity = parity_class(d, lattice);
  const auto acm = is_acm_line(d, lattice);
  json curve = nullptr;
  if (status.kind == Effectivity::effective) {
    const auto c = curve_invariants(d, lattice);
    curve = json{{"degree", integer_to_json(c.degree)},
                 {"arithmetic_genus", integer_to_json(c.arithmetic_genus)},
                 {"h0", integer_to_json(c.h0)}};
  }
  return json{{"divisor", d},
              {"square", integer_to_json(status.square)},
              {"degree", integer_to_json(status.degree)},
              {"square_parity", to_string(parity.parity)},
              {"effectivity", to_string(status.kind)},
              {"globally_generated", is_globally_generated(d, lattice)},
              {"initialized", is_initialized_line(d, lattice)},
              {"chi", integer_to_json(chi_line(d, lattice))},
              {"cohomology", cohomology_line(d, lattice)},
              {"curve", curve},
              {"acm", acm.acm},
              {"acm_case", acm.matched ? json(to_string(*acm.matched)) : json(nullptr)},
              {"initialized_twist", acm.initialized_twist},
              {"shift", integer_to_json(acm.shift)},
              {"witness_twist", acm.witness_twist ? integer_to_json(*acm.witness_twist) : json(nullptr)}};
}

inline json hilbert_payload(const std::vector<Integer>& values, const std::optional<Integer>& total) {
  if (values.empty()) throw DomainError("empty-hilbert-function", "give at least h(0)");
  const Integer degree = total.value_or(values.back());
  const auto report = admissible_point_hilbert(HilbertFunction(values), degree);
  return json{{"values", integers_to_json(values)},
              {"total_degree", integer_to_json(degree)},
              {"admissible", report.admissible},
              {"violation_degree", report.violation_degree ? json(*report.violation_degree) : json(nullptr)},
              {"reason", report.reason},
              {"growth_bounds", integers_to_json(report.growth_bounds)}};
}

/// Collects every "trace" array in a document: a bare trace, a verdict, an
/// envelope or a whole classification.
inline void collect_traces(const json& j, std::vector<Trace>& out) {
  if (j.is_array()) {
    if (!j.empty() && j.front().is_object() && j.front().contains("rule") && j.front().contains("facts")) {
      out.push_back(j.get<Trace>());
      return;
    }
    for (const auto& x : j) collect_traces(x, out);
    return;
  }
  if (!j.is_object()) return;
  for (const auto& [key, value] : j.items()) {
    if (key == "trace" && value.is_array())
      out.push_back(value.get<Trace>());
    else
      collect_traces(value, out);
  }
}

inline json replay_payload(const json& document) {
  std::vector<Trace> traces;
  if (document.is_array() && document.empty()) traces.emplace_back();
  collect_traces(document, traces);
  if (traces.empty()) throw UsageError("no trace found in the input document");
  std::size_t steps = 0, facts = 0;
  json mismatches = json::array();
  for (std::size_t t = 0; t < traces.size(); ++t) {
    steps += traces[t].size();
    for (const auto& s : traces[t]) facts += s.facts.size();
    for (const auto& m : replay_mismatches(traces[t]))
      mismatches.push_back(json{{"trace", t},
                                {"step", m.step},
                                {"rule", traces[t][m.step].rule},
                                {"fact", fact_to_json(traces[t][m.step].facts[m.fact])}});
  }
  return json{{"traces", traces.size()},
              {"steps", steps},
              {"facts", facts},
              {"ok", mismatches.empty()},
              {"mismatches", mismatches}};
}

// ---------------------------------------------------------------------------
// Dispatch

inline GramLattice parse_gram(const std::string& text) {
  std::vector<Integer> g;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) g.push_back(parse_integer(part));
  if (g.size() != 3) throw UsageError("--gram expects g11,g12,g22");
  return GramLattice(g[0], g[1], g[2]);
}

inline void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("io-error", "cannot write " + path.string());
  f << contents;
  if (!f) throw DomainError("io-error", "write failed for " + path.string());
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DomainError("io-error", "cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline void emit(const OutputEnvelope& env, Format format, std::ostream& out, std::ostream& err) {
  if (format == Format::json || env.error) {
    out << json(env).dump(2) << "\n";
  } else {
    const auto table = tabulate(env.payload);
    out << (format == Format::csv ? render_csv(table) : render_markdown(table));
  }
  if (format != Format::json)
    for (const auto& w : env.warnings) err << "warning: " << w << "\n";
}

/// Runs one command line (without the program name). Writes the envelope or
/// table to `out`, diagnostics to `err`, and returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank-2 aCM bundle classification on the general determinantal quartic surface", "k3acm"};
  app.require_subcommand(1);

  std::string format_text = "json";
  std::string gram_text;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "json, csv or markdown");
    sub->add_option("--gram", gram_text, "Gram matrix g11,g12,g22 (default 4,6,4)");
  };
  common(&app);

  OutputEnvelope env;
  std::function<void()> action;
  auto lattice = [&] { return gram_text.empty() ? GramLattice::standard() : parse_gram(gram_text); };
  auto classification_lattice = [&] {
    auto l = lattice();
    require_default_lattice(l);
    return l;
  };

  // intersect X1 Y1 X2 Y2
  std::vector<std::string> int4;
  auto* intersect_cmd = app.add_subcommand("intersect", "intersection number of (X1,Y1) and (X2,Y2)");
  intersect_cmd->add_option("values", int4, "X1 Y1 X2 Y2")->expected(4)->required();
  common(intersect_cmd);
  intersect_cmd->callback([&] {
    action = [&] {
      const DivisorClass a{parse_integer(int4[0]), parse_integer(int4[1])};
      const DivisorClass b{parse_integer(int4[2]), parse_integer(int4[3])};
      env.payload = json{{"lhs", a}, {"rhs", b}, {"value", integer_to_json(intersect(a, b, env.lattice))}};
    };
  });

  // chi-line X Y / line-report X Y (or one symbolic class)
  std::vector<std::string> xy;
  auto divisor_arg = [&] {
    if (xy.size() == 1) return parse_divisor(xy[0]);
    return DivisorClass{parse_integer(xy[0]), parse_integer(xy[1])};
  };
  auto* chi_cmd = app.add_subcommand("chi-line", "Euler characteristic of O(Xh+YA)");
  chi_cmd->add_option("class", xy, "X Y, or a class such as 3h-A")->expected(1, 2)->required();
  common(chi_cmd);
  chi_cmd->callback([&] {
    action = [&] {
      const auto d = divisor_arg();
      env.payload = json{{"divisor", d},
                         {"square", integer_to_json(square(d, env.lattice))},
                         {"chi", integer_to_json(chi_line(d, env.lattice))}};
    };
  });

  auto* report_cmd = app.add_subcommand("line-report", "effectivity, cohomology, curve invariants and aCM status");
  report_cmd->add_option("class", xy, "X Y, or a class such as 3h-A")->expected(1, 2)->required();
  common(report_cmd);
  report_cmd->callback([&] { action = [&] { env.payload = line_report_payload(divisor_arg(), env.lattice); }; });

  int box = kDefaultScanBox;
  auto* acm_cmd = app.add_subcommand("acm-lines", "initialized aCM line bundles");
  acm_cmd->add_option("--box", box, "scan box half-width");
  common(acm_cmd);
  acm_cmd->callback([&] {
    action = [&] {
      classification_lattice();
      env.payload = acm_lines_payload(box);
    };
  });

  std::string branch;
  auto* cand_cmd = app.add_subcommand("candidates", "candidate first Chern classes");
  cand_cmd->add_option("--branch", branch, "effective or noneffective")
      ->required()
      ->check(CLI::IsMember({"effective", "noneffective"}));
  cand_cmd->add_option("--box", box, "scan box half-width");
  common(cand_cmd);
  cand_cmd->callback([&] {
    action = [&] {
      classification_lattice();
      env.payload = candidates_payload(branch == "effective" ? CandidateBranch::effective : CandidateBranch::noneffective,
                                       box);
    };
  });

  auto* table_cmd = app.add_subcommand("table-a", "pairs (c1, D) with c1 - D effective");
  table_cmd->add_option("--box", box, "scan box half-width");
  common(table_cmd);
  table_cmd->callback([&] {
    action = [&] {
      classification_lattice();
      const auto table = generate_table_a(box);
      env.payload = table_a_payload(table);
      env.warnings = table.warnings;
    };
  });

  std::string c1_text, d_text;
  auto* classify_cmd = app.add_subcommand("classify", "classify one candidate c1, or all of them");
  classify_cmd->add_option("--c1", c1_text, "first Chern class X,Y");
  classify_cmd->add_option("--box", box, "scan box half-width");
  common(classify_cmd);
  classify_cmd->callback([&] {
    action = [&] {
      classification_lattice();
      std::vector<CandidateVerdict> verdicts;
      if (c1_text.empty())
        verdicts = full_classification(box);
      else
        verdicts.push_back(classify(parse_divisor(c1_text)));
      env.payload = classification_payload(verdicts);
      env.warnings = classification_notes();
    };
  });

  auto* elim_cmd = app.add_subcommand("eliminate", "run the elimination rules for c1, or for a pair (c1, D)");
  elim_cmd->add_option("--c1", c1_text, "first Chern class X,Y")->required();
  elim_cmd->add_option("--D", d_text, "divisorial part X,Y (A or 3h-A)");
  common(elim_cmd);
  elim_cmd->callback([&] {
    action = [&] {
      classification_lattice();
      const auto c1 = parse_divisor(c1_text);
      Elimination e;
      std::string scenario;
      json d = nullptr;
      if (d_text.empty()) {
        e = eliminate_noneffective(c1);
        scenario = "noneffective-point";
      } else {
        const auto dc = parse_divisor(d_text);
        d = dc;
        const bool table_row = is_effective(c1 - dc);
        e = table_row ? eliminate_table_a_row(c1, dc) : eliminate_divisorial(c1, dc);
        scenario = table_row ? "table-a-row" : "divisorial";
      }
      env.payload = json{{"c1", c1},
                         {"D", d},
                         {"scenario", scenario},
                         {"eliminated", e.eliminated},
                         {"rule", e.rule},
                         {"trace", e.trace}};
    };
  });

  std::string c2_text, h2_text = "0";
  auto* ulrich_cmd = app.add_subcommand("ulrich-check", "h^0 bound 1 <= h^0 <= 8 and the Ulrich flag");
  ulrich_cmd->add_option("--c1", c1_text, "first Chern class X,Y")->required();
  ulrich_cmd->add_option("--c2", c2_text, "second Chern class")->required();
  ulrich_cmd->add_option("--h2", h2_text, "h^2(E), default 0");
  common(ulrich_cmd);
  ulrich_cmd->callback([&] {
    action = [&] {
      classification_lattice();
      const Rank2Invariants inv{parse_divisor(c1_text), parse_integer(c2_text)};
      const auto check = ulrich_bound_check(inv, parse_integer(h2_text));
      env.payload = json{{"c1", inv.c1},
                         {"c2", integer_to_json(inv.c2)},
                         {"chi", integer_to_json(check.chi)},
                         {"h0", integer_to_json(check.h0)},
                         {"within_bound", check.within_bound},
                         {"ulrich", check.ulrich}};
    };
  });

  std::string by_text;
  bool dual = false;
  auto* twist_cmd = app.add_subcommand("twist", "Chern classes of E(T) or E^v(T)");
  twist_cmd->add_option("--c1", c1_text, "first Chern class X,Y")->required();
  twist_cmd->add_option("--c2", c2_text, "second Chern class")->required();
  twist_cmd->add_option("--by", by_text, "twist T as X,Y")->required();
  twist_cmd->add_flag("--dual", dual, "dualize before twisting");
  common(twist_cmd);
  twist_cmd->callback([&] {
    action = [&] {
      const Rank2Invariants inv{parse_divisor(c1_text), parse_integer(c2_text)};
      const auto t = parse_divisor(by_text);
      const auto r = twist_rank2(inv, t, dual ? Dualize::yes : Dualize::no, env.lattice);
      env.payload = json{{"input", inv}, {"twist", t}, {"dualize", dual}, {"value", r},
                         {"chi", integer_to_json(chi_rank2(r, env.lattice))}};
    };
  });

  std::vector<std::string> hilbert_values;
  std::string total_text;
  auto* hilbert_cmd = app.add_subcommand("hilbert-check", "admissibility of a point-scheme Hilbert function");
  hilbert_cmd->add_option("values", hilbert_values, "h(0) h(1) ...")->required();
  hilbert_cmd->add_option("--total", total_text, "degree of the scheme (default: last value)");
  common(hilbert_cmd);
  hilbert_cmd->callback([&] {
    action = [&] {
      std::vector<Integer> values;
      for (const auto& v : hilbert_values) values.push_back(parse_integer(v));
      std::optional<Integer> total;
      if (!total_text.empty()) total = parse_integer(total_text);
      env.payload = hilbert_payload(values, total);
    };
  });

  std::string out_path;
  auto* svg_cmd = app.add_subcommand("region-svg", "draw the effective region as SVG");
  svg_cmd->add_option("--out", out_path, "output SVG path")->required();
  common(svg_cmd);
  svg_cmd->callback([&] {
    action = [&] {
      classification_lattice();
      const auto region = render_region_svg();
      write_file(out_path, region.svg);
      env.payload = json{{"path", out_path},
                         {"points", region.points},
                         {"effective", region.effective},
                         {"anti_effective", region.anti_effective},
                         {"neither", region.neither}};
    };
  });

  std::string trace_path;
  auto* replay_cmd = app.add_subcommand("replay", "recompute every numeric fact in a saved trace");
  replay_cmd->add_option("--trace", trace_path, "JSON file: a trace, a verdict, or a classify envelope")->required();
  common(replay_cmd);
  replay_cmd->callback([&] {
    action = [&] {
      classification_lattice();
      json document;
      try {
        document = json::parse(read_file(trace_path));
      } catch (const json::parse_error& e) {
        throw UsageError(std::string("trace file is not JSON: ") + e.what());
      }
      env.payload = replay_payload(document);
      if (!env.payload.at("ok").get<bool>())
        throw DomainError("replay-mismatch", "some recorded facts do not recompute; see payload.mismatches");
    };
  });

  std::string out_dir;
  auto* golden_cmd = app.add_subcommand("golden-tables", "write the canonical tables");
  golden_cmd->add_option("--out-dir", out_dir, std::string("output directory (default $") + kOutputDirEnv + ")");
  common(golden_cmd);
  golden_cmd->callback([&] {
    action = [&] {
      classification_lattice();
      if (out_dir.empty())
        if (const char* env_dir = std::getenv(kOutputDirEnv)) out_dir = env_dir;
      if (out_dir.empty()) throw UsageError(std::string("golden-tables needs --out-dir or $") + kOutputDirEnv);
      std::filesystem::create_directories(out_dir);
      json files = json::array();
      for (const auto& [name, contents] : golden_files()) {
        write_file(std::filesystem::path(out_dir) / name, contents);
        files.push_back(json{{"file", name}, {"bytes", contents.size()}});
      }
      env.payload = json{{"out_dir", out_dir}, {"rows", files}};
    };
  });

  Format format = Format::json;
  auto fail = [&](int code, std::string name, const std::string& message) {
    env.error = ErrorInfo{std::move(name), message};
    env.payload = nullptr;
    err << "error: " << message << "\n";
    emit(env, format, out, err);
    return code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  env.command = app.get_subcommands().front()->get_name();
  try {
    format = parse_format(format_text);
    env.lattice = lattice();
    action();
  } catch (const UsageError& e) {
    return fail(kExitUsage, "usage-error", e.what());
  } catch (const DomainError& e) {
    return fail(kExitDomain, e.name(), e.what());
  } catch (const ConsistencyError& e) {
    return fail(kExitInternal, "internal-consistency", e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(kExitDomain, "io-error", e.what());
  } catch (const json::exception& e) {
    return fail(kExitUsage, "usage-error", e.what());
  }
  emit(env, format, out, err);
  return kExitOk;
}

}  // namespace k3acm::cli
