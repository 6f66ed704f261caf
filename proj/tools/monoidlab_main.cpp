// monoidlab -- batch front end: load a monoid or presentation spec, compute
// factorization invariants, and emit JSON/CSV/text reports

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "monoidlab/corpus.hpp"
#include "monoidlab/factorizer.hpp"
#include "monoidlab/json_io.hpp"
#include "monoidlab/presentation.hpp"

namespace {

constexpr const char* kVersion = "monoidlab 0.1.0";

using nlohmann::json;
using namespace monoidlab;

int log_level() {
  const char* env = std::getenv("MONOIDLAB_LOG");
  if (!env) return 0;
  const std::string v = env;
  if (v == "debug" || v == "2") return 2;
  if (v == "info" || v == "1") return 1;
  return 0;
}

void log_info(const std::string& msg) {
  if (log_level() >= 1) std::cerr << "[monoidlab] " << msg << "\n";
}

struct OutputOptions {
  std::string format = "json";
  std::string out_path;
  bool timings = false;
};

void emit(const json& report, const std::string& text_form, const std::string& csv_form,
          const OutputOptions& opts) {
  std::string payload;
  if (opts.format == "json")
    payload = report.dump(2) + "\n";
  else if (opts.format == "csv")
    payload = csv_form;
  else
    payload = text_form;
  if (opts.out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(opts.out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + opts.out_path);
    out << payload;
  }
}

json elasticity_json(const Elasticity& e) {
  json j;
  j["num"] = e.num;
  j["den"] = e.den;
  j["exact"] = e.exact;
  if (!e.is_finite()) j["infinite"] = true;
  return j;
}

std::string elasticity_text(const Elasticity& e) {
  return e.to_string() + (e.exact ? " (exact)" : " (lower bound)");
}

json length_set_json(const LengthSet& ls) {
  return json{{"values", ls.values}, {"truncated", ls.truncated}};
}

std::string join_labels(const ElementSet& set, const FiniteMonoid& M) {
  std::string s;
  set.for_each([&](Element x) {
    if (!s.empty()) s += " ";
    s += M.label(x);
  });
  return s.empty() ? "-" : s;
}

// ---------------------------------------------------------------------------
// invariants
// ---------------------------------------------------------------------------

struct InvariantsArgs {
  std::string monoid_spec;
  std::string preorder = "divisibility";
  std::string targets = "all";
  std::uint32_t max_len = 12;
  OutputOptions out;
};

int cmd_invariants(const InvariantsArgs& args) {
  const auto t0 = std::chrono::steady_clock::now();
  const LoadedMonoid loaded = load_monoid_spec(args.monoid_spec);
  const auto& M = loaded.monoid;
  std::uint32_t closure_added = 0;
  const Premon P = build_premon(loaded, parse_preorder_choice(args.preorder), &closure_added);
  log_info("analysing " + loaded.source + " (" + std::to_string(M.size()) + " elements)");

  const FactorizationAnalysis analysis(P, args.max_len);
  const auto& cls = analysis.classification();
  const ElementSet monoid_units = units(M);
  const ElementSet monoid_atoms = atoms(M);

  std::vector<Element> target_list;
  if (args.targets == "all") {
    for (Element x = 0; x < M.size(); ++x) target_list.push_back(x);
  } else {
    std::stringstream ss(args.targets);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      // Plain numbers select by element index; anything else is a label
      // lookup (labels with commas, like power-monoid subsets, need indices).
      if (tok.find_first_not_of("0123456789") == std::string::npos) {
        const auto x = static_cast<Element>(std::stoul(tok));
        if (x >= M.size()) throw std::runtime_error("target index out of range: " + tok);
        target_list.push_back(x);
        continue;
      }
      bool found = false;
      for (Element x = 0; x < M.size(); ++x)
        if (M.label(x) == tok) {
          target_list.push_back(x);
          found = true;
          break;
        }
      if (!found) throw std::runtime_error("unknown target label: " + tok);
    }
  }

  // Per-target work items are independent; results are assembled in index
  // order so reports do not depend on scheduling.
  std::vector<json> per_target(target_list.size());
  std::string worker_error;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(target_list.size()); ++i) {
    try {
      const Element x = target_list[i];
      json t;
      t["target"] = M.label(x);
      t["length_set"] = length_set_json(analysis.length_set(x));
      t["minimal_length_set"] = analysis.minimal_length_set(x).values;
      t["elasticity"] = elasticity_json(analysis.classical_elasticity_of(x));
      t["minimal_elasticity"] = elasticity_json(analysis.minimal_elasticity_of(x));
      const MinimalFactorizations mf = minimal_factorizations(analysis, x);
      t["minimal_factorization_classes"] = mf.class_count;
      json reps = json::array();
      for (const auto& w : mf.representatives) reps.push_back(to_string(w, {M.labels()}));
      t["minimal_factorization_representatives"] = reps;
      per_target[i] = std::move(t);
    } catch (const std::exception& e) {
#pragma omp critical
      if (worker_error.empty()) worker_error = e.what();
    }
  }
  if (!worker_error.empty()) throw std::runtime_error(worker_error);

  json unions_json = json::array();
  for (std::uint32_t k = 0; k <= args.max_len; ++k) {
    const auto [u, um] = analysis.unions(k);
    unions_json.push_back(json{{"k", k},
                               {"union_of_length_sets", length_set_json(u)},
                               {"union_of_minimal_length_sets", um.values}});
  }

  json report;
  report["tool_version"] = kVersion;
  report["input"] = loaded.source;
  report["preorder"] = args.preorder;
  if (args.preorder == "custom") report["preorder_closure_added"] = closure_added;
  report["max_length"] = args.max_len;
  report["size"] = M.size();
  report["commutative"] = M.commutative();
  report["units"] = json::parse(json(monoid_units.to_vector()).dump());
  json unit_labels = json::array(), atom_labels = json::array(), irr_labels = json::array();
  monoid_units.for_each([&](Element x) { unit_labels.push_back(M.label(x)); });
  monoid_atoms.for_each([&](Element x) { atom_labels.push_back(M.label(x)); });
  cls.irreducibles.for_each([&](Element x) { irr_labels.push_back(M.label(x)); });
  report["units"] = unit_labels;
  report["atoms"] = atom_labels;
  report["irreducibles"] = irr_labels;
  report["targets"] = per_target;
  report["unions"] = unions_json;
  report["classical_elasticity"] = elasticity_json(analysis.classical_elasticity());
  report["minimal_elasticity"] = elasticity_json(analysis.minimal_elasticity());
  const auto t1 = std::chrono::steady_clock::now();
  if (args.out.timings)
    report["wall_time_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

  // Text rendering.
  std::ostringstream text;
  text << kVersion << " invariants of " << loaded.source << " (" << args.preorder << ")\n";
  text << "size " << M.size() << (M.commutative() ? ", commutative" : "") << "\n";
  text << "units: " << join_labels(monoid_units, M) << "\n";
  text << "atoms: " << join_labels(monoid_atoms, M) << "\n";
  text << "irreducibles: " << join_labels(cls.irreducibles, M) << "\n";
  for (std::size_t i = 0; i < target_list.size(); ++i) {
    const auto& t = per_target[i];
    text << "  " << t["target"].get<std::string>() << ": L=" << t["length_set"]["values"].dump()
         << (t["length_set"]["truncated"].get<bool>() ? "+" : "")
         << " Lm=" << t["minimal_length_set"].dump() << "\n";
  }
  text << "classical elasticity: " << elasticity_text(analysis.classical_elasticity())
       << "\n";
  text << "minimal elasticity: " << elasticity_text(analysis.minimal_elasticity()) << "\n";

  // CSV rendering: one row per (element, invariant).
  std::ostringstream csv;
  csv << "element,invariant,value\n";
  auto csv_quote = [](std::string s) {
    for (auto& c : s)
      if (c == ',') c = ';';
    return s;
  };
  for (std::size_t i = 0; i < target_list.size(); ++i) {
    const auto& t = per_target[i];
    const std::string label = csv_quote(t["target"].get<std::string>());
    csv << label << ",length_set," << csv_quote(t["length_set"]["values"].dump()) << "\n";
    csv << label << ",length_set_truncated,"
        << (t["length_set"]["truncated"].get<bool>() ? "true" : "false") << "\n";
    csv << label << ",minimal_length_set," << csv_quote(t["minimal_length_set"].dump())
        << "\n";
    csv << label << ",elasticity," << csv_quote(t["elasticity"].dump()) << "\n";
    csv << label << ",minimal_elasticity," << csv_quote(t["minimal_elasticity"].dump())
        << "\n";
  }

  emit(report, text.str(), csv.str(), args.out);
  return 0;
}

// ---------------------------------------------------------------------------
// presentation
// ---------------------------------------------------------------------------

struct PresentationArgs {
  std::string pres_spec;
  std::uint32_t guba_n = 0;
  std::uint32_t cap = 64;
  std::string check;  // "k32" or "kpq"
  std::uint32_t kp = 3, kq = 2;
  std::vector<std::string> minimality;
  std::vector<std::string> classes;
  std::uint32_t ratio_n = 0;
  bool pieces = false;
  OutputOptions out;
};

const char* tristate_str(Tristate t) {
  switch (t) {
    case Tristate::yes: return "true";
    case Tristate::no: return "false";
    default: return "unknown";
  }
}

int cmd_presentation(const PresentationArgs& args) {
  const auto t0 = std::chrono::steady_clock::now();
  Presentation pres = args.guba_n >= 2 ? guba_example(args.guba_n)
                                       : load_presentation_spec(args.pres_spec);
  const std::string source =
      args.guba_n >= 2 ? "guba:" + std::to_string(args.guba_n) : args.pres_spec;
  log_info("presentation " + source + " with " + std::to_string(pres.relations.size()) +
           " relations");

  json report;
  report["tool_version"] = kVersion;
  report["input"] = source;
  report["generators"] = pres.generators.labels;
  report["relation_count"] = pres.relations.size();
  report["saturation_cap"] = args.cap;

  std::ostringstream text;
  text << kVersion << " presentation " << source << "\n";

  const auto [left, right] = adian_graphs(pres);
  const auto gl = girth(left), gr = girth(right);
  report["girth_left"] = gl ? json(*gl) : json("infinite");
  report["girth_right"] = gr ? json(*gr) : json("infinite");
  text << "girths: left=" << (gl ? std::to_string(*gl) : "infinite")
       << " right=" << (gr ? std::to_string(*gr) : "infinite") << "\n";

  if (!args.check.empty()) {
    std::uint32_t p = args.kp, q = args.kq;
    if (args.check == "k32") {
      p = 3;
      q = 2;
    } else if (args.check != "kpq") {
      throw std::runtime_error("unknown check: " + args.check + " (expected k32 or kpq)");
    }
    const bool verdict = is_class_Kpq(pres, p, q);
    report["kpq"] = json{{"p", p}, {"q", q}, {"holds", verdict}};
    text << "class K_" << p << "^" << q << ": " << (verdict ? "true" : "false") << "\n";
  }

  if (args.pieces || !args.check.empty()) {
    json piece_table = json::array();
    std::set<std::vector<LetterId>> defining;
    for (const auto& [u, v] : pres.relations) {
      defining.insert(u.letters);
      defining.insert(v.letters);
    }
    for (const auto& letters : defining) {
      Word w{letters, pres.num_generators()};
      const auto k = min_piece_decomposition(w, pres);
      json row;
      row["word"] = to_string(w, pres.generators);
      row["min_pieces"] = k ? json(*k) : json("infinite");
      piece_table.push_back(row);
      text << "  pieces(" << to_string(w, pres.generators)
           << ") = " << (k ? std::to_string(*k) : "infinite") << "\n";
    }
    report["piece_decompositions"] = piece_table;
  }

  json classes_json = json::array();
  for (const auto& spec : args.classes) {
    const Word w = parse_word(spec, pres.generators);
    const SaturationResult sat = congruence_class(w, pres, args.cap);
    json c;
    c["word"] = spec;
    c["complete"] = sat.complete;
    json members = json::array();
    for (const auto& m : sat.class_members) members.push_back(to_string(m, pres.generators));
    c["members"] = members;
    classes_json.push_back(c);
    text << "class(" << spec << "): " << sat.class_members.size() << " members, "
         << (sat.complete ? "complete" : "incomplete") << "\n";
  }
  if (!args.classes.empty()) report["congruence_classes"] = classes_json;

  json minimality_json = json::array();
  for (const auto& spec : args.minimality) {
    const Word w = parse_word(spec, pres.generators);
    const Tristate verdict = is_minimal_atomic_factorization(w, pres, args.cap);
    minimality_json.push_back(json{{"word", spec}, {"minimal", tristate_str(verdict)}});
    text << "minimal(" << spec << "): " << tristate_str(verdict) << "\n";
  }
  if (!args.minimality.empty()) report["minimality"] = minimality_json;

  if (args.ratio_n >= 2) {
    const Word s = guba_s_word(args.ratio_n);
    const Word t = guba_t_word(args.ratio_n);
    const Elasticity ratio = Elasticity::ratio(s.length(), t.length(), true);
    report["witness_ratio"] =
        json{{"n", args.ratio_n}, {"num", ratio.num}, {"den", ratio.den}};
    text << "witness ratio n=" << args.ratio_n << ": " << ratio.to_string() << "\n";
  }

  const auto t1 = std::chrono::steady_clock::now();
  if (args.out.timings)
    report["wall_time_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

  std::ostringstream csv;
  csv << "key,value\n";
  csv << "girth_left," << (gl ? std::to_string(*gl) : "infinite") << "\n";
  csv << "girth_right," << (gr ? std::to_string(*gr) : "infinite") << "\n";
  emit(report, text.str(), csv.str(), args.out);
  return 0;
}

// ---------------------------------------------------------------------------
// corpus
// ---------------------------------------------------------------------------

struct CorpusArgs {
  std::uint64_t seed = 42;
  std::uint32_t size_max = 6;
  std::uint32_t count = 120;
  OutputOptions out;
};

int cmd_corpus(const CorpusArgs& args) {
  const auto t0 = std::chrono::steady_clock::now();
  corpus::Config config;
  config.seed = args.seed;
  config.size_max = args.size_max;
  config.commutative_count = args.count;
  config.general_count = std::max(10u, args.count / 3);
  log_info("running corpus suites, seed " + std::to_string(config.seed));
  const corpus::Report result = corpus::run_all_suites(config);

  json report;
  report["tool_version"] = kVersion;
  report["input"] = "corpus";
  report["seed"] = config.seed;
  report["size_max"] = config.size_max;
  report["instances"] = result.instance_count;
  json suites = json::array();
  std::ostringstream text, csv;
  text << kVersion << " corpus run, seed " << config.seed << ", "
       << result.instance_count << " instances\n";
  csv << "suite,checks,failures\n";
  for (const auto& s : result.suites) {
    json sj;
    sj["name"] = s.name;
    sj["checks"] = s.checks;
    sj["failures"] = s.failures;
    if (!s.failure_messages.empty()) sj["failure_messages"] = s.failure_messages;
    suites.push_back(sj);
    text << "  " << (s.passed() ? "PASS" : "FAIL") << " " << s.name << " (" << s.checks
         << " checks)\n";
    csv << s.name << "," << s.checks << "," << s.failures << "\n";
    for (const auto& m : s.failure_messages) text << "      " << m << "\n";
  }
  report["suites"] = suites;
  report["ok"] = result.ok();
  text << (result.ok() ? "all suites passed" : "FAILURES PRESENT") << "\n";
  const auto t1 = std::chrono::steady_clock::now();
  if (args.out.timings)
    report["wall_time_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

  emit(report, text.str(), csv.str(), args.out);
  return result.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monoidlab: factorization invariants of finite and finitely presented "
               "monoids"};
  app.set_version_flag("--version", kVersion);
  int jobs = 0;
  app.add_option("--jobs", jobs, "worker threads (0 = library default)");

  InvariantsArgs inv;
  CLI::App* inv_cmd = app.add_subcommand("invariants", "invariants of a finite monoid");
  inv_cmd->add_option("--monoid", inv.monoid_spec,
                      "monoid spec: mul_mod:N, power:N, trivial:1, a JSON file, or an "
                      "inline JSON object")
      ->required();
  inv_cmd->add_option("--preorder", inv.preorder, "divisibility|left|right|custom");
  inv_cmd->add_option("--targets", inv.targets, "all or comma-separated element labels");
  inv_cmd->add_option("--max-len", inv.max_len, "length cap for plain factorizations");
  inv_cmd->add_option("--format", inv.out.format, "json|csv|text");
  inv_cmd->add_option("--out", inv.out.out_path, "output file (default stdout)");
  inv_cmd->add_flag("--timings", inv.out.timings, "include wall_time_ms in the report");

  PresentationArgs pre;
  CLI::App* pre_cmd = app.add_subcommand("presentation", "analyse a monoid presentation");
  pre_cmd->add_option("--pres", pre.pres_spec, "presentation spec: guba:N, a JSON file, or "
                                               "inline JSON");
  pre_cmd->add_option("--guba", pre.guba_n, "shorthand for the builtin 3-generator family");
  pre_cmd->add_option("--cap", pre.cap, "saturation budget (class member cap)");
  pre_cmd->add_option("--check", pre.check, "k32 or kpq (with --p/--q)");
  pre_cmd->add_option("--p", pre.kp, "piece bound for --check kpq");
  pre_cmd->add_option("--q", pre.kq, "girth bound for --check kpq");
  pre_cmd->add_option("--minimality", pre.minimality,
                      "words to test for minimality (s_N, t_N, or comma-separated labels)");
  pre_cmd->add_option("--class", pre.classes, "words whose congruence class to saturate");
  pre_cmd->add_option("--ratio", pre.ratio_n, "witness length ratio for relation index n");
  pre_cmd->add_flag("--pieces", pre.pieces, "print piece decompositions of defining words");
  pre_cmd->add_option("--format", pre.out.format, "json|csv|text");
  pre_cmd->add_option("--out", pre.out.out_path, "output file (default stdout)");
  pre_cmd->add_flag("--timings", pre.out.timings, "include wall_time_ms in the report");

  CorpusArgs cor;
  CLI::App* cor_cmd = app.add_subcommand("corpus", "run the property suites over generated "
                                                   "monoid corpora");
  cor_cmd->add_option("--seed", cor.seed, "corpus seed");
  cor_cmd->add_option("--size-max", cor.size_max, "largest monoid size to generate");
  cor_cmd->add_option("--count", cor.count, "number of random commutative instances");
  cor_cmd->add_option("--format", cor.out.format, "json|csv|text");
  cor_cmd->add_option("--out", cor.out.out_path, "output file (default stdout)");
  cor_cmd->add_flag("--timings", cor.out.timings, "include wall_time_ms in the report");

  app.require_subcommand(1);
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#endif

  try {
    if (*inv_cmd) return cmd_invariants(inv);
    if (*pre_cmd) {
      if (pre.guba_n < 2 && pre.pres_spec.empty())
        throw std::runtime_error("presentation: pass --guba N or --pres <spec>");
      return cmd_presentation(pre);
    }
    if (*cor_cmd) return cmd_corpus(cor);
  } catch (const std::exception& e) {
    std::cerr << "monoidlab: error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
