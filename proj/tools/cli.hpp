#pragma once

// The peano command line, runnable in-process for tests.

#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "report.hpp"
#include "reproduce.hpp"

namespace peano::cli {

enum Exit : int { ok = 0, usage = 1, mismatch = 2, invalid_model = 3 };

struct Options {
  std::size_t budget = 64;
  std::string format = "text";
  std::uint64_t seed = 7;
  std::string model;
  std::string regime;
  std::string dot;
  unsigned n = 10;
  std::size_t count = 500;
  std::string models_dir = PEANO_MODELS_DIR;
};

// A builtin id or a .model file, ready to check.
struct Subject {
  std::string name;
  ModelPtr model;
  EvidenceBundle evidence;
  Regime regime = Regime::pre_inductive;
};

namespace detail {

inline bool looks_like_path(const std::string& s) {
  return s.find('/') != std::string::npos || std::filesystem::path(s).extension() == ".model";
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  bool json() const { return o_.format == "json"; }

  void emit(report::ordered_json j) {
    report::ordered_json top;
    top["schema"] = report::kSchema;
    for (auto& [k, v] : j.items()) top[k] = v;
    out_ << top.dump(2) << "\n";
  }

  // Loads the named model; on failure reports and returns the exit code.
  std::optional<Subject> subject(int& code) {
    if (auto id = parse_model_id(o_.model)) {
      Subject s{to_string(*id), build(*id), evidence(*id), regime_of(*id)};
      if (!o_.regime.empty()) s.regime = parse_regime(o_.regime);
      return s;
    }
    if (!looks_like_path(o_.model)) {
      err_ << "error: unknown model '" << o_.model << "' (see 'peano list')\n";
      code = usage;
      return std::nullopt;
    }
    try {
      auto lm = dsl::load_file(o_.model, o_.budget);
      Subject s{lm.model->name(), lm.model, lm.evidence, lm.regime};
      if (!o_.regime.empty()) s.regime = parse_regime(o_.regime);
      return s;
    } catch (const dsl::ParseError& e) {
      err_ << o_.model << ":" << e.what() << "\n";
    } catch (const dsl::ValidationErrors& e) {
      for (const auto& m : e.errors()) err_ << o_.model << ": " << m << "\n";
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << "\n";
    }
    code = invalid_model;
    return std::nullopt;
  }

  int list() {
    if (json()) {
      auto ms = report::ordered_json::array();
      for (auto id : kAllModels)
        ms.push_back({{"id", to_string(id)},
                      {"regime", to_string(regime_of(id))},
                      {"source", std::string("models/") + source_stem(id) + ".model"}});
      emit({{"models", ms}});
    } else {
      for (auto id : kAllModels)
        out_ << std::left << std::setw(24) << to_string(id) << std::setw(5) << to_string(regime_of(id))
             << "models/" << source_stem(id) << ".model\n";
    }
    return ok;
  }

  int axioms() {
    int code = ok;
    auto s = subject(code);
    if (!s) return code;
    const auto r = check_axioms(*s->model, s->regime, o_.budget);
    if (json())
      emit(report::axioms_json(s->name, r));
    else
      out_ << report::axioms_text(s->name, r);
    return r.passed() ? ok : mismatch;
  }

  int principles() {
    int code = ok;
    auto s = subject(code);
    if (!s) return code;
    StatusTable direct;
    try {
      direct = evaluate(*s->model, s->evidence, o_.budget, s->regime);
    } catch (const EvidenceError& e) {
      err_ << "error: " << e.what() << "\n";
      return mismatch;
    }
    const auto g = build_graph(s->regime);
    if (auto bad = check_consistency(direct, g)) {
      if (json())
        emit({{"table", report::table_json(direct)}, {"consistent", false}, {"violated", edge_label(*bad)}});
      else
        out_ << report::table_text(direct) << "inconsistent: " << edge_label(*bad) << " is "
             << to_string(bad->status) << "\n";
      return mismatch;
    }
    const auto t = propagate(direct, g);
    if (json())
      emit({{"table", report::table_json(t)}, {"consistent", true}});
    else
      out_ << report::table_text(t) << "consistent with the " << report::regime_name(s->regime) << " graph\n";
    return ok;
  }

  int implications() {
    const auto regime = parse_regime(o_.regime);
    const auto g = build_graph(regime);
    std::vector<StatusTable> tables;
    for (auto id : kAllModels)
      if (regime_of(id) == regime) tables.push_back(evaluate(*build(id), evidence(id), o_.budget, regime));
    if (!o_.dot.empty()) {
      std::ofstream f(o_.dot, std::ios::binary);
      if (!(f << export_dot(g, tables))) {
        err_ << "error: cannot write " << o_.dot << "\n";
        return usage;
      }
    }
    if (json())
      emit(report::graph_json(g, tables));
    else
      out_ << report::graph_text(g, tables);
    return ok;
  }

  int parse() {
    try {
      const auto lm = dsl::load_file(o_.model, o_.budget);
      const auto regime = o_.regime.empty() ? lm.regime : parse_regime(o_.regime);
      const auto r = check_axioms(*lm.model, regime, o_.budget);
      if (json()) {
        report::ordered_json j;
        j["model"] = lm.model->name();
        j["sorts"] = lm.def.ast.sorts.size();
        j["evidence"] = lm.evidence.size();
        j["sampled"] = lm.def.sampled;
        j["axioms"] = report::axioms_json(lm.model->name(), r);
        j["source"] = lm.def.rendering;
        emit(j);
      } else {
        out_ << lm.def.rendering;
        for (const auto& s : lm.def.sampled) out_ << "note: " << s << "\n";
        out_ << report::axioms_text(lm.model->name(), r);
      }
      return r.passed() ? ok : mismatch;
    } catch (const dsl::ParseError& e) {
      err_ << o_.model << ":" << e.what() << "\n";
    } catch (const dsl::ValidationErrors& e) {
      for (const auto& m : e.errors()) err_ << o_.model << ": " << m << "\n";
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << "\n";
    }
    return invalid_model;
  }

  int oracle() {
    const auto s = oracle::fuzz(o_.n, o_.count, o_.seed);
    if (json()) {
      report::ordered_json j{{"seed", s.seed},      {"max_n", s.max_n},
                             {"checked", s.checked}, {"theorem_agree", s.theorem_agree},
                             {"duality_agree", s.duality_agree}};
      if (s.first_disagreement) {
        std::vector<std::vector<unsigned>> ps;
        for (auto [a, b] : s.first_disagreement->pairs()) ps.push_back({a, b});
        j["first_disagreement"] = {{"n", s.first_disagreement->size()}, {"pairs", ps}};
      } else {
        j["first_disagreement"] = nullptr;
      }
      emit(j);
    } else {
      out_ << s.theorem_agree << "/" << s.checked << " agree (n <= " << s.max_n << ", seed " << s.seed
           << "); finite descent " << s.duality_agree << "/" << s.checked << "\n";
    }
    return s.all_agree() ? ok : mismatch;
  }

  int reproduce() {
    repro::Config cfg{o_.budget, o_.seed, o_.models_dir};
    const auto outcomes = repro::run_all(cfg);
    std::size_t passed = 0;
    if (json()) {
      auto cs = report::ordered_json::array();
      for (const auto& c : outcomes) {
        passed += c.passed;
        cs.push_back({{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"summary", c.summary},
                      {"failures", c.failures}});
      }
      emit({{"seed", o_.seed}, {"budget", o_.budget}, {"criteria", cs}, {"passed", passed},
            {"total", outcomes.size()}});
    } else {
      for (const auto& c : outcomes) {
        passed += c.passed;
        out_ << "criterion " << std::setw(2) << std::right << c.id << "  " << (c.passed ? "PASS" : "FAIL") << "  "
             << c.title << ": " << (c.passed ? c.summary : c.failures.front()) << "\n";
      }
      out_ << passed << "/" << outcomes.size() << " criteria reproduced\n";
    }
    for (const auto& c : outcomes)
      if (!c.passed) {
        err_ << "mismatch in criterion " << c.id << " (" << c.title << "):\n";
        for (const auto& f : c.failures) err_ << "  " << f << "\n";
        return mismatch;
      }
    return ok;
  }

 private:
  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks induction principles on Peano-style models.", "peano"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--budget", o.budget, "elements enumerated per check")->default_val(64)->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "output format")->default_val("text")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "seed for the random relation corpus")->default_val(7);

  const auto regime_check = CLI::IsMember({"pre", "sub", "pre-inductive", "sub-inductive"});
  auto* list = app.add_subcommand("list", "gallery model ids");
  auto* axioms = app.add_subcommand("axioms", "axiom checks for a model");
  axioms->add_option("model", o.model, "gallery id or .model file")->required();
  axioms->add_option("--regime", o.regime, "pre or sub (default: the model's own)")->check(regime_check);
  auto* principles = app.add_subcommand("principles", "evaluate, propagate and check consistency");
  principles->add_option("model", o.model, "gallery id or .model file")->required();
  principles->add_option("--regime", o.regime, "pre or sub (default: the model's own)")->check(regime_check);
  auto* implications = app.add_subcommand("implications", "the implication graph of a regime");
  implications->add_option("--regime", o.regime, "pre or sub")->required()->check(regime_check);
  implications->add_option("--dot", o.dot, "also write the graph as DOT to this file");
  auto* parse = app.add_subcommand("parse", "validate and compile a .model file, then check its axioms");
  parse->add_option("file", o.model, ".model file")->required();
  parse->add_option("--regime", o.regime, "pre or sub (default: detected)")->check(regime_check);
  auto* oracle = app.add_subcommand("oracle", "compare well-foundedness with induction on random finite relations");
  oracle->add_option("--n", o.n, "largest carrier size")->default_val(10)->check(CLI::Range(1u, oracle::kMaxCarrier));
  oracle->add_option("--count", o.count, "relations to check")->default_val(500);
  auto* reproduce = app.add_subcommand("reproduce", "run every reproduction criterion");
  reproduce->add_option("--models", o.models_dir, "directory of the bundled .model sources")
      ->default_val(std::string(PEANO_MODELS_DIR));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ok : usage;
  }

  detail::Runner r(o, out, err);
  try {
    if (*list) return r.list();
    if (*axioms) return r.axioms();
    if (*principles) return r.principles();
    if (*implications) return r.implications();
    if (*parse) return r.parse();
    if (*oracle) return r.oracle();
    if (*reproduce) return r.reproduce();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return mismatch;
  }
  return usage;
}

}  // namespace peano::cli
