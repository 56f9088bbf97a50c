#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "suites.hpp"

using namespace chevalley;
using namespace chevalley::cli;

namespace {

enum Exit { Ok = 0, Failure = 1, BadInput = 2, NotIntegral = 3, Hypothesis = 4 };

struct Options {
  std::string type;
  std::string module = "sc-default";
  std::string word_file;
  std::uint64_t seed = 0;
  bool json = false;
  std::string out;
};

class Output {
 public:
  explicit Output(std::string const& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::shared_ptr<RootSystem const> root_system(Options const& o) {
  return std::make_shared<RootSystem const>(CartanType::parse(o.type));
}

std::shared_ptr<WeightModule const> build_module(Options const& o) {
  auto g = std::make_shared<LieAlgebra const>(root_system(o));
  return std::make_shared<WeightModule const>(g, parse_module_spec(g->roots(), o.module));
}

Word read_word(RootSystem const& rs, std::string const& path) {
  std::stringstream text;
  if (path.empty() || path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    text << in.rdbuf();
  }
  return parse_word(rs, text.str());
}

std::string vec_text(IntVec const& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

int cmd_roots(Options const& o) {
  auto rs = root_system(o);
  Output out(o.out);
  auto doc = root_system_json(*rs);
  if (o.json) {
    out.stream() << doc.dump(2) << "\n";
    return Ok;
  }
  auto& s = out.stream();
  s << "type " << rs->type().name() << ", rank " << rs->rank() << ", " << rs->num_positive() << " positive roots\n";
  s << "cartan matrix (A_ij = <alpha_i, h_j>):\n";
  for (auto const& row : rs->cartan()) s << "  " << vec_text(row) << "\n";
  s << "fundamental group P/Q: ";
  auto group = rs->fundamental_group();
  if (group.empty()) s << "trivial";
  for (std::size_t k = 0; k < group.size(); ++k) s << (k ? " x " : "") << "Z/" << group[k].get_str();
  s << "\npositive roots (simple-root coordinates, height, length):\n";
  for (int k = 0; k < rs->num_positive(); ++k)
    s << "  " << vec_text(rs->root(k)) << "  " << rs->height(k) << "  " << rs->length(k) << "\n";
  return Ok;
}

int cmd_verify(Options const& o, std::string const& suite) {
  SuiteConfig cfg{build_module(o), o.seed};
  std::vector<CheckResult> results;
  auto run = [&](std::string const& name, auto fn) {
    if (suite == name || suite == "all") {
      auto r = fn(cfg);
      results.insert(results.end(), r.begin(), r.end());
    }
  };
  run("algebra", algebra_suite);
  run("module", module_suite);
  run("group", group_suite);
  run("integrality", integrality_suite);
  bool passed = std::all_of(results.begin(), results.end(), [](auto const& r) { return r.passed; });
  Output out(o.out);
  if (o.json) {
    Json list = Json::array();
    for (auto const& r : results)
      list.push_back({{"suite", r.suite}, {"anchor", r.anchor}, {"check", r.check}, {"passed", r.passed}, {"detail", r.detail}});
    Json doc{{"type", cfg.module->roots().type().name()},
             {"module", cfg.module->highest_weights()},
             {"seed", o.seed},
             {"results", list},
             {"passed", passed}};
    out.stream() << doc.dump(2) << "\n";
  } else {
    auto& s = out.stream();
    s << "verify " << suite << " on " << cfg.module->roots().type().name() << ", module " << o.module << " (dim "
      << cfg.module->dim() << "), seed " << o.seed << "\n";
    for (auto const& r : results) {
      s << (r.passed ? "PASS " : "FAIL ") << "[" << r.suite << "] " << r.anchor << ": " << r.check;
      if (!r.detail.empty()) s << " (" << r.detail << ")";
      s << "\n";
    }
    s << (passed ? "all checks passed" : "FAILED") << "\n";
  }
  return passed ? Ok : Failure;
}

int cmd_decide(Options const& o) {
  auto v = build_module(o);
  Word w = read_word(v->roots(), o.word_file);
  if (!v->has_regular_summand()) throw HypothesisViolation("module has no summand with a regular highest weight");
  auto verdict = integrality_decide(v, standard_lattice(*v), w);
  Output out(o.out);
  auto doc = verdict_json(v->roots(), verdict);
  if (o.json) {
    out.stream() << doc.dump(2) << "\n";
  } else if (verdict.in_gz) {
    out.stream() << "in G(Z); certificate: " << doc["certificate"].dump() << "\n";
  } else {
    out.stream() << "not integral; witness: " << doc["witness"].dump() << "\n";
  }
  return verdict.in_gz ? Ok : NotIntegral;
}

int cmd_iwasawa(Options const& o) {
  auto v = build_module(o);
  Word w = read_word(v->roots(), o.word_file);
  auto d = iwasawa_decompose(v, w);
  bool exact = GroupElement(v, d.recomposed()).equals(GroupElement(v, w));
  Output out(o.out);
  auto doc = decomposition_json(v->roots(), d, exact);
  out.stream() << (o.json ? doc.dump(2) : doc.dump()) << "\n";
  return exact ? Ok : Failure;
}

int cmd_factorize(Options const& o) {
  auto v = build_module(o);
  Word w = read_word(v->roots(), o.word_file);
  GroupElement g(v, w);
  Json doc;
  try {
    auto coords = unipotent_factorize(g);
    doc = Json{{"kind", "unipotent"},
               {"u", coords_json(v->roots(), coords)},
               {"exact", GroupElement(v, coords.word()).equals(g)}};
  } catch (NotUnipotent const&) {
    std::vector<Rational> t;
    try {
      t = toral_factorize(g);
    } catch (std::domain_error const&) {
      throw std::domain_error("element is neither in U(Q) nor in H(Q); use iwasawa");
    }
    Word again;
    for (int i = 0; i < v->rank(); ++i) again.push_back(Letter::torus(i, t[i]));
    doc = Json{{"kind", "torus"}, {"h", torus_json(t)}, {"exact", GroupElement(v, again).equals(g)}};
  }
  Output out(o.out);
  out.stream() << (o.json ? doc.dump(2) : doc.dump()) << "\n";
  return doc["exact"].get<bool>() ? Ok : Failure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chevalley groups over Q: integrality and decompositions"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--type", o.type, "Cartan type, e.g. A2, G2, D4")->required();
  app.add_option("--module", o.module, "sc-default, adjoint, or highest weights \"1,0;0,1\"");
  app.add_option("--word", o.word_file, "JSON word file (- for stdin)");
  app.add_option("--seed", o.seed, "root seed for the verification suites");
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--out", o.out, "write the report to a file");

  auto roots = app.add_subcommand("roots", "root system data");
  std::string suite = "all";
  auto verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", suite, "algebra | module | group | integrality | all")
      ->check(CLI::IsMember({"algebra", "module", "group", "integrality", "all"}));
  auto decide = app.add_subcommand("decide", "decide membership in G(Z)");
  auto iwasawa = app.add_subcommand("iwasawa", "gamma u h decomposition of a word");
  auto factorize = app.add_subcommand("factorize", "factor a unipotent or toral element");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return BadInput;
  }

  try {
    if (*roots) return cmd_roots(o);
    if (*verify) return cmd_verify(o, suite);
    if (*decide) return cmd_decide(o);
    if (*iwasawa) return cmd_iwasawa(o);
    if (*factorize) return cmd_factorize(o);
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return BadInput;
  } catch (HypothesisViolation const& e) {
    std::cerr << "hypothesis not met: " << e.what() << "\n";
    return Hypothesis;
  } catch (std::invalid_argument const& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return BadInput;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Failure;
  }
  return Failure;
}
