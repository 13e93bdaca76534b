#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "llmfoc/analysis.hpp"
#include "llmfoc/proof_io.hpp"
#include "llmfoc/rewrite.hpp"
#include "llmfoc/search.hpp"

using namespace llmfoc;

namespace {

// Exit codes: 0 success/valid, 1 semantic negative, 2 usage/parse error.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

bool use_color() {
  const char* v = std::getenv("LLMFOC_COLOR");
  return v && std::string(v) == "1";
}

std::string green(const std::string& s) {
  return use_color() ? "\033[32m" + s + "\033[0m" : s;
}
std::string red(const std::string& s) {
  return use_color() ? "\033[31m" + s + "\033[0m" : s;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& out_file, const std::string& text) {
  if (out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_file, std::ios::binary);
    if (!out) throw ParseError(0, 0, "cannot write " + out_file);
    out << text;
  }
}

struct Common {
  bool json = false;
  std::string out_file;
};

int cmd_check(const std::vector<std::string>& files, bool experimental, bool json) {
  int rc = kOk;
  nlohmann::json jall = nlohmann::json::array();
  for (const auto& file : files) {
    ValidityReport rep;
    try {
      DerivPtr d = parse_proof(slurp(file));
      rep = check(d, experimental ? Mode::Experimental : Mode::Strict);
    } catch (const SchemaError& e) {
      rep.ok = false;
      nlohmann::json j{{"file", file},
                       {"ok", false},
                       {"violations",
                        {{{"path", e.node_path}, {"rule", e.rule},
                          {"message", e.clause}}}}};
      if (json) {
        jall.push_back(j);
      } else {
        std::cout << file << ": " << red("invalid") << "\n";
        std::cout << "  " << e.node_path << " [" << e.rule << "] " << e.clause << "\n";
      }
      rc = kNegative;
      continue;
    }
    if (json) {
      nlohmann::json j = report_to_json(rep);
      j["file"] = file;
      jall.push_back(j);
    } else if (rep.ok) {
      std::cout << file << ": " << green("ok") << "\n";
    } else {
      std::cout << file << ": " << red("invalid") << "\n";
      for (const auto& v : rep.violations) std::cout << "  " << to_string(v) << "\n";
    }
    if (!rep.ok) rc = kNegative;
  }
  if (json) std::cout << jall.dump(2) << "\n";
  return rc;
}

int cmd_cutelim(const std::string& file, bool strict, bool paranoid, bool trace,
                const Common& c) {
  DerivPtr d = parse_proof(slurp(file));
  ReduceOptions opts;
  opts.flexible = !strict;
  opts.paranoid = paranoid;
  opts.trace = trace;
  NormalizeResult res = normalize(d, opts);
  if (c.json) {
    nlohmann::json j = proof_to_json(res.result);
    if (trace) {
      auto steps = nlohmann::json::array();
      for (const auto& s : res.trace.steps)
        steps.push_back(nlohmann::json{
            {"step", s.step},
            {"path", path_str(s.path)},
            {"before,", s.before.str()},
            {"after", s.after.str()},
            {"spawned", s.spawned},
            {"coercions", s.coercions}});
      j["trace"] = steps;
    }
    emit(c.out_file, j.dump(2) + "\n");
  } else {
    emit(c.out_file, print_proof(res.result));
    if (trace)
      for (const auto& s : res.trace.steps) std::cerr << s.line() << "\n";
  }
  return kOk;
}

int cmd_decompose(const std::string& file, size_t focus, const Common& c) {
  DerivPtr d = parse_proof(slurp(file));
  DecompResult res = decompose(d, focus);
  int in_size = dsize(d), core_size = dsize(res.core);
  size_t steps = res.suffix.steps();
  if (c.json) {
    nlohmann::json j;
    j["core"] = proof_to_json(res.core);
    auto sig = nlohmann::json::array();
    for (const auto& it : res.sigma)
      sig.push_back(nlohmann::json{{"focus", it.focused},
                                   {"formula", formula_to_json(it.f)}});
    j["sigma"] = sig;
    auto frames = nlohmann::json::array();
    for (const auto& f : res.suffix.frames) {
      nlohmann::json jf;
      jf["kind"] = f.kind == Frame::Kind::Tensor ? "tensor" : "plus";
      jf["steps"] = f.steps();
      jf["a"] = formula_to_json(f.a);
      jf["b"] = formula_to_json(f.b);
      if (f.kind == Frame::Kind::Tensor) {
        jf["hole"] = f.hole_left ? "left" : "right";
        jf["captured"] = proof_to_json(f.captured);
      } else {
        jf["side"] = f.plus_left ? "left" : "right";
      }
      frames.push_back(jf);
    }
    j["suffix"] = frames;
    j["sizes"] = {{"input", in_size}, {"core", core_size}, {"suffix", steps}};
    emit(c.out_file, j.dump(2) + "\n");
  } else {
    std::string out = print_proof(res.core);
    out += "; sigma:";
    for (const auto& it : res.sigma) {
      out += ' ';
      if (it.focused) out += "(focus " + print_formula(it.f) + ")";
      else out += print_formula(it.f);
    }
    out += "\n; suffix:\n";
    size_t i = 0;
    for (const auto& f : res.suffix.frames) {
      out += ";   frame " + std::to_string(i++) + ": ";
      if (f.kind == Frame::Kind::Tensor) {
        out += "tensor hole=" + std::string(f.hole_left ? "left" : "right") +
               " a=" + print_formula(f.a) + " b=" + print_formula(f.b) +
               " captured-size=" + std::to_string(dsize(f.captured));
      } else {
        out += std::string(f.plus_left ? "plusL" : "plusR") + " a=" +
               print_formula(f.a) + " b=" + print_formula(f.b);
      }
      out += "\n";
    }
    out += "; sizes: input=" + std::to_string(in_size) +
           " core=" + std::to_string(core_size) + " suffix=" + std::to_string(steps) +
           (in_size == core_size + static_cast<int>(steps) ? " (exact)" : " (MISMATCH)") +
           "\n";
    emit(c.out_file, out);
  }
  return kOk;
}

int cmd_lower(const std::string& file, size_t focus, const Common& c) {
  DerivPtr d = parse_proof(slurp(file));
  DerivPtr low = lower_deriv(d, focus);
  emit(c.out_file, c.json ? proof_to_json(low).dump(2) + "\n" : print_proof(low));
  return kOk;
}

int cmd_erase(const std::string& file, const Common& c) {
  DerivPtr d = parse_proof(slurp(file));
  UDerivPtr u = erase_derivation(d);
  UReport rep = check_dyadic(u);
  if (c.json) {
    nlohmann::json j;
    j["valid"] = rep.ok;
    j["violations"] = rep.violations;
    j["dyadic"] = print_udyadic(u);
    emit(c.out_file, j.dump(2) + "\n");
  } else {
    std::string out = print_udyadic(u);
    out += rep.ok ? "; dyadic: valid\n" : "; dyadic: INVALID\n";
    for (const auto& v : rep.violations) out += ";   " + v + "\n";
    emit(c.out_file, out);
  }
  return rep.ok ? kOk : kNegative;
}

int cmd_phases(const std::string& file, const Common& c) {
  DerivPtr d = parse_proof(slurp(file));
  std::vector<Phase> ps = phases(d);
  if (c.json) {
    auto j = nlohmann::json::array();
    for (const auto& p : ps) {
      auto foci = nlohmann::json::array();
      for (const auto& f : p.foci) foci.push_back(formula_to_json(f));
      j.push_back(nlohmann::json{{"decide", path_str(p.decide_path)},
                                 {"foci", foci},
                                 {"nodes", p.node_count}});
    }
    emit(c.out_file, j.dump(2) + "\n");
  } else {
    std::string out = std::to_string(ps.size()) + " phase(s)\n";
    for (const auto& p : ps) {
      out += "decide@" + path_str(p.decide_path) + ": foci={";
      for (size_t i = 0; i < p.foci.size(); i++) {
        if (i) out += ", ";
        out += print_formula(p.foci[i]);
      }
      out += "} nodes=" + std::to_string(p.node_count) + "\n";
    }
    emit(c.out_file, out);
  }
  return kOk;
}

int cmd_maximal(const std::string& file, int depth, bool assert_maximal,
                const Common& c) {
  DerivPtr d = parse_proof(slurp(file));
  MaximalityReport rep = check_maximal(d, depth);
  if (c.json) {
    auto j = nlohmann::json::array();
    for (const auto& e : rep.entries) {
      nlohmann::json je;
      je["decide"] = path_str(e.decide_path);
      je["status"] = e.status == MaximalityStatus::Maximal ? "maximal"
                     : e.status == MaximalityStatus::Extendable ? "extendable"
                                                                : "depth-exhausted";
      if (e.witness_formula) je["witness"] = formula_to_json(e.witness_formula);
      j.push_back(je);
    }
    emit(c.out_file, j.dump(2) + "\n");
  } else {
    std::string out;
    for (const auto& e : rep.entries) out += maximality_line(e) + "\n";
    if (rep.entries.empty()) out = "no decide nodes\n";
    emit(c.out_file, out);
  }
  return (assert_maximal && !rep.all_maximal()) ? kNegative : kOk;
}

int cmd_search(const std::string& sequent_text, int depth, bool all, size_t limit,
               int copies, const Common& c) {
  Sequent s = parse_sequent(sequent_text);
  SearchBudget budget;
  budget.depth = depth;
  budget.limit = all ? limit : 1;
  budget.copy_cap = copies;
  SearchResult res = enumerate_proofs(s, budget);
  if (c.json) {
    nlohmann::json j;
    j["count"] = res.proofs.size();
    j["depth_hit"] = res.depth_hit;
    auto arr = nlohmann::json::array();
    for (const auto& p : res.proofs) arr.push_back(proof_to_json(p));
    j["proofs"] = arr;
    emit(c.out_file, j.dump(2) + "\n");
  } else {
    std::string out;
    for (const auto& p : res.proofs) out += print_proof(p);
    if (res.proofs.empty())
      out = "no proof found" +
            std::string(res.depth_hit ? " (depth bound hit)" : "") + "\n";
    else if (all)
      out += "; " + std::to_string(res.proofs.size()) + " proof(s)\n";
    emit(c.out_file, out);
  }
  return res.proofs.empty() ? kNegative : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"llmfoc: proof kernel and cut-elimination engine for a multifocused "
               "polarized linear-logic sequent calculus"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_flag("--json", common.json, "emit JSON instead of text");
  app.add_option("-o,--out", common.out_file, "write output to a file");

  std::vector<std::string> files;
  bool experimental = false;
  auto* c_check = app.add_subcommand("check", "validate proof files");
  c_check->add_option("files", files)->required()->expected(-1);
  c_check->add_flag("--experimental", experimental, "admit acut nodes");

  std::string file;
  bool strict = false, flexible = false, paranoid = false, trace = false;
  auto* c_cut = app.add_subcommand("cutelim", "eliminate cuts");
  c_cut->add_option("file", file)->required();
  c_cut->add_flag("--strict", strict, "reject inversion-judgment cuts in the input");
  c_cut->add_flag("--flexible", flexible, "admit inversion-judgment cuts (default)");
  c_cut->add_flag("--paranoid", paranoid, "re-check after every step");
  c_cut->add_flag("--trace", trace, "print the reduction trace");

  size_t focus = 0;
  auto* c_dec = app.add_subcommand("decompose", "split a focused proof at a focus");
  c_dec->add_option("file", file)->required();
  c_dec->add_option("--focus", focus, "index of the designated focus")->required();

  auto* c_low = app.add_subcommand("lower", "invert the spent foci around a focus");
  c_low->add_option("file", file)->required();
  c_low->add_option("--focus", focus, "index of the designated focus");

  auto* c_erase = app.add_subcommand("erase", "erase to a dyadic derivation");
  c_erase->add_option("file", file)->required();

  auto* c_ph = app.add_subcommand("phases", "report the focusing phases");
  c_ph->add_option("file", file)->required();

  int depth = 8;
  bool assert_maximal = false;
  auto* c_max = app.add_subcommand("maximal", "per-decide maximality analysis");
  c_max->add_option("file", file)->required();
  c_max->add_option("--depth", depth, "search depth for extension probes");
  c_max->add_flag("--assert-maximal", assert_maximal,
                  "exit 1 unless every decide is maximal");

  std::string sequent_text;
  bool all = false;
  size_t limit = 100;
  int copies = 2;
  auto* c_search = app.add_subcommand("search", "bounded exhaustive proof search");
  c_search->add_option("sequent", sequent_text)->required();
  c_search->add_option("--depth", depth, "height bound");
  c_search->add_flag("--all", all, "enumerate instead of stopping at the first");
  c_search->add_option("--limit", limit, "enumeration cap");
  c_search->add_option("--copies", copies, "copy cap per decide");

  try {
    app.parse(argc, argv);
    if (*c_check) return cmd_check(files, experimental, common.json);
    if (*c_cut) {
      if (strict && flexible)
        throw CLI::ValidationError("--strict and --flexible are exclusive");
      return cmd_cutelim(file, strict, paranoid, trace, common);
    }
    if (*c_dec) return cmd_decompose(file, focus, common);
    if (*c_low) return cmd_lower(file, focus, common);
    if (*c_erase) return cmd_erase(file, common);
    if (*c_ph) return cmd_phases(file, common);
    if (*c_max) return cmd_maximal(file, depth, assert_maximal, common);
    if (*c_search) return cmd_search(sequent_text, depth, all, limit, copies, common);
    return kUsage;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kUsage : kOk;
  } catch (const ParseError& e) {
    std::cerr << red("error: ") << e.what() << "\n";
    return kUsage;
  } catch (const SchemaError& e) {
    std::cerr << red("error: ") << "invalid proof: " << e.what() << "\n";
    return kNegative;
  } catch (const IllFormedCut& e) {
    std::cerr << red("error: ") << e.what() << "\n";
    return kNegative;
  } catch (const NotSpent& e) {
    std::cerr << red("error: ") << e.what() << "\n";
    return kNegative;
  } catch (const InvalidInput& e) {
    std::cerr << red("error: ") << e.what() << "\n";
    return kNegative;
  } catch (const Error& e) {
    std::cerr << red("error: ") << e.what() << "\n";
    return kUsage;
  }
}
