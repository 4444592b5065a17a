#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pts/completeness.hpp"
#include "pts/cps.hpp"
#include "pts/derivation.hpp"
#include "pts/equiv.hpp"
#include "pts/error.hpp"
#include "pts/g4ip.hpp"
#include "pts/search.hpp"
#include "pts/support.hpp"

using nlohmann::json;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pts::Error("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Report {
  std::string command;
  json result;
  json counterexamples = json::array();
  double timingMs = 0;

  json toJson() const {
    return json{{"command", command},
                {"result", result},
                {"counterexamples", counterexamples},
                {"timing_ms", timingMs}};
  }
};

class Timer {
public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
  }

private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

std::vector<std::string> parseAtomList(const std::string& text) {
  std::vector<std::string> atoms;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string name = text.substr(pos, comma - pos);
    std::erase_if(name, ::isspace);
    if (!name.empty()) atoms.push_back(name);
    pos = comma + 1;
  }
  return atoms;
}

std::uint64_t parseMask(const std::string& text) {
  std::string t = text;
  std::erase_if(t, ::isspace);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw pts::Error("expected a rule-index set like {0,2}");
  std::uint64_t mask = 0;
  std::size_t pos = 1;
  while (pos < t.size() - 1) {
    std::size_t comma = t.find(',', pos);
    if (comma == std::string::npos || comma > t.size() - 1) comma = t.size() - 1;
    std::string num = t.substr(pos, comma - pos);
    if (!num.empty()) mask |= std::uint64_t{1} << std::stoul(num);
    pos = comma + 1;
  }
  return mask;
}

json proofToJson(const pts::NDProof& p) {
  json node;
  node["rule"] = pts::ruleName(p.rule);
  node["conclusion"] = pts::printFormula(p.conclusion);
  if (p.discharge1) node["discharges"] = pts::printFormula(p.discharge1);
  if (p.discharge2) node["discharges_right"] = pts::printFormula(p.discharge2);
  json premises = json::array();
  for (const auto& q : p.premises) premises.push_back(proofToJson(q));
  if (!premises.empty()) node["premises"] = premises;
  return node;
}

json derivationToJson(const pts::DerivationTree& t) {
  json node;
  node["kind"] = t.isRef ? "ref" : "app";
  node["atom"] = t.atom;
  node["context"] = t.context;
  if (!t.isRef) {
    node["rule"] = t.ruleIndex;
    json children = json::array();
    for (const auto& c : t.children) children.push_back(derivationToJson(c));
    node["children"] = children;
  }
  return node;
}

void emit(const Report& report, bool asJson, const std::string& humanLine) {
  if (asJson)
    std::cout << report.toJson().dump(2) << "\n";
  else
    std::cout << humanLine << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"base-extension semantics workbench"};
  app.require_subcommand(1);
  bool asJson = false;
  app.add_flag("--json", asJson, "machine-readable output");

  // derive
  auto* derive = app.add_subcommand("derive", "atomic derivability in a base");
  std::string baseFile, contextArg, atomArg;
  bool deriveTreeFlag = false;
  derive->add_option("--base", baseFile, "base file")->required();
  derive->add_option("--context", contextArg, "comma-separated context atoms");
  derive->add_option("--atom", atomArg, "goal atom")->required();
  derive->add_flag("--tree", deriveTreeFlag, "print the derivation tree");

  // support / valid
  auto* support = app.add_subcommand("support", "support of a formula at a base");
  std::string universeFile, baseSpec, formulaArg;
  support->add_option("--universe", universeFile, "universe file")->required();
  support->add_option("--base", baseSpec, "base as a rule-index set, e.g. {0,2}")->required();
  support->add_option("--formula", formulaArg, "formula")->required();

  auto* valid = app.add_subcommand("valid", "validity of a sequent over a universe");
  std::string validUniverse, validSequent;
  valid->add_option("--universe", validUniverse, "universe file")->required();
  valid->add_option("--sequent", validSequent, "sequent")->required();

  // prove / prove-via-base / flatten
  auto* prove = app.add_subcommand("prove", "intuitionistic provability (sequent calculus)");
  std::string proveSequent;
  prove->add_option("--sequent", proveSequent, "sequent")->required();

  auto* proveVia = app.add_subcommand("prove-via-base", "provability via the generated base");
  std::string proveViaSequent;
  bool witnessFlag = false;
  proveVia->add_option("--sequent", proveViaSequent, "sequent")->required();
  proveVia->add_flag("--witness", witnessFlag, "include the translated proof");

  auto* flattenCmd = app.add_subcommand("flatten", "print the flattening table and base N");
  std::string flattenSequent;
  flattenCmd->add_option("--sequent", flattenSequent, "sequent")->required();

  // dagger-check
  auto* dagger = app.add_subcommand("dagger-check", "formula/flat-atom support agreement");
  std::string daggerSequent;
  std::vector<std::string> extraRules;
  dagger->add_option("--sequent", daggerSequent, "sequent")->required();
  dagger->add_option("--extra", extraRules, "extra rule (repeatable)");

  // equiv-check
  auto* equiv = app.add_subcommand("equiv-check", "support vs J-interpretation agreement");
  std::string equivUniverse;
  int maxDepth = 3;
  equiv->add_option("--universe", equivUniverse, "universe file")->required();
  equiv->add_option("--max-depth", maxDepth, "formula depth bound (default 3)");

  // cps
  auto* cps = app.add_subcommand("cps", "lambda-calculus and CPS tools");
  cps->require_subcommand(1);
  std::string termArg, envArg;
  std::size_t steps = 10000;
  bool traceFlag = false;
  auto addTermOpts = [&](CLI::App* sub, bool withSteps) {
    sub->add_option("--term", termArg, "lambda term")->required();
    if (withSteps) {
      sub->add_option("--steps", steps, "step budget");
      sub->add_flag("--trace", traceFlag, "print each reduction step");
    }
  };
  auto* cpsTransformCmd = cps->add_subcommand("transform", "CPS-transform a term");
  addTermOpts(cpsTransformCmd, false);
  auto* cpsEval = cps->add_subcommand("eval", "call-by-value evaluation");
  addTermOpts(cpsEval, true);
  auto* cpsRun = cps->add_subcommand("run", "run the CPS transform with a halt continuation");
  addTermOpts(cpsRun, true);
  auto* cpsTypeCmd = cps->add_subcommand("type", "simple-type a term / show its CPS type");
  cpsTypeCmd->add_option("--term", termArg, "lambda term")->required();
  cpsTypeCmd->add_option("--env", envArg, "bindings, e.g. 'C: a, f: a -> b'");

  // search
  auto* search = app.add_subcommand("search", "backtracking proof search with continuations");
  std::string programFile, goalArg;
  std::size_t depthCap = 64;
  search->add_option("--program", programFile, "program file")->required();
  search->add_option("--goal", goalArg, "goal atom")->required();
  search->add_option("--depth", depthCap, "depth cap");
  search->add_flag("--trace", traceFlag, "print the search trace");

  CLI11_PARSE(app, argc, argv);

  try {
    Timer timer;
    Report report;

    if (*derive) {
      report.command = "derive";
      pts::Base base = pts::parseBaseFile(readFile(baseFile));
      std::vector<std::string> context = parseAtomList(contextArg);
      bool ok = pts::derives(base, context, atomArg);
      report.result = ok;
      if (deriveTreeFlag && ok) {
        auto tree = pts::deriveTree(base, context, atomArg);
        report.result = json{{"derivable", true}, {"tree", derivationToJson(*tree)}};
      }
      report.timingMs = timer.ms();
      emit(report, asJson, ok ? "derivable" : "not derivable");
      return ok ? kExitYes : kExitNo;
    }

    if (*support) {
      report.command = "support";
      pts::WorldUniverse u = pts::parseUniverseFile(readFile(universeFile));
      auto idx = u.indexOfMask(parseMask(baseSpec));
      if (!idx) throw pts::Error("base " + baseSpec + " is not a member of the universe");
      pts::SupportEngine engine(u);
      bool ok = engine.supports(*idx, pts::parseFormula(formulaArg));
      report.result = ok;
      report.timingMs = timer.ms();
      emit(report, asJson, ok ? "supported" : "not supported");
      return ok ? kExitYes : kExitNo;
    }

    if (*valid) {
      report.command = "valid";
      pts::WorldUniverse u = pts::parseUniverseFile(readFile(validUniverse));
      pts::Sequent s = pts::parseSequent(validSequent);
      pts::SupportEngine engine(u);
      bool ok = engine.valid(s.antecedents, s.succedent);
      report.result = ok;
      report.timingMs = timer.ms();
      emit(report, asJson, ok ? "valid" : "not valid");
      return ok ? kExitYes : kExitNo;
    }

    if (*prove) {
      report.command = "prove";
      bool ok = pts::g4ipProvable(pts::parseSequent(proveSequent));
      report.result = json{{"provable", ok}, {"method", "g4ip"}};
      report.timingMs = timer.ms();
      emit(report, asJson, ok ? "provable" : "not provable");
      return ok ? kExitYes : kExitNo;
    }

    if (*proveVia) {
      report.command = "prove-via-base";
      pts::Sequent s = pts::parseSequent(proveViaSequent);
      if (witnessFlag) {
        auto witness = pts::proveViaBaseWitness(s);
        bool ok = witness.has_value();
        report.result = json{{"provable", ok}, {"method", "base-N"}};
        if (ok) report.result["witness"] = proofToJson(witness->proof);
        report.timingMs = timer.ms();
        emit(report, asJson, ok ? "provable" : "not provable");
        return ok ? kExitYes : kExitNo;
      }
      bool ok = pts::proveViaBase(s);
      report.result = json{{"provable", ok}, {"method", "base-N"}};
      report.timingMs = timer.ms();
      emit(report, asJson, ok ? "provable" : "not provable");
      return ok ? kExitYes : kExitNo;
    }

    if (*flattenCmd) {
      pts::NBase nb = pts::buildBaseN(pts::parseSequent(flattenSequent));
      std::string out;
      for (std::size_t i = 0; i < nb.flat.compounds.size(); ++i)
        out += "# " + nb.flat.freshNames[i] + " <-> " + pts::printFormula(nb.flat.compounds[i]) +
               "\n";
      out += pts::printBaseFile(nb.base);
      std::cout << out;
      return kExitYes;
    }

    if (*dagger) {
      report.command = "dagger-check";
      std::vector<pts::AtomicRule> extras;
      for (const auto& r : extraRules) extras.push_back(pts::parseRule(r));
      pts::DaggerReport dr = pts::checkDagger(pts::parseSequent(daggerSequent), extras);
      report.result = json{{"pass", dr.pass()},
                           {"worlds", dr.worlds},
                           {"formulas_checked", dr.formulasChecked}};
      for (const auto& ce : dr.counterexamples)
        report.counterexamples.push_back(json{{"world", ce.world},
                                              {"formula", ce.formula},
                                              {"supports_flat", ce.supportsFlat},
                                              {"supports_formula", ce.supportsFormula}});
      report.timingMs = timer.ms();
      std::string line = dr.pass()
                             ? "agreement on " + std::to_string(dr.formulasChecked) +
                                   " formulas over " + std::to_string(dr.worlds) + " worlds"
                             : std::to_string(dr.counterexamples.size()) + " counterexample(s); first: " +
                                   dr.counterexamples[0].formula + " at " +
                                   dr.counterexamples[0].world;
      emit(report, asJson, line);
      return dr.pass() ? kExitYes : kExitNo;
    }

    if (*equiv) {
      report.command = "equiv-check";
      pts::WorldUniverse u = pts::parseUniverseFile(readFile(equivUniverse));
      pts::EquivReport er = pts::checkSupportVsJ(u, maxDepth);
      report.result = json{{"pass", er.pass()},
                           {"signatures_checked", er.formulasChecked},
                           {"worlds", er.universeWorlds}};
      for (const auto& ce : er.counterexamples)
        report.counterexamples.push_back(json{{"formula", ce.formula},
                                              {"world", ce.world},
                                              {"supports", ce.lhs},
                                              {"j_interpretation", ce.rhs}});
      report.timingMs = timer.ms();
      std::string line = er.pass() ? "agreement across " + std::to_string(er.formulasChecked) +
                                         " formula signatures"
                                   : "counterexample: " + er.counterexamples[0].formula + " at " +
                                         er.counterexamples[0].world;
      emit(report, asJson, line);
      return er.pass() ? kExitYes : kExitNo;
    }

    if (*cpsTransformCmd) {
      report.command = "cps transform";
      pts::TermRef out = pts::cpsTransform(pts::parseTerm(termArg));
      report.result = pts::printTerm(out);
      report.timingMs = timer.ms();
      emit(report, asJson, pts::printTerm(out));
      return kExitYes;
    }

    if (*cpsEval || *cpsRun) {
      bool isRun = cpsRun->parsed();
      report.command = isRun ? "cps run" : "cps eval";
      pts::TermRef term = pts::parseTerm(termArg);
      std::vector<std::string> trace;
      pts::EvalOutcome out = isRun ? pts::runCps(term, steps, traceFlag ? &trace : nullptr)
                                   : pts::evalCbv(term, steps, traceFlag ? &trace : nullptr);
      if (traceFlag && !asJson)
        for (std::size_t i = 0; i < trace.size(); ++i)
          std::cout << (i ? "  ~> " : "     ") << trace[i] << "\n";
      bool ok = out.status == pts::EvalOutcome::Status::Value;
      report.result =
          json{{"status", ok          ? "value"
                          : out.status == pts::EvalOutcome::Status::Timeout ? "timeout"
                                                                            : "stuck"},
               {"term", pts::printTerm(out.term)},
               {"steps", out.steps}};
      if (!out.detail.empty()) report.result["detail"] = out.detail;
      if (traceFlag && asJson) report.result["trace"] = trace;
      report.timingMs = timer.ms();
      emit(report, asJson,
           ok ? pts::printTerm(out.term)
              : (out.status == pts::EvalOutcome::Status::Timeout ? "timeout after " : "stuck: ") +
                    (out.status == pts::EvalOutcome::Status::Timeout
                         ? std::to_string(out.steps) + " steps"
                         : out.detail));
      return ok ? kExitYes : kExitNo;
    }

    if (*cpsTypeCmd) {
      report.command = "cps type";
      pts::TermRef term = pts::parseTerm(termArg);
      pts::TypeEnv env = envArg.empty() ? pts::TypeEnv{} : pts::parseTypeEnv(envArg);
      std::string error;
      auto ty = pts::typecheck(env, term, &error);
      if (!ty) {
        report.result = json{{"typed", false}, {"error", error}};
        report.timingMs = timer.ms();
        emit(report, asJson, "type error: " + error);
        return kExitNo;
      }
      json result{{"typed", true}, {"type", pts::printType(*ty)}};
      std::string line = pts::printType(*ty);
      try {
        pts::TypeRef transformed = pts::cpsType(*ty);
        result["cps_type"] = pts::printType(transformed);
        line += "   (CPS: " + pts::printType(transformed) + ")";
      } catch (const pts::Error&) {
        // term already mentions R; no CPS type to report
      }
      report.result = result;
      report.timingMs = timer.ms();
      emit(report, asJson, line);
      return kExitYes;
    }

    if (*search) {
      report.command = "search";
      pts::Program program = pts::parseProgramFile(readFile(programFile));
      pts::SolveResult out = pts::solve(program, goalArg, depthCap);
      if (traceFlag && !asJson)
        for (const auto& e : out.trace) std::cout << pts::printEvent(e) << "\n";
      const char* status = out.status == pts::SolveStatus::Proved    ? "proved"
                           : out.status == pts::SolveStatus::Refuted ? "refuted"
                                                                     : "unknown (depth cap)";
      report.result = json{{"status", status}};
      if (asJson) {
        json tr = json::array();
        for (const auto& e : out.trace) tr.push_back(pts::printEvent(e));
        report.result["trace"] = tr;
      }
      report.timingMs = timer.ms();
      emit(report, asJson, status);
      return out.status == pts::SolveStatus::Proved ? kExitYes : kExitNo;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
