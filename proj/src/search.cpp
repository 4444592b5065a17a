#include "pts/search.hpp"

#include <algorithm>
#include <functional>

#include "pts/derivation.hpp"
#include "pts/error.hpp"
#include "pts/formula.hpp"

namespace pts {

std::vector<std::string> Program::atoms() const {
  std::vector<std::string> out;
  for (const auto& c : clauses) {
    out.push_back(c.head);
    for (const auto& b : c.body) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Program parseProgramFile(std::string_view text) {
  Program p;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] != '#') {
      std::string body = line.substr(first);
      Clause c;
      std::size_t arrow = body.find("->");
      std::string headPart = arrow == std::string::npos ? body : body.substr(arrow + 2);
      if (arrow != std::string::npos) {
        std::size_t pos = 0;
        std::string antecedents = body.substr(0, arrow);
        while (pos < antecedents.size()) {
          std::size_t amp = antecedents.find('&', pos);
          if (amp == std::string::npos) amp = antecedents.size();
          std::string atom = antecedents.substr(pos, amp - pos);
          atom.erase(std::remove_if(atom.begin(), atom.end(), ::isspace), atom.end());
          if (!isValidAtomName(atom)) throw Error("invalid atom '" + atom + "' in program");
          c.body.push_back(atom);
          pos = amp + 1;
        }
      }
      headPart.erase(std::remove_if(headPart.begin(), headPart.end(), ::isspace), headPart.end());
      if (!isValidAtomName(headPart)) throw Error("invalid atom '" + headPart + "' in program");
      c.head = headPart;
      p.clauses.push_back(std::move(c));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return p;
}

std::string printEvent(const SearchEvent& e) {
  switch (e.kind) {
    case SearchEvent::Kind::TryClause:
      return "try " + e.goal + " <- clause " + std::to_string(e.clause);
    case SearchEvent::Kind::Fail:
      return "fail " + e.goal;
    case SearchEvent::Kind::Succeed:
      return "succeed " + e.goal;
    case SearchEvent::Kind::SwapContinuation:
      return "swap continuation: clause " + std::to_string(e.from) + " -> clause " +
             std::to_string(e.to);
  }
  return "?";
}

namespace {

struct DepthCapHit {};

struct Searcher {
  const Program& program;
  std::size_t depthCap;
  std::vector<SearchEvent>& trace;

  // Failure continuations take no arguments; success continuations take
  // the failure continuation current at their success point, so that
  // later failures can resume earlier alternatives.
  using FailK = std::function<bool()>;
  using SuccessK = std::function<bool(const FailK&)>;

  bool solveAtom(const std::string& goal, std::size_t depth, const SuccessK& sk,
                 const FailK& fk) {
    if (depth > depthCap) throw DepthCapHit{};
    std::vector<int> matches;
    for (std::size_t i = 0; i < program.clauses.size(); ++i)
      if (program.clauses[i].head == goal) matches.push_back(static_cast<int>(i));
    if (matches.empty()) {
      trace.push_back({SearchEvent::Kind::Fail, goal, -1, -1, -1});
      return fk();
    }
    return tryAlternative(goal, depth, matches, 0, sk, fk);
  }

  bool tryAlternative(const std::string& goal, std::size_t depth, const std::vector<int>& matches,
                      std::size_t idx, const SuccessK& sk, const FailK& fk) {
    int clause = matches[idx];
    trace.push_back({SearchEvent::Kind::TryClause, goal, clause, -1, -1});
    // On failure of this alternative, swap in the next one; after the
    // last, record the goal's failure and resume the caller's handler.
    FailK onFail = [this, goal, depth, &matches, idx, clause, &sk, &fk]() -> bool {
      if (idx + 1 < matches.size()) {
        trace.push_back({SearchEvent::Kind::SwapContinuation, "", -1, clause, matches[idx + 1]});
        return tryAlternative(goal, depth, matches, idx + 1, sk, fk);
      }
      trace.push_back({SearchEvent::Kind::Fail, goal, -1, -1, -1});
      return fk();
    };
    SuccessK onSuccess = [this, goal, &sk](const FailK& residual) -> bool {
      trace.push_back({SearchEvent::Kind::Succeed, goal, -1, -1, -1});
      return sk(residual);
    };
    return solveBody(program.clauses[clause].body, 0, depth, onSuccess, onFail);
  }

  bool solveBody(const std::vector<std::string>& body, std::size_t i, std::size_t depth,
                 const SuccessK& sk, const FailK& fk) {
    if (i == body.size()) return sk(fk);
    SuccessK rest = [this, &body, i, depth, &sk](const FailK& residual) -> bool {
      return solveBody(body, i + 1, depth, sk, residual);
    };
    return solveAtom(body[i], depth + 1, rest, fk);
  }
};

}  // namespace

SolveResult solve(const Program& p, const std::string& goal, std::size_t depthCap) {
  SolveResult result;
  Searcher s{p, depthCap, result.trace};
  try {
    bool proved = s.solveAtom(
        goal, 0, [](const Searcher::FailK&) { return true; }, []() { return false; });
    result.status = proved ? SolveStatus::Proved : SolveStatus::Refuted;
  } catch (const DepthCapHit&) {
    result.status = SolveStatus::DepthCapped;
  }
  return result;
}

Base programBase(const Program& p) {
  std::vector<AtomicRule> rules;
  for (const auto& c : p.clauses) {
    AtomicRule r;
    r.conclusion = c.head;
    for (const auto& b : c.body) r.antecedents.push_back({{}, b});
    rules.push_back(std::move(r));
  }
  return Base(p.atoms(), std::move(rules));
}

AgreementReport solveAgreesWithDerivability(const Program& p, std::size_t depthCap) {
  AgreementReport report;
  report.consistent = true;
  Base base = programBase(p);
  for (const auto& atom : p.atoms()) {
    SolveResult r = solve(p, atom, depthCap);
    bool derivable = derives(base, {}, atom);
    bool flagged = r.status == SolveStatus::DepthCapped;
    if (r.status == SolveStatus::Proved && !derivable) report.consistent = false;
    if (r.status == SolveStatus::Refuted && derivable) report.consistent = false;
    report.items.push_back({atom, r.status, derivable, flagged});
  }
  return report;
}

}  // namespace pts
