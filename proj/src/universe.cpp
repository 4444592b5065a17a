#include "pts/universe.hpp"

#include <algorithm>
#include <cctype>

#include "pts/derivation.hpp"
#include "pts/error.hpp"

namespace pts {

void WorldUniverse::validateRules() const {
  Base check(atoms_, rules_);  // validates atom coverage
  for (std::size_t i = 0; i < rules_.size(); ++i)
    for (std::size_t j = i + 1; j < rules_.size(); ++j)
      if (rules_[i] == rules_[j])
        throw Error("duplicate rule in rule universe: '" + printRule(rules_[i]) + "'");
}

WorldUniverse WorldUniverse::allSubsets(std::vector<std::string> atoms,
                                        std::vector<AtomicRule> rules) {
  WorldUniverse u;
  u.atoms_ = std::move(atoms);
  std::sort(u.atoms_.begin(), u.atoms_.end());
  u.atoms_.erase(std::unique(u.atoms_.begin(), u.atoms_.end()), u.atoms_.end());
  u.rules_ = std::move(rules);
  for (auto& r : u.rules_) r.canonicalize();
  u.validateRules();
  if (u.rules_.size() > 20)
    throw Error("all-subsets universe refused: " + std::to_string(u.rules_.size()) +
                " rules would give 2^" + std::to_string(u.rules_.size()) +
                " worlds (cap is 20 rules); list the bases explicitly instead");
  u.allSubsets_ = true;
  std::size_t n = std::size_t{1} << u.rules_.size();
  u.worlds_.resize(n);
  for (std::size_t i = 0; i < n; ++i) u.worlds_[i] = i;
  return u;
}

WorldUniverse WorldUniverse::explicitFamily(std::vector<std::string> atoms,
                                            std::vector<AtomicRule> rules,
                                            std::vector<std::uint64_t> masks) {
  WorldUniverse u;
  u.atoms_ = std::move(atoms);
  std::sort(u.atoms_.begin(), u.atoms_.end());
  u.atoms_.erase(std::unique(u.atoms_.begin(), u.atoms_.end()), u.atoms_.end());
  u.rules_ = std::move(rules);
  for (auto& r : u.rules_) r.canonicalize();
  u.validateRules();
  if (u.rules_.size() > 64) throw Error("rule universe exceeds 64 rules");
  u.allSubsets_ = false;
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  if (masks.empty()) throw Error("universe declares no bases");
  std::uint64_t full = u.fullMask();
  for (auto m : masks)
    if (m & ~full) throw Error("base mask references a rule outside the universe");
  // Upward closure within the subset lattice: one-step closure suffices.
  auto maskName = [&](std::uint64_t m) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < u.rules_.size(); ++i)
      if (m & (std::uint64_t{1} << i)) {
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
      }
    return s + "}";
  };
  for (auto m : masks) {
    for (std::size_t r = 0; r < u.rules_.size(); ++r) {
      std::uint64_t s = m | (std::uint64_t{1} << r);
      if (s != m && !std::binary_search(masks.begin(), masks.end(), s))
        throw Error("explicit base family is not closed upward: contains " + maskName(m) +
                    " but not its extension " + maskName(s));
    }
  }
  u.worlds_ = std::move(masks);
  u.cones_.resize(u.worlds_.size());
  for (std::size_t i = 0; i < u.worlds_.size(); ++i)
    for (std::size_t j = 0; j < u.worlds_.size(); ++j)
      if ((u.worlds_[i] & ~u.worlds_[j]) == 0) u.cones_[i].push_back(j);
  return u;
}

Base WorldUniverse::worldBase(std::size_t w) const {
  std::vector<AtomicRule> rs;
  std::uint64_t m = worlds_[w];
  for (std::size_t i = 0; i < rules_.size(); ++i)
    if (m & (std::uint64_t{1} << i)) rs.push_back(rules_[i]);
  return Base(atoms_, std::move(rs));
}

std::string WorldUniverse::worldName(std::size_t w) const {
  std::string s = "{";
  bool first = true;
  std::uint64_t m = worlds_[w];
  for (std::size_t i = 0; i < rules_.size(); ++i)
    if (m & (std::uint64_t{1} << i)) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
  return s + "}";
}

std::optional<std::size_t> WorldUniverse::indexOfMask(std::uint64_t mask) const {
  if (allSubsets_) {
    if (mask > fullMask()) return std::nullopt;
    return static_cast<std::size_t>(mask);
  }
  auto it = std::lower_bound(worlds_.begin(), worlds_.end(), mask);
  if (it == worlds_.end() || *it != mask) return std::nullopt;
  return static_cast<std::size_t>(it - worlds_.begin());
}

std::optional<std::size_t> WorldUniverse::indexOfBase(const Base& b) const {
  if (b.atoms() != atoms_) return std::nullopt;
  std::uint64_t mask = 0;
  for (const auto& r : b.rules()) {
    auto it = std::find(rules_.begin(), rules_.end(), r);
    if (it == rules_.end()) return std::nullopt;
    mask |= std::uint64_t{1} << (it - rules_.begin());
  }
  return indexOfMask(mask);
}

void WorldUniverse::computeDerivSets() const {
  std::size_t nAtoms = atoms_.size();
  derivSets_.assign(nAtoms, Bits(worldCount()));
  Base full(atoms_, rules_);
  for (std::size_t w = 0; w < worldCount(); ++w) {
    Saturation sat(worldBase(w), {Bits(nAtoms)});
    Bits atomsDerived = sat.emptyContextAtoms();
    atomsDerived.forEach([&](std::size_t a) { derivSets_[a].set(w); });
  }
}

const Bits& WorldUniverse::derivSet(std::size_t atomIdx) const {
  if (derivSets_.empty()) computeDerivSets();
  return derivSets_[atomIdx];
}

const Bits& WorldUniverse::derivSet(const std::string& atom) const {
  return derivSet(atomIndex(atom));
}

std::size_t WorldUniverse::atomIndex(const std::string& atom) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom);
  if (it == atoms_.end() || *it != atom) throw Error("unknown atom '" + atom + "'");
  return static_cast<std::size_t>(it - atoms_.begin());
}

namespace {

std::vector<std::string> splitLines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.emplace_back(text.substr(start, end - start));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::string trimmed(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::uint64_t parseMaskLine(const std::string& line, std::size_t nRules) {
  std::string t = trimmed(line);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw Error("expected a rule-index set like {0,2}, got '" + t + "'");
  std::uint64_t mask = 0;
  std::string inner = t.substr(1, t.size() - 2);
  std::size_t pos = 0;
  while (pos < inner.size()) {
    while (pos < inner.size() &&
           (std::isspace(static_cast<unsigned char>(inner[pos])) || inner[pos] == ','))
      ++pos;
    if (pos >= inner.size()) break;
    std::size_t start = pos;
    while (pos < inner.size() && std::isdigit(static_cast<unsigned char>(inner[pos]))) ++pos;
    if (start == pos) throw Error("expected a rule index in '" + t + "'");
    std::size_t idx = std::stoul(inner.substr(start, pos - start));
    if (idx >= nRules) throw Error("rule index " + std::to_string(idx) + " out of range");
    mask |= std::uint64_t{1} << idx;
  }
  return mask;
}

}  // namespace

WorldUniverse parseUniverseFile(std::string_view text) {
  std::vector<std::string> atoms;
  std::vector<AtomicRule> rules;
  bool sawAtoms = false;
  enum class Section { None, Rules, Bases } section = Section::None;
  bool allSubsets = false;
  bool sawBases = false;
  std::vector<std::uint64_t> masks;

  for (const std::string& raw : splitLines(text)) {
    std::string line = trimmed(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.starts_with("atoms:")) {
      sawAtoms = true;
      std::string rest = trimmed(line.substr(6));
      std::size_t pos = 0;
      while (pos < rest.size()) {
        std::size_t comma = rest.find(',', pos);
        if (comma == std::string::npos) comma = rest.size();
        std::string name = trimmed(rest.substr(pos, comma - pos));
        if (!isValidAtomName(name)) throw Error("invalid atom name '" + name + "'");
        atoms.push_back(name);
        pos = comma + 1;
      }
      section = Section::None;
      continue;
    }
    if (line.starts_with("rules:")) {
      section = Section::Rules;
      continue;
    }
    if (line.starts_with("bases:")) {
      sawBases = true;
      std::string rest = trimmed(line.substr(6));
      if (rest == "all-subsets") {
        allSubsets = true;
        section = Section::None;
      } else if (rest.empty()) {
        section = Section::Bases;
      } else {
        throw Error("expected 'all-subsets' or a block of base lines after 'bases:'");
      }
      continue;
    }
    switch (section) {
      case Section::Rules: {
        // Optional "k:" index prefix; validated to be in declaration order.
        std::string body = line;
        std::size_t colon = body.find(':');
        if (colon != std::string::npos &&
            body.find_first_not_of("0123456789 \t") == colon) {
          std::size_t declared = std::stoul(body.substr(0, colon));
          if (declared != rules.size())
            throw Error("rule index " + std::to_string(declared) + " out of order (expected " +
                        std::to_string(rules.size()) + ")");
          body = trimmed(body.substr(colon + 1));
        }
        rules.push_back(parseRule(body));
        break;
      }
      case Section::Bases:
        masks.push_back(parseMaskLine(line, rules.size()));
        break;
      case Section::None:
        throw Error("unexpected line outside any section: '" + line + "'");
    }
  }

  if (!sawAtoms) throw Error("universe file is missing an 'atoms:' line");
  if (!sawBases) throw Error("universe file is missing a 'bases:' declaration");
  if (allSubsets) return WorldUniverse::allSubsets(std::move(atoms), std::move(rules));
  return WorldUniverse::explicitFamily(std::move(atoms), std::move(rules), std::move(masks));
}

}  // namespace pts
