#include "crn/network.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

namespace crn {

Network::Network(std::vector<std::string> species, std::vector<IntVector> complexes,
                 std::vector<Reaction> reactions)
    : species_(std::move(species)), complexes_(std::move(complexes)), reactions_(std::move(reactions)) {
  const std::size_t s = species_.size();
  std::set<std::string> names(species_.begin(), species_.end());
  if (names.size() != s) throw ContractError("duplicate species name");

  std::set<IntVector> seen;
  for (const auto& y : complexes_) {
    if (y.size() != s) throw ContractError("complex has wrong length");
    for (const auto& c : y)
      if (c < 0) throw ContractError("negative stoichiometric coefficient");
    if (!seen.insert(y).second) throw ContractError("duplicate complex " + format_complex(y));
  }

  std::set<std::pair<std::size_t, std::size_t>> edges;
  std::set<std::string> labels;
  for (const auto& r : reactions_) {
    if (r.source >= complexes_.size() || r.target >= complexes_.size())
      throw ContractError("reaction refers to an unknown complex");
    if (r.source == r.target) throw ContractError("loop reaction at " + complex_name(r.source));
    if (!edges.emplace(r.source, r.target).second)
      throw ContractError("repeated reaction " + complex_name(r.source) + " -> " +
                          complex_name(r.target));
    if (r.rate_label.empty()) throw ContractError("empty rate label");
    if (!labels.insert(r.rate_label).second)
      throw ContractError("rate label '" + r.rate_label + "' used twice");
  }
}

std::vector<std::string> Network::rate_labels() const {
  std::vector<std::string> out;
  for (const auto& r : reactions_) out.push_back(r.rate_label);
  return out;
}

std::string Network::format_complex(const IntVector& y) const {
  std::string out;
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (y[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (y[k] != 1) out += y[k].get_str() + " ";
    out += species_[k];
  }
  return out.empty() ? "0" : out;
}

std::string Network::complex_name(std::size_t i) const { return format_complex(complexes_.at(i)); }

// ---------------------------------------------------------------------------

RateAssignment::RateAssignment(std::map<std::string, Rational> values) {
  for (auto& [k, v] : values) set(k, v);
}

void RateAssignment::set(const std::string& label, const Rational& value) {
  if (value <= 0) throw ContractError("rate '" + label + "' must be positive");
  values_[label] = value;
}

const Rational& RateAssignment::at(const std::string& label) const {
  auto it = values_.find(label);
  if (it == values_.end()) throw ContractError("no rate assigned to label '" + label + "'");
  return it->second;
}

RationalVector RateAssignment::per_reaction(const Network& n) const {
  RationalVector out;
  for (const auto& r : n.reactions()) out.push_back(at(r.rate_label));
  return out;
}

RateAssignment random_rates(const Network& n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(1, 1L << 16);
  RateAssignment rates;
  for (const auto& r : n.reactions()) rates.set(r.rate_label, Rational(dist(rng)));
  return rates;
}

RateAssignment unit_rates(const Network& n) {
  RateAssignment rates;
  for (const auto& r : n.reactions()) rates.set(r.rate_label, 1);
  return rates;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

bool is_identifier(const std::string& s) {
  static const std::regex re("[A-Za-z_][A-Za-z0-9_]*");
  return std::regex_match(s, re);
}

IntVector parse_complex(const std::string& text, const std::map<std::string, std::size_t>& index,
                        std::size_t line) {
  static const std::regex term_re(R"(^(-?\d+)?\s*([A-Za-z_][A-Za-z0-9_]*)$)");
  IntVector y(index.size(), 0);
  const std::string body = trim(text);
  if (body.empty()) throw ParseError(line, "empty complex");
  if (body == "0") return y;
  for (const auto& raw : split(body, '+')) {
    const std::string term = trim(raw);
    std::smatch m;
    if (term.empty() || !std::regex_match(term, m, term_re))
      throw ParseError(line, "cannot read term '" + term + "'");
    Integer coeff = 1;
    if (m[1].matched) {
      coeff = Integer(m[1].str());
      if (coeff <= 0)
        throw ParseError(line, "nonpositive stoichiometric coefficient in '" + term + "'");
    }
    auto it = index.find(m[2].str());
    if (it == index.end()) throw ParseError(line, "unknown species '" + m[2].str() + "'");
    y[it->second] += coeff;
  }
  return y;
}

}  // namespace

Network parse_network(std::string_view text) {
  std::vector<std::string> species;
  std::map<std::string, std::size_t> index;
  std::vector<IntVector> complexes;
  std::map<IntVector, std::size_t> complex_index;
  std::vector<Reaction> reactions;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  std::set<std::string> labels;
  bool have_species = false;

  auto intern = [&](IntVector y) {
    auto [it, inserted] = complex_index.emplace(y, complexes.size());
    if (inserted) complexes.push_back(std::move(y));
    return it->second;
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string content = trim(raw.substr(0, raw.find('#')));
    if (content.empty()) continue;

    if (!have_species) {
      if (content.rfind("species:", 0) != 0)
        throw ParseError(line, "expected 'species:' declaration first");
      std::istringstream names(content.substr(8));
      std::string name;
      while (names >> name) {
        if (!is_identifier(name)) throw ParseError(line, "invalid species name '" + name + "'");
        if (!index.emplace(name, species.size()).second)
          throw ParseError(line, "duplicate species '" + name + "'");
        species.push_back(name);
      }
      if (species.empty()) throw ParseError(line, "no species declared");
      have_species = true;
      continue;
    }

    const auto semi = content.find(';');
    if (semi == std::string::npos) throw ParseError(line, "missing '; <rate-label>'");
    const std::string label = trim(content.substr(semi + 1));
    if (!is_identifier(label)) throw ParseError(line, "invalid rate label '" + label + "'");
    const std::string reaction = content.substr(0, semi);
    if (reaction.find("<-") != std::string::npos || reaction.find("<=>") != std::string::npos)
      throw ParseError(line, "reversible arrows are not supported; write two reactions");
    const auto arrow = reaction.find("->");
    if (arrow == std::string::npos || reaction.find("->", arrow + 2) != std::string::npos)
      throw ParseError(line, "expected exactly one '->'");

    IntVector lhs = parse_complex(reaction.substr(0, arrow), index, line);
    IntVector rhs = parse_complex(reaction.substr(arrow + 2), index, line);
    if (lhs == rhs) throw ParseError(line, "loop reaction (source equals target)");
    const std::size_t src = intern(std::move(lhs));
    const std::size_t dst = intern(std::move(rhs));
    if (!edges.emplace(src, dst).second) throw ParseError(line, "duplicate reaction");
    if (!labels.insert(label).second) throw ParseError(line, "rate label '" + label + "' reused");
    reactions.push_back({src, dst, label});
  }
  if (!have_species) throw ParseError(line == 0 ? 1 : line, "missing 'species:' declaration");
  return Network(std::move(species), std::move(complexes), std::move(reactions));
}

Network load_network(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_network(ss.str());
}

std::string format_network(const Network& n) {
  std::ostringstream os;
  os << "species:";
  for (const auto& s : n.species()) os << ' ' << s;
  os << '\n';
  for (const auto& r : n.reactions())
    os << n.complex_name(r.source) << " -> " << n.complex_name(r.target) << " ; " << r.rate_label
       << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Matrices

IntegerMatrix complex_matrix(const Network& n) {
  return IntegerMatrix::from_columns(n.complexes(), n.species_count());
}

RationalMatrix laplacian_transpose(const Network& n, const RateAssignment& rates) {
  const std::size_t m = n.complex_count();
  RationalMatrix a(m, m);
  for (const auto& r : n.reactions()) {
    const Rational& k = rates.at(r.rate_label);
    a(r.target, r.source) += k;
    a(r.source, r.source) -= k;
  }
  return a;
}

RationalMatrix sigma_matrix(const Network& n, const RateAssignment& rates) {
  return to_rational(complex_matrix(n)) * laplacian_transpose(n, rates);
}

IntegerMatrix stoichiometric_matrix(const Network& n) {
  std::vector<IntVector> cols;
  for (const auto& r : n.reactions()) cols.push_back(n.complex(r.target) - n.complex(r.source));
  return IntegerMatrix::from_columns(cols, n.species_count());
}

std::vector<ConservationLaw> conservation_space(const Network& n) {
  const std::size_t s = n.species_count();
  auto basis = left_kernel_basis(to_rational(stoichiometric_matrix(n)));
  std::vector<ConservationLaw> laws;
  if (basis.empty()) return laws;
  std::size_t i = 0;
  for (auto& w : canonical_span_basis(basis, s))
    laws.push_back({std::move(w), "c" + std::to_string(++i)});
  return laws;
}

// ---------------------------------------------------------------------------
// Graph structure

std::size_t LinkageStructure::terminal_count() const {
  std::size_t t = 0;
  for (const auto& c : terminal_classes) t += c.size();
  return t;
}

bool LinkageStructure::one_terminal_per_linkage_class() const {
  return std::all_of(terminal_classes.begin(), terminal_classes.end(),
                     [](const auto& c) { return c.size() == 1; });
}

namespace {

std::vector<std::size_t> weak_components(const Network& n) {
  std::vector<std::size_t> parent(n.complex_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& r : n.reactions()) parent[find(r.source)] = find(r.target);
  std::vector<std::size_t> root(n.complex_count());
  for (std::size_t i = 0; i < root.size(); ++i) root[i] = find(i);
  return root;
}

// Tarjan's algorithm; returns component id per vertex.
std::vector<std::size_t> strong_components(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unset), low(n, 0), comp(n, unset), stack;
  std::vector<bool> on_stack(n, false);
  std::size_t counter = 0, ncomp = 0;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (auto w : adj[v]) {
      if (index[w] == unset) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = ncomp;
      } while (w != v);
      ++ncomp;
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] == unset) visit(v);
  return comp;
}

}  // namespace

LinkageStructure linkage_structure(const Network& n) {
  const std::size_t m = n.complex_count();
  LinkageStructure out;

  const auto root = weak_components(n);
  std::map<std::size_t, std::size_t> class_of_root;
  for (std::size_t i = 0; i < m; ++i) {
    auto [it, inserted] = class_of_root.emplace(root[i], out.linkage_classes.size());
    if (inserted) out.linkage_classes.emplace_back();
    out.linkage_classes[it->second].push_back(i);
  }

  std::vector<std::vector<std::size_t>> adj(m);
  for (const auto& r : n.reactions()) adj[r.source].push_back(r.target);
  const auto comp = strong_components(adj);

  std::map<std::size_t, bool> has_exit;
  for (std::size_t i = 0; i < m; ++i) has_exit.emplace(comp[i], false);
  for (const auto& r : n.reactions())
    if (comp[r.source] != comp[r.target]) has_exit[comp[r.source]] = true;

  out.terminal_classes.resize(out.linkage_classes.size());
  for (std::size_t c = 0; c < out.linkage_classes.size(); ++c) {
    std::map<std::size_t, std::vector<std::size_t>> members;
    for (auto v : out.linkage_classes[c])
      if (!has_exit[comp[v]]) members[comp[v]].push_back(v);
    for (auto& [id, vs] : members) out.terminal_classes[c].push_back(std::move(vs));
    std::sort(out.terminal_classes[c].begin(), out.terminal_classes[c].end());
  }
  return out;
}

Deficiency deficiency(const Network& n, const RateAssignment& rates) {
  const std::size_t m = n.complex_count();
  const auto a = laplacian_transpose(n, rates);
  const auto sigma = to_rational(complex_matrix(n)) * a;
  const std::size_t ker_sigma = m - rank(sigma);
  const std::size_t ker_a = m - rank(a);
  const std::size_t l = linkage_structure(n).linkage_count();
  const std::size_t rank_n = rank(stoichiometric_matrix(n));

  Deficiency d;
  d.kernel = ker_sigma - ker_a;
  d.combinatorial = m - l - rank_n;
  d.agree = d.kernel == d.combinatorial;
  return d;
}

}  // namespace crn
