#include "crn/report.hpp"

#include "crn/binomiality.hpp"
#include "crn/cycles.hpp"
#include "crn/polyhedral.hpp"

#include <algorithm>
#include <sstream>

namespace crn {

MethodChoice parse_method(const std::string& text) {
  if (text == "det") return MethodChoice::Determinant;
  if (text == "ie") return MethodChoice::InclusionExclusion;
  if (text == "cells") return MethodChoice::MixedCells;
  if (text == "all") return MethodChoice::All;
  throw ContractError("unknown method '" + text + "' (expected det, ie, cells or all)");
}

GeneratorChoice parse_generator_choice(const std::string& text) {
  GeneratorChoice choice;
  if (text == "pdsc") return choice;
  choice.kind = GeneratorChoice::Kind::Odes;
  if (text == "odes") return choice;
  if (text.rfind("odes:", 0) != 0)
    throw ContractError("unknown generator set '" + text + "' (expected pdsc, odes or odes:A,B)");
  std::istringstream names(text.substr(5));
  std::string name;
  while (std::getline(names, name, ','))
    if (!name.empty()) choice.species.push_back(name);
  if (choice.species.empty()) throw ContractError("odes: needs at least one species name");
  return choice;
}

namespace {

Json indices_json(const std::vector<std::size_t>& idx) {
  Json a = Json::array();
  for (auto i : idx) a.push_back(i + 1);
  return a;
}

Json rates_json(const RateAssignment& rates) {
  Json o = Json::object();
  for (const auto& [label, value] : rates.values()) o[label] = to_string(value);
  return o;
}

const std::vector<std::string>& variable_names(const Network& n) { return n.species(); }

Json cell_json(const CellDescription& cell) {
  Json edges = Json::array();
  for (const auto& e : cell.edges) edges.push_back(Json::array({to_string(e[0]), to_string(e[1])}));
  return Json{{"edges", edges}, {"volume", to_string(cell.volume)}};
}

Json mv_json(const MVReport& r) {
  Json j;
  j["method"] = to_string(r.method);
  j["value"] = to_string(r.value);
  j["conditional"] = r.conditional;
  j["generators"] = r.generators;
  if (r.method == MvMethod::Determinant) {
    j["alpha"] = indices_json(r.alpha);
    j["cell"] = r.cell ? cell_json(*r.cell) : Json(nullptr);
    if (r.confirmation) {
      j["cell_enumeration"] = {{"cells", r.confirmation->cells},
                               {"volume", to_string(r.confirmation->volume)},
                               {"seed", r.confirmation->seed},
                               {"agrees", r.confirmation->agrees}};
    } else {
      j["cell_enumeration"] = nullptr;
    }
  }
  return j;
}

// The square system handed to the mixed-volume methods.
struct EquationSystem {
  std::vector<Polynomial> generators;
  std::vector<std::string> descriptions;
  std::vector<ConservationLaw> laws;
  std::size_t species = 0;
  Json provenance;

  bool square() const { return generators.size() + laws.size() == species; }

  std::vector<PointConfiguration> configurations() const {
    std::vector<PointConfiguration> out;
    for (const auto& g : generators) out.push_back(newton_polytope(g));
    for (const auto& law : laws) out.push_back(conservation_support(law.w));
    return out;
  }

  std::vector<std::string> all_descriptions(const Network& n) const {
    std::vector<std::string> out = descriptions;
    for (const auto& law : laws) {
      std::string text;
      for (std::size_t a = 0; a < law.w.size(); ++a) {
        if (law.w[a] == 0) continue;
        Polynomial term(n.species_count());
        term.add_term(law.w[a], unit_vector(n.species_count(), a));
        std::string t = term.to_string(variable_names(n));
        if (!text.empty()) text += t.front() == '-' ? " - " + t.substr(1) : " + " + t;
        else text = t;
      }
      out.push_back(text + " - " + law.constant);
    }
    return out;
  }
};

EquationSystem pdsc_system(const Network& n, const PdscOutcome& pdsc) {
  EquationSystem sys;
  sys.species = n.species_count();
  sys.laws = conservation_space(n);
  const auto names = variable_names(n);
  for (const auto& b : binomial_generators(*pdsc.certificate, n)) {
    sys.generators.push_back(b.to_polynomial());
    sys.descriptions.push_back(sys.generators.back().to_string(names));
  }
  sys.provenance = {{"kind", "pdsc"}, {"rates", rates_json(pdsc.certificate->rates)}};
  return sys;
}

EquationSystem ode_system(const Network& n, const std::vector<std::string>& requested,
                          const RateAssignment& rates) {
  EquationSystem sys;
  sys.species = n.species_count();
  sys.laws = conservation_space(n);
  const auto odes = ode_polynomials(n, rates);
  std::vector<std::size_t> chosen;
  if (requested.empty()) {
    chosen = independent_ode_indices(n, rates);
  } else {
    for (const auto& name : requested) {
      auto it = std::find(n.species().begin(), n.species().end(), name);
      if (it == n.species().end()) throw ContractError("unknown species '" + name + "' in generator set");
      const auto i = static_cast<std::size_t>(it - n.species().begin());
      if (odes[i].is_zero()) throw ContractError("f_" + name + " is identically zero");
      chosen.push_back(i);
    }
  }
  const auto names = variable_names(n);
  Json picked = Json::array();
  for (auto i : chosen) {
    sys.generators.push_back(odes[i]);
    sys.descriptions.push_back("f_" + n.species()[i] + " = " + odes[i].to_string(names));
    picked.push_back("f_" + n.species()[i]);
  }
  sys.provenance = {{"kind", "odes"}, {"polynomials", picked}, {"rates", rates_json(rates)}};
  return sys;
}

// Binomials plus partitionability certificate, or the reason the fast path does not apply.
struct DeterminantInput {
  std::vector<Binomial> binomials;
  PartitionOutcome partition;
  std::string unavailable;
};

DeterminantInput determinant_input(const Network& n, const EquationSystem& sys) {
  DeterminantInput in;
  for (std::size_t g = 0; g < sys.generators.size(); ++g) {
    auto b = as_binomial(sys.generators[g]);
    if (!b) {
      in.unavailable = "generator " + std::to_string(g + 1) + " is not a binomial";
      return in;
    }
    in.binomials.push_back(std::move(*b));
  }
  if (in.binomials.empty()) {
    in.unavailable = "no binomial generators";
    return in;
  }
  in.partition = partitionable_check(n, in.binomials);
  if (!in.partition.ok()) {
    in.unavailable = "not partitionable: " + in.partition.refusal;
    return in;
  }
  if (!sys.square()) in.unavailable = "the system is not square";
  return in;
}

MVReport determinant_report(const EquationSystem& sys, const DeterminantInput& in, std::uint64_t seed) {
  MVReport r = fast_mixed_volume(*in.partition.certificate, in.binomials);
  confirm_with_cells(r, *in.partition.certificate, in.binomials, seed);
  r.generators = sys.descriptions;
  return r;
}

void require_oracle_cap(std::size_t s, const char* method) {
  if (s > kOracleCap)
    throw CapabilityError(std::string(method) + " is capped at s <= " + std::to_string(kOracleCap) +
                          " (this system has s = " + std::to_string(s) + ")");
}

MVReport ie_report(const EquationSystem& sys, const std::vector<std::string>& described) {
  require_oracle_cap(sys.species, "inclusion-exclusion");
  MVReport r;
  r.method = MvMethod::InclusionExclusion;
  r.value = mixed_volume_ie(sys.configurations()).get_num();
  r.generators = described;
  return r;
}

MVReport cells_report(const EquationSystem& sys, const std::vector<std::string>& described,
                      std::uint64_t seed) {
  require_oracle_cap(sys.species, "mixed-cell enumeration");
  MVReport r;
  r.method = MvMethod::MixedCells;
  r.value = mixed_volume_cells(sys.configurations(), seed).get_num();
  r.generators = described;
  return r;
}

Json mixed_volume_section(const Network& n, const EquationSystem& sys, MethodChoice method,
                          const RunOptions& options, bool strict) {
  if (!sys.square())
    throw ContractError("the system has " + std::to_string(sys.generators.size()) + " generators and " +
                        std::to_string(sys.laws.size()) + " conservation laws for " +
                        std::to_string(sys.species) + " species; it is not square");
  const auto described = sys.all_descriptions(n);
  Json out;
  out["generator_set"] = sys.provenance;
  out["equations"] = described;

  std::vector<Integer> values;
  Json results = Json::array();
  const bool want_det = method == MethodChoice::Determinant || method == MethodChoice::All;
  if (want_det) {
    const DeterminantInput in = determinant_input(n, sys);
    if (!in.unavailable.empty()) {
      if (strict && method == MethodChoice::Determinant)
        throw ContractError("determinant method unavailable: " + in.unavailable);
      results.push_back({{"method", "determinant"}, {"unavailable", in.unavailable}});
    } else {
      MVReport r = determinant_report(sys, in, options.seed);
      values.push_back(r.value);
      results.push_back(mv_json(r));
    }
  }
  if (method == MethodChoice::InclusionExclusion || method == MethodChoice::All) {
    MVReport r = ie_report(sys, described);
    values.push_back(r.value);
    results.push_back(mv_json(r));
  }
  if (method == MethodChoice::MixedCells || method == MethodChoice::All) {
    MVReport r = cells_report(sys, described, options.seed);
    values.push_back(r.value);
    results.push_back(mv_json(r));
  }
  out["results"] = results;
  if (values.size() > 1)
    out["agree"] = std::all_of(values.begin(), values.end(), [&](const Integer& v) { return v == values[0]; });
  return out;
}

Json pdsc_json(const PdscOutcome& pdsc) {
  Json j;
  j["holds"] = pdsc.ok();
  j["kernel_dimension"] = pdsc.kernel_dimension;
  j["rounds"] = pdsc.rounds;
  if (pdsc.ok()) {
    const auto& cert = *pdsc.certificate;
    j["d"] = cert.d;
    Json parts = Json::array();
    for (const auto& p : cert.partition) parts.push_back(indices_json(p));
    j["partition"] = parts;
    Json basis = Json::array();
    for (const auto& b : cert.basis) basis.push_back(to_string(b));
    j["basis"] = basis;
    j["sign_condition"] = sign_condition(cert);
  } else {
    j["refusal"] = pdsc.refusal;
  }
  j["rates"] = rates_json(pdsc.rates);
  return j;
}

Json partition_json(const PartitionOutcome& p, const std::vector<std::string>& generator_names) {
  Json j;
  j["partitionable"] = p.ok();
  if (p.ok()) {
    Json ws = Json::array();
    for (const auto& w : p.certificate->w_list) ws.push_back(to_string(w));
    j["w"] = ws;
    j["weakly_connected_fast_path"] = p.certificate->fast_path;
  } else {
    j["refusal"] = p.refusal;
    if (p.witness) {
      j["witness"] = {{"generator", generator_names.at(p.witness->generator)},
                      {"w", to_string(p.witness->w)},
                      {"a", to_string(p.witness->a)},
                      {"b", to_string(p.witness->b)},
                      {"w.a", to_string(dot(p.witness->w, p.witness->a))},
                      {"w.b", to_string(dot(p.witness->w, p.witness->b))}};
    }
  }
  return j;
}

}  // namespace

Json analyze_report(const Network& n, const RunOptions& options) {
  Json report;
  report["seed"] = options.seed;
  report["trials"] = options.trials;

  const LinkageStructure links = linkage_structure(n);
  const PdscOutcome pdsc = pdsc_check(n, {options.trials, options.seed, 5});
  const Deficiency def = deficiency(n, pdsc.rates);

  Json net;
  net["species"] = n.species();
  net["s"] = n.species_count();
  net["m"] = n.complex_count();
  net["reactions"] = n.reaction_count();
  Json complexes = Json::array();
  for (std::size_t i = 0; i < n.complex_count(); ++i) complexes.push_back(n.complex_name(i));
  net["complexes"] = complexes;
  Json classes = Json::array();
  for (const auto& c : links.linkage_classes) classes.push_back(indices_json(c));
  net["linkage_classes"] = classes;
  Json terminal = Json::array();
  for (const auto& per_class : links.terminal_classes)
    for (const auto& t : per_class) terminal.push_back(indices_json(t));
  net["terminal_classes"] = terminal;
  net["one_terminal_per_linkage_class"] = links.one_terminal_per_linkage_class();
  net["deficiency"] = {{"kernel", def.kernel}, {"combinatorial", def.combinatorial}, {"agree", def.agree}};
  report["network"] = net;

  Json laws = Json::array();
  for (const auto& law : conservation_space(n))
    laws.push_back({{"w", to_string(law.w)}, {"constant", law.constant}});
  report["conservation_laws"] = laws;
  report["pdsc"] = pdsc_json(pdsc);

  EquationSystem sys;
  if (pdsc.ok()) {
    sys = pdsc_system(n, pdsc);
    const Squareness sq = squareness_check(n, *pdsc.certificate);
    report["squareness"] = {{"binomials", sq.binomials},
                            {"conservation_laws", sq.conservation_laws},
                            {"species", sq.species},
                            {"square", sq.square},
                            {"one_terminal_per_linkage_class", sq.one_terminal_per_linkage_class}};
  } else {
    sys = ode_system(n, {}, pdsc.rates);
  }
  report["generators"] = {{"set", sys.provenance["kind"]}, {"polynomials", sys.descriptions}};

  if (sys.generators.empty()) {
    report["partitionability"] = {{"partitionable", false}, {"refusal", "no nonzero generators"}};
    report["mixed_volume"] = {{"skipped", "no nonzero generators"}};
    return report;
  }
  report["partitionability"] = partition_json(partitionable_check(n, sys.generators), sys.descriptions);

  if (!sys.square()) {
    report["mixed_volume"] = {{"skipped", "the system is not square"}};
  } else if (sys.species > kMaxCellEnumeration) {
    const DeterminantInput in = determinant_input(n, sys);
    if (in.unavailable.empty()) {
      report["mixed_volume"] = mixed_volume_section(n, sys, MethodChoice::Determinant, options, false);
    } else {
      report["mixed_volume"] = {{"skipped", "determinant unavailable (" + in.unavailable +
                                                ") and s exceeds the oracle caps"}};
    }
  } else if (sys.species > kOracleCap) {
    report["mixed_volume"] = mixed_volume_section(n, sys, MethodChoice::Determinant, options, false);
  } else {
    report["mixed_volume"] = mixed_volume_section(n, sys, MethodChoice::All, options, false);
  }
  return report;
}

Json mixedvol_report(const Network& n, MethodChoice method, const GeneratorChoice& generators,
                     const RunOptions& options) {
  EquationSystem sys;
  if (generators.kind == GeneratorChoice::Kind::Pdsc) {
    const PdscOutcome pdsc = pdsc_check(n, {options.trials, options.seed, 5});
    if (!pdsc.ok()) throw ContractError("no PDSC generators: " + pdsc.refusal);
    sys = pdsc_system(n, pdsc);
  } else {
    std::mt19937_64 rng(options.seed);
    sys = ode_system(n, generators.species, random_rates(n, rng));
  }
  Json report;
  report["seed"] = options.seed;
  report["trials"] = options.trials;
  report["mixed_volume"] = mixed_volume_section(n, sys, method, options, true);
  return report;
}

Json soc_report(std::size_t m, bool check, const RunOptions& options) {
  const Network n = soc_network(m);
  const Integer closed = soc_closed_form_mv(m);
  Json report;
  report["m"] = m;
  report["network"] = format_network(n);
  report["closed_form_mv"] = to_string(closed);
  if (!check) return report;

  const MethodChoice method = m <= kOracleCap ? MethodChoice::All : MethodChoice::Determinant;
  Json mv = mixedvol_report(n, method, GeneratorChoice{}, options)["mixed_volume"];
  bool passed = true;
  for (const auto& r : mv["results"]) passed = passed && r.value("value", "") == to_string(closed);
  report["check"] = {{"seed", options.seed}, {"results", mv["results"]}, {"passed", passed}};
  return report;
}

Json cycle_coloring_report(const Network& n, const RunOptions& options) {
  const ColoringOutcome out = cycle_coloring(n, {options.trials, options.seed, 5});
  Json report;
  report["seed"] = options.seed;
  report["trials"] = options.trials;
  if (!out.coloring) {
    report["coloring"] = nullptr;
    report["refusal"] = "no valid coloring: " + out.refusal;
    return report;
  }
  const Coloring& c = *out.coloring;
  report["d"] = c.count();
  Json edges = Json::array();
  for (auto r : cycle_order(n)) {
    const auto& rx = n.reactions()[r];
    edges.push_back({{"reaction", n.complex_name(rx.source) + " -> " + n.complex_name(rx.target)},
                     {"label", rx.rate_label},
                     {"color", c.colors[r]}});
  }
  report["coloring"] = edges;
  const ColoringCheck check = verify_coloring(n, c);
  Json colors = Json::array();
  for (const auto& b : check.colors) {
    colors.push_back({{"color", b.color},
                      {"heads", indices_json(b.heads)},
                      {"tails", indices_json(b.tails)},
                      {"head_sum", to_string(b.head_sum)},
                      {"tail_sum", to_string(b.tail_sum)},
                      {"balanced", b.balanced}});
  }
  report["balance"] = colors;
  report["valid"] = check.valid;
  return report;
}

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

void render(const Json& j, const std::string& pad, std::ostringstream& os) {
  if (j.is_object()) {
    std::size_t width = 0;
    for (const auto& [k, v] : j.items())
      if (is_scalar(v) || (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar)))
        width = std::max(width, k.size());
    for (const auto& [k, v] : j.items()) {
      const bool flat_array = v.is_array() && std::all_of(v.begin(), v.end(), is_scalar);
      if (is_scalar(v) && !(v.is_string() && v.get<std::string>().find('\n') != std::string::npos)) {
        os << pad << k << ": " << std::string(width - k.size(), ' ') << scalar_text(v) << '\n';
      } else if (v.is_string()) {
        os << pad << k << ":\n";
        std::istringstream lines(v.get<std::string>());
        std::string line;
        while (std::getline(lines, line)) os << pad << "  " << line << '\n';
      } else if (flat_array) {
        os << pad << k << ": " << std::string(width - k.size(), ' ') << "[";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
        os << "]\n";
      } else {
        os << pad << k << ":\n";
        render(v, pad + "  ", os);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (is_scalar(v)) {
        os << pad << "- " << scalar_text(v) << '\n';
      } else if (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar)) {
        os << pad << "- [";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
        os << "]\n";
      } else {
        os << pad << "-\n";
        render(v, pad + "  ", os);
      }
    }
  } else {
    os << pad << scalar_text(j) << '\n';
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  render(report, "", os);
  return os.str();
}

}  // namespace crn
