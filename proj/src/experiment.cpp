#include "toricleak/experiment.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "toricleak/config_json.hpp"
#include "toricleak/decoder.hpp"
#include "toricleak/error_channels.hpp"
#include "toricleak/scattering.hpp"
#include "toricleak/toric_code.hpp"

namespace toricleak {

using nlohmann::json;

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string num(double v) { return fmt("%.10g", v); }

template <typename T>
std::vector<T> list_or_scalar(const json& doc, const char* key, T fallback) {
  if (!doc.contains(key)) return {fallback};
  const json& v = doc.at(key);
  std::vector<T> out;
  try {
    if (v.is_array()) {
      for (const auto& item : v) out.push_back(item.get<T>());
    } else {
      out.push_back(v.get<T>());
    }
  } catch (const json::exception& e) {
    throw ConfigError(key, std::string("wrong value type: ") + e.what());
  }
  if (out.empty()) throw ConfigError(key, "list must not be empty");
  return out;
}

}  // namespace

std::string CircuitChoice::label() const {
  return std::string(to_string(isotope)) + (lrc ? ":lrc" : ":standard");
}

CircuitChoice parse_circuit_choice(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ConfigError("circuits", "expected '<isotope>:<standard|lrc>', got '" + std::string(text) + "'");
  }
  CircuitChoice c;
  try {
    c.isotope = parse_isotope(text.substr(0, colon));
  } catch (const std::exception& e) {
    throw ConfigError("circuits", e.what());
  }
  const auto circuit = text.substr(colon + 1);
  if (circuit == "lrc") {
    c.lrc = true;
  } else if (circuit != "standard") {
    throw ConfigError("circuits", "unknown circuit '" + std::string(circuit) + "'");
  }
  return c;
}

std::vector<ExperimentConfig> SweepSpec::points() const {
  std::vector<ExperimentConfig> out;
  std::uint64_t k = 0;
  for (const auto& circuit : circuits) {
    for (int d : distances) {
      for (double sigma : sigma_b_gauss) {
        for (double p : p_scatter) {
          ExperimentConfig c = base;
          if (circuit.isotope != base.isotope.kind) {
            c.isotope = circuit.isotope == IsotopeKind::zeeman ? IsotopeProfile::zeeman() : IsotopeProfile::hyperfine();
          }
          c.lrc_enabled = circuit.lrc;
          c.distance = d;
          c.sigma_b_gauss = sigma;
          c.p_scatter = p;
          c.seed = base.seed + k++;
          out.push_back(c);
        }
      }
    }
  }
  return out;
}

SweepSpec parse_sweep(std::string_view text, const ExperimentConfig& base) {
  json doc = parse_json_text(text);
  if (!doc.is_object()) throw ConfigError("", "sweep root must be an object");
  json scalars = doc;
  for (const char* key : {"sigma_b_gauss", "p_scatter"})
    if (scalars.contains(key) && scalars[key].is_array()) scalars.erase(key);

  SweepSpec spec;
  spec.base = config_from_json(scalars, base, {"distances", "circuits"});
  spec.distances = list_or_scalar<int>(doc, "distances", spec.base.distance);
  spec.sigma_b_gauss = list_or_scalar<double>(doc, "sigma_b_gauss", spec.base.sigma_b_gauss);
  spec.p_scatter = list_or_scalar<double>(doc, "p_scatter", spec.base.p_scatter);
  if (doc.contains("circuits")) {
    for (const auto& name : list_or_scalar<std::string>(doc, "circuits", "")) {
      spec.circuits.push_back(parse_circuit_choice(name));
    }
  } else {
    spec.circuits.push_back({spec.base.isotope.kind, spec.base.lrc_enabled});
  }
  validate(spec);
  return spec;
}

SweepSpec load_sweep(const std::filesystem::path& path, const ExperimentConfig& base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open sweep file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_sweep(buf.str(), base);
}

void validate(const SweepSpec& spec) {
  if (spec.circuits.empty()) throw ConfigError("circuits", "list must not be empty");
  if (spec.distances.empty()) throw ConfigError("distances", "list must not be empty");
  if (spec.sigma_b_gauss.empty()) throw ConfigError("sigma_b_gauss", "list must not be empty");
  if (spec.p_scatter.empty()) throw ConfigError("p_scatter", "list must not be empty");
  for (const auto& point : spec.points()) validate(point);
}

std::vector<ExperimentResult> run_sweep(const SweepSpec& spec, const RunOptions& options) {
  validate(spec);
  std::vector<ExperimentResult> out;
  for (const auto& point : spec.points()) out.push_back(run_experiment(point, options));
  return out;
}

std::string to_csv(const std::vector<ExperimentResult>& rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    const auto& c = r.config;
    out += std::string(to_string(c.isotope.kind)) + ',' + (c.lrc_enabled ? "lrc" : "standard") + ',' +
           std::to_string(c.distance) + ',' + num(c.sigma_b_gauss) + ',' + num(c.p_scatter) + ',' +
           std::to_string(r.trials) + ',' + std::to_string(c.effective_cycles()) + ',' + num(r.logical_fail_rate()) +
           ',' + num(r.per_cycle_rate()) + ',' + num(r.standard_error()) + ',' + num(r.leak_events_mean()) + ',' +
           std::to_string(c.seed) + '\n';
  }
  return out;
}

std::string to_json(const std::vector<ExperimentResult>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    const auto& c = r.config;
    arr.push_back({{"isotope", to_string(c.isotope.kind)},
                   {"circuit", c.lrc_enabled ? "lrc" : "standard"},
                   {"d", c.distance},
                   {"sigma_b_gauss", c.sigma_b_gauss},
                   {"p_scatter", c.p_scatter},
                   {"trials", r.trials},
                   {"cycles", c.effective_cycles()},
                   {"logical_fail_rate", r.logical_fail_rate()},
                   {"per_cycle_rate", r.per_cycle_rate()},
                   {"stderr", r.standard_error()},
                   {"leak_events_mean", r.leak_events_mean()},
                   {"seed", c.seed}});
  }
  return json{{"rows", arr}}.dump(2) + "\n";
}

std::string describe_channels(const ExperimentConfig& config) {
  std::string out;
  out += "# sigma_b_gauss=" + num(config.sigma_b_gauss) + " p_scatter=" + num(config.p_scatter) +
         " tau_1q=" + num(config.tau_1q_seconds) + " tau_2q=" + num(config.tau_2q_seconds) + "\n";
  out += "isotope    gate       p_x          p_y          p_z          p_leak       p_seep       p_dephase\n";
  for (IsotopeKind kind : {IsotopeKind::zeeman, IsotopeKind::hyperfine}) {
    ExperimentConfig c = config;
    if (c.isotope.kind != kind) c.isotope = kind == IsotopeKind::zeeman ? IsotopeProfile::zeeman() : IsotopeProfile::hyperfine();
    c.lrc_enabled = false;
    const ChannelSet set = build_channels(c);
    const std::pair<const GateErrorChannel*, double> rows[] = {{&set.one_qubit, set.p_dephase_1q},
                                                               {&set.two_qubit, set.p_dephase_2q}};
    for (const auto& [ch, deph] : rows) {
      char line[256];
      std::snprintf(line, sizeof line, "%-10s %-10s %-12.4e %-12.4e %-12.4e %-12.4e %-12.4e %.4e\n",
                    std::string(to_string(kind)).c_str(), std::string(to_string(ch->gate_class)).c_str(), ch->p_x,
                    ch->p_y, ch->p_z, ch->p_leak, ch->p_seep, deph);
      out += line;
    }
  }
  out += "\n# scattering per pi rotation from the shipped atomic data\n";
  out += "isotope    gate       bitflip      leakage      rayleigh\n";
  for (IsotopeKind kind : {IsotopeKind::zeeman, IsotopeKind::hyperfine}) {
    const auto audit = audit_gate_scattering(kind, config.tau_1q_seconds, config.tau_2q_seconds,
                                             config.single_qubit_scatter_ratio);
    const std::pair<const char*, const ScatteringProbabilities*> rows[] = {{"one_qubit", &audit.one_qubit},
                                                                           {"two_qubit", &audit.two_qubit}};
    for (const auto& [name, p] : rows) {
      char line[256];
      std::snprintf(line, sizeof line, "%-10s %-10s %-12.4e %-12.4e %.4e\n", std::string(to_string(kind)).c_str(),
                    name, p->bitflip, p->leakage, p->rayleigh);
      out += line;
    }
  }
  return out;
}

std::string dump_layout(int distance) {
  const ToricLayout layout(distance);
  std::ostringstream out;
  const int side = layout.side();
  out << "distance " << distance << "\n";
  out << "grid " << side << " x " << side << "\n";
  for (int q = 0; q < layout.num_data(); ++q) {
    const int s = layout.data_home(q);
    out << "data " << q << " site " << s / side << ' ' << s % side << "\n";
  }
  for (int a = 0; a < layout.num_checks(); ++a) {
    const int s = layout.check_home(a);
    const auto& sup = layout.support(a);
    out << "check " << a << ' ' << (layout.check_type(a) == CheckType::x ? 'X' : 'Z') << " site " << s / side << ' '
        << s % side << " support " << sup[0] << ' ' << sup[1] << ' ' << sup[2] << ' ' << sup[3] << "\n";
  }
  for (int k = 0; k < 2; ++k) {
    out << "logical Z" << k << ':';
    for (int q : layout.z_logical(k)) out << ' ' << q;
    out << "\nlogical X" << k << ':';
    for (int q : layout.x_logical(k)) out << ' ' << q;
    out << "\n";
  }
  const RolePermutation roles = swap_pairing(layout);
  for (int a = 0; a < layout.num_checks(); ++a) out << "pair check " << a << " data " << roles.paired_data(a) << "\n";

  auto emit = [&](const std::string& name, const CircuitSchedule& s) {
    out << "schedule " << name << " steps " << s.steps.size() << " cnots " << s.cnot_count() << "\n";
    for (std::size_t t = 0; t < s.steps.size(); ++t) {
      out << "step " << t << ':';
      for (const Gate& g : s.steps[t].gates) {
        switch (g.kind) {
          case GateKind::init: out << " init(" << g.a << ')'; break;
          case GateKind::measure: out << " meas(" << g.a << ')'; break;
          case GateKind::cnot: out << " cx(" << g.a << ',' << g.b << ')'; break;
        }
      }
      out << "\n";
    }
  };
  emit("standard", standard_schedule(layout));
  emit("lrc-even", lrc_schedule(layout, 0));
  emit("lrc-odd", lrc_schedule(layout, 1));
  return out.str();
}

std::string describe_matching(std::string_view defect_list) {
  const DefectGraph graph = parse_defect_list(defect_list);
  const Matching m = mwpm(graph);
  std::ostringstream out;
  for (const auto& [i, j] : m.pairs) {
    const Defect& a = graph.nodes()[i];
    const Defect& b = graph.nodes()[j];
    out << a.row << ' ' << a.col << ' ' << a.round << " -- " << b.row << ' ' << b.col << ' ' << b.round
        << "  weight " << graph.weight(i, j) << "\n";
  }
  out << "total_weight " << m.total_weight << "\n";
  return out.str();
}

}  // namespace toricleak
