#include "nlcs/json_io.hpp"

#include <json.hpp>

#include <array>
#include <iomanip>
#include <sstream>

namespace nlcs {

namespace {

using Json = nlohmann::ordered_json;

Json params_json(const Params& params) {
  Json out = Json::object();
  for (const auto& [name, value] : params) out[name] = value;
  return out;
}

Json label_json(const StateLabel& label) {
  Json out = Json::object();
  if (std::holds_alternative<Complex>(label)) {
    const Complex z = std::get<Complex>(label);
    out["z"] = Json::array({z.real(), z.imag()});
  } else {
    const GkLabel gk = std::get<GkLabel>(label);
    out["J"] = gk.J;
    out["gamma"] = gk.gamma;
  }
  return out;
}

Json report_json(const VerificationReport& report) {
  Json out = Json::object();
  out["check_id"] = report.check_id;
  out["family"] = report.family_id;
  Json inputs = Json::object();
  for (const auto& [key, value] : report.inputs) inputs[key] = value;
  out["inputs"] = inputs;
  out["residual"] = report.residual;
  out["tolerance"] = report.tolerance;
  out["passed"] = report.passed;
  out["notes"] = report.notes;
  if (!report.params.empty()) out["params"] = params_json(report.params);
  return out;
}

std::string csv_quote(const std::string& text) {
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string csv_number(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

std::string state_to_json(const CoherentState& state,
                          std::optional<double> fidelity_vs_series) {
  Json out = Json::object();
  out["family"] = state.family().id() + (state.family().dual() ? " (dual)" : "");
  out["params"] = params_json(state.family().params());
  out["label"] = label_json(state.label());
  out["dim"] = state.dim();
  Json amps = Json::array();
  for (int n = 0; n < state.dim(); ++n) {
    const Complex a = state.vector().amp(n);
    amps.push_back(Json::array({a.real(), a.imag()}));
  }
  out["amplitudes"] = amps;
  out["tail_mass"] = state.tail_mass();
  out["method"] = method_name(state.method());
  if (fidelity_vs_series) out["fidelity_vs_series"] = *fidelity_vs_series;
  return out.dump(2);
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  Json out = Json::array();
  for (const VerificationReport& report : reports) out.push_back(report_json(report));
  return out.dump(2);
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::string out = "check_id,family,residual,tolerance,passed,notes\n";
  for (const VerificationReport& r : reports) {
    out += csv_quote(r.check_id) + "," + csv_quote(r.family_id) + "," +
           csv_number(r.residual) + "," + csv_number(r.tolerance) + "," +
           (r.passed ? "true" : "false") + "," + csv_quote(r.notes) + "\n";
  }
  return out;
}

std::string table_to_json(const RhoFamily& family,
                          const std::vector<TableRow>& rows) {
  Json out = Json::object();
  out["family"] = family.id() + (family.dual() ? " (dual)" : "");
  out["params"] = params_json(family.params());
  Json list = Json::array();
  for (const TableRow& row : rows) {
    Json r = Json::object();
    r["n"] = row.n;
    r["rho"] = row.rho;
    r["log_rho"] = row.log_rho;
    r["f"] = row.f;
    r["e"] = row.e;
    r["f_dual"] = row.f_dual;
    list.push_back(r);
  }
  out["rows"] = list;
  return out.dump(2);
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::string out = "n,rho,log_rho,f,e,f_dual\n";
  for (const TableRow& row : rows) {
    out += std::to_string(row.n) + "," + csv_number(row.rho) + "," +
           csv_number(row.log_rho) + "," + csv_number(row.f) + "," +
           csv_number(row.e) + "," + csv_number(row.f_dual) + "\n";
  }
  return out;
}

std::string catalog_to_json() {
  Json out = Json::array();
  for (const FamilyInfo& info : family_catalog()) {
    Json entry = Json::object();
    entry["id"] = info.id;
    entry["rho"] = info.rho_text;
    entry["params"] = info.param_names;
    entry["param_domains"] = info.param_domains;
    entry["domain"] =
        info.domain == FamilyInfo::Domain::Disk ? "disk" : "plane";
    entry["f"] = info.f_closed_form;
    entry["H"] = info.h_closed_form;
    out.push_back(entry);
  }
  return out.dump(2);
}

std::string catalog_to_csv() {
  std::string out = "id,domain,f,H,rho,params\n";
  for (const FamilyInfo& info : family_catalog()) {
    std::string names;
    for (const std::string& name : info.param_names) {
      if (!names.empty()) names += " ";
      names += name;
    }
    out += csv_quote(info.id) + "," +
           (info.domain == FamilyInfo::Domain::Disk ? "disk" : "plane") + "," +
           csv_quote(info.f_closed_form) + "," + csv_quote(info.h_closed_form) +
           "," + csv_quote(info.rho_text) + "," + csv_quote(names) + "\n";
  }
  return out;
}

std::string sweep_to_csv(const std::vector<std::array<double, 4>>& rows) {
  std::string out = "abs_z,mandel_q,mean_n,norm_sum\n";
  for (const auto& row : rows) {
    out += csv_number(row[0]) + "," + csv_number(row[1]) + "," +
           csv_number(row[2]) + "," + csv_number(row[3]) + "\n";
  }
  return out;
}

std::string error_to_json(const std::string& kind, const std::string& message) {
  Json out = Json::object();
  out["error"] = kind;
  out["message"] = message;
  return out.dump();
}

}  // namespace nlcs
