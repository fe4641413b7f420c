#include "toric/report_format.hpp"

#include <sstream>

namespace toric {

nlohmann::json report_to_json(const DoublingReport& r) {
  return nlohmann::json{
      {"chi_P", r.chi_P}, {"tau_P", r.tau_P}, {"chi_D", r.chi_D}, {"h11_D", r.h11_D}, {"h21_D", r.h21_D},
      {"chi_S", r.chi_S}, {"h02_S", r.h02_S}, {"h11_S", r.h11_S}, {"tau_S", r.tau_S}, {"chi_M", r.chi_M},
      {"tau_M", r.tau_M}, {"a_hat", r.a_hat}, {"holonomy", std::string(holonomy_label(r.holonomy))},
  };
}

namespace {

std::string display_name(const BatchItem& item) {
  std::string s = item.id();
  if (item.input && item.input->name) s += " (" + *item.input->name + ")";
  return s;
}

}  // namespace

std::string format_text(const std::vector<BatchItem>& items) {
  std::ostringstream os;
  for (const auto& item : items) {
    os << "== " << display_name(item) << '\n';
    if (!item.ok()) {
      os << "  error: " << item.error << '\n';
      continue;
    }
    const DoublingReport& r = *item.report;
    os << "  P: chi = " << r.chi_P << ", tau = " << r.tau_P << '\n';
    os << "  D: chi = " << r.chi_D << ", h11 = " << r.h11_D << ", h21 = " << r.h21_D << '\n';
    os << "  S: chi = " << r.chi_S << ", h02 = " << r.h02_S << ", h11 = " << r.h11_S << ", tau = " << r.tau_S << '\n';
    os << "  M: chi = " << r.chi_M << ", tau = " << r.tau_M << ", A-hat = " << r.a_hat
       << ", holonomy = " << holonomy_label(r.holonomy) << '\n';
    if (r.a_hat != 2)
      os << "  warning: A-hat = " << r.a_hat << ", so M is not a Calabi-Yau fourfold (holonomy "
         << holonomy_label(r.holonomy) << ")\n";
    if (!item.trace.empty()) os << item.trace;
  }
  return os.str();
}

std::string format_json(const std::vector<BatchItem>& items) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& item : items) {
    nlohmann::json j{{"id", item.id()}, {"path", item.path}};
    if (item.input && item.input->name) j["name"] = *item.input->name;
    if (item.ok()) {
      j["report"] = report_to_json(*item.report);
    } else {
      j["error"] = item.error;
      if (item.error_code) j["error_code"] = std::string(error_code_name(*item.error_code));
    }
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

std::string format_csv(const std::vector<BatchItem>& items) {
  std::ostringstream os;
  os << "id,name,chi_P,tau_P,chi_D,h11_D,h21_D,chi_S,h02_S,h11_S,tau_S,chi_M,tau_M,a_hat,holonomy,error\n";
  for (const auto& item : items) {
    os << item.id() << ',' << (item.input && item.input->name ? *item.input->name : "") << ',';
    if (item.ok()) {
      const DoublingReport& r = *item.report;
      os << r.chi_P << ',' << r.tau_P << ',' << r.chi_D << ',' << r.h11_D << ',' << r.h21_D << ',' << r.chi_S << ','
         << r.h02_S << ',' << r.h11_S << ',' << r.tau_S << ',' << r.chi_M << ',' << r.tau_M << ',' << r.a_hat << ','
         << holonomy_label(r.holonomy) << ",\n";
    } else {
      os << ",,,,,,,,,,,,," << (item.error_code ? std::string(error_code_name(*item.error_code)) : "Error") << '\n';
    }
  }
  return os.str();
}

std::string format_items(const std::vector<BatchItem>& items, EmitFormat format) {
  switch (format) {
    case EmitFormat::Text: return format_text(items);
    case EmitFormat::Json: return format_json(items);
    case EmitFormat::Csv: return format_csv(items);
  }
  return {};
}

std::string format_trace(const PipelineResult& res) {
  const auto names = res.ring.variable_names();
  auto poly = [&](const MultiPoly& p) { return p.to_string(names); };
  auto vec = [](const auto& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
  };

  std::ostringstream os;
  os << "  primitive collections:";
  for (const auto& pc : res.primitive_collections) {
    os << " {";
    for (std::size_t i = 0; i < pc.rays.size(); ++i) os << (i ? "," : "") << "x" << pc.rays[i] + 1;
    os << '}';
  }
  os << "\n  degrees:";
  for (std::size_t i = 0; i < res.chow.degree_of_variable.size(); ++i)
    os << " deg(x" << i + 1 << ")=" << vec(res.chow.degree_of_variable[i]);
  os << "\n  anticanonical degree: " << vec(res.anticanonical_degree) << '\n';
  os << "  even Betti numbers: " << vec(res.betti) << '\n';
  os << "  elimination cone: " << res.ring.elimination().cone_index << ", ring variables:";
  for (const auto& n : names) os << ' ' << n;
  os << "\n  groebner basis:";
  for (const auto& g : res.ring.groebner()) os << " [" << poly(g) << ']';
  os << "\n  anticanonical class: " << poly(res.anticanonical) << '\n';
  auto series = [&](const char* label, const ChernSeries& c) {
    os << "  " << label << ':';
    for (std::size_t k = 1; k < c.graded.components.size(); ++k) os << " c" << k << " = " << poly(c.c(k)) << ';';
    os << '\n';
  };
  series("c(P)", res.c_ambient);
  series("c(D)", res.c_divisor);
  series("c(S)", res.c_surface);
  return os.str();
}

}  // namespace toric
