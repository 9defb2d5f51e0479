#include "cosserat/json_io.hpp"

#include <cstdio>
#include <sstream>

namespace cosserat {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void dump_rec(const nlohmann::json& j, std::string& out) {
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += nlohmann::json(it.key()).dump();
        out += ':';
        dump_rec(it.value(), out);
      }
      out += '}';
      break;
    }
    case nlohmann::json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += ',';
        first = false;
        dump_rec(e, out);
      }
      out += ']';
      break;
    }
    case nlohmann::json::value_t::number_float:
      out += format_double(j.get<double>());
      break;
    default:
      out += j.dump();
      break;
  }
}

}  // namespace

std::string canonical_dump(const nlohmann::json& j) {
  std::string out;
  dump_rec(j, out);
  return out;
}

nlohmann::json vec3_json(const Vec3& v) {
  return nlohmann::json::array({v[0], v[1], v[2]});
}

nlohmann::json mat3_json(const Mat3& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < 3; ++i)
    rows.push_back(nlohmann::json::array({m(i, 0), m(i, 1), m(i, 2)}));
  return rows;
}

nlohmann::json report_json(const ValidationReport& rep) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : rep.checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["max_residual"] = c.max_residual;
    jc["tol"] = c.tol;
    jc["pass"] = c.pass;
    jc["samples"] = c.samples;
    jc["seconds"] = c.seconds;
    if (!c.first_failure.empty()) jc["first_failure"] = c.first_failure;
    checks.push_back(jc);
  }
  nlohmann::json j;
  j["schema"] = "cosserat-curvature/1";
  j["checks"] = checks;
  j["pass"] = rep.pass;
  j["seconds"] = rep.seconds;
  return j;
}

nlohmann::json minimize_report_json(const MinimizeReport& rep) {
  nlohmann::json j;
  j["schema"] = "cosserat-curvature/1";
  j["converged"] = rep.converged;
  j["initial_energy"] = rep.initial_energy;
  j["final_energy"] = rep.final_energy;
  j["final_grad_norm"] = rep.final_grad_norm;
  j["iterations"] = rep.iterations;
  return j;
}

std::string trace_csv(const MinimizeReport& rep) {
  std::ostringstream os;
  os << "iteration,energy,grad_norm,step\n";
  char buf[64];
  for (std::size_t i = 0; i < rep.trace.size(); ++i) {
    const auto& t = rep.trace[i];
    os << i;
    std::snprintf(buf, sizeof(buf), ",%.17g", t.energy);
    os << buf;
    std::snprintf(buf, sizeof(buf), ",%.17g", t.grad_norm);
    os << buf;
    std::snprintf(buf, sizeof(buf), ",%.17g", t.step);
    os << buf << "\n";
  }
  return os.str();
}

}  // namespace cosserat
