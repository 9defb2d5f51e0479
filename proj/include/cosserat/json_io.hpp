#pragma once

#include <string>

#include "json.hpp"

#include "cosserat/minimize.hpp"
#include "cosserat/tensor.hpp"
#include "cosserat/validate.hpp"

namespace cosserat {

// Deterministic JSON emitter: keys sorted, doubles printed with %.17g so
// that parse -> dump round trips are byte-identical.
std::string canonical_dump(const nlohmann::json& j);

nlohmann::json vec3_json(const Vec3& v);
nlohmann::json mat3_json(const Mat3& m);

nlohmann::json report_json(const ValidationReport& rep);
nlohmann::json minimize_report_json(const MinimizeReport& rep);
std::string trace_csv(const MinimizeReport& rep);

}  // namespace cosserat
