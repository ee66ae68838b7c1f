// JSON schemas for the CLI-facing artifacts: matrices, Intp paths, rewrite
// certificates, and the law-check report list shared by the axioms and
// paracategory suites.
//
//   matrix        {"rows": R, "cols": C, "entries": ["p/q", ...]}  (row-major)
//   intp path     {"objects": [{"plus": p, "minus": m}, ...n+1],
//                  "arrows": [matrix, ...n]}                        (aᵢ: Aᵢ→Aᵢ₊₁)
//   certificate   {"start": path, "steps": [{"rule": ..., "reversed": ...,
//                  "begin": ..., "end": ..., "object": ...,
//                  "inner": [certificate, ...], "result": path}]}
#pragma once

#include <json.hpp>

#include "ptcat/intp.hpp"
#include "ptcat/pathcomp.hpp"
#include "ptcat/report.hpp"

namespace ptcat {

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

using IPath = paracat::Path<intp::IntpInstance>;

nlohmann::json ipath_to_json(const IPath& p);
IPath ipath_from_json(const nlohmann::json& j);

using ICert = pathcomp::Certificate<intp::IntpInstance>;

nlohmann::json icert_to_json(const ICert& c);
ICert icert_from_json(const nlohmann::json& j);

nlohmann::json reports_to_json(const std::string& suite, const std::string& impl,
                               int cases, uint64_t seed,
                               const std::vector<AxiomReport>& reports);

}  // namespace ptcat
