#pragma once

// JSON reading and writing for every interchange type. Parsing is strict:
// unknown keys, missing keys and non-integer numbers raise ParseError.
// Output keys follow a fixed order so that files diff cleanly.

#include <string>

#include <json.hpp>

#include "matcon/core.hpp"
#include "matcon/phase_model.hpp"
#include "matcon/reductions.hpp"

namespace matcon {

using Json = nlohmann::ordered_json;

/// Parses text, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

/// Validates as well; a "provenance" key is accepted and ignored.
Instance instance_from_json(const Json& j);
Json to_json(const Instance& inst);

Schedule schedule_from_json(const Json& j);
Json to_json(const Schedule& sched);

SolveResult result_from_json(const Json& j);
Json to_json(const SolveResult& result);

PhaseCertificate certificate_from_json(const Json& j);
Json to_json(const PhaseCertificate& cert);

/// Instance JSON plus a "provenance" object.
Json to_json(const GeneratedInstance& gen);

/// {"vertices": n, "edges": [[u, v], ...]}; `k` is left at its default.
GraphInstance graph_from_json(const Json& j);

}  // namespace matcon
