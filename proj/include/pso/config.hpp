#ifndef PSO_CONFIG_HPP
#define PSO_CONFIG_HPP

#include "pso/engine.hpp"

#include <json.hpp>

#include <string>

namespace pso {

/// RunConfig <-> JSON document. The schema is strict: unknown keys are
/// rejected with their field path, as are missing required fields and type
/// mismatches (all raised as config_error). docs/config_schema.json describes
/// the format.
nlohmann::json config_to_json(const RunConfig &config);

/// Override entries may be partial on input: absent attribute fields fall
/// back to the defaults section. Serialisation always emits full bundles.
RunConfig config_from_json(const nlohmann::json &j);

RunConfig load_config_file(const std::string &path);

void save_config_file(const RunConfig &config, const std::string &path);

} // namespace pso

#endif // PSO_CONFIG_HPP
