#ifndef HOLES3D_REPORT_HPP
#define HOLES3D_REPORT_HPP

#include <string>

#include <json.hpp>

#include "holes3d/construction.hpp"
#include "holes3d/nerve.hpp"
#include "holes3d/voxel.hpp"
#include "holes3d/warmup.hpp"

namespace holes3d {

// Reports use insertion-ordered JSON so the emitted bytes are a pure function
// of the data; the only volatile field (the timestamp) lives in "meta".
using Json = nlohmann::ordered_json;

Json rat_json(const Rat& r);
Json vec_json(const Vec3& v);

/// {"value": v, "provenance": tag}; tags in use: "computed", "formula", "oracle".
Json tagged(Json value, const std::string& provenance);

Json params_json(const ConstructionParams& p);
Json betti_json(const BettiReport& b);
Json hole_json(const HoleReport& h);
Json epsilon_json(const EpsilonBudget& e);
Json witness_json(const WitnessReport& w);
Json oracle_json(const OracleReport& o);
Json offsets_json(const TranslateFamily& family);
Json warmup_spec_json(const WarmupSpec& spec);

/// Report skeleton: schema version, meta header (timestamp isolated there),
/// and the command name.
Json report_shell(const std::string& command);

/// Named pass/fail assertions accumulated by a command; `ok` is their AND.
class CheckList {
public:
    void add(const std::string& name, bool pass);
    bool ok() const { return ok_; }
    const Json& json() const { return checks_; }

private:
    bool ok_ = true;
    Json checks_ = Json::array();
};

std::string csv_header();
std::string csv_row(long long m, const HoleReport& report);

std::string iso_timestamp_utc();

/// Writes content to path, creating parent directories as needed.
void write_text_file(const std::string& path, const std::string& content);

} // namespace holes3d

#endif
