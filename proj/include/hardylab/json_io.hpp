#pragma once

#include "hardylab/grid.hpp"
#include "hardylab/group.hpp"
#include "hardylab/montecarlo.hpp"
#include "hardylab/params.hpp"
#include "hardylab/ratios.hpp"
#include "hardylab/report.hpp"
#include "hardylab/search.hpp"

#include <json.hpp>

namespace hardylab {

// Insertion-ordered documents keep report files byte-identical for a fixed
// configuration and seed.
using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

Json to_json(const GroupSpec& g);
Json to_json(const QuasiNormSpec& n);
Json to_json(const RadialGrid& g);
Json to_json(const HardyParams& p);
Json to_json(const SphereMeasure& s);
Json to_json(const VerificationReport& r);
Json to_json(const RatioResult& r);
Json to_json(const SharpnessReport& r);

// CSV of the search trace: one row per ratio evaluation.
std::string trace_to_csv(const SharpnessReport& r);

} // namespace hardylab
