#pragma once

#include <string>

#include <json.hpp>

#include "hc/bounds.hpp"
#include "hc/hardcore.hpp"
#include "hc/lp.hpp"
#include "hc/scan.hpp"

namespace hc {

// Insertion-ordered JSON keeps output byte-deterministic.
using Json = nlohmann::ordered_json;

Json to_json(const Polynomial& p);
Json to_json(const OccupancyReport& rep);
Json to_json(const YDistribution& dist);
Json to_json(const LocalGraphDistribution& dist);
Json to_json(const LpProblem& p);
Json to_json(const LpSolution& s);
Json to_json(const SlacknessReport& rep);
Json to_json(const TfBound& b);
Json to_json(const CubicBound& b);
Json to_json(const ScanReport& rep);

std::string scan_csv(const ScanReport& rep);

}  // namespace hc
