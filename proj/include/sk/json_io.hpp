#pragma once

#include "sk/certify.hpp"
#include "sk/curve.hpp"
#include "sk/dyadic.hpp"
#include "sk/geometry.hpp"
#include "sk/isometry.hpp"
#include "sk/metrics.hpp"

#include <json.hpp>

namespace sk {

// JSON views used by the command-line tool. Exact values are emitted as
// strings ("m/2^e" for dyadics, reduced "A/B" for ratios) next to a double
// approximation, so output is both machine-exact and human-skimmable.
nlohmann::json to_json(const Dyadic& d);
nlohmann::json to_json(const ExactRatio& r);
nlohmann::json to_json(const Point& p);
nlohmann::json to_json(const QuadDyadic& q);  // {"a", "b", "approx"}: value a + b*sqrt(2)
nlohmann::json to_json(const SlrWitness& w);
nlohmann::json to_json(const LocalityReport& report);
nlohmann::json to_json(const AngleTriple& triple);
nlohmann::json to_json(const OrientedFraction& f);
nlohmann::json to_json(const FractionMetrics& m);
nlohmann::json to_json(const Isometry& iso);
nlohmann::json to_json(const Verdict& verdict);

}  // namespace sk
