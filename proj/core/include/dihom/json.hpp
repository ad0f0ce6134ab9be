#pragma once

#include "dihom/appendix.hpp"
#include "dihom/digraph.hpp"
#include "dihom/experiments.hpp"
#include "dihom/kernels.hpp"
#include "dihom/order_search.hpp"
#include "dihom/report.hpp"
#include "dihom/suites.hpp"

#include <nlohmann/json.hpp>

namespace dihom {

using Json = nlohmann::ordered_json;

inline constexpr const char* kJsonSchema = "dihom/1";

Json to_json(const Digraph& g);
Json to_json(const Quantity& q);
Json to_json(const BoundReport& r);
Json to_json(const SuiteResult& r);
Json to_json(const HostWitness& w);
Json to_json(const WitnessRecord& w);
Json to_json(const OrderVerdict& v);
Json to_json(const McResult& r);
Json to_json(const HeavyTailReport& r);
Json to_json(const DegreeMomentSummary& s);
Json to_json(const AppendixReproduction& r);

/// Inverse of to_json(Digraph).
Digraph digraph_from_json(const Json& j);

} // namespace dihom
