#pragma once
// JSON views of reports and experiment rows (key order is fixed).

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "tuza/config.hpp"
#include "tuza/duality.hpp"
#include "tuza/experiment.hpp"
#include "tuza/extremal.hpp"

namespace tuza {

using Json = nlohmann::ordered_json;

Json to_json(const TuzaReport& r, const std::string& instance, std::uint64_t seed);
/// {t, patterns, phi_b, vertex_edges}; t is half the K-vertex count.
Json to_json(const Configuration& cfg);
Json to_json(const WeightReport& r);
Json to_json(const RegularPairStat& s);
Json to_json(const MantelResult& r);
Json to_json(const CountingReport& r);

Json to_json(const ConstructionRecord& r);
Json to_json(const CoverRecord& r);
Json to_json(const SurveyRow& r);
Json to_json(const ProbeRow& r);
Json to_json(const CanonRow& r);
Json to_json(const SpectraRow& r);
Json to_json(const MantelRow& r);

template <class Row>
Json to_json(const std::vector<Row>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) out.push_back(to_json(r));
    return out;
}

}  // namespace tuza
