#pragma once

#include <nlohmann/json.hpp>

#include "hftlab/deficiency.hpp"
#include "hftlab/domain.hpp"
#include "hftlab/friedrichs.hpp"
#include "hftlab/hft.hpp"
#include "hftlab/mobius.hpp"
#include "hftlab/physics.hpp"
#include "hftlab/spectrum.hpp"

namespace hftlab {

using json = nlohmann::ordered_json;

/// Top-level schema version carried by every report.
inline constexpr int report_schema = 1;

json complex_to_json(complex z);  // [re, im]

json to_json(const WindowTrace& t);
json to_json(const DomainReport& r);  // in_L2, abs_cont, f0, domains, traces
json to_json(const NormTrace& t);
json to_json(const KernelCandidate& k);
json to_json(const DeficiencyReport& r);
json to_json(const ResidualMembership& r);
json to_json(const Evidence& e);
json to_json(const SpectrumReport& r);
json to_json(const SupNormResult& r);
json to_json(const NoncommutationWitness& w);
json to_json(const MobiusTransform& m);
json to_json(const FreeParticleMap& m);

/// {"schema": 1, "experiment": name, ...body}
json make_report(const std::string& experiment, const json& body);

/// Pretty-printed with a trailing newline; key order is insertion order.
std::string dump(const json& j);

}  // namespace hftlab
