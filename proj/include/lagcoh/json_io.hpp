#pragma once

#include <string>

#include "lagcoh/derham.hpp"
#include "lagcoh/homology.hpp"
#include "lagcoh/varieties.hpp"

// vendor/json.hpp is exposed as <json.hpp>; pull the full header here and
// alias the ordered variant so every report keeps a stable field order.
#include <json.hpp>

namespace lagcoh {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "lagcoh 0.1.0";

Json polynomial_to_json(const Polynomial& f);
Polynomial polynomial_from_json(const RingPtr& ring, const Json& j);

Json ring_to_json(const WeightedRing& ring);
RingPtr ring_from_json(const Json& j);

// Variety files ("lagvar-1"): ring descriptor, generators, cached basis and,
// for swallowtails, the normalization map.
Json variety_to_json(const LagrangianPresentation& variety);
LagrangianPresentation variety_from_json(const Json& j, const GBOptions& opts = {});

Json variety_summary_json(const LagrangianPresentation& variety);

struct ReportMeta {
  long bound = 0;
  int workers = 1;
  bool omit_timings = false;
  long elapsed_ms = 0;
};

// Cohomology reports ("cohreport-1") carry one table per requested level.
Json cohomology_report_json(const LagrangianPresentation& variety,
                            const std::vector<CohomologyTable>& tables, const ReportMeta& meta);
std::string cohomology_report_table(const LagrangianPresentation& variety,
                                    const std::vector<CohomologyTable>& tables,
                                    const ReportMeta& meta);

Json depth_certificate_json(const DepthCertificate& cert);
std::string depth_certificate_table(const DepthCertificate& cert);

std::string render_degree_map(const std::map<long, long>& dims, const std::string& header);

}  // namespace lagcoh
