#ifndef WTURAN_REPORT_HPP
#define WTURAN_REPORT_HPP

#include <json.hpp>

#include "wturan/extremal.hpp"
#include "wturan/oracle.hpp"
#include "wturan/stability.hpp"

namespace wturan {

// Machine-readable reports. Vertex indices are 1-based everywhere users see
// them; rationals are "p/q" strings so no precision is lost in JSON.

nlohmann::ordered_json extremal_report(const ExtremalResult& result);
nlohmann::ordered_json certify_report(const CertifyReport& report);
nlohmann::ordered_json stability_report(const StabilityReport& report);
nlohmann::ordered_json upgrade_report(const WeightedGraph& before, const WeightedGraph& after);

} // namespace wturan

#endif
