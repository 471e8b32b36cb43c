#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "classify.hpp"
#include "lcb.hpp"

namespace tcb {

using ordered_json = nlohmann::ordered_json;

// Integers and rationals are rendered as strings ("50/19"); counts and flags
// stay native JSON. Key order is fixed so identical inputs give identical
// bytes.

ordered_json graph_json(const WeightedGraph& g);
ordered_json form_json(const FormClass& fc);
ordered_json invariants_json(const Fraction& f);
ordered_json analysis_json(const FiberAnalysis& a, const std::optional<FamilyLabel>& fam);
ordered_json components_json(const FiberAnalysis& a);
ordered_json hit_json(const FiberHit& h);

std::string form_text(const FormClass& fc);
std::string analysis_text(const FiberAnalysis& a, const std::optional<FamilyLabel>& fam);
std::string components_text(const FiberAnalysis& a);
std::string family_text(const FamilyLabel& fam);
std::string point_text(const SingularPoint& p, const WeightedGraph& g);

std::string classify_run_text(const std::vector<FiberHit>& hits, const SearchBounds& b);
ordered_json classify_run_json(const std::vector<FiberHit>& hits, const SearchBounds& b);
std::string classify_report_text(const ClassifyReport& r);
ordered_json classify_report_json(const ClassifyReport& r);
std::string multi_scan_text(const MultiScanReport& r);
ordered_json multi_scan_json(const MultiScanReport& r);
std::string realization_text(const Realization& r);
ordered_json realization_json(const Realization& r);

}  // namespace tcb
