#pragma once

// JSON renderings of library results for the command-line tool. Every
// top-level document carries "schema": "drg-spectra/1".

#include <json.hpp>

#include "drg/enumerate.hpp"
#include "drg/guide.hpp"
#include "drg/recurrence.hpp"
#include "drg/upsilon.hpp"
#include "drg/verify.hpp"

namespace drg::io {

using json = nlohmann::json;

inline constexpr const char* kSchema = "drg-spectra/1";
inline constexpr const char* kFeasibilityNote =
    "feasible means every implemented necessary condition holds; a graph with this array need not exist";

json document(const std::string& command);

json rational_json(const Rational& q);
json algebraic_json(const AlgebraicNumber& x);
json array_json(const IntersectionArray& a);
json triple_json(const Triple& t);
json sequence_json(const GraphicalSequence& g);
json spectrum_json(const Spectrum& s, const ChristoffelTable& table);
json verdict_json(const FeasibilityVerdict& v);
json guide_json(const GuideData& g);
json interval_json(const WellPlacedInterval& w, const LenGap& m);
json bad_set_json(const BadRootSet& b);
json check_json(const CheckResult& r);
json order_st_json(const OrderSTReport& r);
json upsilon_json(const UpsilonSup& s);
json trace_json(const std::vector<TraceRow>& rows);

}  // namespace drg::io
