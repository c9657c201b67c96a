#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "thickset/core_lemma.hpp"
#include "thickset/density.hpp"
#include "thickset/family.hpp"
#include "thickset/grid.hpp"
#include "thickset/interval_set.hpp"
#include "thickset/ktree.hpp"
#include "thickset/ramsey.hpp"
#include "thickset/rational.hpp"
#include "thickset/report.hpp"
#include "thickset/search.hpp"

namespace thickset {

using Json = nlohmann::json;

// Canonical rendering: two-space indent, keys in sorted order (the library
// default), one trailing newline. Identical values give identical bytes.
std::string canonicalDump(const Json& j);

Json ratToJson(const Rat& x);  // "num/den" string
Rat ratFromJson(const Json& j);

Json gridColoringToJson(const GridColoring& g);
GridColoring gridColoringFromJson(const Json& j);

Json witnessToJson(const RectangleWitness& w);  // {"M": [...], "N": [...]}
Json thickVerdictToJson(const ThickVerdict& v);

Json familyToJson(const SubsetFamily& f);
SubsetFamily familyFromJson(const Json& j);

Json blockMapToJson(const BlockMap& bm);
BlockMap blockMapFromJson(const Json& j);

Json breakingToJson(const BreakingFunction& f);  // plain value array
Json splitTraceToJson(const SplitTrace& t);

Json reportToJson(const WitnessReport& r);  // {"pass": ..., "violations": [...]}

Json intervalSetToJson(const IntervalSet& s);
Json kAssignmentToJson(const KAssignment& ka);

Json boxesToJson(const std::vector<RatBox>& boxes);
std::vector<RatBox> boxesFromJson(const Json& j);

Json densityAuditToJson(const DensityAudit& a);

Json extractionToJson(const Extraction& e);
Json witnessPairToJson(const WitnessPair& w);

Json searchOutcomeToJson(const SearchOutcome& o);  // stats without wall time

// Header m,mu,nu,T,status; one row per cell, status exact | unknown.
std::string tableToCsv(const std::vector<TableCell>& table);
Json tableToJson(const std::vector<TableCell>& table);

// Integer matrix for file-backed oracles.
std::vector<std::vector<int>> matrixFromJson(const Json& j);

std::string readTextFile(const std::string& path);
void writeTextFile(const std::string& path, const std::string& content);

}  // namespace thickset
