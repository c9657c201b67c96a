#include "thickset/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace thickset {

std::string canonicalDump(const Json& j) { return j.dump(2) + "\n"; }

Json ratToJson(const Rat& x) { return ratToString(x); }

Rat ratFromJson(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("ratFromJson: expected a string");
  return ratFromString(j.get<std::string>());
}

Json gridColoringToJson(const GridColoring& g) {
  Json cells = Json::array();
  for (std::size_t r = 0; r < g.rows; ++r) {
    for (std::size_t c = 0; c < g.cols; ++c) {
      cells.push_back(Json::array({r, c, g.at(r, c)}));
    }
  }
  return Json{{"rows", g.rows}, {"cols", g.cols}, {"classCount", g.classCount}, {"cells", cells}};
}

GridColoring gridColoringFromJson(const Json& j) {
  GridColoring g(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(),
                 j.at("classCount").get<std::size_t>());
  for (const Json& cell : j.at("cells")) {
    if (!cell.is_array() || cell.size() != 3) {
      throw std::invalid_argument("gridColoringFromJson: cell entries are [r, c, classId]");
    }
    std::size_t r = cell[0].get<std::size_t>();
    std::size_t c = cell[1].get<std::size_t>();
    if (r >= g.rows || c >= g.cols) {
      throw std::invalid_argument("gridColoringFromJson: cell outside the grid");
    }
    g.assign(r, c, cell[2].get<int>());
  }
  return g;
}

Json witnessToJson(const RectangleWitness& w) { return Json{{"M", w.rowSet}, {"N", w.colSet}}; }

Json thickVerdictToJson(const ThickVerdict& v) {
  Json j{{"thick", v.thick}};
  j["witness"] = v.witness ? witnessToJson(*v.witness) : Json(nullptr);
  return j;
}

Json familyToJson(const SubsetFamily& f) {
  return Json{{"universe", f.universeSize}, {"sets", f.sets}};
}

SubsetFamily familyFromJson(const Json& j) {
  SubsetFamily f;
  f.universeSize = j.at("universe").get<std::size_t>();
  f.sets = j.at("sets").get<std::vector<std::vector<std::size_t>>>();
  validateFamily(f);
  return f;
}

Json blockMapToJson(const BlockMap& bm) {
  return Json{{"targetCols", bm.targetCols}, {"blocks", bm.blocks}};
}

BlockMap blockMapFromJson(const Json& j) {
  BlockMap bm;
  bm.targetCols = j.at("targetCols").get<std::size_t>();
  bm.blocks = j.at("blocks").get<std::vector<std::vector<std::size_t>>>();
  validateBlockMap(bm);
  return bm;
}

Json breakingToJson(const BreakingFunction& f) { return Json(f.values); }

Json splitTraceToJson(const SplitTrace& t) {
  Json rounds = Json::array();
  for (const SplitRound& r : t.rounds) {
    rounds.push_back(Json{{"pool", r.pool}, {"splitter", r.splitter}, {"piece", r.piece}});
  }
  return Json{{"rounds", rounds}, {"residual", t.residual}};
}

Json reportToJson(const WitnessReport& r) {
  Json violations = Json::array();
  for (const Violation& v : r.violations) {
    violations.push_back(Json{{"kind", v.kind},
                              {"column", v.column},
                              {"member", v.member},
                              {"classId", v.classId},
                              {"detail", v.detail}});
  }
  return Json{{"pass", r.pass}, {"violations", violations}};
}

namespace {

Json boundToJson(const Bound& b) {
  switch (b.kind) {
    case Bound::Kind::Unbounded:
      return Json{{"kind", "unbounded"}, {"value", nullptr}};
    case Bound::Kind::Open:
      return Json{{"kind", "open"}, {"value", ratToJson(b.value)}};
    case Bound::Kind::Closed:
      return Json{{"kind", "closed"}, {"value", ratToJson(b.value)}};
  }
  throw std::logic_error("boundToJson: bad kind");
}

}  // namespace

Json intervalSetToJson(const IntervalSet& s) {
  Json parts = Json::array();
  for (const Interval& iv : s.parts()) {
    parts.push_back(Json{{"lo", boundToJson(iv.lo)}, {"hi", boundToJson(iv.hi)}});
  }
  return parts;
}

Json kAssignmentToJson(const KAssignment& ka) {
  Json points = Json::array();
  for (const auto& [x, y] : ka.points) {
    points.push_back(Json::array({ratToJson(x), ratToJson(y)}));
  }
  Json entries = Json::array();
  for (const LinearOpenSet& e : ka.entries) {
    entries.push_back(Json{{"axis", e.axis == Axis::Horizontal ? "horizontal" : "vertical"},
                           {"line", ratToJson(e.lineCoord)},
                           {"set", intervalSetToJson(e.set)}});
  }
  return Json{{"horizon", ka.horizon}, {"points", points}, {"entries", entries}};
}

Json boxesToJson(const std::vector<RatBox>& boxes) {
  Json out = Json::array();
  for (const RatBox& box : boxes) {
    Json sides = Json::array();
    for (const auto& [lo, hi] : box.sides) {
      sides.push_back(Json::array({ratToJson(lo), ratToJson(hi)}));
    }
    out.push_back(sides);
  }
  return out;
}

std::vector<RatBox> boxesFromJson(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("boxesFromJson: expected an array of boxes");
  std::vector<RatBox> boxes;
  for (const Json& sides : j) {
    RatBox box;
    for (const Json& side : sides) {
      if (!side.is_array() || side.size() != 2) {
        throw std::invalid_argument("boxesFromJson: sides are [lo, hi] pairs");
      }
      Rat lo = ratFromJson(side[0]);
      Rat hi = ratFromJson(side[1]);
      if (!(lo < hi)) throw std::invalid_argument("boxesFromJson: empty side");
      box.sides.emplace_back(lo, hi);
    }
    if (box.sides.empty()) throw std::invalid_argument("boxesFromJson: box without sides");
    boxes.push_back(std::move(box));
  }
  return boxes;
}

Json densityAuditToJson(const DensityAudit& a) {
  Json cells = Json::array();
  for (const DensityCell& cell : a.cells) {
    Json c{{"box", cell.box}, {"classId", cell.classId}};
    c["firstIndex"] = cell.firstIndex ? Json(*cell.firstIndex) : Json(nullptr);
    cells.push_back(c);
  }
  Json maxRank = Json::array();
  for (const auto& r : a.maxRankPerBox) maxRank.push_back(r ? Json(*r) : Json(nullptr));
  return Json{{"cells", cells}, {"maxRankPerBox", maxRank}, {"report", reportToJson(a.report)}};
}

Json extractionToJson(const Extraction& e) {
  Json pivots = Json::array();
  for (const auto& [pivot, color] : e.pivots) pivots.push_back(Json::array({pivot, color}));
  return Json{{"set", e.set}, {"color", e.color}, {"pivots", pivots}};
}

Json witnessPairToJson(const WitnessPair& w) {
  return Json{{"K", w.K},
              {"L", w.L},
              {"colorSet", w.colorSet},
              {"upperColor", w.upperColor},
              {"lowerColor", w.lowerColor}};
}

Json searchOutcomeToJson(const SearchOutcome& o) {
  Json j;
  switch (o.status) {
    case SearchStatus::Sat:
      j["status"] = "sat";
      break;
    case SearchStatus::Unsat:
      j["status"] = "unsat";
      break;
    case SearchStatus::Budget:
      j["status"] = "budget";
      break;
  }
  j["certificate"] = o.certificate ? gridColoringToJson(*o.certificate) : Json(nullptr);
  j["stats"] = Json{{"nodes", o.stats.nodes}, {"prunes", o.stats.prunes}};
  return j;
}

std::string tableToCsv(const std::vector<TableCell>& table) {
  std::ostringstream out;
  out << "m,mu,nu,T,status\n";
  for (const TableCell& cell : table) {
    out << cell.m << ',' << cell.mu << ',' << cell.nu << ',' << cell.thickNumber << ','
        << (cell.status == CellStatus::Exact ? "exact" : "unknown") << '\n';
  }
  return out.str();
}

Json tableToJson(const std::vector<TableCell>& table) {
  Json out = Json::array();
  for (const TableCell& cell : table) {
    Json j{{"m", cell.m},
           {"mu", cell.mu},
           {"nu", cell.nu},
           {"T", cell.thickNumber},
           {"status", cell.status == CellStatus::Exact ? "exact" : "unknown"}};
    j["certificate"] = cell.certificate ? gridColoringToJson(*cell.certificate) : Json(nullptr);
    out.push_back(j);
  }
  return out;
}

std::vector<std::vector<int>> matrixFromJson(const Json& j) {
  auto cells = j.get<std::vector<std::vector<int>>>();
  if (cells.empty()) throw std::invalid_argument("matrixFromJson: empty matrix");
  for (const auto& row : cells) {
    if (row.size() != cells.size()) {
      throw std::invalid_argument("matrixFromJson: matrix must be square");
    }
  }
  return cells;
}

std::string readTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void writeTextFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace thickset
