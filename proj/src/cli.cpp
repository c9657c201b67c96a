#include "thickset/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "thickset/breakers.hpp"
#include "thickset/density.hpp"
#include "thickset/errors.hpp"
#include "thickset/json_io.hpp"
#include "thickset/ktree.hpp"
#include "thickset/order_type.hpp"
#include "thickset/rng.hpp"

namespace thickset {

namespace {

// Oracle registry: constant:<k>, order3, random:<seed>, file:<path>.
GridOracle parseOracle(const std::string& spec, std::size_t m) {
  if (spec == "order3") return order3Oracle(m);
  if (spec.rfind("constant:", 0) == 0) {
    try {
      return constantOracle(m, std::stoi(spec.substr(9)));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad oracle spec, want constant:<k>: " + spec);
    }
  }
  if (spec.rfind("random:", 0) == 0) {
    try {
      return randomOracle(m, std::stoull(spec.substr(7)));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad oracle spec, want random:<seed>: " + spec);
    }
  }
  if (spec.rfind("file:", 0) == 0) {
    auto cells = matrixFromJson(Json::parse(readTextFile(spec.substr(5))));
    if (cells.size() != m) {
      throw std::invalid_argument("oracle matrix side " + std::to_string(cells.size()) +
                                  " does not match --m " + std::to_string(m));
    }
    return matrixOracle(std::move(cells));
  }
  throw std::invalid_argument("unknown oracle: " + spec);
}

// Family argument: all, sampled:<count>, or a JSON file path.
FamilyEnumeration parseFamilySpec(const std::string& spec, std::size_t ground, std::size_t mu,
                                  std::uint64_t seed) {
  if (spec == "all") return FamilyEnumeration::allSubsets(ground, mu);
  if (spec.rfind("sampled:", 0) == 0) {
    std::size_t count = std::stoul(spec.substr(8));
    return FamilyEnumeration::sampled(ground, mu, count, seed);
  }
  SubsetFamily f = familyFromJson(Json::parse(readTextFile(spec)));
  if (ground != 0 && ground != f.universeSize) {
    throw std::invalid_argument("family universe does not match --ground");
  }
  return FamilyEnumeration::custom(f.universeSize, f.sets);
}

struct Sink {
  std::string path;  // empty: stdout
  std::ostream* fallback = nullptr;

  void text(const std::string& content) const {
    if (path.empty()) {
      *fallback << content;
    } else {
      writeTextFile(path, content);
    }
  }
  void json(const Json& report) const { text(canonicalDump(report)); }
};

Json selectionViolation(const SelectionExhausted& e) {
  WitnessReport rep;
  rep.add({"selection-exhausted", e.column, e.setIndex, -1, e.what()});
  return reportToJson(rep);
}

Json splitterViolation(const SplitterNotFound& e) {
  WitnessReport rep;
  rep.add({"splitter-not-found", e.column, e.round, -1, e.what()});
  return reportToJson(rep);
}

}  // namespace

int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite thick-partition laboratory"};
  app.require_subcommand(1);
  int code = 0;

  // ---- thick ----------------------------------------------------------
  auto* thick = app.add_subcommand("thick", "thickness oracle over grid colorings");
  thick->require_subcommand(1);

  struct {
    std::string grid, outPath;
    int cls = 0;
    std::size_t mu = 0, nu = 0;
  } tc;
  auto* thickCheck = thick->add_subcommand("check", "decide (mu, nu)-thickness of one class");
  thickCheck->add_option("--grid", tc.grid, "coloring JSON file")->required();
  thickCheck->add_option("--class", tc.cls, "class id to test")->required();
  thickCheck->add_option("--mu", tc.mu, "rows per test rectangle")->required();
  thickCheck->add_option("--nu", tc.nu, "columns per test rectangle")->required();
  thickCheck->add_option("--out", tc.outPath, "report path (default stdout)");
  thickCheck->callback([&] {
    GridColoring g = gridColoringFromJson(Json::parse(readTextFile(tc.grid)));
    ThickVerdict v = isThick(g.classCells(tc.cls), {tc.mu, tc.nu});
    Json config{{"subcommand", "thick check"},
                {"class", tc.cls},
                {"mu", tc.mu},
                {"nu", tc.nu}};
    Sink{tc.outPath, &out}.json(Json{{"config", config}, {"verdict", thickVerdictToJson(v)}});
    code = v.thick ? 0 : 1;
  });

  struct {
    std::string grid, outPath;
    int cls = 0;
    std::vector<std::size_t> rows, cols;
    std::size_t mu = 0, nu = 0;
  } tr;
  auto* thickRestrict = thick->add_subcommand("restrict", "reindex a class onto chosen rows/cols");
  thickRestrict->add_option("--grid", tr.grid, "coloring JSON file")->required();
  thickRestrict->add_option("--class", tr.cls, "class id")->required();
  thickRestrict->add_option("--rows", tr.rows, "row subset")->required()->delimiter(',');
  thickRestrict->add_option("--cols", tr.cols, "column subset")->required()->delimiter(',');
  thickRestrict->add_option("--mu", tr.mu, "optional thickness check rows");
  thickRestrict->add_option("--nu", tr.nu, "optional thickness check columns");
  thickRestrict->add_option("--out", tr.outPath, "report path (default stdout)");
  thickRestrict->callback([&] {
    GridColoring g = gridColoringFromJson(Json::parse(readTextFile(tr.grid)));
    CellSet sub = restrict(g.classCells(tr.cls), tr.rows, tr.cols);
    Json cells = Json::array();
    for (std::size_t r = 0; r < sub.rows(); ++r) {
      for (std::size_t c = 0; c < sub.cols(); ++c) {
        if (sub.test(r, c)) cells.push_back(Json::array({r, c}));
      }
    }
    Json config{{"subcommand", "thick restrict"}, {"class", tr.cls},
                {"rows", tr.rows},              {"cols", tr.cols},
                {"mu", tr.mu},                  {"nu", tr.nu}};
    Json payload{{"config", config},
                 {"restricted", Json{{"rows", sub.rows()}, {"cols", sub.cols()}, {"cells", cells}}}};
    bool pass = true;
    if (tr.mu > 0 && tr.nu > 0) {
      ThickVerdict v = isThick(sub, {tr.mu, tr.nu});
      payload["verdict"] = thickVerdictToJson(v);
      pass = v.thick;
    }
    Sink{tr.outPath, &out}.json(payload);
    code = pass ? 0 : 1;
  });

  struct {
    std::string grid, blocks, outPath;
    std::size_t targetCols = 0, mu = 0, nu = 0;
  } tl;
  auto* thickLift = thick->add_subcommand("lift", "spread columns over blocks, check classes");
  thickLift->add_option("--grid", tl.grid, "source coloring JSON file")->required();
  thickLift->add_option("--target-cols", tl.targetCols, "lifted column count")->required();
  thickLift->add_option("--blocks", tl.blocks, "block map JSON (default contiguous)");
  thickLift->add_option("--mu", tl.mu, "optional thickness check rows");
  thickLift->add_option("--nu", tl.nu, "optional thickness check columns");
  thickLift->add_option("--out", tl.outPath, "report path (default stdout)");
  thickLift->callback([&] {
    GridColoring g = gridColoringFromJson(Json::parse(readTextFile(tl.grid)));
    BlockMap bm = tl.blocks.empty() ? contiguousBlocks(g.cols, tl.targetCols)
                                    : blockMapFromJson(Json::parse(readTextFile(tl.blocks)));
    GridColoring lifted = liftByCofinality(g, bm);
    Json config{{"subcommand", "thick lift"},
                {"targetCols", tl.targetCols},
                {"mu", tl.mu},
                {"nu", tl.nu}};
    Json payload{{"config", config},
                 {"blocks", blockMapToJson(bm)},
                 {"lifted", gridColoringToJson(lifted)}};
    bool pass = true;
    if (tl.mu > 0 && tl.nu > 0) {
      Json verdicts = Json::array();
      for (std::size_t k = 0; k < lifted.classCount; ++k) {
        ThickVerdict v = isThick(lifted.classCells(static_cast<int>(k)), {tl.mu, tl.nu});
        pass = pass && v.thick;
        Json entry = thickVerdictToJson(v);
        entry["classId"] = k;
        verdicts.push_back(entry);
      }
      payload["verdicts"] = verdicts;
    }
    Sink{tl.outPath, &out}.json(payload);
    code = pass ? 0 : 1;
  });

  // ---- break ----------------------------------------------------------
  auto* brk = app.add_subcommand("break", "breaking-function constructions");
  brk->require_subcommand(1);

  struct {
    std::string family, outPath;
    std::size_t range = 0;
    std::int64_t depth = -1;
  } bk;
  auto* breakKur = brk->add_subcommand("kuratowski", "diagonal greedy breaking function");
  breakKur->add_option("--family", bk.family, "family JSON file")->required();
  breakKur->add_option("--range", bk.range, "range size")->required();
  breakKur->add_option("--depth", bk.depth, "cover only [0, depth) instead of the full range");
  breakKur->add_option("--out", bk.outPath, "report path (default stdout)");
  breakKur->callback([&] {
    SubsetFamily fam = familyFromJson(Json::parse(readTextFile(bk.family)));
    Json config{{"subcommand", "break kuratowski"}, {"range", bk.range}, {"depth", bk.depth}};
    Sink sink{bk.outPath, &out};
    try {
      BreakingFunction f = bk.depth >= 0
                               ? prefixBreak(fam, static_cast<std::size_t>(bk.depth), bk.range)
                               : kuratowskiBreak(fam, bk.range);
      sink.json(Json{{"config", config},
                     {"breaking", breakingToJson(f)},
                     {"rangeTarget", f.rangeTarget},
                     {"report", reportToJson(WitnessReport{})}});
      code = 0;
    } catch (const SelectionExhausted& e) {
      sink.json(Json{{"config", config}, {"breaking", nullptr}, {"report", selectionViolation(e)}});
      code = 1;
    }
  });

  struct {
    std::string family, outPath;
    std::size_t parts = 0;
    std::uint64_t seed = 0;
    SplitBudget budget;
  } bs;
  auto* breakSplit = brk->add_subcommand("split", "recursive splitter trace");
  breakSplit->add_option("--family", bs.family, "family JSON file")->required();
  breakSplit->add_option("--parts", bs.parts, "number of split rounds")->required();
  breakSplit->add_option("--seed", bs.seed, "master seed");
  breakSplit->add_option("--min-side", bs.budget.minSideSize, "wideness threshold per trace");
  breakSplit->add_option("--exhaustive-bits", bs.budget.exhaustiveBits,
                         "full sweep up to this pool size");
  breakSplit->add_option("--trials", bs.budget.randomTrials, "random candidates past the sweep");
  breakSplit->add_option("--out", bs.outPath, "report path (default stdout)");
  breakSplit->callback([&] {
    SubsetFamily fam = familyFromJson(Json::parse(readTextFile(bs.family)));
    Json config{{"subcommand", "break split"},
                {"parts", bs.parts},
                {"seed", bs.seed},
                {"minSide", bs.budget.minSideSize},
                {"exhaustiveBits", bs.budget.exhaustiveBits},
                {"trials", bs.budget.randomTrials}};
    Sink sink{bs.outPath, &out};
    try {
      auto [trace, f] = splitFamily(fam, bs.parts, bs.seed, bs.budget);
      sink.json(Json{{"config", config},
                     {"trace", splitTraceToJson(trace)},
                     {"breaking", breakingToJson(f)},
                     {"report", reportToJson(WitnessReport{})}});
      code = 0;
    } catch (const SplitterNotFound& e) {
      sink.json(Json{{"config", config}, {"trace", nullptr}, {"report", splitterViolation(e)}});
      code = 1;
    }
  });

  // ---- corelemma ------------------------------------------------------
  auto* core = app.add_subcommand("corelemma", "grid assembly via column breaking");
  core->require_subcommand(1);

  struct {
    std::string familySpec = "all", variant = "tau", outPath;
    std::size_t ground = 0, mu = 0, cols = 0, tau = 0;
    std::vector<std::size_t> thresholds;
    std::uint64_t seed = 0;
  } ca;
  auto* coreAssemble = core->add_subcommand("assemble", "build and audit a coloring");
  coreAssemble->add_option("--ground", ca.ground, "ground segment size")->required();
  coreAssemble->add_option("--mu", ca.mu, "member size")->required();
  coreAssemble->add_option("--cols", ca.cols, "grid columns")->required();
  coreAssemble->add_option("--tau", ca.tau, "class count (tau variant)");
  coreAssemble->add_option("--variant", ca.variant, "tau | lambda")
      ->check(CLI::IsMember({"tau", "lambda"}));
  coreAssemble->add_option("--family", ca.familySpec, "all | sampled:<count> | <file.json>");
  coreAssemble->add_option("--thresholds", ca.thresholds, "per-column member thresholds")
      ->delimiter(',');
  coreAssemble->add_option("--seed", ca.seed, "master seed");
  coreAssemble->add_option("--out", ca.outPath, "report path (default stdout)");
  coreAssemble->callback([&] {
    FamilyEnumeration fam = parseFamilySpec(ca.familySpec, ca.ground, ca.mu, ca.seed);
    std::vector<std::size_t> thresholds =
        ca.thresholds.empty() ? defaultThresholds(fam.count(), ca.cols) : ca.thresholds;
    Json config{{"subcommand", "corelemma assemble"},
                {"ground", ca.ground},
                {"mu", ca.mu},
                {"cols", ca.cols},
                {"tau", ca.tau},
                {"variant", ca.variant},
                {"family", ca.familySpec},
                {"thresholds", thresholds},
                {"seed", ca.seed}};
    Sink sink{ca.outPath, &out};
    Variant variant = ca.variant == "tau" ? Variant::Tau : Variant::Lambda;
    try {
      Assembly a = variant == Variant::Tau
                       ? assembleTau(fam, ca.cols, ca.tau, thresholds)
                       : assembleLambda(fam, ca.cols, thresholds);
      WitnessReport audit = auditAssembly(a.coloring, fam, a.schedule, variant);
      sink.json(Json{{"config", config},
                     {"coloring", gridColoringToJson(a.coloring)},
                     {"audit", reportToJson(audit)}});
      code = audit.pass ? 0 : 1;
    } catch (const SelectionExhausted& e) {
      sink.json(Json{{"config", config}, {"coloring", nullptr}, {"audit", selectionViolation(e)}});
      code = 1;
    }
  });

  struct {
    std::string grid, familySpec = "all", variant = "tau", outPath;
    std::size_t ground = 0, mu = 0;
    std::vector<std::size_t> thresholds;
    std::uint64_t seed = 0;
  } cu;
  auto* coreAudit = core->add_subcommand("audit", "re-audit an existing coloring");
  coreAudit->add_option("--grid", cu.grid, "coloring JSON file")->required();
  coreAudit->add_option("--ground", cu.ground, "ground segment size")->required();
  coreAudit->add_option("--mu", cu.mu, "member size")->required();
  coreAudit->add_option("--variant", cu.variant, "tau | lambda")
      ->check(CLI::IsMember({"tau", "lambda"}));
  coreAudit->add_option("--family", cu.familySpec, "all | sampled:<count> | <file.json>");
  coreAudit->add_option("--thresholds", cu.thresholds, "per-column member thresholds")
      ->delimiter(',');
  coreAudit->add_option("--seed", cu.seed, "master seed");
  coreAudit->add_option("--out", cu.outPath, "report path (default stdout)");
  coreAudit->callback([&] {
    GridColoring g = gridColoringFromJson(Json::parse(readTextFile(cu.grid)));
    FamilyEnumeration fam = parseFamilySpec(cu.familySpec, cu.ground, cu.mu, cu.seed);
    BreakSchedule schedule;
    schedule.colCount = g.cols;
    schedule.thresholds =
        cu.thresholds.empty() ? defaultThresholds(fam.count(), g.cols) : cu.thresholds;
    Json config{{"subcommand", "corelemma audit"},
                {"ground", cu.ground},
                {"mu", cu.mu},
                {"variant", cu.variant},
                {"family", cu.familySpec},
                {"thresholds", schedule.thresholds},
                {"seed", cu.seed}};
    Variant variant = cu.variant == "tau" ? Variant::Tau : Variant::Lambda;
    WitnessReport audit = auditAssembly(g, fam, schedule, variant);
    Sink{cu.outPath, &out}.json(Json{{"config", config}, {"audit", reportToJson(audit)}});
    code = audit.pass ? 0 : 1;
  });

  struct {
    std::string name, blocks, family, outPath;
    std::size_t rows = 0, cols = 0, mu = 0, tau = 0, sourceCols = 0;
    std::uint64_t seed = 0;
  } cs;
  auto* coreScenario = core->add_subcommand("scenario", "end-to-end preset runs");
  coreScenario->add_option("--name", cs.name, "square | rectangle | cofinal-lift | unsplitting")
      ->required();
  coreScenario->add_option("--rows", cs.rows, "ground segment size");
  coreScenario->add_option("--cols", cs.cols, "grid columns");
  coreScenario->add_option("--mu", cs.mu, "member size");
  coreScenario->add_option("--tau", cs.tau, "class count");
  coreScenario->add_option("--source-cols", cs.sourceCols, "columns before lifting");
  coreScenario->add_option("--blocks", cs.blocks, "block map JSON (cofinal-lift)");
  coreScenario->add_option("--family", cs.family, "family JSON (unsplitting)");
  coreScenario->add_option("--seed", cs.seed, "master seed");
  coreScenario->add_option("--out", cs.outPath, "report path (default stdout)");
  coreScenario->callback([&] {
    ScenarioRequest request;
    request.name = cs.name;
    request.rows = cs.rows;
    request.cols = cs.cols;
    request.mu = cs.mu;
    request.tau = cs.tau;
    request.sourceCols = cs.sourceCols;
    request.seed = cs.seed;
    if (!cs.blocks.empty()) {
      request.blocks = blockMapFromJson(Json::parse(readTextFile(cs.blocks)));
    }
    if (!cs.family.empty()) {
      request.customFamily = familyFromJson(Json::parse(readTextFile(cs.family)));
    }
    Json config{{"subcommand", "corelemma scenario"},
                {"name", cs.name},
                {"rows", cs.rows},
                {"cols", cs.cols},
                {"mu", cs.mu},
                {"tau", cs.tau},
                {"sourceCols", cs.sourceCols},
                {"seed", cs.seed}};
    Sink sink{cs.outPath, &out};
    try {
      ScenarioResult result = runScenario(request);
      sink.json(Json{{"config", config},
                     {"family", familyToJson(result.fam.family)},
                     {"coloring", gridColoringToJson(result.finalColoring)},
                     {"audit", reportToJson(result.report)}});
      code = result.report.pass ? 0 : 1;
    } catch (const SelectionExhausted& e) {
      sink.json(Json{{"config", config}, {"coloring", nullptr}, {"audit", selectionViolation(e)}});
      code = 1;
    } catch (const SplitterNotFound& e) {
      sink.json(Json{{"config", config}, {"coloring", nullptr}, {"audit", splitterViolation(e)}});
      code = 1;
    }
  });

  // ---- ramsey ---------------------------------------------------------
  auto* ramsey = app.add_subcommand("ramsey", "monochromatic extraction and witnesses");
  ramsey->require_subcommand(1);

  struct {
    std::string oracle, outPath;
    std::size_t m = 0;
  } re;
  auto* ramseyExtractCmd = ramsey->add_subcommand("extract", "pivot-chain monochromatic set");
  ramseyExtractCmd->add_option("--oracle", re.oracle, "constant:<k> | order3 | random:<seed> | file:<path>")
      ->required();
  ramseyExtractCmd->add_option("--m", re.m, "index set size")->required();
  ramseyExtractCmd->add_option("--out", re.outPath, "report path (default stdout)");
  ramseyExtractCmd->callback([&] {
    GridOracle oracle = parseOracle(re.oracle, re.m);
    PairColoring pairs{oracle.size, oracle.colors, [oracle](std::size_t i, std::size_t j) {
                         return oracle.value(std::min(i, j), std::max(i, j));
                       }};
    Extraction e = ramseyExtract(pairs);
    Json config{{"subcommand", "ramsey extract"}, {"oracle", re.oracle}, {"m", re.m}};
    Sink{re.outPath, &out}.json(
        Json{{"config", config}, {"extraction", extractionToJson(e)}, {"size", e.set.size()}});
    code = 0;
  });

  struct {
    std::string oracle, outPath;
    std::size_t m = 0;
  } rw;
  auto* ramseyWitness = ramsey->add_subcommand("witness", "two-sided anti-thickness witness");
  ramseyWitness->add_option("--oracle", rw.oracle, "constant:<k> | order3 | random:<seed> | file:<path>")
      ->required();
  ramseyWitness->add_option("--m", rw.m, "index set size")->required();
  ramseyWitness->add_option("--out", rw.outPath, "report path (default stdout)");
  ramseyWitness->callback([&] {
    GridOracle oracle = parseOracle(rw.oracle, rw.m);
    Json config{{"subcommand", "ramsey witness"}, {"oracle", rw.oracle}, {"m", rw.m}};
    Sink sink{rw.outPath, &out};
    try {
      WitnessPair w = antiThickWitness(oracle);
      sink.json(Json{{"config", config},
                     {"witness", witnessPairToJson(w)},
                     {"report", reportToJson(WitnessReport{})}});
      code = 0;
    } catch (const DegenerateWitness& e) {
      WitnessReport rep;
      rep.add({"degenerate-witness", -1, e.trapSize, -1, e.what()});
      sink.json(Json{{"config", config}, {"witness", nullptr}, {"report", reportToJson(rep)}});
      code = 1;
    }
  });

  // ---- search ---------------------------------------------------------
  auto* search = app.add_subcommand("search", "exhaustive thick-partition search");
  search->require_subcommand(1);

  struct {
    std::string outPath, emitPath;
    std::size_t m = 0, mu = 0, nu = 0, p = 0;
    std::uint64_t budget = SearchBudget{}.maxNodes;
  } ss;
  auto* searchSolve = search->add_subcommand("solve", "decide one (m, mu, nu, p) instance");
  searchSolve->add_option("--m", ss.m, "grid side")->required();
  searchSolve->add_option("--mu", ss.mu, "rows per rectangle")->required();
  searchSolve->add_option("--nu", ss.nu, "columns per rectangle")->required();
  searchSolve->add_option("--p", ss.p, "class count")->required();
  searchSolve->add_option("--budget", ss.budget, "node budget");
  searchSolve->add_option("--emit", ss.emitPath, "write the certificate here on SAT");
  searchSolve->add_option("--out", ss.outPath, "report path (default stdout)");
  searchSolve->callback([&] {
    SearchOutcome outcome = solve({ss.m, ss.mu, ss.nu, ss.p}, {ss.budget});
    Json config{{"subcommand", "search solve"},
                {"m", ss.m},
                {"mu", ss.mu},
                {"nu", ss.nu},
                {"p", ss.p},
                {"budget", ss.budget}};
    Json payload = searchOutcomeToJson(outcome);
    payload["config"] = config;
    Sink{ss.outPath, &out}.json(payload);
    if (outcome.certificate && !ss.emitPath.empty()) {
      writeTextFile(ss.emitPath, canonicalDump(gridColoringToJson(*outcome.certificate)));
    }
    code = outcome.status == SearchStatus::Sat    ? 0
           : outcome.status == SearchStatus::Unsat ? 1
                                                   : 3;
  });

  struct {
    std::string outPath, format = "csv";
    std::size_t mMax = 0, muNuMax = 3;
    std::uint64_t budget = SearchBudget{}.maxNodes;
  } st;
  auto* searchTable = search->add_subcommand("table", "thick-number table over small grids");
  searchTable->add_option("--m-max", st.mMax, "largest grid side")->required();
  searchTable->add_option("--mu-nu-max", st.muNuMax, "largest rectangle side");
  searchTable->add_option("--budget", st.budget, "node budget per solve");
  searchTable->add_option("--format", st.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  searchTable->add_option("--out", st.outPath, "report path (default stdout)");
  searchTable->callback([&] {
    std::vector<TableCell> table = thickNumberTable(st.mMax, st.muNuMax, {st.budget});
    Sink sink{st.outPath, &out};
    if (st.format == "csv") {
      sink.text(tableToCsv(table));
    } else {
      Json config{{"subcommand", "search table"},
                  {"mMax", st.mMax},
                  {"muNuMax", st.muNuMax},
                  {"budget", st.budget}};
      sink.json(Json{{"config", config}, {"table", tableToJson(table)}});
    }
    bool exhausted = false;
    for (const TableCell& cell : table) exhausted = exhausted || cell.status == CellStatus::Unknown;
    code = exhausted ? 3 : 0;
  });

  struct {
    std::string cert, outPath;
    std::size_t mu = 0, nu = 0, p = 0;
  } sv;
  auto* searchVerify = search->add_subcommand("verify", "re-check a certificate file");
  searchVerify->add_option("--cert", sv.cert, "certificate JSON file")->required();
  searchVerify->add_option("--mu", sv.mu, "rows per rectangle")->required();
  searchVerify->add_option("--nu", sv.nu, "columns per rectangle")->required();
  searchVerify->add_option("--p", sv.p, "class count (default: the file's classCount)");
  searchVerify->add_option("--out", sv.outPath, "report path (default stdout)");
  searchVerify->callback([&] {
    GridColoring g = gridColoringFromJson(Json::parse(readTextFile(sv.cert)));
    std::size_t p = sv.p == 0 ? g.classCount : sv.p;
    WitnessReport report = verifyCertificate(g, {g.rows, sv.mu, sv.nu, p});
    Json config{{"subcommand", "search verify"}, {"mu", sv.mu}, {"nu", sv.nu}, {"p", p}};
    Sink{sv.outPath, &out}.json(Json{{"config", config}, {"report", reportToJson(report)}});
    code = report.pass ? 0 : 1;
  });

  // ---- resolve --------------------------------------------------------
  struct {
    std::string mode = "ktree", boxes = "default", outPath;
    std::size_t points = 0, classes = 4, arity = 2, boxCount = 20;
    std::uint64_t seed = 0;
  } rv;
  auto* resolve = app.add_subcommand("resolve", "dense-class audits over the enumerated plane");
  resolve->add_option("--points", rv.points, "enumeration horizon")->required();
  resolve->add_option("--classes", rv.classes, "class count (ktree mode)");
  resolve->add_option("--mode", rv.mode, "ktree | ordertype")
      ->check(CLI::IsMember({"ktree", "ordertype"}));
  resolve->add_option("--arity", rv.arity, "tuple arity (ordertype mode)");
  resolve->add_option("--boxes", rv.boxes, "default | <boxes.json>");
  resolve->add_option("--box-count", rv.boxCount, "seeded box count for default boxes");
  resolve->add_option("--seed", rv.seed, "box sampling seed");
  resolve->add_option("--out", rv.outPath, "report path (default stdout)");
  resolve->callback([&] {
    std::size_t arity = rv.mode == "ktree" ? 2 : rv.arity;
    std::vector<RatBox> boxes = rv.boxes == "default"
                                    ? seededBoxes(rv.boxCount, arity, rv.seed)
                                    : boxesFromJson(Json::parse(readTextFile(rv.boxes)));
    Json config{{"subcommand", "resolve"},
                {"mode", rv.mode},
                {"points", rv.points},
                {"classes", rv.classes},
                {"arity", rv.arity},
                {"boxes", rv.boxes},
                {"boxCount", rv.boxCount},
                {"seed", rv.seed}};
    Sink sink{rv.outPath, &out};
    if (rv.mode == "ktree") {
      KAssignment ka = buildKAssignment(rv.points);
      WitnessReport conditions = verifyKConditions(ka);
      RankTable rt = rankTable(ka);
      DensityAudit audit =
          densityAuditKTree(ka, rt, defaultClassSelector(), boxes, rv.classes);
      sink.json(Json{{"config", config},
                     {"boxes", boxesToJson(boxes)},
                     {"conditions", reportToJson(conditions)},
                     {"audit", densityAuditToJson(audit)}});
      code = conditions.pass && audit.report.pass ? 0 : 1;
    } else {
      DensityAudit audit = densityAuditOrderType(rv.arity, boxes, rv.points);
      sink.json(Json{{"config", config},
                     {"boxes", boxesToJson(boxes)},
                     {"audit", densityAuditToJson(audit)}});
      code = audit.report.pass ? 0 : 1;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int parseCode = app.exit(e, out, err);
    return parseCode == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}

}  // namespace thickset
