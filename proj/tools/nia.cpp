#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nia/growth.hpp"
#include "nia/ordering.hpp"
#include "nia/prover.hpp"
#include "nia/refutation.hpp"
#include "nia/schema.hpp"
#include "nia/serialize.hpp"
#include "nia/syntax.hpp"

namespace {

using namespace nia;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;
constexpr int kResourceOut = 3;

struct Options {
  std::int64_t n = -1;
  std::string tptp;
  std::string proof;
  bool verify = false;
  bool relaxed = false;
  double maxSeconds = 30;
  std::uint64_t maxClauses = 500000;
  std::size_t maxDepth = 0;
};

json clauseList(const ClauseSet& cs) {
  json out = json::array();
  for (const Clause& c : cs.clauses()) {
    out.push_back({{"id", c.label().value_or("")}, {"clause", c.toString()}});
  }
  return out;
}

json propertyJson(const PropertyCheck& p) {
  return {{"holds", p.holds},
          {"checked", p.checked},
          {"violations", p.violations},
          {"counterexamples", p.counterexamples}};
}

RecurrenceCheck recurrenceFor(const RefutationProof& p, std::uint64_t n) {
  return {occ("C5", p), recurrenceA(n + 1), closedFormA(n + 1)};
}

int cmdGenerate(const Options& o, RunReport& r) {
  ClauseSet cs = generateC(Numeral(static_cast<std::uint64_t>(o.n)));
  r.counts["clauses"] = cs.size();
  r.details["clauses"] = clauseList(cs);
  if (!o.tptp.empty()) {
    writeTPTP(cs, o.tptp);
    r.details["tptp"] = o.tptp;
  }
  r.status = "ok";
  return kOk;
}

int cmdExtract(const Options& o, RunReport& r) {
  Numeral n(static_cast<std::uint64_t>(o.n));
  ClauseSet extracted = extractClauseSet(n);
  ClauseSet generated = generateC(n);
  bool equal = extracted.equalUpToRenaming(generated);
  r.counts["extracted"] = extracted.size();
  r.counts["generated"] = generated.size();
  r.details["extracted"] = clauseList(extracted);
  r.details["equalUpToRenaming"] = equal;
  r.status = equal ? "agree" : "disagree";
  return equal ? kOk : kFailure;
}

int cmdRefute(const Options& o, RunReport& r) {
  auto n = static_cast<std::uint64_t>(o.n);
  RefutationProof p = refute(Numeral(n));
  r.counts["nodes"] = p.size();
  r.counts["inputs"] = p.inputs().size();
  r.occ = occTable(p);
  r.recurrence = recurrenceFor(p, n);
  if (!o.proof.empty()) writeProof(p, o.proof);
  r.status = "refuted";
  if (o.verify) {
    VerifyResult v = verifyRefutation(p);
    r.verified = v.ok;
    if (!v.ok) {
      r.details["failingNode"] = v.failingNode ? json(*v.failingNode) : json(nullptr);
      r.details["reason"] = v.reason;
      return kFailure;
    }
  }
  return kOk;
}

int cmdVerify(const Options& o, RunReport& r) {
  if (!std::filesystem::exists(o.proof)) {
    std::cerr << "no such file: " << o.proof << '\n';
    return kUsage;
  }
  RefutationProof p;
  try {
    p = readProof(o.proof);
  } catch (const std::invalid_argument& e) {
    r.status = "malformed";
    r.verified = false;
    r.details["reason"] = e.what();
    return kFailure;
  }
  auto n = static_cast<std::uint64_t>(o.n);
  r.counts["nodes"] = p.size();
  bool inputsMatch = p.inputs().equalUpToRenaming(generateC(Numeral(n)));
  r.details["inputsMatch"] = inputsMatch;
  VerifyResult v = verifyRefutation(p, o.relaxed ? VerifyMode::Relaxed : VerifyMode::Strict);
  r.verified = v.ok && inputsMatch;
  if (!v.ok) {
    r.details["failingNode"] = v.failingNode ? json(*v.failingNode) : json(nullptr);
    r.details["reason"] = v.reason;
  }
  if (v.ok) {
    r.occ = occTable(p);
    if (inputsMatch) r.recurrence = recurrenceFor(p, n);
  }
  r.status = *r.verified ? "verified" : "rejected";
  return *r.verified ? kOk : kFailure;
}

int cmdOracle(const Options& o, RunReport& r) {
  ProverLimits limits;
  limits.maxSeconds = o.maxSeconds;
  limits.maxClauses = o.maxClauses;
  if (o.maxDepth > 0) limits.maxTermDepth = o.maxDepth;
  ProverResult result = saturate(generateC(Numeral(static_cast<std::uint64_t>(o.n))), limits);
  r.status = toString(result.status);
  r.counts = {{"given", result.stats.given},
              {"generated", result.stats.generated},
              {"kept", result.stats.kept},
              {"subsumed", result.stats.subsumed},
              {"tautologies", result.stats.tautologies},
              {"depthPruned", result.stats.depthPruned}};
  r.details["searchSeconds"] = result.seconds;
  switch (result.status) {
    case ProverStatus::Refuted: {
      r.occ = result.stats.inputUses;
      r.counts["nodes"] = result.proof->size();
      if (!o.proof.empty()) writeProof(*result.proof, o.proof);
      VerifyResult v = verifyRefutation(*result.proof, VerifyMode::Relaxed);
      r.verified = v.ok;
      return v.ok ? kOk : kFailure;
    }
    case ProverStatus::Saturated:
      return kFailure;
    case ProverStatus::ResourceOut:
      return kResourceOut;
  }
  return kFailure;
}

int cmdCount(const Options& o, RunReport& r) {
  auto n = static_cast<std::uint64_t>(o.n);
  RefutationProof p = refute(Numeral(n));
  r.counts["nodes"] = p.size();
  r.occ = occTable(p);
  r.recurrence = recurrenceFor(p, n);
  r.status = r.recurrence->match() ? "match" : "mismatch";
  return r.recurrence->match() ? kOk : kFailure;
}

int cmdOrdering(const Options& o, RunReport& r) {
  OrderingReport rep = checkOrderingProperties(static_cast<std::uint64_t>(o.n));
  r.counts = {{"elements", rep.elements}, {"relatedPairs", rep.relatedPairs}, {"chains", rep.chains}};
  json isolated = json::array();
  for (const OrderedPair& p : rep.isolated) isolated.push_back(p.toString());
  r.details = {{"isolated", isolated},
               {"antiReflexive", propertyJson(rep.antiReflexive)},
               {"antiSymmetric", propertyJson(rep.antiSymmetric)},
               {"transitive", propertyJson(rep.transitive)},
               {"acyclic", propertyJson(rep.acyclic)},
               {"glbClaim", propertyJson(rep.glbClaim)}};
  bool required = rep.antiReflexive.holds && rep.antiSymmetric.holds;
  r.status = required ? "ok" : "violated";
  return required ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clause sets, refutations and oracle checks for the pigeonhole schema"};
  app.require_subcommand(1);
  Options o;

  auto withN = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "parameter")->required()->check(CLI::NonNegativeNumber);
  };
  auto* generate = app.add_subcommand("generate", "print the clause set C(n)");
  withN(generate);
  generate->add_option("--tptp", o.tptp, "also write TPTP CNF to this path");
  auto* extract = app.add_subcommand("extract", "extract C(n) from the proof schema and compare");
  withN(extract);
  auto* refuteCmd = app.add_subcommand("refute", "build the constructive refutation of C(n)");
  withN(refuteCmd);
  refuteCmd->add_option("--proof", o.proof, "write the proof as JSON");
  refuteCmd->add_flag("--verify", o.verify, "run the verifier");
  auto* verify = app.add_subcommand("verify", "verify a proof file against C(n)");
  withN(verify);
  verify->add_option("--proof", o.proof, "proof JSON")->required();
  verify->add_flag("--relaxed", o.relaxed, "accept binary resolution and factoring");
  auto* oracle = app.add_subcommand("oracle", "refute C(n) by saturation");
  withN(oracle);
  oracle->add_option("--max-seconds", o.maxSeconds, "time budget")->check(CLI::PositiveNumber);
  oracle->add_option("--max-clauses", o.maxClauses, "clause budget")->check(CLI::PositiveNumber);
  oracle->add_option("--max-depth", o.maxDepth, "term depth cap (default: deepen)")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--proof", o.proof, "write the trace as JSON");
  auto* count = app.add_subcommand("count", "input-clause occurrences against the recurrence");
  withN(count);
  auto* ordering = app.add_subcommand("ordering", "check properties of the induction ordering");
  withN(ordering);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  RunReport report;
  report.command = sub->get_name();
  report.n = static_cast<std::uint64_t>(o.n);
  const auto start = std::chrono::steady_clock::now();
  int code = kFailure;
  try {
    if (sub == generate) code = cmdGenerate(o, report);
    if (sub == extract) code = cmdExtract(o, report);
    if (sub == refuteCmd) code = cmdRefute(o, report);
    if (sub == verify) code = cmdVerify(o, report);
    if (sub == oracle) code = cmdOracle(o, report);
    if (sub == count) code = cmdCount(o, report);
    if (sub == ordering) code = cmdOrdering(o, report);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  report.wallSeconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << toJson(report).dump(2) << '\n';
  return code;
}
