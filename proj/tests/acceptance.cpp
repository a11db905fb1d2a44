#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "mutation.hpp"
#include "nia/growth.hpp"
#include "nia/ordering.hpp"
#include "nia/prover.hpp"
#include "nia/refutation.hpp"
#include "nia/schema.hpp"
#include "nia/syntax.hpp"
#include "support.hpp"

namespace {

using namespace nia;
using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

Outcome clauseFamily() {
  Outcome o;
  auto start = Clock::now();
  o.require(generateC(Numeral(0)).size() == 3, "|C(0)| = 3");
  for (std::uint64_t n = 1; n <= 50; ++n) {
    o.require(generateC(Numeral(n)).size() == n + 5, "|C(" + std::to_string(n) + ")| = n+5");
  }
  for (int n : {0, 1, 2}) {
    ClauseSet golden = test::loadClauses(test::goldenDir() / ("c" + std::to_string(n) + ".clauses"));
    o.require(golden.canonicalForms() == generateC(Numeral(n)).canonicalForms(),
              "golden C(" + std::to_string(n) + ")");
  }
  double t = since(start);
  o.require(t < 1.0, "runtime < 1 s");
  o.detail << "sizes 3, 6..55; golden n=0,1,2; " << t << " s";
  return o;
}

Outcome extraction() {
  Outcome o;
  for (std::uint64_t n = 0; n <= 5; ++n) {
    o.require(extractClauseSet(Numeral(n)).canonicalForms() == generateC(Numeral(n)).canonicalForms(),
              "n=" + std::to_string(n));
  }
  o.detail << "extracted = generated for n=0..5";
  return o;
}

Outcome constructiveRefutation() {
  Outcome o;
  auto start = Clock::now();
  for (std::uint64_t n = 0; n <= 7; ++n) {
    RefutationProof p = refute(Numeral(n));
    VerifyResult v = verifyRefutation(p);
    o.require(v.ok && p.rootClause().isEmpty(), "n=" + std::to_string(n) + " " + v.reason);
    if (n == 7) o.detail << "n=7: " << p.size() << " nodes; ";
  }
  double t = since(start);
  o.require(t < 60.0, "total < 60 s");
  o.detail << "n=0..7 verified in " << t << " s";
  return o;
}

Outcome growthLaw() {
  Outcome o;
  o.detail << "occ(C5):";
  for (std::uint64_t n = 0; n <= 7; ++n) {
    BigInt got = occ("C5", refute(Numeral(n)));
    o.detail << ' ' << got;
    o.require(got == recurrenceA(n + 1), "n=" + std::to_string(n));
  }
  o.require(recurrenceA(1) == 2 && recurrenceA(4) == 65, "a(1)=2, a(4)=65");
  for (std::uint64_t m = 0; m <= 20; ++m) {
    o.require(recurrenceA(m) == closedFormA(m), "closed form m=" + std::to_string(m));
  }
  o.detail << "; recurrence = closed form for m<=20";
  return o;
}

Outcome oracleAgreement() {
  Outcome o;
  for (std::uint64_t n = 0; n <= 3; ++n) {
    ProverLimits limits;
    limits.maxSeconds = 30;
    ProverResult r = saturate(generateC(Numeral(n)), limits);
    bool ok = r.status == ProverStatus::Refuted && r.proof &&
              verifyRefutation(*r.proof, VerifyMode::Relaxed).ok && r.seconds < 30;
    o.require(ok, "n=" + std::to_string(n) + " " + toString(r.status));
    o.detail << "n=" << n << ' ' << toString(r.status) << ' ' << r.seconds << " s; ";
  }
  ClauseSet control;
  control.insert(Clause({}, {Atom("A", {Term::var("X")})}));
  ProverResult c = saturate(control, {});
  o.require(c.status == ProverStatus::Saturated, "control saturates");
  o.detail << "control " << toString(c.status);
  return o;
}

Outcome mutations() {
  Outcome o;
  RefutationProof p = refute(Numeral(3));
  std::size_t caught = 0;
  for (const test::Mutation& m : test::mutationSuite(p, 100, 2024)) caught += m.caught();
  o.require(caught == 100, "all rejected at the corrupted node");
  o.detail << caught << "/100 rejected at the corrupted node";
  return o;
}

Outcome orderingReport() {
  Outcome o;
  for (std::uint64_t n = 0; n <= 6; ++n) {
    OrderingReport r = checkOrderingProperties(n);
    o.require(r.antiReflexive.holds, "anti-reflexive n=" + std::to_string(n));
    o.require(r.antiSymmetric.holds, "anti-symmetric n=" + std::to_string(n));
    if (n == 6) {
      o.detail << "n=6: transitive=" << r.transitive.holds << " glb=" << r.glbClaim.holds
               << " chains=" << r.chains;
    }
  }
  return o;
}

Outcome io() {
  Outcome o;
  o.require(toTPTP(generateC(Numeral(3))) == test::readFile(test::goldenDir() / "c3.tptp"),
            "C(3) golden bytes");
  ClauseSet back = readTPTP(test::goldenDir() / "c3.tptp");
  o.require(back.canonicalForms() == generateC(Numeral(3)).canonicalForms(), "golden import");
  for (std::uint64_t n = 0; n <= 10; ++n) {
    ClauseSet cs = generateC(Numeral(n));
    ClauseSet rt = parseTPTP(toTPTP(cs));
    o.require(rt.canonicalForms() == cs.canonicalForms(), "round trip n=" + std::to_string(n));
  }
  o.detail << "golden C(3) byte-identical; round trip n=0..10";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"clause-set family", clauseFamily},
      {"extraction oracle-equivalence", extraction},
      {"constructive refutation", constructiveRefutation},
      {"growth law", growthLaw},
      {"oracle agreement", oracleAgreement},
      {"mutation suite", mutations},
      {"ordering report", orderingReport},
      {"I/O", io},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << index << ' ' << name << ": " << o.detail.str()
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
