#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nia/growth.hpp"
#include "nia/ordering.hpp"
#include "nia/prover.hpp"
#include "nia/refutation.hpp"
#include "nia/schema.hpp"
#include "nia/serialize.hpp"
#include "nia/syntax.hpp"

namespace py = pybind11;
using namespace nia;

namespace {

py::object toPyInt(const BigInt& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

std::vector<std::pair<std::string, std::string>> clauseList(const ClauseSet& cs) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const Clause& c : cs.clauses()) out.emplace_back(c.label().value_or(""), c.toString());
  return out;
}

py::dict occDict(const RefutationProof& p) {
  py::dict out;
  for (const auto& [id, v] : occTable(p)) out[py::str(id)] = toPyInt(v);
  return out;
}

py::dict verdict(const VerifyResult& v) {
  py::dict out;
  out["ok"] = v.ok;
  out["failing_node"] = v.failingNode ? py::cast(*v.failingNode) : py::none();
  out["reason"] = v.reason;
  return out;
}

py::dict propertyDict(const PropertyCheck& p) {
  py::dict out;
  out["holds"] = p.holds;
  out["checked"] = p.checked;
  out["violations"] = p.violations;
  out["counterexamples"] = p.counterexamples;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Clause-set schema toolkit: generation, extraction, refutation and checking";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("generate", [](std::uint64_t n) { return clauseList(generateC(Numeral(n))); }, py::arg("n"));
  m.def("extract", [](std::uint64_t n) { return clauseList(extractClauseSet(Numeral(n))); }, py::arg("n"));
  m.def("extraction_agrees", [](std::uint64_t n) {
    return extractClauseSet(Numeral(n)).equalUpToRenaming(generateC(Numeral(n)));
  }, py::arg("n"));

  m.def("canonicalize", [](const std::string& c) { return canonicalize(parseClause(c)).toString(); },
        py::arg("clause"));
  m.def("is_tautology", [](const std::string& c) { return isTautology(parseClause(c)); }, py::arg("clause"));
  m.def("subsumes", [](const std::string& c, const std::string& d) {
    return subsumes(parseClause(c), parseClause(d));
  }, py::arg("c"), py::arg("d"));
  m.def("unify", [](const std::string& a, const std::string& b) -> py::object {
    auto sigma = unify(parseTerm(a), parseTerm(b));
    if (!sigma) return py::none();
    py::dict out;
    for (const auto& [v, t] : *sigma) out[py::str(v.toString())] = t.toString();
    return std::move(out);
  }, py::arg("a"), py::arg("b"));
  m.def("unfold", [](const std::string& t) { return unfoldAllM(parseTerm(t)).toString(); }, py::arg("term"));

  m.def("to_tptp", [](std::uint64_t n) { return toTPTP(generateC(Numeral(n))); }, py::arg("n"));
  m.def("parse_tptp", [](const std::string& text) { return clauseList(parseTPTP(text)); }, py::arg("text"));

  py::class_<RefutationProof>(m, "Proof")
      .def_property_readonly("size", &RefutationProof::size)
      .def_property_readonly("root", [](const RefutationProof& p) { return p.rootClause().toString(); })
      .def("occ", [](const RefutationProof& p, const std::string& id) { return toPyInt(occ(id, p)); },
           py::arg("clause_id"))
      .def("occ_table", &occDict)
      .def("verify", [](const RefutationProof& p, bool relaxed) {
        return verdict(verifyRefutation(p, relaxed ? VerifyMode::Relaxed : VerifyMode::Strict));
      }, py::arg("relaxed") = false)
      .def("to_json", [](const RefutationProof& p) { return proofToJson(p).dump(); })
      .def_static("from_json", [](const std::string& text) {
        return proofFromJson(nlohmann::json::parse(text));
      }, py::arg("text"));

  m.def("refute", [](std::uint64_t n) { return refute(Numeral(n)); }, py::arg("n"),
        py::call_guard<py::gil_scoped_release>());

  m.def("saturate", [](std::uint64_t n, double maxSeconds, std::uint64_t maxClauses) {
    ProverLimits limits;
    limits.maxSeconds = maxSeconds;
    limits.maxClauses = maxClauses;
    ProverResult r;
    {
      py::gil_scoped_release release;
      r = saturate(generateC(Numeral(n)), limits);
    }
    py::dict out;
    out["status"] = toString(r.status);
    out["seconds"] = r.seconds;
    out["given"] = r.stats.given;
    out["generated"] = r.stats.generated;
    out["kept"] = r.stats.kept;
    out["subsumed"] = r.stats.subsumed;
    out["proof"] = r.proof ? py::cast(*r.proof) : py::none();
    return out;
  }, py::arg("n"), py::arg("max_seconds") = 30.0, py::arg("max_clauses") = 500000);

  m.def("recurrence_a", [](std::uint64_t k) { return toPyInt(recurrenceA(k)); }, py::arg("m"));
  m.def("closed_form_a", [](std::uint64_t k) { return toPyInt(closedFormA(k)); }, py::arg("m"));

  m.def("ordering_report", [](std::uint64_t n) {
    OrderingReport r = checkOrderingProperties(n);
    py::dict out;
    out["n"] = r.n;
    out["elements"] = r.elements;
    out["related_pairs"] = r.relatedPairs;
    out["chains"] = r.chains;
    out["anti_reflexive"] = propertyDict(r.antiReflexive);
    out["anti_symmetric"] = propertyDict(r.antiSymmetric);
    out["transitive"] = propertyDict(r.transitive);
    out["acyclic"] = propertyDict(r.acyclic);
    out["glb_claim"] = propertyDict(r.glbClaim);
    return out;
  }, py::arg("n"));
}
