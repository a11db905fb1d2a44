#include "nia/serialize.hpp"

#include <fstream>
#include <stdexcept>

#include "nia/syntax.hpp"

namespace nia {

using nlohmann::json;

json proofToJson(const RefutationProof& p) {
  json inputs = json::array();
  for (const Clause& c : p.inputs().clauses()) {
    inputs.push_back({{"id", c.label().value_or("")}, {"clause", c.toString()}});
  }
  json nodes = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    const RefStep& st = p.node(i);
    json node = {{"id", i}, {"kind", toString(st.kind)}, {"children", st.children}};
    if (st.kind == StepKind::Input) node["clauseId"] = st.clauseId;
    if (st.pivot) node["pivot"] = st.pivot->toString();
    if (st.leftLit) node["leftLit"] = st.leftLit->toString();
    if (st.rightLit) node["rightLit"] = st.rightLit->toString();
    if (st.kind == StepKind::Factor) node["factorSucc"] = st.factorSucc;
    if (!st.sigma.empty()) {
      json sigma = json::object();
      for (const auto& [v, t] : st.sigma) sigma[v.toString()] = t.toString();
      node["sigma"] = std::move(sigma);
    }
    node["conclusion"] = st.conclusion.toString();
    node["canonical"] = canonicalize(st.conclusion).toString();
    nodes.push_back(std::move(node));
  }
  json out = {{"inputs", std::move(inputs)}, {"nodes", std::move(nodes)}, {"root", p.root()}};
  out["n"] = p.inputs().parameter() ? json(p.inputs().parameter()->value()) : json(nullptr);
  return out;
}

RefutationProof proofFromJson(const json& j) {
  try {
    std::optional<Numeral> n;
    if (j.contains("n") && !j.at("n").is_null()) n = Numeral(j.at("n").get<std::uint64_t>());
    ClauseSet inputs(n);
    for (const json& in : j.at("inputs")) {
      Clause c = parseClause(in.at("clause").get<std::string>());
      std::string id = in.at("id").get<std::string>();
      inputs.insert(id.empty() ? c : c.withLabel(id));
    }
    RefutationProof p(std::move(inputs));
    for (const json& node : j.at("nodes")) {
      if (node.at("id").get<std::size_t>() != p.size()) {
        throw std::invalid_argument("node ids must be consecutive");
      }
      RefStep st;
      auto kind = stepKindFromString(node.at("kind").get<std::string>());
      if (!kind) throw std::invalid_argument("unknown step kind " + node.at("kind").dump());
      st.kind = *kind;
      st.children = node.at("children").get<std::vector<std::size_t>>();
      if (node.contains("clauseId")) st.clauseId = node.at("clauseId").get<std::string>();
      if (node.contains("pivot")) st.pivot = parseAtom(node.at("pivot").get<std::string>());
      if (node.contains("leftLit")) st.leftLit = parseAtom(node.at("leftLit").get<std::string>());
      if (node.contains("rightLit")) st.rightLit = parseAtom(node.at("rightLit").get<std::string>());
      if (node.contains("factorSucc")) st.factorSucc = node.at("factorSucc").get<bool>();
      if (node.contains("sigma")) {
        for (const auto& [v, t] : node.at("sigma").items()) {
          st.sigma.bind(parseTerm(v), parseTerm(t.get<std::string>()));
        }
      }
      st.conclusion = parseClause(node.at("conclusion").get<std::string>());
      p.add(std::move(st));
    }
    std::size_t root = j.at("root").get<std::size_t>();
    if (root >= p.size()) throw std::invalid_argument("root out of range");
    p.setRoot(root);
    return p;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed proof document: ") + e.what());
  } catch (const ParseError& e) {
    throw std::invalid_argument(std::string("malformed clause in proof document: ") + e.what());
  }
}

void writeProof(const RefutationProof& p, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << proofToJson(p).dump() << '\n';
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

RefutationProof readProof(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed proof document: ") + e.what());
  }
  return proofFromJson(j);
}

json toJson(const RunReport& r) {
  json result = {{"command", r.command}, {"status", r.status}};
  result["n"] = r.n ? json(*r.n) : json(nullptr);
  result["counts"] = r.counts;
  json occ = json::object();
  for (const auto& [id, v] : r.occ) occ[id] = v.str();
  result["occ"] = std::move(occ);
  if (r.recurrence) {
    result["recurrence"] = {{"occC5", r.recurrence->occC5.str()},
                            {"recurrenceA", r.recurrence->recurrence.str()},
                            {"closedFormA", r.recurrence->closedForm.str()},
                            {"match", r.recurrence->match()}};
  }
  if (r.verified) result["verified"] = *r.verified;
  if (!r.details.empty()) result["details"] = r.details;
  return {{"result", std::move(result)}, {"wallSeconds", r.wallSeconds}};
}

}  // namespace nia
