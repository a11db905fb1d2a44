#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "nia/proof.hpp"

namespace nia {

// {n, inputs: [{id, clause}], nodes: [{id, kind, children, clauseId?, pivot?,
// leftLit?, rightLit?, factorSucc?, sigma?, conclusion, canonical}], root}.
// Clauses and terms use the surface syntax.
nlohmann::json proofToJson(const RefutationProof& p);
// Throws std::invalid_argument on a malformed document.
RefutationProof proofFromJson(const nlohmann::json& j);

void writeProof(const RefutationProof& p, const std::filesystem::path& path);
RefutationProof readProof(const std::filesystem::path& path);

struct RecurrenceCheck {
  BigInt occC5;
  BigInt recurrence;
  BigInt closedForm;
  bool match() const { return occC5 == recurrence && recurrence == closedForm; }
};

struct RunReport {
  std::string command;
  std::optional<std::uint64_t> n;
  std::map<std::string, std::size_t> counts;
  std::map<std::string, BigInt> occ;
  std::optional<RecurrenceCheck> recurrence;
  std::optional<bool> verified;
  std::string status;
  nlohmann::json details = nlohmann::json::object();
  double wallSeconds = 0;
};

// Everything but wallSeconds lives under "result", which is byte-stable.
nlohmann::json toJson(const RunReport& r);

}  // namespace nia
