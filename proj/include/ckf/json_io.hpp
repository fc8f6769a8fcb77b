#pragma once

// JSON documents exchanged by the CLI, and a validator for the shipped
// schemas (the subset of JSON Schema they use: type, required, properties,
// items, enum, const, minimum and local $ref).

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ckf/checker.hpp"
#include "ckf/construct.hpp"
#include "ckf/rootsys.hpp"

namespace ckf::json_io {

using json = nlohmann::ordered_json;

/// Row-major nested arrays; complex entries as [re, im] pairs (plain numbers for K = R).
json matrix_to_json(Field f, const Mat& m);

json rootsys_to_json(const rootsys::RestrictedRootSystem& rs);
/// Parses and validates a ckf.rootsys/1 document; throws std::invalid_argument.
rootsys::RestrictedRootSystem rootsys_from_json(const json& doc);

json verdict_to_json(const checker::Verdict& v);
json epsilon_table_to_json(int max_m, const std::vector<checker::EpsilonRow>& rows);
json sequence_to_json(const construct::SymmetricLeviInstance& inst, const construct::SOSequence& seq,
                      const construct::SequenceChecks& checks, const construct::MuEqualityReport& report,
                      std::uint64_t samples);
json decay_to_json(int p, int q, const std::string& variant, std::uint64_t seed, const construct::DecayResult& d,
                   bool passed);

std::vector<std::string> schema_ids();
const json& schema(std::string_view id);
/// Empty when the document conforms; otherwise one message per violation.
std::vector<std::string> validate(const json& doc, std::string_view schema_id);

}  // namespace ckf::json_io
