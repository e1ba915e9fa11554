#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "masip/asm_ingest.hpp"
#include "masip/isa_catalog.hpp"
#include "masip/rational.hpp"

namespace masip {

/// One entry of a target application set.
///
/// `used` is everything the member needs deployed. `core` is what every
/// constituent application of the member needs; for a single application
/// the two coincide, for a domain it is the intersection of its profiles.
struct GroupMember {
  std::string label;
  MnemonicSet used;
  MnemonicSet core;
};

GroupMember member_from_profile(const InstructionProfile& profile);
/// Folds several profiles (typically one domain) into a single member.
GroupMember member_from_profiles(std::string label, std::span<const InstructionProfile> profiles);

struct ApplicationGroup {
  std::string name;
  std::vector<GroupMember> members;
};

struct MemberResult {
  std::string label;
  std::size_t indiv = 0;
  MnemonicSet extension;
  Rational extra_cost;
};

struct ExperimentResult {
  std::string group_name;
  MnemonicSet base;
  MnemonicSet union_set;
  std::vector<MemberResult> per_member;
  Rational reusability;
  Rational mean_extra_cost;
};

MnemonicSet base_instruction_set(std::span<const MnemonicSet> members);
MnemonicSet masip_union(std::span<const MnemonicSet> members);
/// member \ base. Throws ConsistencyError unless base is a subset of member.
MnemonicSet extension_set(const MnemonicSet& member, const MnemonicSet& base);

/// 100 * base / union, exact.
Rational reusability_factor(std::size_t base_size, std::size_t union_size);
/// 100 * (member - base) / union, exact.
Rational extra_cost_factor(std::size_t member_size, std::size_t base_size, std::size_t union_size);

ExperimentResult analyze_group(const ApplicationGroup& group);

nlohmann::ordered_json to_json(const Rational& percent);
nlohmann::ordered_json to_json(const ExperimentResult& result);

}  // namespace masip
