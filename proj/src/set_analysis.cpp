#include "masip/set_analysis.hpp"

#include <algorithm>
#include <iterator>

#include "masip/error.hpp"

namespace masip {
namespace {

MnemonicSet intersect(const MnemonicSet& a, const MnemonicSet& b) {
  MnemonicSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

}  // namespace

GroupMember member_from_profile(const InstructionProfile& profile) {
  return {profile.application, profile.used, profile.used};
}

GroupMember member_from_profiles(std::string label, std::span<const InstructionProfile> profiles) {
  if (profiles.empty()) throw ConsistencyError("member '" + label + "' has no profiles");
  std::vector<MnemonicSet> sets;
  sets.reserve(profiles.size());
  for (const auto& p : profiles) sets.push_back(p.used);
  return {std::move(label), masip_union(sets), base_instruction_set(sets)};
}

MnemonicSet base_instruction_set(std::span<const MnemonicSet> members) {
  if (members.empty()) throw ConsistencyError("base instruction set of an empty member list");
  MnemonicSet base = members.front();
  for (const auto& m : members.subspan(1)) base = intersect(base, m);
  return base;
}

MnemonicSet masip_union(std::span<const MnemonicSet> members) {
  if (members.empty()) throw ConsistencyError("union of an empty member list");
  MnemonicSet all;
  for (const auto& m : members) all.insert(m.begin(), m.end());
  return all;
}

MnemonicSet extension_set(const MnemonicSet& member, const MnemonicSet& base) {
  if (!std::includes(member.begin(), member.end(), base.begin(), base.end()))
    throw ConsistencyError("base set is not contained in member set");
  MnemonicSet out;
  std::set_difference(member.begin(), member.end(), base.begin(), base.end(),
                      std::inserter(out, out.end()));
  return out;
}

Rational reusability_factor(std::size_t base_size, std::size_t union_size) {
  if (union_size == 0) throw ConsistencyError("reusability factor with an empty union");
  if (base_size > union_size) throw ConsistencyError("base larger than union");
  return {100 * static_cast<std::int64_t>(base_size), static_cast<std::int64_t>(union_size)};
}

Rational extra_cost_factor(std::size_t member_size, std::size_t base_size, std::size_t union_size) {
  if (union_size == 0) throw ConsistencyError("extra cost factor with an empty union");
  if (base_size > member_size || member_size > union_size)
    throw ConsistencyError("extra cost factor requires base <= member <= union");
  return {100 * static_cast<std::int64_t>(member_size - base_size),
          static_cast<std::int64_t>(union_size)};
}

ExperimentResult analyze_group(const ApplicationGroup& group) {
  if (group.members.empty()) throw ConsistencyError("group '" + group.name + "' has no members");

  std::vector<MnemonicSet> cores, used;
  MnemonicSet labels;
  for (const auto& m : group.members) {
    if (!labels.insert(m.label).second)
      throw ConsistencyError("group '" + group.name + "' repeats member '" + m.label + "'");
    if (!std::includes(m.used.begin(), m.used.end(), m.core.begin(), m.core.end()))
      throw ConsistencyError("member '" + m.label + "' has a core outside its used set");
    cores.push_back(m.core);
    used.push_back(m.used);
  }

  ExperimentResult r;
  r.group_name = group.name;
  r.base = base_instruction_set(cores);
  r.union_set = masip_union(used);
  const std::size_t u = r.union_set.size();
  if (u == 0) throw ConsistencyError("group '" + group.name + "' uses no instructions");

  Rational total;
  for (const auto& m : group.members) {
    MemberResult mr{m.label, m.used.size(), extension_set(m.used, r.base), {}};
    mr.extra_cost = extra_cost_factor(mr.indiv, r.base.size(), u);
    total += mr.extra_cost;
    r.per_member.push_back(std::move(mr));
  }
  r.reusability = reusability_factor(r.base.size(), u);
  r.mean_extra_cost = total / Rational(static_cast<std::int64_t>(group.members.size()));
  return r;
}

nlohmann::ordered_json to_json(const Rational& percent) {
  nlohmann::ordered_json j;
  j["percent"] = percent.to_fixed(1);
  j["numerator"] = percent.num();
  j["denominator"] = percent.den();
  return j;
}

nlohmann::ordered_json to_json(const ExperimentResult& result) {
  nlohmann::ordered_json j;
  j["group"] = result.group_name;
  j["base_count"] = result.base.size();
  j["union_count"] = result.union_set.size();
  j["base"] = result.base;
  j["union"] = result.union_set;
  nlohmann::ordered_json members = nlohmann::ordered_json::array();
  for (const auto& m : result.per_member) {
    nlohmann::ordered_json e;
    e["label"] = m.label;
    e["indiv"] = m.indiv;
    e["extension_count"] = m.extension.size();
    e["extension"] = m.extension;
    e["extra_cost"] = to_json(m.extra_cost);
    members.push_back(std::move(e));
  }
  j["members"] = std::move(members);
  j["reusability"] = to_json(result.reusability);
  j["mean_extra_cost"] = to_json(result.mean_extra_cost);
  return j;
}

}  // namespace masip
