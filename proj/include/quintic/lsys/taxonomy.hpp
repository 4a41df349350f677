#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quintic/projgeom/config.hpp"

namespace quintic::lsys {

using projgeom::Config;

struct ConfigTypeRecord {
    int type_id;
    /// Number of points for finite types; empty for types with a curve component.
    std::optional<int> k_points;
    int expected_dim;
    std::string description;
};

/// The 42 configuration types in order.
const std::vector<ConfigTypeRecord>& taxonomy();
const ConfigTypeRecord& type_record(int type_id);
std::vector<int> finite_types();

/// Every type whose incidence predicate the configuration satisfies. Points
/// lying on a line or conic component are absorbed by it first.
std::vector<int> matching_types(const Config& k);

/// The unique matching type, or nullopt. Throws InvariantViolation when more
/// than one type matches.
std::optional<int> classify(const Config& k);

struct ConditionReport {
    std::size_t configs = 0;
    std::size_t subsets = 0;
    std::vector<std::string> violations;
    bool passed() const { return violations.empty(); }
};

/// For each finite sample K of type i: K classifies to i alone, and every
/// proper subset that classifies at all does so uniquely to a type below i.
ConditionReport check_conditions(const std::vector<Config>& samples);

}  // namespace quintic::lsys
