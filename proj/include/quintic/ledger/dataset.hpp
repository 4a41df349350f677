#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quintic/ledger/spectral.hpp"

namespace quintic::ledger {

/// A spectral-sequence table with its differentials and the value its
/// totalization should produce.
struct Dataset {
    std::string name;
    E1Table table;
    std::vector<DifferentialDecl> differentials;
    std::vector<ColumnSpec> columns;
    /// When set, the total is Alexander-dualized with this D.
    std::optional<int> big_d;
    PoincarePoly expected;
    /// Product of these equals expected; used for the factored printout.
    std::vector<PoincarePoly> expected_factors;
};

struct PipelineResult {
    E1Table e_infinity;
    PoincarePoly total;
    PoincarePoly result;
    bool matches;
};

PipelineResult run_pipeline(const Dataset& d);

/// "(1+t)(1+t^3)(1+t^5)"; empty when there are no factors.
std::string factored_string(const std::vector<PoincarePoly>& factors);

/// Everything the quintic computation consumes: the main table, the fiber
/// tables of columns 38 and 39, and the twisted polynomial values.
struct QuinticBundle {
    Dataset main;
    Dataset ss2;
    Dataset ss7;
    Dataset ssx;
    std::map<std::string, PoincarePoly> values;
};

QuinticBundle dataset_quintic();

/// Column spec for filtration term i of the quintic resolution: k and d_i from
/// the configuration taxonomy, base from the bundle values (empty when the
/// base is not recorded).
std::optional<ColumnSpec> quintic_column(int i);

/// E^1 rebuilt from the recorded column specs by the shift formula.
E1Table assemble_columns(const std::vector<ColumnSpec>& columns);

/// "quintic5", "ss2", "ss7", "ssx".
std::vector<std::string> dataset_names();
Dataset named_dataset(const std::string& name);

}  // namespace quintic::ledger
