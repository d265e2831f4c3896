#pragma once

#include <vector>

#include "clfbench/common.hpp"
#include "clfbench/linalg.hpp"

namespace clfbench {

/// Sorted distinct labels of a training set.
std::vector<int> collect_class_ids(const std::vector<int>& labels);

/// Position of `label` in the sorted class-id list.
int class_index_of(const std::vector<int>& class_ids, int label);

/// Index of the largest score; ties resolve to the lowest index.
int argmax_lowest(const std::vector<double>& scores);

inline void check_dimension(int expected, Eigen::Index got) {
  if (static_cast<Eigen::Index>(expected) != got)
    throw ValidationError("feature count mismatch: model expects " +
                          std::to_string(expected) + ", got " +
                          std::to_string(got));
}

}  // namespace clfbench
