#include "clfbench/classifiers/common.hpp"

#include <algorithm>

namespace clfbench {

std::vector<int> collect_class_ids(const std::vector<int>& labels) {
  std::vector<int> ids(labels);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

int class_index_of(const std::vector<int>& class_ids, int label) {
  const auto it = std::lower_bound(class_ids.begin(), class_ids.end(), label);
  if (it == class_ids.end() || *it != label)
    throw ValidationError("label " + std::to_string(label) +
                          " not seen in training");
  return static_cast<int>(it - class_ids.begin());
}

int argmax_lowest(const std::vector<double>& scores) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(scores.size()); ++i)
    if (scores[static_cast<std::size_t>(i)] >
        scores[static_cast<std::size_t>(best)])
      best = i;
  return best;
}

}  // namespace clfbench
