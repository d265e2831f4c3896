#pragma once

#include <memory>

#include "clfbench/datagen.hpp"
#include "clfbench/params.hpp"

namespace clfbench {

/// A trained classifier behind a uniform predict surface. Models are
/// immutable after fit and safe to share across threads.
class TrainedModel {
 public:
  virtual ~TrainedModel() = default;
  virtual int predict(const Eigen::Ref<const Vector>& x) const = 0;

  int n_features() const { return n_features_; }
  int n_classes() const { return n_classes_; }

 protected:
  int n_features_ = 0;
  int n_classes_ = 0;
};

/// Validates the configuration against its schema, then trains the matching
/// classifier. Deterministic given (config, data).
std::unique_ptr<TrainedModel> fit(const ClassifierConfig& config,
                                  const Matrix& x, const std::vector<int>& y);

inline std::unique_ptr<TrainedModel> fit(const ClassifierConfig& config,
                                         const Dataset& train) {
  return fit(config, train.instances, train.labels);
}

}  // namespace clfbench
