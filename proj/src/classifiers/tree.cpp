#include "clfbench/classifiers/tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "clfbench/classifiers/common.hpp"

namespace clfbench::tree {

namespace {

double entropy(const std::vector<double>& counts, double total) {
  if (total <= 0.0) return 0.0;
  double h = 0.0;
  for (double c : counts)
    if (c > 0.0) {
      const double p = c / total;
      h -= p * std::log2(p);
    }
  return h;
}

double gini(const std::vector<double>& counts, double total) {
  if (total <= 0.0) return 0.0;
  double s = 0.0;
  for (double c : counts) {
    const double p = c / total;
    s += p * p;
  }
  return 1.0 - s;
}

int majority_of(const std::vector<double>& counts) {
  int best = 0;
  for (int c = 1; c < static_cast<int>(counts.size()); ++c)
    if (counts[static_cast<std::size_t>(c)] >
        counts[static_cast<std::size_t>(best)])
      best = c;
  return best;
}

struct SplitCandidate {
  int feature = -1;
  double threshold = 0.0;
  double gain = -1.0;        // impurity decrease (criterion-specific)
  double gain_ratio = -1.0;  // only used by GainRatio
};

// Best threshold of one feature by raw gain (info gain or Gini decrease).
SplitCandidate best_split_of_feature(const Matrix& x,
                                     const std::vector<int>& y_index,
                                     const std::vector<int>& rows, int feature,
                                     int n_classes, int min_instances,
                                     GrowOptions::Criterion criterion) {
  const int n = static_cast<int>(rows.size());
  std::vector<std::pair<double, int>> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int r = rows[static_cast<std::size_t>(i)];
    order[static_cast<std::size_t>(i)] = {
        x(r, feature), y_index[static_cast<std::size_t>(r)]};
  }
  std::sort(order.begin(), order.end());

  std::vector<double> total(static_cast<std::size_t>(n_classes), 0.0);
  for (const auto& [v, c] : order) total[static_cast<std::size_t>(c)] += 1.0;
  const double parent_impurity = criterion == GrowOptions::Criterion::Gini
                                     ? gini(total, n)
                                     : entropy(total, n);

  // Zero-gain splits are still candidates (an impure node may need two
  // levels before any purity shows, as in the XOR layout).
  SplitCandidate best;
  best.feature = feature;
  best.gain = -1.0;  // sentinel: no valid threshold found
  std::vector<double> left(static_cast<std::size_t>(n_classes), 0.0);
  std::vector<double> right = total;
  for (int i = 1; i < n; ++i) {
    const auto& [value, cls] = order[static_cast<std::size_t>(i - 1)];
    left[static_cast<std::size_t>(cls)] += 1.0;
    right[static_cast<std::size_t>(cls)] -= 1.0;
    if (i < min_instances || n - i < min_instances) continue;
    const double next_value = order[static_cast<std::size_t>(i)].first;
    if (!(next_value > value)) continue;

    const double nl = i, nr = n - i;
    double child_impurity;
    if (criterion == GrowOptions::Criterion::Gini)
      child_impurity = (nl * gini(left, nl) + nr * gini(right, nr)) / n;
    else
      child_impurity = (nl * entropy(left, nl) + nr * entropy(right, nr)) / n;
    const double gain = std::max(parent_impurity - child_impurity, 0.0);
    if (gain > best.gain + 1e-12) {
      best.gain = gain;
      best.threshold = 0.5 * (value + next_value);
      if (criterion == GrowOptions::Criterion::GainRatio) {
        const double pl = nl / n, pr = nr / n;
        const double split_info = -(pl * std::log2(pl) + pr * std::log2(pr));
        best.gain_ratio = split_info > 1e-12 ? gain / split_info : 0.0;
      }
    }
  }
  return best;
}

int grow_node(Tree& tree, const Matrix& x, const std::vector<int>& y_index,
              const std::vector<int>& rows, int n_classes, int depth,
              const GrowOptions& opt) {
  Node node;
  node.class_counts.assign(static_cast<std::size_t>(n_classes), 0.0);
  for (int r : rows)
    node.class_counts[static_cast<std::size_t>(
        y_index[static_cast<std::size_t>(r)])] += 1.0;
  node.majority = majority_of(node.class_counts);

  const int n = static_cast<int>(rows.size());
  const double max_count =
      node.class_counts[static_cast<std::size_t>(node.majority)];
  const bool pure = max_count == static_cast<double>(n);
  const bool too_small = n < 2 * opt.min_instances;
  const bool too_deep = opt.max_depth > 0 && depth >= opt.max_depth;

  int node_id = static_cast<int>(tree.nodes.size());
  tree.nodes.push_back(node);
  if (pure || too_small || too_deep) return node_id;

  // Pick the feature set to examine (all, or a random subset of size K).
  const int f = static_cast<int>(x.cols());
  std::vector<int> features(static_cast<std::size_t>(f));
  std::iota(features.begin(), features.end(), 0);
  if (opt.k_features > 0 && opt.k_features < f) {
    for (int i = 0; i < opt.k_features; ++i) {
      const auto j = static_cast<int>(
          opt.rng->next_int(i, static_cast<std::int64_t>(f) - 1));
      std::swap(features[static_cast<std::size_t>(i)],
                features[static_cast<std::size_t>(j)]);
    }
    features.resize(static_cast<std::size_t>(opt.k_features));
    std::sort(features.begin(), features.end());
  }

  std::vector<SplitCandidate> candidates;
  for (int feature : features) {
    auto cand = best_split_of_feature(x, y_index, rows, feature, n_classes,
                                      opt.min_instances, opt.criterion);
    if (cand.gain >= 0.0) candidates.push_back(cand);
  }
  if (candidates.empty()) return node_id;

  int chosen = 0;
  if (opt.criterion == GrowOptions::Criterion::GainRatio) {
    // C4.5 rule: among splits with at least average gain, maximize the ratio.
    double mean_gain = 0.0;
    for (const auto& c : candidates) mean_gain += c.gain;
    mean_gain /= static_cast<double>(candidates.size());
    chosen = -1;
    for (int i = 0; i < static_cast<int>(candidates.size()); ++i) {
      const auto& c = candidates[static_cast<std::size_t>(i)];
      if (c.gain + 1e-12 < mean_gain) continue;
      if (chosen < 0 ||
          c.gain_ratio >
              candidates[static_cast<std::size_t>(chosen)].gain_ratio + 1e-12)
        chosen = i;
    }
    if (chosen < 0) chosen = 0;
  } else {
    for (int i = 1; i < static_cast<int>(candidates.size()); ++i)
      if (candidates[static_cast<std::size_t>(i)].gain >
          candidates[static_cast<std::size_t>(chosen)].gain + 1e-12)
        chosen = i;
  }

  const auto& split = candidates[static_cast<std::size_t>(chosen)];
  std::vector<int> left_rows, right_rows;
  for (int r : rows)
    (x(r, split.feature) <= split.threshold ? left_rows : right_rows)
        .push_back(r);
  if (left_rows.empty() || right_rows.empty()) return node_id;

  tree.nodes[static_cast<std::size_t>(node_id)].feature = split.feature;
  tree.nodes[static_cast<std::size_t>(node_id)].threshold = split.threshold;
  const int left_id =
      grow_node(tree, x, y_index, left_rows, n_classes, depth + 1, opt);
  tree.nodes[static_cast<std::size_t>(node_id)].left = left_id;
  const int right_id =
      grow_node(tree, x, y_index, right_rows, n_classes, depth + 1, opt);
  tree.nodes[static_cast<std::size_t>(node_id)].right = right_id;
  return node_id;
}

void collapse(Tree& tree, int node_id) {
  Node& node = tree.nodes[static_cast<std::size_t>(node_id)];
  node.feature = -1;
  node.left = node.right = -1;
}

// ---- C4.5 error-based pruning ----------------------------------------

double ebp_prune(Tree& tree, int node_id, double confidence) {
  Node& node = tree.nodes[static_cast<std::size_t>(node_id)];
  const double n = std::accumulate(node.class_counts.begin(),
                                   node.class_counts.end(), 0.0);
  const double errors_as_leaf =
      n - node.class_counts[static_cast<std::size_t>(node.majority)];
  const double leaf_estimate = pessimistic_errors(errors_as_leaf, n, confidence);
  if (node.is_leaf()) return leaf_estimate;
  const double subtree_estimate = ebp_prune(tree, node.left, confidence) +
                                  ebp_prune(tree, node.right, confidence);
  if (leaf_estimate <= subtree_estimate + 0.1) {
    collapse(tree, node_id);
    return leaf_estimate;
  }
  return subtree_estimate;
}

// ---- reduced-error pruning --------------------------------------------

int rep_prune(Tree& tree, int node_id, const Matrix& x,
              const std::vector<int>& y_index,
              const std::vector<int>& heldout) {
  Node& node = tree.nodes[static_cast<std::size_t>(node_id)];
  int errors_as_leaf = 0;
  for (int r : heldout)
    if (y_index[static_cast<std::size_t>(r)] != node.majority)
      ++errors_as_leaf;
  if (node.is_leaf()) return errors_as_leaf;

  std::vector<int> left_rows, right_rows;
  for (int r : heldout)
    (x(r, node.feature) <= node.threshold ? left_rows : right_rows)
        .push_back(r);
  const int subtree_errors =
      rep_prune(tree, node.left, x, y_index, left_rows) +
      rep_prune(tree, node.right, x, y_index, right_rows);
  if (errors_as_leaf <= subtree_errors) {
    collapse(tree, node_id);
    return errors_as_leaf;
  }
  return subtree_errors;
}

// Deterministic stratified-ish folds for the trees' internal validation.
std::vector<std::vector<int>> internal_folds(const std::vector<int>& y_index,
                                             int n_classes, int k,
                                             std::uint64_t seed) {
  std::vector<std::vector<int>> by_class(static_cast<std::size_t>(n_classes));
  for (int r = 0; r < static_cast<int>(y_index.size()); ++r)
    by_class[static_cast<std::size_t>(y_index[static_cast<std::size_t>(r)])]
        .push_back(r);
  std::vector<std::vector<int>> folds(static_cast<std::size_t>(k));
  Rng rng(seed);
  int spill = 0;  // rotates remainder rows across folds
  for (std::size_t c = 0; c < by_class.size(); ++c) {
    auto& rows = by_class[c];
    Rng shuffle_rng = rng.derive(static_cast<std::uint64_t>(c));
    for (int i = static_cast<int>(rows.size()) - 1; i > 0; --i) {
      const auto j = static_cast<int>(shuffle_rng.next_int(0, i));
      std::swap(rows[static_cast<std::size_t>(i)],
                rows[static_cast<std::size_t>(j)]);
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
      folds[static_cast<std::size_t>((static_cast<int>(i) + spill) % k)]
          .push_back(rows[i]);
    spill = (spill + static_cast<int>(rows.size())) % k;
  }
  for (auto& fold : folds) std::sort(fold.begin(), fold.end());
  return folds;
}

// ---- CART cost-complexity pruning --------------------------------------

struct SubtreeStats {
  double errors = 0.0;  // training errors of the (possibly pruned) subtree
  int leaves = 0;
};

SubtreeStats subtree_stats(const Tree& tree, int node_id) {
  const Node& node = tree.nodes[static_cast<std::size_t>(node_id)];
  if (node.is_leaf()) {
    const double n = std::accumulate(node.class_counts.begin(),
                                     node.class_counts.end(), 0.0);
    return {n - node.class_counts[static_cast<std::size_t>(node.majority)], 1};
  }
  const auto l = subtree_stats(tree, node.left);
  const auto r = subtree_stats(tree, node.right);
  return {l.errors + r.errors, l.leaves + r.leaves};
}

// Optimal cost-complexity subtree for penalty alpha (errors measured on the
// tree's own training counts). Collapses bottom-up.
SubtreeStats prune_at_alpha(Tree& tree, int node_id, double alpha) {
  Node& node = tree.nodes[static_cast<std::size_t>(node_id)];
  const double n = std::accumulate(node.class_counts.begin(),
                                   node.class_counts.end(), 0.0);
  const double errors_as_leaf =
      n - node.class_counts[static_cast<std::size_t>(node.majority)];
  if (node.is_leaf()) return {errors_as_leaf, 1};
  const auto l = prune_at_alpha(tree, node.left, alpha);
  const auto r = prune_at_alpha(tree, node.right, alpha);
  const double subtree_cost =
      l.errors + r.errors + alpha * (l.leaves + r.leaves);
  if (errors_as_leaf + alpha <= subtree_cost + 1e-12) {
    collapse(tree, node_id);
    return {errors_as_leaf, 1};
  }
  return {l.errors + r.errors, l.leaves + r.leaves};
}

// Critical penalties of the weakest-link sequence, starting at 0.
std::vector<double> alpha_sequence(const Tree& grown) {
  std::vector<double> alphas{0.0};
  Tree work = grown;
  while (!work.nodes[0].is_leaf()) {
    // weakest link g(t) = (R(t) - R(T_t)) / (|T_t| - 1)
    double g_min = std::numeric_limits<double>::infinity();
    std::vector<int> stack{0};
    std::vector<int> internal;
    while (!stack.empty()) {
      const int id = stack.back();
      stack.pop_back();
      const Node& node = work.nodes[static_cast<std::size_t>(id)];
      if (node.is_leaf()) continue;
      internal.push_back(id);
      stack.push_back(node.left);
      stack.push_back(node.right);
    }
    for (int id : internal) {
      const Node& node = work.nodes[static_cast<std::size_t>(id)];
      const double n = std::accumulate(node.class_counts.begin(),
                                       node.class_counts.end(), 0.0);
      const double as_leaf =
          n - node.class_counts[static_cast<std::size_t>(node.majority)];
      const auto stats = subtree_stats(work, id);
      const double g = stats.leaves > 1
                           ? (as_leaf - stats.errors) / (stats.leaves - 1)
                           : 0.0;
      g_min = std::min(g_min, g);
    }
    alphas.push_back(std::max(g_min, alphas.back()));
    // Collapse every node at the weakest-link value and continue.
    for (int id : internal) {
      Node& node = work.nodes[static_cast<std::size_t>(id)];
      if (node.is_leaf()) continue;
      const double n = std::accumulate(node.class_counts.begin(),
                                       node.class_counts.end(), 0.0);
      const double as_leaf =
          n - node.class_counts[static_cast<std::size_t>(node.majority)];
      const auto stats = subtree_stats(work, id);
      const double g = stats.leaves > 1
                           ? (as_leaf - stats.errors) / (stats.leaves - 1)
                           : 0.0;
      if (g <= g_min + 1e-12) collapse(work, id);
    }
  }
  return alphas;
}

int heldout_errors(const Tree& tree, const Matrix& x,
                   const std::vector<int>& y_index,
                   const std::vector<int>& rows) {
  int errors = 0;
  for (int r : rows)
    if (tree.predict_index(x.row(r).transpose()) !=
        y_index[static_cast<std::size_t>(r)])
      ++errors;
  return errors;
}

}  // namespace

double pessimistic_errors(double errors, double n, double confidence) {
  if (n <= 0.0) return 0.0;
  const double z = inverse_normal_cdf(1.0 - confidence);
  const double f = errors / n;
  const double z2 = z * z;
  const double upper =
      (f + z2 / (2.0 * n) + z * std::sqrt(f * (1.0 - f) / n +
                                          z2 / (4.0 * n * n))) /
      (1.0 + z2 / n);
  return upper * n;
}

int Tree::predict_index(const Eigen::Ref<const Vector>& x) const {
  check_dimension(n_features, x.size());
  int id = 0;
  while (!nodes[static_cast<std::size_t>(id)].is_leaf()) {
    const Node& node = nodes[static_cast<std::size_t>(id)];
    id = x(node.feature) <= node.threshold ? node.left : node.right;
  }
  return nodes[static_cast<std::size_t>(id)].majority;
}

int Tree::predict(const Eigen::Ref<const Vector>& x) const {
  return class_ids[static_cast<std::size_t>(predict_index(x))];
}

std::vector<double> Tree::distribution(
    const Eigen::Ref<const Vector>& x) const {
  check_dimension(n_features, x.size());
  int id = 0;
  while (!nodes[static_cast<std::size_t>(id)].is_leaf()) {
    const Node& node = nodes[static_cast<std::size_t>(id)];
    id = x(node.feature) <= node.threshold ? node.left : node.right;
  }
  std::vector<double> dist = nodes[static_cast<std::size_t>(id)].class_counts;
  double total = std::accumulate(dist.begin(), dist.end(), 0.0);
  if (laplace) {
    for (auto& c : dist) c += 1.0;
    total += static_cast<double>(dist.size());
  }
  if (total > 0.0)
    for (auto& c : dist) c /= total;
  return dist;
}

namespace {

void count_reachable(const Tree& tree, int id, int depth, int& leaves,
                     int& max_depth) {
  const Node& node = tree.nodes[static_cast<std::size_t>(id)];
  max_depth = std::max(max_depth, depth);
  if (node.is_leaf()) {
    ++leaves;
    return;
  }
  count_reachable(tree, node.left, depth + 1, leaves, max_depth);
  count_reachable(tree, node.right, depth + 1, leaves, max_depth);
}

}  // namespace

int Tree::n_leaves() const {
  int leaves = 0, d = 0;
  count_reachable(*this, 0, 0, leaves, d);
  return leaves;
}

int Tree::depth() const {
  int leaves = 0, d = 0;
  count_reachable(*this, 0, 0, leaves, d);
  return d;
}

Tree grow_tree(const Matrix& x, const std::vector<int>& y_index,
               const std::vector<int>& rows, int n_classes,
               const GrowOptions& options) {
  if (rows.empty()) throw ValidationError("grow_tree: no rows");
  if (options.k_features > 0 && options.rng == nullptr)
    throw ValidationError("grow_tree: feature subsetting needs an rng");
  Tree tree;
  tree.n_features = static_cast<int>(x.cols());
  grow_node(tree, x, y_index, rows, n_classes, 0, options);
  return tree;
}

Tree c45_fit(const C45Params& params, const Matrix& x,
             const std::vector<int>& y) {
  if (x.rows() == 0) throw ValidationError("c45: empty training set");
  if (params.min_instances < 1) throw ValidationError("c45: M must be >= 1");
  if (!(params.confidence > 0.0 && params.confidence <= 0.5))
    throw ValidationError("c45: C must be in (0, 0.5]");

  const auto class_ids = collect_class_ids(y);
  const int n_classes = static_cast<int>(class_ids.size());
  std::vector<int> y_index(y.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    y_index[i] = class_index_of(class_ids, y[i]);

  GrowOptions opt;
  opt.criterion = GrowOptions::Criterion::GainRatio;
  opt.min_instances = params.min_instances;

  std::vector<int> all_rows(static_cast<std::size_t>(x.rows()));
  std::iota(all_rows.begin(), all_rows.end(), 0);

  const bool use_rep = !params.unpruned && params.rep_folds >= 2;
  Tree tree;
  if (use_rep) {
    const auto folds = internal_folds(y_index, n_classes, params.rep_folds,
                                      /*seed=*/1);
    std::vector<int> grow_rows;
    for (std::size_t f = 1; f < folds.size(); ++f)
      grow_rows.insert(grow_rows.end(), folds[f].begin(), folds[f].end());
    std::sort(grow_rows.begin(), grow_rows.end());
    if (grow_rows.empty()) grow_rows = all_rows;
    tree = grow_tree(x, y_index, grow_rows, n_classes, opt);
    rep_prune(tree, 0, x, y_index, folds[0]);
  } else {
    tree = grow_tree(x, y_index, all_rows, n_classes, opt);
    if (!params.unpruned) ebp_prune(tree, 0, params.confidence);
  }
  tree.class_ids = class_ids;
  tree.laplace = params.laplace;
  return tree;
}

Tree cart_fit(const CartParams& params, const Matrix& x,
              const std::vector<int>& y) {
  if (x.rows() == 0) throw ValidationError("cart: empty training set");
  if (params.min_instances < 1) throw ValidationError("cart: M must be >= 1");
  if (params.folds < 2) throw ValidationError("cart: N must be >= 2");

  const auto class_ids = collect_class_ids(y);
  const int n_classes = static_cast<int>(class_ids.size());
  std::vector<int> y_index(y.size());
  for (std::size_t i = 0; i < y.size(); ++i)
    y_index[i] = class_index_of(class_ids, y[i]);

  GrowOptions opt;
  opt.criterion = GrowOptions::Criterion::Gini;
  opt.min_instances = params.min_instances;

  std::vector<int> all_rows(static_cast<std::size_t>(x.rows()));
  std::iota(all_rows.begin(), all_rows.end(), 0);
  Tree tree = grow_tree(x, y_index, all_rows, n_classes, opt);
  tree.class_ids = class_ids;

  std::vector<std::size_t> class_sizes(static_cast<std::size_t>(n_classes), 0);
  for (int idx : y_index) ++class_sizes[static_cast<std::size_t>(idx)];
  const auto min_class =
      *std::min_element(class_sizes.begin(), class_sizes.end());

  if (params.unpruned || tree.nodes[0].is_leaf() || min_class < 2 ||
      static_cast<int>(x.rows()) < 2 * params.folds)
    return tree;

  // Candidate penalties from the weakest-link sequence of the full tree,
  // scored by internal cross-validation.
  const auto alphas = alpha_sequence(tree);
  std::vector<double> candidates;
  for (std::size_t i = 0; i + 1 < alphas.size(); ++i)
    candidates.push_back(std::sqrt(alphas[i] * alphas[i + 1]));
  candidates.push_back(alphas.back() + 1.0);

  const auto folds = internal_folds(y_index, n_classes, params.folds,
                                    static_cast<std::uint64_t>(params.seed));
  std::vector<int> cv_errors(candidates.size(), 0);
  for (std::size_t v = 0; v < folds.size(); ++v) {
    std::vector<int> train_rows;
    for (std::size_t f = 0; f < folds.size(); ++f)
      if (f != v)
        train_rows.insert(train_rows.end(), folds[f].begin(), folds[f].end());
    std::sort(train_rows.begin(), train_rows.end());
    if (train_rows.empty()) continue;
    const Tree cv_grown = grow_tree(x, y_index, train_rows, n_classes, opt);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      Tree pruned = cv_grown;
      prune_at_alpha(pruned, 0, candidates[a]);
      cv_errors[a] += heldout_errors(pruned, x, y_index, folds[v]);
    }
  }

  std::size_t best = 0;
  for (std::size_t a = 1; a < candidates.size(); ++a)
    if (cv_errors[a] <= cv_errors[best]) best = a;  // ties prefer larger alpha
  if (params.one_se) {
    const double n_total = static_cast<double>(x.rows());
    const double rate = cv_errors[best] / n_total;
    const double se = std::sqrt(std::max(rate * (1.0 - rate), 0.0) / n_total);
    const double bound = rate + se;
    for (std::size_t a = candidates.size(); a-- > 0;) {
      if (cv_errors[a] / n_total <= bound + 1e-12) {
        best = a;
        break;
      }
    }
  }
  prune_at_alpha(tree, 0, candidates[best]);
  return tree;
}

}  // namespace clfbench::tree
