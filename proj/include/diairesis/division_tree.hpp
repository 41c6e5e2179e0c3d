#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "diairesis/errors.hpp"
#include "diairesis/four_valued.hpp"
#include "diairesis/phi_number.hpp"
#include "diairesis/predicate_table.hpp"
#include "diairesis/rational.hpp"

namespace diairesis {

// One node of a division tree. The children of an internal node carry the
// exclusive complements of a cut on split_predicate: the affirmed side on
// the 1-branch, the complement on the 0-branch.
struct DiaireticNode {
  Concept extent;  // the concept's members at this node
  PhiNumber phi;
  std::optional<std::string> split_predicate;  // absent at leaves
  std::unique_ptr<DiaireticNode> negative;     // 0-branch
  std::unique_ptr<DiaireticNode> positive;     // 1-branch

  bool is_leaf() const { return !split_predicate.has_value(); }
};

class DiaireticTree {
 public:
  DiaireticTree(PredicateTable table, std::unique_ptr<DiaireticNode> root,
                std::size_t depth)
      : table_(std::move(table)), root_(std::move(root)), depth_(depth) {}

  const DiaireticNode& root() const { return *root_; }
  const PredicateTable& table() const { return table_; }

  // number of division generations
  std::size_t depth() const { return depth_; }

  // all nodes in lexicographic phi order (a prefix precedes its extensions,
  // 0 before 1), which is exactly a pre-order walk taking 0-branches first
  std::vector<const DiaireticNode*> nodes() const {
    std::vector<const DiaireticNode*> out;
    collect(root_.get(), false, out);
    return out;
  }

  // leaves only, same order
  std::vector<const DiaireticNode*> leaves() const {
    std::vector<const DiaireticNode*> out;
    collect(root_.get(), true, out);
    return out;
  }

 private:
  static void collect(const DiaireticNode* node, bool leaves_only,
                      std::vector<const DiaireticNode*>& out) {
    if (!leaves_only || node->is_leaf()) out.push_back(node);
    if (!node->is_leaf()) {
      collect(node->negative.get(), leaves_only, out);
      collect(node->positive.get(), leaves_only, out);
    }
  }

  PredicateTable table_;
  std::unique_ptr<DiaireticNode> root_;
  std::size_t depth_;
};

inline bool is_stoicheion(const DiaireticNode& n, const PredicateTable& t) {
  return is_stoicheion(n.extent, t);
}

namespace detail {

inline std::unique_ptr<DiaireticNode> build_ordered(
    Concept extent, PhiNumber phi, std::span<const std::string> order,
    std::size_t level, const PredicateTable& t) {
  auto node = std::make_unique<DiaireticNode>();
  node->phi = phi;
  if (level == order.size()) {
    node->extent = std::move(extent);
    return node;
  }
  Division d = divide(extent, order[level], t);
  node->extent = std::move(extent);
  node->split_predicate = order[level];
  node->negative = build_ordered(std::move(d.negative), phi.child(false), order,
                                 level + 1, t);
  node->positive = build_ordered(std::move(d.positive), phi.child(true), order,
                                 level + 1, t);
  return node;
}

inline std::unique_ptr<DiaireticNode> build_balanced(
    Concept extent, PhiNumber phi, std::size_t max_depth,
    std::vector<std::string>& used, const PredicateTable& t,
    std::size_t& reached_depth) {
  auto node = std::make_unique<DiaireticNode>();
  node->phi = phi;
  reached_depth = std::max(reached_depth, phi.generation());

  if (phi.generation() < max_depth && extent.size() > 1) {
    // the best remaining cut: both sides non-empty, closest to the middle,
    // ties broken by predicate name so the choice is column-order invariant
    std::optional<std::string> best;
    std::size_t best_score = 0;
    for (const auto& p : t.predicates()) {
      if (std::find(used.begin(), used.end(), p) != used.end()) continue;
      const Division d = divide(extent, p, t);
      if (d.positive.empty() || d.negative.empty()) continue;
      const std::size_t score = balance_score(p, extent, t);
      if (!best || score < best_score || (score == best_score && p < *best)) {
        best = p;
        best_score = score;
      }
    }
    if (best) {
      Division d = divide(extent, *best, t);
      node->split_predicate = *best;
      used.push_back(*best);
      node->negative = build_balanced(std::move(d.negative), phi.child(false),
                                      max_depth, used, t, reached_depth);
      node->positive = build_balanced(std::move(d.positive), phi.child(true),
                                      max_depth, used, t, reached_depth);
      used.pop_back();
    }
  }
  node->extent = std::move(extent);
  return node;
}

inline void check_concept_in_table(const Concept& c, const PredicateTable& t) {
  for (std::uint32_t m : c.members())
    if (m >= t.item_count()) throw UnknownItemError("#" + std::to_string(m));
}

}  // namespace detail

// Full binary division tree: order[i] is cut at generation i in every node
// of that level, empty sides included, so a tree over n predicates always
// has 2^n leaves.
inline DiaireticTree build_tree(const Concept& c,
                                std::span<const std::string> order,
                                const PredicateTable& t) {
  detail::check_concept_in_table(c, t);
  std::unordered_set<std::string_view> seen;
  for (const auto& p : order) {
    t.predicate_index(p);
    if (!seen.insert(p).second)
      throw std::invalid_argument("duplicate predicate '" + p + "' in division order");
  }
  auto root = detail::build_ordered(c, PhiNumber::root(), order, 0, t);
  return DiaireticTree(t, std::move(root), order.size());
}

inline DiaireticTree build_tree(const Concept& c,
                                std::initializer_list<std::string> order,
                                const PredicateTable& t) {
  return build_tree(c, std::span<const std::string>(order.begin(), order.size()), t);
}

// Division through the middle: every node greedily takes the unused
// predicate with the smallest balance score that still cuts it into two
// non-empty parts. A node stays a leaf once it is a stoicheion, no such
// predicate remains, or the externally imposed depth limit is reached.
inline DiaireticTree build_tree_balanced(const Concept& c, const PredicateTable& t,
                                         std::size_t max_depth) {
  detail::check_concept_in_table(c, t);
  std::vector<std::string> used;
  std::size_t reached = 0;
  auto root = detail::build_balanced(c, PhiNumber::root(), max_depth, used, t, reached);
  return DiaireticTree(t, std::move(root), reached);
}

// Join of the branch verdicts over all leaves: N for the bare root, B for
// any tree with at least one completed division.
inline Value tree_determination(const DiaireticTree& tree) {
  Value v = Value::N;
  for (const DiaireticNode* leaf : tree.leaves())
    v = knowledge_join(v, branch_determination(leaf->phi));
  return v;
}

struct Classification {
  const DiaireticNode* leaf;
  PhiNumber phi;
};

// Walk an item down the tree, taking the 1-branch wherever the item
// satisfies the node's split predicate.
inline Classification classify(std::string_view item_id, const DiaireticTree& tree) {
  const std::size_t item = tree.table().item_index(item_id);
  const DiaireticNode* node = &tree.root();
  while (!node->is_leaf()) {
    const std::size_t p = tree.table().predicate_index(*node->split_predicate);
    node = tree.table().cell(item, p) ? node->positive.get() : node->negative.get();
  }
  return Classification{node, node->phi};
}

struct LargeAndSmall {
  std::vector<Rational> doubling;  // 2^1 .. 2^k
  std::vector<Rational> halving;   // 2^-1 .. 2^-k
};

// The two generation sequences that division spins off the unit: doubling
// toward the many, halving toward the parts.
inline LargeAndSmall large_and_small(std::size_t k) {
  LargeAndSmall out;
  out.doubling.reserve(k);
  out.halving.reserve(k);
  for (std::size_t i = 1; i <= k; ++i) {
    out.doubling.push_back(Rational::pow2(static_cast<int>(i)));
    out.halving.push_back(Rational::pow2(-static_cast<int>(i)));
  }
  return out;
}

}  // namespace diairesis
