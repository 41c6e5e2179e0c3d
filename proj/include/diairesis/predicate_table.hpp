#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "diairesis/errors.hpp"
#include "diairesis/powerset.hpp"

namespace diairesis {

// A concept taken extensionally: the set of items (by table position) the
// concept covers. Members are kept sorted and unique.
class Concept {
 public:
  Concept() = default;

  explicit Concept(std::vector<std::uint32_t> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  const std::vector<std::uint32_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  bool contains(std::uint32_t item) const {
    return std::binary_search(members_.begin(), members_.end(), item);
  }

  bool subset_of(const Concept& other) const {
    return std::includes(other.members_.begin(), other.members_.end(),
                         members_.begin(), members_.end());
  }

  friend bool operator==(const Concept& a, const Concept& b) = default;

 private:
  std::vector<std::uint32_t> members_;
};

// Finite universe of items crossed with boolean predicates; the matrix is
// total. Immutable after construction.
class PredicateTable {
 public:
  PredicateTable(std::vector<std::string> items, std::vector<std::string> predicates,
                 std::vector<std::vector<bool>> rows)
      : items_(std::move(items)), predicates_(std::move(predicates)) {
    check_unique(items_, "item");
    check_unique(predicates_, "predicate");
    if (rows.size() != items_.size())
      throw std::invalid_argument("predicate table needs one row per item");
    cells_.reserve(items_.size() * predicates_.size());
    for (const auto& row : rows) {
      if (row.size() != predicates_.size())
        throw std::invalid_argument("predicate table row has wrong arity");
      for (bool cell : row) cells_.push_back(cell ? 1 : 0);
    }
    for (std::size_t i = 0; i < items_.size(); ++i) item_index_[items_[i]] = i;
    for (std::size_t i = 0; i < predicates_.size(); ++i)
      predicate_index_[predicates_[i]] = i;
  }

  std::size_t item_count() const { return items_.size(); }
  std::size_t predicate_count() const { return predicates_.size(); }
  const std::vector<std::string>& items() const { return items_; }
  const std::vector<std::string>& predicates() const { return predicates_; }

  const std::string& item_id(std::size_t index) const { return items_[index]; }

  std::size_t item_index(std::string_view id) const {
    const auto it = item_index_.find(std::string(id));
    if (it == item_index_.end()) throw UnknownItemError(std::string(id));
    return it->second;
  }

  std::size_t predicate_index(std::string_view name) const {
    const auto it = predicate_index_.find(std::string(name));
    if (it == predicate_index_.end()) throw UnknownPredicateError(std::string(name));
    return it->second;
  }

  bool cell(std::size_t item, std::size_t predicate) const {
    return cells_[item * predicates_.size() + predicate] != 0;
  }

  bool satisfies(std::string_view item_id_, std::string_view predicate) const {
    return cell(item_index(item_id_), predicate_index(predicate));
  }

  // the whole universe as a concept
  Concept universe() const {
    std::vector<std::uint32_t> all(items_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<std::uint32_t>(i);
    return Concept(std::move(all));
  }

  Concept concept_of(std::span<const std::string> ids) const {
    std::vector<std::uint32_t> members;
    members.reserve(ids.size());
    for (const auto& id : ids)
      members.push_back(static_cast<std::uint32_t>(item_index(id)));
    return Concept(std::move(members));
  }

  std::vector<std::string> ids_of(const Concept& c) const {
    std::vector<std::string> ids;
    ids.reserve(c.size());
    for (std::uint32_t m : c.members()) {
      if (m >= items_.size()) throw UnknownItemError("#" + std::to_string(m));
      ids.push_back(items_[m]);
    }
    return ids;
  }

 private:
  static void check_unique(const std::vector<std::string>& names, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& name : names) {
      if (name.empty())
        throw std::invalid_argument(std::string("empty ") + what + " name");
      if (!seen.insert(name).second)
        throw std::invalid_argument(std::string("duplicate ") + what + " name '" +
                                    name + "'");
    }
  }

  std::vector<std::string> items_;
  std::vector<std::string> predicates_;
  std::vector<std::uint8_t> cells_;  // row-major items x predicates
  std::unordered_map<std::string, std::size_t> item_index_;
  std::unordered_map<std::string, std::size_t> predicate_index_;
};

struct Division {
  Concept positive;  // members satisfying the predicate
  Concept negative;  // the exclusive complement within the divided concept
};

// One dichotomic cut: a concept against a predicate and its complement.
inline Division divide(const Concept& c, std::string_view predicate,
                       const PredicateTable& t) {
  const std::size_t p = t.predicate_index(predicate);
  std::vector<std::uint32_t> pos, neg;
  for (std::uint32_t m : c.members()) {
    if (m >= t.item_count()) throw UnknownItemError("#" + std::to_string(m));
    (t.cell(m, p) ? pos : neg).push_back(m);
  }
  return Division{Concept(std::move(pos)), Concept(std::move(neg))};
}

// How far from the middle a cut lands: | |positive| - |negative| |.
inline std::size_t balance_score(std::string_view predicate, const Concept& c,
                                 const PredicateTable& t) {
  const Division d = divide(c, predicate, t);
  const std::size_t a = d.positive.size();
  const std::size_t b = d.negative.size();
  return a > b ? a - b : b - a;
}

// A concept that cannot be divided any further: a singleton, or one on
// which no predicate of the table separates two non-empty parts.
inline bool is_stoicheion(const Concept& c, const PredicateTable& t) {
  if (c.size() == 1) return true;
  for (const auto& p : t.predicates()) {
    const Division d = divide(c, p, t);
    if (!d.positive.empty() && !d.negative.empty()) return false;
  }
  return true;
}

inline constexpr std::size_t natural_class_max_predicates = 12;

// Whether the part s of c is also a class: some conjunction of predicate
// literals (each predicate used at most once, affirmed or negated; the
// empty conjunction means c itself) selects exactly s from c. Decided by
// exhausting all 3^p literal conjunctions.
inline bool is_natural_class(const Concept& s, const Concept& c,
                             const PredicateTable& t) {
  if (!s.subset_of(c))
    throw std::invalid_argument("candidate part is not a subset of the concept");
  const std::size_t p = t.predicate_count();
  if (p > natural_class_max_predicates)
    throw CapacityError("class search over " + std::to_string(p) +
                        " predicates exceeds the " +
                        std::to_string(natural_class_max_predicates) +
                        "-predicate guard");

  std::size_t codes = 1;
  for (std::size_t i = 0; i < p; ++i) codes *= 3;

  std::vector<std::uint8_t> literal(p);  // 0 = unused, 1 = affirmed, 2 = negated
  for (std::size_t code = 0; code < codes; ++code) {
    std::size_t rest = code;
    for (std::size_t i = 0; i < p; ++i) {
      literal[i] = static_cast<std::uint8_t>(rest % 3);
      rest /= 3;
    }
    std::vector<std::uint32_t> selected;
    for (std::uint32_t m : c.members()) {
      bool keep = true;
      for (std::size_t i = 0; i < p && keep; ++i) {
        if (literal[i] == 1) keep = t.cell(m, i);
        else if (literal[i] == 2) keep = !t.cell(m, i);
      }
      if (keep) selected.push_back(m);
    }
    if (Concept(std::move(selected)) == s) return true;
  }
  return false;
}

// powerset over concepts, in the canonical subset order
inline std::vector<Concept> powerset(const Concept& c) {
  std::vector<Concept> out;
  for_each_subset(c.size(), [&](std::span<const std::size_t> positions) {
    std::vector<std::uint32_t> members;
    members.reserve(positions.size());
    for (std::size_t pos : positions) members.push_back(c.members()[pos]);
    out.push_back(Concept(std::move(members)));
  });
  return out;
}

inline std::vector<Concept> singletons(const Concept& c) {
  if (c.size() > powerset_max_items)
    throw CapacityError("powerset of " + std::to_string(c.size()) +
                        " items exceeds the " +
                        std::to_string(powerset_max_items) + "-item guard");
  std::vector<Concept> out;
  out.reserve(c.size());
  for (std::uint32_t m : c.members()) out.push_back(Concept({m}));
  return out;
}

}  // namespace diairesis
