#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace primeiasi {

using Value = std::int64_t;

/// Finite, non-empty set of non-negative integers stored in strictly
/// increasing order.
class IntSet {
 public:
  /// Takes elements that are already strictly increasing and non-negative.
  /// Throws InvalidParams otherwise.
  explicit IntSet(std::vector<Value> sorted_elements);

  /// Sorts and deduplicates arbitrary non-negative input.
  static IntSet from_unsorted(std::vector<Value> elements);

  std::span<const Value> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  Value min() const noexcept { return elements_.front(); }
  Value max() const noexcept { return elements_.back(); }
  bool contains(Value v) const;

  friend bool operator==(const IntSet&, const IntSet&) = default;
  friend auto operator<=>(const IntSet&, const IntSet&) = default;

 private:
  std::vector<Value> elements_;
};

/// Arithmetic progression {first + i*diff : 0 <= i < len}.
struct APSet {
  Value first = 0;
  Value diff = 1;
  Value len = 1;

  /// Throws InvalidParams unless first >= 0, diff >= 1 and len >= 1.
  void validate() const;
  Value last() const noexcept { return first + (len - 1) * diff; }

  friend bool operator==(const APSet&, const APSet&) = default;
  friend auto operator<=>(const APSet&, const APSet&) = default;
};

/// Smallest cardinality admitted for a vertex or edge label.
inline constexpr Value kMinLabelLen = 3;

IntSet expand(const APSet& ap);

/// A + B = {a + b : a in A, b in B}.
IntSet sumset(const IntSet& a, const IntSet& b);

struct ApRecognition {
  APSet ap;
  // Sets of one or two elements are progressions but too small for a label.
  bool degenerate = false;
};

/// Returns the progression parameters of `s` when its consecutive gaps are
/// all equal, nothing otherwise.
std::optional<ApRecognition> ap_recognize(const IntSet& s);

/// Sum of two progressions. When the larger difference is an integer
/// multiple k of the smaller one with k no larger than the length of the
/// smaller-difference operand, the result is the progression
/// (a + b, d, n + k(m - 1)). Otherwise the generic sumset is returned.
std::variant<APSet, IntSet> ap_sumset(const APSet& a, const APSet& b);

/// First `m` terms of the greedy B2 (Sidon) sequence starting at 0: every
/// pairwise sum x + y with x <= y is distinct.
std::vector<Value> sidon_prefix(std::size_t m);

}  // namespace primeiasi
