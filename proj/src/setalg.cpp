#include "primeiasi/setalg.hpp"

#include <algorithm>
#include <string>

#include "primeiasi/error.hpp"

namespace primeiasi {

IntSet::IntSet(std::vector<Value> sorted_elements)
    : elements_(std::move(sorted_elements)) {
  if (elements_.empty()) throw InvalidParams("IntSet must be non-empty");
  if (elements_.front() < 0) throw InvalidParams("IntSet elements must be non-negative");
  for (std::size_t i = 1; i < elements_.size(); ++i) {
    if (elements_[i] <= elements_[i - 1]) {
      throw InvalidParams("IntSet elements must be strictly increasing");
    }
  }
}

IntSet IntSet::from_unsorted(std::vector<Value> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return IntSet(std::move(elements));
}

bool IntSet::contains(Value v) const {
  return std::binary_search(elements_.begin(), elements_.end(), v);
}

void APSet::validate() const {
  if (first < 0) throw InvalidParams("AP first term must be non-negative");
  if (diff < 1) throw InvalidParams("AP common difference must be positive");
  if (len < 1) throw InvalidParams("AP length must be at least 1");
}

IntSet expand(const APSet& ap) {
  ap.validate();
  std::vector<Value> out;
  out.reserve(static_cast<std::size_t>(ap.len));
  for (Value i = 0; i < ap.len; ++i) out.push_back(ap.first + i * ap.diff);
  return IntSet(std::move(out));
}

IntSet sumset(const IntSet& a, const IntSet& b) {
  std::vector<Value> out;
  out.reserve(a.size() * b.size());
  for (Value x : a.elements()) {
    for (Value y : b.elements()) out.push_back(x + y);
  }
  return IntSet::from_unsorted(std::move(out));
}

std::optional<ApRecognition> ap_recognize(const IntSet& s) {
  const auto e = s.elements();
  if (e.size() == 1) return ApRecognition{APSet{e[0], 1, 1}, true};
  const Value gap = e[1] - e[0];
  for (std::size_t i = 2; i < e.size(); ++i) {
    if (e[i] - e[i - 1] != gap) return std::nullopt;
  }
  const auto len = static_cast<Value>(e.size());
  return ApRecognition{APSet{e[0], gap, len}, len < kMinLabelLen};
}

std::variant<APSet, IntSet> ap_sumset(const APSet& a, const APSet& b) {
  a.validate();
  b.validate();
  const APSet& small = (b.diff < a.diff) ? b : a;
  const APSet& big = (b.diff < a.diff) ? a : b;
  if (big.diff % small.diff == 0) {
    const Value k = big.diff / small.diff;
    if (k <= small.len) {
      return APSet{a.first + b.first, small.diff, small.len + k * (big.len - 1)};
    }
  }
  return sumset(expand(a), expand(b));
}

std::vector<Value> sidon_prefix(std::size_t m) {
  std::vector<Value> seq;
  seq.reserve(m);
  std::vector<bool> used_sums;
  auto taken = [&](Value s) {
    return static_cast<std::size_t>(s) < used_sums.size() && used_sums[static_cast<std::size_t>(s)];
  };
  for (Value candidate = 0; seq.size() < m; ++candidate) {
    bool ok = !taken(2 * candidate);
    for (std::size_t i = 0; ok && i < seq.size(); ++i) ok = !taken(seq[i] + candidate);
    if (!ok) continue;
    used_sums.resize(static_cast<std::size_t>(2 * candidate + 1), false);
    for (Value x : seq) used_sums[static_cast<std::size_t>(x + candidate)] = true;
    used_sums[static_cast<std::size_t>(2 * candidate)] = true;
    seq.push_back(candidate);
  }
  return seq;
}

}  // namespace primeiasi
