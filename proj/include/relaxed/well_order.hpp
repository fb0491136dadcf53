#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "relaxed/error.hpp"
#include "relaxed/pairing.hpp"

namespace relaxed::wo {

using pairing::FinDomain;

// A finite well-order. The carrier stores its labels in rank order, so the
// rank of a label is its index.
class FinWellOrder {
 public:
  FinWellOrder() = default;
  // Labels listed from least to greatest.
  explicit FinWellOrder(std::vector<std::string> ranked);
  // Carrier plus an explicit rank assignment, which must be a bijection onto
  // {0..n-1}.
  FinWellOrder(const FinDomain& carrier, const std::map<std::string, std::size_t>& rank_of);

  // The order 0 < 1 < ... < n-1 on decimal labels.
  static FinWellOrder naturals(std::size_t n);

  std::size_t size() const noexcept { return carrier_.size(); }
  const FinDomain& carrier() const noexcept { return carrier_; }
  const std::vector<std::string>& ranked() const noexcept { return carrier_.labels(); }
  std::size_t rank_of(const std::string& label) const { return carrier_.index_of(label); }
  const std::string& at_rank(std::size_t r) const { return carrier_.label(r); }

 private:
  FinDomain carrier_;
};

// Partial function keyed by carrier label.
template <class V>
using PartialMap = std::map<std::string, V>;

// R : pfn[A, D] x A -> D. Returning nullopt means (f, c) is outside the
// domain of R. The partial function passed in is the restriction of the
// function built so far to the elements below `current`.
template <class V>
using RecursionCondition = std::function<std::optional<V>(const PartialMap<V>& below, const std::string& current)>;

// yes iff s is downward closed. ValidationError for labels outside the carrier.
bool is_saturated(const FinWellOrder& w, std::span<const std::string> s);

template <class V>
std::vector<std::string> domain_of(const PartialMap<V>& f) {
  std::vector<std::string> out;
  out.reserve(f.size());
  for (const auto& kv : f) out.push_back(kv.first);
  return out;
}

// Maximal R-recursive partial function. Elements are visited in increasing
// rank; the first element where R is undefined ends the domain.
template <class V>
PartialMap<V> recurse(const FinWellOrder& w, const RecursionCondition<V>& r) {
  PartialMap<V> f;
  for (const auto& c : w.ranked()) {
    std::optional<V> value = r(f, c);
    if (!value) break;
    f.emplace(c, std::move(*value));
  }
  return f;
}

// The unique maximal order-isomorphism from a saturated part of `a` onto a
// saturated part of `b`, computed by recursion with R[f, x] = min[b - im f].
PartialMap<std::string> max_order_iso(const FinWellOrder& a, const FinWellOrder& b);

// A choice function on proper subsets of a domain: returns an element NOT in
// its argument.
using ChoiceFn = std::function<std::string(const std::set<std::string>&)>;

// Explicit choice table keyed by subset.
struct ChoiceTable {
  std::map<std::set<std::string>, std::string> entries;

  // ValidationError when the subset has no entry.
  std::string operator()(const std::set<std::string>& s) const;
};

// Enumerates d by choosing, at each step, an element outside the already
// chosen set. ValidationError when the choice lands inside its argument or
// outside d.
FinWellOrder well_order_from_choice(const FinDomain& d, const ChoiceFn& ch);

}  // namespace relaxed::wo
