#include "relaxed/well_order.hpp"

#include <string>

namespace relaxed::wo {

FinWellOrder::FinWellOrder(std::vector<std::string> ranked) : carrier_(std::move(ranked)) {}

FinWellOrder::FinWellOrder(const FinDomain& carrier, const std::map<std::string, std::size_t>& rank_of) {
  const std::size_t n = carrier.size();
  std::vector<std::string> ranked(n);
  std::vector<bool> used(n, false);
  for (const auto& label : carrier.labels()) {
    auto it = rank_of.find(label);
    if (it == rank_of.end()) throw ValidationError("rank missing for element", {label});
    const std::size_t r = it->second;
    if (r >= n) throw ValidationError("rank outside 0..n-1", {label, std::to_string(r)});
    if (used[r]) throw ValidationError("rank assigned twice", {ranked[r], label});
    used[r] = true;
    ranked[r] = label;
  }
  if (rank_of.size() != n) throw ValidationError("rank map mentions labels outside the carrier", {});
  carrier_ = FinDomain(std::move(ranked));
}

FinWellOrder FinWellOrder::naturals(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return FinWellOrder(std::move(labels));
}

bool is_saturated(const FinWellOrder& w, std::span<const std::string> s) {
  std::vector<bool> member(w.size(), false);
  for (const auto& x : s) member[w.rank_of(x)] = true;
  // Downward closed iff membership is a prefix of the rank sequence.
  bool gap = false;
  for (bool m : member) {
    if (!m) gap = true;
    else if (gap) return false;
  }
  return true;
}

PartialMap<std::string> max_order_iso(const FinWellOrder& a, const FinWellOrder& b) {
  RecursionCondition<std::string> least_unused = [&b](const PartialMap<std::string>& f,
                                                      const std::string&) -> std::optional<std::string> {
    std::vector<bool> used(b.size(), false);
    for (const auto& kv : f) used[b.rank_of(kv.second)] = true;
    for (std::size_t r = 0; r < b.size(); ++r) {
      if (!used[r]) return b.at_rank(r);
    }
    return std::nullopt;
  };
  return recurse(a, least_unused);
}

std::string ChoiceTable::operator()(const std::set<std::string>& s) const {
  auto it = entries.find(s);
  if (it == entries.end()) throw ValidationError("choice table undefined on subset", {s.begin(), s.end()});
  return it->second;
}

FinWellOrder well_order_from_choice(const FinDomain& d, const ChoiceFn& ch) {
  // Recursion along 0 < 1 < ... < |d|: f[i] = ch[im f], defined while the
  // image is a proper subset of d.
  const auto steps = FinWellOrder::naturals(d.size() + 1);
  RecursionCondition<std::string> chosen_outside = [&](const PartialMap<std::string>& f,
                                                       const std::string&) -> std::optional<std::string> {
    std::set<std::string> image;
    for (const auto& kv : f) image.insert(kv.second);
    if (image.size() == d.size()) return std::nullopt;
    std::string c = ch(image);
    if (!d.contains(c) || image.count(c) != 0) {
      std::vector<std::string> witness(image.begin(), image.end());
      witness.push_back(c);
      throw ValidationError(d.contains(c) ? "choice returned a member of its argument"
                                          : "choice returned an element outside the domain",
                            std::move(witness));
    }
    return c;
  };
  const auto f = recurse(steps, chosen_outside);
  std::vector<std::string> ranked;
  ranked.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) ranked.push_back(f.at(std::to_string(i)));
  return FinWellOrder(std::move(ranked));
}

}  // namespace relaxed::wo
