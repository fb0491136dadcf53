#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "relaxed/error.hpp"
#include "relaxed/well_order.hpp"

using namespace relaxed;
using namespace relaxed::wo;

namespace {

FinWellOrder shuffled_naturals(std::mt19937_64& rng, std::size_t n, const std::string& prefix) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  std::shuffle(labels.begin(), labels.end(), rng);
  return FinWellOrder(labels);
}

// Rebuild an R-recursive function on a known domain, highest element first:
// the value at c only depends on the restriction below c, which for a
// recursive function is fixed by unfolding the recursion downward.
template <class V>
PartialMap<V> top_down(const FinWellOrder& w, std::size_t domain_size, const RecursionCondition<V>& r) {
  PartialMap<V> memo;
  std::function<V(std::size_t)> value_at = [&](std::size_t rank) -> V {
    const auto& c = w.at_rank(rank);
    if (auto it = memo.find(c); it != memo.end()) return it->second;
    PartialMap<V> below;
    for (std::size_t k = rank; k-- > 0;) below.emplace(w.at_rank(k), value_at(k));
    V v = *r(below, c);
    memo.emplace(c, v);
    return v;
  };
  for (std::size_t k = domain_size; k-- > 0;) value_at(k);
  return memo;
}

}  // namespace

TEST_CASE("construction") {
  CHECK_THROWS_AS(FinWellOrder({"a", "a"}), ValidationError);
  FinDomain d({"x", "y", "z"});
  FinWellOrder w(d, {{"x", 2}, {"y", 0}, {"z", 1}});
  CHECK(w.ranked() == std::vector<std::string>{"y", "z", "x"});
  CHECK_THROWS_AS(FinWellOrder(d, {{"x", 0}, {"y", 0}, {"z", 1}}), ValidationError);
  CHECK_THROWS_AS(FinWellOrder(d, {{"x", 0}, {"y", 1}, {"z", 3}}), ValidationError);
  CHECK_THROWS_AS(FinWellOrder(d, {{"x", 0}, {"y", 1}}), ValidationError);
  CHECK(FinWellOrder::naturals(3).rank_of("2") == 2);
}

TEST_CASE("is_saturated") {
  auto w = FinWellOrder::naturals(3);
  CHECK(is_saturated(w, std::vector<std::string>{}));
  CHECK(is_saturated(w, std::vector<std::string>{"0", "1", "2"}));
  CHECK(is_saturated(w, std::vector<std::string>{"1", "0"}));
  CHECK_FALSE(is_saturated(w, std::vector<std::string>{"0", "2"}));
  CHECK_THROWS_AS(is_saturated(w, std::vector<std::string>{"7"}), ValidationError);
}

TEST_CASE("recurse") {
  auto w = FinWellOrder::naturals(4);
  RecursionCondition<int> never = [](const PartialMap<int>&, const std::string&) { return std::optional<int>{}; };
  CHECK(recurse(w, never).empty());

  RecursionCondition<std::size_t> count = [](const PartialMap<std::size_t>& f, const std::string&) {
    return std::optional<std::size_t>(f.size());
  };
  auto f = recurse(w, count);
  CHECK(f == PartialMap<std::size_t>{{"0", 0}, {"1", 1}, {"2", 2}, {"3", 3}});

  RecursionCondition<std::size_t> short_count = [](const PartialMap<std::size_t>& f, const std::string&) {
    return f.size() < 2 ? std::optional<std::size_t>(f.size()) : std::nullopt;
  };
  auto g = recurse(w, short_count);
  CHECK(domain_of(g) == std::vector<std::string>{"0", "1"});
  CHECK(is_saturated(w, domain_of(g)));
}

TEST_CASE("recursive functions are unique: bottom-up equals top-down") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    auto w = shuffled_naturals(rng, 1 + rng() % 9, "e");
    std::uint64_t salt = rng();
    std::size_t cut = rng() % 10;
    RecursionCondition<std::uint64_t> r = [salt, cut](const PartialMap<std::uint64_t>& f, const std::string& c) {
      if (f.size() >= cut) return std::optional<std::uint64_t>{};
      std::uint64_t h = salt ^ std::hash<std::string>{}(c);
      for (const auto& [k, v] : f) h = h * 1099511628211ull + v + std::hash<std::string>{}(k);
      return std::optional<std::uint64_t>(h);
    };
    auto bottom = recurse(w, r);
    REQUIRE(bottom == top_down(w, bottom.size(), r));
  }
}

TEST_CASE("max_order_iso") {
  auto a5 = FinWellOrder({"a", "b", "c", "d", "e"});
  auto b5 = FinWellOrder({"v", "w", "x", "y", "z"});
  auto full = max_order_iso(a5, b5);
  CHECK(full == PartialMap<std::string>{{"a", "v"}, {"b", "w"}, {"c", "x"}, {"d", "y"}, {"e", "z"}});

  auto a2 = FinWellOrder({"p", "q"});
  auto f = max_order_iso(a2, b5);
  CHECK(f == PartialMap<std::string>{{"p", "v"}, {"q", "w"}});
  auto g = max_order_iso(b5, a2);
  CHECK(g == PartialMap<std::string>{{"v", "p"}, {"w", "q"}});

  CHECK(max_order_iso(FinWellOrder(), b5).empty());
}

TEST_CASE("well_order_from_choice") {
  auto one = well_order_from_choice(FinDomain({"only"}), [](const std::set<std::string>&) { return std::string("only"); });
  CHECK(one.ranked() == std::vector<std::string>{"only"});

  FinDomain d({"b", "a", "c"});
  ChoiceFn least_unused = [&](const std::set<std::string>& s) {
    std::string best;
    for (const auto& x : d.labels())
      if (!s.count(x) && (best.empty() || x < best)) best = x;
    return best;
  };
  CHECK(well_order_from_choice(d, least_unused).ranked() == std::vector<std::string>{"a", "b", "c"});

  ChoiceFn cheat = [](const std::set<std::string>& s) { return s.empty() ? std::string("a") : *s.begin(); };
  try {
    well_order_from_choice(d, cheat);
    FAIL("accepted a choice inside its argument");
  } catch (const ValidationError& e) {
    CHECK(e.witness() == std::vector<std::string>{"a", "a"});
  }
  ChoiceFn stray = [](const std::set<std::string>&) { return std::string("zzz"); };
  CHECK_THROWS_AS(well_order_from_choice(d, stray), ValidationError);
}

TEST_CASE("random choice tables give valid orders") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 1 + rng() % 6;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < n; ++k) labels.push_back("x" + std::to_string(k));
    FinDomain d(labels);
    ChoiceTable table;
    for (std::uint32_t mask = 0; mask + 1 < (1u << n); ++mask) {
      std::set<std::string> s;
      std::vector<std::string> outside;
      for (std::size_t k = 0; k < n; ++k) (mask >> k & 1 ? s.insert(labels[k]), void() : outside.push_back(labels[k]));
      table.entries[s] = outside[rng() % outside.size()];
    }
    auto w = well_order_from_choice(d, std::cref(table));
    REQUIRE(w.size() == n);
    // each element is what the table picks from the set of its predecessors
    std::set<std::string> before;
    for (const auto& x : w.ranked()) {
      REQUIRE(table(before) == x);
      before.insert(x);
    }
  }
  ChoiceTable empty;
  CHECK_THROWS_AS(empty({}), ValidationError);
}
