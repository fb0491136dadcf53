// Acceptance suite: every criterion prints one PASS/FAIL line; the exit code
// is nonzero when any of them fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "relaxed/cardinal.hpp"
#include "relaxed/cli.hpp"
#include "relaxed/collapse.hpp"
#include "relaxed/error.hpp"
#include "relaxed/hf.hpp"
#include "relaxed/io.hpp"
#include "relaxed/ordinal.hpp"
#include "relaxed/pairing.hpp"
#include "relaxed/well_order.hpp"
#include "relaxed/zfc.hpp"

using namespace relaxed;
using ordinal::Ordinal;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Failed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw Failed(what);
}

Ordinal random_ordinal(std::mt19937_64& rng, int depth = 2) {
  std::size_t n = rng() % 4;
  std::vector<Ordinal> exps;
  for (std::size_t i = 0; i < n; ++i)
    exps.push_back(depth > 0 && rng() % 3 == 0 ? random_ordinal(rng, depth - 1) : Ordinal::finite(rng() % 5));
  std::sort(exps.begin(), exps.end(), std::greater<>());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<ordinal::Term> ts;
  for (auto& e : exps) ts.push_back({e, 1 + rng() % 4});
  return Ordinal::from_terms(ts);
}

// A CNF notation is a limit iff it is nonzero and its last exponent is nonzero.
bool limit_by_notation(const Ordinal& a) { return !a.terms().empty() && !a.terms().back().exponent.is_zero(); }

// ---------------------------------------------------------------- 1
Outcome ackermann_order() {
  // Any subset reaching past 15 exceeds every subset of {0..15}, so the first
  // 2^16 finite subsets of N in symmetric-difference order are exactly the
  // subsets of {0..15}, sorted.
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> build = [&](std::size_t k) {
    if (k == 16) {
      subsets.push_back(cur);
      return;
    }
    build(k + 1);
    cur.push_back(k);
    build(k + 1);
    cur.pop_back();
  };
  build(0);
  auto less = [](const std::vector<std::size_t>& s, const std::vector<std::size_t>& t) {
    std::vector<std::size_t> d;
    std::set_symmetric_difference(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(d));
    return !d.empty() && std::binary_search(t.begin(), t.end(), d.back());
  };
  std::sort(subsets.begin(), subsets.end(), less);
  expect(subsets.size() == 65536, "enumerated " + std::to_string(subsets.size()) + " subsets");
  for (std::uint64_t n = 0; n < subsets.size(); ++n) {
    if (hf::members(n) != subsets[n]) return {false, "subset #" + std::to_string(n) + " differs from bits(n)"};
  }
  return {true, "65536 subsets"};
}

// ---------------------------------------------------------------- 2
Outcome collapse_round_trip() {
  std::size_t vertices = 0;
  for (std::uint64_t n = 0; n < 4096; ++n) {
    auto g = wf::membership_graph(n);
    auto codes = wf::collapse(g);
    auto root = g.vertices().index_of(std::to_string(n));
    vertices += g.size();
    if (codes[root] != hf::HFCode(n)) return {false, "root of " + std::to_string(n) + " -> " + codes[root].str()};
  }
  return {true, "4096 graphs, " + std::to_string(vertices) + " vertices"};
}

// ---------------------------------------------------------------- 3
Outcome collapse_uniqueness() {
  std::size_t graphs = 0, maps = 0;
  for (std::size_t n = 0; n <= 4; ++n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    pairing::FinDomain d(labels);
    for (std::uint64_t mask = 0; mask < (1ull << (n * n)); ++mask) {
      pairing::FinPairing p(d, d);
      std::vector<std::uint32_t> child_bits(n, 0);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (mask >> (a * n + b) & 1) {
            p.set(a, b);
            child_bits[a] |= 1u << b;
          }
      wf::WFGraph g(p);
      if (!wf::is_well_founded(g).holds || !wf::is_extensional(g).holds) continue;
      ++graphs;
      // every map vertices -> {0..15}, morphism iff code(a) = {code(b) | b child}
      std::size_t found = 0;
      std::vector<std::uint32_t> hit;
      const std::uint32_t total = 1u << (4 * n);
      for (std::uint32_t packed = 0; packed < total; ++packed) {
        bool morphism = true;
        for (std::size_t a = 0; a < n && morphism; ++a) {
          std::uint32_t want = 0;
          for (std::size_t b = 0; b < n; ++b)
            if (child_bits[a] >> b & 1) want |= 1u << (packed >> (4 * b) & 15);
          morphism = want == (packed >> (4 * a) & 15);
        }
        if (morphism) {
          ++found;
          hit.push_back(packed);
        }
      }
      maps += total;
      if (found != 1)
        return {false, "graph mask " + std::to_string(mask) + " on " + std::to_string(n) + " vertices has " +
                           std::to_string(found) + " morphisms"};
      auto codes = wf::collapse(g);
      for (std::size_t v = 0; v < n; ++v)
        expect(codes[v] == hf::HFCode(hit[0] >> (4 * v) & 15), "collapse differs from the unique morphism");
      expect(wf::is_morphism(g, codes).holds, "collapse output rejected by is_morphism");
    }
  }
  return {true, std::to_string(graphs) + " graphs, " + std::to_string(maps) + " maps searched"};
}

// ---------------------------------------------------------------- 4
Outcome collapse_injectivity() {
  std::mt19937_64 rng(0xd1a9);
  std::size_t by_codes = 0, by_classes = 0, extensional = 0;
  for (int i = 0; i < 1000; ++i) {
    std::size_t n = 1 + rng() % 10;
    std::vector<std::size_t> pos(n);
    std::iota(pos.begin(), pos.end(), 0);
    std::shuffle(pos.begin(), pos.end(), rng);
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < n; ++k) labels.push_back("v" + std::to_string(k));
    pairing::FinDomain d(labels);
    pairing::FinPairing p(d, d);
    std::bernoulli_distribution edge(0.1 + 0.5 * static_cast<double>(rng() % 100) / 100.0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (pos[a] > pos[b] && edge(rng)) p.set(a, b);
    wf::WFGraph g(p);

    bool ext = wf::is_extensional(g).holds;
    extensional += ext;
    bool injective;
    try {
      auto codes = wf::collapse(g);
      injective = std::set<hf::HFCode>(codes.begin(), codes.end()).size() == n;
      ++by_codes;
    } catch (const ResourceError&) {
      auto ids = wf::collapse_classes(g);
      injective = std::set<std::size_t>(ids.begin(), ids.end()).size() == n;
      ++by_classes;
    }
    if (injective != ext)
      return {false, "case " + std::to_string(i) + ": injective=" + std::to_string(injective) +
                         " extensional=" + std::to_string(ext)};
  }
  return {true, "1000 DAGs (" + std::to_string(extensional) + " extensional; " + std::to_string(by_codes) +
                    " via codes, " + std::to_string(by_classes) + " via classes)"};
}

// ---------------------------------------------------------------- 5
Outcome zfc_matrix() {
  auto check = [](const std::string& model) {
    std::ostringstream out, err;
    int code = cli::run({"--json", "zfc", "check", model}, out, err);
    expect(code == 0, "zfc check " + model + " exited " + std::to_string(code) + ": " + err.str());
    std::map<std::string, io::json> by_axiom;
    for (const auto& r : io::json::parse(out.str())) by_axiom[r.at("axiom")] = r;
    return by_axiom;
  };
  for (int k = 2; k <= 4; ++k) {
    auto m = check("vk:" + std::to_string(k));
    for (const char* axiom : {"foundation", "extensionality", "union", "choice", "separation"})
      if (m.at(axiom).at("verdict") != "pass") return {false, "vk:" + std::to_string(k) + " " + axiom + " did not pass"};
    if (m.at("infinity").at("verdict") != "fail") return {false, "vk:" + std::to_string(k) + " infinity did not fail"};
    const auto& p = m.at("powerset");
    if (p.at("verdict") != "fail") return {false, "vk:" + std::to_string(k) + " powerset did not fail"};
    auto w = p.at("witness").at("elements").at(0).get<std::string>();
    if (hf::stage(hf::parse_code(w)) != static_cast<std::size_t>(k - 1))
      return {false, "vk:" + std::to_string(k) + " powerset witness " + w + " is not top-stage"};
  }
  auto closed = check("vk:5/4");
  if (closed.at("powerset").at("verdict") != "pass") return {false, "vk:5/4 powerset did not pass"};
  return {true, "vk:2..4 matrix, vk:5/4 powerset pass"};
}

// ---------------------------------------------------------------- 6
Outcome pair_bijection() {
  for (std::uint64_t n = 0; n <= 200; ++n) {
    std::vector<bool> seen((n + 1) * (n + 1), false);
    for (std::uint64_t a = 0; a <= n; ++a)
      for (std::uint64_t b = 0; b <= n; ++b) {
        auto k = ordinal::pair_index(a, b);
        if (k >= seen.size() || seen[k]) return {false, "not a bijection on {0.." + std::to_string(n) + "}^2"};
        seen[k] = true;
        if (ordinal::unpair(k) != std::make_pair(a, b)) return {false, "unpair disagrees at " + std::to_string(k)};
      }
  }
  for (std::uint64_t n = 0; n <= 30; ++n) {
    std::vector<ordinal::PairCanonical> all;
    for (std::uint64_t a = 0; a <= n; ++a)
      for (std::uint64_t b = 0; b <= n; ++b) all.push_back({Ordinal::finite(a), Ordinal::finite(b)});
    std::sort(all.begin(), all.end(), [](const auto& p, const auto& q) { return ordinal::cmp_canonical(p, q) < 0; });
    for (std::size_t i = 0; i < all.size(); ++i)
      if (ordinal::pair_index(*all[i].first.finite_value(), *all[i].second.finite_value()) != i)
        return {false, "pair_index differs from canonical position " + std::to_string(i) + " at n=" + std::to_string(n)};
  }
  return {true, "bijective for n<=200, matches enumeration for n<=30"};
}

// ---------------------------------------------------------------- 7
// Follow a back through g^-1 and f^-1 until the chain stops or repeats. The
// construction keeps a (sending it to g^-1(a)) exactly when the chain stops
// in B, at an element outside the image of f.
std::size_t by_ancestry(const pairing::FinMap& f, const pairing::FinMap& g, std::size_t a) {
  std::vector<long> f_inv(f.to.size(), -1), g_inv(g.to.size(), -1);
  for (std::size_t x = 0; x < f.image.size(); ++x) f_inv[f.image[x]] = static_cast<long>(x);
  for (std::size_t y = 0; y < g.image.size(); ++y) g_inv[g.image[y]] = static_cast<long>(y);
  std::size_t x = a;
  for (std::size_t step = 0; step <= f.from.size() + 1; ++step) {
    if (g_inv[x] < 0) return f.image[a];  // stops in A
    auto y = static_cast<std::size_t>(g_inv[x]);
    if (f_inv[y] < 0) return static_cast<std::size_t>(g_inv[a]);  // stops in B
    x = static_cast<std::size_t>(f_inv[y]);
  }
  return f.image[a];  // cycle
}

Outcome cantor_bernstein_random() {
  std::mt19937_64 rng(0xcb500);
  for (int i = 0; i < 500; ++i) {
    std::size_t n = 1 + rng() % 8;
    std::vector<std::string> la, lb;
    for (std::size_t k = 0; k < n; ++k) {
      la.push_back("a" + std::to_string(k));
      lb.push_back("b" + std::to_string(k));
    }
    pairing::FinDomain A(la), B(lb);
    auto injection = [&](const pairing::FinDomain& from, const pairing::FinDomain& to) {
      std::vector<std::size_t> t(to.size());
      std::iota(t.begin(), t.end(), 0);
      std::shuffle(t.begin(), t.end(), rng);
      t.resize(from.size());
      return pairing::FinMap{from, to, t};
    };
    auto f = injection(A, B);
    auto g = injection(B, A);
    auto h = pairing::cantor_bernstein(f, g);
    std::vector<bool> hit(n, false);
    for (std::size_t a = 0; a < n; ++a) {
      if (h.image[a] >= n || hit[h.image[a]]) return {false, "case " + std::to_string(i) + " is not a bijection"};
      hit[h.image[a]] = true;
      if (h.image[a] != by_ancestry(f, g, a)) return {false, "case " + std::to_string(i) + " differs from the chain oracle"};
    }
  }
  return {true, "500 instances"};
}

// ---------------------------------------------------------------- 8
Outcome recursion_engine() {
  std::mt19937_64 rng(0x8ec);
  auto random_order = [&](const char* prefix) {
    std::size_t n = rng() % 11;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < n; ++k) labels.push_back(prefix + std::to_string(rng() % 1000) + "_" + std::to_string(k));
    std::shuffle(labels.begin(), labels.end(), rng);
    return wo::FinWellOrder(labels);
  };
  for (int i = 0; i < 1000; ++i) {
    auto a = random_order("a"), b = random_order("b");
    auto f = wo::max_order_iso(a, b);
    std::vector<std::string> dom, img;
    for (const auto& [x, y] : f) {
      dom.push_back(x);
      img.push_back(y);
    }
    auto tag = "case " + std::to_string(i) + ": ";
    if (!wo::is_saturated(a, dom) || !wo::is_saturated(b, img)) return {false, tag + "not saturated"};
    if (f.size() != a.size() && f.size() != b.size()) return {false, tag + "not maximal"};
    for (const auto& [x, y] : f)
      for (const auto& [x2, y2] : f)
        if ((a.rank_of(x) < a.rank_of(x2)) != (b.rank_of(y) < b.rank_of(y2))) return {false, tag + "not order-preserving"};

    // top-down: the value at the highest element of the domain, unfolded
    // downward through the same recursion condition min[b - im f]
    std::map<std::size_t, std::string> memo;
    std::function<std::string(std::size_t)> at = [&](std::size_t rank) -> std::string {
      if (auto it = memo.find(rank); it != memo.end()) return it->second;
      std::set<std::string> used;
      for (std::size_t r = 0; r < rank; ++r) used.insert(at(r));
      std::string v;
      for (const auto& y : b.ranked())
        if (!used.count(y)) {
          v = y;
          break;
        }
      return memo[rank] = v;
    };
    for (std::size_t r = f.size(); r-- > 0;)
      if (at(r) != f.at(a.at_rank(r))) return {false, tag + "bottom-up and top-down differ"};
  }
  return {true, "1000 pairs of orders"};
}

// ---------------------------------------------------------------- 9
Outcome cardinal_laws() {
  std::mt19937_64 rng(0xbe7);
  auto random_card = [&] {
    if (rng() % 3 == 0) return cardinal::SymCardinal::fin(cardinal::Natural(rng() % 100000));
    return cardinal::beth(random_ordinal(rng));
  };
  auto card_max = [](const cardinal::SymCardinal& x, const cardinal::SymCardinal& y) {
    return cardinal::card_cmp(x, y) < 0 ? y : x;
  };
  for (int i = 0; i < 10000; ++i) {
    auto x = random_card(), y = random_card();
    auto tag = "case " + std::to_string(i) + " (" + cardinal::to_string(x) + ", " + cardinal::to_string(y) + "): ";
    if (!x.is_finite() || !y.is_finite()) {
      if (!(cardinal::card_product(x, y) == card_max(x, y))) return {false, tag + "product max rule"};
      if (!(cardinal::card_union(x, y) == card_max(x, y))) return {false, tag + "union max rule"};
    }
    auto a = random_ordinal(rng), b = random_ordinal(rng);
    if (cardinal::card_cmp(cardinal::beth(a), cardinal::beth(b)) != ordinal::cmp(a, b)) return {false, tag + "Beth not monotone"};
    bool expect_limit = !x.is_finite() && (x.beth_index().is_zero() || limit_by_notation(x.beth_index()));
    if (cardinal::is_strong_limit(x) != expect_limit) return {false, tag + "is_strong_limit"};
  }
  return {true, "10000 random notations"};
}

// ---------------------------------------------------------------- 10
Outcome rank_law() {
  std::mt19937_64 rng(0x1b);
  std::size_t rejected = 0;
  for (int i = 0; i < 1000; ++i) {
    auto a = random_ordinal(rng);
    auto tag = "case " + ordinal::to_string(a) + ": ";
    bool bad = a.is_zero() || limit_by_notation(a);
    try {
      auto p = cardinal::rank_law_1b(a);
      if (bad) return {false, tag + "accepted"};
      if (!(ordinal::succ(p) == a)) return {false, tag + "not the predecessor"};
    } catch (const DomainError&) {
      if (!bad) return {false, tag + "rejected a successor"};
      ++rejected;
    }
    auto r = cardinal::rank_of_cardinal(cardinal::beth(a));
    if (!(r == ordinal::succ(a))) return {false, tag + "rank_of_cardinal(Beth(a)) != succ(a)"};
    if (!(cardinal::rank_law_1b(r) == a)) return {false, tag + "rank_law_1b(succ(a)) != a"};
  }
  return {true, "1000 notations, " + std::to_string(rejected) + " zero/limit rejected"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0 = untimed
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "ackermann order isomorphism", 5, ackermann_order},
      {2, "collapse round trip", 10, collapse_round_trip},
      {3, "collapse uniqueness", 0, collapse_uniqueness},
      {4, "collapse injectivity <=> extensionality", 0, collapse_injectivity},
      {5, "zfc matrix", 30, zfc_matrix},
      {6, "finite pairing bijection", 0, pair_bijection},
      {7, "cantor-bernstein", 0, cantor_bernstein_random},
      {8, "recursion engine", 0, recursion_engine},
      {9, "cardinal laws", 0, cardinal_laws},
      {10, "rank law", 0, rank_law},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.ok = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
    }
    std::printf("%s  %2d  %-42s %8.3f s  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    failed += !o.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
