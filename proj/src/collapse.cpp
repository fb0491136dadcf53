#include "relaxed/collapse.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "relaxed/error.hpp"
#include "relaxed/kernels.hpp"

namespace relaxed::wf {

WFGraph::WFGraph(FinPairing lambda) : lambda_(std::move(lambda)) {
  if (!(lambda_.left() == lambda_.right())) throw ValidationError("graph pairing must be on vertices x vertices", {});
}

std::vector<std::size_t> WFGraph::children(std::size_t v) const {
  std::vector<std::size_t> out;
  const auto& row = lambda_.row(v);
  for (auto c = row.find_first(); c != pairing::Subset::npos; c = row.find_next(c)) out.push_back(c);
  return out;
}

FinPairing transitive_closure_rel(const WFGraph& g, Exec exec) {
  return FinPairing(g.vertices(), g.vertices(), kernels::reachability(g.lambda().rows(), exec));
}

namespace {

// Iterative DFS producing a post-order (children first), or a cycle.
struct Traversal {
  std::vector<std::size_t> order;
  std::vector<std::size_t> cycle;
};

Traversal traverse(const WFGraph& g) {
  enum class Mark : unsigned char { fresh, open, done };
  const std::size_t n = g.size();
  std::vector<Mark> mark(n, Mark::fresh);
  Traversal out;
  out.order.reserve(n);
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // (vertex, next child position)
  std::vector<std::vector<std::size_t>> kids(n);
  for (std::size_t v = 0; v < n; ++v) kids[v] = g.children(v);

  for (std::size_t root = 0; root < n; ++root) {
    if (mark[root] != Mark::fresh) continue;
    stack.emplace_back(root, 0);
    mark[root] = Mark::open;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < kids[v].size()) {
        const std::size_t c = kids[v][next++];
        if (mark[c] == Mark::open) {
          auto it = std::find_if(stack.begin(), stack.end(), [c](const auto& e) { return e.first == c; });
          for (; it != stack.end(); ++it) out.cycle.push_back(it->first);
          return out;
        }
        if (mark[c] == Mark::fresh) {
          mark[c] = Mark::open;
          stack.emplace_back(c, 0);
        }
      } else {
        mark[v] = Mark::done;
        out.order.push_back(v);
        stack.pop_back();
      }
    }
  }
  return out;
}

std::vector<std::string> labels(const WFGraph& g, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(g.vertices().label(i));
  return out;
}

}  // namespace

Verdict is_well_founded(const WFGraph& g) {
  auto t = traverse(g);
  if (t.cycle.empty()) return {};
  return {false, labels(g, t.cycle)};
}

Verdict is_extensional(const WFGraph& g) {
  std::map<pairing::Subset, std::size_t> seen;
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto [it, fresh] = seen.emplace(g.lambda().row(v), v);
    if (!fresh) return {false, {g.vertices().label(it->second), g.vertices().label(v)}};
  }
  return {};
}

std::vector<std::size_t> children_first_order(const WFGraph& g) {
  auto t = traverse(g);
  if (!t.cycle.empty()) throw ValidationError("pairing is not well-founded (cycle)", labels(g, t.cycle));
  return t.order;
}

std::vector<std::size_t> collapse_classes(const WFGraph& g) {
  const auto order = children_first_order(g);
  std::vector<std::size_t> cls(g.size());
  std::map<std::vector<std::size_t>, std::size_t> ids;
  for (auto v : order) {
    std::vector<std::size_t> key;
    for (auto c : g.children(v)) key.push_back(cls[c]);
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    cls[v] = ids.emplace(std::move(key), ids.size()).first->second;
  }
  return cls;
}

std::vector<hf::HFCode> collapse(const WFGraph& g) {
  const auto order = children_first_order(g);
  std::vector<hf::HFCode> code(g.size());
  for (auto v : order) {
    std::vector<std::size_t> ms;
    for (auto c : g.children(v)) {
      if (code[c].value() > hf::kMaxBitIndex) {
        throw ResourceError("collapse: code of '" + g.vertices().label(c) +
                            "' is too large to be a member of '" + g.vertices().label(v) + "'");
      }
      ms.push_back(code[c].value().convert_to<std::size_t>());
    }
    code[v] = hf::from_members(ms);
  }
  return code;
}

Verdict is_morphism(const WFGraph& g, const std::vector<hf::HFCode>& f) {
  if (f.size() != g.size()) throw ValidationError("morphism must be total on vertices", {});
  std::set<hf::HFCode> image(f.begin(), f.end());
  for (std::size_t a = 0; a < g.size(); ++a) {
    std::set<hf::HFCode> candidates = image;
    for (auto m : hf::members(f[a])) candidates.insert(hf::HFCode(m));
    const auto kids = g.children(a);
    for (const auto& x : candidates) {
      const bool lhs = hf::mem(f[a], x);
      const bool rhs = std::any_of(kids.begin(), kids.end(), [&](std::size_t b) { return f[b] == x; });
      if (lhs != rhs) return {false, {g.vertices().label(a), x.str()}};
    }
  }
  return {};
}

WFGraph membership_graph(const hf::HFCode& n) {
  auto tc = hf::members(hf::transitive_closure(n));
  std::vector<hf::HFCode> codes;
  for (auto m : tc) codes.emplace_back(m);
  if (!std::binary_search(codes.begin(), codes.end(), n)) {
    codes.push_back(n);
    std::sort(codes.begin(), codes.end());
  }
  std::vector<std::string> names;
  for (const auto& c : codes) names.push_back(c.str());
  FinDomain d(std::move(names));
  FinPairing lambda(d, d);
  for (std::size_t a = 0; a < codes.size(); ++a) {
    for (std::size_t b = 0; b < codes.size(); ++b) {
      if (hf::mem(codes[a], codes[b])) lambda.set(a, b);
    }
  }
  return WFGraph(std::move(lambda));
}

WFGraph parse_graph_text(std::string_view text) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::string>> edges;
  std::set<std::string> heads;
  auto note = [&](const std::string& name) {
    if (edges.emplace(name, std::vector<std::string>{}).second) order.push_back(name);
  };
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    auto line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    const std::string line(text.substr(line_start, line_end - line_start));
    const std::size_t offset = line_start;
    line_start = line_end + 1;

    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'name: children...'", offset + first);
    std::istringstream head_stream(line.substr(0, colon));
    std::string head, extra;
    head_stream >> head;
    if (head.empty() || (head_stream >> extra)) throw ParseError("vertex name must be a single token", offset + first);
    if (!heads.insert(head).second) throw ParseError("vertex '" + head + "' listed twice", offset + first);
    note(head);
    std::istringstream kids(line.substr(colon + 1));
    for (std::string child; kids >> child;) {
      note(child);
      edges[head].push_back(child);
    }
  }
  FinDomain d(order);
  FinPairing lambda(d, d);
  for (const auto& [head, kids] : edges) {
    for (const auto& k : kids) lambda.set(d.index_of(head), d.index_of(k));
  }
  return WFGraph(std::move(lambda));
}

}  // namespace relaxed::wf
