#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "relaxed/exec.hpp"
#include "relaxed/hf.hpp"
#include "relaxed/pairing.hpp"

// Finite well-founded pairings and their collapse into (N, bit membership).
// Edge convention: lambda[a, b] = yes means "b is a member of a".
namespace relaxed::wf {

using pairing::FinDomain;
using pairing::FinPairing;

class WFGraph {
 public:
  WFGraph() = default;
  // lambda must be a pairing on vertices x vertices. Cycles are accepted here
  // and reported by is_well_founded / rejected by collapse.
  explicit WFGraph(FinPairing lambda);

  const FinDomain& vertices() const noexcept { return lambda_.left(); }
  const FinPairing& lambda() const noexcept { return lambda_; }
  std::size_t size() const noexcept { return lambda_.left().size(); }
  std::vector<std::size_t> children(std::size_t v) const;

 private:
  FinPairing lambda_;
};

struct Verdict {
  bool holds = true;
  std::vector<std::string> witness;  // empty when holds
};

FinPairing transitive_closure_rel(const WFGraph& g, Exec exec = Exec::parallel);
// Acyclicity of the closure; the witness is a cycle listed in edge order.
Verdict is_well_founded(const WFGraph& g);
// Distinct vertices have distinct member sets; the witness is a pair with
// identical rows.
Verdict is_extensional(const WFGraph& g);

// Vertices ordered so that every child precedes its parents. ValidationError
// carrying the cycle when g is not well-founded.
std::vector<std::size_t> children_first_order(const WFGraph& g);

// Class id per vertex: equal ids iff the vertices collapse to the same set
// (the bisimulation quotient). Works at any depth, unlike codes.
std::vector<std::size_t> collapse_classes(const WFGraph& g);

// The unique morphism into (N, bit membership): code(v) has bit set
// {code(c) | c child of v}. ValidationError with the cycle when g is not
// well-founded; ResourceError when a code exceeds hf::kMaxBitIndex as a
// member index.
std::vector<hf::HFCode> collapse(const WFGraph& g);

// tau[f(a), x] <=> exists b with f(b) = x and lambda[a, b], checked for every
// a and every x among the members of f(a) and the image values. Witness is
// the first failing (a, x).
Verdict is_morphism(const WFGraph& g, const std::vector<hf::HFCode>& f);

// Vertices: the codes in TC({n}) as decimal labels, ascending. Edges: mem.
WFGraph membership_graph(const hf::HFCode& n);

// Text format, one vertex per line:  `name: child1 child2 ...`. Children
// that never appear as a head become vertices with no members. Blank lines
// and lines starting with '#' are skipped.
WFGraph parse_graph_text(std::string_view text);

}  // namespace relaxed::wf
