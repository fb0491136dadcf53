#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relaxed/exec.hpp"
#include "relaxed/pairing.hpp"

// Audit of a finite membership structure (Sigma, N) against the ZFC axioms
// in prefix-reversed form: N[a, b] means "b is a member of a".
namespace relaxed::zfc {

using pairing::FinDomain;
using pairing::FinPairing;

// Rows are stored sparsely (sorted member indices) so that carriers with
// tens of thousands of elements stay cheap; `from_pairing` / `to_pairing`
// convert to and from the dense pairing form.
struct ModelDesc {
  FinDomain sigma;
  std::vector<std::vector<std::uint32_t>> rows;
  // Elements the outer "for every a" of each axiom ranges over. Empty means
  // all of sigma. Existential witnesses always range over all of sigma.
  std::vector<std::uint32_t> scope;

  static ModelDesc from_pairing(const FinPairing& n);
  FinPairing to_pairing() const;
  std::size_t size() const noexcept { return sigma.size(); }
  bool member(std::size_t a, std::size_t b) const;
};

// The V_k truncation: codes of stage < k with bit membership. Codes are their
// own indices. When `scope_below_stage` is set, only elements of that stage
// bound are quantified over. k <= 5 (V_6 has 2^65536 elements).
ModelDesc vk_model(std::size_t k, std::optional<std::size_t> scope_below_stage = std::nullopt,
                   Exec exec = Exec::parallel);

enum class Axiom { foundation, sets_are_sets, extensionality, union_, powerset, infinity, choice, separation, replacement };
inline constexpr Axiom kAllAxioms[] = {Axiom::foundation, Axiom::sets_are_sets, Axiom::extensionality,
                                       Axiom::union_,     Axiom::powerset,      Axiom::infinity,
                                       Axiom::choice,     Axiom::separation,    Axiom::replacement};

enum class Verdict { pass, fail, not_applicable };

struct Witness {
  std::vector<std::string> elements;                          // offending element(s)
  std::vector<std::pair<std::string, std::string>> mapping;   // choice or replacement function
  std::vector<std::string> subset;                            // separation subset / missing set
  std::string detail;
};

struct AxiomReport {
  Axiom axiom = Axiom::foundation;
  Verdict verdict = Verdict::pass;
  // False when the check sampled or skipped part of the search space.
  bool exhaustive = true;
  std::size_t failures = 0;  // number of quantified elements that fail
  std::optional<Witness> witness;
  std::string note;
};

struct CheckOptions {
  // Compare rows directly (strict) or through mutual inclusion read off the
  // rows themselves (lenient). The two agree on finite models.
  bool strict_extensionality = true;
  std::size_t separation_row_bound = 12;
  // Replacement enumerates all maps row(a) -> sigma while there are at most
  // this many, and samples beyond.
  std::size_t replacement_exhaustive_bound = 256;
  std::size_t replacement_samples = 256;
  std::uint64_t seed = 0x5eedULL;
  Exec exec = Exec::parallel;
};

AxiomReport check_axiom(const ModelDesc& m, Axiom axiom, const CheckOptions& options = {});
// Every axiom, in declaration order. Failures are reported, never thrown.
std::vector<AxiomReport> check_all(const ModelDesc& m, const CheckOptions& options = {});

std::string to_string(Axiom a);
std::string to_string(Verdict v);
// "pass", "pass (sampled)", "pass (bounded)", "fail", ...
std::string verdict_text(const AxiomReport& r);

}  // namespace relaxed::zfc
