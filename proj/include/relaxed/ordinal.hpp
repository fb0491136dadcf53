#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace relaxed::wo {
class FinWellOrder;
}

namespace relaxed::ordinal {

struct Term;

// Ordinal below epsilon_0 in Cantor normal form:
//   w^e1*c1 + w^e2*c2 + ...   with e1 > e2 > ...  and every ci >= 1.
// The empty term list is 0. Construction through `from_terms` validates the
// normal form, so equal ordinals are structurally identical.
class Ordinal {
 public:
  Ordinal() = default;  // zero
  static Ordinal finite(std::uint64_t n);
  static Ordinal omega();
  // w^exponent * coefficient
  static Ordinal power(Ordinal exponent, std::uint64_t coefficient = 1);
  // Throws ValidationError unless exponents strictly decrease and
  // coefficients are positive.
  static Ordinal from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept;
  bool is_finite() const noexcept;
  // Value of a finite ordinal; nullopt for infinite ones.
  std::optional<std::uint64_t> finite_value() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<Term> terms_;
};

struct Term {
  Ordinal exponent;
  std::uint64_t coefficient = 1;

  friend bool operator==(const Term&, const Term&) = default;
};

inline bool Ordinal::is_zero() const noexcept { return terms_.empty(); }

enum class Cofinality { zero, one, omega };

std::strong_ordering cmp(const Ordinal& a, const Ordinal& b);
Ordinal succ(const Ordinal& a);
bool is_limit(const Ordinal& a);
bool is_successor(const Ordinal& a);
// Predecessor of a successor ordinal; DomainError for 0 and limits.
Ordinal pred(const Ordinal& a);

// Least upper bound of a finite nonempty family, i.e. its maximum.
Ordinal sup(std::span<const Ordinal> family);
Cofinality cofinality(const Ordinal& a);

struct PairCanonical {
  Ordinal first;
  Ordinal second;
};

// Canonical order on pairs: compare max[first, second]; on ties, pairs
// (<c, c) come before (c, <=c), and each block is ordered lexicographically.
std::strong_ordering cmp_canonical(const PairCanonical& p, const PairCanonical& q);

// Position of (a, b) in the canonical order on N x N. With m = max(a, b):
//   m^2 + a        if b = m > a
//   m^2 + m + b    if a = m >= b
std::uint64_t pair_index(std::uint64_t a, std::uint64_t b);
std::pair<std::uint64_t, std::uint64_t> unpair(std::uint64_t n);
// Overload on notations; DomainError ("finite fragment only") for infinite input.
std::uint64_t pair_index(const Ordinal& a, const Ordinal& b);

// Order type of a finite well-order, and the canonical embedding sending
// each element x to the order type of {y | y < x}.
Ordinal classify_finite(const wo::FinWellOrder& w);
std::vector<std::pair<std::string, Ordinal>> canonical_embedding(const wo::FinWellOrder& w);

// Text syntax: `0`, decimal naturals, `w`, and terms `w^<exp>*<k>` joined by
// `+` with strictly decreasing exponents. Exponents are a natural, `w`,
// `w^<exp>` or a parenthesized ordinal, e.g. `w^(w+1)*2+w^2*3+w+1`.
// Non-canonical input throws ParseError with the offending position.
Ordinal parse(std::string_view text);
std::string to_string(const Ordinal& a);
std::string to_string(Cofinality c);

}  // namespace relaxed::ordinal
