#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "relaxed/ordinal.hpp"

namespace relaxed::cardinal {

using Natural = boost::multiprecision::cpp_int;
using ordinal::Ordinal;

// Either a finite count or a Beth-tower value Beth(index). Every finite value
// lies below every Beth value; Beth is strictly increasing in its index.
// Cardinals strictly between Beth values are not representable.
class SymCardinal {
 public:
  enum class Tag { fin, beth };

  static SymCardinal fin(Natural n);
  static SymCardinal beth(Ordinal index);

  Tag tag() const noexcept { return tag_; }
  bool is_finite() const noexcept { return tag_ == Tag::fin; }
  const Natural& fin_value() const;    // DomainError on Beth values
  const Ordinal& beth_index() const;   // DomainError on finite values

  friend bool operator==(const SymCardinal&, const SymCardinal&) = default;

 private:
  SymCardinal() = default;
  Tag tag_ = Tag::fin;
  Natural fin_;
  Ordinal index_;
};

// Element of the universal model seen only through its Beth-interval level.
// Levels are never limits.
struct RankedElement {
  Ordinal level;
  std::string witness;
};

std::strong_ordering card_cmp(const SymCardinal& a, const SymCardinal& b);

// Finite inputs: a*b. Otherwise the larger argument.
SymCardinal card_product(const SymCardinal& a, const SymCardinal& b);
// Finite inputs: a+b, the disjoint-union value. Otherwise the larger argument.
SymCardinal card_union(const SymCardinal& a, const SymCardinal& b);

SymCardinal beth(const Ordinal& index);
// Beth(0) and Beth(limit); finite cardinals are not strong limits here.
bool is_strong_limit(const SymCardinal& c);
// Least index a with Beth(a) > c: 0 for finite c, succ(index) for Beth(index).
Ordinal rank_of_cardinal(const SymCardinal& c);
// cf[Beth(b)], which equals cf[b].
ordinal::Cofinality cofinality_transfer(const Ordinal& b);
// Level of the members of an element at level x_level (x outside N): the
// predecessor. DomainError for 0 and limit levels, since element ranks are
// never limits.
Ordinal rank_law_1b(const Ordinal& x_level);

// `fin:<n>` or `beth:<ordinal>`.
SymCardinal parse(std::string_view text);
std::string to_string(const SymCardinal& c);

}  // namespace relaxed::cardinal
