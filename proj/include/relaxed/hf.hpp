#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Hereditarily finite sets as natural-number codes: m is a member of n iff
// bit m of n is set. Every natural is a valid code and the map
// n -> {m | bit m of n} is a bijection from N onto finite subsets of N.
namespace relaxed::hf {

using Natural = boost::multiprecision::cpp_int;

// Largest bit index a constructed code may set. Codes beyond this would take
// more than 2 MiB each.
inline constexpr std::size_t kMaxBitIndex = std::size_t{1} << 24;
inline constexpr std::size_t kDefaultPowersetBound = 20;

class HFCode {
 public:
  HFCode() = default;
  HFCode(std::uint64_t n) : value_(n) {}  // NOLINT: codes read naturally as integers
  explicit HFCode(Natural n);

  const Natural& value() const noexcept { return value_; }
  bool is_empty() const noexcept { return value_.is_zero(); }
  std::size_t popcount() const;
  // Number of significant bits; 0 for the empty set.
  std::size_t bit_length() const;
  // Value as a bit index; ResourceError when above kMaxBitIndex.
  std::size_t as_index() const;
  std::string str() const { return value_.str(); }

  friend bool operator==(const HFCode&, const HFCode&) = default;
  friend std::strong_ordering operator<=>(const HFCode& a, const HFCode& b);

 private:
  Natural value_;
};

bool mem(const HFCode& n, const HFCode& m);
// Members in increasing code order. Member codes are bit indices of n.
std::vector<std::size_t> members(const HFCode& n);
HFCode from_members(const std::vector<std::size_t>& ms);
HFCode singleton(const HFCode& m);

// Fully expanded braces notation, members in increasing code order.
std::string decode(const HFCode& n);

struct Encoded {
  HFCode code;
  std::size_t duplicates = 0;  // sibling members collapsed during normalization
};
// Whitespace between tokens is ignored. ParseError with position on malformed
// input; duplicate siblings are collapsed and counted, not rejected.
Encoded encode_with_notes(std::string_view text);
HFCode encode(std::string_view text);

// Decimal or 0x-hexadecimal code.
HFCode parse_code(std::string_view text);
std::string to_hex(const HFCode& n);

HFCode set_union_axiom(const HFCode& a);
// ResourceError when popcount(a) exceeds `popcount_bound`.
HFCode powerset(const HFCode& a, std::size_t popcount_bound = kDefaultPowersetBound);
HFCode separation(const HFCode& a, const std::function<bool(const HFCode&)>& p);
HFCode replacement(const HFCode& a, const std::function<HFCode(const HFCode&)>& f);
// Least member b with b & a = 0. DomainError for the empty set.
HFCode foundation_witness(const HFCode& a);
// Least m that is NOT a member of a.
HFCode choice_fn(const HFCode& a);
HFCode transitive_closure(const HFCode& a);
// 0 for the empty set, otherwise 1 + max stage of members.
std::size_t stage(const HFCode& a);

}  // namespace relaxed::hf
