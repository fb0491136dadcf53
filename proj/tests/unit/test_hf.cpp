#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "relaxed/error.hpp"
#include "relaxed/hf.hpp"

using namespace relaxed;
using namespace relaxed::hf;

namespace {

std::vector<std::size_t> bits(std::uint64_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i)
    if (n >> i & 1) out.push_back(i);
  return out;
}

// Finite subsets of N listed in increasing order, where s < t iff the
// largest element of the symmetric difference lies in t. Built by the
// recursion: subsets of {0..k} = subsets of {0..k-1}, then each of those
// with k added.
std::vector<std::set<std::size_t>> subsets_by_symmetric_difference(std::size_t k) {
  std::vector<std::set<std::size_t>> out{{}};
  for (std::size_t top = 0; top < k; ++top) {
    std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      auto s = out[i];
      s.insert(top);
      out.push_back(s);
    }
  }
  return out;
}

bool symdiff_less(const std::set<std::size_t>& s, const std::set<std::size_t>& t) {
  std::vector<std::size_t> d;
  std::set_symmetric_difference(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(d));
  return !d.empty() && t.count(d.back());
}

}  // namespace

TEST_CASE("mem") {
  for (std::size_t m = 0; m < 20; ++m) CHECK_FALSE(mem(0, m));
  CHECK(mem(3, 0));
  CHECK(mem(3, 1));
  CHECK_FALSE(mem(3, 2));
  for (std::size_t k = 0; k < 70; ++k) {
    HFCode s(Natural(1) << k);
    CHECK(members(s) == std::vector<std::size_t>{k});
    CHECK(s == singleton(k));
  }
}

TEST_CASE("the coding is the symmetric-difference order isomorphism") {
  auto listed = subsets_by_symmetric_difference(10);
  for (std::size_t n = 0; n + 1 < listed.size(); ++n) REQUIRE(symdiff_less(listed[n], listed[n + 1]));
  for (std::size_t n = 0; n < listed.size(); ++n) {
    auto ms = members(n);
    REQUIRE(std::set<std::size_t>(ms.begin(), ms.end()) == listed[n]);
  }
}

TEST_CASE("decode and encode") {
  CHECK(decode(0) == "{}");
  CHECK(decode(3) == "{{},{{}}}");
  CHECK(encode("{{}}") == HFCode(1));
  CHECK(encode("{{},{{}}}") == HFCode(3));
  CHECK(encode(" { { } , { {} } } ") == HFCode(3));
  auto dup = encode_with_notes("{{},{}}");
  CHECK(dup.code == HFCode(1));
  CHECK(dup.duplicates == 1);
  for (const char* bad : {"", "{", "{}}", "{{}", "{,}", "{{},}", "x", "{}{}"}) {
    INFO(bad);
    CHECK_THROWS_AS(encode(bad), ParseError);
  }
  for (std::uint64_t n = 0; n < 4096; ++n) REQUIRE(encode(decode(n)) == HFCode(n));
}

TEST_CASE("parse_code and hex") {
  CHECK(parse_code("255") == HFCode(255));
  CHECK(parse_code("0xff") == HFCode(255));
  CHECK(parse_code("0XFF") == HFCode(255));
  CHECK(parse_code("010") == HFCode(10));
  CHECK(to_hex(255) == "0xff");
  CHECK(to_hex(0) == "0x0");
  CHECK(parse_code("0x10000000000000000000") == HFCode(Natural(1) << 76));
  for (const char* bad : {"", "-1", "0x", "12a", "0xg"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_code(bad), ParseError);
  }
}

TEST_CASE("union axiom") {
  CHECK(set_union_axiom(0) == HFCode(0));
  CHECK(set_union_axiom(2) == HFCode(1));
  CHECK(set_union_axiom(3) == HFCode(1));
  for (std::uint64_t a = 0; a < 512; ++a) {
    std::uint64_t want = 0;
    for (auto m : bits(a))
      for (auto x : bits(m)) want |= 1ull << x;
    REQUIRE(set_union_axiom(a) == HFCode(want));
    // union of the singleton of the union is the union itself
    REQUIRE(set_union_axiom(singleton(set_union_axiom(a))) == set_union_axiom(a));
  }
}

TEST_CASE("powerset") {
  CHECK(powerset(0) == HFCode(1));
  CHECK(powerset(1) == HFCode(3));
  CHECK(powerset(3) == HFCode(15));
  for (std::uint64_t a = 0; a < 256; ++a) {
    auto p = powerset(a);
    REQUIRE(p.popcount() == (std::size_t{1} << bits(a).size()));
    for (auto s : members(p)) REQUIRE((s & ~a) == 0);
  }
  CHECK_THROWS_AS(powerset(HFCode((Natural(1) << 21) - 1)), ResourceError);
  CHECK_THROWS_WITH_AS(powerset(15, 3), doctest::Contains("4"), ResourceError);
  CHECK_THROWS_AS(powerset(HFCode(Natural(1) << 40)), ResourceError);
}

TEST_CASE("separation") {
  CHECK(separation(13, [](const HFCode&) { return true; }) == HFCode(13));
  CHECK(separation(13, [](const HFCode&) { return false; }) == HFCode(0));
  auto even = [](const HFCode& m) { return m.value() % 2 == 0; };
  CHECK(separation(7, even) == HFCode(5));
  for (std::uint64_t a = 0; a < 1024; ++a) {
    auto s = separation(a, even);
    REQUIRE(HFCode(s.value() & a) == s);
  }
}

TEST_CASE("replacement") {
  CHECK(replacement(27, [](const HFCode& m) { return m; }) == HFCode(27));
  CHECK(replacement(3, [](const HFCode&) { return HFCode(0); }) == HFCode(1));
  CHECK(replacement(5, [](const HFCode& m) { return singleton(m); }) == HFCode(18));
  CHECK(replacement(0, [](const HFCode&) { return HFCode(9); }) == HFCode(0));
}

TEST_CASE("foundation_witness") {
  CHECK(foundation_witness(1) == HFCode(0));
  CHECK(foundation_witness(2) == HFCode(1));
  CHECK_THROWS_AS(foundation_witness(0), DomainError);
  for (std::uint64_t a = 1; a < (1u << 16); ++a) {
    auto w = foundation_witness(a);
    REQUIRE(mem(a, w));
    for (auto m : members(w)) REQUIRE_FALSE(mem(a, m));
    // least such member
    for (auto m : bits(a)) {
      if (m >= w.as_index()) break;
      REQUIRE((m & a) != 0);
    }
  }
}

TEST_CASE("choice_fn") {
  CHECK(choice_fn(0) == HFCode(0));
  CHECK(choice_fn(1) == HFCode(1));
  CHECK(choice_fn(7) == HFCode(3));
  for (std::uint64_t a = 0; a < 4096; ++a) REQUIRE_FALSE(mem(a, choice_fn(a)));
}

TEST_CASE("transitive_closure") {
  CHECK(transitive_closure(0) == HFCode(0));
  CHECK(transitive_closure(2) == HFCode(3));
  for (std::uint64_t a = 0; a < 4096; ++a) {
    auto t = transitive_closure(a);
    REQUIRE(HFCode(t.value() & a) == HFCode(a));
    for (auto m : members(t))
      for (auto mm : members(m)) REQUIRE(mem(t, mm));
  }
}

TEST_CASE("stage") {
  CHECK(stage(0) == 0);
  CHECK(stage(1) == 1);
  CHECK(stage(HFCode(1ull << 15)) == 1 + stage(15));
  // V_k sizes: 0, 1, 2, 4, 16, 65536
  std::vector<std::size_t> counts(6, 0);
  for (std::uint64_t n = 0; n < (1u << 16); ++n) {
    auto s = stage(n);
    REQUIRE(s <= 5);
    for (std::size_t k = s + 1; k <= 5; ++k) ++counts[k];
  }
  CHECK(counts == std::vector<std::size_t>{0, 1, 2, 4, 16, 65536});
  CHECK(stage(HFCode(Natural(1) << 65536)) == 6);
}

TEST_CASE("members of large codes") {
  HFCode big(Natural(1) << 1000 | Natural(5));
  CHECK(members(big) == std::vector<std::size_t>{0, 2, 1000});
  CHECK(from_members({1000, 2, 0}) == big);
  CHECK(big.bit_length() == 1001);
  CHECK_THROWS_AS(HFCode(Natural(1) << 30).as_index(), ResourceError);
}
