#include "relaxed/hf.hpp"

#include <algorithm>
#include <unordered_map>

#include "relaxed/error.hpp"

namespace relaxed::hf {

namespace mp = boost::multiprecision;

HFCode::HFCode(Natural n) : value_(std::move(n)) {
  if (value_ < 0) throw DomainError("set codes are natural numbers");
}

std::size_t HFCode::popcount() const {
  std::size_t count = 0;
  if (value_.is_zero()) return 0;
  // Limb-wise popcount.
  for (auto it = value_.backend().limbs(), end = it + value_.backend().size(); it != end; ++it) {
    count += static_cast<std::size_t>(__builtin_popcountll(*it));
  }
  return count;
}

std::size_t HFCode::bit_length() const { return value_.is_zero() ? 0 : mp::msb(value_) + 1; }

std::size_t HFCode::as_index() const {
  if (value_ > kMaxBitIndex) throw ResourceError("set code " + value_.str() + " is too large to be a member index");
  return value_.convert_to<std::size_t>();
}

std::strong_ordering operator<=>(const HFCode& a, const HFCode& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool mem(const HFCode& n, const HFCode& m) {
  if (m.value() >= n.bit_length()) return false;
  return mp::bit_test(n.value(), m.value().convert_to<unsigned>());
}

std::vector<std::size_t> members(const HFCode& n) {
  std::vector<std::size_t> out;
  if (n.is_empty()) return out;
  const auto& v = n.value();
  const std::size_t limb_bits = sizeof(mp::limb_type) * 8;
  const auto* limbs = v.backend().limbs();
  for (std::size_t i = 0; i < v.backend().size(); ++i) {
    for (auto bits = static_cast<unsigned long long>(limbs[i]); bits != 0; bits &= bits - 1) {
      out.push_back(i * limb_bits + static_cast<std::size_t>(__builtin_ctzll(bits)));
    }
  }
  return out;
}

HFCode from_members(const std::vector<std::size_t>& ms) {
  Natural v = 0;
  for (auto m : ms) {
    if (m > kMaxBitIndex) throw ResourceError("member code " + std::to_string(m) + " exceeds the bit-index guard");
    mp::bit_set(v, static_cast<unsigned>(m));
  }
  return HFCode(std::move(v));
}

HFCode singleton(const HFCode& m) { return from_members({m.as_index()}); }

namespace {

void decode_into(std::size_t n, std::string& out) {
  out += '{';
  bool first = true;
  for (std::size_t bits = n, i = 0; bits != 0; bits >>= 1, ++i) {
    if (!(bits & 1u)) continue;
    if (!first) out += ',';
    first = false;
    decode_into(i, out);
  }
  out += '}';
}

class BracesParser {
 public:
  explicit BracesParser(std::string_view text) : text_(text) {}

  Encoded run() {
    skip_space();
    Encoded out;
    out.code = parse_set(out.duplicates);
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing characters after set", pos_);
    return out;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n')) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  HFCode parse_set(std::size_t& duplicates) {
    expect('{');
    skip_space();
    std::vector<std::size_t> ms;
    if (pos_ < text_.size() && text_[pos_] == '}') {
      ++pos_;
      return HFCode{};
    }
    while (true) {
      const std::size_t member_start = pos_;
      HFCode m = parse_set(duplicates);
      if (m.value() > kMaxBitIndex) throw ParseError("member too large to encode", member_start);
      ms.push_back(m.value().convert_to<std::size_t>());
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      expect('}');
      break;
    }
    std::sort(ms.begin(), ms.end());
    const auto unique_end = std::unique(ms.begin(), ms.end());
    duplicates += static_cast<std::size_t>(ms.end() - unique_end);
    ms.erase(unique_end, ms.end());
    return from_members(ms);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string decode(const HFCode& n) {
  std::string out = "{";
  bool first = true;
  for (auto m : members(n)) {
    if (!first) out += ',';
    first = false;
    decode_into(m, out);
  }
  return out + "}";
}

Encoded encode_with_notes(std::string_view text) { return BracesParser(text).run(); }

HFCode encode(std::string_view text) { return encode_with_notes(text).code; }

HFCode parse_code(std::string_view text) {
  if (text.empty()) throw ParseError("empty code", 0);
  if (text.starts_with("0x") || text.starts_with("0X")) {
    if (text.size() == 2) throw ParseError("expected hexadecimal digits", 2);
    for (std::size_t i = 2; i < text.size(); ++i) {
      if (!std::isxdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected a hexadecimal digit", i);
    }
    return HFCode(Natural(std::string(text)));
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw ParseError("expected a decimal digit", i);
  }
  // cpp_int reads a leading 0 as octal.
  const auto first = text.find_first_not_of('0');
  if (first == std::string_view::npos) return HFCode{};
  return HFCode(Natural(std::string(text.substr(first))));
}

std::string to_hex(const HFCode& n) {
  if (n.is_empty()) return "0x0";
  std::string digits = n.value().str(0, std::ios_base::hex);
  std::transform(digits.begin(), digits.end(), digits.begin(), [](unsigned char c) { return std::tolower(c); });
  return "0x" + digits;
}

HFCode set_union_axiom(const HFCode& a) {
  Natural out = 0;
  for (auto m : members(a)) out |= Natural(m);
  return HFCode(std::move(out));
}

HFCode powerset(const HFCode& a, std::size_t popcount_bound) {
  const auto ms = members(a);
  if (ms.size() > popcount_bound) {
    throw ResourceError("powerset would have 2^" + std::to_string(ms.size()) + " members (bound: popcount <= " +
                        std::to_string(popcount_bound) + ")");
  }
  if (a.value() > kMaxBitIndex) throw ResourceError("powerset code would exceed the bit-index guard");
  Natural out = 0;
  const std::size_t count = std::size_t{1} << ms.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::size_t subset = 0;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (mask >> i & 1u) subset |= std::size_t{1} << ms[i];
    }
    mp::bit_set(out, static_cast<unsigned>(subset));
  }
  return HFCode(std::move(out));
}

HFCode separation(const HFCode& a, const std::function<bool(const HFCode&)>& p) {
  std::vector<std::size_t> kept;
  for (auto m : members(a)) {
    if (p(HFCode(m))) kept.push_back(m);
  }
  return from_members(kept);
}

HFCode replacement(const HFCode& a, const std::function<HFCode(const HFCode&)>& f) {
  std::vector<std::size_t> image;
  for (auto m : members(a)) image.push_back(f(HFCode(m)).as_index());
  return from_members(image);
}

HFCode foundation_witness(const HFCode& a) {
  if (a.is_empty()) throw DomainError("foundation_witness: the empty set has no members");
  for (auto m : members(a)) {
    if ((Natural(m) & a.value()).is_zero()) return HFCode(m);
  }
  // Unreachable: the least member b of a satisfies b < bit index of any of
  // its own members, so b and a share no bits.
  throw std::logic_error("foundation_witness: no minimal member");
}

HFCode choice_fn(const HFCode& a) {
  std::size_t m = 0;
  while (mp::bit_test(a.value(), static_cast<unsigned>(m))) ++m;
  return HFCode(m);
}

HFCode transitive_closure(const HFCode& a) {
  HFCode t = a;
  while (true) {
    HFCode next(t.value() | set_union_axiom(t).value());
    if (next == t) return t;
    t = std::move(next);
  }
}

std::size_t stage(const HFCode& a) {
  // Members of a are bit indices, and members of those fit in 64 bits.
  std::unordered_map<std::size_t, std::size_t> memo;
  std::function<std::size_t(std::size_t)> small_stage = [&](std::size_t n) -> std::size_t {
    if (n == 0) return 0;
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    std::size_t best = 0;
    for (std::size_t bits = n, i = 0; bits != 0; bits >>= 1, ++i) {
      if (bits & 1u) best = std::max(best, small_stage(i));
    }
    memo.emplace(n, best + 1);
    return best + 1;
  };
  if (a.is_empty()) return 0;
  std::size_t best = 0;
  for (auto m : members(a)) best = std::max(best, small_stage(m));
  return best + 1;
}

}  // namespace relaxed::hf
