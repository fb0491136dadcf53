#include "relaxed/cardinal.hpp"

#include "relaxed/error.hpp"

namespace relaxed::cardinal {

SymCardinal SymCardinal::fin(Natural n) {
  if (n < 0) throw DomainError("negative cardinal");
  SymCardinal c;
  c.tag_ = Tag::fin;
  c.fin_ = std::move(n);
  return c;
}

SymCardinal SymCardinal::beth(Ordinal index) {
  SymCardinal c;
  c.tag_ = Tag::beth;
  c.index_ = std::move(index);
  return c;
}

const Natural& SymCardinal::fin_value() const {
  if (tag_ != Tag::fin) throw DomainError("not a finite cardinal: " + to_string(*this));
  return fin_;
}

const Ordinal& SymCardinal::beth_index() const {
  if (tag_ != Tag::beth) throw DomainError("not a Beth cardinal: " + to_string(*this));
  return index_;
}

std::strong_ordering card_cmp(const SymCardinal& a, const SymCardinal& b) {
  if (a.is_finite() != b.is_finite()) return a.is_finite() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_finite()) {
    const auto& x = a.fin_value();
    const auto& y = b.fin_value();
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  return ordinal::cmp(a.beth_index(), b.beth_index());
}

namespace {
const SymCardinal& larger(const SymCardinal& a, const SymCardinal& b) { return card_cmp(a, b) < 0 ? b : a; }
}  // namespace

SymCardinal card_product(const SymCardinal& a, const SymCardinal& b) {
  if (a.is_finite() && b.is_finite()) return SymCardinal::fin(a.fin_value() * b.fin_value());
  return larger(a, b);
}

SymCardinal card_union(const SymCardinal& a, const SymCardinal& b) {
  if (a.is_finite() && b.is_finite()) return SymCardinal::fin(a.fin_value() + b.fin_value());
  return larger(a, b);
}

SymCardinal beth(const Ordinal& index) { return SymCardinal::beth(index); }

bool is_strong_limit(const SymCardinal& c) {
  if (c.is_finite()) return false;
  const auto& a = c.beth_index();
  return a.is_zero() || ordinal::is_limit(a);
}

Ordinal rank_of_cardinal(const SymCardinal& c) {
  if (c.is_finite()) return Ordinal{};
  return ordinal::succ(c.beth_index());
}

ordinal::Cofinality cofinality_transfer(const Ordinal& b) { return ordinal::cofinality(b); }

Ordinal rank_law_1b(const Ordinal& x_level) {
  if (x_level.is_zero()) throw DomainError("rank law: level 0 elements are in N; no predecessor level");
  if (ordinal::is_limit(x_level)) {
    throw DomainError("rank law: ranks of elements cannot be limits (" + ordinal::to_string(x_level) + ")");
  }
  return ordinal::pred(x_level);
}

SymCardinal parse(std::string_view text) {
  if (text.starts_with("fin:")) {
    const auto digits = text.substr(4);
    if (digits.empty()) throw ParseError("expected a natural after 'fin:'", 4);
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (digits[i] < '0' || digits[i] > '9') throw ParseError("expected a decimal digit", 4 + i);
    }
    if (digits.size() > 1 && digits[0] == '0') throw ParseError("leading zero", 4);
    return SymCardinal::fin(Natural(std::string(digits)));
  }
  if (text.starts_with("beth:")) {
    try {
      return SymCardinal::beth(ordinal::parse(text.substr(5)));
    } catch (const ParseError& e) {
      throw ParseError("invalid Beth index", 5 + e.position());
    }
  }
  throw ParseError("expected 'fin:<n>' or 'beth:<ordinal>'", 0);
}

std::string to_string(const SymCardinal& c) {
  if (c.is_finite()) return "fin:" + c.fin_value().str();
  return "beth:" + ordinal::to_string(c.beth_index());
}

}  // namespace relaxed::cardinal
