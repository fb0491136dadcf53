#include "relaxed/ordinal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "relaxed/error.hpp"
#include "relaxed/well_order.hpp"

namespace relaxed::ordinal {

Ordinal Ordinal::finite(std::uint64_t n) {
  Ordinal out;
  if (n != 0) out.terms_.push_back(Term{Ordinal{}, n});
  return out;
}

Ordinal Ordinal::omega() { return power(finite(1)); }

Ordinal Ordinal::power(Ordinal exponent, std::uint64_t coefficient) {
  if (coefficient == 0) throw ValidationError("coefficient must be positive", {to_string(exponent)});
  Ordinal out;
  out.terms_.push_back(Term{std::move(exponent), coefficient});
  return out;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) throw ValidationError("coefficient must be positive", {std::to_string(i)});
    if (i > 0 && cmp(terms[i - 1].exponent, terms[i].exponent) != std::strong_ordering::greater) {
      throw ValidationError("exponents must strictly decrease",
                            {to_string(terms[i - 1].exponent), to_string(terms[i].exponent)});
    }
  }
  Ordinal out;
  out.terms_ = std::move(terms);
  return out;
}

bool Ordinal::is_finite() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero()); }

std::optional<std::uint64_t> Ordinal::finite_value() const {
  if (!is_finite()) return std::nullopt;
  return terms_.empty() ? 0 : terms_[0].coefficient;
}

bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) { return cmp(a, b); }

std::strong_ordering cmp(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = cmp(x[i].exponent, y[i].exponent); c != 0) return c;
    if (auto c = x[i].coefficient <=> y[i].coefficient; c != 0) return c;
  }
  return x.size() <=> y.size();
}

Ordinal succ(const Ordinal& a) {
  auto terms = a.terms();
  if (!terms.empty() && terms.back().exponent.is_zero()) {
    if (terms.back().coefficient == std::numeric_limits<std::uint64_t>::max()) {
      throw ResourceError("finite coefficient overflow in succ");
    }
    ++terms.back().coefficient;
  } else {
    terms.push_back(Term{Ordinal{}, 1});
  }
  return Ordinal::from_terms(std::move(terms));
}

bool is_limit(const Ordinal& a) { return !a.is_zero() && !a.terms().back().exponent.is_zero(); }

bool is_successor(const Ordinal& a) { return !a.is_zero() && a.terms().back().exponent.is_zero(); }

Ordinal pred(const Ordinal& a) {
  if (!is_successor(a)) throw DomainError("predecessor undefined for 0 and limit ordinals: " + to_string(a));
  auto terms = a.terms();
  if (--terms.back().coefficient == 0) terms.pop_back();
  return Ordinal::from_terms(std::move(terms));
}

Ordinal sup(std::span<const Ordinal> family) {
  if (family.empty()) throw DomainError("sup of an empty family");
  return *std::max_element(family.begin(), family.end(),
                           [](const Ordinal& x, const Ordinal& y) { return cmp(x, y) < 0; });
}

Cofinality cofinality(const Ordinal& a) {
  if (a.is_zero()) return Cofinality::zero;
  return is_limit(a) ? Cofinality::omega : Cofinality::one;
}

std::strong_ordering cmp_canonical(const PairCanonical& p, const PairCanonical& q) {
  const Ordinal& mp = std::max(p.first, p.second);
  const Ordinal& mq = std::max(q.first, q.second);
  if (auto c = cmp(mp, mq); c != 0) return c;
  // Block 0: (<c, c). Block 1: (c, <=c).
  const int block_p = p.first < mp ? 0 : 1;
  const int block_q = q.first < mq ? 0 : 1;
  if (block_p != block_q) return block_p <=> block_q;
  return block_p == 0 ? cmp(p.first, q.first) : cmp(p.second, q.second);
}

std::uint64_t pair_index(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t m = std::max(a, b);
  if (m > 0xFFFFFFFFull) throw ResourceError("pair_index argument exceeds 2^32 - 1");
  return (b == m && a < m) ? m * m + a : m * m + m + b;
}

std::pair<std::uint64_t, std::uint64_t> unpair(std::uint64_t n) {
  auto m = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (m > 0 && m * m > n) --m;
  while ((m + 1) <= 0xFFFFFFFFull && (m + 1) * (m + 1) <= n) ++m;
  const std::uint64_t r = n - m * m;
  if (r < m) return {r, m};
  return {m, r - m};
}

std::uint64_t pair_index(const Ordinal& a, const Ordinal& b) {
  const auto x = a.finite_value();
  const auto y = b.finite_value();
  if (!x || !y) throw DomainError("pair_index: finite fragment only");
  return pair_index(*x, *y);
}

Ordinal classify_finite(const wo::FinWellOrder& w) { return Ordinal::finite(w.size()); }

std::vector<std::pair<std::string, Ordinal>> canonical_embedding(const wo::FinWellOrder& w) {
  std::vector<std::pair<std::string, Ordinal>> out;
  out.reserve(w.size());
  for (std::size_t r = 0; r < w.size(); ++r) out.emplace_back(w.at_rank(r), Ordinal::finite(r));
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Ordinal parse_all() {
    Ordinal out = parse_sum();
    if (pos_ != text_.size()) fail("unexpected character");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  std::uint64_t parse_natural() {
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        pos_ = start;
        fail("natural number overflow");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) fail("expected a natural number");
    if (pos_ - start > 1 && text_[start] == '0') {
      pos_ = start;
      fail("leading zero");
    }
    return value;
  }

  // sum := '0' | term ('+' term)*
  Ordinal parse_sum() {
    std::vector<Term> terms;
    const std::size_t start = pos_;
    if (peek('0')) {
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
        pos_ = start;
        fail("leading zero");
      }
      if (peek('+')) {
        pos_ = start;
        fail("zero term in a sum");
      }
      return Ordinal{};
    }
    while (true) {
      const std::size_t term_start = pos_;
      Term t = parse_term();
      if (!terms.empty() && cmp(terms.back().exponent, t.exponent) != std::strong_ordering::greater) {
        pos_ = term_start;
        fail("exponents must strictly decrease (non-canonical)");
      }
      terms.push_back(std::move(t));
      if (!peek('+')) break;
      ++pos_;
    }
    return Ordinal::from_terms(std::move(terms));
  }

  // term := nat | 'w' ['^' exponent] ['*' nat]
  Term parse_term() {
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      const auto n = parse_natural();
      if (n == 0) {
        pos_ = start;
        fail("zero term in a sum");
      }
      return Term{Ordinal{}, n};
    }
    Term t{parse_omega_power(), 1};
    if (peek('*')) {
      ++pos_;
      const std::size_t coef_start = pos_;
      t.coefficient = parse_natural();
      if (t.coefficient < 2) {
        pos_ = coef_start;
        fail("coefficient must be at least 2 when written");
      }
    }
    return t;
  }

  // 'w' ['^' exponent], returning the exponent
  Ordinal parse_omega_power() {
    if (!peek('w')) fail("expected 'w' or a natural number");
    ++pos_;
    if (!peek('^')) return Ordinal::finite(1);
    ++pos_;
    const std::size_t exp_start = pos_;
    Ordinal e = parse_exponent();
    if (e.is_zero() || e == Ordinal::finite(1)) {
      pos_ = exp_start;
      fail("exponent 0 or 1 must not be written");
    }
    return e;
  }

  // exponent := nat | 'w' ['^' exponent] | '(' sum ')'
  Ordinal parse_exponent() {
    if (peek('(')) {
      ++pos_;
      Ordinal inner = parse_sum();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (peek('w')) return Ordinal::power(parse_omega_power());
    return Ordinal::finite(parse_natural());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string exponent_string(const Ordinal& e) {
  if (e.is_finite()) return std::to_string(*e.finite_value());
  if (e.terms().size() == 1 && e.terms()[0].coefficient == 1) return to_string(e);
  return "(" + to_string(e) + ")";
}

}  // namespace

Ordinal parse(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += "+";
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += "w";
    if (!(t.exponent == Ordinal::finite(1))) out += "^" + exponent_string(t.exponent);
    if (t.coefficient > 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

std::string to_string(Cofinality c) {
  switch (c) {
    case Cofinality::zero: return "zero";
    case Cofinality::one: return "one";
    case Cofinality::omega: return "omega";
  }
  return "?";
}

}  // namespace relaxed::ordinal
