#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "relaxed/exec.hpp"

namespace relaxed::pairing {

using Subset = boost::dynamic_bitset<>;

// A finite logical domain: distinct opaque labels, compared exactly.
class FinDomain {
 public:
  FinDomain() = default;
  explicit FinDomain(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  bool contains(const std::string& label) const { return index_.count(label) != 0; }
  // Throws ValidationError when the label is absent.
  std::size_t index_of(const std::string& label) const;

  Subset subset(std::span<const std::string> members) const;
  std::vector<std::string> labels_of(const Subset& s) const;

  friend bool operator==(const FinDomain& a, const FinDomain& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

// A boolean-valued pairing on left x right, stored as one bitset per left row.
class FinPairing {
 public:
  FinPairing() = default;
  // All-no pairing.
  FinPairing(FinDomain left, FinDomain right);
  FinPairing(FinDomain left, FinDomain right, std::vector<Subset> rows);

  static FinPairing identity(const FinDomain& d);
  static FinPairing from_pairs(FinDomain left, FinDomain right,
                               std::span<const std::pair<std::string, std::string>> pairs);

  const FinDomain& left() const noexcept { return left_; }
  const FinDomain& right() const noexcept { return right_; }
  const std::vector<Subset>& rows() const noexcept { return rows_; }
  const Subset& row(std::size_t a) const { return rows_.at(a); }

  bool at(std::size_t a, std::size_t b) const { return rows_[a][b]; }
  bool at(const std::string& a, const std::string& b) const;
  void set(std::size_t a, std::size_t b, bool value = true) { rows_[a][b] = value; }

  friend bool operator==(const FinPairing& x, const FinPairing& y) {
    return x.left_ == y.left_ && x.right_ == y.right_ && x.rows_ == y.rows_;
  }

 private:
  FinDomain left_;
  FinDomain right_;
  std::vector<Subset> rows_;
};

// An equivalence relation on `base`; laws are checked at construction.
class FinEquivalence {
 public:
  explicit FinEquivalence(FinPairing eqv);

  const FinDomain& base() const noexcept { return eqv_.left(); }
  const FinPairing& relation() const noexcept { return eqv_; }

 private:
  FinPairing eqv_;
};

struct Quotient {
  FinDomain classes;
  std::vector<std::size_t> projection;  // base index -> class index
};

// A total map between finite domains; image[i] is the index in `to`.
struct FinMap {
  FinDomain from;
  FinDomain to;
  std::vector<std::size_t> image;

  const std::string& operator()(const std::string& a) const { return to.label(image[from.index_of(a)]); }
  bool is_injective() const;
  bool is_bijective() const;
  FinPairing graph() const;
};

Subset pairing_domain(const FinPairing& p);
Subset pairing_image(const FinPairing& p);
FinPairing opposite(const FinPairing& p);

bool is_single_valued(const FinPairing& p);
bool is_injective(const FinPairing& p);
// Evaluates  forall a1, a2, b : p[a1,b] & p[a2,b] => a1 = a2  by enumeration.
bool detect_injective(const FinPairing& p);

// (a*b)[x,z] = exists y | a[x,y] & b[y,z]. Requires a.right() == b.left().
FinPairing compose(const FinPairing& a, const FinPairing& b, Exec exec = Exec::parallel);

// Relational composition on sparse adjacency lists (sorted indices). Used by
// checkers whose carriers are too large for a dense matrix.
std::vector<std::vector<std::uint32_t>> compose_rows(std::span<const std::vector<std::uint32_t>> a,
                                                     std::span<const std::vector<std::uint32_t>> b);

// a |-> { b | p[a,b] }
std::vector<Subset> adjoint(const FinPairing& p);

Quotient quotient(const FinEquivalence& e);

// Bijection from -> to assembled from injections f : A -> B and g : B -> A.
// Elements lying in some layer J^n(k) - J^n(j) (J = g.f, k = im g, j = im J)
// stay put; all others move along J. The result is pulled back to B through g.
FinMap cantor_bernstein(const FinMap& f, const FinMap& g);

}  // namespace relaxed::pairing
