#include "relaxed/pairing.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "relaxed/error.hpp"
#include "relaxed/kernels.hpp"

namespace relaxed::pairing {

FinDomain::FinDomain(std::vector<std::string> labels) : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) throw ValidationError("duplicate label", {labels_[i]});
  }
}

std::size_t FinDomain::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw ValidationError("label not in domain", {label});
  return it->second;
}

Subset FinDomain::subset(std::span<const std::string> members) const {
  Subset s(size());
  for (const auto& m : members) s.set(index_of(m));
  return s;
}

std::vector<std::string> FinDomain::labels_of(const Subset& s) const {
  std::vector<std::string> out;
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) out.push_back(labels_[i]);
  return out;
}

FinPairing::FinPairing(FinDomain left, FinDomain right)
    : left_(std::move(left)), right_(std::move(right)), rows_(left_.size(), Subset(right_.size())) {}

FinPairing::FinPairing(FinDomain left, FinDomain right, std::vector<Subset> rows)
    : left_(std::move(left)), right_(std::move(right)), rows_(std::move(rows)) {
  if (rows_.size() != left_.size()) throw ValidationError("pairing row count differs from left size", {});
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    if (rows_[a].size() != right_.size()) {
      throw ValidationError("pairing row width differs from right size", {left_.label(a)});
    }
  }
}

FinPairing FinPairing::identity(const FinDomain& d) {
  FinPairing p(d, d);
  for (std::size_t i = 0; i < d.size(); ++i) p.set(i, i);
  return p;
}

FinPairing FinPairing::from_pairs(FinDomain left, FinDomain right,
                                  std::span<const std::pair<std::string, std::string>> pairs) {
  FinPairing p(std::move(left), std::move(right));
  for (const auto& [a, b] : pairs) p.set(p.left().index_of(a), p.right().index_of(b));
  return p;
}

bool FinPairing::at(const std::string& a, const std::string& b) const {
  return rows_[left_.index_of(a)][right_.index_of(b)];
}

FinEquivalence::FinEquivalence(FinPairing eqv) : eqv_(std::move(eqv)) {
  if (!(eqv_.left() == eqv_.right())) throw ValidationError("equivalence must be on a single domain", {});
  const auto& d = eqv_.left();
  const std::size_t n = d.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!eqv_.at(x, x)) throw ValidationError("reflexivity", {d.label(x)});
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (eqv_.at(x, y) && !eqv_.at(y, x)) throw ValidationError("symmetry", {d.label(x), d.label(y)});
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!eqv_.at(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (eqv_.at(y, z) && !eqv_.at(x, z)) {
          throw ValidationError("transitivity", {d.label(x), d.label(y), d.label(z)});
        }
      }
    }
  }
}

bool FinMap::is_injective() const {
  std::vector<bool> hit(to.size(), false);
  for (auto b : image) {
    if (hit[b]) return false;
    hit[b] = true;
  }
  return true;
}

bool FinMap::is_bijective() const { return image.size() == from.size() && from.size() == to.size() && is_injective(); }

FinPairing FinMap::graph() const {
  FinPairing p(from, to);
  for (std::size_t a = 0; a < image.size(); ++a) p.set(a, image[a]);
  return p;
}

Subset pairing_domain(const FinPairing& p) {
  Subset out(p.left().size());
  for (std::size_t a = 0; a < p.left().size(); ++a) out[a] = p.row(a).any();
  return out;
}

Subset pairing_image(const FinPairing& p) {
  Subset out(p.right().size());
  for (const auto& row : p.rows()) out |= row;
  return out;
}

FinPairing opposite(const FinPairing& p) {
  FinPairing out(p.right(), p.left());
  for (std::size_t a = 0; a < p.left().size(); ++a) {
    const auto& row = p.row(a);
    for (auto b = row.find_first(); b != Subset::npos; b = row.find_next(b)) out.set(b, a);
  }
  return out;
}

bool is_single_valued(const FinPairing& p) {
  return std::all_of(p.rows().begin(), p.rows().end(), [](const Subset& r) { return r.count() <= 1; });
}

bool is_injective(const FinPairing& p) { return is_single_valued(opposite(p)); }

bool detect_injective(const FinPairing& p) {
  const std::size_t nl = p.left().size();
  const std::size_t nr = p.right().size();
  for (std::size_t a1 = 0; a1 < nl; ++a1) {
    for (std::size_t a2 = 0; a2 < nl; ++a2) {
      for (std::size_t b = 0; b < nr; ++b) {
        if (p.at(a1, b) && p.at(a2, b) && a1 != a2) return false;
      }
    }
  }
  return true;
}

FinPairing compose(const FinPairing& a, const FinPairing& b, Exec exec) {
  if (!(a.right() == b.left())) throw ValidationError("composition domain mismatch", {});
  return FinPairing(a.left(), b.right(), kernels::bool_product(a.rows(), b.rows(), b.right().size(), exec));
}

std::vector<std::vector<std::uint32_t>> compose_rows(std::span<const std::vector<std::uint32_t>> a,
                                                     std::span<const std::vector<std::uint32_t>> b) {
  std::vector<std::vector<std::uint32_t>> out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    auto& acc = out[x];
    for (auto y : a[x]) acc.insert(acc.end(), b[y].begin(), b[y].end());
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
  }
  return out;
}

std::vector<Subset> adjoint(const FinPairing& p) { return p.rows(); }

Quotient quotient(const FinEquivalence& e) {
  const auto& rel = e.relation();
  const auto& base = e.base();
  std::map<Subset, std::size_t> class_of_row;
  std::vector<std::string> class_labels;
  std::vector<std::size_t> projection(base.size());
  for (std::size_t x = 0; x < base.size(); ++x) {
    const auto& row = rel.row(x);
    auto [it, fresh] = class_of_row.emplace(row, class_labels.size());
    if (fresh) {
      std::string label = "{";
      bool first = true;
      for (const auto& m : base.labels_of(row)) {
        if (!first) label += ",";
        label += m;
        first = false;
      }
      class_labels.push_back(label + "}");
    }
    projection[x] = it->second;
  }
  return {FinDomain(std::move(class_labels)), std::move(projection)};
}

namespace {

void require_injective(const FinMap& m, const char* name) {
  if (m.image.size() != m.from.size()) throw ValidationError(std::string(name) + " is not total", {});
  std::vector<std::size_t> first(m.to.size(), m.from.size());
  for (std::size_t a = 0; a < m.image.size(); ++a) {
    const auto b = m.image[a];
    if (b >= m.to.size()) throw ValidationError(std::string(name) + " maps outside its codomain", {m.from.label(a)});
    if (first[b] != m.from.size()) {
      throw ValidationError(std::string(name) + " is not injective",
                            {m.from.label(first[b]), m.from.label(a), m.to.label(b)});
    }
    first[b] = a;
  }
}

Subset image_of(const Subset& s, const std::vector<std::size_t>& map) {
  Subset out(s.size());
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) out.set(map[i]);
  return out;
}

}  // namespace

FinMap cantor_bernstein(const FinMap& f, const FinMap& g) {
  if (!(f.to == g.from) || !(g.to == f.from)) throw ValidationError("injections do not form A -> B -> A", {});
  require_injective(f, "f");
  require_injective(g, "g");

  const std::size_t n = f.from.size();
  std::vector<std::size_t> jump(n);  // J = g . f
  for (std::size_t a = 0; a < n; ++a) jump[a] = g.image[f.image[a]];

  Subset k(n);  // detects B inside A
  for (auto b : g.image) k.set(b);
  Subset full(n);
  full.set();
  Subset j = image_of(full, jump);

  // Layers J^m(k) - J^m(j) are pairwise disjoint and J maps layer m onto
  // layer m+1, so at most n of them are nonempty.
  Subset fixed(n);
  Subset k_iter = k;
  Subset j_iter = j;
  for (std::size_t m = 0; m <= n; ++m) {
    const Subset layer = k_iter - j_iter;
    if (layer.none()) break;
    fixed |= layer;
    k_iter = image_of(k_iter, jump);
    j_iter = image_of(j_iter, jump);
  }

  std::vector<std::size_t> g_inverse(n, f.to.size());
  for (std::size_t b = 0; b < g.image.size(); ++b) g_inverse[g.image[b]] = b;

  FinMap out{f.from, f.to, std::vector<std::size_t>(n)};
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t target = fixed[a] ? a : jump[a];
    if (g_inverse[target] == f.to.size()) throw std::logic_error("cantor_bernstein: target outside image of g");
    out.image[a] = g_inverse[target];
  }
  if (!out.is_bijective()) throw std::logic_error("cantor_bernstein: result is not a bijection");
  return out;
}

}  // namespace relaxed::pairing
