#include "relaxed/zfc.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "relaxed/error.hpp"
#include "relaxed/kernels.hpp"

namespace relaxed::zfc {

using Row = std::vector<std::uint32_t>;

ModelDesc ModelDesc::from_pairing(const FinPairing& n) {
  if (!(n.left() == n.right())) throw ValidationError("model pairing must be on sigma x sigma", {});
  ModelDesc m;
  m.sigma = n.left();
  m.rows.resize(n.left().size());
  for (std::size_t a = 0; a < m.rows.size(); ++a) {
    const auto& r = n.row(a);
    for (auto b = r.find_first(); b != pairing::Subset::npos; b = r.find_next(b)) {
      m.rows[a].push_back(static_cast<std::uint32_t>(b));
    }
  }
  return m;
}

FinPairing ModelDesc::to_pairing() const {
  FinPairing p(sigma, sigma);
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (auto b : rows[a]) p.set(a, b);
  }
  return p;
}

bool ModelDesc::member(std::size_t a, std::size_t b) const {
  return std::binary_search(rows[a].begin(), rows[a].end(), static_cast<std::uint32_t>(b));
}

ModelDesc vk_model(std::size_t k, std::optional<std::size_t> scope_below_stage, Exec exec) {
  if (k > 5) throw ResourceError("vk:" + std::to_string(k) + " has more than 2^65536 elements; k <= 5 supported");
  std::uint32_t size = 0;
  for (std::size_t i = 0; i < k; ++i) size = std::uint32_t{1} << size;
  ModelDesc m;
  std::vector<std::string> labels(size);
  m.rows.resize(size);
  for (std::uint32_t n = 0; n < size; ++n) {
    labels[n] = std::to_string(n);
    for (std::uint32_t bits = n; bits != 0; bits &= bits - 1) {
      m.rows[n].push_back(static_cast<std::uint32_t>(__builtin_ctz(bits)));
    }
  }
  m.sigma = FinDomain(std::move(labels));
  if (scope_below_stage) {
    const auto stages = kernels::hf_stages(size, exec);
    for (std::uint32_t n = 0; n < size; ++n) {
      if (stages[n] < *scope_below_stage) m.scope.push_back(n);
    }
  }
  return m;
}

namespace {

struct Outcome {
  std::optional<Witness> failure;
  bool exhaustive = true;
};

class Checker {
 public:
  Checker(const ModelDesc& m, const CheckOptions& opt) : m_(m), opt_(opt) {
    if (m.scope.empty()) {
      scope_.resize(m.size());
      for (std::size_t i = 0; i < m.size(); ++i) scope_[i] = static_cast<std::uint32_t>(i);
    } else {
      scope_ = m.scope;
    }
    for (std::size_t a = 0; a < m.size(); ++a) by_row_[m.rows[a]].push_back(static_cast<std::uint32_t>(a));
  }

  AxiomReport run(Axiom axiom) {
    AxiomReport r;
    r.axiom = axiom;
    switch (axiom) {
      case Axiom::foundation: return scan(axiom, [&](std::uint32_t a) { return foundation(a); });
      case Axiom::sets_are_sets:
        r.note = "rows are finite by construction";
        return r;
      case Axiom::extensionality: return scan(axiom, [&](std::uint32_t a) { return extensionality(a); });
      case Axiom::union_: return scan(axiom, [&](std::uint32_t a) { return union_of(a); });
      case Axiom::powerset: return scan(axiom, [&](std::uint32_t a) { return powerset(a); });
      case Axiom::infinity: return infinity();
      case Axiom::choice: return choice();
      case Axiom::separation: {
        auto rep = scan(axiom, [&](std::uint32_t a) { return separation(a); });
        if (!rep.exhaustive) rep.note = "rows above " + std::to_string(opt_.separation_row_bound) + " members skipped";
        return rep;
      }
      case Axiom::replacement: {
        auto rep = scan(axiom, [&](std::uint32_t a) { return replacement(a); });
        if (!rep.exhaustive) {
          rep.note = "sampled " + std::to_string(opt_.replacement_samples) + " maps per element beyond " +
                     std::to_string(opt_.replacement_exhaustive_bound) + ", seed " + std::to_string(opt_.seed);
        }
        return rep;
      }
    }
    return r;
  }

 private:
  const std::vector<std::uint32_t>* with_row(const Row& row) const {
    auto it = by_row_.find(row);
    return it == by_row_.end() ? nullptr : &it->second;
  }

  std::vector<std::string> labels(const Row& idx) const {
    std::vector<std::string> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(m_.sigma.label(i));
    return out;
  }

  Witness about(std::uint32_t a, std::string detail) const {
    Witness w;
    w.elements.push_back(m_.sigma.label(a));
    w.detail = std::move(detail);
    return w;
  }

  // Runs `check` on every quantified element and reports the failure on the
  // element with the largest row (ties: highest index).
  template <class F>
  AxiomReport scan(Axiom axiom, F check) {
    std::vector<Outcome> out(scope_.size());
    const auto n = static_cast<std::int64_t>(scope_.size());
    if (opt_.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
      for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = check(scope_[static_cast<std::size_t>(i)]);
    } else {
      for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = check(scope_[static_cast<std::size_t>(i)]);
    }
    AxiomReport r;
    r.axiom = axiom;
    std::optional<std::size_t> chosen;
    for (std::size_t i = 0; i < out.size(); ++i) {
      r.exhaustive = r.exhaustive && out[i].exhaustive;
      if (!out[i].failure) continue;
      ++r.failures;
      if (!chosen || m_.rows[scope_[i]].size() >= m_.rows[scope_[*chosen]].size()) chosen = i;
    }
    if (chosen) {
      r.verdict = Verdict::fail;
      r.witness = std::move(out[*chosen].failure);
    }
    return r;
  }

  Outcome foundation(std::uint32_t a) const {
    const Row& row = m_.rows[a];
    if (row.empty()) return {};
    for (auto b : row) {
      const Row& inner = m_.rows[b];
      Row common;
      std::set_intersection(inner.begin(), inner.end(), row.begin(), row.end(), std::back_inserter(common));
      if (common.empty()) return {};
    }
    return {about(a, "no N-minimal member")};
  }

  Outcome extensionality(std::uint32_t a) const {
    const Row& row = m_.rows[a];
    if (opt_.strict_extensionality) {
      for (auto b : *with_row(row)) {
        if (b != a) {
          auto w = about(a, "distinct elements with identical rows");
          w.elements.push_back(m_.sigma.label(b));
          return {w};
        }
      }
      return {};
    }
    // Mutual inclusion, read through N lookups only.
    for (std::uint32_t b = 0; b < m_.size(); ++b) {
      if (b == a || m_.rows[b].size() != row.size()) continue;
      const bool a_in_b = std::all_of(row.begin(), row.end(), [&](auto x) { return m_.member(b, x); });
      const bool b_in_a = std::all_of(m_.rows[b].begin(), m_.rows[b].end(), [&](auto x) { return m_.member(a, x); });
      if (a_in_b && b_in_a) {
        auto w = about(a, "distinct elements with identical rows");
        w.elements.push_back(m_.sigma.label(b));
        return {w};
      }
    }
    return {};
  }

  Outcome missing_set(std::uint32_t a, const Row& target, const char* what) const {
    if (with_row(target)) return {};
    auto w = about(a, std::string("no element has row equal to ") + what);
    w.subset = labels(target);
    return {w};
  }

  Outcome union_of(std::uint32_t a) const {
    const Row target = pairing::compose_rows(std::span(&m_.rows[a], 1), m_.rows)[0];
    return missing_set(a, target, "(N*N)[a,#]");
  }

  Outcome powerset(std::uint32_t a) const {
    const Row& row = m_.rows[a];
    Row target;
    if (row.size() < 31 && (std::size_t{1} << row.size()) <= m_.size()) {
      Row sub;
      for (std::size_t mask = 0; mask < (std::size_t{1} << row.size()); ++mask) {
        sub.clear();
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (mask >> i & 1u) sub.push_back(row[i]);
        }
        if (const auto* hits = with_row(sub)) target.insert(target.end(), hits->begin(), hits->end());
      }
      std::sort(target.begin(), target.end());
    } else {
      for (std::uint32_t b = 0; b < m_.size(); ++b) {
        if (std::includes(row.begin(), row.end(), m_.rows[b].begin(), m_.rows[b].end())) target.push_back(b);
      }
    }
    return missing_set(a, target, "{b | row(b) within row(a)}");
  }

  Outcome separation(std::uint32_t a) const {
    const Row& row = m_.rows[a];
    if (row.size() > opt_.separation_row_bound) return {std::nullopt, false};
    Row sub;
    for (std::size_t mask = 0; mask < (std::size_t{1} << row.size()); ++mask) {
      sub.clear();
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (mask >> i & 1u) sub.push_back(row[i]);
      }
      if (!with_row(sub)) {
        auto w = about(a, "subset of row(a) that is no element's row");
        w.subset = labels(sub);
        return {w};
      }
    }
    return {};
  }

  Outcome replacement(std::uint32_t a) const {
    const Row& row = m_.rows[a];
    const std::size_t n = m_.size();
    const std::size_t r = row.size();
    if (n == 0) return {};
    // n^r, saturating at the exhaustive bound
    std::size_t total = 1;
    bool exhaustive = true;
    for (std::size_t i = 0; i < r && exhaustive; ++i) {
      if (total > opt_.replacement_exhaustive_bound / n) exhaustive = false;
      total *= n;
    }
    exhaustive = exhaustive && total <= opt_.replacement_exhaustive_bound;

    Row values(r, 0);
    auto test = [&]() -> std::optional<Witness> {
      Row image = values;
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (with_row(image)) return std::nullopt;
      auto w = about(a, "image of row(a) under the map is no element's row");
      for (std::size_t i = 0; i < r; ++i) w.mapping.emplace_back(m_.sigma.label(row[i]), m_.sigma.label(values[i]));
      w.subset = labels(image);
      return w;
    };

    if (exhaustive) {
      while (true) {
        if (auto w = test()) return {w};
        std::size_t i = 0;
        while (i < r && ++values[i] == n) values[i++] = 0;
        if (i == r) return {};
      }
    }
    std::mt19937_64 rng(opt_.seed ^ (0x9e3779b97f4a7c15ULL * (a + 1)));
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
    for (std::size_t s = 0; s < opt_.replacement_samples; ++s) {
      for (auto& v : values) v = pick(rng);
      if (auto w = test()) return {w, false};
    }
    return {std::nullopt, false};
  }

  AxiomReport infinity() const {
    AxiomReport r;
    r.axiom = Axiom::infinity;
    r.verdict = Verdict::fail;
    r.note = "finite model";
    Witness w;
    if (m_.size() == 0) {
      w.detail = "empty model";
    } else {
      std::uint32_t widest = 0;
      for (std::uint32_t a = 0; a < m_.size(); ++a) {
        if (m_.rows[a].size() >= m_.rows[widest].size()) widest = a;
      }
      w.elements.push_back(m_.sigma.label(widest));
      w.detail = "every row is finite; the largest has " + std::to_string(m_.rows[widest].size()) + " members";
    }
    r.failures = scope_.size();
    r.witness = std::move(w);
    return r;
  }

  AxiomReport choice() {
    auto r = scan(Axiom::choice, [&](std::uint32_t a) -> Outcome {
      if (m_.rows[a].size() == m_.size()) return {about(a, "row covers sigma")};
      return {};
    });
    if (r.verdict == Verdict::pass && !scope_.empty() && scope_.size() <= 64) {
      Witness w;
      w.detail = "choice function: least element outside each row";
      for (auto a : scope_) {
        std::uint32_t c = 0;
        while (m_.member(a, c)) ++c;
        w.mapping.emplace_back(m_.sigma.label(a), m_.sigma.label(c));
      }
      r.witness = std::move(w);
    }
    return r;
  }

  const ModelDesc& m_;
  const CheckOptions& opt_;
  std::vector<std::uint32_t> scope_;
  std::unordered_map<Row, std::vector<std::uint32_t>, boost::hash<Row>> by_row_;
};

}  // namespace

AxiomReport check_axiom(const ModelDesc& m, Axiom axiom, const CheckOptions& options) {
  return Checker(m, options).run(axiom);
}

std::vector<AxiomReport> check_all(const ModelDesc& m, const CheckOptions& options) {
  Checker checker(m, options);
  std::vector<AxiomReport> out;
  for (auto a : kAllAxioms) out.push_back(checker.run(a));
  return out;
}

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::foundation: return "foundation";
    case Axiom::sets_are_sets: return "sets-are-sets";
    case Axiom::extensionality: return "extensionality";
    case Axiom::union_: return "union";
    case Axiom::powerset: return "powerset";
    case Axiom::infinity: return "infinity";
    case Axiom::choice: return "choice";
    case Axiom::separation: return "separation";
    case Axiom::replacement: return "replacement";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "?";
}

std::string verdict_text(const AxiomReport& r) {
  std::string out = to_string(r.verdict);
  if (r.verdict == Verdict::pass && !r.exhaustive) {
    out += r.axiom == Axiom::replacement ? " (sampled)" : " (bounded)";
  }
  return out;
}

}  // namespace relaxed::zfc
