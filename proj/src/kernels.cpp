#include "relaxed/kernels.hpp"

#include <bit>
#include <cstdint>

namespace relaxed::kernels {

namespace {

// stage(n) = 0 for n = 0, else 1 + max stage over the set bits of n. Bits of
// n are all < 32 here, so every member's stage is already known once codes
// below 32 are filled in; those are done serially first.
std::uint8_t stage_from_table(std::uint32_t n, const std::vector<std::uint8_t>& table) {
  std::uint8_t best = 0;
  bool any = false;
  for (std::uint32_t bits = n; bits != 0; bits &= bits - 1) {
    const auto m = static_cast<std::uint32_t>(std::countr_zero(bits));
    any = true;
    if (table[m] > best) best = table[m];
  }
  return any ? static_cast<std::uint8_t>(best + 1) : 0;
}

std::vector<std::uint8_t> seed_stages(std::uint32_t limit) {
  std::vector<std::uint8_t> table(limit, 0);
  const std::uint32_t head = limit < 32 ? limit : 32;
  for (std::uint32_t n = 0; n < head; ++n) table[n] = stage_from_table(n, table);
  return table;
}

}  // namespace

namespace serial {

BitRows bool_product(const BitRows& a, const BitRows& b, std::size_t width) {
  BitRows out(a.size(), boost::dynamic_bitset<>(width));
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (auto y = a[x].find_first(); y != boost::dynamic_bitset<>::npos; y = a[x].find_next(y)) {
      out[x] |= b[y];
    }
  }
  return out;
}

BitRows reachability(const BitRows& rows) {
  BitRows r = rows;
  const std::size_t n = r.size();
  // Warshall: after step k, r[i] contains every j reachable through {0..k}.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (r[i][k]) r[i] |= r[k];
    }
  }
  return r;
}

std::vector<std::uint8_t> hf_stages(std::uint32_t limit) {
  auto table = seed_stages(limit);
  for (std::uint32_t n = 32; n < limit; ++n) table[n] = stage_from_table(n, table);
  return table;
}

}  // namespace serial

namespace parallel {

BitRows bool_product(const BitRows& a, const BitRows& b, std::size_t width) {
  BitRows out(a.size(), boost::dynamic_bitset<>(width));
  const auto n = static_cast<std::int64_t>(a.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t x = 0; x < n; ++x) {
    const auto& row = a[static_cast<std::size_t>(x)];
    auto& acc = out[static_cast<std::size_t>(x)];
    for (auto y = row.find_first(); y != boost::dynamic_bitset<>::npos; y = row.find_next(y)) acc |= b[y];
  }
  return out;
}

BitRows reachability(const BitRows& rows) {
  BitRows r = rows;
  const auto n = static_cast<std::int64_t>(r.size());
  for (std::int64_t k = 0; k < n; ++k) {
    // Row k is not modified within step k (r[k][k] would only OR r[k] into
    // itself), so it can be read concurrently.
    const boost::dynamic_bitset<> pivot = r[static_cast<std::size_t>(k)];
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      auto& ri = r[static_cast<std::size_t>(i)];
      if (ri[static_cast<std::size_t>(k)]) ri |= pivot;
    }
  }
  return r;
}

std::vector<std::uint8_t> hf_stages(std::uint32_t limit) {
  auto table = seed_stages(limit);
  const auto n = static_cast<std::int64_t>(limit);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 32; i < n; ++i) {
    table[static_cast<std::size_t>(i)] = stage_from_table(static_cast<std::uint32_t>(i), table);
  }
  return table;
}

}  // namespace parallel

}  // namespace relaxed::kernels
