#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "relaxed/exec.hpp"

// Data-parallel inner loops shared by the modules. Every kernel has a serial
// reference in `serial::` and an OpenMP version in `parallel::`; the
// dispatching overloads at the bottom pick one by `Exec`.
namespace relaxed::kernels {

using BitRows = std::vector<boost::dynamic_bitset<>>;

namespace serial {
// out[x] = OR of b[y] over y in a[x]; b rows have width `width`.
BitRows bool_product(const BitRows& a, const BitRows& b, std::size_t width);
// Transitive closure of a square relation (reachability in >= 1 step).
BitRows reachability(const BitRows& rows);
// stage(n) for every code n < limit (von Neumann stage inside HF).
std::vector<std::uint8_t> hf_stages(std::uint32_t limit);
}  // namespace serial

namespace parallel {
BitRows bool_product(const BitRows& a, const BitRows& b, std::size_t width);
BitRows reachability(const BitRows& rows);
std::vector<std::uint8_t> hf_stages(std::uint32_t limit);
}  // namespace parallel

inline BitRows bool_product(const BitRows& a, const BitRows& b, std::size_t width, Exec exec) {
  return exec == Exec::serial ? serial::bool_product(a, b, width) : parallel::bool_product(a, b, width);
}
inline BitRows reachability(const BitRows& rows, Exec exec) {
  return exec == Exec::serial ? serial::reachability(rows) : parallel::reachability(rows);
}
inline std::vector<std::uint8_t> hf_stages(std::uint32_t limit, Exec exec) {
  return exec == Exec::serial ? serial::hf_stages(limit) : parallel::hf_stages(limit);
}

}  // namespace relaxed::kernels
