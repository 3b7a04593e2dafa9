#pragma once

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pmd/transformation.hpp"

namespace pmd::testing {

using Rng = std::mt19937_64;

inline Rng seeded(std::uint64_t salt) { return Rng(0x9e3779b97f4a7c15ULL ^ salt); }

/// Uniform over all (n+1)^n partial maps of degree n.
inline PartialTransformation random_partial(Rng& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> point(0, n);
  std::vector<std::size_t> images(n);
  for (auto& y : images) y = point(rng);
  return PartialTransformation::from_images(images);
}

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& pool) {
  std::uniform_int_distribution<std::size_t> at(0, pool.size() - 1);
  return pool[at(rng)];
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string fixture(const std::string& name) { return std::string(PMD_FIXTURE_DIR) + "/" + name; }

}  // namespace pmd::testing
