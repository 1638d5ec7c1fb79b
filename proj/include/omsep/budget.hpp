#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include "omsep/errors.hpp"

namespace omsep {

// Count and wall-clock caps shared by the exhaustive searches.
struct Budget {
  std::uint64_t max_colocalizations = 100000;
  std::uint64_t max_cliques = 1000000;
  double seconds = 300.0;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void check_time() const {
    const std::chrono::duration<double> used = std::chrono::steady_clock::now() - start;
    if (used.count() > seconds) throw ResourceLimit("time budget of " + std::to_string(seconds) + " s exceeded");
  }
};

}  // namespace omsep
