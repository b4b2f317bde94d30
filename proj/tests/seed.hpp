#pragma once

#include <cstdint>
#include <random>

#include <catch_amalgamated.hpp>

namespace sbp_test {

  inline constexpr std::uint32_t DEFAULT_SEED = 20240611;

  // A generator for one test case. `stream` keeps cases independent of each
  // other while all of them follow --rng-seed.
  inline std::mt19937 rng(std::uint32_t stream) {
    std::seed_seq seq{Catch::rngSeed(), stream};
    return std::mt19937(seq);
  }

}  // namespace sbp_test
