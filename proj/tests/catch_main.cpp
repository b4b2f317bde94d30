// Test runner with a fixed default seed. Pass --rng-seed N to override.

#include <catch_amalgamated.hpp>

#include "seed.hpp"

int main(int argc, char* argv[]) {
  Catch::Session session;
  session.configData().rngSeed = sbp_test::DEFAULT_SEED;
  if (int rc = session.applyCommandLine(argc, argv); rc != 0) {
    return rc;
  }
  return session.run();
}
