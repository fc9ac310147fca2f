#ifndef CALIB_SUITES_HPP
#define CALIB_SUITES_HPP

#include <cstdint>
#include <string>

#include "calib/certificate.hpp"

namespace calib {

// Full certificate suite for one model. `which` is "g2", "spin7" or "su3";
// anything else throws std::invalid_argument.
RunReport run_verify_suite(const std::string& which);

// Exact-zero calibration identities on seeded pseudorandom tuples.
struct IdentityOptions {
  int samples = 200;
  std::uint32_t seed = 42;
  bool run_n7 = true;
  bool run_n8 = true;
};

RunReport run_identity_suite(const IdentityOptions& opt);

}  // namespace calib

#endif
