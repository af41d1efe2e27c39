#pragma once

#include <string>
#include <vector>

namespace udc {

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The GF(29) length-7 decoding example and the Fourier Equation on the
/// standard small fields.
std::vector<SelftestCheck> run_selftest();

}  // namespace udc
