#pragma once

#include <string>
#include <vector>

#include "ulrich/certificate.hpp"

// Named end-to-end certificates.  Each id bundles the checks of one complete
// argument; together they exercise every public operation of every module.

namespace ulrich::certify {

struct Options {
  long a_max = 64;   // quadratic enumeration cap (conto)
  long max_c = 20;   // quadric curve family size
  long d_max = 8;    // degree cap for parameter triples (grado)
  long k_max = 21;   // largest odd twist for the elliptic product
};

// Fixed order; `run` accepts exactly these.
const std::vector<std::string>& ids();

// One-line functional description (shown by `ulrich list`).
std::string describe(const std::string& id);

// Throws std::invalid_argument for an unknown id.
cert::Certificate run(const std::string& id, const Options& opt = {});

}  // namespace ulrich::certify
