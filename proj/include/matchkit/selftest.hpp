#pragma once

#include <iosfwd>

namespace matchkit {

struct SelfTestReport {
  int graphs_checked = 0;
  int failures = 0;
  bool ok() const { return failures == 0 && graphs_checked > 0; }
};

// Dual-route identity suite over every graph with v <= max_vertices (up to
// isomorphism): transfer identity, edge recursion, measure-vs-coefficient
// statistics, root bounds, cycle-sum identity, permanent cross-checks,
// edge-probability sums, the all-matchings bound and the moment identity.
SelfTestReport run_identity_suite(std::ostream& log, int max_vertices = 7);

}  // namespace matchkit
