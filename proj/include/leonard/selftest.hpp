#pragma once

#include <string>
#include <vector>

#include "leonard/parray.hpp"

namespace leonard {

/// q = 2, s = 3, s* = 5, r1 = 3, r2 = 5 * 2^(d+1) over Q.
QRacahParams qracah_rational_fixture(std::size_t d);
/// d = 4, q = 2, s = 1, s* = 2, r1 = 1, r2 = 12 over GF(13).
QRacahParams qracah_gf13_fixture();

struct Fixture {
    std::string name;
    ParameterArray array;
};

/// Krawtchouk d = 1..6 over Q and GF(13), then the two q-Racah fixtures.
std::vector<Fixture> builtin_fixtures();

struct InvariantResult {
    std::string fixture;
    std::string invariant;
    bool pass = false;
    std::string detail;
};

struct SelftestSummary {
    std::vector<InvariantResult> results;
    bool all_pass() const;
};

/// Runs the roundtrip invariants on every built-in fixture. With `corrupt`
/// the first fixture has varphi_1 shifted by one before the checks run.
SelftestSummary roundtrip_selftest(bool corrupt = false);

}  // namespace leonard
