#pragma once

#include <string>
#include <vector>

#include "mcluster/decomposition.hpp"

namespace mcluster {

struct CellResult {
    int n = 0, m = 0, N = 0;
    bool pass = true;
    std::vector<std::string> failures;
    std::vector<std::string> info;
    VerificationReport decomposition;
    double seconds = 0;
};

struct SweepResult {
    std::vector<CellResult> cells;
    bool pass = true;
};

struct VerifyOptions {
    // caps keeping the expensive law checks at desk scale
    int mesh_max_N = 12;
    int cone_max_q = 6;
    bool inject_fault = false; // corrupt the prediction to exercise failure paths
};

// all machine checks for one (n, m) cell: decomposition against the
// predicted multiset, orbit and parity laws, crossing laws, sectional
// irreducibles, AR-triangle laws, and the cone oracle within the caps
CellResult verify_cell(int n, int m, const VerifyOptions& opts = {});

SweepResult verify_sweep(int n_lo, int n_hi, int m_lo, int m_hi, int jobs = 1,
                         const VerifyOptions& opts = {});

} // namespace mcluster
