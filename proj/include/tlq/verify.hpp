#pragma once

#include "tlq/instance_io.hpp"

namespace tlq {

struct VerifyOptions {
    int well_def_degree = 2;
    int counit_degree = 2;
    int tl_arity = 4;
    int poincare_lmax = 4;
    int expansion_imax = 5;
    bool force_well_def = false;  // run well-definedness even when n >= 4
    bool force_ideal = false;     // run ideal membership even when n = 4
    bool negate_c = false;
    uint64_t seed = 0;
};

/// Full check battery as a deterministic report. Every check key is always
/// present; skipped checks carry an explicit reason. The report's
/// summary.fail count drives the CLI exit code.
Json run_verify(const TLInstance& inst, const VerifyOptions& opt);

}  // namespace tlq
