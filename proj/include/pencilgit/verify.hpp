#pragma once

#include "pencilgit/field.hpp"
#include "pencilgit/report.hpp"

namespace pencilgit {

struct VerifyOptions {
    FieldPtr field;                // finite field for the group scans (default fp:13)
    std::uint64_t seed = 0;
    int degree_bound = 8;
    std::string corrupt_builtin;   // test hook: damage one builtin presentation
    // side channel for wall-clock per check; kept out of the report so that
    // identical (argv, seed) still yields byte-identical JSON
    std::vector<std::pair<std::string, double>>* timings_ms = nullptr;
};

/// Replay every verified claim: exact identities, equivariance, stabilizers,
/// fibers, orbit atlas, graded pieces, the excision pipeline, characters and
/// ring maps. Deterministic for a fixed (field, seed, bound).
Report verify_all(const VerifyOptions& opt);

} // namespace pencilgit
