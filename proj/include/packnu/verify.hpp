#pragma once

#include <random>
#include <string>
#include <vector>

#include "packnu/groupset.hpp"

namespace packnu {

struct ClaimResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct VerifyOptions {
    bool fast = false;          // skip the largest-scale checks
    bool inject_fault = false;  // test-only: corrupt one constructed B
};

/// Runs every documented claim at its default scale; one result per claim.
std::vector<ClaimResult> run_claim_suite(const VerifyOptions& opt);

/// The standard small-group test matrix: cyclic 2..max_order,
/// Z2 x Zn, Z2 x Z2 x Zn, and mult_mod_p, all of order <= max_order.
std::vector<Group> test_matrix(std::uint64_t max_order);

/// Uniformly random subset; redrawn until nonempty when require_nonempty.
GroupSet random_subset(const Group& g, std::mt19937_64& rng, bool require_nonempty);

}  // namespace packnu
