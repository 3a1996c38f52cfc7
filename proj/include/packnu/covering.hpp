#pragma once

#include <optional>
#include <string>

#include "packnu/packing.hpp"

namespace packnu {

inline constexpr std::uint64_t kExactCovCap = 512;

/// A*B = G?
bool is_covering(const GroupSet& a, const GroupSet& b);

/// Greedy cover: repeatedly add the translate covering the most new
/// elements (ties to the lowest index). Size is post-checked against the
/// (|G|/|A|)(log|A|+1) bound.
GroupSet greedy_cover(const GroupSet& a);

/// cov(A): minimum |B| with A*B = G, by branch-and-bound set cover seeded
/// with the greedy solution.
ExactResult exact_cov(const GroupSet& a, std::uint64_t budget = kDefaultNodeBudget);

/// {x in F_p^* : p <= 3x <= 2p} as a set in mult_mod_p(p). Requires p > 3.
GroupSet middle_third_set(std::uint64_t p);

struct MiddleThirdReport {
    std::uint64_t cov;
    double lower;  // log(p-1)/log 3
    double upper;  // 3(log p + 1)
    bool pass;
};

MiddleThirdReport check_middle_third(std::uint64_t p,
                                     std::uint64_t budget = kDefaultNodeBudget);

struct CovNuReport {
    std::uint64_t cov_ratio;  // cov(A A^-1)
    std::uint64_t nu;         // nu(A)
    bool pass;                // cov(A A^-1) <= nu(A)
};

CovNuReport check_cov_nu_relation(const GroupSet& a,
                                  std::uint64_t budget = kDefaultNodeBudget);

struct CoverReport {
    GroupSet a;
    GroupSet b;
    bool covers;
    double lower;  // |G|/|A|
    double upper;  // (|G|/|A|)(log|A|+1)
    std::optional<std::uint64_t> cov_exact;
    std::optional<double> middle_third_lower;
    std::optional<double> middle_third_upper;
    std::uint64_t nodes_explored = 0;
};

std::string to_json(const CoverReport& r);

}  // namespace packnu
