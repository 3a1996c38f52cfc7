#pragma once

#include "packnu/numth.hpp"
#include "packnu/subgroup.hpp"

namespace packnu {

/// A = H, B = coset transversal; witnesses nu(A) = |G|/|A| with |A*B| = |G|.
std::pair<GroupSet, GroupSet> subgroup_transversal_pair(const Group& g, const Subgroup& h);

/**
 * The construction showing the weak lower bound is tight: for g of order
 * k >= 2 and d = ceil(sqrt(k)),
 *   A1 = {g, g^2, ..., g^d},  A2 = {g^d, g^{2d}, ..., g^{(d-1)d}, g^{d^2}},
 * A = A1 u A2 satisfies |A| < 2d and A A^-1 = <g>.
 */
struct TightnessSpec {
    Group group;
    elem g;
    std::uint64_t k;  // order of g
    std::uint64_t d;  // ceil(sqrt(k))
    GroupSet a1, a2, a;
    GroupSet subgroup_elements;  // <g>
};

TightnessSpec tightness_set(const Group& grp, elem g);

/**
 * Graded variant: A' = {g^i : 1 <= i <= m} u {g^{jm} : 1 <= j <= m'},
 * requiring m*m' <= k. |A'| = m + m' - 1 and
 * A' A'^-1 = {g^t : |t| <= m*m' - 1}.
 */
struct GradedSpec {
    Group group;
    elem g;
    std::uint64_t k, m, m2;
    GroupSet a;
    std::uint64_t ratio_cardinality;  // min(2 m m' - 1, k)
};

GradedSpec graded_set(const Group& grp, elem g, std::uint64_t m, std::uint64_t m2);

struct IntervalSpec {
    Group group;   // mult_mod_p(p)
    std::uint64_t p, lambda;
    GroupSet a;    // residues 1..lambda
};

IntervalSpec interval_set(std::uint64_t p, std::uint64_t lambda);

/// B = {prime q : lambda < q <= floor(p/lambda)} in F_p^*.
/// Regime 2 <= lambda, 100 lambda^2 <= 81 p. Packing against {1..lambda}
/// is asserted. Pass sieve tables covering floor(p/lambda) to avoid a rebuild.
GroupSet prime_interval_set(std::uint64_t p, std::uint64_t lambda,
                            const SieveTables* tables = nullptr);

/// B = {x : lambda < x <= floor(p/lambda), spf(x) > lambda}; contains the
/// prime-interval set. Same regime and assertion.
GroupSet rough_interval_set(std::uint64_t p, std::uint64_t lambda,
                            const SieveTables* tables = nullptr);

}  // namespace packnu
