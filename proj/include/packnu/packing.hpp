#pragma once

#include <optional>
#include <string>

#include "packnu/groupset.hpp"

namespace packnu {

struct PackingBounds {
    std::uint64_t lower_weak;     // ceil(|G| / |A|^2)
    std::uint64_t lower_ruzsa;    // ceil(|G| / |A A^-1|)
    std::uint64_t upper_trivial;  // floor(|G| / |A|)
};

struct PackingCertificate {
    bool is_packing;
    std::uint64_t product_cardinality;  // |A*B|
};

enum class SolveStatus { Optimal, BudgetExhausted };

struct ExactResult {
    SolveStatus status;
    std::uint64_t value;   // optimum, or best found when budget exhausted
    GroupSet witness;
    std::uint64_t nodes;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;
inline constexpr std::uint64_t kExactNuCap = 4096;

/// |A*B| = |A||B|? Computed both by direct product-set count and by the
/// ratio-set criterion (A A^-1) n (B B^-1) = {1}; the two routes must agree.
/// Empty B is vacuously a packing set. Rejects empty A.
PackingCertificate is_packing(const GroupSet& a, const GroupSet& b);

PackingBounds packing_bounds(const GroupSet& a);

/// Maximal packing set by greedy scan in the given element order (natural
/// order when empty). Post-checks the Ruzsa covering certificate:
/// |B| >= ceil(|G|/|A A^-1|) and A^-1 A B = G.
GroupSet greedy_packing(const GroupSet& a, const std::vector<elem>& order = {});

/// nu(A): maximum independent set in the Cayley graph with connection set
/// A A^-1 \ {1}, by branch and bound. The identity is fixed into the witness
/// (valid by vertex-transitivity). Optional vertex order for branching;
/// the returned value is order-invariant.
ExactResult exact_nu(const GroupSet& a, std::uint64_t budget = kDefaultNodeBudget,
                     const std::vector<elem>& order = {});

struct SymmetryReport {
    bool pass;
    std::optional<elem> counterexample;
    GroupSet sym_b;         // Sym(B)
    GroupSet sym_bb;        // Sym(B B^-1)
    GroupSet sym_aa;        // Sym(A A^-1)
    std::string detail;
};

/// Checks Sym(B) = Sym(B B^-1) and
/// Sym(A A^-1) n (A A^-1) = (Sym(A A^-1) \ Sym(B)) u {1} (disjointly),
/// for a maximum packing set B of A. Rejects B that is not a packing set.
SymmetryReport check_symmetry_proposition(const GroupSet& a, const GroupSet& b);

struct PackingReport {
    GroupSet a;
    GroupSet b;
    bool is_packing;
    std::uint64_t product_cardinality;
    PackingBounds bounds;
    std::optional<std::uint64_t> nu_exact;
    std::uint64_t nodes_explored = 0;
};

std::string to_json(const PackingReport& r);

}  // namespace packnu
