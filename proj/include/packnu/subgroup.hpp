#pragma once

#include <optional>

#include "packnu/groupset.hpp"

namespace packnu {

struct Subgroup {
    GroupSet elements;
    std::optional<elem> generator;  // set when built as a cyclic subgroup

    const Group& group() const noexcept { return elements.group(); }
    std::uint64_t order() const noexcept { return elements.size(); }
};

/// True iff S contains the identity and is closed under op and inv.
bool is_subgroup(const GroupSet& s);

/// {g, g^2, ..., g^k = id} where k is the order of g.
Subgroup cyclic_subgroup(const Group& g, elem x);

/// Order of an element (size of the cyclic subgroup it generates).
std::uint64_t element_order(const Group& g, elem x);

/// Closure of a generating set under op and inv.
GroupSet subgroup_closure(const GroupSet& generators);

/// One representative per coset of H, the smallest index in each coset.
GroupSet coset_transversal(const Group& g, const Subgroup& h);

/// All subgroups of G, found by closing each extension by one element.
/// Intended for small groups (|G| <= a few hundred).
std::vector<Subgroup> all_subgroups(const Group& g);

}  // namespace packnu
