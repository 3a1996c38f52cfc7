#pragma once

#include "packnu/groupset.hpp"

namespace packnu {

/// {x*t : t in T}; same cardinality as T.
GroupSet translate(elem x, const GroupSet& t);

/// OR of translate(x, t) into acc (acc and t share a parent group).
void translate_into(GroupSet& acc, elem x, const GroupSet& t);

/// {a*b : a in A, b in B}. Serial reference kernel.
GroupSet product_set_serial(const GroupSet& a, const GroupSet& b);

/// Same contract as product_set_serial; partitions A across OpenMP threads
/// with per-thread accumulators OR-merged, so the result is bit-identical
/// to the serial kernel.
GroupSet product_set(const GroupSet& a, const GroupSet& b);

/// {a^-1 : a in A}; involution.
GroupSet inverse_set(const GroupSet& a);

/// A * A^-1. Symmetric, contains the identity. Rejects empty A.
GroupSet ratio_set(const GroupSet& a);

/// Sym(T) = {x : x*T = T}. Always a subgroup, contained in T*T^-1.
/// Rejects empty T.
GroupSet symmetry_group(const GroupSet& t);

}  // namespace packnu
