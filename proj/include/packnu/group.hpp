#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace packnu {

using elem = std::uint32_t;

enum class GroupKind { Cyclic, Product, MultModP };

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/**
 * A finite abelian group in one of three presentations:
 *   cyclic(n)       - Z_n under addition, element i <-> residue i
 *   product(n1..nk) - Z_n1 x ... x Z_nk, element index in mixed radix
 *   mult_mod_p(p)   - F_p^* under multiplication, index i <-> residue i+1
 *
 * Elements are dense indices 0..|G|-1; the identity is always index 0.
 * Groups are immutable after construction and safe to share across threads.
 */
class Group {
public:
    static constexpr std::uint64_t kDefaultMaxOrder = std::uint64_t{1} << 26;

    static Group cyclic(std::uint64_t n);
    static Group product(std::vector<std::uint64_t> moduli);
    static Group mult_mod_p(std::uint64_t p);

    /// Parses "cyclic:N", "product:N1xN2x...", "multmod:P".
    static Group parse(const std::string& spec);

    /// Order cap used by the factories; PACKNU_MAX_ORDER overrides the default.
    static std::uint64_t max_order();

    std::uint64_t order() const noexcept { return order_; }
    GroupKind kind() const noexcept { return kind_; }

    elem id() const noexcept { return 0; }
    elem op(elem x, elem y) const;
    elem inv(elem x) const;

    /// Canonical label of an element (residue, tuple "a.b.c", or residue 1..p-1).
    std::string label(elem x) const;
    /// Inverse of label(); nullopt if the label names no element.
    std::optional<elem> from_label(const std::string& s) const;

    /// Spec string that parse() accepts, e.g. "multmod:13".
    std::string spec_string() const;

    /// For mult_mod_p groups, the prime p; 0 otherwise.
    std::uint64_t prime() const noexcept { return p_; }
    const std::vector<std::uint64_t>& moduli() const noexcept { return moduli_; }

    bool operator==(const Group& other) const noexcept {
        return kind_ == other.kind_ && order_ == other.order_ && p_ == other.p_ &&
               moduli_ == other.moduli_;
    }

private:
    Group(GroupKind k, std::uint64_t order) : kind_(k), order_(order) {}

    GroupKind kind_;
    std::uint64_t order_;
    std::uint64_t p_ = 0;                 // mult_mod_p only
    std::vector<std::uint64_t> moduli_;   // product only
};

}  // namespace packnu
