#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "packnu/group.hpp"

namespace packnu {

/**
 * A subset of a group's elements, stored as a dense bit array over the
 * index domain 0..|G|-1. Value-semantic; the cardinality is kept in sync
 * with the bits.
 */
class GroupSet {
public:
    explicit GroupSet(Group g)
        : group_(std::move(g)), words_((group_.order() + 63) / 64, 0) {}

    static GroupSet full(const Group& g);
    static GroupSet of(const Group& g, std::initializer_list<elem> xs);
    static GroupSet of(const Group& g, const std::vector<elem>& xs);

    const Group& group() const noexcept { return group_; }
    std::uint64_t universe() const noexcept { return group_.order(); }

    std::uint64_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }

    bool contains(elem x) const noexcept {
        return (words_[x >> 6] >> (x & 63)) & 1;
    }
    void add(elem x) noexcept {
        std::uint64_t bit = std::uint64_t{1} << (x & 63);
        if (!(words_[x >> 6] & bit)) {
            words_[x >> 6] |= bit;
            ++count_;
        }
    }
    void remove(elem x) noexcept {
        std::uint64_t bit = std::uint64_t{1} << (x & 63);
        if (words_[x >> 6] & bit) {
            words_[x >> 6] &= ~bit;
            --count_;
        }
    }

    std::vector<elem> elements() const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                unsigned b = std::countr_zero(bits);
                f(static_cast<elem>((w << 6) + b));
                bits &= bits - 1;
            }
        }
    }

    /// Smallest member; only valid when nonempty.
    elem min_element() const;

    GroupSet& operator|=(const GroupSet& o);
    GroupSet& operator&=(const GroupSet& o);
    GroupSet& operator-=(const GroupSet& o);
    GroupSet complement() const;

    friend GroupSet operator|(GroupSet a, const GroupSet& b) { return a |= b; }
    friend GroupSet operator&(GroupSet a, const GroupSet& b) { return a &= b; }
    friend GroupSet operator-(GroupSet a, const GroupSet& b) { return a -= b; }

    bool intersects(const GroupSet& o) const noexcept;
    bool is_subset_of(const GroupSet& o) const noexcept;

    bool operator==(const GroupSet& o) const noexcept {
        return group_ == o.group_ && words_ == o.words_;
    }

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> mutable_words() noexcept { return words_; }
    /// Recomputes the cached cardinality after direct word manipulation.
    void recount() noexcept;

private:
    Group group_;
    std::vector<std::uint64_t> words_;
    std::uint64_t count_ = 0;
};

}  // namespace packnu
