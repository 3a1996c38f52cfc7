#include "packnu/groupset.hpp"

#include <stdexcept>

namespace packnu {

namespace {

void check_same_group(const GroupSet& a, const GroupSet& b) {
    if (!(a.group() == b.group())) {
        throw std::invalid_argument("GroupSet: mismatched parent groups");
    }
}

}  // namespace

GroupSet GroupSet::full(const Group& g) {
    GroupSet s(g);
    std::uint64_t n = g.order();
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
    if (n & 63) s.words_.back() = (std::uint64_t{1} << (n & 63)) - 1;
    s.count_ = n;
    return s;
}

GroupSet GroupSet::of(const Group& g, std::initializer_list<elem> xs) {
    GroupSet s(g);
    for (elem x : xs) {
        if (x >= g.order()) throw std::out_of_range("GroupSet::of: element out of range");
        s.add(x);
    }
    return s;
}

GroupSet GroupSet::of(const Group& g, const std::vector<elem>& xs) {
    GroupSet s(g);
    for (elem x : xs) {
        if (x >= g.order()) throw std::out_of_range("GroupSet::of: element out of range");
        s.add(x);
    }
    return s;
}

std::vector<elem> GroupSet::elements() const {
    std::vector<elem> out;
    out.reserve(count_);
    for_each([&](elem x) { out.push_back(x); });
    return out;
}

elem GroupSet::min_element() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w]) return static_cast<elem>((w << 6) + std::countr_zero(words_[w]));
    }
    throw std::logic_error("GroupSet::min_element on empty set");
}

GroupSet& GroupSet::operator|=(const GroupSet& o) {
    check_same_group(*this, o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    recount();
    return *this;
}

GroupSet& GroupSet::operator&=(const GroupSet& o) {
    check_same_group(*this, o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    recount();
    return *this;
}

GroupSet& GroupSet::operator-=(const GroupSet& o) {
    check_same_group(*this, o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
    recount();
    return *this;
}

GroupSet GroupSet::complement() const {
    GroupSet out = full(group_);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~words_[w];
    out.recount();
    return out;
}

bool GroupSet::intersects(const GroupSet& o) const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] & o.words_[w]) return true;
    }
    return false;
}

bool GroupSet::is_subset_of(const GroupSet& o) const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] & ~o.words_[w]) return false;
    }
    return true;
}

void GroupSet::recount() noexcept {
    std::uint64_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    count_ = c;
}

}  // namespace packnu
