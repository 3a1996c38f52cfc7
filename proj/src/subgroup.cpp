#include "packnu/subgroup.hpp"

#include <algorithm>
#include <stdexcept>

#include "packnu/setalg.hpp"

namespace packnu {

bool is_subgroup(const GroupSet& s) {
    const Group& g = s.group();
    if (!s.contains(g.id())) return false;
    auto xs = s.elements();
    for (elem x : xs) {
        if (!s.contains(g.inv(x))) return false;
        for (elem y : xs) {
            if (!s.contains(g.op(x, y))) return false;
        }
    }
    return true;
}

std::uint64_t element_order(const Group& g, elem x) {
    std::uint64_t k = 1;
    elem cur = x;
    while (cur != g.id()) {
        cur = g.op(cur, x);
        ++k;
    }
    return k;
}

Subgroup cyclic_subgroup(const Group& g, elem x) {
    if (x >= g.order()) throw std::out_of_range("cyclic_subgroup: element out of range");
    GroupSet s(g);
    elem cur = x;
    s.add(cur);
    while (cur != g.id()) {
        cur = g.op(cur, x);
        s.add(cur);
    }
    return Subgroup{std::move(s), x};
}

GroupSet subgroup_closure(const GroupSet& generators) {
    const Group& g = generators.group();
    GroupSet s(g);
    s.add(g.id());
    std::vector<elem> frontier{g.id()};
    std::vector<elem> gens = generators.elements();
    for (elem x : generators.elements()) gens.push_back(g.inv(x));
    while (!frontier.empty()) {
        std::vector<elem> next;
        for (elem f : frontier) {
            for (elem x : gens) {
                elem y = g.op(f, x);
                if (!s.contains(y)) {
                    s.add(y);
                    next.push_back(y);
                }
            }
        }
        frontier = std::move(next);
    }
    return s;
}

GroupSet coset_transversal(const Group& g, const Subgroup& h) {
    if (!is_subgroup(h.elements)) {
        throw std::invalid_argument("coset_transversal: not a subgroup");
    }
    GroupSet seen(g);
    GroupSet reps(g);
    for (elem x = 0; x < g.order(); ++x) {
        if (!seen.contains(x)) {
            reps.add(x);
            translate_into(seen, x, h.elements);
        }
    }
    return reps;
}

std::vector<Subgroup> all_subgroups(const Group& g) {
    std::vector<GroupSet> found;
    GroupSet trivial(g);
    trivial.add(g.id());
    found.push_back(trivial);
    // Grow each known subgroup by one outside element and close.
    for (std::size_t i = 0; i < found.size(); ++i) {
        GroupSet h = found[i];
        for (elem x = 0; x < g.order(); ++x) {
            if (h.contains(x)) continue;
            GroupSet gens = h;
            gens.add(x);
            GroupSet closed = subgroup_closure(gens);
            if (std::find(found.begin(), found.end(), closed) == found.end()) {
                found.push_back(std::move(closed));
            }
        }
    }
    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (auto& s : found) out.push_back(Subgroup{std::move(s), std::nullopt});
    return out;
}

}  // namespace packnu
