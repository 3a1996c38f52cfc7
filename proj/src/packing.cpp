#include "packnu/packing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "packnu/setalg.hpp"

namespace packnu {

namespace {

using u64 = std::uint64_t;

u64 ceil_div(u64 a, u64 b) { return (a + b - 1) / b; }

}  // namespace

PackingCertificate is_packing(const GroupSet& a, const GroupSet& b) {
    if (a.empty()) throw std::invalid_argument("is_packing: empty A");
    if (!(a.group() == b.group())) {
        throw std::invalid_argument("is_packing: mismatched parent groups");
    }
    if (b.empty()) return {true, 0};

    GroupSet ab = product_set(a, b);
    bool direct = ab.size() == a.size() * b.size();

    // Ratio-set criterion: (A A^-1) n (B B^-1) = {1}.
    GroupSet inter = ratio_set(a) & ratio_set(b);
    bool via_ratio = inter.size() == 1 && inter.contains(a.group().id());

    if (direct != via_ratio) {
        throw std::logic_error("is_packing: direct and ratio-set criteria disagree");
    }
    return {direct, ab.size()};
}

PackingBounds packing_bounds(const GroupSet& a) {
    if (a.empty()) throw std::invalid_argument("packing_bounds: empty A");
    u64 n = a.group().order();
    u64 ratio = ratio_set(a).size();
    return {ceil_div(n, a.size() * a.size()), ceil_div(n, ratio), n / a.size()};
}

GroupSet greedy_packing(const GroupSet& a, const std::vector<elem>& order) {
    if (a.empty()) throw std::invalid_argument("greedy_packing: empty A");
    const Group& g = a.group();
    GroupSet b(g);
    GroupSet covered(g);  // A*B so far
    auto consider = [&](elem x) {
        GroupSet ax = translate(x, a);
        if (!ax.intersects(covered)) {
            b.add(x);
            covered |= ax;
        }
    };
    if (order.empty()) {
        for (elem x = 0; x < g.order(); ++x) consider(x);
    } else {
        for (elem x : order) consider(x);
    }

    // Ruzsa covering certificate.
    GroupSet aa = ratio_set(a);
    if (b.size() < ceil_div(g.order(), aa.size()) ||
        !(product_set(aa, b) == GroupSet::full(g))) {
        throw std::logic_error("greedy_packing: covering certificate failed");
    }
    return b;
}

namespace {

// Branch-and-bound maximum independent set on the Cayley graph of a
// symmetric connection set D. Neighborhoods are precomputed bit masks;
// the identity is fixed into the solution (vertex-transitivity).
class NuSolver {
public:
    NuSolver(const GroupSet& d, u64 budget, const std::vector<elem>& order)
        : g_(d.group()),
          n_(g_.order()),
          nwords_((n_ + 63) / 64),
          budget_(budget) {
        nb_.resize(n_ * nwords_);
        for (elem v = 0; v < n_; ++v) {
            GroupSet nv = translate(v, d);
            std::copy(nv.words().begin(), nv.words().end(), nb_.begin() + v * nwords_);
        }
        if (order.empty()) {
            order_.resize(n_);
            for (elem v = 0; v < n_; ++v) order_[v] = v;
        } else {
            order_ = order;
        }
        scratch_.resize((n_ + 2) * nwords_);
        color_masks_.resize(n_ * nwords_);
    }

    ExactResult solve() {
        GroupSet p0 = GroupSet::full(g_);
        p0.remove(g_.id());
        // Remove neighbors of the identity.
        std::vector<u64> p(p0.words().begin(), p0.words().end());
        const u64* nid = &nb_[u64(g_.id()) * nwords_];
        for (std::size_t w = 0; w < nwords_; ++w) p[w] &= ~nid[w];

        chosen_ = {g_.id()};
        best_ = 1;
        best_witness_ = chosen_;
        expand(p.data(), 1, 0);

        GroupSet witness(g_);
        for (elem v : best_witness_) witness.add(v);
        return {exhausted_ ? SolveStatus::BudgetExhausted : SolveStatus::Optimal,
                best_, witness, nodes_};
    }

private:
    u64 popcount(const u64* w) const {
        u64 c = 0;
        for (std::size_t i = 0; i < nwords_; ++i) c += std::popcount(w[i]);
        return c;
    }

    bool test(const u64* w, elem v) const { return (w[v >> 6] >> (v & 63)) & 1; }

    // Greedy clique cover of P (a coloring of the complement graph): an
    // independent set picks at most one vertex per clique, so the number of
    // cliques bounds what P can still contribute.
    u64 color_bound(const u64* p, u64 limit) {
        u64 classes = 0;
        u64* rest = scratch_.data() + u64(n_ + 1) * nwords_;
        std::copy(p, p + nwords_, rest);
        while (true) {
            bool any = false;
            for (std::size_t w = 0; w < nwords_ && !any; ++w) any = rest[w] != 0;
            if (!any) break;
            if (++classes >= limit) return classes;  // bound already useless
            // Build one clique greedily: candidates must be adjacent to all
            // clique members.
            u64* cand = color_masks_.data();  // reuse as scratch
            std::copy(rest, rest + nwords_, cand);
            while (true) {
                elem v = n_;
                for (std::size_t w = 0; w < nwords_; ++w) {
                    if (cand[w]) {
                        v = elem((w << 6) + std::countr_zero(cand[w]));
                        break;
                    }
                }
                if (v >= n_) break;
                rest[v >> 6] &= ~(u64(1) << (v & 63));
                const u64* nv = &nb_[u64(v) * nwords_];
                cand[v >> 6] &= ~(u64(1) << (v & 63));
                for (std::size_t w = 0; w < nwords_; ++w) cand[w] &= nv[w];
            }
        }
        return classes;
    }

    void expand(const u64* p, u64 current, std::size_t depth) {
        if (exhausted_) return;
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return;
        }
        u64 psize = popcount(p);
        if (psize == 0) {
            if (current > best_) {
                best_ = current;
                best_witness_ = chosen_;
            }
            return;
        }
        if (current + psize <= best_) return;
        if (psize > 2) {
            u64 cb = color_bound(p, best_ - current + 1);
            if (current + cb <= best_) return;
        }

        // Branch vertex: first in the configured order present in P.
        elem v = n_;
        for (elem cand : order_) {
            if (cand < n_ && test(p, cand)) {
                v = cand;
                break;
            }
        }

        u64* child = scratch_.data() + depth * nwords_;

        // Include v.
        const u64* nv = &nb_[u64(v) * nwords_];
        for (std::size_t w = 0; w < nwords_; ++w) child[w] = p[w] & ~nv[w];
        child[v >> 6] &= ~(u64(1) << (v & 63));
        chosen_.push_back(v);
        expand(child, current + 1, depth + 1);
        chosen_.pop_back();

        // Exclude v.
        for (std::size_t w = 0; w < nwords_; ++w) child[w] = p[w];
        child[v >> 6] &= ~(u64(1) << (v & 63));
        expand(child, current, depth + 1);
    }

    const Group& g_;
    u64 n_;
    std::size_t nwords_;
    u64 budget_;
    std::vector<u64> nb_;
    std::vector<elem> order_;
    std::vector<u64> scratch_;
    std::vector<u64> color_masks_;
    std::vector<elem> chosen_;
    std::vector<elem> best_witness_;
    u64 best_ = 0;
    u64 nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace

ExactResult exact_nu(const GroupSet& a, u64 budget, const std::vector<elem>& order) {
    if (a.empty()) throw std::invalid_argument("exact_nu: empty A");
    const Group& g = a.group();
    if (g.order() > kExactNuCap) throw std::invalid_argument("exact_nu: group order exceeds cap");

    GroupSet d = ratio_set(a);
    d.remove(g.id());
    if (d.empty()) {
        // |A| = 1: every subset is a packing set.
        return {SolveStatus::Optimal, g.order(), GroupSet::full(g), 0};
    }
    NuSolver solver(d, budget, order);
    ExactResult r = solver.solve();
    if (r.status == SolveStatus::Optimal) {
        PackingBounds b = packing_bounds(a);
        if (r.value < b.lower_ruzsa || r.value > b.upper_trivial) {
            throw std::logic_error("exact_nu: value escaped the bound sandwich");
        }
    }
    return r;
}

SymmetryReport check_symmetry_proposition(const GroupSet& a, const GroupSet& b) {
    PackingCertificate cert = is_packing(a, b);
    if (!cert.is_packing) {
        throw std::invalid_argument("check_symmetry_proposition: B is not a packing set for A");
    }
    const Group& g = a.group();

    GroupSet sym_b = symmetry_group(b);
    GroupSet sym_bb = symmetry_group(ratio_set(b));
    GroupSet aa = ratio_set(a);
    GroupSet sym_aa = symmetry_group(aa);

    SymmetryReport rep{true, std::nullopt, sym_b, sym_bb, sym_aa, ""};

    if (!(sym_b == sym_bb)) {
        GroupSet diff = (sym_b - sym_bb) | (sym_bb - sym_b);
        rep.pass = false;
        rep.counterexample = diff.min_element();
        rep.detail = "Sym(B) != Sym(B B^-1)";
        return rep;
    }

    // Sym(A A^-1) n (A A^-1) = (Sym(A A^-1) \ Sym(B)) u {1}, disjointly.
    GroupSet lhs = sym_aa & aa;
    GroupSet rhs = sym_aa - sym_b;
    if (rhs.contains(g.id())) {
        rep.pass = false;
        rep.counterexample = g.id();
        rep.detail = "identity not in Sym(B)";
        return rep;
    }
    rhs.add(g.id());
    if (!(lhs == rhs)) {
        GroupSet diff = (lhs - rhs) | (rhs - lhs);
        rep.pass = false;
        rep.counterexample = diff.min_element();
        rep.detail = "second identity fails";
    }
    return rep;
}

std::string to_json(const PackingReport& r) {
    nlohmann::json j;
    j["group"] = r.a.group().spec_string();
    auto labels = [&](const GroupSet& s) {
        std::vector<std::string> out;
        s.for_each([&](elem x) { out.push_back(s.group().label(x)); });
        return out;
    };
    j["A"] = labels(r.a);
    j["B"] = labels(r.b);
    j["isPacking"] = r.is_packing;
    j["productCardinality"] = r.product_cardinality;
    j["lowerWeak"] = r.bounds.lower_weak;
    j["lowerRuzsa"] = r.bounds.lower_ruzsa;
    j["upperTrivial"] = r.bounds.upper_trivial;
    if (r.nu_exact) j["nuExact"] = *r.nu_exact;
    else j["nuExact"] = nullptr;
    j["nodesExplored"] = r.nodes_explored;
    return j.dump(2);
}

}  // namespace packnu
