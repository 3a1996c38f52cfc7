#include "packnu/covering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "packnu/setalg.hpp"
#include "packnu/subgroup.hpp"

namespace packnu {

namespace {

using u64 = std::uint64_t;

u64 ceil_div(u64 a, u64 b) { return (a + b - 1) / b; }

}  // namespace

bool is_covering(const GroupSet& a, const GroupSet& b) {
    if (!(a.group() == b.group())) {
        throw std::invalid_argument("is_covering: mismatched parent groups");
    }
    return product_set(a, b) == GroupSet::full(a.group());
}

GroupSet greedy_cover(const GroupSet& a) {
    if (a.empty()) throw std::invalid_argument("greedy_cover: empty A");
    const Group& g = a.group();
    u64 n = g.order();
    GroupSet b(g);
    GroupSet covered(g);
    std::vector<u64> gains(n);
    while (covered.size() < n) {
        // Score all candidate translates; merge by (gain, lowest index).
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t x = 0; x < std::ptrdiff_t(n); ++x) {
            GroupSet ax = translate(elem(x), a);
            ax -= covered;
            gains[x] = ax.size();
        }
        elem pick = 0;
        u64 best = 0;
        for (elem x = 0; x < n; ++x) {
            if (gains[x] > best) {
                best = gains[x];
                pick = x;
            }
        }
        if (best == 0) throw std::logic_error("greedy_cover: no progress");
        b.add(pick);
        translate_into(covered, pick, a);
    }
    double bound = double(n) / double(a.size()) * (std::log(double(a.size())) + 1.0);
    if (double(b.size()) > std::ceil(bound)) {
        throw std::logic_error("greedy_cover: size exceeded the log bound");
    }
    return b;
}

namespace {

// Branch-and-bound minimum set cover by translates of A. The pivot is the
// lowest uncovered element; its covering translates are tried in order of
// decreasing fresh coverage.
class CovSolver {
public:
    CovSolver(const GroupSet& a, u64 budget)
        : g_(a.group()), n_(g_.order()), nwords_((n_ + 63) / 64),
          asize_(a.size()), budget_(budget) {
        tr_.resize(n_ * nwords_);
        for (elem x = 0; x < n_; ++x) {
            GroupSet ax = translate(x, a);
            std::copy(ax.words().begin(), ax.words().end(), tr_.begin() + u64(x) * nwords_);
        }
        GroupSet ainv = inverse_set(a);
        cand_of_pivot_.resize(n_);
        for (elem u = 0; u < n_; ++u) {
            cand_of_pivot_[u] = translate(u, ainv).elements();
        }
    }

    // Iterative deepening: try each target size s from the counting bound
    // upward; the first s admitting a cover is the optimum. Refuting small s
    // is cheap (picks_left is tight from the root), which avoids the deep
    // trees an improving search seeded at the greedy size walks through.
    ExactResult solve(const GroupSet& greedy_b) {
        best_ = greedy_b.size();
        best_witness_ = greedy_b.elements();
        excluded_.assign(n_, 0);
        for (target_ = ceil_div(n_, asize_); target_ < best_ && !exhausted_; ++target_) {
            // Covers are invariant under global translation (A(gB) = G), so
            // some optimal cover contains translate 0: fix it at the root.
            std::vector<u64> covered(tr_.begin(), tr_.begin() + nwords_);
            chosen_.assign(1, 0);
            found_ = false;
            descend(covered, 1);
            if (found_) {
                best_ = target_;
                best_witness_ = chosen_;
                break;
            }
        }
        GroupSet witness(g_);
        for (elem v : best_witness_) witness.add(v);
        return {exhausted_ ? SolveStatus::BudgetExhausted : SolveStatus::Optimal,
                best_, witness, nodes_};
    }

private:
    u64 uncovered_count(const std::vector<u64>& covered) const {
        u64 c = 0;
        for (std::size_t w = 0; w < nwords_; ++w) c += std::popcount(covered[w]);
        return n_ - c;
    }

    // Include/exclude branching on the maximum-gain translate, with unit
    // propagation: an uncovered element with no available candidate prunes
    // the node, one with a single candidate forces that pick.
    void descend(const std::vector<u64>& covered, u64 depth) {
        if (exhausted_ || found_) return;
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return;
        }
        u64 rest = uncovered_count(covered);
        if (rest == 0) {
            found_ = true;  // chosen_ holds a cover of size target_ or less
            return;
        }
        if (depth >= target_) return;
        u64 picks_left = target_ - depth;
        if (rest > picks_left * asize_) return;

        // Fresh coverage of every available translate; prune unless the
        // picks_left best gains can still cover the rest.
        gains_.resize(n_);
        for (elem x = 0; x < n_; ++x) {
            if (excluded_[x]) {
                gains_[x] = 0;
                continue;
            }
            const u64* t = &tr_[u64(x) * nwords_];
            u64 gain = 0;
            for (std::size_t w = 0; w < nwords_; ++w) gain += std::popcount(t[w] & ~covered[w]);
            gains_[x] = gain;
        }
        topk_ = gains_;
        std::size_t k = std::size_t(std::min<u64>(picks_left, n_));
        std::nth_element(topk_.begin(), topk_.begin() + (k - 1), topk_.end(),
                         std::greater<u64>());
        u64 reachable = 0;
        for (std::size_t i = 0; i < k; ++i) reachable += topk_[i];
        if (reachable < rest) return;

        // Unit propagation over uncovered elements.
        elem forced = 0;
        bool have_forced = false;
        for (std::size_t w = 0; w < nwords_ && !have_forced; ++w) {
            u64 mask = ~covered[w];
            if ((w + 1) * 64 > n_ && (n_ & 63)) mask &= (u64(1) << (n_ & 63)) - 1;
            while (mask) {
                elem u = elem((w << 6) + std::countr_zero(mask));
                mask &= mask - 1;
                u64 avail = 0;
                elem last = 0;
                for (elem b : cand_of_pivot_[u]) {
                    if (!excluded_[b]) {
                        ++avail;
                        last = b;
                        if (avail > 1) break;
                    }
                }
                if (avail == 0) return;  // u can no longer be covered
                if (avail == 1) {
                    forced = last;
                    have_forced = true;
                    break;
                }
            }
        }

        std::vector<u64> child(nwords_);
        if (have_forced) {
            const u64* t = &tr_[u64(forced) * nwords_];
            for (std::size_t w = 0; w < nwords_; ++w) child[w] = covered[w] | t[w];
            chosen_.push_back(forced);
            descend(child, depth + 1);
            if (found_) return;  // keep chosen_ as the witness
            chosen_.pop_back();
            return;
        }

        // Branch variable: maximum gain, ties to the lowest index.
        elem pick = 0;
        u64 best_gain = 0;
        for (elem x = 0; x < n_; ++x) {
            if (gains_[x] > best_gain) {
                best_gain = gains_[x];
                pick = x;
            }
        }

        const u64* t = &tr_[u64(pick) * nwords_];
        for (std::size_t w = 0; w < nwords_; ++w) child[w] = covered[w] | t[w];
        chosen_.push_back(pick);
        descend(child, depth + 1);
        if (found_) return;
        chosen_.pop_back();
        if (exhausted_) return;

        excluded_[pick] = 1;
        descend(covered, depth);
        excluded_[pick] = 0;
    }

    const Group& g_;
    u64 n_;
    std::size_t nwords_;
    u64 asize_;
    u64 budget_;
    std::vector<u64> tr_;
    std::vector<std::vector<elem>> cand_of_pivot_;
    std::vector<elem> chosen_;
    std::vector<u64> gains_, topk_;   // scratch, reused across nodes
    std::vector<char> excluded_;      // branch state, undone on backtrack
    std::vector<elem> best_witness_;
    u64 best_ = 0;
    u64 target_ = 0;
    u64 nodes_ = 0;
    bool found_ = false;
    bool exhausted_ = false;
};

}  // namespace

ExactResult exact_cov(const GroupSet& a, u64 budget) {
    if (a.empty()) throw std::invalid_argument("exact_cov: empty A");
    const Group& g = a.group();
    if (g.order() > kExactCovCap) throw std::invalid_argument("exact_cov: group order exceeds cap");
    GroupSet greedy = greedy_cover(a);
    CovSolver solver(a, budget);
    ExactResult r = solver.solve(greedy);
    if (r.status == SolveStatus::Optimal && r.value < ceil_div(g.order(), a.size())) {
        throw std::logic_error("exact_cov: value below the counting bound");
    }
    return r;
}

GroupSet middle_third_set(u64 p) {
    if (p <= 3 || !is_prime_u64(p)) {
        throw std::invalid_argument("middle_third_set: need a prime p > 3");
    }
    Group g = Group::mult_mod_p(p);
    GroupSet s(g);
    for (u64 x = 1; x < p; ++x) {
        if (p <= 3 * x && 3 * x <= 2 * p) s.add(elem(x - 1));
    }
    if (s.empty()) throw std::logic_error("middle_third_set: empty interval");
    return s;
}

MiddleThirdReport check_middle_third(u64 p, u64 budget) {
    GroupSet a = middle_third_set(p);
    ExactResult r = exact_cov(a, budget);
    if (r.status != SolveStatus::Optimal) {
        throw std::runtime_error("check_middle_third: budget exhausted");
    }
    double lower = std::log(double(p - 1)) / std::log(3.0);
    double upper = 3.0 * (std::log(double(p)) + 1.0);
    bool pass = double(r.value) >= lower && double(r.value) < upper;
    return {r.value, lower, upper, pass};
}

CovNuReport check_cov_nu_relation(const GroupSet& a, u64 budget) {
    ExactResult cov = exact_cov(ratio_set(a), budget);
    ExactResult nu = exact_nu(a, budget);
    if (cov.status != SolveStatus::Optimal || nu.status != SolveStatus::Optimal) {
        throw std::runtime_error("check_cov_nu_relation: budget exhausted");
    }
    return {cov.value, nu.value, cov.value <= nu.value};
}

std::string to_json(const CoverReport& r) {
    nlohmann::json j;
    j["group"] = r.a.group().spec_string();
    auto labels = [&](const GroupSet& s) {
        std::vector<std::string> out;
        s.for_each([&](elem x) { out.push_back(s.group().label(x)); });
        return out;
    };
    j["A"] = labels(r.a);
    j["B"] = labels(r.b);
    j["covers"] = r.covers;
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    if (r.cov_exact) j["covExact"] = *r.cov_exact;
    else j["covExact"] = nullptr;
    if (r.middle_third_lower) j["middleThirdLower"] = *r.middle_third_lower;
    if (r.middle_third_upper) j["middleThirdUpper"] = *r.middle_third_upper;
    j["nodesExplored"] = r.nodes_explored;
    return j.dump(2);
}

}  // namespace packnu
