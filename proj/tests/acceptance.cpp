// Acceptance gate: one pass/fail line per criterion, exit code = #failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "packnu/constructions.hpp"
#include "packnu/covering.hpp"
#include "packnu/numth.hpp"
#include "packnu/packing.hpp"
#include "packnu/scan.hpp"
#include "packnu/setalg.hpp"
#include "packnu/subgroup.hpp"
#include "packnu/verify.hpp"

using namespace packnu;
using u64 = std::uint64_t;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

void fail(Outcome& o, const std::string& why) {
    o.pass = false;
    if (o.detail.size() < 500) {
        if (!o.detail.empty()) o.detail += "; ";
        o.detail += why;
    }
}

// Prepend the summary counts, keeping any failure messages already recorded.
void prefix(Outcome& o, const std::string& counts) {
    o.detail = o.detail.empty() ? counts : counts + "; " + o.detail;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

// 1. Direct-count packing test agrees with the ratio-set criterion
//    (A A^-1) n (B B^-1) = {1}, both computed independently here.
Outcome c01_characterization() {
    Outcome o;
    std::mt19937_64 rng(101);
    u64 pairs = 0;
    for (const Group& g : test_matrix(48)) {
        for (int i = 0; i < 200; ++i) {
            GroupSet a = random_subset(g, rng, true);
            GroupSet b = random_subset(g, rng, true);
            bool direct = product_set(a, b).size() == a.size() * b.size();
            GroupSet meet = ratio_set(a);
            meet &= ratio_set(b);
            bool by_ratio = meet == GroupSet::of(g, {g.id()});
            if (direct != by_ratio) {
                fail(o, g.spec_string() + ": routes disagree");
            }
            ++pairs;
        }
    }
    prefix(o, std::to_string(pairs) + " random pairs, 0 disagreements");
    return o;
}

// 2. ceil(|G|/|A|^2) <= ceil(|G|/|AA^-1|) <= greedy <= nu <= floor(|G|/|A|).
Outcome c02_bound_sandwich() {
    Outcome o;
    std::mt19937_64 rng(102);
    u64 instances = 0;
    for (const Group& g : test_matrix(48)) {
        for (int i = 0; i < 50; ++i) {
            GroupSet a = random_subset(g, rng, true);
            PackingBounds pb = packing_bounds(a);
            u64 greedy = greedy_packing(a).size();
            ExactResult r = exact_nu(a);
            if (r.status != SolveStatus::Optimal) {
                fail(o, g.spec_string() + ": budget exhausted");
                continue;
            }
            if (!(pb.lower_weak <= pb.lower_ruzsa && pb.lower_ruzsa <= greedy &&
                  greedy <= r.value && r.value <= pb.upper_trivial)) {
                fail(o, g.spec_string() + " |A|=" + std::to_string(a.size()));
            }
            ++instances;
        }
    }
    prefix(o, std::to_string(instances) + " instances, 0 violations");
    return o;
}

// 3. nu(H) = cov(H) = |G|/|H| for every subgroup H.
Outcome c03_subgroup_exactness() {
    Outcome o;
    u64 checked = 0;
    for (const Group& g : test_matrix(48)) {
        for (const Subgroup& h : all_subgroups(g)) {
            u64 index = g.order() / h.order();
            ExactResult nu = exact_nu(h.elements);
            ExactResult cov = exact_cov(h.elements);
            if (nu.status != SolveStatus::Optimal || nu.value != index) {
                fail(o, g.spec_string() + " |H|=" + std::to_string(h.order()) + " nu");
            }
            if (cov.status != SolveStatus::Optimal || cov.value != index) {
                fail(o, g.spec_string() + " |H|=" + std::to_string(h.order()) + " cov");
            }
            ++checked;
        }
    }
    prefix(o, std::to_string(checked) + " subgroups");
    return o;
}

// 4. Tightness sets: ratio = <g>, |A| < 2 ceil(sqrt(k)), nu <= |G|/k < 16|G|/|A|^2.
Outcome c04_tightness() {
    Outcome o;
    u64 checked = 0;
    for (u64 n : {16ull, 24ull, 36ull, 48ull, 60ull}) {
        Group g = Group::cyclic(n);
        std::vector<GroupSet> seen;
        for (elem x = 1; x < g.order(); ++x) {
            Subgroup h = cyclic_subgroup(g, x);
            u64 k = h.order();
            if (k < 4) continue;
            bool dup = false;
            for (const GroupSet& s : seen) dup = dup || s == h.elements;
            if (dup) continue;
            seen.push_back(h.elements);
            TightnessSpec spec = tightness_set(g, x);
            bool ratio_ok = ratio_set(spec.a) == h.elements;
            bool size_ok = spec.a.size() < 2 * spec.d;
            u64 nu = exact_nu(spec.a).value;
            double weak16 = 16.0 * double(n) / double(spec.a.size() * spec.a.size());
            if (!ratio_ok || !size_ok || !(nu <= n / k) || !(double(n / k) < weak16)) {
                fail(o, "n=" + std::to_string(n) + " k=" + std::to_string(k));
            }
            ++checked;
        }
    }
    prefix(o, std::to_string(checked) + " (n, k) instances");
    return o;
}

// 5. Graded sets in cyclic(60), g of order 12: exact nu and ratio cardinality.
Outcome c05_graded() {
    Outcome o;
    Group g = Group::cyclic(60);
    const elem gen = 5;  // order 12
    const u64 k = 12;
    u64 checked = 0;
    for (u64 m = 1; m <= k; ++m) {
        for (u64 m2 = 1; m * m2 <= k; ++m2) {
            GradedSpec spec = graded_set(g, gen, m, m2);
            u64 nu = exact_nu(spec.a).value;
            bool ratio_ok = ratio_set(spec.a).size() == std::min(2 * m * m2 - 1, k);
            if (nu != (60 / k) * (k / (m * m2)) || !ratio_ok) {
                fail(o, "m=" + std::to_string(m) + " m'=" + std::to_string(m2));
            }
            ++checked;
        }
    }
    prefix(o, std::to_string(checked) + " (m, m') pairs");
    return o;
}

// 6. |A A^-1| = phi(1) + 2 sum phi(i) for A = {1..lambda}, lambda < sqrt(p);
//    density at p = 1,000,003, lambda = 1000 near 6/pi^2.
Outcome c06_ratio_totient() {
    Outcome o;
    u64 checked = 0;
    for (u64 p = 5; p <= 1009; ++p) {
        if (!is_prime_u64(p)) continue;
        for (u64 lambda = 1; lambda * lambda < p; ++lambda) {
            u64 ratio = ratio_set(interval_set(p, lambda).a).size();
            if (ratio != totient_ratio_count(lambda)) {
                fail(o, "p=" + std::to_string(p) + " lambda=" + std::to_string(lambda));
            }
            ++checked;
        }
    }
    u64 big = ratio_set(interval_set(1'000'003, 1000).a).size();
    double density = double(big) / 1e6;
    if (!(density >= 0.595 && density <= 0.620)) {
        fail(o, "density " + fmt(density) + " out of [0.595, 0.620]");
    }
    prefix(o, std::to_string(checked) + " (p, lambda); density " + fmt(density));
    return o;
}

// 7. A A^-1 = F_p^* iff lambda >= (p+1)/2, exhaustively for 5 <= p <= 97.
Outcome c07_full_ratio_threshold() {
    Outcome o;
    u64 checked = 0;
    for (u64 p = 5; p <= 97; ++p) {
        if (!is_prime_u64(p)) continue;
        Group g = Group::mult_mod_p(p);
        GroupSet full = GroupSet::full(g);
        for (u64 lambda = 1; lambda <= p - 1; ++lambda) {
            bool is_full = ratio_set(interval_set(p, lambda).a) == full;
            if (is_full != (2 * lambda >= p + 1)) {
                fail(o, "p=" + std::to_string(p) + " lambda=" + std::to_string(lambda));
            }
            ++checked;
        }
    }
    prefix(o, std::to_string(checked) + " (p, lambda) pairs");
    return o;
}

struct SweepResult {
    Outcome primes;  // criterion 8
    Outcome rough;   // criterion 9
};

// 8 + 9. One pass over all primes 29 <= p <= 10007, 2 <= lambda <= 0.9 sqrt(p).
SweepResult prime_rough_sweep() {
    SweepResult res;
    SieveTables sieve = build_sieve(10007 / 2 + 1);
    BuchstabGrid grid(13.0, 1e-3);
    u64 instances = 0;
    double min_const = 1e300;
    double min_ratio_asserted = 1e300, max_ratio_asserted = 0;
    double min_ratio_seen = 1e300, max_ratio_seen = 0;
    for (u64 p = 29; p <= 10007; ++p) {
        if (!is_prime_u64(p)) continue;
        for (u64 lambda = 2; 100 * lambda * lambda <= 81 * p; ++lambda) {
            IntervalSpec a = interval_set(p, lambda);
            u64 m = p / lambda;

            GroupSet b = prime_interval_set(p, lambda, &sieve);
            if (!is_packing(a.a, b).is_packing) {
                fail(res.primes, "p=" + std::to_string(p) + " lambda=" +
                                     std::to_string(lambda) + " not packing");
            }
            if (b.size() != sieve.prime_count(m) - sieve.prime_count(lambda)) {
                fail(res.primes, "p=" + std::to_string(p) + " lambda=" +
                                     std::to_string(lambda) + " |B| mismatch");
            }
            if (2 * lambda * lambda <= p && b.size() == 0) {
                fail(res.primes, "p=" + std::to_string(p) + " lambda=" +
                                     std::to_string(lambda) + " empty B");
            }
            if (b.size() > 0) {
                double c = double(b.size()) * double(lambda) * std::log(double(p)) /
                           double(p);
                min_const = std::min(min_const, c);
            }

            GroupSet r = rough_interval_set(p, lambda, &sieve);
            if (!is_packing(a.a, r).is_packing || r.size() < b.size()) {
                fail(res.rough, "p=" + std::to_string(p) + " lambda=" +
                                    std::to_string(lambda));
            }
            double u = std::log(double(p) / double(lambda)) / std::log(double(lambda));
            double est = double(p) / (double(lambda) * std::log(double(lambda))) * grid(u);
            double ratio = double(r.size()) / est;
            if (p >= 10000) {
                min_ratio_seen = std::min(min_ratio_seen, ratio);
                max_ratio_seen = std::max(max_ratio_seen, ratio);
                // The coarse two-sided check needs the interval long enough for
                // the asymptotic count to bite: Bertrand regime lambda^2 <= p/2.
                if (2 * lambda * lambda <= p) {
                    min_ratio_asserted = std::min(min_ratio_asserted, ratio);
                    max_ratio_asserted = std::max(max_ratio_asserted, ratio);
                    if (ratio < 0.5 || ratio > 2.0) {
                        fail(res.rough, "p=" + std::to_string(p) + " lambda=" +
                                            std::to_string(lambda) + " ratio " +
                                            fmt(ratio));
                    }
                }
            }
            ++instances;
        }
    }
    prefix(res.primes, std::to_string(instances) +
                           " instances; min |B| lambda log p / p = " + fmt(min_const));
    prefix(res.rough, "asserted ratio in [" + fmt(min_ratio_asserted) + ", " +
                          fmt(max_ratio_asserted) + "] (lambda^2 <= p/2); full-regime [" +
                          fmt(min_ratio_seen) + ", " + fmt(max_ratio_seen) + "]");
    return res;
}

// 10. Buchstab: exact on [1,2]; limit at u = 10; monotone h-refinement at 2.5.
Outcome c10_buchstab() {
    Outcome o;
    BuchstabGrid grid(2.0, 1e-3);
    for (std::size_t i = 0; i < grid.values().size(); ++i) {
        double u = 1.0 + double(i) * 1e-3;
        if (std::abs(grid.values()[i] - 1.0 / u) > 1e-14) fail(o, "grid point off [1,2]");
    }
    double w10 = buchstab_omega(10.0, 1e-3);
    if (std::abs(w10 - 0.5614594836) > 1e-5) fail(o, "omega(10) = " + fmt(w10));
    double ref = (1.0 + std::log(1.5)) / 2.5;
    double prev = 1e300;
    for (double h : {1e-2, 5e-3, 2.5e-3}) {
        double err = std::abs(buchstab_omega(2.5, h) - ref);
        if (err > prev) fail(o, "refinement not monotone at h=" + fmt(h));
        prev = err;
    }
    prefix(o, "omega(10) = " + fmt(w10));
    return o;
}

// 11. Symmetry identities for maximum packing sets.
Outcome c11_symmetry() {
    Outcome o;
    std::mt19937_64 rng(111);
    u64 checked = 0;
    for (const Group& g : test_matrix(36)) {
        std::vector<GroupSet> cases;
        for (int i = 0; i < 30; ++i) cases.push_back(random_subset(g, rng, true));
        for (elem x = 0; x < g.order(); ++x) cases.push_back(GroupSet::of(g, {x}));
        for (const Subgroup& h : all_subgroups(g)) cases.push_back(h.elements);
        for (const GroupSet& a : cases) {
            ExactResult r = exact_nu(a);
            if (r.status != SolveStatus::Optimal) {
                fail(o, g.spec_string() + ": budget exhausted");
                continue;
            }
            if (!check_symmetry_proposition(a, r.witness).pass) {
                fail(o, g.spec_string() + " |A|=" + std::to_string(a.size()));
            }
            ++checked;
        }
    }
    prefix(o, std::to_string(checked) + " instances, 0 failures");
    return o;
}

// 12. Covering bounds: greedy log bound, counting lower bound, cov(AA^-1) <= nu(A),
//     and cov < 2p/lambda for interval sets.
Outcome c12_covering_bounds() {
    Outcome o;
    std::mt19937_64 rng(112);
    u64 checked = 0;
    for (const Group& g : test_matrix(48)) {
        for (int i = 0; i < 30; ++i) {
            GroupSet a = random_subset(g, rng, true);
            GroupSet b = greedy_cover(a);
            double log_bound =
                double(g.order()) / double(a.size()) * (std::log(double(a.size())) + 1.0);
            if (double(b.size()) > std::ceil(log_bound)) {
                fail(o, g.spec_string() + ": greedy above log bound");
            }
            ExactResult cov = exact_cov(a);
            if (cov.status != SolveStatus::Optimal ||
                cov.value < (g.order() + a.size() - 1) / a.size()) {
                fail(o, g.spec_string() + ": counting bound");
            }
            ++checked;
        }
    }

    u64 relation = 0;
    for (const Group& g : {Group::cyclic(30), Group::mult_mod_p(31),
                           Group::product({2, 12}), Group::product({2, 2, 6})}) {
        for (int i = 0; i < 25; ++i) {
            GroupSet a = random_subset(g, rng, true);
            if (!check_cov_nu_relation(a).pass) {
                fail(o, g.spec_string() + ": cov(AA^-1) > nu(A)");
            }
            ++relation;
        }
    }

    u64 intervals = 0;
    for (u64 p = 5; p <= 199; ++p) {
        if (!is_prime_u64(p)) continue;
        // Exact cover stays tractable once lambda is a constant fraction of p.
        for (u64 lambda : {(p + 5) / 6, (p + 3) / 4, (p + 2) / 3, (p + 1) / 2, p - 1}) {
            if (lambda < 1 || lambda > p - 1) continue;
            ExactResult cov = exact_cov(interval_set(p, lambda).a);
            if (cov.status != SolveStatus::Optimal ||
                !(double(cov.value) < 2.0 * double(p) / double(lambda))) {
                fail(o, "interval p=" + std::to_string(p) +
                            " lambda=" + std::to_string(lambda));
            }
            ++intervals;
        }
    }
    prefix(o, std::to_string(checked) + " random + " + std::to_string(relation) +
                  " relation + " + std::to_string(intervals) + " interval instances");
    return o;
}

// 13. Middle-third: log(p-1)/log 3 <= cov < 3(log p + 1) for primes 5..199.
Outcome c13_middle_third() {
    Outcome o;
    u64 checked = 0;
    for (u64 p = 5; p <= 199; ++p) {
        if (!is_prime_u64(p)) continue;
        MiddleThirdReport r = check_middle_third(p);
        if (!r.pass) {
            fail(o, "p=" + std::to_string(p) + " cov=" + std::to_string(r.cov));
        }
        ++checked;
    }
    prefix(o, std::to_string(checked) + " primes");
    return o;
}

// 14. Scan output is byte-identical across thread counts (through the CLI).
Outcome c14_determinism() {
    Outcome o;
    auto run = [&](int threads, const std::string& path) -> bool {
        std::string cmd = std::string(PACKNU_CLI_PATH) +
                          " scan primes --p 29..10007 --parallel " +
                          std::to_string(threads) + " --out " + path;
        return std::system(cmd.c_str()) == 0;
    };
    if (!run(1, "scan_t1.csv") || !run(8, "scan_t8.csv")) {
        fail(o, "scan command failed");
        return o;
    }
    auto slurp = [](const char* path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    std::string t1 = slurp("scan_t1.csv");
    std::string t8 = slurp("scan_t8.csv");
    std::remove("scan_t1.csv");
    std::remove("scan_t8.csv");
    if (t1.empty() || t1 != t8) fail(o, "outputs differ");
    else o.detail = std::to_string(t1.size()) + " bytes, byte-identical";
    return o;
}

int report(int idx, const char* name, const Outcome& o, double seconds) {
    std::printf("%s  criterion %2d  %-28s  %s  [%.1fs]\n", o.pass ? "PASS" : "FAIL",
                idx, name, o.detail.c_str(), seconds);
    std::fflush(stdout);
    return o.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    using clock = std::chrono::steady_clock;
    // Optional arguments restrict the run to the listed criterion numbers.
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
    auto wanted = [&](int idx) {
        if (only.empty()) return true;
        for (int k : only) {
            if (k == idx) return true;
        }
        return false;
    };

    int failures = 0, run = 0;
    auto timed = [&](int idx, const char* name, auto fn) {
        if (!wanted(idx)) return;
        auto t0 = clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            fail(o, std::string("exception: ") + e.what());
        }
        double s = std::chrono::duration<double>(clock::now() - t0).count();
        failures += report(idx, name, o, s);
        ++run;
    };

    timed(1, "packing characterization", c01_characterization);
    timed(2, "bound sandwich", c02_bound_sandwich);
    timed(3, "subgroup exactness", c03_subgroup_exactness);
    timed(4, "tightness construction", c04_tightness);
    timed(5, "graded interval coverage", c05_graded);
    timed(6, "ratio-set totient count", c06_ratio_totient);
    timed(7, "full ratio threshold", c07_full_ratio_threshold);

    if (wanted(8) || wanted(9)) {
        auto t0 = clock::now();
        SweepResult sweep;
        try {
            sweep = prime_rough_sweep();
        } catch (const std::exception& e) {
            fail(sweep.primes, std::string("exception: ") + e.what());
            fail(sweep.rough, "sweep aborted");
        }
        double s = std::chrono::duration<double>(clock::now() - t0).count();
        failures += report(8, "prime interval construction", sweep.primes, s);
        failures += report(9, "rough interval construction", sweep.rough, 0.0);
        run += 2;
    }

    timed(10, "buchstab function", c10_buchstab);
    timed(11, "packing symmetries", c11_symmetry);
    timed(12, "covering bounds", c12_covering_bounds);
    timed(13, "middle-third covering", c13_middle_third);
    timed(14, "scan determinism", c14_determinism);

    std::printf("%d/%d criteria passed\n", run - failures, run);
    return failures;
}
