#include "packnu/verify.hpp"

#include <cmath>
#include <sstream>

#include "packnu/constructions.hpp"
#include "packnu/covering.hpp"
#include "packnu/packing.hpp"
#include "packnu/setalg.hpp"
#include "packnu/subgroup.hpp"

namespace packnu {

namespace {

using u64 = std::uint64_t;

u64 ceil_div(u64 a, u64 b) { return (a + b - 1) / b; }

std::vector<u64> primes_in(u64 lo, u64 hi) {
    std::vector<u64> out;
    for (u64 p = lo; p <= hi; ++p) {
        if (is_prime_u64(p)) out.push_back(p);
    }
    return out;
}

ClaimResult claim(std::string name, bool pass, std::string detail = "") {
    return {std::move(name), pass, std::move(detail)};
}

}  // namespace

std::vector<Group> test_matrix(u64 max_order) {
    std::vector<Group> out;
    for (u64 n = 2; n <= max_order; ++n) out.push_back(Group::cyclic(n));
    for (u64 n = 1; 2 * n <= max_order; ++n) out.push_back(Group::product({2, n}));
    for (u64 n = 1; 4 * n <= max_order; ++n) out.push_back(Group::product({2, 2, n}));
    for (u64 p = 2; p - 1 <= max_order; ++p) {
        if (is_prime_u64(p) && p >= 3) out.push_back(Group::mult_mod_p(p));
    }
    return out;
}

GroupSet random_subset(const Group& g, std::mt19937_64& rng, bool require_nonempty) {
    GroupSet s(g);
    do {
        for (elem x = 0; x < g.order(); ++x) {
            if (rng() & 1) s.add(x);
            else s.remove(x);
        }
    } while (require_nonempty && s.empty());
    return s;
}

namespace claims {

ClaimResult packing_characterization(u64 max_order, int pairs) {
    std::mt19937_64 rng(1);
    for (const Group& g : test_matrix(max_order)) {
        for (int i = 0; i < pairs; ++i) {
            GroupSet a = random_subset(g, rng, true);
            GroupSet b = random_subset(g, rng, false);
            try {
                is_packing(a, b);  // throws if the two criteria disagree
            } catch (const std::logic_error& e) {
                return claim("packing-characterization", false,
                             g.spec_string() + ": " + e.what());
            }
        }
    }
    return claim("packing-characterization", true);
}

ClaimResult bound_sandwich(u64 max_order, int sets) {
    std::mt19937_64 rng(2);
    for (const Group& g : test_matrix(max_order)) {
        for (int i = 0; i < sets; ++i) {
            GroupSet a = random_subset(g, rng, true);
            PackingBounds pb = packing_bounds(a);
            u64 greedy = greedy_packing(a).size();
            ExactResult nu = exact_nu(a);
            if (nu.status != SolveStatus::Optimal) {
                return claim("bound-sandwich", false, g.spec_string() + ": budget exhausted");
            }
            bool ok = pb.lower_weak <= pb.lower_ruzsa && pb.lower_ruzsa <= greedy &&
                      greedy <= nu.value && nu.value <= pb.upper_trivial;
            if (!ok) {
                std::ostringstream d;
                d << g.spec_string() << " |A|=" << a.size() << ": " << pb.lower_weak << " <= "
                  << pb.lower_ruzsa << " <= " << greedy << " <= " << nu.value << " <= "
                  << pb.upper_trivial << " violated";
                return claim("bound-sandwich", false, d.str());
            }
        }
    }
    return claim("bound-sandwich", true);
}

ClaimResult subgroup_exactness(u64 max_order) {
    for (const Group& g : test_matrix(max_order)) {
        for (const Subgroup& h : all_subgroups(g)) {
            u64 expected = g.order() / h.order();
            ExactResult nu = exact_nu(h.elements);
            ExactResult cov = exact_cov(h.elements);
            if (nu.status != SolveStatus::Optimal || nu.value != expected ||
                cov.status != SolveStatus::Optimal || cov.value != expected) {
                std::ostringstream d;
                d << g.spec_string() << " |H|=" << h.order() << ": nu=" << nu.value
                  << " cov=" << cov.value << " expected " << expected;
                return claim("subgroup-exactness", false, d.str());
            }
        }
    }
    return claim("subgroup-exactness", true);
}

ClaimResult tightness_construction(const std::vector<u64>& orders) {
    for (u64 n : orders) {
        Group g = Group::cyclic(n);
        for (const Subgroup& h : all_subgroups(g)) {
            u64 k = h.order();
            if (k < 4) continue;
            // A cyclic group's subgroups are cyclic; n/k generates order k.
            elem gen = elem(n / k);
            TightnessSpec spec = tightness_set(g, gen);
            u64 d = spec.d;
            if (!(ratio_set(spec.a) == h.elements) || spec.a.size() >= 2 * d) {
                return claim("tightness-construction", false,
                             g.spec_string() + " k=" + std::to_string(k) + ": shape violated");
            }
            ExactResult nu = exact_nu(spec.a);
            double weak16 = 16.0 * double(n) / double(spec.a.size() * spec.a.size());
            bool ok = nu.status == SolveStatus::Optimal && nu.value <= n / k &&
                      double(n / k) < weak16;
            if (!ok) {
                std::ostringstream dd;
                dd << g.spec_string() << " k=" << k << ": nu=" << nu.value << " |G|/k=" << n / k
                   << " 16|G|/|A|^2=" << weak16;
                return claim("tightness-construction", false, dd.str());
            }
        }
    }
    return claim("tightness-construction", true);
}

ClaimResult graded_construction(u64 n, elem gen) {
    Group g = Group::cyclic(n);
    u64 k = element_order(g, gen);
    for (u64 m = 1; m <= k; ++m) {
        for (u64 m2 = 1; m * m2 <= k; ++m2) {
            GradedSpec spec = graded_set(g, gen, m, m2);
            if (spec.ratio_cardinality != std::min(2 * m * m2 - 1, k)) {
                return claim("graded-construction", false, "ratio cardinality mismatch");
            }
            ExactResult nu = exact_nu(spec.a);
            u64 expected = (n / k) * (k / (m * m2));
            if (nu.status != SolveStatus::Optimal || nu.value != expected) {
                std::ostringstream d;
                d << "m=" << m << " m'=" << m2 << ": nu=" << nu.value << " expected " << expected;
                return claim("graded-construction", false, d.str());
            }
        }
    }
    return claim("graded-construction", true);
}

ClaimResult interval_ratio_totient(u64 p_max, bool big_check) {
    for (u64 p : primes_in(5, p_max)) {
        for (u64 lambda = 1; lambda * lambda < p; ++lambda) {
            RatioCountReport r = ratio_count_checks(p, lambda);
            if (!r.match) {
                return claim("interval-ratio-totient", false,
                             "p=" + std::to_string(p) + " lambda=" + std::to_string(lambda));
            }
        }
    }
    if (big_check) {
        RatioCountReport r = ratio_count_checks(1'000'003, 1000);
        if (!r.match || r.density < 0.595 || r.density > 0.620) {
            std::ostringstream d;
            d << "p=1000003 lambda=1000: density " << r.density << " outside [0.595, 0.620]";
            return claim("interval-ratio-totient", false, d.str());
        }
    }
    return claim("interval-ratio-totient", true);
}

ClaimResult full_ratio_threshold(u64 p_max) {
    for (u64 p : primes_in(5, p_max)) {
        Group g = Group::mult_mod_p(p);
        GroupSet full = GroupSet::full(g);
        for (u64 lambda = 1; lambda <= p - 1; ++lambda) {
            IntervalSpec spec = interval_set(p, lambda);
            bool is_full = ratio_set(spec.a) == full;
            bool threshold = 2 * lambda >= p + 1;
            if (is_full != threshold) {
                return claim("full-ratio-threshold", false,
                             "p=" + std::to_string(p) + " lambda=" + std::to_string(lambda));
            }
        }
    }
    return claim("full-ratio-threshold", true);
}

ClaimResult prime_interval_packing(u64 p_lo, u64 p_hi, bool inject_fault) {
    SieveTables sieve = build_sieve(std::max<u64>(p_hi / 2 + 1, 2));
    double min_constant = 1e300;
    for (u64 p : primes_in(p_lo, p_hi)) {
        for (u64 lambda = 2; 100 * lambda * lambda <= 81 * p; ++lambda) {
            GroupSet b = prime_interval_set(p, lambda, &sieve);
            u64 m = p / lambda;
            u64 expected = sieve.prime_count(m) - sieve.prime_count(lambda);
            if (b.size() != expected) {
                return claim("prime-interval-packing", false,
                             "p=" + std::to_string(p) + " lambda=" + std::to_string(lambda) +
                                 ": |B| != pi(p/lambda) - pi(lambda)");
            }
            if (2 * lambda * lambda <= p && b.empty()) {
                return claim("prime-interval-packing", false, "empty B in Bertrand regime");
            }
            IntervalSpec a = interval_set(p, lambda);
            if (inject_fault && 2 * lambda * lambda <= p && !b.empty()) {
                // Negative control: doubling a member of B forces a collision.
                elem bad = b.min_element();
                u64 doubled = 2 * (u64(bad) + 1);
                if (doubled <= m) {
                    GroupSet corrupted = b;
                    corrupted.add(elem(doubled - 1));
                    if (!is_packing(a.a, corrupted).is_packing) {
                        return claim("prime-interval-packing", false,
                                     "injected fault detected at p=" + std::to_string(p) +
                                         " lambda=" + std::to_string(lambda) + ": B u {" +
                                         std::to_string(doubled) + "} is not a packing set");
                    }
                }
            }
            if (!b.empty()) {
                PackingCertificate cert = is_packing(a.a, b);
                if (!cert.is_packing) {
                    return claim("prime-interval-packing", false, "certificate failed");
                }
                double c = double(b.size()) * double(lambda) * std::log(double(p)) / double(p);
                min_constant = std::min(min_constant, c);
            }
        }
    }
    return claim("prime-interval-packing", true,
                 "min |B| lambda log p / p = " + std::to_string(min_constant));
}

ClaimResult rough_interval(u64 p_lo, u64 p_hi) {
    SieveTables sieve = build_sieve(std::max<u64>(p_hi / 2 + 1, 2));
    for (u64 p : primes_in(p_lo, p_hi)) {
        for (u64 lambda = 2; 100 * lambda * lambda <= 81 * p; ++lambda) {
            GroupSet rough = rough_interval_set(p, lambda, &sieve);
            GroupSet primes = prime_interval_set(p, lambda, &sieve);
            if (!primes.is_subset_of(rough)) {
                return claim("rough-interval", false,
                             "p=" + std::to_string(p) + " lambda=" + std::to_string(lambda) +
                                 ": prime set escapes rough set");
            }
        }
    }
    return claim("rough-interval", true);
}

ClaimResult buchstab_function() {
    BuchstabGrid grid(12.0, 1e-3);
    for (int i = 0; i <= 1000; i += 50) {
        double u = 1.0 + i * 1e-3;
        if (std::abs(grid(u) - 1.0 / u) > 1e-15) {
            return claim("buchstab-function", false, "exact branch violated");
        }
    }
    double w10 = grid(10.0);
    if (std::abs(w10 - kExpMinusGamma) > 1e-5) {
        return claim("buchstab-function", false,
                     "omega(10) = " + std::to_string(w10) + " too far from e^-gamma");
    }
    // Closed form on [2, 3]: u omega(u) = 1 + log(u - 1).
    double ref = (1.0 + std::log(1.5)) / 2.5;
    double prev = 1e300;
    for (double h : {1e-2, 5e-3, 2.5e-3}) {
        double err = std::abs(buchstab_omega(2.5, h) - ref);
        if (err > prev) {
            return claim("buchstab-function", false, "refinement not monotone at u=2.5");
        }
        prev = err;
    }
    return claim("buchstab-function", true);
}

ClaimResult packing_symmetries(u64 max_order, int random_sets) {
    std::mt19937_64 rng(3);
    for (const Group& g : test_matrix(max_order)) {
        std::vector<GroupSet> as;
        for (int i = 0; i < random_sets; ++i) as.push_back(random_subset(g, rng, true));
        for (elem x = 0; x < g.order(); ++x) as.push_back(GroupSet::of(g, {x}));
        for (const Subgroup& h : all_subgroups(g)) as.push_back(h.elements);
        for (const GroupSet& a : as) {
            ExactResult nu = exact_nu(a);
            if (nu.status != SolveStatus::Optimal) {
                return claim("packing-symmetries", false, "budget exhausted");
            }
            SymmetryReport rep = check_symmetry_proposition(a, nu.witness);
            if (!rep.pass) {
                std::ostringstream d;
                d << g.spec_string() << " |A|=" << a.size() << ": " << rep.detail;
                if (rep.counterexample) d << " at " << g.label(*rep.counterexample);
                return claim("packing-symmetries", false, d.str());
            }
        }
    }
    return claim("packing-symmetries", true);
}

ClaimResult covering_bounds(u64 max_order, int random_sets, u64 interval_p_max) {
    std::mt19937_64 rng(4);
    for (const Group& g : test_matrix(max_order)) {
        for (int i = 0; i < random_sets; ++i) {
            GroupSet a = random_subset(g, rng, true);
            GroupSet b = greedy_cover(a);
            double upper =
                double(g.order()) / double(a.size()) * (std::log(double(a.size())) + 1.0);
            if (double(b.size()) > std::ceil(upper)) {
                return claim("covering-bounds", false, g.spec_string() + ": greedy over bound");
            }
            ExactResult cov = exact_cov(a);
            if (cov.status != SolveStatus::Optimal ||
                cov.value < ceil_div(g.order(), a.size())) {
                return claim("covering-bounds", false, g.spec_string() + ": cov below bound");
            }
            CovNuReport rel = check_cov_nu_relation(a);
            if (!rel.pass) {
                return claim("covering-bounds", false,
                             g.spec_string() + ": cov(A A^-1) > nu(A)");
            }
        }
    }
    // Interval improvement in F_p^*: cov < 2p/lambda.
    for (u64 p : primes_in(5, interval_p_max)) {
        for (u64 lambda : {ceil_div(p, 6), ceil_div(p, 4), ceil_div(p, 3), ceil_div(p, 2), p - 1}) {
            if (lambda < 1 || lambda > p - 1) continue;
            IntervalSpec spec = interval_set(p, lambda);
            ExactResult cov = exact_cov(spec.a);
            if (cov.status != SolveStatus::Optimal ||
                double(cov.value) >= 2.0 * double(p) / double(lambda)) {
                return claim("covering-bounds", false,
                             "p=" + std::to_string(p) + " lambda=" + std::to_string(lambda) +
                                 ": cov=" + std::to_string(cov.value) + " >= 2p/lambda");
            }
        }
    }
    return claim("covering-bounds", true);
}

ClaimResult middle_third_covering(u64 p_max) {
    for (u64 p : primes_in(5, p_max)) {
        MiddleThirdReport rep = check_middle_third(p);
        if (!rep.pass) {
            std::ostringstream d;
            d << "p=" << p << ": cov=" << rep.cov << " outside [" << rep.lower << ", "
              << rep.upper << ")";
            return claim("middle-third-covering", false, d.str());
        }
    }
    return claim("middle-third-covering", true);
}

}  // namespace claims

std::vector<ClaimResult> run_claim_suite(const VerifyOptions& opt) {
    std::vector<ClaimResult> out;
    u64 mo = opt.fast ? 16 : 24;
    out.push_back(claims::packing_characterization(mo, opt.fast ? 20 : 50));
    out.push_back(claims::bound_sandwich(mo, opt.fast ? 10 : 20));
    out.push_back(claims::subgroup_exactness(opt.fast ? 12 : 16));
    out.push_back(claims::tightness_construction(opt.fast ? std::vector<u64>{16, 24}
                                                          : std::vector<u64>{16, 24, 36, 48}));
    out.push_back(claims::graded_construction(60, 5));
    out.push_back(claims::interval_ratio_totient(opt.fast ? 199 : 1009, !opt.fast));
    out.push_back(claims::full_ratio_threshold(opt.fast ? 47 : 97));
    out.push_back(claims::prime_interval_packing(29, opt.fast ? 499 : 2003, opt.inject_fault));
    out.push_back(claims::rough_interval(29, opt.fast ? 499 : 2003));
    out.push_back(claims::buchstab_function());
    out.push_back(claims::packing_symmetries(opt.fast ? 12 : 20, opt.fast ? 5 : 10));
    out.push_back(claims::covering_bounds(opt.fast ? 10 : 16, opt.fast ? 3 : 5,
                                          opt.fast ? 31 : 61));
    out.push_back(claims::middle_third_covering(opt.fast ? 61 : 199));
    return out;
}

}  // namespace packnu
