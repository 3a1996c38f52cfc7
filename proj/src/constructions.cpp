#include "packnu/constructions.hpp"

#include <cmath>
#include <stdexcept>

#include "packnu/packing.hpp"
#include "packnu/setalg.hpp"

namespace packnu {

namespace {

using u64 = std::uint64_t;

u64 ceil_sqrt(u64 k) {
    u64 d = u64(std::sqrt(double(k)));
    while (d * d < k) ++d;
    while (d > 1 && (d - 1) * (d - 1) >= k) --d;
    return d;
}

elem power(const Group& g, elem x, u64 e) {
    elem r = g.id();
    for (u64 i = 0; i < e; ++i) r = g.op(r, x);
    return r;
}

}  // namespace

std::pair<GroupSet, GroupSet> subgroup_transversal_pair(const Group& g, const Subgroup& h) {
    GroupSet a = h.elements;
    GroupSet b = coset_transversal(g, h);
    PackingCertificate cert = is_packing(a, b);
    if (!cert.is_packing || cert.product_cardinality != g.order()) {
        throw std::logic_error("subgroup_transversal_pair: tiling certificate failed");
    }
    return {std::move(a), std::move(b)};
}

TightnessSpec tightness_set(const Group& grp, elem g) {
    Subgroup h = cyclic_subgroup(grp, g);
    u64 k = h.order();
    if (k < 2) throw std::invalid_argument("tightness_set: generator order must be >= 2");
    u64 d = ceil_sqrt(k);

    GroupSet a1(grp), a2(grp);
    for (u64 i = 1; i <= d; ++i) a1.add(power(grp, g, i));
    for (u64 j = 1; j + 1 <= d; ++j) a2.add(power(grp, g, j * d));
    a2.add(power(grp, g, d * d));
    GroupSet a = a1 | a2;

    if (a.size() >= 2 * d) throw std::logic_error("tightness_set: |A| < 2d violated");
    if (!(ratio_set(a) == h.elements)) {
        throw std::logic_error("tightness_set: ratio set is not the full subgroup");
    }
    return {grp, g, k, d, std::move(a1), std::move(a2), std::move(a), h.elements};
}

GradedSpec graded_set(const Group& grp, elem g, u64 m, u64 m2) {
    Subgroup h = cyclic_subgroup(grp, g);
    u64 k = h.order();
    if (m < 1 || m2 < 1) throw std::invalid_argument("graded_set: m, m' must be >= 1");
    if (m * m2 > k) throw std::invalid_argument("graded_set: m*m' exceeds generator order");

    GroupSet a(grp);
    for (u64 i = 1; i <= m; ++i) a.add(power(grp, g, i));
    for (u64 j = 1; j <= m2; ++j) a.add(power(grp, g, j * m));

    if (a.size() != m + m2 - 1) {
        throw std::logic_error("graded_set: |A'| != m + m' - 1");
    }
    u64 expected_ratio = std::min(2 * m * m2 - 1, k);
    GroupSet ratio = ratio_set(a);
    // The claimed shape: {g^t : |t| <= m m' - 1}.
    GroupSet claimed(grp);
    for (u64 t = 0; t <= m * m2 - 1; ++t) {
        elem e = power(grp, g, t % k);
        claimed.add(e);
        claimed.add(grp.inv(e));
    }
    if (!(ratio == claimed) || ratio.size() != expected_ratio) {
        throw std::logic_error("graded_set: ratio set shape mismatch");
    }
    return {grp, g, k, m, m2, std::move(a), expected_ratio};
}

IntervalSpec interval_set(u64 p, u64 lambda) {
    Group g = Group::mult_mod_p(p);
    if (lambda < 1 || lambda > p - 1) {
        throw std::invalid_argument("interval_set: lambda out of range");
    }
    GroupSet a(g);
    for (u64 r = 1; r <= lambda; ++r) a.add(elem(r - 1));
    return {std::move(g), p, lambda, std::move(a)};
}

namespace {

GroupSet interval_construction(u64 p, u64 lambda, const SieveTables* tables, bool primes_only) {
    if (lambda < 2) throw std::invalid_argument("interval construction: lambda must be >= 2");
    if (100 * lambda * lambda > 81 * p) {
        throw std::invalid_argument("interval construction: lambda beyond 0.9 sqrt(p)");
    }
    u64 m = p / lambda;
    SieveTables local;
    if (!tables || tables->limit < m) {
        local = build_sieve(m);
        tables = &local;
    }
    IntervalSpec a = interval_set(p, lambda);
    GroupSet b(a.group);
    for (u64 x = lambda + 1; x <= m; ++x) {
        bool in = primes_only ? tables->is_prime(x) : tables->spf[x] > lambda;
        if (in) b.add(elem(x - 1));
    }
    // No wraparound: products of A and B stay below p as integers.
    if (lambda * m > p) throw std::logic_error("interval construction: wraparound");
    if (!b.empty() && !is_packing(a.a, b).is_packing) {
        throw std::logic_error("interval construction: packing certificate failed");
    }
    return b;
}

}  // namespace

GroupSet prime_interval_set(u64 p, u64 lambda, const SieveTables* tables) {
    GroupSet b = interval_construction(p, lambda, tables, true);
    if (2 * lambda * lambda <= p && b.empty()) {
        // Bertrand guarantees a prime in (lambda, 2 lambda] <= p/lambda.
        throw std::logic_error("prime_interval_set: empty in the Bertrand regime");
    }
    return b;
}

GroupSet rough_interval_set(u64 p, u64 lambda, const SieveTables* tables) {
    return interval_construction(p, lambda, tables, false);
}

}  // namespace packnu
