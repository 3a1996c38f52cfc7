#include "packnu/numth.hpp"

#include <cmath>
#include <stdexcept>

#include "packnu/constructions.hpp"
#include "packnu/setalg.hpp"

namespace packnu {

namespace {

using u64 = std::uint64_t;

constexpr u64 kSieveCap = u64{1} << 26;

}  // namespace

SieveTables build_sieve(u64 n) {
    if (n < 2) throw std::invalid_argument("build_sieve: limit must be >= 2");
    if (n > kSieveCap) throw std::invalid_argument("build_sieve: limit exceeds cap");
    SieveTables t;
    t.limit = n;
    t.spf.assign(n + 1, 0);
    t.phi.assign(n + 1, 0);
    t.phi[1] = 1;
    for (u64 x = 2; x <= n; ++x) {
        if (t.spf[x] == 0) {
            t.spf[x] = std::uint32_t(x);
            t.phi[x] = x - 1;
            t.primes.push_back(std::uint32_t(x));
        }
        for (std::uint32_t p : t.primes) {
            if (p > t.spf[x] || x * p > n) break;
            t.spf[x * p] = p;
            t.phi[x * p] = (x % p == 0) ? t.phi[x] * p : t.phi[x] * (p - 1);
        }
    }
    t.pi.assign(n + 1, 0);
    for (u64 x = 2; x <= n; ++x) t.pi[x] = t.pi[x - 1] + (t.spf[x] == x ? 1 : 0);
    return t;
}

u64 euler_phi(u64 n) {
    if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
    u64 result = n;
    u64 m = n;
    for (u64 p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

u64 totient_ratio_count(u64 lambda) {
    if (lambda == 0) throw std::invalid_argument("totient_ratio_count: lambda must be >= 1");
    if (lambda == 1) return 1;
    SieveTables t = build_sieve(lambda);
    u64 sum = 0;
    for (u64 i = 2; i <= lambda; ++i) sum += t.phi[i];
    return 1 + 2 * sum;
}

RatioCountReport ratio_count_checks(u64 p, u64 lambda) {
    IntervalSpec spec = interval_set(p, lambda);
    u64 ratio = ratio_set(spec.a).size();
    u64 tc = totient_ratio_count(lambda);
    bool exact_regime = lambda * lambda < p;
    bool match = ratio == tc;
    if (exact_regime && !match) {
        throw std::logic_error("ratio_count_checks: totient formula mismatch below sqrt(p)");
    }
    return {ratio, tc, exact_regime, match, double(ratio) / (double(lambda) * double(lambda))};
}

bool is_rough(u64 x, u64 lambda, const SieveTables& tables) {
    if (x < 2 || x > tables.limit) throw std::out_of_range("is_rough: x outside sieve range");
    return tables.spf[x] > lambda;
}

BuchstabGrid::BuchstabGrid(double u_max, double h) : h_(h) {
    if (h <= 0 || h > 0.01) throw std::invalid_argument("BuchstabGrid: need 0 < h <= 0.01");
    double per = 1.0 / h;
    per_unit_ = u64(std::llround(per));
    if (std::abs(per - double(per_unit_)) > 1e-9) {
        throw std::invalid_argument("BuchstabGrid: 1/h must be an integer");
    }
    if (u_max < 2.0) u_max = 2.0;
    u64 steps = u64(std::ceil((u_max - 1.0) * double(per_unit_))) + 1;
    values_.reserve(steps + 1);

    // Exact branch on [1, 2].
    for (u64 i = 0; i <= per_unit_; ++i) values_.push_back(1.0 / (1.0 + double(i) * h_));

    // RK4 on omega'(u) = (omega(u-1) - omega(u)) / u past the kink at u = 2.
    while (values_.size() < steps) {
        u64 i = values_.size() - 1;
        double u = 1.0 + double(i) * h_;
        double w = values_.back();
        auto f = [&](double uu, double ww) { return (history(uu - 1.0) - ww) / uu; };
        double k1 = f(u, w);
        double k2 = f(u + h_ / 2, w + h_ / 2 * k1);
        double k3 = f(u + h_ / 2, w + h_ / 2 * k2);
        double k4 = f(u + h_, w + h_ * k3);
        values_.push_back(w + h_ / 6 * (k1 + 2 * k2 + 2 * k3 + k4));
    }
}

double BuchstabGrid::history(double u) const {
    // Cubic Lagrange interpolation on the already-computed part of the grid;
    // exact on grid points.
    double pos = (u - 1.0) / h_;
    u64 i = u64(pos + 0.5);
    if (std::abs(pos - double(i)) < 1e-9 && i < values_.size()) return values_[i];
    u64 base = u64(pos);
    if (base == 0) base = 1;
    if (base + 2 >= values_.size()) base = values_.size() - 3;
    // Stencil {base-1, base, base+1, base+2}.
    double t = pos - double(base);
    double ym1 = values_[base - 1], y0 = values_[base], y1 = values_[base + 1],
           y2 = values_[base + 2];
    return -ym1 * t * (t - 1) * (t - 2) / 6.0 + y0 * (t + 1) * (t - 1) * (t - 2) / 2.0 -
           y1 * (t + 1) * t * (t - 2) / 2.0 + y2 * (t + 1) * t * (t - 1) / 6.0;
}

double BuchstabGrid::operator()(double u) const {
    if (u < 1.0) throw std::invalid_argument("BuchstabGrid: u must be >= 1");
    if (u <= 2.0) return 1.0 / u;
    if (u > u_max() + 1e-12) throw std::out_of_range("BuchstabGrid: u beyond grid");
    return history(std::min(u, u_max()));
}

double buchstab_omega(double u, double h) {
    if (u < 1.0) throw std::invalid_argument("buchstab_omega: u must be >= 1");
    if (u <= 2.0) return 1.0 / u;
    BuchstabGrid grid(u + h, h);
    return grid(u);
}

RoughCountReport rough_count_vs_buchstab(u64 p, u64 lambda) {
    GroupSet b = rough_interval_set(p, lambda);
    double u = std::log(double(p) / double(lambda)) / std::log(double(lambda));
    double omega = buchstab_omega(u);
    double estimate = double(p) / (double(lambda) * std::log(double(lambda))) * omega;
    return {b.size(), u, estimate, double(b.size()) / estimate};
}

}  // namespace packnu
