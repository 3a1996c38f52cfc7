#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "packnu/groupset.hpp"

namespace packnu {

/// Linear (smallest-prime-factor) sieve tables up to a limit.
struct SieveTables {
    std::uint64_t limit = 0;
    std::vector<std::uint32_t> spf;        // spf[x] for 2 <= x <= limit; spf[0]=spf[1]=0
    std::vector<std::uint32_t> primes;
    std::vector<std::uint32_t> pi;         // pi[x] = #primes <= x, 0 <= x <= limit
    std::vector<std::uint64_t> phi;        // Euler totient, phi[1..limit]

    bool is_prime(std::uint64_t x) const { return x >= 2 && spf[x] == x; }
    std::uint64_t prime_count(std::uint64_t x) const { return pi[x]; }
};

SieveTables build_sieve(std::uint64_t n);

/// Euler's totient, by trial-division factorization. phi(1) = 1.
std::uint64_t euler_phi(std::uint64_t n);

/// phi(1) + 2(phi(2) + ... + phi(lambda)): the number of distinct reduced
/// fractions a/b with 1 <= a, b <= lambda.
std::uint64_t totient_ratio_count(std::uint64_t lambda);

struct RatioCountReport {
    std::uint64_t ratio_size;          // |A A^-1| for A = {1..lambda} in F_p^*
    std::uint64_t totient_count;       // totient_ratio_count(lambda)
    bool exact_regime;                 // lambda < sqrt(p)
    bool match;                        // equality, asserted when exact_regime
    double density;                    // |A A^-1| / lambda^2
};

/// Cross-checks |ratio_set({1..lambda})| against the totient-sum formula.
RatioCountReport ratio_count_checks(std::uint64_t p, std::uint64_t lambda);

/// Smallest prime factor of x exceeds lambda?
bool is_rough(std::uint64_t x, std::uint64_t lambda, const SieveTables& tables);

/**
 * Buchstab's function on a fixed grid over [1, u_max]:
 * omega(u) = 1/u on [1, 2]; for u > 2 the delay relation
 * omega'(u) = (omega(u-1) - omega(u)) / u is integrated by classical RK4
 * with cubic interpolation of the stored history for the delayed argument.
 * The grid is anchored so u = 2 is a grid point (derivative kink there).
 * Requires 1/h to be an integer.
 */
class BuchstabGrid {
public:
    BuchstabGrid(double u_max, double h);

    double operator()(double u) const;  // cubic interpolation off-grid
    double h() const noexcept { return h_; }
    double u_max() const noexcept { return 1.0 + h_ * double(values_.size() - 1); }
    const std::vector<double>& values() const noexcept { return values_; }

private:
    double history(double u) const;
    double h_;
    std::uint64_t per_unit_;
    std::vector<double> values_;
};

/// omega(u) at step h (builds a grid up to u).
double buchstab_omega(double u, double h = 1e-3);

/// e^{-gamma}, gamma the Euler-Mascheroni constant.
inline constexpr double kExpMinusGamma = 0.56145948356688516982;

struct RoughCountReport {
    std::uint64_t exact;    // |rough_interval_set(p, lambda)|
    double u;               // log(p/lambda) / log(lambda)
    double estimate;        // (p / (lambda log lambda)) * omega(u)
    double ratio;           // exact / estimate
};

RoughCountReport rough_count_vs_buchstab(std::uint64_t p, std::uint64_t lambda);

}  // namespace packnu
