#pragma once

#include <optional>
#include <string>
#include <vector>

#include "packnu/groupset.hpp"

namespace packnu {

/// One record of a parameter sweep. Optional fields stay empty in the CSV.
struct ScanRow {
    std::string group;    // group spec string
    std::string family;   // construction name
    std::string params;   // e.g. "lambda=5" or "g=5;m=2;m2=3"
    std::uint64_t a_size = 0;
    std::uint64_t ratio_size = 0;
    std::uint64_t lower_weak = 0;
    std::uint64_t lower_ruzsa = 0;
    std::uint64_t upper_trivial = 0;
    std::optional<std::uint64_t> greedy_b;
    std::optional<std::uint64_t> nu_exact;
    std::optional<std::uint64_t> cov_exact;
    std::optional<std::uint64_t> b_size;       // constructed B, when applicable
    std::optional<bool> b_is_packing;
    std::optional<double> wall_ms;
    std::string error;

    bool operator==(const ScanRow&) const = default;
};

struct ScanOptions {
    int threads = 1;
    bool exact = false;    // run exact solvers where in cap
    bool greedy = false;   // include greedy packing size
    bool timing = false;   // emit wall_ms (breaks byte-for-byte comparability)
};

std::vector<ScanRow> scan_interval(std::uint64_t p, std::uint64_t lambda_lo,
                                   std::uint64_t lambda_hi, const ScanOptions& opt);
/// Prime-interval construction over all primes in [p_lo, p_hi] and all
/// 2 <= lambda <= 0.9 sqrt(p).
std::vector<ScanRow> scan_primes(std::uint64_t p_lo, std::uint64_t p_hi,
                                 const ScanOptions& opt);
/// All (m, m') with m m' <= order(g).
std::vector<ScanRow> scan_graded(const Group& g, elem gen, const ScanOptions& opt);
/// Tightness construction for every cyclic subgroup of order >= 2.
std::vector<ScanRow> scan_tightness(const Group& g, const ScanOptions& opt);
std::vector<ScanRow> scan_middlethird(std::uint64_t p_lo, std::uint64_t p_hi,
                                      const ScanOptions& opt);

/// CSV with a "# packnu-schema 1" comment line and a header row.
std::string rows_to_csv(const std::vector<ScanRow>& rows, bool timing = false);
std::string rows_to_json(const std::vector<ScanRow>& rows);
/// Inverse of rows_to_csv.
std::vector<ScanRow> rows_from_csv(const std::string& csv);

}  // namespace packnu
