#include "packnu/scan.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "packnu/constructions.hpp"
#include "packnu/covering.hpp"
#include "packnu/packing.hpp"
#include "packnu/setalg.hpp"
#include "packnu/subgroup.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace packnu {

namespace {

using u64 = std::uint64_t;

std::string sanitize(std::string s) {
    std::replace(s.begin(), s.end(), ',', ';');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

void fill_bounds(ScanRow& row, const GroupSet& a) {
    row.a_size = a.size();
    row.ratio_size = ratio_set(a).size();
    PackingBounds b = packing_bounds(a);
    row.lower_weak = b.lower_weak;
    row.lower_ruzsa = b.lower_ruzsa;
    row.upper_trivial = b.upper_trivial;
}

// Runs one task per row index on opt.threads workers; rows land in
// parameter order, so output is independent of scheduling.
template <class F>
std::vector<ScanRow> run_rows(std::size_t count, const ScanOptions& opt, F&& task) {
    std::vector<ScanRow> rows(count);
#ifdef _OPENMP
#pragma omp parallel for num_threads(std::max(1, opt.threads)) schedule(dynamic)
#endif
    for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(count); ++i) {
        double t0 = now_ms();
        try {
            task(std::size_t(i), rows[i]);
        } catch (const std::exception& e) {
            rows[i].error = sanitize(e.what());
        }
        if (opt.timing) rows[i].wall_ms = now_ms() - t0;
    }
    return rows;
}

}  // namespace

std::vector<ScanRow> scan_interval(u64 p, u64 lambda_lo, u64 lambda_hi,
                                   const ScanOptions& opt) {
    if (lambda_lo < 1 || lambda_hi < lambda_lo) {
        throw std::invalid_argument("scan_interval: bad lambda range");
    }
    Group g = Group::mult_mod_p(p);
    std::size_t count = lambda_hi - lambda_lo + 1;
    return run_rows(count, opt, [&](std::size_t i, ScanRow& row) {
        u64 lambda = lambda_lo + i;
        row.group = g.spec_string();
        row.family = "interval";
        row.params = "lambda=" + std::to_string(lambda);
        IntervalSpec spec = interval_set(p, lambda);
        fill_bounds(row, spec.a);
        if (opt.greedy || opt.exact) row.greedy_b = greedy_packing(spec.a).size();
        if (opt.exact && g.order() <= kExactNuCap) {
            ExactResult r = exact_nu(spec.a);
            if (r.status == SolveStatus::Optimal) row.nu_exact = r.value;
            else row.error = "nu budget exhausted; best " + std::to_string(r.value);
        }
        if (opt.exact && g.order() <= kExactCovCap) {
            ExactResult r = exact_cov(spec.a);
            if (r.status == SolveStatus::Optimal) row.cov_exact = r.value;
        }
    });
}

std::vector<ScanRow> scan_primes(u64 p_lo, u64 p_hi, const ScanOptions& opt) {
    if (p_hi < p_lo) throw std::invalid_argument("scan_primes: bad prime range");
    std::vector<u64> params_p;
    std::vector<u64> params_l;
    SieveTables sieve = build_sieve(std::max<u64>(p_hi, 4) / 2 + 1);
    for (u64 p = std::max<u64>(p_lo, 5); p <= p_hi; ++p) {
        if (!is_prime_u64(p)) continue;
        for (u64 lambda = 2; 100 * lambda * lambda <= 81 * p; ++lambda) {
            params_p.push_back(p);
            params_l.push_back(lambda);
        }
    }
    return run_rows(params_p.size(), opt, [&](std::size_t i, ScanRow& row) {
        u64 p = params_p[i], lambda = params_l[i];
        row.group = "multmod:" + std::to_string(p);
        row.family = "primes";
        row.params = "lambda=" + std::to_string(lambda);
        IntervalSpec spec = interval_set(p, lambda);
        fill_bounds(row, spec.a);
        GroupSet b = prime_interval_set(p, lambda, &sieve);
        row.b_size = b.size();
        row.b_is_packing = true;  // asserted by the construction
    });
}

std::vector<ScanRow> scan_graded(const Group& g, elem gen, const ScanOptions& opt) {
    u64 k = element_order(g, gen);
    std::vector<std::pair<u64, u64>> params;
    for (u64 m = 1; m <= k; ++m) {
        for (u64 m2 = 1; m * m2 <= k; ++m2) params.emplace_back(m, m2);
    }
    return run_rows(params.size(), opt, [&](std::size_t i, ScanRow& row) {
        auto [m, m2] = params[i];
        row.group = g.spec_string();
        row.family = "graded";
        row.params = "g=" + g.label(gen) + ";m=" + std::to_string(m) +
                     ";m2=" + std::to_string(m2);
        GradedSpec spec = graded_set(g, gen, m, m2);
        fill_bounds(row, spec.a);
        if (opt.greedy || opt.exact) row.greedy_b = greedy_packing(spec.a).size();
        if (opt.exact && g.order() <= kExactNuCap) {
            ExactResult r = exact_nu(spec.a);
            if (r.status == SolveStatus::Optimal) row.nu_exact = r.value;
        }
    });
}

std::vector<ScanRow> scan_tightness(const Group& g, const ScanOptions& opt) {
    // One generator per distinct cyclic subgroup of order >= 2.
    std::vector<elem> gens;
    std::vector<GroupSet> seen;
    for (elem x = 0; x < g.order(); ++x) {
        Subgroup h = cyclic_subgroup(g, x);
        if (h.order() < 2) continue;
        if (std::find(seen.begin(), seen.end(), h.elements) == seen.end()) {
            seen.push_back(h.elements);
            gens.push_back(x);
        }
    }
    return run_rows(gens.size(), opt, [&](std::size_t i, ScanRow& row) {
        elem gen = gens[i];
        row.group = g.spec_string();
        row.family = "tightness";
        TightnessSpec spec = tightness_set(g, gen);
        row.params = "g=" + g.label(gen) + ";k=" + std::to_string(spec.k);
        fill_bounds(row, spec.a);
        if (opt.greedy || opt.exact) row.greedy_b = greedy_packing(spec.a).size();
        if (opt.exact && g.order() <= kExactNuCap) {
            ExactResult r = exact_nu(spec.a);
            if (r.status == SolveStatus::Optimal) row.nu_exact = r.value;
        }
    });
}

std::vector<ScanRow> scan_middlethird(u64 p_lo, u64 p_hi, const ScanOptions& opt) {
    if (p_hi < p_lo) throw std::invalid_argument("scan_middlethird: bad prime range");
    std::vector<u64> ps;
    for (u64 p = std::max<u64>(p_lo, 5); p <= p_hi; ++p) {
        if (is_prime_u64(p)) ps.push_back(p);
    }
    return run_rows(ps.size(), opt, [&](std::size_t i, ScanRow& row) {
        u64 p = ps[i];
        row.group = "multmod:" + std::to_string(p);
        row.family = "middlethird";
        row.params = "p=" + std::to_string(p);
        GroupSet a = middle_third_set(p);
        fill_bounds(row, a);
        if (p - 1 <= kExactCovCap) {
            ExactResult r = exact_cov(a);
            if (r.status == SolveStatus::Optimal) row.cov_exact = r.value;
            else row.error = "cov budget exhausted; best " + std::to_string(r.value);
        } else {
            row.error = "group order beyond exact-cover cap";
        }
    });
}

namespace {

const char* kSchemaLine = "# packnu-schema 1";
const char* kHeaderBase =
    "group,family,params,a_size,ratio_size,lower_weak,lower_ruzsa,upper_trivial,"
    "greedy_b,nu_exact,cov_exact,b_size,b_is_packing,error";

template <class T>
std::string opt_str(const std::optional<T>& v) {
    if (!v) return "";
    if constexpr (std::is_same_v<T, bool>) return *v ? "1" : "0";
    else return std::to_string(*v);
}

}  // namespace

std::string rows_to_csv(const std::vector<ScanRow>& rows, bool timing) {
    std::ostringstream out;
    out << kSchemaLine << '\n' << kHeaderBase;
    if (timing) out << ",wall_ms";
    out << '\n';
    for (const ScanRow& r : rows) {
        out << r.group << ',' << r.family << ',' << r.params << ',' << r.a_size << ','
            << r.ratio_size << ',' << r.lower_weak << ',' << r.lower_ruzsa << ','
            << r.upper_trivial << ',' << opt_str(r.greedy_b) << ',' << opt_str(r.nu_exact)
            << ',' << opt_str(r.cov_exact) << ',' << opt_str(r.b_size) << ','
            << opt_str(r.b_is_packing) << ',' << sanitize(r.error);
        if (timing) out << ',' << (r.wall_ms ? std::to_string(*r.wall_ms) : "");
        out << '\n';
    }
    return out.str();
}

std::string rows_to_json(const std::vector<ScanRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ScanRow& r : rows) {
        nlohmann::json j;
        j["group"] = r.group;
        j["family"] = r.family;
        j["params"] = r.params;
        j["aSize"] = r.a_size;
        j["ratioSize"] = r.ratio_size;
        j["lowerWeak"] = r.lower_weak;
        j["lowerRuzsa"] = r.lower_ruzsa;
        j["upperTrivial"] = r.upper_trivial;
        if (r.greedy_b) j["greedyB"] = *r.greedy_b;
        if (r.nu_exact) j["nuExact"] = *r.nu_exact;
        if (r.cov_exact) j["covExact"] = *r.cov_exact;
        if (r.b_size) j["bSize"] = *r.b_size;
        if (r.b_is_packing) j["bIsPacking"] = *r.b_is_packing;
        if (r.wall_ms) j["wallMs"] = *r.wall_ms;
        if (!r.error.empty()) j["error"] = r.error;
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

std::vector<ScanRow> rows_from_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line != kSchemaLine) {
        throw std::invalid_argument("rows_from_csv: missing schema line");
    }
    if (!std::getline(in, line) || line.rfind(kHeaderBase, 0) != 0) {
        throw std::invalid_argument("rows_from_csv: bad header");
    }
    bool timing = line.find(",wall_ms") != std::string::npos;
    std::vector<ScanRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        cells.resize(14 + (timing ? 1 : 0));
        ScanRow r;
        r.group = cells[0];
        r.family = cells[1];
        r.params = cells[2];
        r.a_size = std::stoull(cells[3]);
        r.ratio_size = std::stoull(cells[4]);
        r.lower_weak = std::stoull(cells[5]);
        r.lower_ruzsa = std::stoull(cells[6]);
        r.upper_trivial = std::stoull(cells[7]);
        auto opt_u64 = [](const std::string& s) -> std::optional<u64> {
            if (s.empty()) return std::nullopt;
            return std::stoull(s);
        };
        r.greedy_b = opt_u64(cells[8]);
        r.nu_exact = opt_u64(cells[9]);
        r.cov_exact = opt_u64(cells[10]);
        r.b_size = opt_u64(cells[11]);
        if (!cells[12].empty()) r.b_is_packing = cells[12] == "1";
        r.error = cells[13];
        if (timing && !cells[14].empty()) r.wall_ms = std::stod(cells[14]);
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace packnu
