#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "packnu/constructions.hpp"
#include "packnu/covering.hpp"
#include "packnu/packing.hpp"
#include "packnu/scan.hpp"
#include "packnu/setalg.hpp"
#include "packnu/subgroup.hpp"
#include "packnu/verify.hpp"

namespace {

using namespace packnu;
using u64 = std::uint64_t;

// Exit codes: 0 success, 1 usage/parse error, 2 budget exhaustion,
// 3 verification failure.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerify = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

u64 parse_u64_tok(const std::string& s, const std::string& what) {
    std::size_t pos = 0;
    u64 v;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        throw UsageError(what + ": bad integer '" + s + "'");
    }
    if (pos != s.size()) throw UsageError(what + ": bad integer '" + s + "'");
    return v;
}

elem parse_element(const Group& g, const std::string& label) {
    auto e = g.from_label(label);
    if (!e) throw UsageError("set spec: no element with label '" + label + "'");
    return *e;
}

/// Grammar: {l1,l2,...} | interval:1..L | subgroup:g | tightness:g |
/// graded:g,m,m' | primes:L | rough:L | middlethird | @file
GroupSet parse_set(const Group& g, const std::string& spec) {
    if (spec.empty()) throw UsageError("set spec: empty");
    if (spec.front() == '{') {
        if (spec.back() != '}') throw UsageError("set spec '" + spec + "': missing '}'");
        GroupSet s(g);
        std::stringstream ss(spec.substr(1, spec.size() - 2));
        std::string tok;
        while (std::getline(ss, tok, ',')) s.add(parse_element(g, tok));
        return s;
    }
    if (spec.front() == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw UsageError("set spec: cannot open file '" + spec.substr(1) + "'");
        GroupSet s(g);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty()) s.add(parse_element(g, line));
        }
        return s;
    }
    if (spec == "middlethird") {
        if (g.kind() != GroupKind::MultModP) {
            throw UsageError("set spec: middlethird needs a multmod group");
        }
        return middle_third_set(g.prime());
    }
    auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw UsageError("set spec '" + spec + "': unknown form");
    }
    std::string kind = spec.substr(0, colon);
    std::string args = spec.substr(colon + 1);
    if (kind == "interval") {
        if (g.kind() != GroupKind::MultModP) {
            throw UsageError("set spec: interval needs a multmod group");
        }
        auto dots = args.find("..");
        if (dots == std::string::npos || args.substr(0, dots) != "1") {
            throw UsageError("set spec: interval expects interval:1..L");
        }
        return interval_set(g.prime(), parse_u64_tok(args.substr(dots + 2), "interval")).a;
    }
    if (kind == "subgroup") return cyclic_subgroup(g, parse_element(g, args)).elements;
    if (kind == "tightness") return tightness_set(g, parse_element(g, args)).a;
    if (kind == "graded") {
        std::stringstream ss(args);
        std::string gl, ms, m2s;
        if (!std::getline(ss, gl, ',') || !std::getline(ss, ms, ',') ||
            !std::getline(ss, m2s, ',')) {
            throw UsageError("set spec: graded expects graded:g,m,m'");
        }
        return graded_set(g, parse_element(g, gl), parse_u64_tok(ms, "graded"),
                          parse_u64_tok(m2s, "graded")).a;
    }
    if (kind == "primes" || kind == "rough") {
        if (g.kind() != GroupKind::MultModP) {
            throw UsageError("set spec: " + kind + " needs a multmod group");
        }
        u64 lambda = parse_u64_tok(args, kind);
        return kind == "primes" ? prime_interval_set(g.prime(), lambda)
                                : rough_interval_set(g.prime(), lambda);
    }
    throw UsageError("set spec '" + spec + "': unknown form '" + kind + "'");
}

std::vector<elem> parse_order(const Group& g, const std::string& spec) {
    if (spec == "natural") return {};
    if (spec.rfind("random:", 0) == 0) {
        u64 seed = parse_u64_tok(spec.substr(7), "--order random");
        std::vector<elem> order(g.order());
        for (elem x = 0; x < g.order(); ++x) order[x] = x;
        std::mt19937_64 rng(seed);
        std::shuffle(order.begin(), order.end(), rng);
        return order;
    }
    throw UsageError("--order: expected natural or random:SEED");
}

void parse_range(const std::string& s, u64& lo, u64& hi) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        lo = hi = parse_u64_tok(s, "range");
    } else {
        lo = parse_u64_tok(s.substr(0, dots), "range");
        hi = parse_u64_tok(s.substr(dots + 2), "range");
    }
    if (hi < lo) throw UsageError("range: empty");
}

void print_set(std::ostream& os, const char* name, const GroupSet& s) {
    os << name << " (" << s.size() << "): {";
    bool first = true;
    s.for_each([&](elem x) {
        if (!first) os << ",";
        os << s.group().label(x);
        first = false;
    });
    os << "}\n";
}

int cmd_nu(const std::string& group_spec, const std::string& set_spec, bool exact,
           bool greedy, bool check_set, const std::string& set_b_spec,
           const std::string& order_spec, u64 budget, bool json) {
    Group g = Group::parse(group_spec);
    GroupSet a = parse_set(g, set_spec);

    PackingReport rep{a, GroupSet(g), false, 0, packing_bounds(a), std::nullopt, 0};
    int code = kExitOk;

    if (check_set && !set_b_spec.empty()) {
        rep.b = parse_set(g, set_b_spec);
    } else if (exact) {
        ExactResult r = exact_nu(a, budget, parse_order(g, order_spec));
        rep.b = r.witness;
        rep.nodes_explored = r.nodes;
        if (r.status == SolveStatus::Optimal) rep.nu_exact = r.value;
        else code = kExitBudget;
    } else {
        rep.b = greedy_packing(a, parse_order(g, order_spec));
        (void)greedy;
    }
    PackingCertificate cert = is_packing(a, rep.b);
    rep.is_packing = cert.is_packing;
    rep.product_cardinality = cert.product_cardinality;

    if (json) {
        std::cout << to_json(rep) << "\n";
    } else {
        std::cout << "group " << g.spec_string() << " |G|=" << g.order() << "\n";
        print_set(std::cout, "A", rep.a);
        print_set(std::cout, "B", rep.b);
        std::cout << "isPacking " << (rep.is_packing ? "true" : "false") << " |A*B|="
                  << rep.product_cardinality << "\n";
        std::cout << "bounds: weak " << rep.bounds.lower_weak << "  ruzsa "
                  << rep.bounds.lower_ruzsa << "  trivial " << rep.bounds.upper_trivial << "\n";
        if (rep.nu_exact) std::cout << "nu " << *rep.nu_exact << "\n";
        else if (code == kExitBudget)
            std::cout << "nu unknown, best found " << rep.b.size() << "\n";
    }
    return code;
}

int cmd_cov(const std::string& group_spec, const std::string& set_spec, bool exact,
            u64 budget, bool json) {
    Group g = Group::parse(group_spec);
    GroupSet a = parse_set(g, set_spec);
    double lower = double(g.order()) / double(a.size());
    double upper = lower * (std::log(double(a.size())) + 1.0);
    CoverReport rep{a, GroupSet(g), false, lower, upper, std::nullopt,
                    std::nullopt, std::nullopt, 0};
    int code = kExitOk;
    if (exact) {
        ExactResult r = exact_cov(a, budget);
        rep.b = r.witness;
        rep.nodes_explored = r.nodes;
        if (r.status == SolveStatus::Optimal) rep.cov_exact = r.value;
        else code = kExitBudget;
    } else {
        rep.b = greedy_cover(a);
    }
    rep.covers = is_covering(a, rep.b);
    if (g.kind() == GroupKind::MultModP && set_spec == "middlethird") {
        rep.middle_third_lower = std::log(double(g.prime() - 1)) / std::log(3.0);
        rep.middle_third_upper = 3.0 * (std::log(double(g.prime())) + 1.0);
    }
    if (json) {
        std::cout << to_json(rep) << "\n";
    } else {
        std::cout << "group " << g.spec_string() << " |G|=" << g.order() << "\n";
        print_set(std::cout, "A", rep.a);
        print_set(std::cout, "B", rep.b);
        std::cout << "covers " << (rep.covers ? "true" : "false") << "\n";
        std::cout << "bounds: |G|/|A| " << rep.lower << "  log-bound " << rep.upper << "\n";
        if (rep.cov_exact) std::cout << "cov " << *rep.cov_exact << "\n";
        else if (code == kExitBudget)
            std::cout << "cov unknown, best found " << rep.b.size() << "\n";
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"packing and covering sets in finite abelian groups"};
    app.require_subcommand(1);

    std::string group_spec, set_spec, set_b_spec, order_spec = "natural";
    bool exact = false, greedy = false, check_set = false, json = false;
    u64 budget = kDefaultNodeBudget;

    auto* nu = app.add_subcommand("nu", "packing number of a set");
    nu->add_option("group", group_spec, "group spec (cyclic:N | product:N1xN2 | multmod:P)")
        ->required();
    nu->add_option("set", set_spec, "set spec")->required();
    nu->add_flag("--exact", exact, "run the exact solver");
    nu->add_flag("--greedy", greedy, "greedy packing only (default)");
    nu->add_flag("--check", check_set, "check the set given by --against");
    nu->add_option("--against", set_b_spec, "candidate B for --check");
    nu->add_option("--order", order_spec, "natural | random:SEED");
    nu->add_option("--budget", budget, "node budget for the exact solver");
    nu->add_flag("--json", json, "JSON report");

    auto* cov = app.add_subcommand("cov", "covering number of a set");
    cov->add_option("group", group_spec, "group spec")->required();
    cov->add_option("set", set_spec, "set spec")->required();
    cov->add_flag("--exact", exact, "run the exact solver");
    cov->add_flag("--greedy", greedy, "greedy cover only (default)");
    cov->add_option("--budget", budget, "node budget");
    cov->add_flag("--json", json, "JSON report");

    std::string family, out_path = "-", format = "csv", range_p, range_lambda, gen_label;
    int parallel = 1;
    bool timing = false;
    auto* scan = app.add_subcommand("scan", "parameter sweep to CSV/JSON");
    scan->add_option("family", family, "interval | primes | graded | tightness | middlethird")
        ->required();
    scan->add_option("--group", group_spec, "group spec (graded/tightness)");
    scan->add_option("--g", gen_label, "generator label (graded)");
    scan->add_option("--p", range_p, "prime or prime range LO..HI");
    scan->add_option("--lambda", range_lambda, "lambda range LO..HI (interval)");
    scan->add_option("--out", out_path, "output path, - for stdout");
    scan->add_option("--format", format, "csv | json");
    scan->add_option("--parallel", parallel, "worker threads");
    scan->add_flag("--exact", exact, "include exact solver columns");
    scan->add_flag("--timing", timing, "include wall_ms column");

    std::string suite = "claims";
    bool fast = false, inject_fault = false;
    auto* verify = app.add_subcommand("verify", "run the claim suite");
    verify->add_option("--suite", suite, "claim suite (claims)");
    verify->add_flag("--fast", fast, "reduced scales");
    verify->add_flag("--inject-fault", inject_fault, "negative control (test only)")
        ->group("");  // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand("nu")) {
            return cmd_nu(group_spec, set_spec, exact, greedy, check_set, set_b_spec,
                          order_spec, budget, json);
        }
        if (app.got_subcommand("cov")) {
            return cmd_cov(group_spec, set_spec, exact, budget, json);
        }
        if (app.got_subcommand("scan")) {
            ScanOptions opt;
            opt.threads = parallel;
            opt.exact = exact;
            opt.greedy = exact;
            opt.timing = timing;
            std::vector<ScanRow> rows;
            if (family == "interval") {
                u64 p_lo, p_hi, l_lo, l_hi;
                parse_range(range_p, p_lo, p_hi);
                if (p_lo != p_hi) throw UsageError("scan interval: --p takes a single prime");
                parse_range(range_lambda, l_lo, l_hi);
                rows = scan_interval(p_lo, l_lo, l_hi, opt);
            } else if (family == "primes") {
                u64 p_lo, p_hi;
                parse_range(range_p, p_lo, p_hi);
                rows = scan_primes(p_lo, p_hi, opt);
            } else if (family == "graded") {
                Group g = Group::parse(group_spec);
                rows = scan_graded(g, parse_element(g, gen_label), opt);
            } else if (family == "tightness") {
                Group g = Group::parse(group_spec);
                rows = scan_tightness(g, opt);
            } else if (family == "middlethird") {
                u64 p_lo, p_hi;
                parse_range(range_p, p_lo, p_hi);
                rows = scan_middlethird(p_lo, p_hi, opt);
            } else {
                throw UsageError("scan: unknown family '" + family + "'");
            }
            std::string payload =
                format == "json" ? rows_to_json(rows) : rows_to_csv(rows, timing);
            if (format != "json" && format != "csv") {
                throw UsageError("scan: unknown format '" + format + "'");
            }
            if (out_path == "-") {
                std::cout << payload;
            } else {
                std::ofstream out(out_path);
                if (!out) throw UsageError("scan: cannot write '" + out_path + "'");
                out << payload;
            }
            return kExitOk;
        }
        if (app.got_subcommand("verify")) {
            if (suite != "claims") throw UsageError("verify: unknown suite '" + suite + "'");
            VerifyOptions opt{fast, inject_fault};
            bool all_pass = true;
            for (const ClaimResult& c : run_claim_suite(opt)) {
                std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
                if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
                std::cout << "\n";
                all_pass = all_pass && c.pass;
            }
            return all_pass ? kExitOk : kExitVerify;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
