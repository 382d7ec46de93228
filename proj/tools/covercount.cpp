// covercount: exact counts of ramified coverings of the sphere with one
// fixed ramification type and m free branch points.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "covercount/analysis.hpp"
#include "covercount/errors.hpp"
#include "covercount/genseries.hpp"
#include "covercount/json_io.hpp"
#include "covercount/oracle.hpp"
#include "covercount/parallel.hpp"

namespace cc = covercount;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;

constexpr unsigned kMaxWeight = 16;
constexpr unsigned kMaxGenus = 8;

struct Config {
    unsigned weight_bound = 6;
    unsigned genus_bound = 2;
    bool has_m = false;
    long m_value = 0;
    std::string output = "table";
    std::uint64_t budget = 1'000'000'000ULL;
    unsigned threads = 0;  // 0: hardware concurrency
};

bool json_mode(const Config& cfg) { return cfg.output == "json"; }

unsigned effective_threads(const Config& cfg) {
    // COVERCOUNT_THREADS overrides the configured thread count.
    if (const char* env = std::getenv("COVERCOUNT_THREADS")) {
        try {
            return cc::resolve_threads(static_cast<unsigned>(std::stoul(env)));
        } catch (const std::exception&) {
            throw cc::ParseError("malformed COVERCOUNT_THREADS value");
        }
    }
    return cc::resolve_threads(cfg.threads);
}

cc::Partition parse_nonempty_nu(const std::string& text) {
    const cc::Partition nu = cc::Partition::parse(text);
    if (nu.empty()) throw cc::ParseError("ramification type must be nonempty");
    return nu;
}

void check_bounds(unsigned weight, unsigned genus) {
    if (weight > kMaxWeight || genus > kMaxGenus)
        throw cc::BoundExceeded("requested bounds exceed the supported range");
}

void emit(const cc::Json& j) { std::cout << j.dump(2) << "\n"; }

int run_count(const Config& cfg, const std::string& nu_text, unsigned genus) {
    const cc::Partition nu = parse_nonempty_nu(nu_text);
    check_bounds(nu.weight(), genus);
    const cc::GenFunction gf = cc::build_S(nu.weight(), genus, effective_threads(cfg));
    const cc::MPoly b = cc::b_number(gf, genus, nu);
    if (cfg.has_m) {
        const cc::Rat value = b.eval(cc::Rat(cfg.m_value));
        if (json_mode(cfg))
            emit(cc::Json{{"genus", genus},
                          {"nu", cc::partition_to_json(nu)},
                          {"m", cfg.m_value},
                          {"value", value.str()}});
        else
            std::cout << value.str() << "\n";
    } else {
        if (json_mode(cfg))
            emit(cc::Json{{"genus", genus},
                          {"nu", cc::partition_to_json(nu)},
                          {"m_poly", cc::mpoly_to_json(b)}});
        else
            std::cout << b.str() << "\n";
    }
    return kExitOk;
}

int run_series(const Config& cfg, unsigned max_weight, int genus, unsigned genus_cap) {
    const unsigned cap = genus >= 0 ? std::max(genus_cap, static_cast<unsigned>(genus))
                                    : genus_cap;
    check_bounds(max_weight, cap);
    const cc::GenFunction gf = cc::build_S(max_weight, cap, effective_threads(cfg));

    if (genus < 0) {
        cc::GenFunction out = gf;
        if (cfg.has_m) out.series = out.series.eval_m(cc::Rat(cfg.m_value));
        emit(cc::genfunction_to_json(out));  // full object is JSON-only
        return kExitOk;
    }

    const cc::PSeries slice = cc::genus_slice(gf, static_cast<unsigned>(genus));
    if (json_mode(cfg)) {
        cc::Json terms = cc::Json::array();
        for (const auto& [mu, c] : slice.terms()) {
            const cc::MPoly poly = c.as_mpoly();
            if (cfg.has_m)
                terms.push_back(cc::Json{{"mu", cc::partition_to_json(mu)},
                                         {"value", poly.eval(cc::Rat(cfg.m_value)).str()}});
            else
                terms.push_back(cc::Json{{"mu", cc::partition_to_json(mu)},
                                         {"m_poly", cc::mpoly_to_json(poly)}});
        }
        emit(cc::Json{{"genus", genus}, {"max_weight", max_weight}, {"terms", terms}});
    } else {
        for (const auto& [mu, c] : slice.terms()) {
            const cc::MPoly poly = c.as_mpoly();
            if (cfg.has_m) {
                const cc::Rat v = poly.eval(cc::Rat(cfg.m_value));
                if (!v.is_zero()) std::cout << mu.str() << "\t" << v.str() << "\n";
            } else {
                std::cout << mu.str() << "\t" << poly.str() << "\n";
            }
        }
    }
    return kExitOk;
}

int run_bms(const Config& cfg, const std::string& nu_text) {
    const cc::Partition nu = parse_nonempty_nu(nu_text);
    check_bounds(nu.weight(), 0);
    const cc::MPoly g = cc::bms_number(nu);
    if (cfg.has_m) {
        const cc::Rat value = g.eval(cc::Rat(cfg.m_value));
        if (json_mode(cfg))
            emit(cc::Json{{"nu", cc::partition_to_json(nu)},
                          {"m", cfg.m_value},
                          {"value", value.str()}});
        else
            std::cout << value.str() << "\n";
    } else {
        if (json_mode(cfg))
            emit(cc::Json{{"nu", cc::partition_to_json(nu)}, {"m_poly", cc::mpoly_to_json(g)}});
        else
            std::cout << g.str() << "\n";
    }
    return kExitOk;
}

int run_oracle(const Config& cfg, unsigned n, unsigned m, const std::string& orbits_nu) {
    if (n == 0 || m == 0) throw cc::ParseError("need --n >= 1 and --m >= 1");
    if (!orbits_nu.empty()) {
        const cc::Partition nu = parse_nonempty_nu(orbits_nu);
        const std::uint64_t orbits = cc::count_conjugacy_orbits(n, m, nu, cfg.budget);
        if (json_mode(cfg))
            emit(cc::Json{{"n", n}, {"m", m}, {"nu", cc::partition_to_json(nu)},
                          {"orbits", orbits}});
        else
            std::cout << orbits << "\n";
        return kExitOk;
    }
    const cc::EnumerationResult res =
        cc::enumerate_counts(n, m, cfg.budget, effective_threads(cfg));
    if (json_mode(cfg)) {
        emit(cc::count_table_to_json(res.table));
    } else {
        for (const auto& [key, count] : res.table.cells)
            std::cout << key.first.str() << "\t" << key.second << "\t" << count.str() << "\n";
    }
    return kExitOk;
}

int run_kp(const Config& cfg, unsigned max_weight, unsigned genus_cap) {
    check_bounds(max_weight, genus_cap);
    if (max_weight < 4) throw cc::ParseError("kp needs --max-weight >= 4");
    const cc::GenFunction gf = cc::build_S(max_weight, genus_cap, effective_threads(cfg));
    std::vector<cc::KPResidual> residuals;
    for (const cc::KPForm& form : cc::candidate_forms())
        residuals.push_back(cc::kp_residual(gf, form));
    if (json_mode(cfg)) {
        emit(cc::kp_report_to_json(residuals));
    } else {
        for (const cc::KPResidual& r : residuals) {
            std::cout << r.form_id << "\t" << r.vanishes_through_weight << "\t";
            if (r.first_nonzero)
                std::cout << "p[" << r.first_nonzero->mu.str() << "]@h^"
                          << r.first_nonzero->hbar_exp;
            else
                std::cout << "vanishes";
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int run_conjecture(const Config& cfg, unsigned max_n) {
    check_bounds(max_n, 1);
    const cc::GenFunction gf = cc::build_S(max_n, 1, effective_threads(cfg));
    std::vector<cc::ConjectureReport> reports;
    for (unsigned n = 1; n <= max_n; ++n)
        for (const cc::Partition& nu : cc::partitions_of(n))
            reports.push_back(cc::conjecture_check(gf, nu));
    if (json_mode(cfg)) {
        emit(cc::conjecture_report_to_json(reports));
    } else {
        for (const cc::ConjectureReport& r : reports) {
            std::cout << r.nu.str() << "\t" << (r.divisible ? "divisible" : "NOT-divisible")
                      << "\t" << (r.divisible ? r.quotient.str() : std::string("-")) << "\t"
                      << (r.degree_bound_ok ? "deg-ok" : "deg-FAIL") << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counts of ramified sphere coverings"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Config cfg;
    app.add_option("--output", cfg.output, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    app.add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
    app.add_option("--budget", cfg.budget, "step budget for enumerations")
        ->check(CLI::PositiveNumber);

    std::string nu_text;
    unsigned genus = 0;
    int slice_genus = -1;
    unsigned max_weight = 6;
    unsigned genus_cap = 2;
    unsigned oracle_n = 0, oracle_m = 0;
    unsigned conj_max_n = 5;
    std::string orbits_nu;

    auto add_m_option = [&cfg](CLI::App* cmd) {
        cmd->add_option("--m", cfg.m_value, "evaluate at this integer m instead of symbolically")
            ->each([&cfg](const std::string&) { cfg.has_m = true; });
    };

    CLI::App* count = app.add_subcommand("count", "one covering-count coefficient");
    count->add_option("--genus", genus, "genus of the covering surface")->required();
    count->add_option("--nu", nu_text, "ramification type, e.g. 3,1,1")->required();
    add_m_option(count);

    CLI::App* series = app.add_subcommand("series", "genus slice or the full series");
    series->add_option("--max-weight", max_weight, "weight truncation")->capture_default_str();
    series->add_option("--genus", slice_genus, "emit only this genus slice");
    series->add_option("--genus-cap", genus_cap, "assembled genus bound")
        ->capture_default_str();
    add_m_option(series);

    CLI::App* bms = app.add_subcommand("bms", "closed-form genus-0 count");
    bms->add_option("--nu", nu_text, "cycle type of the fixed permutation")->required();
    add_m_option(bms);

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force tuple enumeration");
    oracle->add_option("--n", oracle_n, "degree (symmetric group size)")->required();
    oracle->add_option("--m", oracle_m, "number of free branch points")->required();
    oracle->add_option("--orbits-nu", orbits_nu,
                       "count conjugation orbits for this product type instead");

    CLI::App* kp = app.add_subcommand("kp", "first-equation residual report");
    kp->add_option("--max-weight", max_weight, "weight truncation")->capture_default_str();
    kp->add_option("--genus-cap", genus_cap, "assembled genus bound")->capture_default_str();

    CLI::App* conjecture = app.add_subcommand("conjecture", "genus-1 divisibility report");
    conjecture->add_option("--max-n", conj_max_n, "largest ramification weight")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(count)) return run_count(cfg, nu_text, genus);
        if (app.got_subcommand(series)) return run_series(cfg, max_weight, slice_genus, genus_cap);
        if (app.got_subcommand(bms)) return run_bms(cfg, nu_text);
        if (app.got_subcommand(oracle)) return run_oracle(cfg, oracle_n, oracle_m, orbits_nu);
        if (app.got_subcommand(kp)) return run_kp(cfg, max_weight, genus_cap);
        if (app.got_subcommand(conjecture)) return run_conjecture(cfg, conj_max_n);
    } catch (const cc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const cc::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const cc::BoundExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const cc::OutOfBounds& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
