#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "qchar/oracles.hpp"
#include "qchar/verify.hpp"

using namespace qchar;

namespace {

struct CliConfig {
    std::string system;
    std::string field = "Q@1";
    std::string lambda;
    std::string mu;
    std::string bound;
    std::string height;
    std::string format = "plain";
    std::string which;  // verify battery
    std::vector<std::string> systems;
    long samples = 100;
    unsigned long long seed = 1;
    int jobs = 1;
    bool force = false;
};

std::vector<long> parse_coords(const std::string& text, const std::string& what) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stol(item, &pos));
            if (pos != item.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument(what + ": '" + item + "' is not an integer");
        }
    }
    if (out.empty()) throw std::invalid_argument(what + ": empty coordinate list");
    return out;
}

RootSystem load_system(const std::string& spec) {
    try {
        return RootSystem::named(spec);
    } catch (const std::invalid_argument&) {
        // fall through to file lookup
    }
    std::ifstream in(spec);
    if (!in)
        throw std::invalid_argument("--system '" + spec +
                                    "': not a built-in name and not a readable file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return RootSystem::from_cartan_json(buffer.str());
}

Weight parse_weight(const RootSystem& rs, const std::string& text, const std::string& what) {
    std::vector<long> c = parse_coords(text, what);
    if (c.size() != rs.rank())
        throw std::invalid_argument(what + " has " + std::to_string(c.size()) +
                                    " coordinates but " + rs.label() + " has rank " +
                                    std::to_string(rs.rank()));
    return Weight(c);
}

RootVector parse_heights(const RootSystem& rs, const std::string& text, const std::string& what) {
    std::vector<long> c = parse_coords(text, what);
    if (c.size() != rs.rank())
        throw std::invalid_argument(what + " has " + std::to_string(c.size()) +
                                    " coordinates but " + rs.label() + " has rank " +
                                    std::to_string(rs.rank()));
    for (long v : c)
        if (v < 0) throw std::invalid_argument(what + " must be entrywise nonnegative");
    return RootVector(c);
}

nlohmann::json weight_json(const Weight& w) { return nlohmann::json(w.coords); }

int run_mult(const CliConfig& cfg) {
    RootSystem rs = load_system(cfg.system);
    Field k{FieldSpec::parse(cfg.field)};
    Weight lam = parse_weight(rs, cfg.lambda, "--lambda");
    Weight mu = parse_weight(rs, cfg.mu, "--mu");
    long dim = weight_multiplicity(k, rs, lam, mu);
    if (cfg.format == "json") {
        nlohmann::json j;
        j["system"] = rs.label();
        j["field"] = k.spec().to_string();
        j["lambda"] = weight_json(lam);
        j["mu"] = weight_json(mu);
        j["dim"] = dim;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << dim << "\n";
    }
    return 0;
}

int run_table(const CliConfig& cfg) {
    RootSystem rs = load_system(cfg.system);
    Field k{FieldSpec::parse(cfg.field)};
    Weight lam = parse_weight(rs, cfg.lambda, "--lambda");
    RootVector bound = parse_heights(rs, cfg.bound, "--bound");
    MultiplicityTable t = character_table(k, rs, lam, bound, cfg.jobs);
    if (cfg.format == "json") {
        std::cout << multiplicity_table_json(t) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << multiplicity_table_csv(t);
    } else {
        for (const auto& [mu, dim] : t.entries) std::cout << mu.to_string() << " " << dim << "\n";
    }
    return 0;
}

int run_gram(const CliConfig& cfg) {
    RootSystem rs = load_system(cfg.system);
    Weight lam = parse_weight(rs, cfg.lambda, "--lambda");
    RootVector nu = parse_heights(rs, cfg.height, "--height");
    GramMatrix m = gram_matrix(rs, lam, nu);
    if (cfg.format == "json") {
        std::cout << gram_matrix_json(m) << "\n";
    } else {
        std::cout << "paths:";
        for (const auto& p : m.order) std::cout << " " << p.to_string();
        std::cout << "\n";
        for (const auto& row : m.entries) {
            for (size_t j = 0; j < row.size(); ++j)
                std::cout << (j ? " | " : "") << row[j].to_string();
            std::cout << "\n";
        }
    }
    return 0;
}

std::vector<RootSystem> resolve_systems(const CliConfig& cfg,
                                        const std::vector<std::string>& fallback) {
    std::vector<RootSystem> out;
    for (const auto& name : cfg.systems.empty() ? fallback : cfg.systems)
        out.push_back(load_system(name));
    return out;
}

int run_checks(const CliConfig& cfg, const std::vector<std::function<CheckReport()>>& tasks) {
    std::vector<CheckReport> reports(tasks.size());
    int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < tasks.size(); ++i) reports[i] = tasks[i]();
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (size_t i = next++; i < tasks.size(); i = next++) reports[i] = tasks[i]();
            });
        for (auto& t : pool) t.join();
    }
    for (const auto& r : reports) std::cout << r.to_json() << "\n";
    CheckSummary s = summarize(reports);
    std::cout << s.to_json() << "\n";
    return s.fail > 0 ? 1 : 0;
}

int run_verify(const CliConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::vector<std::function<CheckReport()>> tasks;
    // referenced by the deferred tasks, so they must outlive run_checks
    std::vector<RootSystem> systems;
    std::map<long, Field> fields;

    if (cfg.which == "identities") {
        std::uniform_int_distribution<long> ab(-20, 20);
        std::uniform_int_distribution<long> cs(0, 10);
        for (long i = 0; i < cfg.samples; ++i) {
            long a = ab(rng), b = ab(rng), c = cs(rng);
            tasks.emplace_back([=] { return check_qbinom_identity(a, b, c); });
        }
    } else if (cfg.which == "commutation") {
        systems = resolve_systems(cfg, {"A1", "A2"});
        std::uniform_int_distribution<size_t> pick(0, systems.size() - 1);
        std::uniform_int_distribution<long> coord(-6, 6);
        std::uniform_int_distribution<long> pow(1, 3);
        std::uniform_int_distribution<size_t> len(0, 5);
        for (long i = 0; i < cfg.samples; ++i) {
            const RootSystem& rs = systems[pick(rng)];
            std::uniform_int_distribution<int> root(0, static_cast<int>(rs.rank()) - 1);
            std::vector<long> lam(rs.rank());
            for (auto& v : lam) v = coord(rng);
            int alpha = root(rng), beta = root(rng);
            long m = pow(rng), n = pow(rng);
            std::vector<int> steps(len(rng));
            for (auto& s : steps) s = root(rng);
            tasks.emplace_back([=, &rs] {
                return check_commutation(rs, Weight(lam), alpha, beta, m, n, Path(steps));
            });
        }
    } else if (cfg.which == "periodicity") {
        systems = resolve_systems(cfg, {"A1", "A2", "B2"});
        std::vector<long> ls = {3, 5, 7};
        std::uniform_int_distribution<size_t> pick(0, systems.size() - 1);
        std::uniform_int_distribution<size_t> pick_l(0, ls.size() - 1);
        std::uniform_int_distribution<long> coord(-4, 4);
        std::uniform_int_distribution<long> gcoord(-2, 2);

        for (long l : ls) fields.emplace(l, FieldSpec::parse("Q@zeta" + std::to_string(l)));
        for (long i = 0; i < cfg.samples; ++i) {
            const RootSystem& rs = systems[pick(rng)];
            long l = ls[pick_l(rng)];
            std::vector<long> lam(rs.rank()), gam(rs.rank()), c(rs.rank());
            for (auto& v : lam) v = coord(rng);
            for (auto& v : gam) v = gcoord(rng);
            for (size_t a = 0; a < rs.rank(); ++a) {
                long cap = cfg.force ? 4 : std::min(4L, qint_vanishing_period(l, rs.sym(a)) - 1);
                c[a] = std::uniform_int_distribution<long>(0, cap)(rng);
            }
            Weight lambda{lam};
            Weight mu = lambda - rs.weight_of(RootVector(c));
            const Field& k = fields.at(l);
            bool force = cfg.force;
            tasks.emplace_back([=, &rs, &k] {
                return check_periodicity_theorem(k, rs, lambda, mu, Weight(gam), l, force);
            });
        }
    } else {  // congruence
        systems = resolve_systems(cfg, {"A1", "A2", "B2", "G2"});
        std::vector<long> ls = {3, 4, 5, 6, 7};
        std::uniform_int_distribution<size_t> pick(0, systems.size() - 1);
        std::uniform_int_distribution<size_t> pick_l(0, ls.size() - 1);
        std::uniform_int_distribution<long> coord(-5, 5);
        for (long i = 0; i < cfg.samples; ++i) {
            const RootSystem& rs = systems[pick(rng)];
            long l = ls[pick_l(rng)];
            std::vector<long> lam(rs.rank()), gam(rs.rank()), h(rs.rank());
            for (auto& v : lam) v = coord(rng);
            for (auto& v : gam) v = coord(rng);
            for (size_t a = 0; a < rs.rank(); ++a) {
                long cap = cfg.force ? 3 : std::min(3L, qint_vanishing_period(l, rs.sym(a)) - 1);
                h[a] = std::uniform_int_distribution<long>(0, cap)(rng);
            }
            bool force = cfg.force;
            tasks.emplace_back([=, &rs] {
                return check_matrix_congruence(rs, Weight(lam), Weight(gam), l, RootVector(h),
                                               force);
            });
        }
    }
    return run_checks(cfg, tasks);
}

int run_selftest(const CliConfig& cfg) {
    long failures = 0;
    auto report = [&](const std::string& name, long comparisons, long bad) {
        failures += bad;
        std::cout << "selftest " << name << ": " << (bad ? "FAIL" : "ok") << " (" << comparisons
                  << " comparisons";
        if (bad) std::cout << ", " << bad << " mismatches";
        std::cout << ")\n";
    };

    {
        Field q1{FieldSpec::parse("Q@1")};
        long comparisons = 0, bad = 0;
        RootSystem a1 = RootSystem::named("A1");
        for (long m = 0; m <= 10; ++m) {
            GramSession session(a1, Weight({m}));
            for (long n = 0; n <= m + 2; ++n) {
                Weight mu({m - 2 * n});
                ++comparisons;
                if (weight_multiplicity(q1, session, mu) !=
                    freudenthal_multiplicity(a1, Weight({m}), mu))
                    ++bad;
            }
        }
        report("freudenthal A1", comparisons, bad);
    }
    for (const auto& [code, top, box] :
         {std::tuple<const char*, long, long>{"A2", 2, 3}, {"B2", 1, 2}}) {
        Field q1{FieldSpec::parse("Q@1")};
        RootSystem rs = RootSystem::named(code);
        long comparisons = 0, bad = 0;
        std::vector<long> lam(rs.rank(), 0);
        for (;;) {
            Weight lambda{lam};
            GramSession session(rs, lambda);
            std::vector<long> c(rs.rank(), 0);
            for (;;) {
                Weight mu = lambda - rs.weight_of(RootVector(c));
                ++comparisons;
                if (weight_multiplicity(q1, session, mu) !=
                    freudenthal_multiplicity(rs, lambda, mu))
                    ++bad;
                size_t i = 0;
                while (i < c.size() && c[i] == box) c[i++] = 0;
                if (i == c.size()) break;
                ++c[i];
            }
            size_t i = 0;
            while (i < lam.size() && lam[i] == top) lam[i++] = 0;
            if (i == lam.size()) break;
            ++lam[i];
        }
        report(std::string("freudenthal ") + code, comparisons, bad);
    }
    {
        long comparisons = 0, bad = 0;
        RootSystem a1 = RootSystem::named("A1");
        for (long p : {2L, 3L, 5L}) {
            Field k{FieldSpec::parse("F" + std::to_string(p) + "@1")};
            for (long m = 0; m <= 12; ++m) {
                GramSession session(a1, Weight({m}));
                for (long n = 0; n <= m; ++n) {
                    ++comparisons;
                    if (weight_multiplicity(k, session, Weight({m - 2 * n})) !=
                        lucas_predictor(p, static_cast<unsigned long>(m),
                                        static_cast<unsigned long>(n)))
                        ++bad;
                }
            }
        }
        report("lucas rank one", comparisons, bad);
    }
    (void)cfg;
    return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact weight multiplicities of simple highest-weight modules over quantum groups\n"
        "at roots of unity and hyperalgebras in positive characteristic.\n\n"
        "Root systems: built-in names A1 A2 A3 A4 B2 B3 C3 D4 F4 G2, or a path to a JSON\n"
        "file {\"cartan\": [[2,-1],[-1,2]]} with a[i][j] = <alpha_i, alpha_j^vee>.\n"
        "Fields: Q@1, F5@1, Q@zeta12, F7@zeta5, optionally F5@zeta4[g=2,1] to pin the\n"
        "modulus g(v) by its coefficients, constant first.\n"
        "Weights are comma-separated fundamental-weight coordinates; heights count simple\n"
        "roots.  Identical invocations with identical seeds print identical bytes."};
    app.require_subcommand(1);
    CliConfig cfg;

    auto add_format = [&](CLI::App* cmd, const std::vector<std::string>& allowed) {
        cmd->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember(allowed))
            ->capture_default_str();
    };

    CLI::App* mult = app.add_subcommand("mult", "dimension of one weight space");
    mult->add_option("--system", cfg.system, "root system name or Cartan JSON path")->required();
    mult->add_option("--field", cfg.field, "coefficient field spec")->capture_default_str();
    mult->add_option("--lambda", cfg.lambda, "highest weight")->required();
    mult->add_option("--mu", cfg.mu, "weight whose multiplicity is computed")->required();
    add_format(mult, {"plain", "json"});

    CLI::App* table = app.add_subcommand("table", "multiplicities over a height box");
    table->add_option("--system", cfg.system, "root system name or Cartan JSON path")->required();
    table->add_option("--field", cfg.field, "coefficient field spec")->capture_default_str();
    table->add_option("--lambda", cfg.lambda, "highest weight")->required();
    table->add_option("--bound", cfg.bound, "height box, e.g. 3,3")->required();
    table->add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();
    add_format(table, {"plain", "json", "csv"});

    CLI::App* gram = app.add_subcommand("gram", "pairing matrix of one height slice");
    gram->add_option("--system", cfg.system, "root system name or Cartan JSON path")->required();
    gram->add_option("--lambda", cfg.lambda, "highest weight")->required();
    gram->add_option("--height", cfg.height, "slice height, e.g. 1,2")->required();
    add_format(gram, {"plain", "json"});

    CLI::App* verify = app.add_subcommand(
        "verify", "randomized theorem checks; JSON line per instance plus a summary line");
    verify
        ->add_option("check", cfg.which,
                     "periodicity (rank equality at matching roots of unity), congruence\n"
                     "(entrywise matrix congruence mod sigma_l), identities (three-term\n"
                     "binomial law), commutation (divided-power operator relation)")
        ->required()
        ->check(CLI::IsMember({"periodicity", "congruence", "identities", "commutation"}));
    verify->add_option("--samples", cfg.samples, "number of random instances")
        ->capture_default_str();
    verify->add_option("--seed", cfg.seed, "PRNG seed")->capture_default_str();
    verify->add_option("--system", cfg.systems, "systems to draw from")->delimiter(',');
    verify->add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();
    verify->add_flag("--force", cfg.force,
                     "sample and run outside the validity hypotheses, recording observed "
                     "outcomes");

    CLI::App* selftest =
        app.add_subcommand("selftest", "cross-check rank computations against the "
                                       "Freudenthal and Lucas oracles");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (mult->parsed()) return run_mult(cfg);
        if (table->parsed()) return run_table(cfg);
        if (gram->parsed()) return run_gram(cfg);
        if (verify->parsed()) return run_verify(cfg);
        if (selftest->parsed()) return run_selftest(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
