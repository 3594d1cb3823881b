// Command-line surface for the gift-exchange counting library: compute the
// normalized playout counts G_sigma(n) and the restricted partition counts
// E_sigma(n,k), run the cross-method verification suite, replay the
// exhaustive oracles, rediscover recurrences from raw terms, and benchmark
// the computation methods against one another.
//
// Exit codes: 0 success, 1 verification/mismatch failure, 2 usage or
// resource-guard error. Data goes to stdout (or --out); diagnostics and
// timings go to stderr.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "giftcount/giftcount.hpp"

namespace {

using namespace giftcount;

int fail_usage(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

void emit(const std::vector<Natural>& values, const std::string& format,
          long long offset, const std::string& out_path) {
    OutputFormat f = parse_output_format(format);
    if (out_path.empty()) {
        write_sequence(std::cout, values, f, offset);
    } else {
        std::ofstream os(out_path, std::ios::binary);
        if (!os) throw precondition_error("cannot open output file: " + out_path);
        write_sequence(os, values, f, offset);
    }
}

std::vector<Natural> compute_g(unsigned sigma, long long nmax, const std::string& method,
                               const GuardLimits& guards) {
    if (method == "sum") return g_by_sum(sigma, nmax, guards).values;
    if (method == "moments") {
        if (sigma < 1) throw precondition_error("method moments requires sigma >= 1");
        return g_moments_run(sigma, nmax).values;
    }
    if (method == "multinomial") {
        std::vector<Natural> values;
        for (long long n = 0; n <= nmax; ++n)
            values.push_back(g_multinomial(sigma, n, guards));
        return values;
    }
    if (method == "typec" || method == "typed") {
        if (sigma < 1 || sigma > 4)
            throw precondition_error("no built-in recurrence stored for sigma = " +
                                     std::to_string(sigma));
        std::string name = (method == "typec" ? "TypeC-sigma" : "TypeD-sigma") +
                           std::to_string(sigma);
        return g_by_recurrence(builtin_recurrence(name), sigma, nmax, guards).values;
    }
    throw precondition_error("unknown method: " + method);
}

int cmd_g(unsigned sigma, long long nmax, const std::string& method,
          const std::string& format, long long offset, const std::string& out_path) {
    const GuardLimits guards = GuardLimits::from_env();
    emit(compute_g(sigma, nmax, method, guards), format, offset, out_path);
    return 0;
}

int cmd_e(unsigned sigma, long long n, std::optional<long long> k,
          const std::string& format, const std::string& out_path) {
    const GuardLimits guards = GuardLimits::from_env();
    if (n < 0) throw precondition_error("n must be >= 0");
    ETable table(sigma, static_cast<unsigned>(n), guards);
    if (k) {
        std::vector<Natural> one{table.at(n, *k)};
        emit(one, format == "plain" ? "plain" : format, *k, out_path);
        return 0;
    }
    std::vector<Natural> row;
    for (long long kk = n; kk <= static_cast<long long>(sigma + 1) * n; ++kk)
        row.push_back(table.at(n, kk));
    if (format == "plain") {
        std::ostringstream os;
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? " " : "") << row[i];
        os << '\n';
        if (out_path.empty()) {
            std::cout << os.str();
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw precondition_error("cannot open output file: " + out_path);
            f << os.str();
        }
    } else {
        emit(row, format, n, out_path);  // indexed by k
    }
    return 0;
}

int cmd_verify(unsigned sigma, long long nmax, bool deep) {
    const GuardLimits guards = GuardLimits::from_env();
    VerificationReport report = run_verification(sigma, nmax, deep, guards);
    for (const auto& c : report.checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.pass && !c.detail.empty()) std::cout << "  [" << c.detail << "]";
        std::cout << '\n';
    }
    for (const auto& note : report.notes) std::cout << note << '\n';
    return report.all_pass() ? 0 : 1;
}

int cmd_oracle(unsigned sigma, unsigned gifts, bool list) {
    const GuardLimits guards = GuardLimits::from_env();
    if (gifts < 1) throw precondition_error("--gifts must be >= 1");
    std::cout << count_full_game_playouts({sigma, gifts}, guards) << '\n';
    if (list) {
        if (gifts > 3)
            throw guard_error("--list is limited to 3 gifts (sequence counts explode)");
        enumerate_gamma_sequences(sigma, gifts - 1, [](const std::vector<unsigned>& seq) {
            std::string s;
            for (unsigned v : seq) s += std::to_string(v);
            std::cout << s << '\n';
        }, guards);
    }
    return 0;
}

int cmd_guess(unsigned sigma, long long terms, unsigned max_order, unsigned max_degree,
              unsigned guard_terms, bool demo_constant) {
    const GuardLimits guards = GuardLimits::from_env();
    GuessQuery q;
    q.max_order = max_order;
    q.max_degree = max_degree;
    q.guard_terms = guard_terms;
    if (demo_constant) {
        const std::size_t needed =
            static_cast<std::size_t>(max_order + 1) * (max_degree + 1) + max_order +
            guard_terms;
        q.terms.assign(std::max<std::size_t>(needed, static_cast<std::size_t>(terms) + guard_terms),
                       Natural(5));
        auto spec = guess_recurrence(q);
        std::cout << (spec ? spec->relation_string() : std::string("NONE")) << '\n';
        return 0;
    }
    if (terms < 1) throw precondition_error("--terms must be >= 1");
    q.terms = g_by_sum(sigma, terms + guard_terms - 1, guards).values;
    auto spec = guess_recurrence(q);
    if (!spec) {
        std::cout << "NONE\n";
        return 0;
    }
    std::cout << spec->lhs.str() << '\n';
    for (const auto& p : spec->rhs) std::cout << p.str() << '\n';
    std::cerr << "relation: " << spec->relation_string()
              << "   (valid from n = " << spec->valid_from << ")\n";
    return 0;
}

int cmd_bench(unsigned sigma, long long nmax, const std::string& methods_csv,
              unsigned repeat) {
    const GuardLimits guards = GuardLimits::from_env();
    std::vector<std::string> methods;
    {
        std::stringstream ss(methods_csv);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) methods.push_back(item);
    }
    if (methods.empty()) throw precondition_error("--methods must name at least one method");

    std::vector<std::vector<Natural>> results;
    for (const auto& method : methods) {
        double best = -1.0;
        std::vector<Natural> values;
        for (unsigned r = 0; r < std::max(1u, repeat); ++r) {
            auto t0 = std::chrono::steady_clock::now();
            values = compute_g(sigma, nmax, method, guards);
            auto t1 = std::chrono::steady_clock::now();
            double secs = std::chrono::duration<double>(t1 - t0).count();
            if (best < 0 || secs < best) best = secs;
        }
        unsigned long long bits =
            values.back().is_zero()
                ? 0
                : boost::multiprecision::msb(values.back().value()) + 1;
        std::cerr << "method " << method << ": " << best << " s, final value "
                  << bits << " bits\n";
        results.push_back(std::move(values));
    }
    for (std::size_t i = 1; i < results.size(); ++i) {
        if (results[i].size() != results[0].size()) {
            std::cerr << "MISMATCH: method " << methods[i] << " returned "
                      << results[i].size() << " values, expected " << results[0].size()
                      << "\n";
            return 1;
        }
        for (std::size_t n = 0; n < results[0].size(); ++n)
            if (results[i][n] != results[0][n]) {
                std::cerr << "MISMATCH: methods " << methods[0] << " and " << methods[i]
                          << " disagree at n = " << n << ": " << results[0][n] << " vs "
                          << results[i][n] << "\n";
                return 1;
            }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact gift-exchange playout counting, verification, and sequence tools"};
    app.require_subcommand(1);

    unsigned sigma = 1;
    long long nmax = 0, n = 0, k = 0, terms = 15, offset = 0;
    unsigned gifts = 1, max_order = 3, max_degree = 3, guard_terms = 10, repeat = 1;
    bool deep = false, list = false, demo_constant = false, has_k = false;
    std::string method = "sum", format = "plain", out_path, methods_csv = "sum";

    auto* g = app.add_subcommand("g", "compute G_sigma(0..nmax)");
    g->add_option("--sigma", sigma, "steal limit per gift")->required();
    g->add_option("--nmax", nmax, "largest n")->required();
    g->add_option("--method", method, "sum|multinomial|moments|typec|typed");
    g->add_option("--format", format, "bfile|csv|plain");
    g->add_option("--offset", offset, "first index for bfile/csv output");
    g->add_option("--out", out_path, "write to file instead of stdout");

    auto* e = app.add_subcommand("e", "compute a row (or one entry) of E_sigma(n,k)");
    e->add_option("--sigma", sigma, "steal limit per gift")->required();
    e->add_option("--n", n, "number of blocks")->required();
    auto* kopt = e->add_option("--k", k, "number of elements (single entry)");
    e->add_option("--format", format, "bfile|csv|plain");
    e->add_option("--out", out_path, "write to file instead of stdout");

    auto* v = app.add_subcommand("verify", "run the cross-method verification suite");
    v->add_option("--sigma", sigma, "steal limit per gift")->required();
    v->add_option("--nmax", nmax, "largest n to verify")->default_val(20);
    v->add_flag("--deep", deep, "also replay the exhaustive oracles");

    auto* o = app.add_subcommand("oracle", "count full-game playouts by brute force");
    o->add_option("--sigma", sigma, "steal limit per gift")->required();
    o->add_option("--gifts", gifts, "number of gifts = players")->required();
    o->add_flag("--list", list, "also list the gamma sequences (gifts <= 3)");

    auto* gu = app.add_subcommand("guess", "rediscover a recurrence from sequence terms");
    gu->add_option("--sigma", sigma, "steal limit per gift")->required();
    gu->add_option("--terms", terms, "number of fitted terms");
    gu->add_option("--max-order", max_order, "largest recurrence order tried");
    gu->add_option("--max-degree", max_degree, "largest coefficient degree tried");
    gu->add_option("--guard", guard_terms, "held-out terms used only for validation");
    gu->add_flag("--demo-constant", demo_constant, "guess on a constant demo sequence");

    auto* b = app.add_subcommand("bench", "time methods against each other");
    b->add_option("--sigma", sigma, "steal limit per gift")->required();
    b->add_option("--nmax", nmax, "largest n")->required();
    b->add_option("--methods", methods_csv, "comma-separated method list")->required();
    b->add_option("--repeat", repeat, "repetitions per method (best time wins)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    has_k = kopt->count() > 0;

    try {
        if (app.got_subcommand(g)) return cmd_g(sigma, nmax, method, format, offset, out_path);
        if (app.got_subcommand(e))
            return cmd_e(sigma, n, has_k ? std::optional<long long>(k) : std::nullopt,
                         format, out_path);
        if (app.got_subcommand(v)) return cmd_verify(sigma, nmax, deep);
        if (app.got_subcommand(o)) return cmd_oracle(sigma, gifts, list);
        if (app.got_subcommand(gu))
            return cmd_guess(sigma, terms, max_order, max_degree, guard_terms, demo_constant);
        if (app.got_subcommand(b)) return cmd_bench(sigma, nmax, methods_csv, repeat);
    } catch (const guard_error& err) {
        return fail_usage(std::string("resource guard: ") + err.what());
    } catch (const precondition_error& err) {
        return fail_usage(err.what());
    } catch (const singularity_error& err) {
        return fail_usage(err.what());
    } catch (const inconsistency_error& err) {
        std::cerr << "internal inconsistency: " << err.what() << "\n";
        return 1;
    }
    return 2;
}
