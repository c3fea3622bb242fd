// involab: enumeration of pattern-avoiding involutions, their generating
// functions, growth rates, and the 1324 coloring bound.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure.

#include "involab/coloring.hpp"
#include "involab/enumerate.hpp"
#include "involab/gf.hpp"
#include "involab/growth.hpp"
#include "involab/permutation.hpp"
#include "involab/reference_data.hpp"
#include "involab/series.hpp"
#include "involab/staircase.hpp"
#include "involab/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <thread>

namespace {

using namespace involab;

constexpr int kDefaultMaxN = 20;

int enumeration_cap() {
    if (const char* env = std::getenv("INVOLAB_MAX_N")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("INVOLAB_MAX_N", "must be an integer");
        }
    }
    return kDefaultMaxN;
}

void check_cap(int n) {
    const int cap = enumeration_cap();
    if (n > cap)
        throw CLI::ValidationError(
            "n", "exceeds the enumeration cap " + std::to_string(cap) +
                     " (raise INVOLAB_MAX_N to override)");
    if (n < 0) throw CLI::ValidationError("n", "must be nonnegative");
}

std::vector<Permutation> parse_basis(const std::string& text) {
    std::vector<Permutation> basis;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ';')) basis.push_back(Permutation::parse(tok));
    if (basis.empty()) throw CLI::ValidationError("basis", "needs at least one pattern");
    return basis;
}

int default_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// ------------------------------------------------------------- printing ----

void print_series(const UniSeries& s, int lo, int hi, const std::string& format) {
    if (format == "bfile") {
        std::cout << s.to_bfile(lo, hi);
    } else if (format == "json") {
        std::cout << s.to_json(lo, hi) << "\n";
    } else if (format == "csv") {
        std::cout << "n,coefficient\n";
        for (int k = lo; k <= hi; ++k)
            std::cout << k << ',' << s.integer_coeff(k).get_str() << "\n";
    } else {
        // Plain text: the coefficients themselves, one per line.
        for (int k = lo; k <= hi; ++k) std::cout << s.integer_coeff(k).get_str() << "\n";
    }
}

struct TableData {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void print_table(const TableData& t, const std::string& format) {
    const char sep = (format == "csv") ? ',' : ' ';
    std::vector<size_t> width(t.header.size(), 0);
    if (format != "csv")
        for (size_t c = 0; c < t.header.size(); ++c) {
            width[c] = t.header[c].size();
            for (const auto& row : t.rows) width[c] = std::max(width[c], row[c].size());
        }
    auto emit = [&](const std::vector<std::string>& row) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) std::cout << sep;
            if (format != "csv" && row[c].size() < width[c])
                std::cout << std::string(width[c] - row[c].size(), ' ');
            std::cout << row[c];
        }
        std::cout << "\n";
    };
    emit(t.header);
    for (const auto& row : t.rows) emit(row);
}

// ------------------------------------------------------------- commands ----

struct CountOptions {
    std::string pattern;
    std::string basis;
    int n = -1;
    int from = -1, to = -1;
    bool involutions = false;
    bool simple = false;
    int threads = default_threads();
    std::string format = "text";
};

int run_count(const CountOptions& opt) {
    std::vector<Permutation> basis;
    if (!opt.pattern.empty()) basis.push_back(Permutation::parse(opt.pattern));
    if (!opt.basis.empty()) {
        auto more = parse_basis(opt.basis);
        basis.insert(basis.end(), more.begin(), more.end());
    }
    if (basis.empty()) throw CLI::ValidationError("count", "need --pattern or --basis");
    const int lo = opt.from >= 0 ? opt.from : opt.n;
    const int hi = opt.to >= 0 ? opt.to : opt.n;
    if (lo < 0 || hi < lo) throw CLI::ValidationError("count", "need --n or --from/--to");
    check_cap(hi);
    if (opt.simple && !opt.involutions)
        throw CLI::ValidationError("count", "--simple requires --involutions");
    if (opt.simple && basis.size() != 1)
        throw CLI::ValidationError("count", "--simple takes a single pattern");

    TableData t;
    t.header = {"n", "count"};
    if (opt.simple) {
        for (int n = lo; n <= hi; ++n)
            t.rows.push_back(
                {std::to_string(n), count_simple_avoiders(basis.front(), n, opt.threads).get_str()});
    } else {
        const CountTable table = tabulate_avoiders(basis, lo, hi, opt.involutions, opt.threads);
        for (const auto& [n, c] : table.rows) t.rows.push_back({std::to_string(n), c.get_str()});
    }
    if (lo == hi && opt.format == "text") {
        std::cout << t.rows.front()[1] << "\n";
    } else {
        print_table(t, opt.format);
    }
    return 0;
}

int run_simples(const std::string& basis_text, int n, bool involutions_only) {
    check_cap(n);
    const auto basis = parse_basis(basis_text);
    if (involutions_only) {
        if (basis.size() != 1)
            throw CLI::ValidationError("simples", "--involutions takes a single pattern");
        for (const auto& p : simple_involutions_avoiding(basis.front(), n)) std::cout << p.str() << "\n";
    } else {
        for (const auto& p : simples_of_class(basis, n)) std::cout << p.str() << "\n";
    }
    return 0;
}

UniSeries series_for_class(const std::string& name, int order) {
    if (name == "av-i-2413" || name == "separable") return gf_separable_involutions(order);
    if (name == "av-i-1342") return assemble_1342(order);
    if (name == "av-i-2341") return assemble_2341(order);
    if (name == "av-i-1234" || name == "motzkin") return gf_known(Gf::Motzkin, order);
    if (name == "av-i-123" || name == "central-binomial-involutions")
        return gf_known(Gf::CentralBinomialInvolutions, order);
    if (name == "word-pairs") return gf_word_pairs(order);
    if (name == "simple-av-i-123-fp0") return staircase::closed(0, order);
    if (name == "simple-av-i-123-fp1") return staircase::closed(1, order);
    if (name == "simple-av-i-123-fp2") return staircase::closed(2, order);
    return gf_known(name, order);  // catalog names; throws on unknown
}

int run_gf(const std::string& cls, int order, const std::string& format) {
    if (order < 0) throw CLI::ValidationError("gf", "--order must be nonnegative");
    print_series(series_for_class(cls, order), 0, order, format);
    return 0;
}

int run_growth(const std::string& cls, int max_n, int threads, const std::string& format) {
    GrowthReport rep;
    if (cls == "av-i-2431" || cls == "av-i-3421" || cls == "av-i-4231") {
        check_cap(max_n);
        const Permutation beta = Permutation::parse(cls.substr(5));
        std::vector<BigInt> counts;
        for (int n = 1; n <= max_n; ++n) counts.push_back(count_avoiders({beta}, n, true, threads));
        rep = empirical_growth(counts, cls);
    } else if (cls == "av-i-1324") {
        const auto constants = growth_constants();
        const GrowthReport lower = constants.at("av-i-1324-lower");
        const GrowthReport upper = constants.at("av-i-1324-upper");
        if (format == "json") {
            std::cout << "[" << lower.to_json() << "," << upper.to_json() << "]\n";
        } else {
            std::cout << "av-i-1324 upper growth rate: > " << lower.value() << " (" << lower.note
                      << "), < " << upper.value() << " (" << upper.note << ")\n";
        }
        return 0;
    } else {
        const auto constants = growth_constants();
        const auto it = constants.find(cls);
        if (it == constants.end()) throw CLI::ValidationError("growth", "unknown class " + cls);
        rep = it->second;
    }
    if (format == "json") {
        std::cout << rep.to_json() << "\n";
    } else {
        std::cout << rep.source << ": " << rep.value() << " [" << rep.method << "]"
                  << (rep.certified ? "" : " (not certified)");
        if (!rep.note.empty()) std::cout << " - " << rep.note;
        std::cout << "\n";
    }
    return 0;
}

int run_verify(const std::string& suite, int max_n, int threads) {
    check_cap(max_n);
    const auto results = run_verification(suite, VerifyOptions{max_n, threads});
    int failures = 0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[ok]   " : "[FAIL] ") << r.name;
        if (!r.detail.empty()) std::cout << " - " << r.detail;
        std::cout << "\n";
        if (!r.pass) ++failures;
    }
    std::cout << results.size() << " checks, " << failures << " failed\n";
    return failures == 0 ? 0 : 2;
}

int run_color(const std::string& perm_text, const std::string& format) {
    const Permutation pi = Permutation::parse(perm_text);
    const ColoredPerm cp = color_1324(pi);
    const LabelWordPair w = encode(pi);
    if (format == "json") {
        std::cout << "{\"perm\":\"" << pi.str() << "\",\"colors\":\"";
        for (auto c : cp.colors) std::cout << (c == EntryColor::Red ? 'R' : 'B');
        std::cout << "\",\"e\":\"" << w.e << "\",\"v\":\"" << w.v << "\"}\n";
        return 0;
    }
    std::cout << "perm:   " << pi.str() << "\n";
    std::cout << "colors: ";
    for (auto c : cp.colors) std::cout << (c == EntryColor::Red ? 'R' : 'B');
    std::cout << "\n";
    std::cout << "e:      " << w.e << "\n";
    std::cout << "v:      " << w.v << "\n";
    return 0;
}

int run_table(const std::string& which, int max_n, int threads, const std::string& format) {
    TableData t;
    if (which == "1" || which == "2") {
        const bool first = which == "1";
        const int lo = first ? 5 : 12;
        const int default_hi = first ? 11 : 16;
        const int hi = max_n > 0 ? max_n : default_hi;
        check_cap(hi);
        const auto& order = first ? reference::kTable1Order : reference::kTable2Order;
        t.header.push_back("n");
        for (const char* p : order) t.header.push_back(p);
        for (int n = lo; n <= hi; ++n) {
            std::vector<std::string> row{std::to_string(n)};
            for (const char* p : order)
                row.push_back(count_avoiders({Permutation::parse(p)}, n, true, threads).get_str());
            t.rows.push_back(std::move(row));
        }
    } else if (which == "3") {
        const int hi = max_n > 0 ? max_n : 14;
        check_cap(hi);
        t.header.push_back("n");
        for (const char* p : reference::kTable3Order) t.header.push_back(p);
        for (int n = 5; n <= hi; ++n) {
            std::vector<std::string> row{std::to_string(n)};
            for (const char* p : reference::kTable3Order)
                row.push_back(count_simple_avoiders(Permutation::parse(p), n, threads).get_str());
            t.rows.push_back(std::move(row));
        }
    } else if (which == "ratios") {
        const int hi = max_n > 0 ? max_n : 12;
        check_cap(hi);
        t.header = {"n", "av_i_2413_over_av_i_1324", "av_i_1234_over_av_i_1324"};
        const Permutation p2413{2, 4, 1, 3}, p1234{1, 2, 3, 4}, p1324{1, 3, 2, 4};
        for (int n = 0; n <= hi; ++n) {
            const BigInt c1324 = count_avoiders({p1324}, n, true, threads);
            const Rational r2413 = ratio(count_avoiders({p2413}, n, true, threads), c1324);
            const Rational r1234 = ratio(count_avoiders({p1234}, n, true, threads), c1324);
            t.rows.push_back({std::to_string(n), to_decimal(r2413, 6), to_decimal(r1234, 6)});
        }
        if (format == "text") {
            print_table(t, "csv");  // ratio data is emitted as CSV
            return 0;
        }
    } else {
        throw CLI::ValidationError("table", "expected 1, 2, 3 or ratios");
    }
    print_table(t, format);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pattern-avoiding involutions: enumeration, generating functions, growth rates"};
    app.require_subcommand(1);
    bool timing = false;
    app.add_flag("--timing", timing, "print wall time to stderr");

    CountOptions count_opt;
    auto* count = app.add_subcommand("count", "count avoiders of a pattern or basis");
    count->add_option("--pattern", count_opt.pattern, "single pattern, e.g. 1342");
    count->add_option("--basis", count_opt.basis, "semicolon-separated basis, e.g. 1342;1423");
    count->add_option("--n", count_opt.n, "length");
    count->add_option("--from", count_opt.from, "first length of a range");
    count->add_option("--to", count_opt.to, "last length of a range");
    count->add_flag("--involutions", count_opt.involutions, "count involutions only");
    count->add_flag("--simple", count_opt.simple, "count simple involutions only");
    count->add_option("--threads", count_opt.threads, "worker threads");
    count->add_option("--format", count_opt.format, "text|csv|json|bfile");

    std::string simples_basis;
    int simples_n = 0;
    bool simples_inv = false;
    auto* simples = app.add_subcommand("simples", "list simple permutations of a class");
    simples->add_option("--basis", simples_basis, "semicolon-separated basis")->required();
    simples->add_option("--n", simples_n, "length")->required();
    simples->add_flag("--involutions", simples_inv, "restrict to involutions");

    std::string gf_class = "av-i-1342", gf_format = "text";
    int gf_order = 20;
    auto* gf = app.add_subcommand("gf", "expand a generating function");
    gf->add_option("--class", gf_class,
                   "av-i-2413|av-i-1342|av-i-2341|av-i-1234|av-i-123|word-pairs|catalan|"
                   "large-schroder|small-schroder|layered|motzkin|central-binomial-involutions|"
                   "simple-av-i-123-fp0|fp1|fp2");
    gf->add_option("--order", gf_order, "truncation degree");
    gf->add_option("--format", gf_format, "text|csv|json|bfile");

    std::string growth_class = "av-i-1342", growth_format = "text";
    int growth_max_n = 14;
    int growth_threads = default_threads();
    auto* growth = app.add_subcommand("growth", "growth-rate report for a class");
    growth->add_option("--class", growth_class, "class identifier, e.g. av-i-2341");
    growth->add_option("--max-n", growth_max_n, "enumeration depth for empirical estimates");
    growth->add_option("--threads", growth_threads, "worker threads");
    growth->add_option("--format", growth_format, "text|json");

    std::string verify_suite = "all";
    int verify_max_n = 12;
    int verify_threads = default_threads();
    auto* verify = app.add_subcommand("verify", "run the cross-check suite");
    verify->add_option("--suite", verify_suite, "perm|enumerate|series|staircase|coloring|growth|props|all");
    verify->add_option("--max-n", verify_max_n, "cap on exhaustive depths");
    verify->add_option("--threads", verify_threads, "worker threads");

    std::string color_perm, color_format = "text";
    auto* color = app.add_subcommand("color", "red/blue coloring and word encoding of a 1324-avoider");
    color->add_option("--perm", color_perm, "one-line notation")->required();
    color->add_option("--format", color_format, "text|json");

    std::string table_which, table_format = "text";
    int table_max_n = 0, table_threads = default_threads();
    auto* table = app.add_subcommand("table", "reproduce a published table (1, 2, 3) or the ratio data");
    table->add_option("index", table_which, "1|2|3|ratios")->required();
    table->add_option("--max-n", table_max_n, "last length to compute");
    table->add_option("--threads", table_threads, "worker threads");
    table->add_option("--format", table_format, "text|csv");

    const auto started = std::chrono::steady_clock::now();
    int status = 0;
    try {
        app.parse(argc, argv);
        if (count->parsed()) status = run_count(count_opt);
        else if (simples->parsed()) status = run_simples(simples_basis, simples_n, simples_inv);
        else if (gf->parsed()) status = run_gf(gf_class, gf_order, gf_format);
        else if (growth->parsed()) status = run_growth(growth_class, growth_max_n, growth_threads, growth_format);
        else if (verify->parsed()) status = run_verify(verify_suite, verify_max_n, verify_threads);
        else if (color->parsed()) status = run_color(color_perm, color_format);
        else if (table->parsed()) status = run_table(table_which, table_max_n, table_threads, table_format);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    if (timing) {
        const auto elapsed =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
        std::cerr << "elapsed: " << elapsed.count() << " ms\n";
    }
    return status;
}
