#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "lexcount/biword.hpp"
#include "lexcount/json_io.hpp"
#include "lexcount/lpp.hpp"
#include "lexcount/moments.hpp"
#include "lexcount/rsk.hpp"
#include "lexcount/verify.hpp"

namespace {

using lexcount::json;

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GuardRefusal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    std::string format = "text";
    std::string path;  // empty: stdout
    bool no_timing = false;
    bool force = false;
};

unsigned thread_degree() {
    const char* s = std::getenv("LEXCOUNT_THREADS");
    if (!s || !*s) {
        unsigned hc = std::thread::hardware_concurrency();
        return hc ? hc : 1;
    }
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos == std::strlen(s) && v >= 1)
            return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw UsageError("LEXCOUNT_THREADS must be a positive integer");
}

void deliver(const Output& out, const std::string& payload) {
    if (out.path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(out.path, std::ios::binary);
    if (!f)
        throw UsageError("cannot open output file: " + out.path);
    f << payload;
    f.flush();
    if (!f)
        throw UsageError("failed writing output file: " + out.path);
}

std::string dump(const json& j) {
    return j.dump(2) + "\n";
}

json read_json_input(const std::string& path) {
    try {
        if (path.empty() || path == "-")
            return json::parse(std::cin);
        std::ifstream f(path);
        if (!f)
            throw UsageError("cannot open input file: " + path);
        return json::parse(f);
    } catch (const json::exception& e) {
        throw UsageError(std::string("invalid JSON input: ") + e.what());
    }
}

void guard_or_refuse(lexcount::Method method, int m, int n, bool force) {
    if (lexcount::within_guard(method, m, n))
        return;
    std::string what = lexcount::method_name(method) + " at m=" + std::to_string(m) +
                       " N=" + std::to_string(n) + " exceeds the guard limit";
    if (!force)
        throw GuardRefusal(what + "; pass --force to run it anyway");
    std::cerr << "warning: " << what << ", continuing under --force\n";
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     t0)
        .count();
}

int render_count(const Output& out, const char* command, int m, int n,
                 const std::string& method, const mpz_class& value, double ms) {
    if (out.format == "json") {
        json j;
        j["command"] = command;
        j["m"] = m;
        j["N"] = n;
        j["method"] = method;
        j["count"] = lexcount::dec_string(value);
        if (!out.no_timing)
            j["wall_ms"] = ms;
        deliver(out, dump(j));
    } else if (out.format == "csv") {
        std::ostringstream s;
        s << "m,N,method,count" << (out.no_timing ? "" : ",wall_ms") << "\n"
          << m << "," << n << "," << method << "," << value.get_str();
        if (!out.no_timing)
            s << "," << ms;
        s << "\n";
        deliver(out, s.str());
    } else {
        std::ostringstream s;
        s << value.get_str() << "\n"
          << "# method " << method << "\n"
          << "# m " << m << "\n"
          << "# N " << n << "\n";
        if (!out.no_timing)
            s << "# wall-ms " << ms << "\n";
        deliver(out, s.str());
    }
    return kExitOk;
}

int cmd_count(const Output& out, int m, int n, const std::string& method_str,
              unsigned threads) {
    auto method = lexcount::method_from_name(method_str);
    if (!method)
        throw UsageError("unknown method: " + method_str);
    guard_or_refuse(*method, m, n, out.force);
    auto t0 = std::chrono::steady_clock::now();
    mpz_class value = lexcount::count_by_method(*method, m, n, threads);
    return render_count(out, "count", m, n, method_str, value, elapsed_ms(t0));
}

std::vector<std::pair<int, int>> build_cells(const std::vector<std::string>& tokens,
                                             int max_m, int max_n) {
    std::vector<std::pair<int, int>> cells;
    if (!tokens.empty()) {
        if (max_m >= 0 || max_n >= 0)
            throw UsageError("give either --cells or --max-m/--max-N, not both");
        for (const auto& t : tokens) {
            if (t.empty())
                continue;
            auto colon = t.find(':');
            int m = -1, n = -1;
            try {
                std::size_t p1 = 0, p2 = 0;
                if (colon != std::string::npos) {
                    m = std::stoi(t.substr(0, colon), &p1);
                    n = std::stoi(t.substr(colon + 1), &p2);
                }
                if (colon == std::string::npos || p1 != colon ||
                    p2 != t.size() - colon - 1 || m < 0 || n < 0)
                    throw UsageError("bad cell \"" + t + "\": expected m:N");
            } catch (const UsageError&) {
                throw;
            } catch (const std::exception&) {
                throw UsageError("bad cell \"" + t + "\": expected m:N");
            }
            cells.emplace_back(m, n);
        }
        return cells;
    }
    if ((max_m >= 0) != (max_n >= 0))
        throw UsageError("--max-m and --max-N go together");
    if (max_m >= 0)
        for (int m = 0; m <= max_m; ++m)
            for (int n = 0; n <= max_n; ++n)
                cells.emplace_back(m, n);
    return cells;
}

int cmd_verify(const Output& out, const std::vector<std::string>& cell_tokens,
               int max_m, int max_n, const std::vector<std::string>& method_names,
               unsigned threads) {
    auto cells = build_cells(cell_tokens, max_m, max_n);
    std::vector<lexcount::Method> methods;
    for (const auto& name : method_names) {
        auto method = lexcount::method_from_name(name);
        if (!method)
            throw UsageError("unknown method: " + name);
        methods.push_back(*method);
    }
    for (auto method : methods)
        for (auto [m, n] : cells)
            guard_or_refuse(method, m, n, out.force);

    auto report = lexcount::run_verification(cells, methods, threads);

    if (out.format == "json") {
        json jcells = json::array();
        for (const auto& cell : report.cells) {
            json results = json::array();
            for (const auto& r : cell.results) {
                json e;
                e["method"] = lexcount::method_name(r.method);
                e["count"] = lexcount::dec_string(r.value);
                if (!out.no_timing)
                    e["wall_ms"] = r.wall_ms;
                results.push_back(std::move(e));
            }
            json c;
            c["m"] = cell.m;
            c["N"] = cell.n;
            c["results"] = std::move(results);
            c["agree"] = cell.agree;
            jcells.push_back(std::move(c));
        }
        json j;
        j["command"] = "verify";
        j["cells"] = std::move(jcells);
        j["all_agree"] = report.all_agree;
        deliver(out, dump(j));
    } else if (out.format == "csv") {
        std::ostringstream s;
        s << "m,N,method,count,agree" << (out.no_timing ? "" : ",wall_ms") << "\n";
        for (const auto& cell : report.cells)
            for (const auto& r : cell.results) {
                s << cell.m << "," << cell.n << "," << lexcount::method_name(r.method)
                  << "," << r.value.get_str() << "," << (cell.agree ? "true" : "false");
                if (!out.no_timing)
                    s << "," << r.wall_ms;
                s << "\n";
            }
        deliver(out, s.str());
    } else {
        std::ostringstream s;
        for (const auto& cell : report.cells) {
            s << "m=" << cell.m << " N=" << cell.n;
            for (const auto& r : cell.results)
                s << "  " << lexcount::method_name(r.method) << "=" << r.value.get_str();
            s << (cell.agree ? "  agree" : "  DISAGREE") << "\n";
        }
        s << (report.all_agree ? "all cells agree" : "cross-method disagreement")
          << "\n";
        deliver(out, s.str());
    }
    return report.all_agree ? kExitOk : kExitDisagreement;
}

int cmd_enumerate(const Output& out, int m, int n, int size, unsigned threads) {
    guard_or_refuse(lexcount::Method::brute_arrays, m, n, out.force);
    auto arrays = lexcount::enumerate_biwords(m, n, threads);
    if (size >= 0)
        std::erase_if(arrays, [size](const lexcount::Biword& a) {
            return a.size() != size;
        });

    if (out.format == "json") {
        json list = json::array();
        for (const auto& a : arrays)
            list.push_back(to_json(a));
        json j;
        j["command"] = "enumerate";
        j["m"] = m;
        j["N"] = n;
        if (size >= 0)
            j["size"] = size;
        j["count"] = std::to_string(arrays.size());
        j["arrays"] = std::move(list);
        deliver(out, dump(j));
    } else if (out.format == "csv") {
        std::ostringstream s;
        s << "size,u,v\n";
        for (const auto& a : arrays) {
            std::vector<int> u, v;
            for (const auto& c : a.columns()) {
                u.push_back(c.u);
                v.push_back(c.v);
            }
            s << a.size() << "," << lexcount::render_word(u, m) << ","
              << lexcount::render_word(v, m) << "\n";
        }
        deliver(out, s.str());
    } else {
        std::ostringstream s;
        for (const auto& a : arrays)
            s << lexcount::render_biword(a) << "\n";
        deliver(out, s.str());
    }
    return kExitOk;
}

std::string tableau_text(const lexcount::SemistandardTableau& t) {
    std::ostringstream s;
    if (t.rows().empty())
        s << "  (empty)\n";
    for (const auto& row : t.rows())
        s << "  " << lexcount::render_word(row, t.alphabet()) << "\n";
    return s.str();
}

int cmd_rsk(const Output& out, const std::string& input, bool inverse) {
    if (out.format == "csv")
        throw UsageError("rsk has no csv rendering; use json or text");
    json in = read_json_input(input);
    if (inverse) {
        auto pair = lexcount::tableau_pair_from_json(in);
        lexcount::Biword a = lexcount::rsk_inverse(pair);
        if (out.format == "json")
            deliver(out, dump(to_json(a)));
        else
            deliver(out, lexcount::render_biword(a) + "\n");
    } else {
        lexcount::Biword a = lexcount::biword_from_json(in);
        auto pair = lexcount::rsk_forward(a);
        if (out.format == "json") {
            deliver(out, dump(to_json(pair)));
        } else {
            deliver(out,
                    "P:\n" + tableau_text(pair.p) + "Q:\n" + tableau_text(pair.q));
        }
    }
    return kExitOk;
}

int cmd_lpp_time(const Output& out, const std::string& matrix_path, bool certificate) {
    if (out.format == "csv")
        throw UsageError("lpp time has no csv rendering; use json or text");
    lexcount::PlanarArray x =
        lexcount::planar_array_from_json(read_json_input(matrix_path));
    if (x.dim() < 1)
        throw UsageError("matrix must be at least 1x1");
    long long time = lexcount::last_passage_time(x);
    if (out.format == "json") {
        json j;
        j["command"] = "lpp-time";
        j["m"] = x.dim();
        j["time"] = time;
        if (certificate)
            j["chain"] = to_json(lexcount::chain_certificate(x));
        deliver(out, dump(j));
    } else {
        std::ostringstream s;
        s << time << "\n";
        if (certificate) {
            auto chain = lexcount::chain_certificate(x);
            for (std::size_t i = 0; i < chain.points.size(); ++i)
                s << (i ? " -> " : "") << "(" << chain.points[i].i << ","
                  << chain.points[i].j << ")";
            s << "\n";
        }
        deliver(out, s.str());
    }
    return kExitOk;
}

int cmd_lpp_count(const Output& out, int m, int n, unsigned threads) {
    guard_or_refuse(lexcount::Method::brute_matrices, m, n, out.force);
    auto t0 = std::chrono::steady_clock::now();
    mpz_class value = lexcount::count_matrices(m, n, threads);
    return render_count(out, "lpp-count", m, n, "brute-matrices", value,
                        elapsed_ms(t0));
}

int cmd_zeta_a_factor(const Output& out, int m, long prime_cutoff, int series_cutoff,
                      int precision_bits) {
    auto est = lexcount::a_factor(m, prime_cutoff, series_cutoff, precision_bits);
    if (out.format == "json") {
        json j;
        j["command"] = "zeta-a-factor";
        j["m"] = m;
        json je = to_json(est);
        j.update(je);
        deliver(out, dump(j));
    } else if (out.format == "csv") {
        std::ostringstream s;
        s << "m,value,value_double,prime_cutoff,series_cutoff,precision_bits\n"
          << m << "," << est.value << "," << est.value_approx << ","
          << est.prime_cutoff << "," << est.series_cutoff << ","
          << est.precision_bits << "\n";
        deliver(out, s.str());
    } else {
        std::ostringstream s;
        s << est.value << "\n"
          << "# m " << m << "\n"
          << "# prime-cutoff " << est.prime_cutoff << "\n"
          << "# series-cutoff " << est.series_cutoff << "\n"
          << "# precision-bits " << est.precision_bits << "\n";
        deliver(out, s.str());
    }
    return kExitOk;
}

int cmd_zeta_diag(const Output& out, bool ratio, int m, const std::vector<int>& n_list) {
    lexcount::LimitDiagnostic diag =
        ratio ? lexcount::ratio_estimate(m, n_list) : lexcount::f_estimate(m, n_list);
    const char* command = ratio ? "zeta-ratio" : "zeta-f-estimate";
    if (out.format == "json") {
        json j;
        j["command"] = command;
        j["m"] = m;
        j.update(to_json(diag));
        deliver(out, dump(j));
    } else if (out.format == "csv") {
        std::ostringstream s;
        s << "n,num,den,decimal\n";
        for (const auto& e : diag.entries)
            s << e.n << "," << lexcount::dec_string(e.value.get_num()) << ","
              << lexcount::dec_string(e.value.get_den()) << ","
              << lexcount::decimal_approx(e.value) << "\n";
        deliver(out, s.str());
    } else {
        std::ostringstream s;
        for (const auto& e : diag.entries)
            s << "n=" << e.n << " " << lexcount::dec_string(e.value.get_num()) << "/"
              << lexcount::dec_string(e.value.get_den()) << " "
              << lexcount::decimal_approx(e.value) << "\n";
        if (!diag.successive_differences.empty()) {
            s << "# successive-differences";
            for (const auto& d : diag.successive_differences)
                s << " " << lexcount::decimal_approx(d);
            s << "\n";
        }
        s << "# trend " << diag.trend << "\n";
        if (diag.conditional_on_keating_snaith)
            s << "# conditional on the Keating-Snaith moment conjecture\n";
        deliver(out, s.str());
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact CUE moments and their combinatorial cross-checks"};
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--output", out.path, "write the result to this file");
    app.add_flag("--no-timing", out.no_timing, "omit wall-time fields");
    app.add_flag("--force", out.force, "run brute-force work past the guard limits");

    auto* count = app.add_subcommand("count", "count by one method");
    count->fallthrough();
    int c_m = 0, c_n = 0;
    std::string c_method = "product";
    count->add_option("--m", c_m, "alphabet size")
        ->required()
        ->check(CLI::NonNegativeNumber);
    count->add_option("--N", c_n, "subsequence / passage-time bound")
        ->required()
        ->check(CLI::NonNegativeNumber);
    count->add_option("--method", c_method,
                      "product, partition-sum, brute-arrays, or brute-matrices")
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "cross-check methods on a grid");
    verify->fallthrough();
    std::vector<std::string> v_cells;
    int v_max_m = -1, v_max_n = -1;
    std::vector<std::string> v_methods = {"product", "partition-sum", "brute-arrays",
                                          "brute-matrices"};
    verify->add_option("--cells", v_cells, "explicit m:N cells, comma separated")
        ->delimiter(',');
    verify->add_option("--max-m", v_max_m, "grid over 0..max-m");
    verify->add_option("--max-N", v_max_n, "grid over 0..max-N");
    verify->add_option("--methods", v_methods, "methods to run, comma separated")
        ->delimiter(',');

    auto* enumerate = app.add_subcommand("enumerate", "list the arrays themselves");
    enumerate->fallthrough();
    int e_m = 0, e_n = 0, e_size = -1;
    enumerate->add_option("--m", e_m, "alphabet size")
        ->required()
        ->check(CLI::NonNegativeNumber);
    enumerate->add_option("--N", e_n, "subsequence bound")
        ->required()
        ->check(CLI::NonNegativeNumber);
    enumerate->add_option("--size", e_size, "restrict to arrays of this size")
        ->check(CLI::NonNegativeNumber);

    auto* rsk = app.add_subcommand("rsk", "row-insertion correspondence");
    rsk->fallthrough();
    std::string r_input = "-";
    bool r_inverse = false;
    rsk->add_option("--input", r_input, "biword (or pair, with --inverse) JSON file; - for stdin")
        ->capture_default_str();
    rsk->add_flag("--inverse", r_inverse, "map a tableau pair back to its biword");

    auto* lpp = app.add_subcommand("lpp", "last-passage computations");
    lpp->fallthrough();
    lpp->require_subcommand(1);
    auto* lpp_time = lpp->add_subcommand("time", "passage time of one matrix");
    lpp_time->fallthrough();
    std::string t_matrix;
    bool t_certificate = false;
    lpp_time->add_option("--matrix", t_matrix, "matrix JSON file; - for stdin")
        ->required();
    lpp_time->add_flag("--certificate", t_certificate, "also print a maximizing chain");
    auto* lpp_count = lpp->add_subcommand("count", "matrices with passage time <= N");
    lpp_count->fallthrough();
    int lc_m = 0, lc_n = 0;
    lpp_count->add_option("--m", lc_m, "matrix dimension")
        ->required()
        ->check(CLI::PositiveNumber);
    lpp_count->add_option("--N", lc_n, "passage-time bound")
        ->required()
        ->check(CLI::NonNegativeNumber);

    auto* zeta = app.add_subcommand("zeta", "arithmetic-factor diagnostics");
    zeta->fallthrough();
    zeta->require_subcommand(1);
    auto* za = zeta->add_subcommand("a-factor", "truncated Euler product");
    za->fallthrough();
    int za_m = 0;
    long za_primes = 100000;
    int za_series = 64, za_bits = 128;
    za->add_option("--m", za_m, "moment order")->required()->check(CLI::NonNegativeNumber);
    za->add_option("--prime-cutoff", za_primes, "largest prime used")
        ->capture_default_str()
        ->check(CLI::Range(2L, 100000000L));
    za->add_option("--series-cutoff", za_series, "inner series terms per prime")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    za->add_option("--precision-bits", za_bits, "working precision")
        ->capture_default_str()
        ->check(CLI::Range(64, 4096));
    auto* zf = zeta->add_subcommand("f-estimate", "normalized moments at finite n");
    auto* zr = zeta->add_subcommand("ratio", "same table flagged as conditional");
    int zd_m = 0;
    std::vector<int> zd_n_list;
    for (auto* sub : {zf, zr}) {
        sub->fallthrough();
        sub->add_option("--m", zd_m, "moment order")
            ->required()
            ->check(CLI::PositiveNumber);
        sub->add_option("--N-list", zd_n_list, "comma-separated n values")
            ->required()
            ->delimiter(',');
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        unsigned threads = thread_degree();
        if (app.got_subcommand(count))
            return cmd_count(out, c_m, c_n, c_method, threads);
        if (app.got_subcommand(verify))
            return cmd_verify(out, v_cells, v_max_m, v_max_n, v_methods, threads);
        if (app.got_subcommand(enumerate))
            return cmd_enumerate(out, e_m, e_n, e_size, threads);
        if (app.got_subcommand(rsk))
            return cmd_rsk(out, r_input, r_inverse);
        if (app.got_subcommand(lpp)) {
            if (lpp->got_subcommand(lpp_time))
                return cmd_lpp_time(out, t_matrix, t_certificate);
            return cmd_lpp_count(out, lc_m, lc_n, threads);
        }
        if (app.got_subcommand(zeta)) {
            if (zeta->got_subcommand(za))
                return cmd_zeta_a_factor(out, za_m, za_primes, za_series, za_bits);
            return cmd_zeta_diag(out, zeta->got_subcommand(zr), zd_m, zd_n_list);
        }
        throw std::logic_error("no subcommand dispatched");
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GuardRefusal& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
