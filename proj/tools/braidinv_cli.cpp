#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidinv/invariants.hpp"
#include "braidinv/os_algebra.hpp"
#include "braidinv/theorems.hpp"
#include "braidinv/vg_ring.hpp"

using namespace braidinv;
using nlohmann::json;

namespace {

RingKind parse_ring(const std::string& s) {
    if (s == "os") return RingKind::OS;
    if (s == "vg") return RingKind::VG;
    throw CLI::ValidationError("--ring", "must be 'os' or 'vg'");
}

int thread_count(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("BRAIDINV_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

int cmd_hilbert(const std::string& ring, int n, bool invariant, const std::string& format) {
    RingKind kind = parse_ring(ring);
    std::vector<long long> coeffs = invariant
                                        ? invariants::hilbert_invariants(kind, n)
                                        : invariants::hilbert_full(n);
    if (format == "json") {
        json j{{"ring", ring == "os" ? "OS" : "VG"},
               {"n", n},
               {invariant ? "invariant_hilbert" : "hilbert", coeffs}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "[";
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            std::cout << (i ? "," : "") << coeffs[i];
        std::cout << "]\n";
    }
    return 0;
}

int cmd_straighten(const std::string& ring, int n, const std::string& text,
                   const std::string& format) {
    RingKind kind = parse_ring(ring);
    AlgElement x = AlgElement::parse(kind, n, text);
    if (format == "json") {
        std::cout << json{{"ring", ring == "os" ? "OS" : "VG"},
                          {"n", n},
                          {"input", text},
                          {"element", x.str()}}
                         .dump()
                  << "\n";
    } else {
        std::cout << x.str() << "\n";
    }
    return 0;
}

int cmd_invariant_basis(const std::string& ring, int n, int degree, const std::string& format) {
    RingKind kind = parse_ring(ring);
    auto basis = degree > n ? std::vector<AlgElement>{}
                            : invariants::invariant_subspace(kind, n, degree);
    if (format == "json") {
        json vecs = json::array();
        for (const auto& b : basis) vecs.push_back(b.str());
        std::cout << json{{"ring", ring == "os" ? "OS" : "VG"},
                          {"n", n},
                          {"degree", degree},
                          {"dimension", basis.size()},
                          {"basis", vecs}}
                         .dump()
                  << "\n";
    } else {
        for (const auto& b : basis) std::cout << b.str() << "\n";
        if (basis.empty()) std::cout << "(empty)\n";
    }
    return 0;
}

int cmd_verify(const std::string& statement, int n, int max_n, bool extended, int threads,
               const std::string& format, bool verbose) {
    std::vector<std::string> ids;
    if (statement == "all") {
        ids = theorems::statement_ids();
    } else {
        if (!theorems::run_statement(statement, 2)) {
            std::cerr << "unknown statement id '" << statement << "'\n";
            return 2;
        }
        ids = {statement};
    }
    std::vector<int> ns;
    if (n > 0) {
        ns = {n};
    } else {
        int hi = max_n > 0 ? max_n : (extended ? 7 : 5);
        for (int k = 2; k <= hi; ++k) ns.push_back(k);
    }
    struct Job {
        std::string id;
        int n;
    };
    std::vector<Job> jobs;
    for (const auto& id : ids)
        for (int k : ns) jobs.push_back({id, k});

    std::vector<theorems::VerificationReport> reports(jobs.size());
    std::atomic<std::size_t> next{0};
    const int t = std::min<int>(thread_count(threads), static_cast<int>(jobs.size()));
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            reports[i] = *theorems::run_statement(jobs[i].id, jobs[i].n);
        }
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < t; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    bool all_pass = true;
    if (format == "json") {
        json out = json::array();
        for (const auto& r : reports) {
            out.push_back(r.to_json());
            all_pass = all_pass && r.pass;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            all_pass = all_pass && r.pass;
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.statement << " n=" << r.n;
            if (!r.pass || verbose) {
                if (!r.detail.is_null()) std::cout << "  " << r.detail.dump();
            }
            std::cout << "\n";
        }
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the Orlik-Solomon algebra and "
                 "Varchenko-Gelfand ring of the braid arrangement"};
    app.require_subcommand(1);
    std::string format = "text";
    bool verbose = false;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("-v,--verbose", verbose, "Verbose output");

    auto* hilbert = app.add_subcommand("hilbert", "Graded dimensions of a ring or its invariants");
    hilbert->fallthrough();
    std::string h_ring;
    int h_n = 0;
    bool h_inv = false;
    hilbert->add_option("--ring", h_ring, "os or vg")->required();
    hilbert->add_option("--n", h_n, "Rank of the braid arrangement")->required()
        ->check(CLI::Range(1, 12));
    hilbert->add_flag("--invariant", h_inv, "Invariant subring dimensions");

    auto* straighten = app.add_subcommand("straighten", "NBC normal form of a generator word");
    straighten->fallthrough();
    std::string s_ring, s_text;
    int s_n = 0;
    straighten->add_option("--ring", s_ring, "os or vg")->required();
    straighten->add_option("--n", s_n, "Rank")->required()->check(CLI::Range(1, 12));
    straighten->add_option("text", s_text, "Element text, e.g. e[1,3]e[2,3]")->required();

    auto* verify = app.add_subcommand("verify", "Run verification procedures");
    verify->fallthrough();
    std::string v_statement = "all";
    int v_n = 0, v_max_n = 0, v_threads = 0;
    bool v_extended = false;
    verify->add_option("--statement", v_statement, "Statement id or 'all'");
    verify->add_option("--n", v_n, "Single rank to check");
    verify->add_option("--max-n", v_max_n, "Check all ranks 2..max-n");
    verify->add_flag("--extended", v_extended, "Extend the default range to n = 7");
    verify->add_option("--threads", v_threads, "Worker threads (default: BRAIDINV_THREADS or all cores)");

    auto* invbasis = app.add_subcommand("invariant-basis", "Basis of an invariant graded piece");
    invbasis->fallthrough();
    std::string b_ring;
    int b_n = 0, b_degree = -1;
    invbasis->add_option("--ring", b_ring, "os or vg")->required();
    invbasis->add_option("--n", b_n, "Rank")->required()->check(CLI::Range(1, 12));
    invbasis->add_option("--degree", b_degree, "Degree")->required()->check(CLI::Range(0, 12));

    try {
        app.parse(argc, argv);
        if (hilbert->parsed()) return cmd_hilbert(h_ring, h_n, h_inv, format);
        if (straighten->parsed()) return cmd_straighten(s_ring, s_n, s_text, format);
        if (verify->parsed())
            return cmd_verify(v_statement, v_n, v_max_n, v_extended, v_threads, format, verbose);
        if (invbasis->parsed()) return cmd_invariant_basis(b_ring, b_n, b_degree, format);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
