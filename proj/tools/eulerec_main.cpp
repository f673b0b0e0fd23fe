// Batch front end: compute sequences, verify the identity catalog, bench the
// recurrence solvers against their oracles. Talks to the library through the
// C interface only.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "eulerec.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;   // a verification or equality check failed
constexpr int kExitUsage = 2;    // bad name, missing parameter, malformed flags

/// Owning wrapper for strings handed out by the library.
struct owned_str {
    char* ptr = nullptr;
    owned_str() = default;
    owned_str(const owned_str&) = delete;
    owned_str& operator=(const owned_str&) = delete;
    ~owned_str() { eulerec_string_free(ptr); }
    const char* get() const { return ptr ? ptr : ""; }
};

struct table_handle {
    eulerec_table* ptr = nullptr;
    table_handle() = default;
    table_handle(const table_handle&) = delete;
    table_handle& operator=(const table_handle&) = delete;
    ~table_handle() { eulerec_table_free(ptr); }
};

int usage_error(const std::string& message) {
    std::cerr << "eulerec: " << message << "\n";
    return kExitUsage;
}

int api_error(const std::string& what) {
    std::cerr << "eulerec: " << what << ": " << eulerec_last_error() << "\n";
    return kExitUsage;
}

unsigned worker_count(std::size_t jobs) {
    unsigned cap = std::thread::hardware_concurrency();
    if (cap == 0) cap = 1;
    if (const char* env = std::getenv("EULEREC_THREADS")) {
        char* end = nullptr;
        long parsed = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && parsed >= 1) cap = static_cast<unsigned>(parsed);
    }
    if (cap > jobs) cap = static_cast<unsigned>(jobs);
    return cap == 0 ? 1 : cap;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- compute ----

int cmd_compute(const std::string& sequence, long max_n, long k, long r,
                const std::string& method, const std::string& format) {
    eulerec_sequence_info info{};
    if (eulerec_sequence_find(sequence.c_str(), &info) != EULEREC_OK)
        return api_error("compute " + sequence);
    if (info.needs_k && k < 1) return usage_error(sequence + " requires --k K (K >= 1)");
    if (info.needs_r && r < 1) return usage_error(sequence + " requires --r R (R >= 1)");

    bool want_oracle = method == "oracle" || method == "both";
    bool want_recurrence = method == "recurrence" || method == "both";
    if (want_recurrence && !info.has_solver)
        return usage_error(sequence + " has no recurrence path; use --method oracle");

    table_handle oracle, recurrence;
    if (want_oracle &&
        eulerec_compute_oracle(sequence.c_str(), max_n, k, r, &oracle.ptr) != EULEREC_OK)
        return api_error("compute " + sequence);
    if (want_recurrence &&
        eulerec_compute_recurrence(sequence.c_str(), max_n, k, nullptr, &recurrence.ptr) !=
            EULEREC_OK)
        return api_error("compute " + sequence);

    const eulerec_table* primary = want_recurrence ? recurrence.ptr : oracle.ptr;
    bool both = method == "both";
    bool json = format == "json";
    bool mismatch = false;

    if (json)
        std::cout << "[\n";
    else
        std::cout << (both ? "key,n,value,value_oracle\n" : "key,n,value\n");

    for (long n = info.first_n; n <= max_n; ++n) {
        owned_str value, check;
        if (eulerec_table_value(primary, n, &value.ptr) != EULEREC_OK)
            return api_error("compute " + sequence);
        if (both) {
            if (eulerec_table_value(oracle.ptr, n, &check.ptr) != EULEREC_OK)
                return api_error("compute " + sequence);
            if (std::string_view(value.get()) != check.get()) mismatch = true;
        }
        if (json) {
            std::cout << "{\"key\":\"" << sequence << "\",\"n\":" << n << ",\"value\":\""
                      << value.get() << "\"";
            if (both) std::cout << ",\"value_oracle\":\"" << check.get() << "\"";
            std::cout << (n == max_n ? "}\n" : "},\n");
        } else {
            std::cout << sequence << ',' << n << ',' << value.get();
            if (both) std::cout << ',' << check.get();
            std::cout << '\n';
        }
    }
    if (json) std::cout << "]\n";

    if (mismatch) {
        std::cerr << "eulerec: recurrence and oracle values differ for " << sequence << "\n";
        return kExitFailed;
    }
    return kExitOk;
}

// ---- verify ----

struct verify_outcome {
    std::string key;
    long n_lo = 0;
    long n_hi = -1;
    long checked = 0;
    double elapsed = 0.0;
    struct failure {
        long n;
        std::string lhs, rhs;
    };
    std::vector<failure> failures;
    bool api_ok = true;
    std::string api_message;
};

verify_outcome run_verify(const eulerec_identity_info& info, long max_n, long k, long r,
                          bool literal) {
    verify_outcome outcome;
    outcome.key = info.name;
    long hi = std::min(max_n, info.verify_cap);

    eulerec_report* report = nullptr;
    eulerec_status st =
        eulerec_verify(info.name, k, r, literal && info.has_literal ? 1 : 0, 0, hi, &report);
    if (st != EULEREC_OK) {
        outcome.api_ok = false;
        outcome.api_message = eulerec_last_error();
        return outcome;
    }
    outcome.n_lo = eulerec_report_n_lo(report);
    outcome.n_hi = eulerec_report_n_hi(report);
    outcome.checked = eulerec_report_checked(report);
    outcome.elapsed = eulerec_report_elapsed_seconds(report);
    long failures = eulerec_report_failure_count(report);
    for (long i = 0; i < failures; ++i) {
        long n = 0;
        owned_str lhs, rhs;
        if (eulerec_report_failure(report, i, &n, &lhs.ptr, &rhs.ptr) == EULEREC_OK)
            outcome.failures.push_back({n, lhs.get(), rhs.get()});
    }
    eulerec_report_free(report);
    return outcome;
}

int cmd_verify(const std::string& target, long max_n, long k, long r, bool literal,
               const std::string& format) {
    std::vector<eulerec_identity_info> jobs;
    if (target == "all") {
        long count = eulerec_identity_count();
        for (long i = 0; i < count; ++i) {
            eulerec_identity_info info{};
            eulerec_identity_at(i, &info);
            jobs.push_back(info);
        }
    } else {
        eulerec_identity_info info{};
        if (eulerec_identity_find(target.c_str(), &info) != EULEREC_OK)
            return api_error("verify " + target);
        if (literal && !info.has_literal)
            return usage_error(target + " has no literal form; drop --literal");
        jobs.push_back(info);
    }

    // Ids are independent; fan out, then emit in catalog order.
    std::vector<verify_outcome> outcomes(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
            outcomes[i] = run_verify(jobs[i], max_n, k, r, literal);
    };
    unsigned workers = worker_count(jobs.size());
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& thread : pool) thread.join();
    }

    bool json = format == "json";
    bool any_failure = false;
    bool any_api_error = false;

    if (json)
        std::cout << "[\n";
    else
        std::cout << "key,n_lo,n_hi,checked,failures,status\n";

    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const verify_outcome& o = outcomes[i];
        if (!o.api_ok) {
            any_api_error = true;
            std::cerr << "eulerec: verify " << o.key << ": " << o.api_message << "\n";
            continue;
        }
        bool passed = o.failures.empty();
        any_failure = any_failure || !passed;

        if (json) {
            std::cout << "{\"key\":\"" << o.key << "\",\"n_lo\":" << o.n_lo
                      << ",\"n_hi\":" << o.n_hi << ",\"checked\":" << o.checked
                      << ",\"status\":\"" << (passed ? "pass" : "fail") << "\",\"failures\":[";
            for (std::size_t j = 0; j < o.failures.size(); ++j) {
                const auto& f = o.failures[j];
                std::cout << (j ? "," : "") << "{\"n\":" << f.n << ",\"lhs\":\"" << f.lhs
                          << "\",\"rhs\":\"" << f.rhs << "\"}";
            }
            std::cout << "]}" << (i + 1 == outcomes.size() ? "\n" : ",\n");
        } else {
            std::cout << o.key << ',' << o.n_lo << ',' << o.n_hi << ',' << o.checked << ','
                      << o.failures.size() << ',' << (passed ? "pass" : "fail") << '\n';
        }

        std::cerr << (passed ? "ok   " : "FAIL ") << o.key << " checked=" << o.checked << " ("
                  << o.elapsed << "s)\n";
        for (const auto& f : o.failures)
            std::cerr << "FAIL " << o.key << " n=" << f.n << " lhs=" << f.lhs << " rhs=" << f.rhs
                      << "\n";
    }
    if (json) std::cout << "]\n";

    if (any_api_error) return kExitUsage;
    return any_failure ? kExitFailed : kExitOk;
}

// ---- bench ----

int cmd_bench(const std::string& sequence, long max_n, long k) {
    eulerec_sequence_info info{};
    if (eulerec_sequence_find(sequence.c_str(), &info) != EULEREC_OK)
        return api_error("bench " + sequence);
    if (!info.has_solver)
        return usage_error("bench covers the recurrence sequences: p, q, sigma, r_k");
    if (info.needs_k && k < 1) return usage_error(sequence + " requires --k K (K >= 1)");

    table_handle oracle;
    auto start = std::chrono::steady_clock::now();
    if (eulerec_compute_oracle(sequence.c_str(), max_n, k, 0, &oracle.ptr) != EULEREC_OK)
        return api_error("bench " + sequence);
    double oracle_s = seconds_since(start);

    table_handle recurrence;
    unsigned long long terms = 0;
    start = std::chrono::steady_clock::now();
    if (eulerec_compute_recurrence(sequence.c_str(), max_n, k, &terms, &recurrence.ptr) !=
        EULEREC_OK)
        return api_error("bench " + sequence);
    double recurrence_s = seconds_since(start);

    long mismatch_at = -1;
    for (long n = 0; n <= max_n && mismatch_at < 0; ++n) {
        owned_str a, b;
        if (eulerec_table_value(oracle.ptr, n, &a.ptr) != EULEREC_OK ||
            eulerec_table_value(recurrence.ptr, n, &b.ptr) != EULEREC_OK)
            return api_error("bench " + sequence);
        if (std::string_view(a.get()) != b.get()) mismatch_at = n;
    }

    std::cout << "bench " << sequence << " max_n=" << max_n;
    if (info.needs_k) std::cout << " k=" << k;
    std::cout << "\n";
    std::cout << "oracle      " << oracle_s << " s\n";
    std::cout << "recurrence  " << recurrence_s << " s, " << terms << " terms";
    if (max_n > 0) std::cout << " (" << static_cast<double>(terms) / max_n << " avg per n)";
    std::cout << "\n";

    if (mismatch_at >= 0) {
        std::cout << "tables DIFFER at n=" << mismatch_at << "\n";
        return kExitFailed;
    }
    std::cout << "tables identical\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Euler-type recurrences and identity checks"};
    app.require_subcommand(1);

    std::string sequence, target, method = "oracle", format = "csv";
    long max_n = 0, k = 0, r = 0;
    bool literal = false;

    CLI::App* compute = app.add_subcommand("compute", "tabulate a sequence");
    compute->add_option("sequence", sequence, "sequence name")->required();
    compute->add_option("--k", k, "k parameter (r_k)");
    compute->add_option("--r", r, "r parameter (part/cardinality count)");
    compute->add_option("--max-n", max_n, "largest index")
        ->required()
        ->check(CLI::NonNegativeNumber);
    compute->add_option("--method", method, "oracle | recurrence | both")
        ->check(CLI::IsMember({"oracle", "recurrence", "both"}));
    compute->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    CLI::App* verify = app.add_subcommand("verify", "check identities against their oracles");
    verify->add_option("id", target, "identity key or 'all'")->required();
    verify->add_option("--max-n", max_n, "largest n to check (capped per id)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--k", k, "k parameter where applicable");
    verify->add_option("--r", r, "r parameter where applicable");
    verify->add_flag("--literal", literal, "use the uncorrected printed form (thm4b)");
    verify->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    CLI::App* bench = app.add_subcommand("bench", "time recurrence vs oracle");
    bench->add_option("sequence", sequence, "one of p, q, sigma, r_k")->required();
    bench->add_option("--k", k, "k parameter (r_k)");
    bench->add_option("--max-n", max_n, "largest index")
        ->required()
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (compute->parsed()) return cmd_compute(sequence, max_n, k, r, method, format);
    if (verify->parsed()) return cmd_verify(target, max_n, k, r, literal, format);
    return cmd_bench(sequence, max_n, k);
}
