#include "eulerec.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include "eulerec/arith.hpp"
#include "eulerec/identities.hpp"
#include "eulerec/sequences.hpp"
#include "eulerec/types.hpp"

extern "C" {

struct eulerec_table {
    eulerec::FunctionTable rep;
};

struct eulerec_report {
    eulerec::IdentityReport rep;
};

}  // extern "C"

namespace {

thread_local std::string g_last_error;

eulerec_status status_of(eulerec::errc code) {
    switch (code) {
        case eulerec::errc::invalid_argument: return EULEREC_ERR_INVALID;
        case eulerec::errc::unknown_name: return EULEREC_ERR_UNKNOWN;
        case eulerec::errc::domain: return EULEREC_ERR_DOMAIN;
        case eulerec::errc::guard: return EULEREC_ERR_GUARD;
        case eulerec::errc::inexact: return EULEREC_ERR_INEXACT;
        case eulerec::errc::short_table: return EULEREC_ERR_SHORT_TABLE;
    }
    return EULEREC_ERR_INTERNAL;
}

/// Run fn, translating exceptions into status codes + the thread-local message.
template <typename Fn>
eulerec_status guarded(Fn&& fn) {
    try {
        fn();
        return EULEREC_OK;
    } catch (const eulerec::error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return EULEREC_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return EULEREC_ERR_INTERNAL;
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

eulerec_status require(bool ok, const char* message) {
    if (ok) return EULEREC_OK;
    g_last_error = message;
    return EULEREC_ERR_INVALID;
}

std::string decimal(const eulerec::Int& value) { return value.get_str(); }

}  // namespace

extern "C" {

const char* eulerec_version(void) { return "1.0.0"; }

const char* eulerec_last_error(void) { return g_last_error.c_str(); }

/* ---- sequences ---- */

static void fill_sequence_info(const eulerec::SequenceMeta& meta, eulerec_sequence_info* out) {
    out->name = meta.name.data();  // catalog names are string literals
    out->first_n = meta.first_n;
    out->needs_k = meta.needs_k ? 1 : 0;
    out->needs_r = meta.needs_r ? 1 : 0;
    out->has_solver = meta.has_solver ? 1 : 0;
}

long eulerec_sequence_count(void) {
    return static_cast<long>(eulerec::sequence_catalog().size());
}

eulerec_status eulerec_sequence_at(long index, eulerec_sequence_info* out) {
    if (auto st = require(out != nullptr, "eulerec_sequence_at: out is NULL")) return st;
    const auto& catalog = eulerec::sequence_catalog();
    if (auto st = require(index >= 0 && index < static_cast<long>(catalog.size()),
                          "eulerec_sequence_at: index out of range"))
        return st;
    fill_sequence_info(catalog[static_cast<std::size_t>(index)], out);
    return EULEREC_OK;
}

eulerec_status eulerec_sequence_find(const char* name, eulerec_sequence_info* out) {
    if (auto st = require(name && out, "eulerec_sequence_find: NULL argument")) return st;
    const eulerec::SequenceMeta* meta = eulerec::sequence_lookup(name);
    if (!meta) {
        g_last_error = std::string("no sequence named ") + name;
        return EULEREC_ERR_UNKNOWN;
    }
    fill_sequence_info(*meta, out);
    return EULEREC_OK;
}

eulerec_status eulerec_compute_oracle(const char* name, long max_n, long k, long r,
                                      eulerec_table** out) {
    if (auto st = require(name && out, "eulerec_compute_oracle: NULL argument")) return st;
    *out = nullptr;
    return guarded([&] {
        auto table = new eulerec_table{eulerec::sequence_oracle(name, max_n, k, r)};
        *out = table;
    });
}

eulerec_status eulerec_compute_recurrence(const char* name, long max_n, long k,
                                          unsigned long long* terms, eulerec_table** out) {
    if (auto st = require(name && out, "eulerec_compute_recurrence: NULL argument")) return st;
    *out = nullptr;
    return guarded([&] {
        eulerec::SolveResult result = eulerec::sequence_recurrence(name, max_n, k);
        if (terms) *terms = result.terms;
        *out = new eulerec_table{std::move(result.table)};
    });
}

long eulerec_table_max_n(const eulerec_table* table) { return table ? table->rep.max_n() : -1; }

eulerec_status eulerec_table_value(const eulerec_table* table, long n, char** out) {
    if (auto st = require(table && out, "eulerec_table_value: NULL argument")) return st;
    *out = nullptr;
    return guarded([&] { *out = copy_string(decimal(table->rep.at(n))); });
}

void eulerec_table_free(eulerec_table* table) { delete table; }

/* ---- identity catalog ---- */

static void fill_identity_info(const eulerec::IdentityMeta& meta, eulerec_identity_info* out) {
    out->name = meta.name.data();  // catalog names are string literals
    out->domain_start = meta.domain_start;
    out->verify_cap = meta.verify_cap;
    out->needs_k = meta.needs_k ? 1 : 0;
    out->needs_r = meta.needs_r ? 1 : 0;
    out->default_k = meta.default_k;
    out->default_r = meta.default_r;
    out->is_product = meta.is_product ? 1 : 0;
    out->has_literal = meta.has_literal ? 1 : 0;
}

long eulerec_identity_count(void) {
    return static_cast<long>(eulerec::identity_catalog().size());
}

eulerec_status eulerec_identity_at(long index, eulerec_identity_info* out) {
    if (auto st = require(out != nullptr, "eulerec_identity_at: out is NULL")) return st;
    const auto& catalog = eulerec::identity_catalog();
    if (auto st = require(index >= 0 && index < static_cast<long>(catalog.size()),
                          "eulerec_identity_at: index out of range"))
        return st;
    fill_identity_info(catalog[static_cast<std::size_t>(index)], out);
    return EULEREC_OK;
}

eulerec_status eulerec_identity_find(const char* name, eulerec_identity_info* out) {
    if (auto st = require(name && out, "eulerec_identity_find: NULL argument")) return st;
    const eulerec::IdentityMeta* meta = eulerec::identity_lookup(name);
    if (!meta) {
        g_last_error = std::string("no identity named ") + name;
        return EULEREC_ERR_UNKNOWN;
    }
    fill_identity_info(*meta, out);
    return EULEREC_OK;
}

static eulerec_status make_id(const char* name, long k, long r, int literal,
                              eulerec::IdentityId* out) {
    const eulerec::IdentityMeta* meta = eulerec::identity_lookup(name);
    if (!meta) {
        g_last_error = std::string("no identity named ") + name;
        return EULEREC_ERR_UNKNOWN;
    }
    *out = eulerec::IdentityId{meta->key, k, r, literal != 0};
    return EULEREC_OK;
}

eulerec_status eulerec_verify(const char* name, long k, long r, int literal, long n_lo,
                              long n_hi, eulerec_report** out) {
    if (auto st = require(name && out, "eulerec_verify: NULL argument")) return st;
    *out = nullptr;
    eulerec::IdentityId id{};
    if (auto st = make_id(name, k, r, literal, &id)) return st;
    return guarded([&] { *out = new eulerec_report{eulerec::verify_range(id, n_lo, n_hi)}; });
}

long eulerec_report_n_lo(const eulerec_report* report) { return report ? report->rep.n_lo : 0; }

long eulerec_report_n_hi(const eulerec_report* report) { return report ? report->rep.n_hi : -1; }

long eulerec_report_checked(const eulerec_report* report) {
    return report ? report->rep.checked : 0;
}

long eulerec_report_failure_count(const eulerec_report* report) {
    return report ? static_cast<long>(report->rep.failures.size()) : 0;
}

eulerec_status eulerec_report_failure(const eulerec_report* report, long index, long* n,
                                      char** lhs, char** rhs) {
    if (auto st = require(report != nullptr, "eulerec_report_failure: report is NULL")) return st;
    const auto& failures = report->rep.failures;
    if (auto st = require(index >= 0 && index < static_cast<long>(failures.size()),
                          "eulerec_report_failure: index out of range"))
        return st;
    const auto& failure = failures[static_cast<std::size_t>(index)];
    if (n) *n = failure.n;
    if (lhs) *lhs = copy_string(decimal(failure.lhs));
    if (rhs) *rhs = copy_string(decimal(failure.rhs));
    return EULEREC_OK;
}

double eulerec_report_elapsed_seconds(const eulerec_report* report) {
    return report ? report->rep.elapsed.count() : 0.0;
}

void eulerec_report_free(eulerec_report* report) { delete report; }

eulerec_status eulerec_residual(const char* name, long k, long r, int literal, long n,
                                char** out) {
    if (auto st = require(name && out, "eulerec_residual: NULL argument")) return st;
    *out = nullptr;
    eulerec::IdentityId id{};
    if (auto st = make_id(name, k, r, literal, &id)) return st;
    return guarded([&] { *out = copy_string(decimal(eulerec::residual(id, n))); });
}

void eulerec_string_free(char* string) { std::free(string); }

}  // extern "C"
