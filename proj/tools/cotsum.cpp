// cotsum - CLI for the cotangent-sum library: coefficient tables, direct and
// series evaluations of c0(q/p), the Vasyunin sum, the full identity audit,
// and envelope/limit scans. Emits line-delimited JSON (default) or CSV.
//
// Exit codes: 0 success, 1 audit hard failure, 2 usage error.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cotsum/bounds.hpp"
#include "cotsum/coeffs.hpp"
#include "cotsum/audit.hpp"
#include "cotsum/series.hpp"
#include "cotsum/trigsums.hpp"

namespace {

using cotsum::CheckStatus;

// Every numeric field is serialized with 17 significant digits (%.16e), so
// JSON output re-parses to bit-identical doubles.
std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", x);
    return buf;
}

std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string csv_escape(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

// Minimal ordered JSON object builder; field order is part of the output
// contract (determinism down to bytes).
class JsonObj {
public:
    JsonObj& raw(std::string_view key, std::string_view value) {
        if (!body_.empty()) body_ += ',';
        body_ += '"';
        body_ += key;
        body_ += "\":";
        body_ += value;
        return *this;
    }
    JsonObj& str(std::string_view key, std::string_view value) {
        return raw(key, "\"" + json_escape(value) + "\"");
    }
    JsonObj& integer(std::string_view key, long value) { return raw(key, std::to_string(value)); }
    JsonObj& number(std::string_view key, double value) { return raw(key, num(value)); }
    JsonObj& boolean(std::string_view key, bool value) { return raw(key, value ? "true" : "false"); }
    std::string build() const { return "{" + body_ + "}"; }

private:
    std::string body_;
};

struct OutputOptions {
    std::string format = "json";  // json | csv
    bool timestamp = true;
};

std::string now_iso8601() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Canonical line (no timestamp) + optional timestamp injection; the
// injected form never reorders the canonical fields, so --no-timestamp
// output and cache files stay byte-identical to recomputation.
void emit_json(const std::string& canonical, const OutputOptions& opt) {
    if (!opt.timestamp) {
        std::cout << canonical << '\n';
        return;
    }
    std::string line = canonical;
    line.insert(line.size() - 1, ",\"timestamp\":\"" + now_iso8601() + "\"");
    std::cout << line << '\n';
}

unsigned thread_budget(std::size_t items) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("COTSUM_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < n) n = static_cast<unsigned>(cap);
    }
    if (items > 0 && items < n) n = static_cast<unsigned>(items);
    return n;
}

// ---------------------------------------------------------------------------
// coeff

int run_coeff(long p, const std::string& k_range, const OutputOptions& opt) {
    long k_lo = 0, k_hi = 0;
    const auto pos = k_range.find("..");
    try {
        if (pos == std::string::npos) {
            k_lo = k_hi = std::stol(k_range);
        } else {
            k_lo = std::stol(k_range.substr(0, pos));
            k_hi = std::stol(k_range.substr(pos + 2));
        }
    } catch (const std::exception&) {
        std::cerr << "error: bad --k range '" << k_range << "'\n";
        return 2;
    }
    if (k_lo < 0 || k_hi < k_lo) {
        std::cerr << "error: bad --k range '" << k_range << "'\n";
        return 2;
    }
    cotsum::coeffs::require_modulus(p);

    const auto stream = cotsum::coeffs::b_recursive_stream(p, k_hi);
    if (opt.format == "csv") std::cout << "k,b_closed,b_recursive,b_convolution,b_block,agree\n";
    for (long k = k_lo; k <= k_hi; ++k) {
        const auto closed = cotsum::coeffs::b_closed(k, p);
        const auto& rec = stream[static_cast<std::size_t>(k)];
        const auto conv = cotsum::coeffs::b_convolution(k, p);
        const auto block = cotsum::coeffs::b_block(k / p, k % p, p);
        const bool agree = closed == rec && closed == conv && closed == block;
        if (opt.format == "csv") {
            std::cout << k << ',' << closed.get_str() << ',' << rec.get_str() << ','
                      << conv.get_str() << ',' << block.get_str() << ','
                      << (agree ? "true" : "false") << '\n';
        } else {
            JsonObj inputs;
            inputs.integer("p", p).integer("k", k);
            JsonObj values;
            values.str("b_closed", closed.get_str())
                .str("b_recursive", rec.get_str())
                .str("b_convolution", conv.get_str())
                .str("b_block", block.get_str());
            JsonObj rec_obj;
            rec_obj.str("command", "coeff")
                .raw("inputs", inputs.build())
                .raw("values", values.build())
                .boolean("agree", agree)
                .str("status", agree ? "ok" : "finding");
            emit_json(rec_obj.build(), opt);
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// c0 / vasyunin

std::string c0_record(long q, long p, const std::string& method, double tol,
                      std::optional<long> n_explicit) {
    JsonObj inputs;
    inputs.integer("q", q).integer("p", p).str("method", method);
    if (method == "phi") {
        inputs.integer("n", n_explicit.value_or(10'000));  // phi is term-count driven
    } else if (method != "direct") {
        if (n_explicit)
            inputs.integer("n", *n_explicit);
        else
            inputs.number("tol", tol);
    }

    JsonObj rec;
    rec.str("command", "c0").raw("inputs", inputs.build());

    if (method == "direct") {
        const double v = cotsum::trigsums::c0_direct(cotsum::trigsums::Fraction(q, p));
        rec.number("value", v).str("status", "ok");
        return rec.build();
    }

    if (method == "phi") {
        const long n = n_explicit.value_or(10'000);
        const auto enc = cotsum::bounds::c0_phi_decomposition(p, n);
        JsonObj e;
        e.number("lo", enc.lo).number("hi", enc.hi);
        rec.raw("enclosure", e.build()).integer("n_terms", n).str("status", "ok");
        return rec.build();
    }

    cotsum::series::SeriesEvaluation ev;
    if (method == "series")
        ev = n_explicit ? cotsum::series::c0_series_fixed_n(p, *n_explicit)
                        : cotsum::series::c0_series(p, tol);
    else  // double
        ev = n_explicit ? cotsum::series::c0_double_series(p, *n_explicit)
                        : cotsum::series::c0_double_series(
                              p, std::max(1L, (cotsum::series::c0_series(p, tol).partial.n + p) / p));

    JsonObj e;
    e.number("lo", ev.value.lo).number("hi", ev.value.hi);
    rec.raw("enclosure", e.build()).integer("n_terms", ev.n_terms);
    if (ev.status == cotsum::series::SeriesStatus::tolerance_unreachable)
        rec.str("status", "error").str("notes", "tolerance unreachable; best enclosure reported");
    else
        rec.str("status", "ok");
    return rec.build();
}

int run_c0(long q, long p, const std::string& method, double tol, std::optional<long> n_explicit,
           const std::string& cache_dir, const OutputOptions& opt) {
    if (method != "direct" && method != "series" && method != "phi" && method != "double") {
        std::cerr << "error: unknown method '" << method << "'\n";
        return 2;
    }
    if (method != "direct" && q != 1) {
        std::cerr << "error: method '" << method << "' requires q = 1\n";
        return 2;
    }
    if (!(tol > 0.0)) {
        std::cerr << "error: --tol must be > 0\n";
        return 2;
    }
    (void)cotsum::trigsums::Fraction(q, p);  // validates coprimality and ranges

    std::string canonical;
    if (!cache_dir.empty() && method != "direct") {
        namespace fs = std::filesystem;
        fs::create_directories(cache_dir);
        const std::string key = n_explicit ? "n" + std::to_string(*n_explicit) : "tol" + num(tol);
        const fs::path file = fs::path(cache_dir) / ("c0_" + method + "_p" + std::to_string(p) +
                                                      "_" + key + ".json");
        if (fs::exists(file)) {
            std::ifstream in(file);
            std::getline(in, canonical);
        } else {
            canonical = c0_record(q, p, method, tol, n_explicit);
            std::ofstream out(file);
            out << canonical << '\n';
        }
    } else {
        canonical = c0_record(q, p, method, tol, n_explicit);
    }

    if (opt.format == "csv") {
        // command,q,p,method,value,lo,hi,status
        const auto j = nlohmann::json::parse(canonical);
        std::cout << "command,q,p,method,value,lo,hi,status\n";
        std::cout << "c0," << q << ',' << p << ',' << method << ',';
        if (j.contains("value")) std::cout << num(j["value"].get<double>());
        std::cout << ',';
        if (j.contains("enclosure")) {
            std::cout << num(j["enclosure"]["lo"].get<double>()) << ','
                      << num(j["enclosure"]["hi"].get<double>());
        } else {
            std::cout << ',';
        }
        std::cout << ',' << j["status"].get<std::string>() << '\n';
        return 0;
    }
    emit_json(canonical, opt);
    return 0;
}

int run_estermann(long q, long p, const OutputOptions& opt) {
    const auto e = cotsum::trigsums::estermann_at_zero(cotsum::trigsums::Fraction(q, p));
    if (opt.format == "csv") {
        std::cout << "command,q,p,re,im,status\n";
        std::cout << "estermann," << q << ',' << p << ',' << num(e.re) << ',' << num(e.im)
                  << ",ok\n";
        return 0;
    }
    JsonObj inputs;
    inputs.integer("q", q).integer("p", p);
    JsonObj rec;
    rec.str("command", "estermann")
        .raw("inputs", inputs.build())
        .number("re", e.re)
        .number("im", e.im)
        .str("status", "ok");
    emit_json(rec.build(), opt);
    return 0;
}

int run_vasyunin(long q, long p, const OutputOptions& opt) {
    const double v = cotsum::trigsums::vasyunin_direct(cotsum::trigsums::Fraction(q, p));
    if (opt.format == "csv") {
        std::cout << "command,q,p,value,status\n";
        std::cout << "vasyunin," << q << ',' << p << ',' << num(v) << ",ok\n";
        return 0;
    }
    JsonObj inputs;
    inputs.integer("q", q).integer("p", p);
    JsonObj rec;
    rec.str("command", "vasyunin").raw("inputs", inputs.build()).number("value", v).str("status",
                                                                                        "ok");
    emit_json(rec.build(), opt);
    return 0;
}

// ---------------------------------------------------------------------------
// audit

int run_audit(long p_max, long k_max, const OutputOptions& opt) {
    if (p_max < 2 || k_max < 4 || p_max > 10'000 || k_max > 10'000'000) {
        std::cerr << "error: audit needs 2 <= --p-max <= 10000 and 4 <= --k-max <= 1e7\n";
        return 2;
    }
    const auto rep = cotsum::audit::run_full_audit({p_max, k_max});

    if (opt.format == "csv") {
        std::cout << "check,p,k,status,detail\n";
        for (const auto& r : rep.records) {
            std::cout << csv_escape(r.check) << ',';
            if (r.p) std::cout << *r.p;
            std::cout << ',';
            if (r.k) std::cout << *r.k;
            std::cout << ',' << to_string(r.status) << ',' << csv_escape(r.detail) << '\n';
        }
    } else {
        for (const auto& r : rep.records) {
            JsonObj rec;
            rec.str("command", "audit").str("check", r.check);
            if (r.p) rec.integer("p", *r.p);
            if (r.k) rec.integer("k", *r.k);
            rec.str("status", to_string(r.status)).str("detail", r.detail);
            emit_json(rec.build(), opt);
        }
        JsonObj summary;
        summary.str("command", "audit")
            .str("check", "summary")
            .integer("checks", static_cast<long>(rep.records.size()))
            .integer("failures", static_cast<long>(rep.count(CheckStatus::fail)))
            .integer("findings", static_cast<long>(rep.count(CheckStatus::finding)))
            .str("status", rep.hard_failure() ? "fail" : "pass");
        emit_json(summary.build(), opt);
    }
    return cotsum::exit_code(rep);
}

// ---------------------------------------------------------------------------
// scan

int run_scan(const std::vector<long>& p_list, const OutputOptions& opt) {
    if (p_list.empty()) {
        std::cerr << "error: scan needs at least one p\n";
        return 2;
    }
    for (long p : p_list) {
        if (p < 3) {
            std::cerr << "error: scan requires p >= 3, got " << p << '\n';
            return 2;
        }
    }

    // Pure per-p computations; parallelize, emit in input order.
    std::vector<cotsum::bounds::EnvelopeReport> reports(p_list.size());
    const unsigned workers = thread_budget(p_list.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < p_list.size(); ++i)
            reports[i] = cotsum::bounds::envelopes(p_list[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < p_list.size(); i = next.fetch_add(1))
                    reports[i] = cotsum::bounds::envelopes(p_list[i]);
            });
        }
        for (auto& t : pool) t.join();
    }

    if (opt.format == "csv") {
        std::cout << "p,lower,upper,c0,contained,scaled_ratio\n";
        for (const auto& r : reports) {
            std::cout << r.p << ',' << num(r.lower) << ',' << num(r.upper) << ',' << num(r.c0)
                      << ',' << (r.contained ? "true" : "false") << ',' << num(r.scaled_ratio)
                      << '\n';
        }
    } else {
        for (const auto& r : reports) {
            JsonObj inputs;
            inputs.integer("p", r.p);
            JsonObj rec;
            rec.str("command", "scan")
                .raw("inputs", inputs.build())
                .number("lower", r.lower)
                .number("upper", r.upper)
                .number("c0", r.c0)
                .boolean("contained", r.contained)
                .number("scaled_ratio", r.scaled_ratio)
                .str("status", r.contained ? "ok" : "finding");
            emit_json(rec.build(), opt);
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cotangent sum c0(q/p) toolkit: exact coefficients, direct and series "
                 "evaluations, identity audit"};
    app.require_subcommand(1);

    OutputOptions opt;
    app.add_option("--format", opt.format, "output format: json (line-delimited) or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    bool no_timestamp = false;
    app.add_flag("--no-timestamp", no_timestamp, "omit the timestamp field from JSON records");

    auto* coeff = app.add_subcommand("coeff", "table of b_k from all four routes");
    coeff->fallthrough();
    long coeff_p = 0;
    std::string coeff_k = "0..10";
    coeff->add_option("--p", coeff_p, "modulus p >= 2")->required();
    coeff->add_option("--k", coeff_k, "index range, e.g. 0..100 or a single k");

    auto* c0 = app.add_subcommand("c0", "evaluate c0(q/p)");
    c0->fallthrough();
    long c0_q = 1, c0_p = 0;
    std::string c0_method = "direct";
    double c0_tol = 1e-8;
    long c0_n = -1;
    std::string c0_cache;
    c0->add_option("--q", c0_q, "numerator q");
    c0->add_option("--p", c0_p, "denominator p >= 2")->required();
    c0->add_option("--method", c0_method, "direct | series | phi | double");
    c0->add_option("--tol", c0_tol, "target enclosure width (series/double)");
    c0->add_option("--n", c0_n, "explicit term count (series: last k; double: i_max; phi: n_terms)");
    c0->add_option("--cache", c0_cache, "directory for cached series records");

    auto* vas = app.add_subcommand("vasyunin", "evaluate the Vasyunin sum V(q/p)");
    vas->fallthrough();
    long vas_q = 1, vas_p = 0;
    vas->add_option("--q", vas_q, "numerator q");
    vas->add_option("--p", vas_p, "denominator p >= 2")->required();

    auto* est = app.add_subcommand("estermann", "Estermann zeta value at s = 0");
    est->fallthrough();
    long est_q = 1, est_p = 0;
    est->add_option("--q", est_q, "numerator q");
    est->add_option("--p", est_p, "denominator p >= 2")->required();

    auto* audit = app.add_subcommand("audit", "run the full identity/bound audit");
    audit->fallthrough();
    long audit_pmax = 20, audit_kmax = 2000;
    audit->add_option("--p-max", audit_pmax, "largest modulus in the grids");
    audit->add_option("--k-max", audit_kmax, "largest coefficient index in the grids");

    auto* scan = app.add_subcommand("scan", "envelope + scaled-ratio scan over p");
    scan->fallthrough();
    std::vector<long> scan_p;
    scan->add_option("--p", scan_p, "comma-separated list of p >= 3")->required()->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help text or the parse error
        return code == 0 ? 0 : 2;
    }

    opt.timestamp = !no_timestamp;

    try {
        if (coeff->parsed()) return run_coeff(coeff_p, coeff_k, opt);
        if (c0->parsed())
            return run_c0(c0_q, c0_p, c0_method, c0_tol,
                          c0_n >= 0 ? std::optional<long>(c0_n) : std::nullopt, c0_cache, opt);
        if (vas->parsed()) return run_vasyunin(vas_q, vas_p, opt);
        if (est->parsed()) return run_estermann(est_q, est_p, opt);
        if (audit->parsed()) return run_audit(audit_pmax, audit_kmax, opt);
        if (scan->parsed()) return run_scan(scan_p, opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
