#include "dlab/cli.hpp"

#include "dlab/q_structures.hpp"
#include "dlab/sequences.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace dlab::cli {

namespace {

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

double elapsed_ms(const Report& r) {
    // Microsecond resolution keeps the text short.
    return std::round(std::chrono::duration<double, std::milli>(r.elapsed).count() * 1000.0) / 1000.0;
}

std::string param_text(const ParamValue& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
    return std::get<std::string>(v);
}

std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("DLAB_OUTPUT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
    }
    return p;
}

std::string summary(const std::vector<Report>& reports) {
    std::size_t pass = 0, skip = 0, thm = 0, conj = 0;
    for (const auto& r : reports) {
        if (r.status == Status::kPass) ++pass;
        else if (r.status == Status::kSkipped) ++skip;
        else if (claim_info(r.claim).kind == ClaimKind::kConjecture) ++conj;
        else ++thm;
    }
    std::ostringstream s;
    s << reports.size() << " reports: " << pass << " pass, " << thm + conj << " fail (" << thm << " theorem, "
      << conj << " conjecture), " << skip << " skipped";
    return s.str();
}

void write_reports(const std::vector<Report>& reports, const RunConfig& config, std::ostream& os) {
    for (const auto& r : reports) {
        os << (config.format == OutputFormat::kJsonl ? format_jsonl(r, config.timing) : format_text(r, config.timing))
           << '\n';
    }
    if (config.format == OutputFormat::kText) os << summary(reports) << '\n';
}

int cmd_eval(const std::string& expr, std::optional<int> n, std::optional<int> m, std::optional<int> k,
             std::optional<int> d, std::ostream& out, std::ostream& err) {
    auto need = [&](const std::optional<int>& v, const char* flag) {
        if (!v) throw ConfigError(expr + " needs " + flag);
        if (*v < 0) throw ConfigError(std::string(flag) + " must be non-negative");
        return *v;
    };
    try {
        if (expr == "d") out << d_poly(need(n, "--n")).to_string() << '\n';
        else if (expr == "s") out << s_poly(need(n, "--n")).to_string() << '\n';
        else if (expr == "Dq") out << q_delannoy(need(m, "--m"), need(n, "--n")).dq.to_string() << '\n';
        else if (expr == "qbinom") out << q_binomial(need(n, "--n"), need(k, "--k")).to_string() << '\n';
        else if (expr == "cyclotomic") {
            const int dv = need(d, "--d");
            if (dv < 1) throw ConfigError("--d must be at least 1");
            out << cyclotomic(dv).to_string() << '\n';
        }
        return 0;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

// Flat key=value file; keys are long option names without dashes. Options
// already given on the command line keep their values.
void apply_config(CLI::App& sub, const std::string& path) {
    std::vector<CLI::ConfigItem> items;
    try {
        items = CLI::ConfigINI().from_file(path);
    } catch (const CLI::FileError& e) {
        throw ConfigError(e.what());
    }
    for (const auto& item : items) {
        if (item.name == "config" || !item.parents.empty()) throw ConfigError("unsupported config key '" + item.fullname() + "'");
        CLI::Option* opt = nullptr;
        try {
            opt = sub.get_option("--" + item.name);
        } catch (const CLI::OptionNotFound&) {
            throw ConfigError("unknown config key '" + item.name + "'");
        }
        if (opt->count() > 0) continue;
        for (const auto& v : item.inputs) opt->add_result(v);
        try {
            opt->run_callback();
        } catch (const CLI::ParseError& e) {
            throw ConfigError("config key '" + item.name + "': " + e.what());
        }
    }
}

} // namespace

std::vector<ClaimId> parse_claim_list(const std::string& text) {
    std::vector<ClaimId> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        if (item == "all") {
            for (const auto& c : claim_catalog()) out.push_back(c.id);
            continue;
        }
        auto id = parse_claim(item);
        if (!id) throw ConfigError("unknown claim '" + item + "'");
        out.push_back(*id);
    }
    if (out.empty()) throw ConfigError("no claims selected");
    return out;
}

void validate(const RunConfig& c) {
    const auto& b = c.bounds;
    if (c.claims.empty()) throw ConfigError("no claims selected");
    if (b.n_max && *b.n_max < 0) throw ConfigError("--n-max must be non-negative");
    if (b.m_max && *b.m_max < 1) throw ConfigError("--m-max must be positive");
    if (b.r_max && *b.r_max < 1) throw ConfigError("--r-max must be positive");
    if (b.x_min && b.x_max && *b.x_min > *b.x_max) throw ConfigError("--x-min exceeds --x-max");
    if (b.primes) {
        if (b.primes->empty()) throw ConfigError("--primes is empty");
        for (int p : *b.primes) {
            if (p < 3 || p > 1000 || !is_prime(ExactInt(p))) {
                throw ConfigError("--primes entry " + std::to_string(p) + " is not an odd prime below 1000");
            }
        }
    }
    if (b.lift_samples < 1) throw ConfigError("--lift-samples must be positive");
    if (c.parallelism < 1) throw ConfigError("--jobs must be positive");
}

std::string format_text(const Report& r, bool timing) {
    std::ostringstream s;
    s << to_string(r.status) << ' ' << to_string(r.claim);
    for (const auto& [k, v] : r.params) s << ' ' << k << '=' << param_text(v);
    s << " (" << verdict(r) << ')';
    if (!r.witness.empty()) {
        s << " --";
        for (const auto& [k, v] : r.witness) s << ' ' << k << '=' << v;
    }
    if (timing) {
        char buf[32];
        std::snprintf(buf, sizeof buf, " [%.3f ms]", elapsed_ms(r));
        s << buf;
    }
    return s.str();
}

std::string format_jsonl(const Report& r, bool timing) {
    nlohmann::ordered_json j;
    j["claim"] = to_string(r.claim);
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) {
        if (const auto* i = std::get_if<std::int64_t>(&v)) params[k] = *i;
        else params[k] = std::get<std::string>(v);
    }
    j["params"] = std::move(params);
    j["status"] = to_string(r.status);
    j["verdict"] = verdict(r);
    if (!r.witness.empty()) {
        nlohmann::ordered_json w = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.witness) w[k] = v;
        j["witness"] = std::move(w);
    }
    if (timing) j["elapsed_ms"] = elapsed_ms(r);
    return j.dump();
}

int exit_status(const std::vector<Report>& reports) {
    bool theorem_failed = false, conjecture_failed = false;
    for (const auto& r : reports) {
        if (r.status != Status::kFail) continue;
        (claim_info(r.claim).kind == ClaimKind::kConjecture ? conjecture_failed : theorem_failed) = true;
    }
    return theorem_failed ? 1 : conjecture_failed ? 2 : 0;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    const auto reports = run_suite(config.claims, config.bounds, config.parallelism);
    if (config.output_path) {
        const auto path = resolve_output(*config.output_path);
        std::ofstream file(path);
        if (!file) {
            err << "error: cannot write " << path.string() << '\n';
            return 1;
        }
        write_reports(reports, config, file);
        out << summary(reports) << " -> " << path.string() << '\n';
    } else {
        write_reports(reports, config, out);
    }
    return exit_status(reports);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of Delannoy and Schmidt polynomial identities and congruences", "delannoy-lab"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "Run claim checks over parameter grids");
    std::string claims_text = "all", format = "text", output, config_path;
    verify->add_option("--config", config_path, "Flat key=value file; command-line flags take precedence");
    int n_max = 0, m_max = 0, r_max = 0, x_min = 0, x_max = 0, lift_samples = 100;
    std::vector<int> primes;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    bool no_timing = false;
    verify->add_option("--claims", claims_text, "Comma-separated claim names, or all")->capture_default_str();
    auto* o_n = verify->add_option("--n-max", n_max, "Upper bound on n for every selected claim");
    auto* o_m = verify->add_option("--m-max", m_max, "Upper bound on m");
    auto* o_r = verify->add_option("--r-max", r_max, "Upper bound on r in the q-sum scans");
    auto* o_xlo = verify->add_option("--x-min", x_min, "Lower end of the integer x grid");
    auto* o_xhi = verify->add_option("--x-max", x_max, "Upper end of the integer x grid");
    auto* o_p = verify->add_option("--primes", primes, "Comma-separated odd primes")->delimiter(',');
    verify->add_option("--lift-samples", lift_samples, "Residues mod p^4 checked per prime")->capture_default_str();
    verify->add_option("--format", format, "text or jsonl")->check(CLI::IsMember({"text", "jsonl"}))->capture_default_str();
    auto* o_out = verify->add_option("--output", output, "Report file; relative paths resolve against DLAB_OUTPUT_DIR");
    verify->add_option("--jobs", jobs, "Worker threads");
    verify->add_flag("--no-timing", no_timing, "Omit elapsed times (byte-stable output)");

    auto* eval = app.add_subcommand("eval", "Print an exact value in canonical text form");
    std::string expr;
    int en = 0, em = 0, ek = 0, ed = 0;
    eval->add_option("expr", expr, "d, s, Dq, qbinom or cyclotomic")
        ->required()
        ->check(CLI::IsMember({"d", "s", "Dq", "qbinom", "cyclotomic"}));
    auto* e_n = eval->add_option("--n", en);
    auto* e_m = eval->add_option("--m", em);
    auto* e_k = eval->add_option("--k", ek);
    auto* e_d = eval->add_option("--d", ed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    auto opt = [](CLI::Option* o, int v) { return o->count() ? std::optional<int>(v) : std::nullopt; };

    if (*eval) return cmd_eval(expr, opt(e_n, en), opt(e_m, em), opt(e_k, ek), opt(e_d, ed), out, err);

    RunConfig config;
    try {
        if (!config_path.empty()) apply_config(*verify, config_path);
        config.claims = parse_claim_list(claims_text);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n' << verify->help();
        return 1;
    }
    config.bounds.n_max = opt(o_n, n_max);
    config.bounds.m_max = opt(o_m, m_max);
    config.bounds.r_max = opt(o_r, r_max);
    config.bounds.x_min = opt(o_xlo, x_min);
    config.bounds.x_max = opt(o_xhi, x_max);
    if (o_p->count()) config.bounds.primes = primes;
    config.bounds.lift_samples = lift_samples;
    config.format = format == "jsonl" ? OutputFormat::kJsonl : OutputFormat::kText;
    if (o_out->count()) config.output_path = output;
    config.parallelism = jobs;
    config.timing = !no_timing;
    return cmd_verify(config, out, err);
}

} // namespace dlab::cli
