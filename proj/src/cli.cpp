#include "thetasum/cli.hpp"

#include "thetasum/bell.hpp"
#include "thetasum/divisors.hpp"
#include "thetasum/identity.hpp"
#include "thetasum/repcount.hpp"
#include "thetasum/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>

namespace thetasum::cli {

namespace {

enum class Format { json, csv, pretty };

const std::map<std::string, Format> kFormats{
    {"json", Format::json}, {"csv", Format::csv}, {"pretty", Format::pretty}};

using Verifier = std::function<VerificationReport(std::size_t, unsigned)>;

// Command-line names in the order "all" runs them.
const std::vector<std::pair<std::string, Verifier>>& verifiers()
{
    static const std::vector<std::pair<std::string, Verifier>> table{
        {"theorem1", [](std::size_t n, unsigned j) { return verify_theorem1(n, j); }},
        {"lemma1", [](std::size_t n, unsigned j) { return verify_lemma1(n, j); }},
        {"lemma2", [](std::size_t n, unsigned j) { return verify_lemma2(n, j); }},
        {"log-theta", [](std::size_t n, unsigned j) { return verify_log_theta(n, j); }},
        {"binomial", [](std::size_t n, unsigned j) { return verify_binomial_aux(n, j); }},
        {"swap", [](std::size_t n, unsigned j) { return verify_swap_equivalence(n, j); }},
    };
    return table;
}

void print_pretty(const VerificationReport& report, std::ostream& out)
{
    out << std::left << std::setw(18) << to_string(report.identity) << " n=" << report.n_min << ".."
        << report.n_max << "  " << report.records.size() << " checks  "
        << (report.all_pass ? "PASS" : "FAIL") << '\n';
    for (const Record* r : report.failures()) {
        out << "    index";
        for (auto i : r->index)
            out << ' ' << i;
        out << ": lhs " << r->lhs.to_string() << " != rhs " << r->rhs.to_string() << '\n';
    }
}

int cmd_verify(const std::string& name, std::size_t max_n, Format format, unsigned jobs, std::ostream& out)
{
    std::vector<VerificationReport> reports;
    for (const auto& [cli_name, verify] : verifiers())
        if (name == "all" || name == cli_name)
            reports.push_back(verify(max_n, jobs));

    bool ok = true;
    if (format == Format::csv)
        out << "identity,index,lhs,rhs,pass\n";
    for (const auto& report : reports) {
        ok = ok && report.all_pass;
        switch (format) {
        case Format::json: out << report.to_json() << '\n'; break;
        case Format::csv: out << report.to_csv_rows(); break;
        case Format::pretty: print_pretty(report, out); break;
        }
    }
    return ok ? kExitOk : kExitFailure;
}

void table_crn(std::size_t N, Format format, std::ostream& out)
{
    RepTable table(N);
    if (format == Format::csv) {
        out << table.to_csv();
    } else if (format == Format::json) {
        out << table.to_json() << '\n';
    } else {
        for (std::size_t r = 1; r <= N; ++r) {
            out << "r=" << r << ':';
            for (const auto& c : table.row(r))
                out << ' ' << c.get_str();
            out << '\n';
        }
    }
}

void table_oddsum(std::size_t N, Format format, std::ostream& out)
{
    if (N == 0)
        throw std::invalid_argument("oddsum table: --max-n must be positive");
    if (format == Format::json) {
        nlohmann::ordered_json j;
        j["N"] = N;
        auto& values = j["values"] = nlohmann::ordered_json::array();
        for (std::size_t n = 1; n <= N; ++n)
            values.push_back(odd_divisor_inverse_sum(n).to_string());
        out << j.dump() << '\n';
        return;
    }
    if (format == Format::csv)
        out << "n,value\n";
    for (std::size_t n = 1; n <= N; ++n) {
        if (format == Format::csv)
            out << n << ',' << odd_divisor_inverse_sum(n).to_string() << '\n';
        else
            out << std::setw(6) << n << "  " << odd_divisor_inverse_sum(n).to_string() << '\n';
    }
}

void table_bell(std::size_t N, Format format, std::ostream& out)
{
    BellEvaluator bell(theta_derivs(N).as_args(), std::make_shared<const CombTable>(N));
    if (format == Format::json) {
        nlohmann::ordered_json j;
        j["args"] = "theta";
        j["N"] = N;
        auto& values = j["values"] = nlohmann::ordered_json::object();
        for (std::size_t n = 1; n <= N; ++n)
            for (std::size_t k = 1; k <= n; ++k)
                values[std::to_string(n) + "," + std::to_string(k)] = bell(n, k).to_string();
        out << j.dump() << '\n';
        return;
    }
    if (format == Format::csv)
        out << "n,k,value\n";
    for (std::size_t n = 1; n <= N; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            if (format == Format::csv)
                out << n << ',' << k << ',' << bell(n, k).to_string() << '\n';
            else
                out << "B(" << n << ',' << k << ") = " << bell(n, k).to_string() << '\n';
        }
    }
}

void table_theta(std::size_t N, Format format, std::ostream& out)
{
    Series theta = theta_sum(N);
    if (format == Format::json) {
        out << theta.to_json() << '\n';
        return;
    }
    if (format == Format::csv)
        out << "n,coeff\n";
    for (std::size_t n = 0; n <= N; ++n) {
        if (format == Format::csv)
            out << n << ',' << theta[n].to_string() << '\n';
        else if (!theta[n].is_zero())
            out << std::setw(6) << n << "  " << theta[n].to_string() << '\n';
    }
}

int cmd_table(const std::string& kind, std::size_t max_n, Format format, std::ostream& out)
{
    if (kind == "crn")
        table_crn(max_n, format, out);
    else if (kind == "oddsum")
        table_oddsum(max_n, format, out);
    else if (kind == "bell")
        table_bell(max_n, format, out);
    else
        table_theta(max_n, format, out);
    return kExitOk;
}

int cmd_bench(std::size_t max_n, unsigned repetitions, Format format, unsigned jobs, std::ostream& out)
{
    using clock = std::chrono::steady_clock;
    auto best_of = [&](auto&& stage) {
        double best = std::numeric_limits<double>::infinity();
        for (unsigned i = 0; i < repetitions; ++i) {
            auto start = clock::now();
            stage();
            std::chrono::duration<double> dt = clock::now() - start;
            best = std::min(best, dt.count());
        }
        return best;
    };

    std::vector<std::pair<std::string, double>> stages;
    stages.emplace_back("rep_table", best_of([&] { RepTable table(max_n); }));
    stages.emplace_back("theta_powers", best_of([&] { (void)series_pow(theta_sum(max_n), max_n); }));
    bool ok = true;
    stages.emplace_back("verify_theorem1", best_of([&] { ok = verify_theorem1(max_n, jobs).all_pass && ok; }));

    if (format == Format::pretty) {
        for (const auto& [stage, seconds] : stages)
            out << std::left << std::setw(18) << stage << std::fixed << std::setprecision(6) << seconds << " s\n";
    } else if (format == Format::csv) {
        out << "stage,seconds\n";
        for (const auto& [stage, seconds] : stages)
            out << stage << ',' << seconds << '\n';
    } else {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& [stage, seconds] : stages)
            arr.push_back({{"stage", stage}, {"seconds", seconds}});
        out << arr.dump() << '\n';
    }
    return ok ? kExitOk : kExitFailure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact verification of the odd-divisor / sum-of-squares identity"};
    app.require_subcommand(1);

    Format format = Format::pretty;
    unsigned jobs = 1;
    auto add_common = [&](CLI::App* sub, std::size_t& max_n, bool positive) {
        auto* opt = sub->add_option("--max-n", max_n, "Largest index n to compute")->required();
        if (positive)
            opt->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "Output format")
            ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
        sub->add_option("--jobs", jobs, "Upper bound on worker threads")->check(CLI::PositiveNumber);
    };

    std::string identity;
    std::size_t verify_n = 0;
    auto* verify = app.add_subcommand("verify", "Check an identity on 1..max-n");
    std::vector<std::string> identity_names{"all"};
    for (const auto& v : verifiers())
        identity_names.push_back(v.first);
    verify->add_option("identity", identity, "theorem1|lemma1|lemma2|log-theta|binomial|swap|all")
        ->required()
        ->check(CLI::IsMember(identity_names));
    add_common(verify, verify_n, true);

    std::string kind;
    std::size_t table_n = 0;
    auto* table = app.add_subcommand("table", "Export a table");
    table->add_option("kind", kind, "crn|oddsum|bell|theta")
        ->required()
        ->check(CLI::IsMember({"crn", "oddsum", "bell", "theta"}));
    add_common(table, table_n, false);

    std::size_t bench_n = 0;
    unsigned repetitions = 1;
    auto* bench = app.add_subcommand("bench", "Time the main computation stages");
    add_common(bench, bench_n, true);
    bench->add_option("--repetitions", repetitions, "Runs per stage; the fastest is reported")
        ->check(CLI::PositiveNumber);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*verify)
            return cmd_verify(identity, verify_n, format, jobs, out);
        if (*table)
            return cmd_table(kind, table_n, format, out);
        return cmd_bench(bench_n, repetitions, format, jobs, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

} // namespace thetasum::cli
