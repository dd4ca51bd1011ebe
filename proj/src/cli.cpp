#include "rankgf/cli.hpp"

#include <filesystem>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "rankgf/analysis.hpp"
#include "rankgf/genfunc.hpp"
#include "rankgf/rational.hpp"
#include "rankgf/search.hpp"

namespace rankgf::cli {

using json = nlohmann::ordered_json;

namespace {

json record_json(const OutputRecord& r)
{
    json j;
    j["lambda"] = r.lambda;
    j["kind"] = std::string(kind_name(r.kind));
    j["weight"] = r.weight;
    j["coeffs"] = r.coeffs;
    j["unimodal"] = r.unimodal;
    j["peak"] = r.peak;
    j["first_dip"] = r.first_dip ? json(*r.first_dip) : json(nullptr);
    return j;
}

std::vector<Part> parts_of(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

// Shared by gen and check.
struct SeriesRequest {
    std::string lambda;
    std::string kind = "G";
    Part weight = 1;
    std::string method = "formula";
    std::optional<std::size_t> truncate;
};

CoeffSeq compute(const Partition& lambda, Kind kind, Method method, Part weight,
                 std::optional<std::size_t> truncate)
{
    if (kind == Kind::G)
        return rank_gf(lambda, method, weight, truncate);
    if (weight != 1)
        throw std::invalid_argument("kind F only supports weight 1");
    if (!lambda.is_strict())
        throw std::invalid_argument("kind F requires strictly decreasing parts");
    if (method == Method::enumeration)
        return distinct_rank_gf_enumerated(lambda, truncate);
    return distinct_rank_gf(lambda, truncate, method);
}

int cmd_series(const SeriesRequest& req, const std::string& format, bool verify, std::ostream& out,
               std::ostream& err)
{
    const Partition lambda = parse_partition(req.lambda);
    const Kind kind = parse_kind(req.kind);
    const Method method = parse_method(req.method);
    const CoeffSeq coeffs = compute(lambda, kind, method, req.weight, req.truncate);

    if (verify) {
        // The DP route has no weighted form; weighted requests check
        // against the recursion instead.
        Method other = req.weight == 1 ? Method::dp : Method::recursion;
        if (method == other)
            other = Method::formula;
        const CoeffSeq check = compute(lambda, kind, other, req.weight, req.truncate);
        if (check != coeffs) {
            err << "verification failed: " << method_name(method) << " and " << method_name(other)
                << " disagree for lambda = " << lambda.to_string() << '\n';
            return exit_verification;
        }
    }

    const OutputRecord record = make_record(lambda, kind, req.weight, coeffs);
    if (format == "csv")
        out << render_csv(record);
    else
        out << render_json(record) << '\n';
    return exit_ok;
}

struct ScanRequest {
    std::size_t parts = 1;
    Part max_first = 1;
    std::string kind = "G";
    bool distinct = false;
    unsigned jobs = 1;
    std::string checkpoint;
    std::string format = "json";
    bool all = false;
};

int cmd_scan(const ScanRequest& req, std::ostream& out)
{
    ScanOptions options;
    options.parts = req.parts;
    options.max_first = req.max_first;
    options.kind = parse_kind(req.kind);
    options.distinct = req.distinct;
    options.jobs = req.jobs;
    if (!req.checkpoint.empty())
        options.checkpoint = std::filesystem::path(req.checkpoint);

    if (req.format == "csv")
        out << "lambda,kind,unimodal,peak,first_dip\n";
    scan_partitions(options, [&](const ScanResult& r) {
        if (r.report.unimodal && !req.all)
            return;
        if (req.format == "csv") {
            out << '"' << r.lambda.to_string() << "\"," << kind_name(r.kind) << ','
                << (r.report.unimodal ? "true" : "false") << ',' << r.report.peak_index << ',';
            if (r.report.first_dip_index)
                out << *r.report.first_dip_index;
            out << '\n';
            return;
        }
        // Regenerate the coefficients; the scan itself keeps only verdicts.
        const auto t = static_cast<std::size_t>(r.lambda.size());
        const CoeffSeq coeffs
            = r.kind == Kind::G ? rank_gf_formula(r.lambda, 1, t) : distinct_rank_gf(r.lambda, t);
        out << render_json(make_record(r.lambda, r.kind, 1, coeffs)) << '\n';
    });
    return exit_ok;
}

int cmd_witness4(std::int64_t m_min, std::int64_t m_max, std::ostream& out, std::ostream& err)
{
    if (m_min < 1 || m_min > m_max) {
        err << "error: need 1 <= m-min <= m-max\n";
        return exit_usage;
    }
    for (std::int64_t m = m_min; m <= m_max; ++m) {
        const auto w = find_witness(m);
        if (!w)
            continue;
        const Partition mu = lift_to_distinct(*w);
        json j;
        j["m"] = w->m;
        j["ell"] = w->ell;
        j["n"] = w->n;
        j["N"] = w->N;
        j["lambda"] = parts_of(w->lambda);
        j["f"] = w->f_value.get_str();
        j["g"] = w->g_value.get_str();
        j["dip_index"] = w->dip_index();
        j["verified"] = w->verified;
        j["mu"] = parts_of(mu);
        j["mu_dip_index"] = w->N + 7;
        out << j.dump() << '\n';
    }
    return exit_ok;
}

int cmd_tables(int tb_max, int fd_max, int alpha_grid, std::ostream& out, std::ostream& err)
{
    if (tb_max < 5 || fd_max < 1 || alpha_grid < 1) {
        err << "error: need tb-max >= 5, fd-max >= 1 and alpha-grid >= 1\n";
        return exit_usage;
    }
    json j;
    j["T"] = json::array();
    for (int b = 5; b <= tb_max; ++b)
        j["T"].push_back({{"b", b}, {"value", alternating_sum_T(b).get_str()}});

    j["finite_difference"] = json::array();
    BigInt expected = 1;
    for (int k = 1; k <= fd_max; ++k) {
        expected *= 2 * k; // 2^k k!
        const BigInt v = finite_difference_sum(k);
        j["finite_difference"].push_back(
            {{"k", k}, {"value", v.get_str()}, {"abs_is_2^k_k!", abs(v) == expected}});
    }

    // x runs over [5/6, 1] in alpha_grid equal steps.
    j["alpha_threshold"] = Rational(-1, 500).to_string();
    j["alpha"] = json::array();
    const Rational lo(5, 6);
    const Rational step = Rational(1, 6) / Rational(alpha_grid);
    for (int t = 0; t <= alpha_grid; ++t) {
        const Rational x = lo + step * Rational(t);
        j["alpha"].push_back({{"x", x.to_string()},
                              {"y_5_2", alpha5(x, Rational(5, 2)).to_string()},
                              {"y_5x_2", alpha5(x, Rational(5, 2) * x).to_string()}});
    }
    out << j.dump() << '\n';
    return exit_ok;
}

} // namespace

OutputRecord make_record(const Partition& lambda, Kind kind, Part weight, const CoeffSeq& coeffs)
{
    OutputRecord r;
    r.lambda = parts_of(lambda);
    r.kind = kind;
    r.weight = weight;
    r.coeffs.reserve(coeffs.size());
    for (const BigInt& c : coeffs)
        r.coeffs.push_back(c.get_str());
    const UnimodalityReport report = unimodality_report(coeffs);
    r.unimodal = report.unimodal;
    r.peak = report.peak_index;
    r.first_dip = report.first_dip_index;
    return r;
}

std::string render_json(const OutputRecord& record) { return record_json(record).dump(); }

std::string render_csv(const OutputRecord& record)
{
    std::ostringstream os;
    os << "n,coeff\n";
    for (std::size_t n = 0; n < record.coeffs.size(); ++n)
        os << n << ',' << record.coeffs[n] << '\n';
    return os.str();
}

CoeffSeq parse_coeffs(const std::vector<std::string>& coeffs)
{
    std::vector<BigInt> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs)
        c.emplace_back(s, 10);
    return CoeffSeq(std::move(c));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rank generating functions of partitions inside a Ferrers diagram", "rankgf"};
    app.require_subcommand(1);

    SeriesRequest gen_req;
    std::string gen_format = "json";
    bool gen_verify = false;
    auto* gen = app.add_subcommand("gen", "Coefficients of G^i_lambda or F_lambda");
    gen->add_option("--lambda", gen_req.lambda, "Partition, e.g. 4,3,2")->required();
    gen->add_option("--kind", gen_req.kind, "G or F")->check(CLI::IsMember({"G", "F"}));
    gen->add_option("--weight", gen_req.weight, "Weight i of the first part")->check(CLI::PositiveNumber);
    gen->add_option("--method", gen_req.method, "formula, recursion, dp or enum")
        ->check(CLI::IsMember({"formula", "recursion", "dp", "enum"}));
    gen->add_option("--truncate", gen_req.truncate, "Highest degree to compute");
    gen->add_option("--format", gen_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    gen->add_flag("--verify", gen_verify, "Cross-check against a second method");

    SeriesRequest check_req;
    auto* check = app.add_subcommand("check", "Unimodality verdict for one partition");
    check->add_option("--lambda", check_req.lambda, "Partition, e.g. 10,9,9,9,9,9")->required();
    check->add_option("--kind", check_req.kind, "G or F")->check(CLI::IsMember({"G", "F"}));

    ScanRequest scan_req;
    auto* scan = app.add_subcommand("scan", "Exhaustive unimodality scan");
    scan->add_option("--parts", scan_req.parts, "Number of parts")->required()->check(CLI::PositiveNumber);
    scan->add_option("--max-first", scan_req.max_first, "Largest first part")
        ->required()
        ->check(CLI::PositiveNumber);
    scan->add_option("--kind", scan_req.kind, "G or F")->check(CLI::IsMember({"G", "F"}));
    scan->add_flag("--distinct", scan_req.distinct, "Strict partitions only (implies F)");
    scan->add_option("--jobs", scan_req.jobs, "Worker threads")->check(CLI::PositiveNumber);
    scan->add_option("--checkpoint", scan_req.checkpoint, "Checkpoint file for resuming");
    scan->add_option("--format", scan_req.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    scan->add_flag("--all", scan_req.all, "Emit unimodal results too");

    std::int64_t m_min = 0;
    std::int64_t m_max = 0;
    auto* witness = app.add_subcommand("witness4", "Nonunimodal 4-part witnesses");
    witness->add_option("--m-min", m_min, "Smallest m")->required();
    witness->add_option("--m-max", m_max, "Largest m")->required();

    int tb_max = 20;
    int fd_max = 10;
    int alpha_grid = 200;
    auto* tables = app.add_subcommand("tables", "T(b), finite differences and alpha samples");
    tables->add_option("--tb-max", tb_max, "Largest b for T(b)");
    tables->add_option("--fd-max", fd_max, "Largest order k");
    tables->add_option("--alpha-grid", alpha_grid, "Steps on x in [5/6, 1]");

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("rankgf");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*gen)
            return cmd_series(gen_req, gen_format, gen_verify, out, err);
        if (*check)
            return cmd_series(check_req, "json", false, out, err);
        if (*scan)
            return cmd_scan(scan_req, out);
        if (*witness)
            return cmd_witness4(m_min, m_max, out, err);
        if (*tables)
            return cmd_tables(tb_max, fd_max, alpha_grid, out, err);
    } catch (const VerificationError& e) {
        err << "verification failure: " << e.what() << '\n';
        return exit_verification;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace rankgf::cli
