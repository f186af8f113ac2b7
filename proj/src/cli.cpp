#include "fano/cli.hpp"

#include <CLI11.hpp>

#include "fano/report.hpp"

namespace fano {

namespace {

struct Options {
    std::string format = "json";
    unsigned threads = 0;
    std::uint64_t seed = 0;

    int n = -1;
    int k = 0;
    std::string d;
    std::vector<std::string> forms;
    std::vector<int> chart;
    std::string plane;
    std::string h;
    std::vector<std::uint32_t> primes;
    std::uint32_t q = 0;
    int trials = 0;
    bool witnesses = false;
};

template <class Fn>
decltype(auto) with_field(const FieldSpec& field, Fn&& fn) {
    if (field.is_prime_field()) return fn.template operator()<Fp>();
    return fn.template operator()<Rational>();
}

std::size_t variable_count(const Options& o) {
    const std::size_t inferred = infer_variable_count(o.forms);
    return o.n >= 0 ? std::max(inferred, static_cast<std::size_t>(o.n + 1)) : inferred;
}

void emit(std::ostream& out, Json j) {
    j["schema"] = kSchemaVersion;
    out << j.dump(2) << "\n";
}

std::string key_value_csv(const Json& j) {
    std::string out = "key,value\n";
    for (const auto& [key, value] : j.items()) {
        if (value.is_structured()) continue;
        out += key + "," + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    }
    return out;
}

void run_predict(const Options& o, std::ostream& out) {
    const Json j = predict_json(o.n, o.k, MultiDegree::parse(o.d));
    if (o.format == "csv") {
        out << key_value_csv(j);
        return;
    }
    out << j.dump(2) << "\n";
}

void run_equations(const Options& o, std::ostream& out) {
    const FieldSpec field = o.q ? FieldSpec::prime(o.q) : FieldSpec::rationals();
    const Chart chart = o.chart.empty() ? Chart::standard(o.k, o.n) : Chart(o.k, o.n, o.chart);
    with_field(field, [&]<class S>() {
        const auto forms = parse_forms<S>(o.forms, static_cast<std::size_t>(o.n + 1), field);
        const auto sys = fano_local_system(forms, chart);
        Json j = to_json(sys);
        j["field"] = field.name();
        if (o.format == "csv") {
            out << "form,lambda,equation\n";
            for (const auto& eq : j["equations"])
                out << eq["form"].get<std::size_t>() << "," << eq["lambda"].get<std::string>() << ","
                    << eq["equation"].get<std::string>() << "\n";
            return;
        }
        emit(out, std::move(j));
    });
}

void run_plane_command(const Options& o, bool alpha, std::ostream& out) {
    const Json plane_doc = Json::parse(o.plane);
    const FieldSpec field = plane_field(plane_doc);
    with_field(field, [&]<class S>() {
        const auto plane = plane_from_json<S>(plane_doc, field);
        const auto forms = parse_forms<S>(o.forms, static_cast<std::size_t>(plane.n() + 1), field);
        if (alpha) {
            const auto a = alpha_matrix(forms, plane);
            if (o.format == "csv") {
                out << matrix_csv(a.matrix);
                return;
            }
            Json j = to_json(a);
            j["plane"] = plane_json(plane);
            emit(out, std::move(j));
            return;
        }
        Json j = to_json(tangent_profile(forms, plane));
        if (o.format == "csv") {
            out << key_value_csv(j);
            return;
        }
        j["plane"] = plane_json(plane);
        emit(out, std::move(j));
    });
}

void run_mmu(const Options& o, std::ostream& out) {
    const MultiDegree d = MultiDegree::parse(o.d);
    const MMuMatrix m = m_mu(d, o.k);
    Json j = to_json(m);
    if (!o.h.empty()) {
        const auto h = parse_h_functional(o.h, d, o.k);
        const auto hm = apply_h(m, h, FieldSpec::rationals());
        if (o.format == "csv") {
            out << matrix_csv(hm);
            return;
        }
        j["h_matrix"] = matrix_json(hm);
        j["rank"] = rank(hm);
    } else if (o.format == "csv") {
        for (const auto& row : j["entries"]) {
            for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c].get<std::string>();
            out << "\n";
        }
        return;
    }
    emit(out, std::move(j));
}

void run_count(const Options& o, std::ostream& out) {
    const std::size_t nvars = variable_count(o);
    std::vector<CountReport> reports;
    for (std::uint32_t q : o.primes) {
        const FieldSpec field = FieldSpec::prime(q);
        const auto forms = parse_forms<Fp>(o.forms, nvars, field, DegreePolicy::AllowLinear);
        reports.push_back(count_fano_points(forms, o.k, o.witnesses, o.threads));
    }
    if (o.format == "csv") {
        out << count_csv(reports);
        return;
    }
    if (reports.size() == 1) {
        emit(out, to_json(reports.front(), o.witnesses));
        return;
    }
    Json all = Json::array();
    for (const CountReport& r : reports) all.push_back(to_json(r, o.witnesses));
    emit(out, {{"reports", std::move(all)}});
}

void run_scan(const Options& o, std::ostream& out) {
    ScanConfig cfg;
    cfg.n = o.n;
    cfg.k = o.k;
    cfg.d = MultiDegree::parse(o.d);
    cfg.q = o.q;
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    const ScanReport r = scan(cfg, o.threads);
    if (o.format == "csv") {
        out << scan_csv(r);
        return;
    }
    emit(out, to_json(r));
}

void run_dimest(const Options& o, std::ostream& out) {
    const std::size_t nvars = variable_count(o);
    auto family = [&](const FieldSpec& field) {
        return parse_forms<Fp>(o.forms, nvars, field, DegreePolicy::AllowLinear);
    };
    const DimensionEstimate e = estimate_dimension(family, o.k, o.primes, o.threads);
    if (o.format == "csv") {
        out << "q,count\n";
        for (std::size_t i = 0; i < e.primes.size(); ++i) out << e.primes[i] << "," << e.counts[i] << "\n";
        return;
    }
    Json j = to_json(e);
    const auto degrees = family(FieldSpec::prime(e.primes.front())).degrees();
    j["k"] = o.k;
    j["n"] = static_cast<int>(nvars) - 1;
    j["d"] = to_json(degrees);
    j["expected_dim"] = big_json(expected_dimension(static_cast<int>(nvars) - 1, o.k, degrees));
    emit(out, std::move(j));
}

void add_forms(CLI::App* cmd, Options& o) {
    cmd->add_option("--f", o.forms, "Forms f_1,...,f_s in z0..zn")->required()->delimiter(',');
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fano varieties of complete intersections", "fano"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--threads", o.threads, "Worker threads (0 = all cores)")->envname("FANO_THREADS");
    app.add_option("--seed", o.seed, "Random seed");

    auto* predict = app.add_subcommand("predict", "Expected dimension and regime");
    predict->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
    predict->add_option("--k", o.k)->required()->check(CLI::NonNegativeNumber);
    predict->add_option("--d", o.d, "Degrees, e.g. 2,2")->required();

    auto* equations = app.add_subcommand("equations", "Local equations of the Fano variety in one chart");
    add_forms(equations, o);
    equations->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
    equations->add_option("--k", o.k)->required()->check(CLI::NonNegativeNumber);
    equations->add_option("--chart", o.chart, "Pivot columns, e.g. 0,1")->delimiter(',');
    equations->add_option("--q", o.q, "Work over F_q instead of Q");

    auto* tangent = app.add_subcommand("tangent", "Jacobian rank and tangent dimension at a plane");
    add_forms(tangent, o);
    tangent->add_option("--plane", o.plane, "Plane as JSON {pivots, entries, q}")->required();

    auto* alpha = app.add_subcommand("alpha", "Matrix of the multiplication map at a plane");
    add_forms(alpha, o);
    alpha->add_option("--plane", o.plane, "Plane as JSON {pivots, entries, q}")->required();

    auto* mmu = app.add_subcommand("mmu", "Symbolic multiplication matrix and its evaluation at h");
    mmu->set_help_flag("--help", "Print this help message and exit");
    mmu->add_option("--d", o.d)->required();
    mmu->add_option("--k", o.k)->required()->check(CLI::NonNegativeNumber);
    mmu->add_option("--h", o.h, "Dual functional, e.g. \"(z0^2)*+(z0^2)*\"");

    auto* count = app.add_subcommand("count", "Count F_q-rational k-planes on V(f)");
    add_forms(count, o);
    count->add_option("--k", o.k)->required()->check(CLI::NonNegativeNumber);
    count->add_option("--q", o.primes, "Prime or comma-separated primes")->required()->delimiter(',');
    count->add_option("--n", o.n, "Ambient dimension (default: highest variable index)");
    count->add_flag("--witnesses", o.witnesses, "List the planes found");

    auto* scan_cmd = app.add_subcommand("scan", "Random forms: emptiness and smoothness statistics");
    scan_cmd->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
    scan_cmd->add_option("--k", o.k)->required()->check(CLI::NonNegativeNumber);
    scan_cmd->add_option("--d", o.d)->required();
    scan_cmd->add_option("--q", o.q)->required();
    scan_cmd->add_option("--trials", o.trials)->required()->check(CLI::PositiveNumber);
    scan_cmd->add_option("--seed", o.seed, "Random seed");

    auto* dimest = app.add_subcommand("dimest", "Dimension estimate from point counts");
    add_forms(dimest, o);
    dimest->add_option("--k", o.k)->required()->check(CLI::NonNegativeNumber);
    dimest->add_option("--primes", o.primes)->required()->delimiter(',');
    dimest->add_option("--n", o.n, "Ambient dimension (default: highest variable index)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (predict->parsed()) run_predict(o, out);
        else if (equations->parsed()) run_equations(o, out);
        else if (tangent->parsed()) run_plane_command(o, false, out);
        else if (alpha->parsed()) run_plane_command(o, true, out);
        else if (mmu->parsed()) run_mmu(o, out);
        else if (count->parsed()) run_count(o, out);
        else if (scan_cmd->parsed()) run_scan(o, out);
        else if (dimest->parsed()) run_dimest(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Json::exception& e) {
        err << "error: invalid --plane JSON: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"fano"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace fano
