#include "cacodes/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "cacodes/codes.hpp"
#include "cacodes/error.hpp"
#include "cacodes/io.hpp"
#include "cacodes/netsim.hpp"

namespace cacodes::cli {

namespace {

using io::Json;

struct Options {
    std::string q;
    std::string poly;
    std::vector<std::string> polys;
    std::string gcd = "1";
    std::string code_path;
    std::string out_path;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t t = 0;
    std::size_t budget = 64;
    std::size_t erasures = 0;
    std::size_t errors = 0;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    bool csv = false;
};

Json manifest(const std::string& subcommand, Json args, const std::string& q,
              std::optional<std::uint64_t> seed = std::nullopt) {
    Json m;
    m["tool"] = kToolName;
    m["version"] = kVersion;
    m["subcommand"] = subcommand;
    m["args"] = std::move(args);
    m["q"] = q;
    if (seed) m["seed"] = *seed;
    return m;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("IoError", "cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        fail("InvalidCodeFile", "'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) fail("IoError", "cannot write '" + path + "'");
    f << text;
}

std::string csv_row(std::span<const Elem> row, const Field& field) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i != 0) line += ',';
        line += element_text(field, row[i]);
    }
    return line;
}

Json family_json(std::span<const Polynomial> family) {
    Json arr = Json::array();
    for (const auto& p : family) arr.push_back(io::polynomial_to_json(p));
    return arr;
}

std::vector<Polynomial> family_polys(const CAFamily& fam) {
    std::vector<Polynomial> out;
    for (const auto& r : fam.members()) out.push_back(r.poly());
    return out;
}

int run_kernel(const Options& o, std::ostream& out) {
    const Field field = Field::parse(o.q);
    const LinearCA ca(LinearRule::make(parse_polynomial(field, o.poly)), o.n);
    const Subspace ker = kernel_basis(ca);
    if (o.csv) {
        for (std::size_t i = 0; i < ker.dim(); ++i) out << csv_row(ker.basis().row(i), field) << '\n';
        return kOk;
    }
    Json j;
    j["manifest"] = manifest("kernel", {{"q", o.q}, {"poly", o.poly}, {"n", o.n}}, field.spec());
    j["rule"] = io::polynomial_to_json(ca.rule().poly());
    j["n"] = ca.n();
    j["k"] = ca.k();
    j["dim"] = ker.dim();
    j["basis"] = io::rows_to_json(ker);
    j["transition_matrix"] = io::matrix_to_json(transition_matrix(ca));
    emit(out, j);
    return kOk;
}

Json prediction_json(const CAFamily& fam) {
    if (fam.size() < 2) return nullptr;
    const auto pred = predicted_min_distance(fam);
    Json j;
    j["min_distance"] = pred.min_distance;
    j["gcd_profile"] = io::profile_to_json(pred.profile);
    return j;
}

int run_build_code(const Options& o, std::ostream& out) {
    const Field field = Field::parse(o.q);
    Json args{{"q", o.q}, {"k", o.k}};
    std::vector<Polynomial> polys;
    Json gcd_json = nullptr;
    if (!o.polys.empty()) {
        for (const auto& text : o.polys) polys.push_back(parse_polynomial(field, text));
        args["poly"] = o.polys;
    } else {
        const Polynomial g = parse_polynomial(field, o.gcd);
        polys = construction_uniform_gcd(o.k, g);
        args["gcd"] = o.gcd;
        gcd_json = io::polynomial_to_json(g);
    }
    const CAFamily fam = CAFamily::make(field, polys);
    if (!o.polys.empty() && fam.k() != o.k) {
        fail("MixedDegrees", "family has degree " + std::to_string(fam.k()) + " but --k is " + std::to_string(o.k));
    }
    const GrassmannianCode code = code_from_family(fam);

    Json j;
    j["manifest"] = manifest("build-code", std::move(args), field.spec());
    j["gcd"] = gcd_json;
    j["family"] = family_json(polys);
    j["code"] = io::code_to_json(code);
    j["params"] = io::params_to_json(code_params(code));
    j["predicted"] = prediction_json(fam);
    if (code.duplicates_dropped() != 0) j["duplicate_kernels"] = code.duplicates_dropped();
    const std::string text = j.dump(2) + "\n";
    if (!o.out_path.empty()) write_text_file(o.out_path, text);
    out << text;
    return kOk;
}

int run_analyze(const Options& o, std::ostream& out) {
    const GrassmannianCode code = io::code_from_json(read_json_file(o.code_path));
    const CodeParams params = code_params(code);
    Json j;
    j["manifest"] = manifest("analyze", {{"code", o.code_path}}, code.field().spec());
    j["params"] = io::params_to_json(params);
    j["constant_dim"] = code.constant_dim() ? Json(*code.constant_dim()) : Json(nullptr);
    const auto fam = family_from_code(code);
    if (fam) {
        j["family"] = family_json(family_polys(*fam));
        j["predicted"] = prediction_json(*fam);
        if (fam->size() >= 2 && params.min_distance) {
            j["prediction_matches"] = predicted_min_distance(*fam).min_distance == *params.min_distance;
        }
    } else {
        j["family"] = nullptr;
        j["predicted"] = nullptr;
        j["family_note"] = "codewords are not all kernels of linear CA with n = 2k";
    }
    emit(out, j);
    return kOk;
}

Json gauss_terms(std::size_t n, const Field& field) {
    Json terms = Json::array();
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        std::uint64_t power = 1;
        for (std::size_t i = 0; i < n / d; ++i) power *= field.q();
        terms.push_back({{"d", d}, {"mobius", mobius(static_cast<std::int64_t>(d))}, {"q_pow", power}});
    }
    Json j;
    j["degree"] = n;
    j["divisor_terms"] = std::move(terms);
    j["gauss_count"] = count_irreducibles(n, field);
    j["count_excluding_x"] = count_irreducibles_excluding_x(n, field);
    return j;
}

int run_count(const Options& o, std::ostream& out) {
    const Field field = Field::parse(o.q);
    if (o.k < 1) fail("NonPositive", "--k must be at least 1");
    if (o.t > o.k) fail("DegreeTooLarge", "--t exceeds --k");
    const std::size_t m = o.k - o.t;
    std::vector<std::size_t> degrees;
    if (m >= 1) {
        for (std::size_t j = 1; j <= m / 2; ++j) degrees.push_back(j);
        degrees.push_back(m);
    }
    if (o.csv) {
        out << "degree,gauss_count,count_excluding_x\n";
        for (const auto d : degrees) {
            out << d << ',' << count_irreducibles(d, field) << ',' << count_irreducibles_excluding_x(d, field) << '\n';
        }
        return kOk;
    }
    Json j;
    Json args{{"q", o.q}, {"k", o.k}};
    if (o.t != 0) args["t"] = o.t;
    j["manifest"] = manifest("count", std::move(args), field.spec());
    j["k"] = o.k;
    j["N_k"] = max_coprime_family_size(o.k, field);
    j["N_k_gauss"] = max_coprime_family_size_gauss(o.k, field);
    j["note"] = "N_k excludes X from the degree-1 count; N_k_gauss uses Gauss's I_1 = q";
    if (o.t != 0) {
        j["t"] = o.t;
        j["uniform_gcd_size"] = uniform_gcd_family_size(o.k, o.t, field);
        j["uniform_gcd_size_gauss"] = m == 0 ? 1 : max_coprime_family_size_gauss(m, field);
    }
    Json terms = Json::array();
    for (const auto d : degrees) terms.push_back(gauss_terms(d, field));
    j["terms"] = std::move(terms);
    emit(out, j);
    return kOk;
}

int run_search_max(const Options& o, std::ostream& out) {
    const Field field = Field::parse(o.q);
    const auto found = search_max_family(o.k, o.t, field, o.budget);
    if (o.csv) {
        for (const auto& p : found) out << to_text(p) << '\n';
        return kOk;
    }
    Json j;
    j["manifest"] =
        manifest("search-max", {{"q", o.q}, {"k", o.k}, {"t", o.t}, {"budget", o.budget}}, field.spec());
    j["k"] = o.k;
    j["t"] = o.t;
    j["size"] = found.size();
    j["family"] = family_json(found);
    if (o.t == 0) j["N_k"] = max_coprime_family_size(o.k, field);
    emit(out, j);
    return kOk;
}

int run_simulate(const Options& o, std::ostream& out) {
    const GrassmannianCode code = io::code_from_json(read_json_file(o.code_path));
    const ChannelConfig cfg{o.erasures, o.errors, o.seed};
    const SimulationStats stats = simulate(code, cfg, o.trials);
    std::string text;
    if (o.csv) {
        std::ostringstream csv;
        csv << "distance,count\n";
        for (const auto& [d, count] : stats.distance_histogram) csv << d << ',' << count << '\n';
        text = csv.str();
    } else {
        Json j;
        j["manifest"] = manifest("simulate",
                                 {{"code", o.code_path},
                                  {"erasures", o.erasures},
                                  {"errors", o.errors},
                                  {"trials", o.trials},
                                  {"seed", o.seed}},
                                 code.field().spec(), o.seed);
        j["config"] = {{"erasures", o.erasures}, {"errors", o.errors}, {"trials", o.trials}, {"seed", o.seed}};
        j["stats"] = io::stats_to_json(stats);
        text = j.dump(2) + "\n";
    }
    if (!o.out_path.empty()) write_text_file(o.out_path, text);
    out << text;
    return kOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Grassmannian subspace codes from linear cellular automata", kToolName};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    Options o;
    std::function<int(const Options&, std::ostream&)> run;

    auto* kernel = app.add_subcommand("kernel", "Kernel basis of a linear CA");
    kernel->add_option("--q", o.q, "Field spec p or p^m")->required();
    kernel->add_option("--poly", o.poly, "Rule polynomial, ascending coefficients")->required();
    kernel->add_option("--n", o.n, "Lattice length")->required();
    kernel->add_flag("--csv", o.csv, "Basis rows as CSV");
    kernel->callback([&] { run = run_kernel; });

    auto* build = app.add_subcommand("build-code", "Build a CA code with uniform pairwise gcd");
    build->add_option("--q", o.q, "Field spec p or p^m")->required();
    build->add_option("--k", o.k, "Rule degree")->required()->check(CLI::PositiveNumber);
    auto* gcd_opt = build->add_option("--gcd", o.gcd, "Common gcd polynomial (default 1)");
    build->add_option("--poly", o.polys, "Explicit family member (repeatable)")->excludes(gcd_opt);
    build->add_option("--out", o.out_path, "Also write the JSON to this file");
    build->callback([&] { run = run_build_code; });

    auto* analyze = app.add_subcommand("analyze", "Parameters and gcd profile of a code file");
    analyze->add_option("--code", o.code_path, "Code JSON file")->required();
    analyze->callback([&] { run = run_analyze; });

    auto* count = app.add_subcommand("count", "Maximal family sizes and Gauss-formula terms");
    count->add_option("--q", o.q, "Field spec p or p^m")->required();
    count->add_option("--k", o.k, "Rule degree")->required();
    count->add_option("--t", o.t, "Degree of the common gcd");
    count->add_flag("--csv", o.csv, "Irreducible counts as CSV");
    count->callback([&] { run = run_count; });

    auto* search = app.add_subcommand("search-max", "Exact maximum family with pairwise gcd degree <= t");
    search->add_option("--q", o.q, "Field spec p or p^m")->required();
    search->add_option("--k", o.k, "Rule degree")->required();
    search->add_option("--t", o.t, "Gcd degree bound")->required();
    search->add_option("--budget", o.budget, "Maximum |Poly_k| to search (default 64)");
    search->add_flag("--csv", o.csv, "One polynomial per line");
    search->callback([&] { run = run_search_max; });

    auto* sim = app.add_subcommand("simulate", "Operator-channel decoding simulation");
    sim->add_option("--code", o.code_path, "Code JSON file")->required();
    sim->add_option("--erasures", o.erasures, "Dimensions erased per transmission");
    sim->add_option("--errors", o.errors, "Dimensions injected per transmission");
    sim->add_option("--trials", o.trials, "Number of trials (default 1000)");
    sim->add_option("--seed", o.seed, "Random seed");
    sim->add_option("--out", o.out_path, "Write stats to this file");
    sim->add_flag("--csv", o.csv, "Distance histogram as CSV");
    sim->callback([&] { run = run_simulate; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? std::string(kVersion) + "\n" : app.help());
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n";
        const auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        return kUsageError;
    }

    try {
        return run(o, out);
    } catch (const Error& e) {
        Json j;
        j["error"] = {{"name", e.name()}, {"message", e.what()}};
        emit(out, j);
        return kDomainError;
    }
}

}  // namespace cacodes::cli
