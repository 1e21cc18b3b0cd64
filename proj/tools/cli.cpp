#include "cli.hpp"

#include "idlat/dinglindner.hpp"
#include "idlat/errors.hpp"
#include "idlat/harness.hpp"
#include "idlat/identify.hpp"
#include "idlat/matrix_io.hpp"
#include "idlat/polyring.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace idlat::cli {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

std::string read_file(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path, 0, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/* A matrix argument names a file, or "-" for stdin. */
IntMatrix load_matrix(std::string const& path)
{
    try {
        if (path == "-") {
            std::ostringstream ss;
            ss << std::cin.rdbuf();
            return parse_matrix(ss.str());
        }
        return parse_matrix(read_file(path));
    } catch (ParseError const& e) {
        throw ParseError(path + ": " + e.what(), 0, 0);
    }
}

/* A polynomial argument is literal text, or @file. */
MonicPoly load_poly(std::string const& text)
{
    if (!text.empty() && text[0] == '@')
        return parse_monic_poly(read_file(text.substr(1)));
    return parse_monic_poly(text);
}

std::vector<std::size_t> parse_size_list(std::string const& s)
{
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() ||
            item.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("expected a comma-separated list of positive "
                             "integers, got '" + s + "'", 0, 0);
        out.push_back(std::stoul(item));
    }
    if (out.empty())
        throw ParseError("empty list", 0, 0);
    return out;
}

void write_output(std::string const& path, std::string const& content,
                  std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw ParseError("cannot write " + path, 0, 0);
    f << content;
}

struct Options {
    std::string matrix;
    std::string poly;
    std::string f;
    std::string g;
    std::string class_file;
    std::string dims = "2,3,4";
    std::string bounds = "3";
    std::string modes = "random-lattice,principal-ideal";
    std::string out_path;
    std::string svg_path;
    std::size_t k = 10;
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    bool no_precheck = false;
    bool json = false;
    bool trace = false;
};

int cmd_identify(Options const& o, std::ostream& out)
{
    IntMatrix const b = load_matrix(o.matrix);
    IdentifyOptions opts;
    opts.precheck = !o.no_precheck;
    IdentifyResult const r = identify(b, opts);
    if (!r.is_ideal()) {
        out << "not ideal\n";
        return kNegative;
    }
    out << to_json(r).dump() << '\n';
    return kOk;
}

int cmd_verify(Options const& o, std::ostream& out)
{
    IntMatrix const b = load_matrix(o.matrix);
    MonicPoly const g = load_poly(o.poly);
    if (g.degree() != b.rows())
        throw ParseError("polynomial degree " + std::to_string(g.degree())
                             + " differs from lattice dimension "
                             + std::to_string(b.rows()), 0, 0);
    if (!b.is_square())
        throw ParseError("matrix is not square", 0, 0);
    bool const ok = verify_ring(b, g);
    out << (ok ? "true" : "false") << '\n';
    return ok ? kOk : kNegative;
}

int cmd_gen(Options const& o, std::ostream& out)
{
    MonicPoly const f = load_poly(o.f);
    IntVector const g = parse_coeff_list(o.g);
    IntMatrix const b = principal_ideal_basis(f, g);
    if (o.json)
        write_output(o.out_path, matrix_to_json(b).dump() + "\n", out);
    else
        write_output(o.out_path, format_matrix(b), out);
    return kOk;
}

int cmd_sample(Options const& o, std::ostream& out)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(o.class_file));
    } catch (nlohmann::json::parse_error const& e) {
        throw ParseError(o.class_file + ": " + e.what(), 0, 0);
    }
    RingClass const rc = ring_class_from_json(j);
    for (auto const& g : sample_class(rc, o.k, o.seed))
        out << format_coeffs(g.coeffs()) << '\n';
    return kOk;
}

int cmd_dl(Options const& o, std::ostream& out)
{
    IntMatrix const b = load_matrix(o.matrix);
    DLResult const r = dl_identify(b);
    if (o.trace) {
        out << "H = " << to_string(r.trace.h) << '\n'
            << "A = " << to_string(r.trace.adj) << '\n'
            << "M = " << to_string(r.trace.shift) << '\n'
            << "AMH mod " << r.trace.det.get_str() << " = "
            << to_string(r.trace.amh_mod_det) << '\n';
    }
    if (!r.accepted()) {
        out << "false\n";
        return kNegative;
    }
    out << format_coeffs(r.poly->coeffs()) << '\n';
    return kOk;
}

int cmd_density(Options const& o, std::ostream& out)
{
    auto const dims = parse_size_list(o.dims);
    auto const bounds = parse_size_list(o.bounds);
    std::string csv = density_csv_header() + "\n";
    std::vector<PlotSeries> series;
    for (auto bound : bounds) {
        PlotSeries s{"bound=" + std::to_string(bound), {}};
        for (auto dim : dims) {
            ExperimentConfig cfg{dim, static_cast<unsigned>(bound), o.trials,
                                 o.seed, CorpusMode::random_lattice};
            DensityRow const row = density_experiment(cfg, o.threads);
            csv += to_csv(row) + "\n";
            s.points.emplace_back(double(dim), row.proportion);
        }
        series.push_back(std::move(s));
    }
    write_output(o.out_path, csv, out);
    if (!o.svg_path.empty()) {
        std::ofstream f(o.svg_path);
        f << line_plot_svg("Density of ideal lattices", "dim", "proportion",
                           series);
    }
    return kOk;
}

int cmd_bench(Options const& o, std::ostream& out)
{
    auto const dims = parse_size_list(o.dims);
    auto const bounds = parse_size_list(o.bounds);
    std::vector<CorpusMode> modes;
    {
        std::stringstream ss(o.modes);
        std::string item;
        while (std::getline(ss, item, ','))
            modes.push_back(parse_mode(item));
    }
    std::string csv = timing_csv_header() + "\n";
    std::vector<PlotSeries> series;
    for (auto mode : modes)
        for (auto bound : bounds) {
            PlotSeries s{std::string(mode_name(mode)) + " bound="
                             + std::to_string(bound), {}};
            for (auto dim : dims) {
                ExperimentConfig cfg{dim, static_cast<unsigned>(bound),
                                     o.trials, o.seed, mode};
                TimingRow const row = timing_experiment(cfg);
                csv += to_csv(row) + "\n";
                s.points.emplace_back(double(dim), row.mean_seconds);
            }
            series.push_back(std::move(s));
        }
    write_output(o.out_path, csv, out);
    if (!o.svg_path.empty()) {
        std::ofstream f(o.svg_path);
        f << line_plot_svg("identify() time", "dim", "mean seconds", series);
    }
    return kOk;
}

} // namespace

int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err)
{
    CLI::App app{"Identify coefficient-embedding ideal lattices", "idlat"};
    app.require_subcommand(1, 1);
    Options o;

    auto* identify_cmd = app.add_subcommand(
        "identify", "Decide whether a lattice is an ideal lattice and print "
                    "its ring class");
    identify_cmd->add_option("matrix", o.matrix, "Basis file ('-' = stdin)")
        ->required();
    identify_cmd->add_flag("--no-precheck", o.no_precheck,
                           "Skip the HNF divisibility fast path");

    auto* verify_cmd = app.add_subcommand(
        "verify", "Check that the lattice is an ideal of Z[x]/g directly");
    verify_cmd->add_option("matrix", o.matrix, "Basis file")->required();
    verify_cmd->add_option("poly", o.poly,
                           "Monic g: [g_1,...,g_n], x^n+..., or @file")
        ->required();

    auto* gen_cmd = app.add_subcommand(
        "gen", "Emit the basis of the principal ideal (g) in Z[x]/f");
    gen_cmd->add_option("--f", o.f, "Monic modulus f")->required();
    gen_cmd->add_option("--g", o.g, "Generator coefficients [g_0,...]")
        ->required();
    gen_cmd->add_flag("--json", o.json, "Write the JSON matrix form");
    gen_cmd->add_option("-o,--out", o.out_path, "Output file");

    auto* sample_cmd = app.add_subcommand(
        "sample", "Print members of a ring class");
    sample_cmd->add_option("class", o.class_file, "Class JSON from identify")
        ->required();
    sample_cmd->add_option("-k", o.k, "Number of members")
        ->check(CLI::PositiveNumber);
    sample_cmd->add_option("--seed", o.seed, "64-bit seed");

    auto* dl_cmd = app.add_subcommand(
        "dl", "Run the Ding-Lindner identification procedure");
    dl_cmd->add_option("matrix", o.matrix, "Basis file")->required();
    dl_cmd->add_flag("--trace", o.trace, "Print H, A, M and AMH mod det");

    auto* density_cmd = app.add_subcommand(
        "density", "Proportion of ideal lattices among random bases");
    auto* bench_cmd = app.add_subcommand(
        "bench", "Mean identify() time on random and principal corpora");
    for (auto* c : {density_cmd, bench_cmd}) {
        c->add_option("--dims", o.dims, "Comma-separated dimensions");
        c->add_option("--bounds", o.bounds, "Comma-separated bit bounds");
        c->add_option("--trials", o.trials, "Trials per point")
            ->check(CLI::PositiveNumber);
        c->add_option("--seed", o.seed, "64-bit seed");
        c->add_option("-o,--out", o.out_path, "CSV output file");
        c->add_option("--svg", o.svg_path, "SVG plot output file");
    }
    density_cmd->add_option("--threads", o.threads,
                            "Worker threads (0 = all cores)");
    bench_cmd->add_option("--modes", o.modes,
                          "random-lattice and/or principal-ideal");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (CLI::CallForHelp const&) {
        out << app.help();
        return kOk;
    } catch (CLI::CallForAllHelp const&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (CLI::ParseError const& e) {
        err << "idlat: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (identify_cmd->parsed())
            return cmd_identify(o, out);
        if (verify_cmd->parsed())
            return cmd_verify(o, out);
        if (gen_cmd->parsed())
            return cmd_gen(o, out);
        if (sample_cmd->parsed())
            return cmd_sample(o, out);
        if (dl_cmd->parsed())
            return cmd_dl(o, out);
        if (density_cmd->parsed())
            return cmd_density(o, out);
        if (bench_cmd->parsed())
            return cmd_bench(o, out);
    } catch (ParseError const& e) {
        err << "idlat: " << e.what() << '\n';
        return kUsage;
    } catch (NotFullRank const& e) {
        err << "idlat: " << e.what() << '\n';
        return kUsage;
    } catch (DimensionMismatch const& e) {
        err << "idlat: " << e.what() << '\n';
        return kUsage;
    } catch (std::invalid_argument const& e) {
        err << "idlat: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace idlat::cli
