#include "idlat/harness.hpp"
#include "idlat/errors.hpp"
#include "idlat/identify.hpp"
#include "idlat/linalg.hpp"
#include "idlat/random.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace idlat {

std::string_view mode_name(CorpusMode m)
{
    return m == CorpusMode::random_lattice ? "random-lattice"
                                           : "principal-ideal";
}

CorpusMode parse_mode(std::string_view s)
{
    if (s == "random-lattice")
        return CorpusMode::random_lattice;
    if (s == "principal-ideal")
        return CorpusMode::principal_ideal;
    throw std::invalid_argument("unknown corpus mode: " + std::string(s));
}

void validate(ExperimentConfig const& cfg)
{
    if (cfg.dim < 1)
        throw std::invalid_argument("dim must be >= 1");
    if (cfg.bound < 1 || cfg.bound > 62)
        throw std::invalid_argument("bound must be in [1, 62]");
    if (cfg.trials < 1)
        throw std::invalid_argument("trials must be >= 1");
}

namespace {

Integer draw_entry(Xoshiro256ss& rng, unsigned bound)
{
    std::int64_t const lim = (std::int64_t(1) << bound) - 1;
    return Integer(static_cast<long>(rng.uniform(-lim, lim)));
}

} // namespace

IntMatrix random_basis(std::size_t n, unsigned bound, std::uint64_t seed)
{
    validate({n, bound, 1, seed, CorpusMode::random_lattice});
    Xoshiro256ss rng(seed);
    IntMatrix b(n, n);
    for (;;) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                b(i, j) = draw_entry(rng, bound);
        if (is_nonsingular(b))
            return b;
    }
}

PrincipalInstance random_principal(std::size_t n, unsigned bound,
                                   std::uint64_t seed, long f_max)
{
    validate({n, bound, 1, seed, CorpusMode::principal_ideal});
    if (f_max < 0)
        throw std::invalid_argument("f_max must be nonnegative");
    Xoshiro256ss rng(seed);
    for (;;) {
        IntVector fc(n);
        for (auto& c : fc)
            c = static_cast<long>(rng.uniform(-f_max, f_max));
        CoeffVector g(n);
        for (auto& c : g)
            c = draw_entry(rng, bound);
        if (is_zero(g))
            continue;
        MonicPoly f(std::move(fc));
        try {
            IntMatrix b = principal_ideal_basis(f, g);
            return {std::move(f), std::move(g), std::move(b)};
        } catch (NotFullRank const&) {
            continue;
        }
    }
}

DensityRow density_experiment(ExperimentConfig const& cfg, unsigned threads)
{
    validate(cfg);
    if (cfg.mode != CorpusMode::random_lattice)
        throw std::invalid_argument("density experiment needs the "
                                    "random-lattice corpus");
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(
        std::min<std::size_t>(threads, cfg.trials));

    std::atomic<std::size_t> next{0};
    std::vector<std::size_t> counts(threads, 0);
    auto worker = [&](unsigned w) {
        for (;;) {
            std::size_t const t = next.fetch_add(1);
            if (t >= cfg.trials)
                break;
            IntMatrix const b =
                random_basis(cfg.dim, cfg.bound, derive_seed(cfg.seed, t));
            if (identify(b).is_ideal())
                ++counts[w];
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back(worker, w);
    }

    DensityRow row;
    row.dim = cfg.dim;
    row.bound = cfg.bound;
    row.trials = cfg.trials;
    for (auto c : counts)
        row.ideal_count += c;
    row.proportion = double(row.ideal_count) / double(cfg.trials);
    row.seed = cfg.seed;
    return row;
}

namespace {

IntMatrix corpus_instance(ExperimentConfig const& cfg, std::uint64_t seed)
{
    if (cfg.mode == CorpusMode::random_lattice)
        return random_basis(cfg.dim, cfg.bound, seed);
    return random_principal(cfg.dim, cfg.bound, seed).b;
}

} // namespace

TimingRow timing_experiment(ExperimentConfig const& cfg)
{
    validate(cfg);
    using clock = std::chrono::steady_clock;

    /* warmup on an instance outside the timed index range */
    {
        IntMatrix const b = corpus_instance(
            cfg, derive_seed(cfg.seed, std::uint64_t(-1)));
        (void) identify(b);
    }
    double total = 0;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        IntMatrix const b = corpus_instance(cfg, derive_seed(cfg.seed, t));
        auto const t0 = clock::now();
        (void) identify(b);
        auto const t1 = clock::now();
        total += std::chrono::duration<double>(t1 - t0).count();
    }
    return {cfg.dim, cfg.bound, cfg.trials, cfg.mode,
            total / double(cfg.trials), cfg.seed};
}

std::string density_csv_header()
{
    return "dim,bound,trials,ideal_count,proportion,seed";
}

std::string to_csv(DensityRow const& r)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", r.proportion);
    std::ostringstream os;
    os << r.dim << ',' << r.bound << ',' << r.trials << ',' << r.ideal_count
       << ',' << buf << ',' << r.seed;
    return os.str();
}

std::string timing_csv_header()
{
    return "dim,bound,trials,mode,mean_seconds,seed";
}

std::string to_csv(TimingRow const& r)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", r.mean_seconds);
    std::ostringstream os;
    os << r.dim << ',' << r.bound << ',' << r.trials << ','
       << mode_name(r.mode) << ',' << buf << ',' << r.seed;
    return os.str();
}

namespace {

std::string xml_escape(std::string const& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

std::string line_plot_svg(std::string const& title, std::string const& xlabel,
                          std::string const& ylabel,
                          std::vector<PlotSeries> const& series)
{
    double constexpr W = 640, H = 420, L = 70, R = 150, T = 40, B = 60;
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (auto const& s : series)
        for (auto const& [x, y] : s.points) {
            if (first) {
                xmin = xmax = x;
                ymin = ymax = y;
                first = false;
            }
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    ymin = std::min(ymin, 0.0);
    if (xmax == xmin)
        xmax = xmin + 1;
    if (ymax == ymin)
        ymax = ymin + 1;
    auto px = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
    auto py = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };

    static char const* const colors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                         "#ff7f0e", "#9467bd", "#8c564b"};
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
       << "\" height=\"" << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<text x=\"" << W / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
       << xml_escape(title) << "</text>\n"
       << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R
       << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n"
       << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L
       << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        double const xv = xmin + (xmax - xmin) * k / 4;
        double const yv = ymin + (ymax - ymin) * k / 4;
        os << "<text x=\"" << px(xv) << "\" y=\"" << H - B + 18
           << "\" text-anchor=\"middle\">" << fmt(xv) << "</text>\n"
           << "<text x=\"" << L - 6 << "\" y=\"" << py(yv) + 4
           << "\" text-anchor=\"end\">" << fmt(yv) << "</text>\n";
    }
    os << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 15
       << "\" text-anchor=\"middle\">" << xml_escape(xlabel) << "</text>\n"
       << "<text x=\"18\" y=\"" << (T + H - B) / 2
       << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
       << (T + H - B) / 2 << ")\">" << xml_escape(ylabel) << "</text>\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        auto const& s = series[i];
        char const* color = colors[i % std::size(colors)];
        os << "<polyline fill=\"none\" stroke=\"" << color
           << "\" stroke-width=\"2\" points=\"";
        for (auto const& [x, y] : s.points)
            os << px(x) << ',' << py(y) << ' ';
        os << "\"/>\n";
        for (auto const& [x, y] : s.points)
            os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y)
               << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        double const ly = T + 20 + 18 * double(i);
        os << "<line x1=\"" << W - R + 12 << "\" y1=\"" << ly << "\" x2=\""
           << W - R + 32 << "\" y2=\"" << ly << "\" stroke=\"" << color
           << "\" stroke-width=\"2\"/>\n"
           << "<text x=\"" << W - R + 38 << "\" y=\"" << ly + 4 << "\">"
           << xml_escape(s.name) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace idlat
