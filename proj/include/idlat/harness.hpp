#pragma once

/* Experiment corpora and sweeps: random bases, principal ideal lattices,
 * ideal-lattice density and identify() timing.
 *
 * Every trial is a pure function of (config, trial index): its seed is
 * derive_seed(cfg.seed, index) and its generator is xoshiro256**. Results
 * are therefore identical for any thread count.
 */

#include "idlat/matrix.hpp"
#include "idlat/polyring.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace idlat {

enum class CorpusMode { random_lattice, principal_ideal };

std::string_view mode_name(CorpusMode m);
CorpusMode parse_mode(std::string_view s);

struct ExperimentConfig {
    std::size_t dim = 2;
    unsigned bound = 3;    // entries in (-2^bound, 2^bound)
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    CorpusMode mode = CorpusMode::random_lattice;
};

/* Throws std::invalid_argument unless dim, bound, trials >= 1 and
 * bound <= 62. */
void validate(ExperimentConfig const& cfg);

/* Uniform n x n matrix with entries in (-2^bound, 2^bound), redrawn until
 * nonsingular. */
IntMatrix random_basis(std::size_t n, unsigned bound, std::uint64_t seed);

struct PrincipalInstance {
    MonicPoly f;     // non-leading coefficients in [-f_max, f_max]
    CoeffVector g;   // entries in (-2^bound, 2^bound)
    IntMatrix b;     // principal_ideal_basis(f, g)
};

PrincipalInstance random_principal(std::size_t n, unsigned bound,
                                   std::uint64_t seed, long f_max = 1);

struct DensityRow {
    std::size_t dim = 0;
    unsigned bound = 0;
    std::size_t trials = 0;
    std::size_t ideal_count = 0;
    double proportion = 0;
    std::uint64_t seed = 0;
};

/* threads == 0 picks std::thread::hardware_concurrency(). */
DensityRow density_experiment(ExperimentConfig const& cfg,
                              unsigned threads = 1);

struct TimingRow {
    std::size_t dim = 0;
    unsigned bound = 0;
    std::size_t trials = 0;
    CorpusMode mode = CorpusMode::random_lattice;
    double mean_seconds = 0;
    std::uint64_t seed = 0;
};

/* One untimed warmup call, then the mean wall-clock time of identify()
 * over cfg.trials fresh instances. Instance generation is not timed. */
TimingRow timing_experiment(ExperimentConfig const& cfg);

std::string density_csv_header();
std::string to_csv(DensityRow const& r);
std::string timing_csv_header();   // dim,bound,trials,mode,mean_seconds,seed
std::string to_csv(TimingRow const& r);

struct PlotSeries {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

/* Minimal standalone SVG line chart. */
std::string line_plot_svg(std::string const& title, std::string const& xlabel,
                          std::string const& ylabel,
                          std::vector<PlotSeries> const& series);

} // namespace idlat
