#include "ccgsa/gsa.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ccgsa {

void GsaParams::validate() const {
    if (pop_size < 2) throw ConfigError("gsa: pop_size must be >= 2");
    if (max_iter < 1) throw ConfigError("gsa: max_iter must be >= 1");
    if (!(g0 > 0.0)) throw ConfigError("gsa: g0 must be positive");
    if (!(alpha > 0.0)) throw ConfigError("gsa: alpha must be positive");
    if (!(epsilon > 0.0)) throw ConfigError("gsa: epsilon must be positive");
    if (kbest_final < 1 || kbest_final > pop_size)
        throw ConfigError("gsa: kbest_final must be in [1, pop_size]");
}

std::vector<double> compute_masses(std::span<const double> fitnesses) {
    const std::size_t n = fitnesses.size();
    if (n == 0) throw ConfigError("compute_masses: empty fitness vector");
    for (std::size_t i = 0; i < n; ++i)
        if (!std::isfinite(fitnesses[i]))
            throw NumericError("compute_masses: non-finite fitness at index " + std::to_string(i));

    const auto [mn, mx] = std::minmax_element(fitnesses.begin(), fitnesses.end());
    const double best = *mn, worst = *mx;
    std::vector<double> m(n);
    if (best == worst) {
        std::fill(m.begin(), m.end(), 1.0 / static_cast<double>(n));
        return m;
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        m[i] = (fitnesses[i] - worst) / (best - worst);
        sum += m[i];
    }
    for (double& v : m) v /= sum;
    return m;
}

double gravitational_constant(int t, int t_max, double g0, double alpha) {
    if (t_max < 1) throw ConfigError("gravitational_constant: t_max must be >= 1");
    if (t < 0 || t > t_max) throw ConfigError("gravitational_constant: t out of [0, t_max]");
    return g0 * std::exp(-alpha * static_cast<double>(t) / static_cast<double>(t_max));
}

int kbest_size(int t, int t_max, int n, int kbest_final) {
    if (t_max < 1) throw ConfigError("kbest_size: t_max must be >= 1");
    const double frac = static_cast<double>(t) / static_cast<double>(t_max);
    const double raw = n + (kbest_final - n) * frac;
    const int k = static_cast<int>(std::floor(raw + 0.5)); // round half up
    return std::clamp(k, std::min(kbest_final, n), std::max(kbest_final, n));
}

std::vector<int> kbest_members(std::span<const double> fitnesses, int k) {
    std::vector<int> idx(fitnesses.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (fitnesses[a] != fitnesses[b]) return fitnesses[a] < fitnesses[b];
        return a < b;
    });
    idx.resize(std::min<std::size_t>(idx.size(), static_cast<std::size_t>(std::max(k, 0))));
    return idx;
}

Matrix compute_forces(const Matrix& positions, std::span<const double> masses,
                      std::span<const int> kbest, double g, double epsilon, Rng& rng) {
    const std::size_t n = positions.rows();
    const std::size_t dim = positions.cols();
    Matrix force(n, dim, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto xi = positions.row(i);
        auto fi = force.row(i);
        for (int j : kbest) {
            if (static_cast<std::size_t>(j) == i) continue;
            const auto xj = positions.row(static_cast<std::size_t>(j));
            double r2 = 0.0;
            for (std::size_t d = 0; d < dim; ++d) {
                const double diff = xj[d] - xi[d];
                r2 += diff * diff;
            }
            const double r = std::sqrt(r2);
            const double coeff = g * masses[i] * masses[static_cast<std::size_t>(j)] / (r + epsilon);
            for (std::size_t d = 0; d < dim; ++d)
                fi[d] += rng.uniform() * coeff * (xj[d] - xi[d]);
        }
    }
    return force;
}

Matrix compute_accelerations(const Matrix& positions, std::span<const double> masses,
                             std::span<const int> kbest, double g, double epsilon, Rng& rng) {
    const std::size_t n = positions.rows();
    const std::size_t dim = positions.cols();
    Matrix accel(n, dim, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto xi = positions.row(i);
        auto ai = accel.row(i);
        for (int j : kbest) {
            if (static_cast<std::size_t>(j) == i) continue;
            const auto xj = positions.row(static_cast<std::size_t>(j));
            double r2 = 0.0;
            for (std::size_t d = 0; d < dim; ++d) {
                const double diff = xj[d] - xi[d];
                r2 += diff * diff;
            }
            const double coeff = g * masses[static_cast<std::size_t>(j)] / (std::sqrt(r2) + epsilon);
            for (std::size_t d = 0; d < dim; ++d)
                ai[d] += rng.uniform() * coeff * (xj[d] - xi[d]);
        }
    }
    return accel;
}

StepOutcome step(Swarm& swarm, Evaluator& ev, const GsaParams& params, int t, Rng& rng) {
    const int n = swarm.size();
    const int dim = swarm.dim();
    const Objective& obj = ev.objective();
    if (n != params.pop_size) throw ConfigError("step: swarm size does not match params");
    if (dim != obj.dim) throw ConfigError("step: swarm dim does not match objective");

    const double g = gravitational_constant(t, params.max_iter, params.g0, params.alpha);
    const int k = kbest_size(t, params.max_iter, n, params.kbest_final);
    const auto elite = kbest_members(swarm.fitnesses, k);
    const Matrix accel =
        compute_accelerations(swarm.positions, swarm.masses, elite, g, params.epsilon, rng);

    for (int i = 0; i < n; ++i) {
        auto x = swarm.positions.row(i);
        auto v = swarm.velocities.row(i);
        const auto a = accel.row(i);
        for (int d = 0; d < dim; ++d) {
            v[d] = rng.uniform() * v[d] + a[d];
            x[d] += v[d];
            if (!std::isfinite(x[d]))
                throw NumericError("step: non-finite position for agent " + std::to_string(i) +
                                   " dimension " + std::to_string(d));
            if (x[d] < obj.lower[d]) {
                x[d] = obj.lower[d];
                v[d] = 0.0;
            } else if (x[d] > obj.upper[d]) {
                x[d] = obj.upper[d];
                v[d] = 0.0;
            }
        }
    }

    StepOutcome out;
    out.evaluations_used = static_cast<std::uint64_t>(n);
    for (int i = 0; i < n; ++i) {
        swarm.fitnesses[i] = ev(swarm.positions.row(i));
        if (out.best_index < 0 || swarm.fitnesses[i] < out.best_fitness) {
            out.best_index = i;
            out.best_fitness = swarm.fitnesses[i];
        }
    }
    swarm.masses = compute_masses(swarm.fitnesses);
    return out;
}

GsaResult run_gsa(const Objective& obj, const GsaParams& params, std::uint64_t max_evaluations,
                  Rng& rng, Trace* trace, std::uint64_t trace_stride, const Matrix* initial_positions) {
    params.validate();
    obj.validate();
    const int n = params.pop_size;
    const int dim = obj.dim;
    if (max_evaluations < static_cast<std::uint64_t>(n))
        throw ConfigError("run_gsa: budget smaller than the population size");

    Evaluator ev(obj, max_evaluations, trace_stride);

    Swarm swarm;
    swarm.velocities = Matrix(n, dim, 0.0);
    swarm.fitnesses.resize(n);
    if (initial_positions) {
        if (initial_positions->rows() != static_cast<std::size_t>(n) ||
            initial_positions->cols() != static_cast<std::size_t>(dim))
            throw ConfigError("run_gsa: initial positions have the wrong shape");
        swarm.positions = *initial_positions;
    } else {
        swarm.positions = Matrix(n, dim);
        for (int i = 0; i < n; ++i)
            for (int d = 0; d < dim; ++d)
                swarm.positions(i, d) = rng.uniform(obj.lower[d], obj.upper[d]);
    }
    for (int i = 0; i < n; ++i) swarm.fitnesses[i] = ev(swarm.positions.row(i));
    swarm.masses = compute_masses(swarm.fitnesses);

    for (int t = 1; t <= params.max_iter; ++t) {
        if (ev.remaining() < static_cast<std::uint64_t>(n)) break;
        step(swarm, ev, params, t, rng);
    }

    GsaResult res;
    res.best_position = ev.best_point();
    res.best_fitness = ev.best_fitness();
    res.evaluations_used = ev.used();
    res.final_positions = std::move(swarm.positions);
    res.final_fitnesses = std::move(swarm.fitnesses);
    if (trace) *trace = ev.trace();
    return res;
}

} // namespace ccgsa
