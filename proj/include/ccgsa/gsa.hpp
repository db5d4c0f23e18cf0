#ifndef CCGSA_GSA_HPP
#define CCGSA_GSA_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ccgsa/evaluator.hpp"
#include "ccgsa/matrix.hpp"
#include "ccgsa/objective.hpp"
#include "ccgsa/rng.hpp"

namespace ccgsa {

struct GsaParams {
    int pop_size = 50;
    int max_iter = 500;
    double g0 = 100.0;
    double alpha = 20.0;
    /// Small constant added to the inter-agent distance in the force law and
    /// to the mass when dividing force by mass.
    double epsilon = 1e-10;
    /// Size the elite attractor set shrinks to by the final iteration.
    int kbest_final = 1;

    void validate() const;
};

/// Population state: one row per agent.
struct Swarm {
    Matrix positions;
    Matrix velocities;
    std::vector<double> fitnesses;
    std::vector<double> masses;

    int size() const { return static_cast<int>(positions.rows()); }
    int dim() const { return static_cast<int>(positions.cols()); }
};

struct StepOutcome {
    int best_index = -1;
    double best_fitness = 0.0;
    std::uint64_t evaluations_used = 0;
};

/// Normalized masses from fitnesses (minimization): the best agent gets the
/// largest mass, the worst gets zero, and masses sum to one. A degenerate
/// all-equal fitness vector yields uniform 1/N.
std::vector<double> compute_masses(std::span<const double> fitnesses);

/// G(t) = g0 * exp(-alpha * t / t_max).
double gravitational_constant(int t, int t_max, double g0, double alpha);

/// Linear shrink from N at t=0 to kbest_final at t=t_max, rounded half up
/// and clamped to [kbest_final, N].
int kbest_size(int t, int t_max, int n, int kbest_final);

/// Indices of the k best agents, smallest fitness first, ties broken by
/// lower agent index.
std::vector<int> kbest_members(std::span<const double> fitnesses, int k);

/// Pairwise attraction forces felt by every agent from the elite set.
/// One random factor is drawn per (agent, attractor, dimension) triple, in
/// that loop order.
Matrix compute_forces(const Matrix& positions, std::span<const double> masses,
                      std::span<const int> kbest, double g, double epsilon, Rng& rng);

/// Accelerations in the mass-cancelled form a_i = sum_j rand * G * M_j *
/// (x_j - x_i) / (R_ij + eps), i.e. force over the agent's own mass with the
/// division carried out analytically. This keeps the worst (zero-mass) agent
/// moving toward the attractors instead of dividing zero by zero. Same draw
/// order as compute_forces.
Matrix compute_accelerations(const Matrix& positions, std::span<const double> masses,
                             std::span<const int> kbest, double g, double epsilon, Rng& rng);

/// One full iteration: forces, accelerations, velocity and position updates
/// (positions clamped to bounds with the clamped velocity component zeroed),
/// re-evaluation of all agents, and mass recomputation. Costs exactly N
/// evaluations from `ev`.
StepOutcome step(Swarm& swarm, Evaluator& ev, const GsaParams& params, int t, Rng& rng);

struct GsaResult {
    std::vector<double> best_position;
    double best_fitness = 0.0;
    std::uint64_t evaluations_used = 0;
    Matrix final_positions;
    std::vector<double> final_fitnesses;
};

/// Runs GSA until max_iter iterations complete or another full iteration no
/// longer fits in `max_evaluations`. Positions start uniform in bounds
/// (velocities zero) unless `initial_positions` seeds them. Returns the best
/// candidate ever evaluated.
GsaResult run_gsa(const Objective& obj, const GsaParams& params, std::uint64_t max_evaluations,
                  Rng& rng, Trace* trace = nullptr, std::uint64_t trace_stride = 0,
                  const Matrix* initial_positions = nullptr);

} // namespace ccgsa

#endif
