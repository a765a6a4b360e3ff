#include "pso/initialization.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pso {

namespace {

std::vector<std::vector<double>> sample_uniform(std::size_t n, const SearchBounds &bounds,
                                                RandomStream &rng)
{
    const std::size_t dims = bounds.dimension();
    std::vector<std::vector<double>> out(n, std::vector<double>(dims));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t d = 0; d < dims; ++d)
            out[k][d] = bounds.lower[d] + rng.uniform01() * bounds.range(d);
    return out;
}

std::vector<std::vector<double>> sample_latin_hypercube(std::size_t n,
                                                        const SearchBounds &bounds,
                                                        RandomStream &rng)
{
    const std::size_t dims = bounds.dimension();
    std::vector<std::vector<double>> out(n, std::vector<double>(dims));
    std::vector<std::size_t> perm(n);
    for (std::size_t d = 0; d < dims; ++d) {
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        for (std::size_t k = n - 1; k > 0; --k)
            std::swap(perm[k], perm[rng.below(k + 1)]);
        for (std::size_t k = 0; k < n; ++k) {
            const double cell = (static_cast<double>(perm[k]) + rng.uniform01()) /
                                static_cast<double>(n);
            out[k][d] = bounds.lower[d] + cell * bounds.range(d);
        }
    }
    return out;
}

// strictly better under the particle's handler; PreservingFeasibility has no
// feasible incumbent yet at initialisation, so it ranks by priority rules
bool init_better(const Evaluation &a, const Evaluation &b, const ConstraintHandler &cht)
{
    if (std::holds_alternative<PreservingFeasibility>(cht))
        return compare(a, b, ConstraintHandler{PriorityRules{}}) == Ordering::ABetter;
    return compare(a, b, cht) == Ordering::ABetter;
}

std::size_t populations_for(InitialCondition condition)
{
    switch (condition) {
    case InitialCondition::Stagnation:            return 1;
    case InitialCondition::TwoPositions:          return 2;
    case InitialCondition::OnePositionOneMemory:  return 2;
    case InitialCondition::TwoPositionsOneMemory: return 3;
    }
    throw std::invalid_argument("initialize_swarm: unknown initial condition");
}

} // namespace

std::vector<std::vector<double>> sample_positions(SamplingMethod method, std::size_t n,
                                                  const SearchBounds &bounds,
                                                  RandomStream &rng)
{
    if (n == 0)
        throw std::invalid_argument("sample_positions: n must be >= 1");
    bounds.validate();
    return method == SamplingMethod::UniformRandom ? sample_uniform(n, bounds, rng)
                                                   : sample_latin_hypercube(n, bounds, rng);
}

std::vector<std::vector<std::vector<double>>> relate_samples(
    const SampleRelation &relation, const std::vector<std::vector<double>> &primary,
    std::size_t extra_needed, SamplingMethod method, const SearchBounds &bounds,
    RandomStream &rng)
{
    if (primary.empty())
        throw std::invalid_argument("relate_samples: primary population is empty");
    const std::size_t n = primary.size();
    const std::size_t npop = extra_needed + 1;

    std::vector<std::vector<std::vector<double>>> populations;

    if (const auto *pert = std::get_if<Perturbation>(&relation)) {
        if (!(pert->radius_fraction > 0.0 && pert->radius_fraction <= 1.0))
            throw std::invalid_argument("Perturbation: radius_fraction must be in (0, 1]");
        populations.push_back(primary);
        for (std::size_t e = 0; e < extra_needed; ++e) {
            std::vector<std::vector<double>> pop(n);
            for (std::size_t k = 0; k < n; ++k) {
                pop[k] = primary[k];
                for (std::size_t d = 0; d < bounds.dimension(); ++d) {
                    const double radius = pert->radius_fraction * bounds.range(d);
                    pop[k][d] += rng.uniform(-radius, radius);
                    pop[k][d] = std::clamp(pop[k][d], bounds.lower[d], bounds.upper[d]);
                }
            }
            populations.push_back(std::move(pop));
        }
        return populations;
    }

    if (std::holds_alternative<Independent>(relation)) {
        populations.push_back(primary);
        for (std::size_t e = 0; e < extra_needed; ++e)
            populations.push_back(sample_positions(method, n, bounds, rng));
        return populations;
    }

    // Simultaneous: one joint sampling of n * npop points, split round-robin.
    // Only the primary's size is used; its points are superseded.
    const auto joint = sample_positions(method, n * npop, bounds, rng);
    populations.assign(npop, {});
    for (auto &pop : populations)
        pop.reserve(n);
    for (std::size_t k = 0; k < joint.size(); ++k)
        populations[k % npop].push_back(joint[k]);
    return populations;
}

std::vector<ParticleInit> initialize_swarm(InitialCondition condition,
                                           const SampleRelation &relation,
                                           SamplingMethod method, std::size_t m,
                                           const SearchBounds &bounds,
                                           const Evaluator &evaluator,
                                           const std::vector<ConstraintHandler> &chts,
                                           RandomStream &rng)
{
    if (m == 0)
        throw std::invalid_argument("initialize_swarm: swarm size must be >= 1");
    if (chts.size() != 1 && chts.size() != m)
        throw std::invalid_argument("initialize_swarm: need 1 or m constraint handlers");

    const std::size_t npop = populations_for(condition);
    std::vector<std::vector<std::vector<double>>> pops;
    if (npop == 1) {
        pops.push_back(sample_positions(method, m, bounds, rng));
    } else if (std::holds_alternative<Simultaneous>(relation)) {
        const std::vector<std::vector<double>> placeholder(m);
        pops = relate_samples(relation, placeholder, npop - 1, method, bounds, rng);
    } else {
        const auto primary = sample_positions(method, m, bounds, rng);
        pops = relate_samples(relation, primary, npop - 1, method, bounds, rng);
    }

    // one evaluation per sampled point
    std::vector<std::vector<Evaluation>> evals(npop, std::vector<Evaluation>(m));
    for (std::size_t pop = 0; pop < npop; ++pop)
        for (std::size_t k = 0; k < m; ++k)
            evals[pop][k] = evaluator(pops[pop][k]);

    std::vector<ParticleInit> out(m);
    for (std::size_t i = 0; i < m; ++i) {
        const ConstraintHandler &cht = chts.size() == 1 ? chts[0] : chts[i];
        ParticleInit &particle = out[i];

        switch (condition) {
        case InitialCondition::Stagnation:
            particle.x1 = particle.x0 = particle.xm = pops[0][i];
            particle.eval_x1 = particle.eval_x0 = particle.eval_xm = evals[0][i];
            break;
        case InitialCondition::TwoPositions: {
            const bool second_wins = init_better(evals[1][i], evals[0][i], cht);
            const std::size_t w = second_wins ? 1 : 0, l = 1 - w;
            particle.x1 = pops[w][i];
            particle.eval_x1 = evals[w][i];
            particle.x0 = pops[l][i];
            particle.eval_x0 = evals[l][i];
            particle.xm = particle.x1;
            particle.eval_xm = particle.eval_x1;
            break;
        }
        case InitialCondition::OnePositionOneMemory: {
            const bool second_wins = init_better(evals[1][i], evals[0][i], cht);
            const std::size_t w = second_wins ? 1 : 0, l = 1 - w;
            particle.xm = pops[w][i];
            particle.eval_xm = evals[w][i];
            particle.x1 = particle.x0 = pops[l][i];
            particle.eval_x1 = particle.eval_x0 = evals[l][i];
            break;
        }
        case InitialCondition::TwoPositionsOneMemory: {
            std::size_t best = 0;
            for (std::size_t pop = 1; pop < 3; ++pop)
                if (init_better(evals[pop][i], evals[best][i], cht))
                    best = pop;
            std::vector<std::size_t> rest;
            for (std::size_t pop = 0; pop < 3; ++pop)
                if (pop != best)
                    rest.push_back(pop);
            // the better leftover becomes the current position
            if (init_better(evals[rest[1]][i], evals[rest[0]][i], cht))
                std::swap(rest[0], rest[1]);
            particle.xm = pops[best][i];
            particle.eval_xm = evals[best][i];
            particle.x1 = pops[rest[0]][i];
            particle.eval_x1 = evals[rest[0]][i];
            particle.x0 = pops[rest[1]][i];
            particle.eval_x0 = evals[rest[1]][i];
            break;
        }
        }
    }
    return out;
}

} // namespace pso
