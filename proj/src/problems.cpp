#include "pso/problems.hpp"

#include <cmath>
#include <stdexcept>

namespace pso {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double sphere(const std::vector<double> &x)
{
    double sum = 0.0;
    for (double v : x)
        sum += v * v;
    return sum;
}

double rosenbrock(const std::vector<double> &x)
{
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = x[i] - 1.0;
        sum += 100.0 * a * a + b * b;
    }
    return sum;
}

double rastrigin(const std::vector<double> &x)
{
    double sum = 10.0 * static_cast<double>(x.size());
    for (double v : x)
        sum += v * v - 10.0 * std::cos(kTwoPi * v);
    return sum;
}

Problem make_sphere(std::size_t d)
{
    return {"sphere", d, SearchBounds::uniform(d, -100.0, 100.0), sphere, {},
            {{std::vector<double>(d, 0.0), 0.0}}};
}

Problem make_rosenbrock(std::size_t d)
{
    if (d < 2)
        throw std::invalid_argument("rosenbrock: dimension must be >= 2");
    return {"rosenbrock", d, SearchBounds::uniform(d, -30.0, 30.0), rosenbrock, {},
            {{std::vector<double>(d, 1.0), 0.0}}};
}

Problem make_rastrigin(std::size_t d)
{
    return {"rastrigin", d, SearchBounds::uniform(d, -5.12, 5.12), rastrigin, {},
            {{std::vector<double>(d, 0.0), 0.0}}};
}

// sphere objective subject to x0 + x1 >= 1, expressed as a violation
// magnitude max(0, 1 - x0 - x1)
Problem make_constrained_sphere(std::size_t d)
{
    if (d < 2)
        throw std::invalid_argument("constrained_sphere: dimension must be >= 2");
    Problem p{"constrained_sphere", d, SearchBounds::uniform(d, -100.0, 100.0), sphere,
              {[](const std::vector<double> &x) { return std::max(0.0, 1.0 - x[0] - x[1]); }},
              std::nullopt};
    std::vector<double> opt(d, 0.0);
    opt[0] = 0.5;
    opt[1] = 0.5;
    p.known_optimum = {{opt, 0.5}};
    return p;
}

} // namespace

Evaluation evaluate(const Problem &p, const std::vector<double> &x)
{
    if (x.size() != p.dimension)
        throw std::invalid_argument("evaluate: position dimension does not match problem '" +
                                    p.name + "'");
    std::vector<double> violations;
    violations.reserve(p.constraints.size());
    for (const auto &g : p.constraints)
        violations.push_back(g(x));
    return Evaluation(p.objective(x), std::move(violations));
}

std::vector<Problem> builtin_suite(std::size_t dimension)
{
    return {make_sphere(dimension), make_rosenbrock(std::max<std::size_t>(dimension, 2)),
            make_rastrigin(dimension), make_constrained_sphere(std::max<std::size_t>(dimension, 2))};
}

ProblemRegistry ProblemRegistry::with_builtins()
{
    ProblemRegistry registry;
    registry.add("sphere", make_sphere);
    registry.add("rosenbrock", make_rosenbrock);
    registry.add("rastrigin", make_rastrigin);
    registry.add("constrained_sphere", make_constrained_sphere);
    return registry;
}

void ProblemRegistry::add(const std::string &name, Factory factory)
{
    factories_[name] = std::move(factory);
}

bool ProblemRegistry::contains(const std::string &name) const
{
    return factories_.count(name) > 0;
}

Problem ProblemRegistry::make(const std::string &name, std::size_t dimension) const
{
    const auto it = factories_.find(name);
    if (it == factories_.end())
        throw std::invalid_argument("unknown problem '" + name + "'");
    return it->second(dimension);
}

std::vector<std::string> ProblemRegistry::names() const
{
    std::vector<std::string> out;
    for (const auto &[name, factory] : factories_)
        out.push_back(name);
    return out;
}

} // namespace pso
