#include "pso/csv.hpp"

#include <charconv>
#include <stdexcept>

namespace pso {

std::string format_double(double v)
{
    char buffer[64];
    const auto res = std::to_chars(buffer, buffer + sizeof buffer, v);
    if (res.ec != std::errc{})
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buffer, res.ptr);
}

void write_trace_csv(std::ostream &os, const std::vector<TraceRow> &trace)
{
    os << "iteration,best_objective,diversity\n";
    for (const auto &row : trace)
        os << row.iteration << ',' << format_double(row.best_objective) << ','
           << format_double(row.diversity) << '\n';
}

void write_dump_csv(std::ostream &os, const std::vector<DumpRow> &dump)
{
    os << "iteration,particle,dim,x,xm\n";
    for (const auto &row : dump)
        os << row.iteration << ',' << row.particle << ',' << row.dim << ','
           << format_double(row.x) << ',' << format_double(row.xm) << '\n';
}

void write_grid_csv(std::ostream &os, const std::vector<GridCell> &grid)
{
    os << "omega,phi,rate,kind,convergent\n";
    for (const auto &cell : grid)
        os << format_double(cell.omega) << ',' << format_double(cell.phi) << ','
           << format_double(cell.rate) << ',' << to_string(cell.kind) << ','
           << (cell.convergent ? '1' : '0') << '\n';
}

void write_init_preview_csv(std::ostream &os, const std::vector<ParticleInit> &init,
                            std::size_t dimension)
{
    os << "particle";
    for (const char *role : {"x1", "x0", "xm"})
        for (std::size_t d = 0; d < dimension; ++d)
            os << ',' << role << '_' << d;
    os << '\n';
    for (std::size_t i = 0; i < init.size(); ++i) {
        os << i;
        for (const auto *point : {&init[i].x1, &init[i].x0, &init[i].xm})
            for (std::size_t d = 0; d < dimension; ++d)
                os << ',' << format_double((*point)[d]);
        os << '\n';
    }
}

void write_connectivity_csv(std::ostream &os, const ConnectivityMatrix &matrix)
{
    const std::size_t m = matrix.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (j > 0)
                os << ',';
            if (i == j)
                os << (matrix.self_included(i) ? "X" : "0");
            else
                os << (matrix.informs(i, j) ? '1' : '0');
        }
        os << '\n';
    }
}

} // namespace pso
