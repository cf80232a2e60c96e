#include "cns/grid.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cns {

Grid1D build_grid(double L, int N) {
    if (!(L > 0.0)) throw std::invalid_argument("build_grid: L must be positive");
    if (N < 4) throw std::invalid_argument("build_grid: N must be at least 4");

    Grid1D g;
    g.L = L;
    g.N = N;
    g.h = 2.0 * L / static_cast<double>(N);
    g.node_y.resize(static_cast<std::size_t>(N) + 1);
    g.cell_y.resize(static_cast<std::size_t>(N));

    // Mirror about the origin so reflection symmetry is exact in fp.
    for (int i = 0; 2 * i <= N; ++i) {
        double y = (2 * i == N) ? 0.0 : -L + static_cast<double>(i) * g.h;
        g.node_y[static_cast<std::size_t>(i)] = y;
        g.node_y[static_cast<std::size_t>(N - i)] = -y;
    }
    g.node_y[0] = -L;
    g.node_y[static_cast<std::size_t>(N)] = L;
    for (int k = 0; 2 * k + 1 <= N - 1; ++k) {
        double y = (2 * k + 1 == N) ? 0.0 : -L + (static_cast<double>(k) + 0.5) * g.h;
        g.cell_y[static_cast<std::size_t>(k)] = y;
        g.cell_y[static_cast<std::size_t>(N - 1 - k)] = -y;
    }
    return g;
}

namespace {

void require_size(int got, int want, const char* what) {
    if (got != want)
        throw std::invalid_argument(std::string(what) + ": field/grid size mismatch (" +
                                    std::to_string(got) + " vs " + std::to_string(want) + ")");
}

double weighted_l2_impl(const std::vector<double>& f, const std::vector<double>& w, double h,
                        const char* what) {
    if (f.size() != w.size())
        throw std::invalid_argument(std::string(what) + ": field/weight size mismatch");
    double s = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (w[k] < 0.0) throw std::invalid_argument(std::string(what) + ": negative weight entry");
        s += f[k] * f[k] * w[k];
    }
    return std::sqrt(s * h);
}

double sup_impl(const std::vector<double>& f) {
    double m = 0.0;
    for (double x : f) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

CellField cell_derivative(const NodeField& v, const Grid1D& g) {
    require_size(v.size(), g.nodes(), "cell_derivative");
    CellField d(g.cells());
    for (int k = 0; k < g.cells(); ++k) d[k] = (v[k + 1] - v[k]) / g.h;
    return d;
}

NodeField node_divergence(const CellField& F, const Grid1D& g) {
    require_size(F.size(), g.cells(), "node_divergence");
    NodeField d(g.nodes(), 0.0);
    for (int i = 1; i < g.N; ++i) d[i] = (F[i] - F[i - 1]) / g.h;
    return d;
}

double weighted_l2(const NodeField& f, const NodeField& w, const Grid1D& g) {
    require_size(f.size(), g.nodes(), "weighted_l2");
    return weighted_l2_impl(f.a, w.a, g.h, "weighted_l2");
}

double weighted_l2(const CellField& f, const CellField& w, const Grid1D& g) {
    require_size(f.size(), g.cells(), "weighted_l2");
    return weighted_l2_impl(f.a, w.a, g.h, "weighted_l2");
}

double l2_norm(const NodeField& f, const Grid1D& g) {
    require_size(f.size(), g.nodes(), "l2_norm");
    double s = 0.0;
    for (double x : f.a) s += x * x;
    return std::sqrt(s * g.h);
}

double l2_norm(const CellField& f, const Grid1D& g) {
    require_size(f.size(), g.cells(), "l2_norm");
    double s = 0.0;
    for (double x : f.a) s += x * x;
    return std::sqrt(s * g.h);
}

double sup_norm(const NodeField& f) { return sup_impl(f.a); }
double sup_norm(const CellField& f) { return sup_impl(f.a); }

}  // namespace cns
