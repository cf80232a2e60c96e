#pragma once

#include <cstddef>
#include <vector>

namespace cns {

// =============================================================================
// Staggered 1D grid on the truncated domain [-L, L].
//
// Velocities live on the N+1 nodes y_i = -L + i*h, thermodynamic quantities
// (J, pi, rho0, G, ...) on the N cell centers y_{i+1/2}. Node i and node i+1
// bracket cell i, so a cell IS a node interface and vice versa; stress
// divergences telescope without interpolation.
// =============================================================================

struct Grid1D {
    double L = 0.0;   // half-width of the domain
    int N = 0;        // cell count
    double h = 0.0;   // spacing, 2L/N
    std::vector<double> node_y;   // N+1 entries, node_y[0] = -L, node_y[N] = +L
    std::vector<double> cell_y;   // N entries, cell centers

    int nodes() const { return N + 1; }
    int cells() const { return N; }
};

// Builds the uniform staggered grid. Coordinates are mirrored about the
// origin so that y_{N-i} == -y_i exactly in floating point.
// Throws std::invalid_argument for L <= 0 or N < 4.
Grid1D build_grid(double L, int N);

struct NodeField {
    std::vector<double> a;

    NodeField() = default;
    explicit NodeField(int n, double fill = 0.0) : a(static_cast<std::size_t>(n), fill) {}

    double& operator[](int i) { return a[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return a[static_cast<std::size_t>(i)]; }
    int size() const { return static_cast<int>(a.size()); }
};

struct CellField {
    std::vector<double> a;

    CellField() = default;
    explicit CellField(int n, double fill = 0.0) : a(static_cast<std::size_t>(n), fill) {}

    double& operator[](int i) { return a[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return a[static_cast<std::size_t>(i)]; }
    int size() const { return static_cast<int>(a.size()); }
};

// Samples f(y) at nodes / cell centers.
template <typename F>
NodeField sample_nodes(const Grid1D& g, F&& f) {
    NodeField out(g.nodes());
    for (int i = 0; i < g.nodes(); ++i) out[i] = f(g.node_y[static_cast<std::size_t>(i)]);
    return out;
}

template <typename F>
CellField sample_cells(const Grid1D& g, F&& f) {
    CellField out(g.cells());
    for (int k = 0; k < g.cells(); ++k) out[k] = f(g.cell_y[static_cast<std::size_t>(k)]);
    return out;
}

// (v_{i+1} - v_i)/h per cell; exact for affine v.
CellField cell_derivative(const NodeField& v, const Grid1D& g);

// (F_{i+1/2} - F_{i-1/2})/h at interior nodes i = 1..N-1. Boundary entries
// are left at zero; the stepper's boundary-condition policy owns them.
NodeField node_divergence(const CellField& F, const Grid1D& g);

// sqrt(sum_k f_k^2 w_k h). Throws on negative weight entries or size mismatch.
double weighted_l2(const NodeField& f, const NodeField& w, const Grid1D& g);
double weighted_l2(const CellField& f, const CellField& w, const Grid1D& g);

// Unweighted discrete L2 norm, sqrt(sum f_k^2 h).
double l2_norm(const NodeField& f, const Grid1D& g);
double l2_norm(const CellField& f, const Grid1D& g);

double sup_norm(const NodeField& f);
double sup_norm(const CellField& f);

}  // namespace cns
