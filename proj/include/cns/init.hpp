#pragma once

#include <optional>
#include <utility>

#include "cns/grid.hpp"

namespace cns {

// Ideal-gas constants. p = R*rho*theta, e = c_v*theta, p = A e^{s/c_v} rho^gamma.
struct GasConstants {
    double gamma = 1.4;   // adiabatic exponent, > 1
    double mu = 1.0;      // viscosity, > 0
    double R = 1.0;       // gas constant, > 0
    double A = 1.0;       // entropy-pressure constant, > 0
    double c_v = 2.5;     // R/(gamma-1), derived

    static GasConstants make(double gamma, double mu, double R, double A);
};

// Parameters of the generated power-law/bump data family:
//   rho0(y) = K_rho / <y>^{ell_rho},  <y> = sqrt(1+y^2)
//   pi0     = A exp(s0/c_v) rho0^gamma      (spatially uniform entropy s0)
//   v0      = mollifier bump (amplitude, center, width)
struct FamilyMeta {
    double K_rho = 1.0;
    double ell_rho = 0.0;
    double s0 = 1.0;
    double bump_amplitude = 0.0;
    double bump_center = 0.0;
    double bump_width = 1.0;
};

struct InitialData {
    Grid1D grid;
    GasConstants gas;
    CellField rho0_cell;   // > 0 everywhere
    NodeField rho0_node;   // same closed form sampled at nodes
    NodeField v0;
    CellField pi0;         // >= 0
    CellField J0;          // positive lower and upper bounds; default == 1
    std::optional<FamilyMeta> family;
};

// Closed-form evaluators for the power-law family.
double power_law_at(double K_rho, double ell_rho, double y);
double bump_at(double amplitude, double center, double width, double y);

// rho0 sampled at cells and nodes. Throws for K_rho <= 0 or ell_rho < 0.
std::pair<CellField, NodeField> power_law_density(double K_rho, double ell_rho, const Grid1D& g);

// pi0 = A exp(s0/c_v) rho0^gamma pointwise. Throws if rho0 has a nonpositive entry.
CellField isentropic_pressure(const CellField& rho0, double s0, const GasConstants& c);

// Standard C_c^infinity mollifier bump: amplitude*exp(1 - 1/(1-r^2)) for
// r = (y-center)/width inside the support, exactly zero outside. Throws if the
// support is not strictly inside (-L, L).
NodeField bump_velocity(double amplitude, double center, double width, const Grid1D& g);

// Assembles InitialData from the family closed forms, with J0 == 1.
InitialData make_family_data(const Grid1D& g, const GasConstants& gas, const FamilyMeta& fam);

// Assembles InitialData from raw fields (no analytic metadata). Validates
// rho0 > 0, pi0 >= 0, and positive J0 bounds.
InitialData make_raw_data(const Grid1D& g, const GasConstants& gas, CellField rho0_cell,
                          NodeField rho0_node, NodeField v0, CellField pi0, CellField J0);

// Decay constant K0 = 2 sup |(1/sqrt(rho0))'|.
//
// Analytic form for the power-law family; +infinity when ell_rho > 2.
double k0_bound_analytic(double K_rho, double ell_rho);
// Discrete form: 2 max over cell interfaces of |Delta(1/sqrt(rho0))|/h.
double k0_bound_discrete(const CellField& rho0, const Grid1D& g);

// Whole-line improper integrals of the family, +infinity when divergent:
//   rho0 in L1 requires ell_rho > 1, pi0 in L1 requires gamma*ell_rho > 1.
double rho0_l1_analytic(const FamilyMeta& fam);
double pi0_l1_analytic(const FamilyMeta& fam, const GasConstants& gas);

struct HypothesisReport {
    double delta = 1.0;   // weight exponent tested

    bool h1_ok = false;   // rho0 > 0 on compacts, bounded above
    bool h2_ok = false;   // pi0 >= 0, finite initial norms
    bool h3_ok = false;   // K0 finite and weighted G0 in L2
    bool h4_ok = false;   // rho0, pi0 in L1 and quadratic-decay lower bound

    // margins
    double rho0_min = 0.0, rho0_max = 0.0;   // H1
    double pi0_min = 0.0;                    // H2
    double k0_discrete = 0.0;
    double k0_analytic = 0.0;                // NaN without metadata
    double g0_weighted_l2 = 0.0;             // ||rho0^{-delta/2} G0||_2, grid quadrature
    double rho0_l1_grid = 0.0, rho0_l1_an = 0.0;
    double pi0_l1_grid = 0.0, pi0_l1_an = 0.0;
    double a0_grid = 0.0, a0_an = 0.0;       // inf rho0 (1+|y|)^2

    // regime tags, defined only for power-law metadata
    bool has_metadata = false;
    bool tag_local_d1 = false;      // ell in (1/(2 gamma - 1), 2]
    bool tag_local_dgamma = false;  // ell in (1/gamma, 2]
    bool tag_global_d1 = false;     // ell in (1, 2]
    bool tag_global_dgamma = false; // ell in (max{1, 1/gamma}, 2]
};

// Checks (H1)-(H4) and classifies the theorem regime. Failures are report
// entries, never exceptions.
HypothesisReport validate_hypotheses(const InitialData& d, double delta);

}  // namespace cns
