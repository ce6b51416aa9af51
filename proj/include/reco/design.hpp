#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reco/value.hpp"

namespace reco {

enum class VerdictKind { IncreasingInR, DecreasingInR, ConstantInR, InteriorOptimum };

std::string to_string(VerdictKind k);

struct DesignVerdict {
    VerdictKind kind = VerdictKind::ConstantInR;
    double r_star = 0.5;  // maximizer found by the search
    double value = 0.0;   // V(r_star)
    double grid_min = 0.0;
    double grid_max = 0.0;
    std::string diagnostics;
};

Record to_record(const DesignVerdict& v);

// dV/dbeta of a symmetric system: Q (1 - 2Q)(1 - sigma) / (1 + sigma).
double symmetric_slope(double Q, double sigma);
// d^2 V / (dbeta dsigma) = -2 Q (1 - 2Q) / (1 + sigma)^2.
double symmetric_cross_partial(double Q, double sigma);

// Direction of V in R for a symmetric sender population; |sigma - 1| < 1e-12 is constant.
VerdictKind monotonicity_class_symmetric(double sigma);

// V(R) = c0 + Q/(a+1) [c1 (1 - R^a) + c2 (1 - R)^a] for F(i) = (i + 1/2)^a, q_1 = q_2 = Q,
// valid while every receiver accepts.
struct AsymmetricClosedForm {
    double a;
    double Q;
    double sigma;
    double c0;
    double c1;
    double c2;

    static AsymmetricClosedForm make(double a, double Q, double sigma);
    double value(double r) const;
};

// The power-family environment with q_1 = q_2 = Q and good odds sigma.
RecommendationSystem power_system(double a, double Q, double sigma, double r);

// Closed form above; throws ClosedFormInapplicable when the acceptance region at R is not All.
double asymmetric_value_closed(double a, double Q, double sigma, double r);

enum class InteriorVerdict { Interior, BoundaryLow, BoundaryHigh, Indeterminate };

std::string to_string(InteriorVerdict v);

struct InteriorReport {
    InteriorVerdict verdict = InteriorVerdict::Indeterminate;
    double ratio_1 = 0.0;  // (1 - Q(a+1)) / (a - Q(a+1))
    double ratio_2 = 0.0;  // (a - Q(a+1)) / (1 - Q(a+1))
    bool all_accept = false;  // acceptance region is All across the R grid
    std::string reason;
};

// Sufficient conditions for an interior optimum, then the boundary bounds when every
// receiver accepts at every threshold; otherwise Indeterminate.
InteriorReport interior_conditions(double a, double Q, double sigma);

struct OptimizeOptions {
    int grid_points = 2001;
    double grid_lo = 1e-4;
    double grid_hi = 1.0 - 1e-4;
    double tolerance = 1e-8;
    double interior_margin = 0.01;
    double flat_tolerance = 1e-9;
};

// Evenly spaced points from lo to hi inclusive; one point when n == 1.
std::vector<double> linspace(double lo, double hi, int n);

// V(R) for every R, in parallel and as a serial reference.
std::vector<double> value_on_grid(const RecommendationSystem& sys, const std::vector<double>& rs);
std::vector<double> value_on_grid_serial(const RecommendationSystem& sys,
                                         const std::vector<double>& rs);

DesignVerdict optimize_threshold(const RecommendationSystem& sys, const OptimizeOptions& opts = {});

enum class MpsDirection { Increases, Decreases, Neutral };

std::string to_string(MpsDirection d);

// Effect of a mean-preserving spread of a symmetric type distribution at threshold R.
// Throws DomainError at R = 1/2.
MpsDirection mps_direction(double sigma, double r);

struct QStatics {
    enum class Kind { DecreasingInQ, InteriorQ };

    Kind kind = Kind::DecreasingInQ;
    std::optional<double> q_star;
    double discriminant = 0.0;  // 3 sigma - beta - sigma^2 + sigma^2 beta
};

std::string to_string(QStatics::Kind k);

QStatics q_comparative_statics(double sigma, double beta);

// Objective effect of a buy recommendation in a symmetric system, as a function of Q.
double symmetric_objective_effect(double Q, double sigma, double beta);

enum class RegionFigure { Interior, PanelA, PanelB, PanelC };

std::string to_string(RegionFigure f);
RegionFigure parse_region_figure(const std::string& name);

struct GridRange {
    double from;
    double to;
    int steps;
};

struct RegionMapRequest {
    GridRange x{0.05, 10.0, 200};    // a for Interior, sigma for the panels
    std::optional<GridRange> lattice;  // sigma for Interior, beta for the panels
    double Q = 0.1;                  // Interior and PanelC
};

struct RegionPoint {
    double x;
    double y;
    std::string label;
};

// Boundary curves plus classified lattice points when req.lattice is set. Boundary rows are
// labelled "boundary" ("boundary_min"/"boundary_max" for Interior, where x values with an
// interior optimum for every sigma get a single "interior_all" row with y = nan).
std::vector<RegionPoint> region_map(RegionFigure figure, const RegionMapRequest& req);

Record to_record(const RegionPoint& p);

}  // namespace reco
