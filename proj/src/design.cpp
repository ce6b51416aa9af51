#include "reco/design.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "reco/errors.hpp"
#include "reco/parallel.hpp"

namespace reco {

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::IncreasingInR: return "IncreasingInR";
        case VerdictKind::DecreasingInR: return "DecreasingInR";
        case VerdictKind::ConstantInR: return "ConstantInR";
        case VerdictKind::InteriorOptimum: return "InteriorOptimum";
    }
    return "?";
}

Record to_record(const DesignVerdict& v) {
    Record rec;
    rec.add("verdict", to_string(v.kind))
        .add("r_star", v.r_star)
        .add("value", v.value)
        .add("grid_min", v.grid_min)
        .add("grid_max", v.grid_max)
        .add("diagnostics", v.diagnostics);
    return rec;
}

double symmetric_slope(double Q, double sigma) {
    return Q * (1.0 - 2.0 * Q) * (1.0 - sigma) / (1.0 + sigma);
}

double symmetric_cross_partial(double Q, double sigma) {
    return -2.0 * Q * (1.0 - 2.0 * Q) / ((1.0 + sigma) * (1.0 + sigma));
}

VerdictKind monotonicity_class_symmetric(double sigma) {
    if (std::abs(sigma - 1.0) < 1e-12) return VerdictKind::ConstantInR;
    return sigma < 1.0 ? VerdictKind::DecreasingInR : VerdictKind::IncreasingInR;
}

AsymmetricClosedForm AsymmetricClosedForm::make(double a, double Q, double sigma) {
    const double s1 = sigma + 1.0;
    const double shift = (a + 1.0) * (Q * (sigma - 1.0) - sigma) / s1;
    return {a,
            Q,
            sigma,
            (1.0 - 2.0 * Q) * sigma * (Q * (sigma - 1.0) + 1.0) / (s1 * s1),
            a + shift,
            1.0 + shift};
}

double AsymmetricClosedForm::value(double r) const {
    return c0 + Q / (a + 1.0) * (c1 * (1.0 - std::pow(r, a)) + c2 * std::pow(1.0 - r, a));
}

RecommendationSystem power_system(double a, double Q, double sigma, double r) {
    return {quality_from_params(Q, sigma), TypeDistribution::power(a), r};
}

double asymmetric_value_closed(double a, double Q, double sigma, double r) {
    const auto sys = power_system(a, Q, sigma, r);
    if (acceptance_region(sys).kind != AcceptanceRegion::Kind::All) {
        throw ClosedFormInapplicable("not every receiver accepts at R = " + format_number(r));
    }
    return AsymmetricClosedForm::make(a, Q, sigma).value(r);
}

std::string to_string(InteriorVerdict v) {
    switch (v) {
        case InteriorVerdict::Interior: return "Interior";
        case InteriorVerdict::BoundaryLow: return "BoundaryLow";
        case InteriorVerdict::BoundaryHigh: return "BoundaryHigh";
        case InteriorVerdict::Indeterminate: return "Indeterminate";
    }
    return "?";
}

InteriorReport interior_conditions(double a, double Q, double sigma) {
    if (!(a > 0.0)) throw DomainError("power shape a must be positive");
    InteriorReport rep;
    const double k = Q * (a + 1.0);
    rep.ratio_1 = (1.0 - k) / (a - k);
    rep.ratio_2 = (a - k) / (1.0 - k);

    if (Q > 1.0 - std::max(a / (a + 1.0), 1.0 / (a + 1.0))) {
        rep.verdict = InteriorVerdict::Interior;
        rep.reason = "controversial products prevalent relative to the asymmetry";
        return rep;
    }
    if ((a < 1.0 && rep.ratio_1 >= sigma && sigma >= rep.ratio_2) ||
        (a > 1.0 && rep.ratio_1 <= sigma && sigma <= rep.ratio_2)) {
        rep.verdict = InteriorVerdict::Interior;
        rep.reason = "sigma between the two ratios";
        return rep;
    }

    rep.all_accept = true;
    for (double r : linspace(1e-3, 1.0 - 1e-3, 201)) {
        if (acceptance_region(power_system(a, Q, sigma, r)).kind != AcceptanceRegion::Kind::All) {
            rep.all_accept = false;
            break;
        }
    }
    if (!rep.all_accept) {
        rep.reason = "some receivers reject at some threshold";
        return rep;
    }
    const double lo = std::min(rep.ratio_1, rep.ratio_2);
    const double hi = std::max(rep.ratio_1, rep.ratio_2);
    const bool below = sigma <= lo;
    const bool above = sigma >= hi;
    if (below && above) {
        rep.reason = "both bounds bind";
    } else if (below) {
        rep.verdict = InteriorVerdict::BoundaryLow;
        rep.reason = "sigma below both ratios";
    } else if (above) {
        rep.verdict = InteriorVerdict::BoundaryHigh;
        rep.reason = "sigma above both ratios";
    } else {
        rep.verdict = InteriorVerdict::Interior;
        rep.reason = "sigma between the two ratios";
    }
    return rep;
}

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 1) throw DomainError("grid needs at least one point");
    std::vector<double> xs(static_cast<std::size_t>(n));
    if (n == 1) {
        xs[0] = lo;
        return xs;
    }
    const double step = (hi - lo) / (n - 1);
    for (int k = 0; k < n; ++k) xs[static_cast<std::size_t>(k)] = lo + step * k;
    xs.back() = hi;
    return xs;
}

std::vector<double> value_on_grid(const RecommendationSystem& sys, const std::vector<double>& rs) {
    std::vector<double> out(rs.size());
    parallel_for(rs.size(), [&](std::size_t k) { out[k] = system_value(sys.with_threshold(rs[k])).value; });
    return out;
}

std::vector<double> value_on_grid_serial(const RecommendationSystem& sys,
                                         const std::vector<double>& rs) {
    std::vector<double> out(rs.size());
    for (std::size_t k = 0; k < rs.size(); ++k) out[k] = system_value(sys.with_threshold(rs[k])).value;
    return out;
}

namespace {

struct Maximum {
    double x;
    double f;
};

template <class F>
Maximum golden_section_max(F&& f, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    Maximum best = fc >= fd ? Maximum{c, fc} : Maximum{d, fd};
    for (double x : {lo, hi}) {
        const double fx = f(x);
        if (fx > best.f) best = {x, fx};
    }
    return best;
}

std::string analytic_hint(const RecommendationSystem& sys) {
    const auto& q = sys.quality;
    const auto sigma = q.good_odds();
    if (!sigma || q.controversial_prevalence() <= 0.0) return {};
    if (!sys.distinct_populations() && sys.sender.is_symmetric()) {
        return "symmetric population suggests " + to_string(monotonicity_class_symmetric(*sigma));
    }
    if (!sys.distinct_populations() && sys.sender.family() == TypeDistribution::Family::Power &&
        std::abs(q.pref1() - q.pref2()) < 1e-12) {
        const auto rep = interior_conditions(sys.sender.shape(), q.controversial_prevalence(), *sigma);
        return "power population: " + to_string(rep.verdict) + " (" + rep.reason + ")";
    }
    return {};
}

}  // namespace

DesignVerdict optimize_threshold(const RecommendationSystem& sys, const OptimizeOptions& opts) {
    if (opts.grid_points < 3) throw DomainError("optimizer grid needs at least 3 points");
    const auto rs = linspace(opts.grid_lo, opts.grid_hi, opts.grid_points);
    const auto vs = value_on_grid(sys, rs);

    DesignVerdict out;
    const auto [min_it, max_it] = std::minmax_element(vs.begin(), vs.end());
    out.grid_min = *min_it;
    out.grid_max = *max_it;
    const auto k = static_cast<std::size_t>(max_it - vs.begin());

    std::ostringstream diag;
    diag << "grid argmax R=" << format_number(rs[k]);
    const std::string hint = analytic_hint(sys);

    if (out.grid_max - out.grid_min <= opts.flat_tolerance) {
        out.kind = VerdictKind::ConstantInR;
        out.r_star = rs[k];
        out.value = vs[k];
        diag << "; flat within " << format_number(opts.flat_tolerance);
        if (!hint.empty()) diag << "; " << hint;
        out.diagnostics = diag.str();
        return out;
    }

    const double lo = k == 0 ? kThresholdMin : rs[k - 1];
    const double hi = k + 1 == rs.size() ? kThresholdMax : rs[k + 1];
    const auto f = [&](double r) { return system_value(sys.with_threshold(r)).value; };
    Maximum best = golden_section_max(f, lo, hi, opts.tolerance);
    if (vs[k] > best.f) best = {rs[k], vs[k]};
    out.r_star = best.x;
    out.value = best.f;

    if (best.x < opts.interior_margin) {
        out.kind = VerdictKind::DecreasingInR;
    } else if (best.x > 1.0 - opts.interior_margin) {
        out.kind = VerdictKind::IncreasingInR;
    } else {
        out.kind = VerdictKind::InteriorOptimum;
    }
    diag << "; refined on [" << format_number(lo) << ", " << format_number(hi) << "]";
    if (!hint.empty()) diag << "; " << hint;
    out.diagnostics = diag.str();
    return out;
}

std::string to_string(MpsDirection d) {
    switch (d) {
        case MpsDirection::Increases: return "Increases";
        case MpsDirection::Decreases: return "Decreases";
        case MpsDirection::Neutral: return "Neutral";
    }
    return "?";
}

MpsDirection mps_direction(double sigma, double r) {
    validate_threshold(r);
    if (!(sigma > 0.0)) throw DomainError("sigma must be positive");
    if (r == 0.5) throw DomainError("spread direction undefined at R = 1/2");
    if (std::abs(sigma - 1.0) < 1e-12) return MpsDirection::Neutral;
    const bool high_threshold = r > 0.5;
    return (sigma < 1.0) == high_threshold ? MpsDirection::Increases : MpsDirection::Decreases;
}

std::string to_string(QStatics::Kind k) {
    return k == QStatics::Kind::DecreasingInQ ? "DecreasingInQ" : "InteriorQ";
}

QStatics q_comparative_statics(double sigma, double beta) {
    if (!(sigma > 0.0)) throw DomainError("sigma must be positive");
    if (!(beta >= 0.0 && beta <= 1.0)) throw DomainError("beta must lie in [0, 1]");
    QStatics out;
    const double s2 = sigma * sigma;
    out.discriminant = 3.0 * sigma - beta - s2 + s2 * beta;
    if (out.discriminant >= 0.0) return out;
    out.kind = QStatics::Kind::InteriorQ;
    out.q_star = out.discriminant / (4.0 * sigma - 4.0 * beta - 4.0 * s2 + 4.0 * s2 * beta);
    return out;
}

double symmetric_objective_effect(double Q, double sigma, double beta) {
    const double b = std::clamp(beta, kExtremeLow, kExtremeHigh);
    const RecommendationSystem sys{quality_from_params(Q, sigma), TypeDistribution::uniform(), 1.0 - b};
    return effects(sys, Recommendation::Buy).objective;
}

std::string to_string(RegionFigure f) {
    switch (f) {
        case RegionFigure::Interior: return "interior";
        case RegionFigure::PanelA: return "panelA";
        case RegionFigure::PanelB: return "panelB";
        case RegionFigure::PanelC: return "panelC";
    }
    return "?";
}

RegionFigure parse_region_figure(const std::string& name) {
    for (auto f : {RegionFigure::Interior, RegionFigure::PanelA, RegionFigure::PanelB,
                   RegionFigure::PanelC}) {
        if (to_string(f) == name) return f;
    }
    throw DomainError("unknown figure '" + name + "'");
}

namespace {

constexpr double kPanelStep = 1e-6;
constexpr int kPanelScan = 400;

double objective_effect_slope(double Q, double sigma, double beta) {
    return (symmetric_objective_effect(Q + kPanelStep, sigma, beta) -
            symmetric_objective_effect(Q - kPanelStep, sigma, beta)) /
           (2.0 * kPanelStep);
}

// Roots in beta of the Q-slope of the objective effect, by scan and bisection.
std::vector<double> panel_c_roots(double Q, double sigma) {
    std::vector<double> roots;
    const auto g = [&](double b) { return objective_effect_slope(Q, sigma, b); };
    double b0 = 0.0, g0 = g(b0);
    for (int k = 1; k <= kPanelScan; ++k) {
        const double b1 = static_cast<double>(k) / kPanelScan;
        const double g1 = g(b1);
        if (g0 == 0.0) {
            roots.push_back(b0);
        } else if ((g0 < 0.0) != (g1 < 0.0) && g1 != 0.0) {
            double lo = b0, hi = b1, glo = g0;
            for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double gm = g(mid);
                if ((gm < 0.0) == (glo < 0.0)) {
                    lo = mid;
                    glo = gm;
                } else {
                    hi = mid;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        b0 = b1;
        g0 = g1;
    }
    if (g0 == 0.0) roots.push_back(b0);
    return roots;
}

std::string lattice_label(RegionFigure figure, double Q, double x, double y) {
    switch (figure) {
        case RegionFigure::Interior:
            return to_string(interior_conditions(x, Q, y).verdict);
        case RegionFigure::PanelA:
            return to_string(q_comparative_statics(x, y).kind);
        case RegionFigure::PanelB:
            return y > x / (1.0 + x) ? "pi_increasing_in_Q" : "pi_not_increasing_in_Q";
        case RegionFigure::PanelC:
            return objective_effect_slope(Q, x, y) > 0.0 ? "delta_O_increasing_in_Q"
                                                         : "delta_O_not_increasing_in_Q";
    }
    return "?";
}

}  // namespace

std::vector<RegionPoint> region_map(RegionFigure figure, const RegionMapRequest& req) {
    if (!(req.Q >= 0.0 && req.Q < 0.5)) throw DomainError("Q must lie in [0, 1/2)");
    if (figure == RegionFigure::PanelC && !(req.Q > kPanelStep && req.Q < 0.5 - kPanelStep)) {
        throw DomainError("panel C needs Q strictly inside (0, 1/2)");
    }
    const auto xs = linspace(req.x.from, req.x.to, req.x.steps);
    std::vector<std::vector<RegionPoint>> rows(xs.size());
    const double nan = std::numeric_limits<double>::quiet_NaN();

    parallel_for(xs.size(), [&](std::size_t k) {
        const double x = xs[k];
        auto& out = rows[k];
        switch (figure) {
            case RegionFigure::Interior: {
                const double a = x;
                if (req.Q > 1.0 - std::max(a / (a + 1.0), 1.0 / (a + 1.0))) {
                    out.push_back({a, nan, "interior_all"});
                } else {
                    const auto rep = interior_conditions(a, req.Q, 1.0);
                    out.push_back({a, std::min(rep.ratio_1, rep.ratio_2), "boundary_min"});
                    out.push_back({a, std::max(rep.ratio_1, rep.ratio_2), "boundary_max"});
                }
                break;
            }
            case RegionFigure::PanelA: {
                const double s2 = x * x;
                if (std::abs(s2 - 1.0) > 1e-12) {
                    const double beta = (s2 - 3.0 * x) / (s2 - 1.0);
                    if (beta >= 0.0 && beta <= 1.0) out.push_back({x, beta, "boundary"});
                }
                break;
            }
            case RegionFigure::PanelB:
                out.push_back({x, x / (1.0 + x), "boundary"});
                break;
            case RegionFigure::PanelC:
                for (double beta : panel_c_roots(req.Q, x)) out.push_back({x, beta, "boundary"});
                break;
        }
        if (req.lattice) {
            for (double y : linspace(req.lattice->from, req.lattice->to, req.lattice->steps)) {
                out.push_back({x, y, lattice_label(figure, req.Q, x, y)});
            }
        }
    });

    std::vector<RegionPoint> flat;
    for (auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    return flat;
}

Record to_record(const RegionPoint& p) {
    Record rec;
    rec.add("x", p.x).add("y", p.y).add("label", p.label);
    return rec;
}

}  // namespace reco
