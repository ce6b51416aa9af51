#include "reco/quadrature.hpp"

#include <cmath>

namespace reco {
namespace {

struct Panel {
    double a, m, b;
    double fa, fm, fb;
    double whole;
};

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double refine(const std::function<double(double)>& f, const Panel& p, double tol, int depth) {
    const double lm = 0.5 * (p.a + p.m);
    const double rm = 0.5 * (p.m + p.b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(p.a, p.m, p.fa, flm, p.fm);
    const double right = simpson(p.m, p.b, p.fm, frm, p.fb);
    const double delta = left + right - p.whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return refine(f, {p.a, lm, p.m, p.fa, flm, p.fm, left}, 0.5 * tol, depth - 1) +
           refine(f, {p.m, rm, p.b, p.fm, frm, p.fb, right}, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        QuadratureOptions opts) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    return refine(f, {a, m, b, fa, fm, fb, simpson(a, b, fa, fm, fb)}, opts.abs_tol,
                  opts.max_depth);
}

}  // namespace reco
