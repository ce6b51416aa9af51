#pragma once

#include <functional>

namespace reco {

struct QuadratureOptions {
    double abs_tol = 1e-10;
    int max_depth = 40;
};

// Adaptive Simpson integration of f over [a, b].
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        QuadratureOptions opts = {});

}  // namespace reco
