// quadrature.cpp — adaptive Gauss–Kronrod (7,15) panels

#include "omech/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace omech::quad {

namespace {

// Kronrod-15 abscissae on [0,1] side (symmetric) and weights; Gauss-7 weights
// sit on the odd-index Kronrod nodes. Values from QUADPACK.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double lo, hi;
    Eigen::VectorXd integral;
    Eigen::VectorXd error;
};

Panel evaluate_panel(const std::function<Eigen::VectorXd(double)>& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    Eigen::VectorXd fc = f(center);
    Eigen::VectorXd kronrod = kWgk[7] * fc;
    Eigen::VectorXd gauss = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const Eigen::VectorXd flo = f(center - half * kXgk[i]);
        const Eigen::VectorXd fhi = f(center + half * kXgk[i]);
        kronrod += kWgk[i] * (flo + fhi);
        if (i % 2 == 1) {
            gauss += kWg[i / 2] * (flo + fhi);
        }
    }

    Panel p;
    p.lo = lo;
    p.hi = hi;
    p.integral = half * kronrod;
    // Conservative error estimate: |K15 - G7| per component.
    p.error = (half * (kronrod - gauss)).cwiseAbs();
    return p;
}

} // namespace

std::vector<double> make_edges(double lo, double hi, std::vector<double> interior) {
    if (!(hi > lo)) throw ConvergenceError("quadrature interval is empty");
    std::vector<double> edges{lo, hi};
    for (double x : interior) {
        if (x > lo && x < hi) edges.push_back(x);
    }
    std::sort(edges.begin(), edges.end());
    const double span = hi - lo;
    std::vector<double> dedup;
    for (double x : edges) {
        if (dedup.empty() || x - dedup.back() > 1e-12 * span) dedup.push_back(x);
    }
    if (dedup.back() < hi) dedup.push_back(hi);
    return dedup;
}

Result integrate(const std::function<Eigen::VectorXd(double)>& f,
                 std::vector<double> edges,
                 const std::vector<int>& powers,
                 const Options& opt) {
    if (edges.size() < 2) throw ConvergenceError("integrate: need at least two panel edges");

    std::vector<Panel> panels;
    panels.reserve(edges.size() - 1);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        panels.push_back(evaluate_panel(f, edges[i], edges[i + 1]));
    }

    const int dim = static_cast<int>(panels.front().integral.size());
    if (static_cast<int>(powers.size()) != dim) {
        throw ConvergenceError("integrate: power labels do not match integrand dimension");
    }
    if (!(opt.scale_frequency > 0.0)) {
        throw ConvergenceError("integrate: scale frequency must be positive");
    }
    // Per-component normalization omega_c^-p maps everything onto the scale
    // of the power-0 components.
    Eigen::VectorXd norm(dim);
    for (int c = 0; c < dim; ++c) {
        norm(c) = std::pow(opt.scale_frequency, -powers[c]);
    }

    auto converged = [&](Eigen::VectorXd& total, Eigen::VectorXd& err, double& worst) {
        total = Eigen::VectorXd::Zero(dim);
        err = Eigen::VectorXd::Zero(dim);
        for (const Panel& p : panels) {
            total += p.integral;
            err += p.error;
        }
        const double scale = std::max((total.cwiseProduct(norm)).cwiseAbs().maxCoeff(),
                                      std::numeric_limits<double>::min());
        worst = (err.cwiseProduct(norm)).cwiseAbs().maxCoeff() / scale;
        return worst <= opt.rel_tolerance;
    };

    Eigen::VectorXd total, err;
    double worst = 0.0;
    while (!converged(total, err, worst)) {
        if (static_cast<int>(panels.size()) >= opt.max_panels) {
            throw ConvergenceError("adaptive quadrature did not converge within max_panels", worst);
        }
        // Bisect the panel with the largest normalized error contribution.
        std::size_t idx = 0;
        double max_err = -1.0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            const double e = (panels[i].error.cwiseProduct(norm)).maxCoeff();
            if (e > max_err) {
                max_err = e;
                idx = i;
            }
        }
        const Panel victim = panels[idx];
        const double mid = 0.5 * (victim.lo + victim.hi);
        if (!(mid > victim.lo && mid < victim.hi)) {
            throw ConvergenceError("adaptive quadrature hit floating-point panel limit", worst);
        }
        panels[idx] = evaluate_panel(f, victim.lo, mid);
        panels.push_back(evaluate_panel(f, mid, victim.hi));
    }

    Result res;
    res.value = total;
    res.error = err;
    res.panels_used = static_cast<int>(panels.size());
    return res;
}

} // namespace omech::quad
