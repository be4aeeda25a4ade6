#pragma once

// Globally adaptive Gauss-Kronrod (10-point Gauss, 21-point Kronrod) quadrature
// over a list of panels. The worst panel is bisected until the summed error
// estimate meets max(abs, rel * |I|).

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include "stiran/errors.hpp"

namespace stiran {

struct Tolerance {
    double abs = 1e-8;
    double rel = 1e-6;

    /// Tolerance for an integral nested inside another one.
    Tolerance inner() const { return {abs / 10.0, rel / 10.0}; }
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    int panels = 0;
};

namespace detail {

// QUADPACK qk21 abscissae and weights.
inline constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
inline constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525452730, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
    double a = 0.0;
    double b = 0.0;
    double value = 0.0;
    double error = 0.0;

    bool operator<(const Panel& other) const { return error < other.error; }
};

template <typename F>
Panel gk21(F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[10];
    double gauss = 0.0;
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        kronrod += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) {
            gauss += kWg[j / 2] * (f1 + f2);
        }
    }
    Panel p{a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
    return p;
}

}  // namespace detail

/// Integrates f over [breaks.front(), breaks.back()], starting from the given
/// panels. Throws NumericalError (tagged with `context`) when the error target
/// is not met within `max_panels` panels or a value is not finite.
template <typename F>
QuadratureResult integrate_panels(F&& f, std::vector<double> breaks, Tolerance tol = {},
                                  std::string_view context = "integral", int max_panels = 4000) {
    QuadratureResult out;
    if (breaks.size() < 2) {
        return out;
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    std::priority_queue<detail::Panel> heap;
    double value = 0.0;
    double error = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const detail::Panel p = detail::gk21(f, breaks[i], breaks[i + 1]);
        value += p.value;
        error += p.error;
        heap.push(p);
    }
    int panels = static_cast<int>(heap.size());
    while (error > std::max(tol.abs, tol.rel * std::abs(value))) {
        if (panels >= max_panels) {
            throw NumericalError(std::string(context) + ": quadrature error " + std::to_string(error) +
                                 " above tolerance after " + std::to_string(panels) + " panels");
        }
        const detail::Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            throw NumericalError(std::string(context) + ": panel collapsed at " + std::to_string(worst.a));
        }
        const detail::Panel left = detail::gk21(f, worst.a, mid);
        const detail::Panel right = detail::gk21(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++panels;
    }
    if (!std::isfinite(value)) {
        throw NumericalError(std::string(context) + ": non-finite integral");
    }
    // Recompute the sums from the panels to shed the running-update drift.
    value = 0.0;
    error = 0.0;
    while (!heap.empty()) {
        value += heap.top().value;
        error += heap.top().error;
        heap.pop();
    }
    out.value = value;
    out.error = error;
    out.panels = panels;
    return out;
}

template <typename F>
double integrate(F&& f, double a, double b, Tolerance tol = {}, std::string_view context = "integral") {
    if (!(b > a)) {
        return 0.0;
    }
    return integrate_panels(std::forward<F>(f), std::vector<double>{a, b}, tol, context).value;
}

/// Keeps the breakpoints inside [lo, hi] and adds both ends.
inline std::vector<double> panel_breaks(double lo, double hi, const std::vector<double>& interior) {
    std::vector<double> out{lo, hi};
    for (double x : interior) {
        if (x > lo && x < hi) {
            out.push_back(x);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace stiran
