#include "wmorrey/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace wmorrey::quad {

namespace {

// Antiderivative of |x|^e for x on one side of the origin.
double signed_power_primitive(double x, double e) {
    if (x == 0.0) return 0.0;
    const double s = x > 0 ? 1.0 : -1.0;
    if (e == -1.0) return s * std::log(std::abs(x));
    return s * std::pow(std::abs(x), e + 1.0) / (e + 1.0);
}

double corner_piece(double X, double Y, double e) {
    // Polar form with u = tan(theta):
    //   X^(e+2)/(e+2) * int_0^{Y/X} (1+u^2)^(e/2) du + (X <-> Y)
    if (X <= 0.0 || Y <= 0.0) return 0.0;
    auto g = [e](double u) { return std::pow(1.0 + u * u, 0.5 * e); };
    const double lower = std::pow(X, e + 2.0) / (e + 2.0) * adaptive(g, 0.0, Y / X);
    const double upper = std::pow(Y, e + 2.0) / (e + 2.0) * adaptive(g, 0.0, X / Y);
    return lower + upper;
}

}  // namespace

double power_interval(double x0, double x1, double e) {
    if (x1 < x0) return -power_interval(x1, x0, e);
    if (x0 < 0.0 && x1 > 0.0) {
        if (e <= -1.0) throw std::domain_error("power_interval: singular interval with e <= -1");
        return power_interval(x0, 0.0, e) + power_interval(0.0, x1, e);
    }
    if ((x0 == 0.0 || x1 == 0.0) && e <= -1.0)
        throw std::domain_error("power_interval: endpoint singularity with e <= -1");
    if (e == 0.0) return x1 - x0;
    // Primitive differences lose accuracy when the interval is short relative
    // to its distance from the origin; fall back to Gauss-Legendre there.
    const double near = std::min(std::abs(x0), std::abs(x1));
    if (near > 4.0 * (x1 - x0)) {
        auto g = [e](double x) { return std::pow(std::abs(x), e); };
        return boost::math::quadrature::gauss<double, 10>::integrate(g, x0, x1);
    }
    return signed_power_primitive(x1, e) - signed_power_primitive(x0, e);
}

double power_corner_rect(double X, double Y, double e) {
    if (X < 0.0 || Y < 0.0) throw std::domain_error("power_corner_rect: negative extent");
    if (e <= -2.0) throw std::domain_error("power_corner_rect: requires e > -2");
    return corner_piece(X, Y, e);
}

double power_rect(double x0, double x1, double y0, double y1, double e) {
    const double dx = std::max(0.0, std::max(x0, -x1));
    const double dy = std::max(0.0, std::max(y0, -y1));
    const double dist = std::hypot(dx, dy);
    const double side = std::max(x1 - x0, y1 - y0);
    if (dist >= side) {
        return gauss_rect([e](double x, double y) { return std::pow(x * x + y * y, 0.5 * e); }, x0,
                          x1, y0, y1);
    }
    // Signed cumulative integral from the origin; inclusion-exclusion over corners.
    auto G = [e](double x, double y) {
        const double s = (x < 0 ? -1.0 : 1.0) * (y < 0 ? -1.0 : 1.0);
        return s * power_corner_rect(std::abs(x), std::abs(y), e);
    };
    return G(x1, y1) - G(x0, y1) - G(x1, y0) + G(x0, y0);
}

double gauss_rect(const std::function<double(double, double)>& g, double x0, double x1, double y0,
                  double y1) {
    using rule = boost::math::quadrature::gauss<double, 8>;
    return rule::integrate(
        [&](double x) { return rule::integrate([&](double y) { return g(x, y); }, y0, y1); }, x0,
        x1);
}

double adaptive(const std::function<double(double)>& g, double a, double b, double tol) {
    if (a == b) return 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 21>::integrate(g, a, b, 20, tol);
}

}  // namespace wmorrey::quad
