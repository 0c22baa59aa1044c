#pragma once

#include <functional>

namespace wmorrey::quad {

/// Integral of |x|^e over [x0, x1]. Valid whenever the integral is finite:
/// either 0 lies outside the open interval, or e > -1.
double power_interval(double x0, double x1, double e);

/// Integral of (x^2 + y^2)^(e/2) over the rectangle [0, X] x [0, Y] whose
/// corner sits on the singularity. Requires X, Y >= 0 and e > -2.
double power_corner_rect(double X, double Y, double e);

/// Integral of (x^2 + y^2)^(e/2) over [x0, x1] x [y0, y1].
/// Rectangles touching or near the origin are split at the axes and reduced
/// to corner rectangles; distant rectangles use tensor Gauss-Legendre.
double power_rect(double x0, double x1, double y0, double y1, double e);

/// Tensor-product Gauss-Legendre (8 x 8) over a rectangle.
double gauss_rect(const std::function<double(double, double)>& g, double x0, double x1, double y0,
                  double y1);

/// Adaptive Gauss-Kronrod over [a, b] with relative tolerance `tol`.
double adaptive(const std::function<double(double)>& g, double a, double b, double tol = 1e-13);

}  // namespace wmorrey::quad
