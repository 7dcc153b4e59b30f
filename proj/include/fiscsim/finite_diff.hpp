#pragma once

namespace fiscsim {

// Central first difference with a step relative to |x|. Truncation error is
// O(h^2); at rel_step=1e-6 in double precision the rounding floor is roughly
// 1e-10 relative, so agreement tighter than that cannot be asserted.
template <class F>
double central_diff(F&& f, double x, double rel_step = 1e-6) {
    const double h = rel_step * (x < 0 ? -x : x);
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Mixed second derivative d2f/dxdy via the 4-point cross stencil. The step is
// relative to each coordinate; 5e-4 balances O(h^2) truncation against the
// O(eps/h^2) rounding floor, keeping both a couple of orders below 1e-4.
template <class F>
double cross_diff(F&& f, double x, double y, double rel_step = 5e-4) {
    const double hx = rel_step * (x < 0 ? -x : x);
    const double hy = rel_step * (y < 0 ? -y : y);
    return (f(x + hx, y + hy) - f(x + hx, y - hy) - f(x - hx, y + hy) + f(x - hx, y - hy)) /
           (4.0 * hx * hy);
}

}  // namespace fiscsim
