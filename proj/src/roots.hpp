#pragma once

// Monotone root finding shared by chart inversion and the C^x action.

#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <string>
#include <utility>

#include "ainf/error.hpp"

namespace ainf::detail {

/// Root of an increasing function on the open interval (lo, hi) whose
/// values tend to -inf / +inf at the ends. `eval(t)` returns (f, f').
/// Brackets outward from `start`, bisects to width 1e-3, then runs
/// safeguarded Newton to ~1e-12 relative.
template <class Eval>
double solve_increasing(Eval&& eval, double lo, double hi, double start)
{
    auto f = [&](double t) { return eval(t).first; };
    double a = start, b = start;
    const double f0 = f(start);
    if (f0 == 0) return start;
    auto diagnostics = [&] {
        return "bracket search from " + std::to_string(start) + " in (" + std::to_string(lo) + ", " + std::to_string(hi) +
               "), last bracket [" + std::to_string(a) + ", " + std::to_string(b) + "], f(start) = " + std::to_string(f0);
    };
    if (f0 < 0) {
        for (int k = 0;; ++k) {
            const double next = std::isinf(hi) ? start + std::ldexp(std::max(1.0, std::abs(start)), k)
                                               : hi - (hi - start) * std::ldexp(1.0, -(k + 1));
            if (!(next < hi) || k > 2000) fail(ErrorKind::RootBracketFailure, diagnostics());
            b = next;
            if (f(b) >= 0) break;
            a = b;
        }
    } else {
        for (int k = 0;; ++k) {
            const double next = std::isinf(lo) ? start - std::ldexp(std::max(1.0, std::abs(start)), k)
                                               : lo + (start - lo) * std::ldexp(1.0, -(k + 1));
            if (!(next > lo) || k > 2000) fail(ErrorKind::RootBracketFailure, diagnostics());
            a = next;
            if (f(a) <= 0) break;
            b = a;
        }
    }
    if (b - a > 1e-3) {
        auto tol = [](double x, double y) { return std::abs(y - x) <= 1e-3; };
        const auto [x, y] = boost::math::tools::bisect(f, a, b, tol);
        a = x;
        b = y;
    }
    std::uintmax_t iterations = 200;
    const double root = boost::math::tools::newton_raphson_iterate(eval, 0.5 * (a + b), a, b, 48, iterations);
    if (!std::isfinite(root)) fail(ErrorKind::RootBracketFailure, diagnostics());
    return root;
}

}  // namespace ainf::detail
