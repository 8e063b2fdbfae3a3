#include "disclose/mathkit.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace disclose::mathkit {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;
constexpr double kInvSqrt2Pi = 0.3989422804014326779;

// Below this half-volatility the closed form for g divides catastrophically
// by a^2; the kernel is nearly linear there and plain quadrature is cheap.
constexpr double kSmallKernelCutoff = 1e-3;

double clamp01(double t) {
    // absorb end-point rounding from grid construction
    if (t > 1.0 && t < 1.0 + 1e-12) return 1.0;
    if (t < 0.0 && t > -1e-12) return 0.0;
    return t;
}

}  // namespace

double normal_cdf(double x) { return 0.5 * std::erfc(-x * kInvSqrt2); }

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

Kernel::Kernel(double sigma_) : sigma(sigma_) {
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw std::domain_error("Kernel: sigma must be positive and finite");
}

double h_rate(double t, const Kernel& k) {
    t = clamp01(t);
    if (t < 0.0 || t > 1.0)
        throw std::domain_error("h_rate: t must lie in [0,1]");
    return 2.0 * normal_cdf(0.5 * k.sigma * std::sqrt(1.0 - t)) - 1.0;
}

namespace {

// Antiderivative of h/2 vanishing at t=0, with a = sigma/2 and q = a*sqrt(1-t):
//   H(t,a) = Phi(a) + (-Phi(a) + a phi(a))/a^2
//            - ((q^2-1)Phi(q) + q phi(q))/a^2 - t/2.
// Differentiating the q-dependent bracket gives -Phi(q) * dq^2/dt / ... which
// collapses to dH/dt = Phi(q) - 1/2 = h(t)/2.
double g_closed(double t, double a) {
    const double q = a * std::sqrt(1.0 - t);
    const double constant = -normal_cdf(a) + a * normal_pdf(a);
    const double moving = (q * q - 1.0) * normal_cdf(q) + q * normal_pdf(q);
    const double H = normal_cdf(a) + (constant - moving) / (a * a) - 0.5 * t;
    return 2.0 * H;
}

}  // namespace

double g_cum(double t, const Kernel& k) {
    t = clamp01(t);
    if (t < 0.0 || t > 1.0)
        throw std::domain_error("g_cum: t must lie in [0,1]");
    if (t == 0.0) return 0.0;
    const double a = 0.5 * k.sigma;
    if (a < kSmallKernelCutoff) {
        return integrate([&](double u) { return h_rate(u, k); }, 0.0, t,
                         Tolerance{1e-12, 0.0, 200});
    }
    return g_closed(t, a);
}

namespace {

struct SimpsonState {
    const std::function<double(double)>* f;
    int max_depth;
    bool converged = true;
    double worst = 0.0;
};

double simpson_recurse(SimpsonState& st, double a, double m, double b,
                       double fa, double fm, double fb, double whole,
                       double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = (*st.f)(lm);
    const double frm = (*st.f)(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol || (b - a) < 1e-15 * (1.0 + std::abs(a)))
        return left + right + delta / 15.0;
    if (depth >= st.max_depth) {
        st.converged = false;
        st.worst = std::max(st.worst, std::abs(delta) / 15.0);
        return left + right + delta / 15.0;
    }
    return simpson_recurse(st, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           simpson_recurse(st, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 Tolerance tol) {
    if (!(a <= b)) throw std::domain_error("integrate: requires a <= b");
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double eff_tol =
        std::max(tol.abs_tol, tol.rel_tol * std::abs(whole));
    SimpsonState st{&f, std::min(tol.max_iter, 60)};
    const double value =
        simpson_recurse(st, a, m, b, fa, fm, fb, whole, eff_tol, 0);
    if (!st.converged)
        throw QuadratureError("integrate: depth budget exhausted before the "
                              "local tolerance was met",
                              value);
    return value;
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 Tolerance tol) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw NoBracket("find_root: f has the same sign at both ends");

    // Brent: keep [a|c, b] bracketing, b the best iterate.
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < tol.max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a; fc = fa; d = b - a; e = d;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double eps = std::numeric_limits<double>::epsilon();
        const double tol_x =
            2.0 * eps * std::abs(b) +
            0.5 * std::max(tol.abs_tol, tol.rel_tol * std::abs(b));
        const double mid = 0.5 * (c - b);
        if (std::abs(fb) <= tol.abs_tol || std::abs(mid) <= tol_x) return b;
        if (std::abs(e) >= tol_x && std::abs(fa) > std::abs(fb)) {
            // inverse quadratic / secant
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * mid * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * mid * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * mid * q - std::abs(tol_x * q),
                                   std::abs(e * q))) {
                e = d; d = p / q;
            } else {
                d = mid; e = d;
            }
        } else {
            d = mid; e = d;
        }
        a = b; fa = fb;
        b += (std::abs(d) > tol_x) ? d : (mid > 0.0 ? tol_x : -tol_x);
        fb = f(b);
    }
    throw std::runtime_error("find_root: iteration budget exhausted");
}

}  // namespace disclose::mathkit
