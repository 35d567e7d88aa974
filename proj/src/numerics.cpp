#include "nsplab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nsplab::numerics {

std::vector<double> solve_tridiagonal(std::span<const double> lower,
                                      std::span<const double> diag,
                                      std::span<const double> upper,
                                      std::span<const double> rhs) {
    const std::size_t n = diag.size();
    if (lower.size() != n - 1 || upper.size() != n - 1 || rhs.size() != n)
        throw std::invalid_argument("solve_tridiagonal: inconsistent sizes");

    std::vector<double> c(n - 1), d(n), x(n);
    double beta = diag[0];
    if (beta == 0.0) throw std::runtime_error("solve_tridiagonal: zero pivot");
    c[0] = upper[0] / beta;
    d[0] = rhs[0] / beta;
    for (std::size_t i = 1; i < n; ++i) {
        beta = diag[i] - lower[i - 1] * c[i - 1];
        if (beta == 0.0) throw std::runtime_error("solve_tridiagonal: zero pivot");
        if (i < n - 1) c[i] = upper[i] / beta;
        d[i] = (rhs[i] - lower[i - 1] * d[i - 1]) / beta;
    }
    x[n - 1] = d[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
    return x;
}

BandedMatrix::BandedMatrix(std::size_t n, std::size_t kl, std::size_t ku)
    : n_(n), kl_(kl), ku_(ku), ldab_(2 * kl + ku + 1),
      ab_(ldab_ * n, 0.0) {}

double& BandedMatrix::at(std::size_t row, std::size_t col) {
    // storage row index: kl + ku + row - col
    return ab_[col * ldab_ + (kl_ + ku_ + row - col)];
}

double BandedMatrix::at(std::size_t row, std::size_t col) const {
    return ab_[col * ldab_ + (kl_ + ku_ + row - col)];
}

std::vector<double> BandedMatrix::solve(std::vector<double> rhs) {
    if (rhs.size() != n_) throw std::invalid_argument("BandedMatrix::solve: size mismatch");
    const std::size_t kv = kl_ + ku_; // index of the diagonal within a column
    std::vector<int> piv(n_);

    for (std::size_t j = 0; j < n_; ++j) {
        // pivot search in column j, rows j .. min(j+kl, n-1)
        const std::size_t last = std::min(j + kl_, n_ - 1);
        std::size_t p = j;
        double pmax = std::abs(ab(kv, j));
        for (std::size_t i = j + 1; i <= last; ++i) {
            const double a = std::abs(ab(kv + (i - j), j));
            if (a > pmax) { pmax = a; p = i; }
        }
        if (pmax == 0.0) throw std::runtime_error("BandedMatrix::solve: singular matrix");
        piv[j] = static_cast<int>(p);
        const std::size_t jmax = std::min(j + kl_ + ku_, n_ - 1);
        if (p != j) {
            for (std::size_t c = j; c <= jmax; ++c)
                std::swap(ab_[c * ldab_ + (kv + j - c)], ab_[c * ldab_ + (kv + p - c)]);
            std::swap(rhs[j], rhs[p]);
        }
        const double pivval = ab(kv, j);
        for (std::size_t i = j + 1; i <= last; ++i) {
            const double m = ab(kv + (i - j), j) / pivval;
            ab(kv + (i - j), j) = m;
            for (std::size_t c = j + 1; c <= jmax; ++c)
                ab_[c * ldab_ + (kv + i - c)] -= m * ab_[c * ldab_ + (kv + j - c)];
            rhs[i] -= m * rhs[j];
        }
    }
    // back substitution
    for (std::size_t i = n_; i-- > 0;) {
        const std::size_t jmax = std::min(i + kl_ + ku_, n_ - 1);
        double s = rhs[i];
        for (std::size_t c = i + 1; c <= jmax; ++c)
            s -= ab_[c * ldab_ + (kv + i - c)] * rhs[c];
        rhs[i] = s / ab(kv, i);
    }
    return rhs;
}

std::vector<double> cubic_real_roots(double a, double b, double c) {
    // depressed cubic t^3 + p t + q with x = t - a/3
    const double p = b - a * a / 3.0;
    const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    const double shift = -a / 3.0;
    const double disc = q * q / 4.0 + p * p * p / 27.0;

    std::vector<double> roots;
    if (disc > 0.0) {
        const double s = std::sqrt(disc);
        const double u = std::cbrt(-q / 2.0 + s);
        const double w = std::cbrt(-q / 2.0 - s);
        roots.push_back(u + w + shift);
    } else if (p == 0.0) {
        roots.assign(3, shift + std::cbrt(-q));
    } else {
        const double r = std::sqrt(-p * p * p / 27.0);
        const double phi = std::acos(std::clamp(-q / (2.0 * r), -1.0, 1.0));
        const double m = 2.0 * std::sqrt(-p / 3.0);
        for (int k = 0; k < 3; ++k)
            roots.push_back(m * std::cos((phi + 2.0 * std::numbers::pi * k) / 3.0) + shift);
    }
    // one Newton polish per root
    for (double& x : roots) {
        for (int it = 0; it < 3; ++it) {
            const double f = ((x + a) * x + b) * x + c;
            const double fp = (3.0 * x + 2.0 * a) * x + b;
            if (fp != 0.0) x -= f / fp;
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n != y.size() || n < 2) throw std::invalid_argument("fit_line: need >= 2 points");
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) { sx += x[i]; sy += y[i]; }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx; sxy += dx * dy; syy += dy * dy;
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = (syy == 0.0) ? 1.0 : sxy * sxy / (sxx * syy);
    return fit;
}

double trapezoid(std::span<const double> f, double dx) {
    if (f.size() < 2) return 0.0;
    double s = 0.5 * (f.front() + f.back());
    for (std::size_t i = 1; i + 1 < f.size(); ++i) s += f[i];
    return s * dx;
}

double simpson(std::span<const double> f, double dx) {
    const std::size_t n = f.size();
    if (n < 3) return trapezoid(f, dx);
    // largest odd prefix length gives an even panel count
    const std::size_t m = (n % 2 == 1) ? n : n - 1;
    double s = f[0] + f[m - 1];
    for (std::size_t i = 1; i < m - 1; ++i) s += f[i] * (i % 2 == 1 ? 4.0 : 2.0);
    s *= dx / 3.0;
    if (m != n) s += 0.5 * dx * (f[n - 2] + f[n - 1]);
    return s;
}

std::vector<double> derivative(std::span<const double> f, double dx) {
    const std::size_t n = f.size();
    std::vector<double> d(n);
    if (n < 3) { std::fill(d.begin(), d.end(), 0.0); return d; }
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * dx);
    d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * dx);
    d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * dx);
    return d;
}

std::vector<double> second_derivative(std::span<const double> f, double dx) {
    const std::size_t n = f.size();
    std::vector<double> d(n);
    if (n < 4) { std::fill(d.begin(), d.end(), 0.0); return d; }
    const double h2 = dx * dx;
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / h2;
    d[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / h2;
    d[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / h2;
    return d;
}

} // namespace nsplab::numerics
