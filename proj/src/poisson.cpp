#include "nsplab/poisson.hpp"

#include "nsplab/numerics.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <stdexcept>

namespace nsplab::poisson {

namespace {
void check_problem(const Problem& p) {
    if (p.v.size() < 3) throw std::invalid_argument("poisson: grid too small");
    if (!(p.dxi > 0.0)) throw std::invalid_argument("poisson: dxi must be positive");
    if (!p.source.empty() && p.source.size() != p.v.size())
        throw std::invalid_argument("poisson: source size mismatch");
    for (const double v : p.v)
        if (!(v > 0.0)) throw std::invalid_argument("poisson: v must be positive");
}

// face weight: arithmetic mean of 1/v
inline double face(const std::vector<double>& v, std::size_t i) {
    return 0.5 * (1.0 / v[i] + 1.0 / v[i + 1]);
}

// residual of the discrete equation at interior node i
inline double node_residual(const Problem& p, const std::vector<double>& phi,
                            std::size_t i) {
    const double h2 = p.dxi * p.dxi;
    const double flux = face(p.v, i) * (phi[i + 1] - phi[i]) -
                        face(p.v, i - 1) * (phi[i] - phi[i - 1]);
    double r = -flux / h2 - 1.0 + p.v[i] * std::exp(phi[i]);
    if (!p.source.empty()) r -= p.source[i];
    return r;
}

double residual_norm(const Problem& p, const std::vector<double>& phi) {
    double m = 0.0;
    for (std::size_t i = 1; i + 1 < phi.size(); ++i)
        m = std::max(m, std::abs(node_residual(p, phi, i)));
    return m;
}
} // namespace

double residual_max(const Problem& problem, const std::vector<double>& phi) {
    check_problem(problem);
    if (phi.size() != problem.v.size())
        throw std::invalid_argument("poisson::residual_max: phi size mismatch");
    return residual_norm(problem, phi);
}

Result solve_phi(const Problem& problem, const std::vector<double>& initial_guess) {
    check_problem(problem);
    const std::size_t n = problem.v.size();
    if (initial_guess.size() != n)
        throw std::invalid_argument("poisson::solve_phi: initial guess size mismatch");
    for (const double g : initial_guess)
        if (!std::isfinite(g)) throw std::invalid_argument("poisson::solve_phi: non-finite initial guess");

    Result out;
    out.phi = initial_guess;
    out.phi.front() = problem.phi_left;
    out.phi.back() = problem.phi_right;

    const double h2 = problem.dxi * problem.dxi;
    const std::size_t m = n - 2; // interior unknowns
    std::vector<double> lower(m - 1), diag(m), upper(m - 1), rhs(m);

    // round-off floor of the residual evaluation: the 1/h^2 flux difference
    // amplifies rounding in phi, so the achievable residual scales with it
    auto noise_floor = [&](const std::vector<double>& phi) {
        double vmin = problem.v[0], pmax = 0.0, smax = 0.0;
        for (const double v : problem.v) vmin = std::min(vmin, v);
        for (const double p : phi) pmax = std::max(pmax, std::abs(p));
        for (const double s : problem.source) smax = std::max(smax, std::abs(s));
        const double scale = 4.0 * std::max(1.0, pmax) / (h2 * vmin) + smax + 1.0;
        return 64.0 * std::numeric_limits<double>::epsilon() * scale;
    };

    double res = residual_norm(problem, out.phi);
    for (out.iterations = 0; out.iterations < problem.max_iter; ++out.iterations) {
        if (res < std::max(problem.newton_tol, noise_floor(out.phi))) {
            out.residual = res;
            return out;
        }

        for (std::size_t k = 0; k < m; ++k) {
            const std::size_t i = k + 1;
            diag[k] = (face(problem.v, i - 1) + face(problem.v, i)) / h2 +
                      problem.v[i] * std::exp(out.phi[i]);
            if (k > 0) lower[k - 1] = -face(problem.v, i - 1) / h2;
            if (k + 1 < m) upper[k] = -face(problem.v, i) / h2;
            rhs[k] = -node_residual(problem, out.phi, i);
        }
        const auto delta = numerics::solve_tridiagonal(lower, diag, upper, rhs);

        // damping by halving until the residual decreases
        double alpha = 1.0;
        std::vector<double> trial = out.phi;
        bool accepted = false;
        for (int half = 0; half <= 40; ++half) {
            for (std::size_t k = 0; k < m; ++k)
                trial[k + 1] = out.phi[k + 1] + alpha * delta[k];
            const double tres = residual_norm(problem, trial);
            if (tres < res) {
                out.phi = trial;
                res = tres;
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) {
            if (res < std::max(problem.newton_tol, noise_floor(out.phi))) {
                out.residual = res; // stalled at the round-off floor
                return out;
            }
            out.damping_monotone = false;
            throw std::runtime_error("poisson::solve_phi: Newton stagnation, residual " +
                                     std::to_string(res));
        }
    }
    if (res >= std::max(problem.newton_tol, noise_floor(out.phi)))
        throw std::runtime_error("poisson::solve_phi: iteration cap reached, residual " +
                                 std::to_string(res));
    out.residual = res;
    return out;
}

ElectricForce electric_force(double dxi, const std::vector<double>& v,
                             const std::vector<double>& phi) {
    if (v.size() != phi.size() || v.size() < 4)
        throw std::invalid_argument("electric_force: field size mismatch");
    const std::size_t n = v.size();

    const auto phix = numerics::derivative(phi, dxi);
    std::vector<double> e(n); // phi_xi / v
    for (std::size_t i = 0; i < n; ++i) e[i] = phix[i] / v[i];
    const auto ex = numerics::derivative(e, dxi);

    ElectricForce out;
    out.Phi.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.Phi[i] = 0.5 * e[i] * e[i] - ex[i] / v[i];
    out.Phi_xi = numerics::derivative(out.Phi, dxi);
    return out;
}

} // namespace nsplab::poisson
