#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace nsplab::numerics {

// Thomas algorithm for a tridiagonal system. `lower` and `upper` have n-1
// entries, `diag` and `rhs` have n. Overwrites nothing; returns the solution.
std::vector<double> solve_tridiagonal(std::span<const double> lower,
                                      std::span<const double> diag,
                                      std::span<const double> upper,
                                      std::span<const double> rhs);

// General banded matrix with kl sub- and ku super-diagonals, LAPACK-style
// band storage extended for partial pivoting. Entries are addressed by
// (row, col) with |row - col| within the band.
class BandedMatrix {
public:
    BandedMatrix(std::size_t n, std::size_t kl, std::size_t ku);

    double& at(std::size_t row, std::size_t col);
    double at(std::size_t row, std::size_t col) const;

    // In-place LU with partial pivoting, then solve. Throws on singularity.
    std::vector<double> solve(std::vector<double> rhs);

    std::size_t size() const { return n_; }

private:
    std::size_t n_, kl_, ku_;
    std::size_t ldab_;          // rows of band storage = 2*kl + ku + 1
    std::vector<double> ab_;    // column-major band storage
    double& ab(std::size_t i, std::size_t j) { return ab_[j * ldab_ + i]; }
};

// Real roots of x^3 + a x^2 + b x + c = 0 (Cardano / trigonometric form).
// Returns 1 or 3 roots; a double root is reported twice.
std::vector<double> cubic_real_roots(double a, double b, double c);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

// Least-squares line through (x_i, y_i).
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

// Trapezoid rule on a uniform grid with spacing dx.
double trapezoid(std::span<const double> f, double dx);

// Composite Simpson rule (uniform grid; n may be even or odd in length,
// a trailing trapezoid panel is used if needed). Cross-check use only.
double simpson(std::span<const double> f, double dx);

// Centered first/second derivative of a sampled field, second order,
// one-sided second-order stencils at the ends.
std::vector<double> derivative(std::span<const double> f, double dx);
std::vector<double> second_derivative(std::span<const double> f, double dx);

inline double sqr(double x) { return x * x; }

} // namespace nsplab::numerics
