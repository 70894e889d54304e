#include "shapespace/banded.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace shapespace {

namespace {

void check_sizes(const std::vector<double>& lower, const std::vector<double>& diag,
                 const std::vector<double>& upper, const std::vector<double>& rhs) {
    const std::size_t n = diag.size();
    if (lower.size() != n || upper.size() != n || rhs.size() != n) {
        throw std::invalid_argument("tridiagonal solver: band sizes disagree");
    }
    if (n < 2) {
        throw std::invalid_argument("tridiagonal solver: system too small");
    }
}

}  // namespace

std::vector<double> solve_tridiagonal(const std::vector<double>& lower,
                                      const std::vector<double>& diag,
                                      const std::vector<double>& upper,
                                      const std::vector<double>& rhs) {
    check_sizes(lower, diag, upper, rhs);
    const std::size_t n = diag.size();
    std::vector<double> c(n), d(n);
    double piv = diag[0];
    if (std::abs(piv) < 1e-300) {
        throw std::domain_error("tridiagonal solver: zero pivot at row 0");
    }
    c[0] = upper[0] / piv;
    d[0] = rhs[0] / piv;
    for (std::size_t i = 1; i < n; ++i) {
        piv = diag[i] - lower[i] * c[i - 1];
        if (std::abs(piv) < 1e-300) {
            throw std::domain_error("tridiagonal solver: zero pivot at row " +
                                    std::to_string(i));
        }
        c[i] = upper[i] / piv;
        d[i] = (rhs[i] - lower[i] * d[i - 1]) / piv;
    }
    std::vector<double> x(n);
    x[n - 1] = d[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        x[i] = d[i] - c[i] * x[i + 1];
    }
    return x;
}

std::vector<double> solve_cyclic_tridiagonal(const std::vector<double>& lower,
                                             const std::vector<double>& diag,
                                             const std::vector<double>& upper,
                                             const std::vector<double>& rhs) {
    check_sizes(lower, diag, upper, rhs);
    const std::size_t n = diag.size();
    if (n < 3) {
        throw std::invalid_argument("cyclic tridiagonal solver: system too small");
    }
    const double corner_top = lower[0];     // A[0][n-1]
    const double corner_bot = upper[n - 1]; // A[n-1][0]

    // Rank-one split A = T + u v^T with u = (gamma, 0, .., 0, corner_bot),
    // v = (1, 0, .., 0, corner_top/gamma); T stays tridiagonal.
    double gamma = -diag[0];
    if (std::abs(gamma) < 1e-300) gamma = 1.0;
    std::vector<double> mod_diag = diag;
    mod_diag[0] = diag[0] - gamma;
    mod_diag[n - 1] = diag[n - 1] - corner_top * corner_bot / gamma;

    std::vector<double> u(n, 0.0);
    u[0] = gamma;
    u[n - 1] = corner_bot;

    const std::vector<double> y = solve_tridiagonal(lower, mod_diag, upper, rhs);
    const std::vector<double> z = solve_tridiagonal(lower, mod_diag, upper, u);

    const double vy = y[0] + corner_top / gamma * y[n - 1];
    const double vz = z[0] + corner_top / gamma * z[n - 1];
    const double denom = 1.0 + vz;
    if (std::abs(denom) < 1e-300) {
        throw std::domain_error("cyclic tridiagonal solver: singular correction");
    }
    std::vector<double> x(n);
    const double factor = vy / denom;
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = y[i] - factor * z[i];
    }
    return x;
}

}  // namespace shapespace
