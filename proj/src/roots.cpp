#include "blocktf/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace blocktf {

namespace {

std::complex<double> horner(const std::vector<double>& c, std::complex<double> z) {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

} // namespace

std::vector<std::complex<double>> roots(const Poly& p, double tol) {
    if (p.degree() < 1) throw MathError("root finding needs degree >= 1");

    // monic double image
    const int n = p.degree();
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    double lead = rat_to_double(p.lead());
    for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = rat_to_double(p.coeff(static_cast<std::size_t>(i))) / lead;

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[static_cast<std::size_t>(i)];

    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw MathError("companion eigenvalue iteration did not converge");

    std::vector<std::complex<double>> rts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rts[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);

    // derivative of the monic image, for the polish
    std::vector<double> dc(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) dc[static_cast<std::size_t>(i - 1)] = i * c[static_cast<std::size_t>(i)];

    for (auto& z : rts) {
        for (int it = 0; it < 3; ++it) {
            std::complex<double> f = horner(c, z);
            std::complex<double> df = horner(dc, z);
            if (std::abs(df) == 0.0) break;
            std::complex<double> next = z - f / df;
            if (std::abs(horner(c, next)) < std::abs(f))
                z = next;
            else
                break;
        }
    }

    // residual acceptance against the scale of the input
    double norm_inf = 0.0;
    for (const Rat& q : p.coeffs()) norm_inf = std::max(norm_inf, std::abs(rat_to_double(q)));
    for (const auto& z : rts) {
        double scale = norm_inf * std::pow(std::max(1.0, std::abs(z)), n);
        if (std::abs(horner(c, z)) * std::abs(lead) > tol * scale)
            throw MathError("root residual above tolerance for " + p.to_string());
    }

    // canonical order so downstream clustering is deterministic
    std::sort(rts.begin(), rts.end(), [](const std::complex<double>& a, const std::complex<double>& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return rts;
}

} // namespace blocktf
