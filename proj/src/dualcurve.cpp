#include "hjps/dualcurve.hpp"

#include "hjps/polymatrix.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace hjps {

Polynomial bordered_hessian(const Polynomial& p) {
    if (p.vars() != 3) throw std::invalid_argument("bordered Hessian needs a plane curve");
    PolyMatrix bordered(4, 4, 6);
    const Polynomial lifted = p.padded(6);
    for (int i = 0; i < 3; ++i) {
        const Polynomial border = Polynomial::variable(6, 3 + i);
        bordered.at(0, i + 1) = border;
        bordered.at(i + 1, 0) = border;
        for (int j = 0; j < 3; ++j) bordered.at(i + 1, j + 1) = lifted.derivative(i).derivative(j);
    }
    return det(bordered);
}

namespace {

double cubic_in_x2(double gamma, double x0, double x1, double t) {
    return t * t * t + gamma * x0 * x1 * t + x0 * x0 * x0 + x1 * x1 * x1;
}

double cubic_in_x2_slope(double gamma, double x0, double x1, double t) {
    return 3.0 * t * t + gamma * x0 * x1;
}

// Real roots of t^3 + p t + q via the companion matrix.
std::vector<double> real_depressed_roots(double p, double q) {
    Eigen::Matrix3d companion = Eigen::Matrix3d::Zero();
    companion(0, 2) = -q;
    companion(1, 2) = -p;
    companion(1, 0) = 1.0;
    companion(2, 1) = 1.0;
    const Eigen::EigenSolver<Eigen::Matrix3d> solver(companion);
    std::vector<double> roots;
    for (int i = 0; i < 3; ++i) {
        const std::complex<double> root = solver.eigenvalues()(i);
        if (std::abs(root.imag()) < 1e-8 * (1.0 + std::abs(root.real())))
            roots.push_back(root.real());
    }
    return roots;
}

}  // namespace

std::vector<TangentSample> sample_tangents(double gamma, int count, std::uint64_t seed) {
    if (count < 0) throw std::invalid_argument("negative sample count");
    if (std::abs(gamma * gamma * gamma + 27.0) < 1e-9)
        throw std::domain_error("singular cubic: gamma^3 = -27");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

    std::vector<TangentSample> samples;
    samples.reserve(static_cast<std::size_t>(count));
    int attempts = 0;
    const int attempt_limit = 200 + 100 * count;
    while (static_cast<int>(samples.size()) < count) {
        if (++attempts > attempt_limit) throw std::runtime_error("tangent sampling did not converge");
        const double theta = angle(rng);
        const double x0 = std::cos(theta);
        const double x1 = std::sin(theta);
        bool found = false;
        double t = 0.0;
        for (double start : real_depressed_roots(gamma * x0 * x1, x0 * x0 * x0 + x1 * x1 * x1)) {
            t = start;
            // Safeguarded Newton refinement of the companion-matrix root.
            for (int iter = 0; iter < 64; ++iter) {
                const double value = cubic_in_x2(gamma, x0, x1, t);
                if (std::abs(value) < 1e-14) break;
                const double slope = cubic_in_x2_slope(gamma, x0, x1, t);
                if (std::abs(slope) < 1e-12) break;
                const double step = value / slope;
                if (!std::isfinite(step) || std::abs(step) > 1.0) break;
                t -= step;
            }
            if (std::abs(cubic_in_x2(gamma, x0, x1, t)) < 1e-12) {
                found = true;
                break;
            }
        }
        if (!found) continue;
        const double g0 = 3.0 * x0 * x0 + gamma * x1 * t;
        const double g1 = 3.0 * x1 * x1 + gamma * x0 * t;
        const double g2 = 3.0 * t * t + gamma * x0 * x1;
        const double norm = std::sqrt(g0 * g0 + g1 * g1 + g2 * g2);
        if (norm < 1e-8) continue;  // too close to a flex/singular configuration
        samples.push_back(TangentSample{{x0, x1, t}, {g0 / norm, g1 / norm, g2 / norm}});
    }
    return samples;
}

double evaluate_sextic_family(const std::array<double, 4>& coeffs,
                              const std::array<double, 3>& line) {
    const double p0 = line[0];
    const double p1 = line[1];
    const double p2 = line[2];
    const double c0 = p0 * p0 * p0;
    const double c1 = p1 * p1 * p1;
    const double c2 = p2 * p2 * p2;
    const double basis_a = (c0 * c0 + c1 * c1 + c2 * c2) / 6.0;
    const double basis_b = (c0 * c1 + c0 * c2 + c1 * c2) / 3.0;
    const double basis_c = p0 * p1 * p2 * (c0 + c1 + c2);
    const double basis_d = (p0 * p1 * p2) * (p0 * p1 * p2) / 2.0;
    return coeffs[0] * basis_a + coeffs[1] * basis_b + coeffs[2] * basis_c + coeffs[3] * basis_d;
}

SexticFit fit_dual_sextic(const std::vector<TangentSample>& samples) {
    const int count = static_cast<int>(samples.size());
    if (count < 8) throw std::invalid_argument("need at least 8 tangent samples");
    Eigen::MatrixXd evaluations(count, 4);
    for (int i = 0; i < count; ++i) {
        const auto& p = samples[static_cast<std::size_t>(i)].line;
        const double c0 = p[0] * p[0] * p[0];
        const double c1 = p[1] * p[1] * p[1];
        const double c2 = p[2] * p[2] * p[2];
        evaluations(i, 0) = (c0 * c0 + c1 * c1 + c2 * c2) / 6.0;
        evaluations(i, 1) = (c0 * c1 + c0 * c2 + c1 * c2) / 3.0;
        evaluations(i, 2) = p[0] * p[1] * p[2] * (c0 + c1 + c2);
        evaluations(i, 3) = (p[0] * p[1] * p[2]) * (p[0] * p[1] * p[2]) / 2.0;
    }
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(evaluations,
                                                Eigen::ComputeThinU | Eigen::ComputeFullV);
    const Eigen::VectorXd& singular = svd.singularValues();
    if (singular(2) <= 1e-13 * singular(0))
        throw std::domain_error("degenerate sample matrix: rank < 3");
    const Eigen::Vector4d direction = svd.matrixV().col(3);

    SexticFit fit;
    for (int i = 0; i < 4; ++i) fit.coeffs[static_cast<std::size_t>(i)] = direction(i);
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
        const double row_scale = std::max(evaluations.row(i).norm(), 1e-300);
        worst = std::max(worst, std::abs(evaluations.row(i).dot(direction)) / row_scale);
    }
    fit.residual = worst;
    return fit;
}

}  // namespace hjps
