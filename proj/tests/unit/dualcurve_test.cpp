#include "hjps/dualcurve.hpp"

#include "hjps/classify.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace hjps;

namespace {

double gamma_of(double value) { return value; }

std::vector<TangentSample> perturbed_lines(std::vector<TangentSample> samples, double noise,
                                           std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-noise, noise);
    for (TangentSample& s : samples) {
        for (double& component : s.line) component += jitter(rng);
        const double norm = std::sqrt(s.line[0] * s.line[0] + s.line[1] * s.line[1] +
                                      s.line[2] * s.line[2]);
        for (double& component : s.line) component /= norm;
    }
    return samples;
}

}  // namespace

TEST_CASE("bordered Hessian of the Fermat cubic") {
    const Polynomial result = bordered_hessian(ast_cubic(Rational(0)));
    CHECK(result == parse_polynomial("-36*x3^2*x1*x2-36*x4^2*x0*x2-36*x5^2*x0*x1", 6));
    CHECK(bordered_hessian(Polynomial(3)).is_zero());
    CHECK_THROWS_AS(bordered_hessian(Polynomial(4)), std::invalid_argument);
}

TEST_CASE("bordered Hessian has bidegree (2,2)") {
    // One border row entry, one border column entry, two Hessian entries
    // (linear in x for a cubic): every monomial is quadratic in x and in p.
    const Polynomial result = bordered_hessian(ast_cubic(Rational(2)));
    CHECK(!result.is_zero());
    for (const auto& [m, c] : result.terms()) {
        CHECK(m[0] + m[1] + m[2] == 2);
        CHECK(m[3] + m[4] + m[5] == 2);
    }
}

TEST_CASE("bordered Hessian is sigma-equivariant for sigma-invariant cubics") {
    // Simultaneous rotation of the x-block and the p-block.
    const std::vector<int> rotation = {1, 2, 0, 4, 5, 3};
    for (long g = 0; g <= 3; ++g) {
        const Polynomial h = bordered_hessian(ast_cubic(Rational(g)));
        CHECK(h.permuted(rotation) == h);
    }
}

TEST_CASE("tangent samples lie on the curve and on their lines") {
    for (double gamma : {0.0, 1.0, 0.5}) {
        const auto samples = sample_tangents(gamma_of(gamma), 12, 42);
        CHECK(samples.size() == 12);
        const Polynomial cubic = ast_cubic(parse_rational(gamma == 0.5 ? "1/2" : gamma == 0.0 ? "0" : "1"));
        for (const TangentSample& s : samples) {
            const double on_curve =
                cubic.evaluate(std::vector<double>{s.point[0], s.point[1], s.point[2]});
            CHECK(std::abs(on_curve) < 1e-12);
            const double euler = s.line[0] * s.point[0] + s.line[1] * s.point[1] +
                                 s.line[2] * s.point[2];
            CHECK(std::abs(euler) < 1e-10);
            const double norm = std::sqrt(s.line[0] * s.line[0] + s.line[1] * s.line[1] +
                                          s.line[2] * s.line[2]);
            CHECK(std::abs(norm - 1.0) < 1e-12);
        }
    }
    const Polynomial unit_cubic = ast_cubic(Rational(1));
    for (const TangentSample& s : sample_tangents(1.0, 20, 8))
        CHECK(std::abs(unit_cubic.evaluate(std::vector<double>{s.point[0], s.point[1],
                                                               s.point[2]})) < 1e-12);

    CHECK(sample_tangents(1.0, 0, 5).empty());
    CHECK_THROWS_AS(sample_tangents(-3.0, 4, 1), std::domain_error);
}

TEST_CASE("sampling is deterministic per seed") {
    const auto a = sample_tangents(1.0, 8, 123);
    const auto b = sample_tangents(1.0, 8, 123);
    CHECK(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].point == b[i].point);
        CHECK(a[i].line == b[i].line);
    }
}

TEST_CASE("the Fermat dual is (1,-1,0,0)") {
    const auto samples = sample_tangents(0.0, 24, 42);
    const SexticFit fit = fit_dual_sextic(samples);
    CHECK(fit.residual < 1e-8);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const double sign = fit.coeffs[0] >= 0 ? 1.0 : -1.0;
    CHECK(std::abs(sign * fit.coeffs[0] - inv_sqrt2) < 1e-6);
    CHECK(std::abs(sign * fit.coeffs[1] + inv_sqrt2) < 1e-6);
    CHECK(std::abs(fit.coeffs[2]) < 1e-6);
    CHECK(std::abs(fit.coeffs[3]) < 1e-6);
}

TEST_CASE("duals of smooth AST cubics stay in the family") {
    for (double gamma : {1.0, 2.0, 0.5}) {
        const auto samples = sample_tangents(gamma, 24, 7);
        const SexticFit fit = fit_dual_sextic(samples);
        CHECK(fit.residual < 1e-8);
    }
}

TEST_CASE("residual stays at the noise floor as samples grow") {
    const SexticFit fit8 = fit_dual_sextic(sample_tangents(1.0, 8, 11));
    const SexticFit fit16 = fit_dual_sextic(sample_tangents(1.0, 16, 11));
    const SexticFit fit32 = fit_dual_sextic(sample_tangents(1.0, 32, 11));
    CHECK(fit8.residual < 1e-8);
    CHECK(fit16.residual < 1e-8);
    CHECK(fit32.residual < 1e-8);
    CHECK(fit32.residual <= 50.0 * std::max(fit8.residual, 1e-13));
}

TEST_CASE("noisy lines are rejected") {
    const auto noisy = perturbed_lines(sample_tangents(1.0, 24, 7), 1e-3, 99);
    const SexticFit fit = fit_dual_sextic(noisy);
    CHECK(fit.residual > 1e-4);
}

TEST_CASE("fit input validation") {
    CHECK_THROWS_AS(fit_dual_sextic(sample_tangents(1.0, 4, 3)), std::invalid_argument);
    // Eight copies of one sample leave the matrix rank 1.
    const auto one = sample_tangents(1.0, 1, 3);
    std::vector<TangentSample> repeated(8, one[0]);
    CHECK_THROWS_AS(fit_dual_sextic(repeated), std::domain_error);
}

TEST_CASE("rationalized Fermat fit lies in the classified span") {
    const SexticFit fit = fit_dual_sextic(sample_tangents(0.0, 24, 42));
    // Clear small denominators: scale so the largest magnitude is 1, then
    // round to the nearest rational with denominator <= 16.
    double scale = 0.0;
    for (double c : fit.coeffs) scale = std::max(scale, std::abs(c));
    std::array<Rational, 4> exact;
    for (std::size_t i = 0; i < 4; ++i) {
        const double scaled = fit.coeffs[i] / scale;
        long best_num = 0;
        long best_den = 1;
        double best_error = 1e9;
        for (long den = 1; den <= 16; ++den) {
            const long num = std::lround(scaled * static_cast<double>(den));
            const double error = std::abs(scaled - static_cast<double>(num) / den);
            if (error < best_error - 1e-15) {
                best_error = error;
                best_num = num;
                best_den = den;
            }
        }
        CHECK(best_error < 1e-6);
        exact[i] = make_rational(best_num, best_den);
    }
    const Polynomial candidate = dual_sextic(exact[0], exact[1], exact[2], exact[3]);
    CHECK(in_orbit_span(h_basis(3, 2), candidate));
    // And it is the expected direction up to sign.
    const Rational lead = exact[0];
    CHECK((exact == std::array<Rational, 4>{lead, -lead, Rational(0), Rational(0)}));
}
