#include "hjps/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hjps {

namespace {

void require_ring_size(int n) {
    if (n < 3) throw std::invalid_argument("need at least 3 variables");
    if (n > 8) throw std::invalid_argument("variable count exceeds desk scale (8)");
}

void require_positive_r(long r) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
}

// Visits all nonnegative integer vectors of the given length summing to
// total, in lexicographic order.
void for_each_composition(int length, long total,
                          const std::function<void(const std::vector<long>&)>& visit) {
    std::vector<long> current(static_cast<std::size_t>(length), 0);
    std::function<void(int, long)> recurse = [&](int index, long remaining) {
        if (index == length - 1) {
            current[static_cast<std::size_t>(index)] = remaining;
            visit(current);
            return;
        }
        for (long v = 0; v <= remaining; ++v) {
            current[static_cast<std::size_t>(index)] = v;
            recurse(index + 1, remaining - v);
        }
    };
    if (length > 0 && total >= 0) recurse(0, total);
}

long composition_count_estimate(int length, long total) {
    // C(total + length - 1, length - 1), saturating.
    long double estimate = 1.0L;
    for (int i = 1; i < length; ++i) estimate *= static_cast<long double>(total + i) / i;
    return estimate > 4e18L ? static_cast<long>(4e18) : static_cast<long>(estimate);
}

bool satisfies_cyclic_rows(const std::vector<long>& s, int n, long r) {
    for (int i = 0; i < n; ++i) {
        const long lhs = s[static_cast<std::size_t>(((n - i - 1) % n + n) % n)] -
                         s[static_cast<std::size_t>((n - i) % n)] + r;
        if (lhs < 0) return false;
    }
    return true;
}

}  // namespace

long tau_offset(int n) {
    require_ring_size(n);
    return n % 2 == 0 ? n / 2 : 0;
}

long weight_target(int n, long r) {
    require_ring_size(n);
    require_positive_r(r);
    return static_cast<long>(n) * (n - 1) / 2 * r - tau_offset(n);
}

ConstraintSystem constraint_system(int n, long r) {
    require_ring_size(n);
    require_positive_r(r);
    ConstraintSystem system;
    system.n = n;
    for (int i = 0; i < n; ++i) {
        std::vector<long> row(static_cast<std::size_t>(n) + 1, 0);
        row[0] = r;
        row[static_cast<std::size_t>((n - i - 1) % n) + 1] += 1;
        row[static_cast<std::size_t>((n - i) % n) + 1] -= 1;
        system.rows.push_back(std::move(row));
    }
    system.weight = weight_target(n, r);
    return system;
}

std::vector<std::array<long, 2>> triangle_lattice_points(long r) {
    require_positive_r(r);
    std::vector<std::array<long, 2>> points;
    for (long x = 0; x <= 2 * r; ++x)
        for (long y = 0; y <= 3 * r; ++y)
            if (x + y <= 3 * r && 2 * x + y <= 4 * r && x + 2 * y >= 2 * r && -x + y <= r)
                points.push_back({x, y});
    return points;
}

long card_s1(long r) {
    require_positive_r(r);
    return r % 2 == 0 ? (3 * r * r + 6 * r + 4) / 4 : (3 * r * r + 6 * r + 3) / 4;
}

long card_s2(long r) {
    require_positive_r(r);
    return r % 2 == 0 ? 3 * r * r / 4 : (3 * r * r + 1) / 4;
}

long dim_h3(long s) {
    if (s < -1) throw std::invalid_argument("dimension index must be >= -1");
    if (s == -1) return 1;
    return (3 * s * s + 9 * s + 8) / 2;
}

std::vector<long> poincare_series(int max_power) {
    if (max_power < 0) throw std::invalid_argument("negative series length");
    const std::size_t size = static_cast<std::size_t>(max_power) + 1;
    // denominator (1-t^3)^3 = 1 - 3t^3 + 3t^6 - t^9
    const std::vector<long> denominator = {1, 0, 0, -3, 0, 0, 3, 0, 0, -1};
    std::vector<long> inverse(size, 0);
    inverse[0] = 1;
    for (std::size_t k = 1; k < size; ++k) {
        long acc = 0;
        for (std::size_t j = 1; j < denominator.size() && j <= k; ++j)
            acc += denominator[j] * inverse[k - j];
        inverse[k] = -acc;
    }
    const std::vector<long> numerator = {1, 0, 0, 1, 0, 0, 1};
    std::vector<long> series(size, 0);
    for (std::size_t k = 0; k < size; ++k)
        for (std::size_t j = 0; j < numerator.size() && j <= k; ++j)
            series[k] += numerator[j] * inverse[k - j];
    return series;
}

std::vector<long> poincare_coefficients(int max_r) {
    if (max_r < 0) throw std::invalid_argument("negative series length");
    const std::vector<long> series = poincare_series(3 * max_r);
    std::vector<long> out;
    for (int r = 0; r <= max_r; ++r) out.push_back(series[static_cast<std::size_t>(3 * r)]);
    return out;
}

std::vector<std::vector<long>> enumerate_compositions(int n, long r) {
    const long target = weight_target(n, r);
    if (composition_count_estimate(n, target) > 50'000'000L)
        throw std::invalid_argument("composition search space exceeds desk scale");
    std::vector<std::vector<long>> out;
    for_each_composition(n, target, [&](const std::vector<long>& s) {
        if (satisfies_cyclic_rows(s, n, r)) out.push_back(s);
    });
    return out;
}

Monomial composition_exponents(int n, long r, const std::vector<long>& s) {
    require_ring_size(n);
    require_positive_r(r);
    if (static_cast<int>(s.size()) != n) throw std::invalid_argument("s-vector length mismatch");
    std::vector<int> exponents(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        const long alpha = s[static_cast<std::size_t>((n - i - 1) % n)] -
                           s[static_cast<std::size_t>((n - i) % n)] + r;
        if (alpha < 0)
            throw std::domain_error("s-vector violates constraint c_" + std::to_string(i));
        exponents[static_cast<std::size_t>(i)] = static_cast<int>(alpha);
    }
    return Monomial(exponents);
}

std::vector<Monomial> monomial_filter(int n, long r) {
    require_ring_size(n);
    require_positive_r(r);
    const long degree = static_cast<long>(n) * r;
    if (degree > 24) throw std::invalid_argument("n*r exceeds desk scale (24)");
    const long l = tau_offset(n);
    std::vector<Monomial> out;
    for_each_composition(n, degree, [&](const std::vector<long>& alpha) {
        for (int k = 0; k < n; ++k) {
            long row = 0;
            for (int j = 0; j < n; ++j)
                row += static_cast<long>((j + k) % n) * alpha[static_cast<std::size_t>(j)];
            if (row % n != l) return;
        }
        std::vector<int> exponents(alpha.begin(), alpha.end());
        out.emplace_back(std::move(exponents));
    });
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return grlex_less(b, a);
    });
    return out;
}

std::vector<Monomial> triangle_monomials(long r) {
    std::vector<Monomial> out;
    for (const auto& [sp, spp] : triangle_lattice_points(r)) {
        const long a0 = 4 * r - 2 * sp - spp;
        const long a1 = -2 * r + sp + 2 * spp;
        const long a2 = r + sp - spp;
        out.push_back(Monomial({static_cast<int>(a0), static_cast<int>(a1), static_cast<int>(a2)}));
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return grlex_less(b, a);
    });
    return out;
}

long generating_coefficient(const ConstraintSystem& c, long weight) {
    if (weight < 0) throw std::invalid_argument("negative weight");
    if (c.n < 1) throw std::invalid_argument("empty constraint system");
    if (composition_count_estimate(c.n, weight) > 50'000'000L)
        throw std::invalid_argument("weight slice exceeds desk scale");
    long count = 0;
    for_each_composition(c.n, weight, [&](const std::vector<long>& lambda) {
        for (const std::vector<long>& row : c.rows) {
            long value = row[0];
            for (int j = 0; j < c.n; ++j)
                value += row[static_cast<std::size_t>(j) + 1] * lambda[static_cast<std::size_t>(j)];
            if (value < 0) return;
        }
        ++count;
    });
    return count;
}

const char* to_string(CountMethod method) {
    switch (method) {
        case CountMethod::closed_form: return "closed-form";
        case CountMethod::triangle: return "triangle";
        case CountMethod::compositions: return "compositions";
        case CountMethod::monomial_filter: return "monomial-filter";
    }
    return "unknown";
}

std::optional<CountMethod> parse_count_method(const std::string& name) {
    if (name == "closed-form") return CountMethod::closed_form;
    if (name == "triangle") return CountMethod::triangle;
    if (name == "compositions") return CountMethod::compositions;
    if (name == "monomial-filter") return CountMethod::monomial_filter;
    return std::nullopt;
}

CountReport count_lattice_points(int n, long r, CountMethod method) {
    require_ring_size(n);
    require_positive_r(r);
    CountReport report{n, r, method, 0};
    switch (method) {
        case CountMethod::closed_form:
            if (n != 3) throw std::invalid_argument("closed-form counts exist only for n=3");
            report.count = card_s1(r) + card_s2(r);
            break;
        case CountMethod::triangle:
            if (n != 3) throw std::invalid_argument("the triangle scan is the n=3 parametrization");
            report.count = static_cast<long>(triangle_lattice_points(r).size());
            break;
        case CountMethod::compositions:
            report.count = static_cast<long>(enumerate_compositions(n, r).size());
            break;
        case CountMethod::monomial_filter:
            report.count = static_cast<long>(monomial_filter(n, r).size());
            break;
    }
    return report;
}

std::vector<std::vector<Rational>> eliminated_rows(int n, long r) {
    require_ring_size(n);
    require_positive_r(r);
    const long target = weight_target(n, r);
    std::vector<std::vector<Rational>> rows;
    // The n cyclic rows with s_{n-1} := N - (s_0 + ... + s_{n-2}).
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
        row[0] = r;
        const int plus = (n - i - 1) % n;
        const int minus = (n - i) % n;
        if (plus == n - 1) {
            row[0] += target;
            for (int j = 0; j < n - 1; ++j) row[static_cast<std::size_t>(j) + 1] -= 1;
        } else {
            row[static_cast<std::size_t>(plus) + 1] += 1;
        }
        if (minus == n - 1) {
            row[0] -= target;
            for (int j = 0; j < n - 1; ++j) row[static_cast<std::size_t>(j) + 1] += 1;
        } else {
            row[static_cast<std::size_t>(minus) + 1] -= 1;
        }
        rows.push_back(std::move(row));
    }
    // s_{n-1} >= 0 itself.
    std::vector<Rational> last(static_cast<std::size_t>(n), Rational(0));
    last[0] = target;
    for (int j = 0; j < n - 1; ++j) last[static_cast<std::size_t>(j) + 1] = -1;
    rows.push_back(std::move(last));
    return rows;
}

VertexCheck check_polytope_vertices(int n, long r,
                                    const std::vector<std::vector<Rational>>& vertices) {
    require_ring_size(n);
    require_positive_r(r);
    const int dim = n - 1;
    for (const auto& v : vertices)
        if (static_cast<int>(v.size()) != dim)
            throw std::invalid_argument("vertex dimension mismatch: expected " +
                                        std::to_string(dim) + " coordinates");
    const auto rows = eliminated_rows(n, r);
    std::vector<int> permutation(static_cast<std::size_t>(dim));
    std::iota(permutation.begin(), permutation.end(), 0);
    do {
        bool all_ok = true;
        for (const auto& v : vertices) {
            int active = 0;
            for (const auto& row : rows) {
                Rational value = row[0];
                for (int j = 0; j < dim; ++j)
                    value += row[static_cast<std::size_t>(j) + 1] *
                             v[static_cast<std::size_t>(permutation[static_cast<std::size_t>(j)])];
                if (value < 0) {
                    all_ok = false;
                    break;
                }
                if (value == 0) ++active;
            }
            if (!all_ok || active < dim) {
                all_ok = false;
                break;
            }
        }
        if (all_ok) return VertexCheck{true, permutation};
    } while (std::next_permutation(permutation.begin(), permutation.end()));
    return VertexCheck{false, {}};
}

std::vector<std::vector<Rational>> reference_vertices(int n, long r) {
    require_positive_r(r);
    if (n == 3) {
        return {{Rational(0), Rational(r)}, {Rational(r), Rational(2 * r)},
                {Rational(2 * r), Rational(0)}};
    }
    if (n == 4) {
        const Rational half = make_rational(1, 2);
        const Rational two_thirds = make_rational(2, 3);
        return {
            {-half, Rational(r) - half, Rational(2 * r) - half},
            {Rational(r) - two_thirds, Rational(2 * r) - two_thirds, Rational(3 * r) - two_thirds},
            {Rational(r), Rational(2 * r - 1), Rational(3 * r - 1)},
            {Rational(r), Rational(2 * r), Rational(3 * r - 2)},
            {Rational(2 * r) - half, Rational(3 * r) - half, -half},
            {Rational(3 * r) - half, -half, Rational(r) - half},
        };
    }
    throw std::invalid_argument("reference vertices known only for n in {3,4}");
}

}  // namespace hjps
