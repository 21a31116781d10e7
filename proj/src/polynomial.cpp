#include "hjps/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace hjps {

namespace {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
    if (a.vars() != b.vars())
        throw std::invalid_argument("mismatched variable counts: " + std::to_string(a.vars()) +
                                    " vs " + std::to_string(b.vars()));
}

}  // namespace

Monomial Monomial::variable(int vars, int index) {
    if (index < 0 || index >= vars) throw std::out_of_range("variable index out of range");
    Monomial m = unit(vars);
    m.exponents[static_cast<std::size_t>(index)] = 1;
    return m;
}

int Monomial::degree() const {
    int total = 0;
    for (int e : exponents) total += e;
    return total;
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (exponents.size() != other.exponents.size())
        throw std::invalid_argument("mismatched variable counts in monomial product");
    Monomial out = *this;
    for (std::size_t i = 0; i < exponents.size(); ++i) out.exponents[i] += other.exponents[i];
    return out;
}

bool Monomial::divides(const Monomial& other) const {
    if (exponents.size() != other.exponents.size()) return false;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] > other.exponents[i]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& other) const {
    if (!other.divides(*this)) throw std::domain_error("monomial quotient is not a monomial");
    Monomial out = *this;
    for (std::size_t i = 0; i < exponents.size(); ++i) out.exponents[i] -= other.exponents[i];
    return out;
}

Monomial Monomial::rotated() const {
    const std::size_t n = exponents.size();
    Monomial out = *this;
    for (std::size_t i = 0; i < n; ++i) out.exponents[(i + 1) % n] = exponents[i];
    return out;
}

Monomial Monomial::permuted(const std::vector<int>& image) const {
    if (image.size() != exponents.size())
        throw std::invalid_argument("permutation size mismatch");
    Monomial out = unit(vars());
    for (std::size_t i = 0; i < exponents.size(); ++i)
        out.exponents[static_cast<std::size_t>(image[i])] = exponents[i];
    return out;
}

Monomial Monomial::padded(int vars) const {
    if (vars < this->vars()) throw std::invalid_argument("cannot pad to fewer variables");
    Monomial out = *this;
    out.exponents.resize(static_cast<std::size_t>(vars), 0);
    return out;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da < db;
    return a.exponents < b.exponents;
}

Polynomial Polynomial::constant(int vars, const Rational& value) {
    Polynomial p(vars);
    p.add_term(Monomial::unit(vars), value);
    return p;
}

Polynomial Polynomial::variable(int vars, int index) {
    Polynomial p(vars);
    p.add_term(Monomial::variable(vars, index), 1);
    return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& coefficient) {
    Polynomial p(m.vars());
    p.add_term(m, coefficient);
    return p;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.degree();  // grlex-descending: leading term is maximal
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Monomial, Rational>& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    return *terms_.begin();
}

void Polynomial::add_term(const Monomial& m, const Rational& coefficient) {
    if (m.vars() != vars_)
        throw std::invalid_argument("monomial does not live in this ring");
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.emplace(m, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out(vars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require_same_ring(*this, other);
    if (this == &other) {
        for (auto& [m, c] : terms_) c *= 2;
        return *this;
    }
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    require_same_ring(*this, other);
    if (this == &other) {
        terms_.clear();
        return *this;
    }
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= vars_) throw std::out_of_range("derivative index out of range");
    Polynomial out(vars_);
    for (const auto& [m, c] : terms_) {
        const int e = m[var];
        if (e == 0) continue;
        Monomial d = m;
        d.exponents[static_cast<std::size_t>(var)] = e - 1;
        out.add_term(d, c * e);
    }
    return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != vars_)
        throw std::invalid_argument("evaluation point has wrong length");
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational value = c;
        for (int i = 0; i < vars_; ++i)
            for (int k = 0; k < m[i]; ++k) value *= point[static_cast<std::size_t>(i)];
        total += value;
    }
    return total;
}

double Polynomial::evaluate(const std::vector<double>& point) const {
    if (static_cast<int>(point.size()) != vars_)
        throw std::invalid_argument("evaluation point has wrong length");
    double total = 0.0;
    for (const auto& [m, c] : terms_) {
        double value = to_double(c);
        for (int i = 0; i < vars_; ++i)
            for (int k = 0; k < m[i]; ++k) value *= point[static_cast<std::size_t>(i)];
        total += value;
    }
    return total;
}

Polynomial Polynomial::permuted(const std::vector<int>& image) const {
    Polynomial out(vars_);
    for (const auto& [m, c] : terms_) out.add_term(m.permuted(image), c);
    return out;
}

Polynomial Polynomial::padded(int vars) const {
    Polynomial out(vars);
    for (const auto& [m, c] : terms_) out.add_term(m.padded(vars), c);
    return out;
}

Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
}

Polynomial operator-(Polynomial a, const Polynomial& b) {
    a -= b;
    return a;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a, b);
    Polynomial out(a.vars());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial operator*(const Rational& scalar, Polynomial p) {
    p *= scalar;
    return p;
}

Polynomial operator*(Polynomial p, const Rational& scalar) {
    p *= scalar;
    return p;
}

Polynomial pow(const Polynomial& base, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial out = Polynomial::constant(base.vars(), 1);
    for (int i = 0; i < exponent; ++i) out = out * base;
    return out;
}

Polynomial exact_divide(Polynomial numerator, const Polynomial& denominator) {
    require_same_ring(numerator, denominator);
    if (denominator.is_zero()) throw std::domain_error("division by zero polynomial");
    Polynomial quotient(numerator.vars());
    while (!numerator.is_zero()) {
        const auto& [lm_num, lc_num] = numerator.leading_term();
        const auto& [lm_den, lc_den] = denominator.leading_term();
        if (!lm_den.divides(lm_num))
            throw std::domain_error("polynomial division is not exact");
        const Monomial m = lm_num.divided_by(lm_den);
        const Rational c = lc_num / lc_den;
        quotient.add_term(m, c);
        numerator -= denominator * Polynomial::term(m, c);
    }
    return quotient;
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

struct Parser {
    const std::string& text;
    const int vars;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos); }

    Integer digits() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return Integer(text.substr(start, pos - start));
    }

    Rational coeff() {
        const Integer num = digits();
        skip_ws();
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            skip_ws();
            const std::size_t den_pos = pos;
            const Integer den = digits();
            if (den == 0) throw ParseError("denominator must be positive", den_pos);
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(num);
    }

    void factor(std::vector<int>& exponents) {
        skip_ws();
        if (pos >= text.size() || text[pos] != 'x') fail("expected variable");
        ++pos;
        const std::size_t index_pos = pos;
        const Integer index = digits();
        if (index >= vars) throw ParseError("variable index exceeds ambient ring", index_pos);
        int exponent = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_ws();
            const std::size_t exp_pos = pos;
            const Integer e = digits();
            if (e == 0) throw ParseError("exponent must be positive", exp_pos);
            if (e > 4096) throw ParseError("exponent too large", exp_pos);
            exponent = static_cast<int>(e.get_si());
        }
        exponents[static_cast<std::size_t>(index.get_si())] += exponent;
    }

    void term(Polynomial& acc, bool negative) {
        skip_ws();
        if (pos >= text.size()) fail("expected term");
        Rational c = 1;
        std::vector<int> exponents(static_cast<std::size_t>(vars), 0);
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            c = coeff();
        } else if (text[pos] == 'x') {
            factor(exponents);
        } else {
            fail("expected coefficient or variable");
        }
        skip_ws();
        while (pos < text.size() && text[pos] == '*') {
            ++pos;
            factor(exponents);
            skip_ws();
        }
        acc.add_term(Monomial(exponents), negative ? Rational(-c) : c);
    }

    Polynomial parse() {
        Polynomial acc(vars);
        skip_ws();
        bool negative = false;
        if (pos < text.size() && text[pos] == '-') {
            negative = true;
            ++pos;
        }
        term(acc, negative);
        skip_ws();
        while (pos < text.size()) {
            const char c = text[pos];
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos;
            term(acc, c == '-');
            skip_ws();
        }
        return acc;
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int vars) {
    if (vars < 0) throw std::invalid_argument("negative variable count");
    Parser parser{text, vars};
    return parser.parse();
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        const Rational magnitude = abs(c);
        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? '-' : '+';
        }
        std::string factors;
        for (int i = 0; i < m.vars(); ++i) {
            if (m[i] == 0) continue;
            if (!factors.empty()) factors += '*';
            factors += 'x';
            factors += std::to_string(i);
            if (m[i] > 1) {
                factors += '^';
                factors += std::to_string(m[i]);
            }
        }
        if (factors.empty()) {
            out += to_string(magnitude);
        } else if (magnitude == 1) {
            out += factors;
        } else {
            out += to_string(magnitude);
            out += '*';
            out += factors;
        }
    }
    return out;
}

}  // namespace hjps
