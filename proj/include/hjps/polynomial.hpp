#pragma once

#include "hjps/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hjps {

// Exponent vector of a monomial in a fixed ambient ring K[x_0,...,x_{n-1}].
// The vector length is the ambient variable count n.
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}

    static Monomial unit(int vars) { return Monomial(std::vector<int>(vars, 0)); }
    static Monomial variable(int vars, int index);

    int vars() const { return static_cast<int>(exponents.size()); }
    int degree() const;
    int operator[](int i) const { return exponents[static_cast<std::size_t>(i)]; }

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    Monomial divided_by(const Monomial& other) const;

    // Exponent of x_i moves to x_{i+1 mod n}.
    Monomial rotated() const;
    // Variable relabeling x_i -> x_{image[i]}; image must be a permutation.
    Monomial permuted(const std::vector<int>& image) const;
    // Same exponents in a larger ambient ring, new variables unused.
    Monomial padded(int vars) const;

    bool operator==(const Monomial&) const = default;
};

// Graded lexicographic order: compare total degree first, then the exponent
// vectors lexicographically.
bool grlex_less(const Monomial& a, const Monomial& b);

// Map comparator putting the grlex-largest monomial first, so that term-map
// iteration yields the canonical printing order and begin() is the leading
// term.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexDescending>;

    Polynomial() = default;
    explicit Polynomial(int vars) : vars_(vars) {}

    static Polynomial constant(int vars, const Rational& value);
    static Polynomial variable(int vars, int index);
    static Polynomial term(const Monomial& m, const Rational& coefficient);

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    // -1 for the zero polynomial.
    int total_degree() const;
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;
    const std::pair<const Monomial, Rational>& leading_term() const;

    // Accumulates and drops the monomial if the coefficient cancels to zero.
    void add_term(const Monomial& m, const Rational& coefficient);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);

    Polynomial derivative(int var) const;
    Rational evaluate(const std::vector<Rational>& point) const;
    double evaluate(const std::vector<double>& point) const;
    Polynomial permuted(const std::vector<int>& image) const;
    Polynomial padded(int vars) const;

    bool operator==(const Polynomial&) const = default;

private:
    int vars_ = 0;
    TermMap terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& scalar, Polynomial p);
Polynomial operator*(Polynomial p, const Rational& scalar);
Polynomial pow(const Polynomial& base, int exponent);

// Quotient a/b when b divides a exactly; throws std::domain_error otherwise.
Polynomial exact_divide(Polynomial numerator, const Polynomial& denominator);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Grammar (whitespace insignificant):
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   coeff  := integer ['/' positive-integer]
//   factor := 'x' index ['^' positive-integer]
Polynomial parse_polynomial(const std::string& text, int vars);

// Canonical form: grlex-descending terms, '+'/'-' separators, no spaces,
// no redundant "1*". parse(to_string(p)) == p.
std::string to_string(const Polynomial& p);

}  // namespace hjps
