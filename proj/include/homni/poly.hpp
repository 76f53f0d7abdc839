#pragma once

#include "homni/errors.hpp"
#include "homni/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace homni {

/// Exact multivariate polynomial over Q in chart variables x1..xm.
///
/// Stored as a sorted map from exponent vectors to nonzero rational
/// coefficients, so structural equality is mathematical equality.
class Poly {
public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, Rational>;

    explicit Poly(int vars) : vars_(check_vars(vars)) {}

    static Poly constant(int vars, const Rational& c);
    static Poly variable(int vars, int i);  // 1-based

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    int total_degree() const;

    // Adds c * x^exp, dropping the term if the coefficient cancels.
    void add_term(const Exponents& exp, const Rational& c);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }

    bool operator==(const Poly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const { return terms_ < o.terms_; }

    /// Exact partial derivative with respect to x_i (1-based).
    Poly derivative(int i) const;

    /// Exact value at a rational point of length vars().
    Rational evaluate(const std::vector<Rational>& point) const;

    std::string str() const;

private:
    static int check_vars(int vars);
    void check_same_chart(const Poly& o) const;

    int vars_;
    TermMap terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

}  // namespace homni
