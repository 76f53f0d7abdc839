#include "homni/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace homni {

int Poly::check_vars(int vars) {
    if (vars < 1) throw DimensionError("chart dimension must be >= 1");
    return vars;
}

void Poly::check_same_chart(const Poly& o) const {
    if (vars_ != o.vars_)
        throw DimensionError("polynomials over different chart dimensions: " +
                             std::to_string(vars_) + " vs " + std::to_string(o.vars_));
}

Poly Poly::constant(int vars, const Rational& c) {
    Poly p(vars);
    p.add_term(Exponents(static_cast<std::size_t>(vars), 0u), c);
    return p;
}

Poly Poly::variable(int vars, int i) {
    if (i < 1 || i > vars) throw IndexError("variable index out of range: " + std::to_string(i));
    Poly p(vars);
    Exponents e(static_cast<std::size_t>(vars), 0u);
    e[static_cast<std::size_t>(i - 1)] = 1u;
    p.add_term(e, 1);
    return p;
}

int Poly::total_degree() const {
    int deg = -1;
    for (const auto& [exp, c] : terms_) {
        int d = std::accumulate(exp.begin(), exp.end(), 0,
                                [](int a, unsigned b) { return a + static_cast<int>(b); });
        deg = std::max(deg, d);
    }
    return deg;  // -1 for the zero polynomial
}

void Poly::add_term(const Exponents& exp, const Rational& c) {
    if (c == 0) return;
    if (exp.size() != static_cast<std::size_t>(vars_))
        throw DimensionError("exponent vector of wrong length");
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly p(vars_);
    for (const auto& [exp, c] : terms_) p.terms_.emplace(exp, -c);
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_chart(o);
    Poly p = *this;
    for (const auto& [exp, c] : o.terms_) p.add_term(exp, c);
    return p;
}

Poly Poly::operator-(const Poly& o) const {
    check_same_chart(o);
    Poly p = *this;
    for (const auto& [exp, c] : o.terms_) p.add_term(exp, -c);
    return p;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_chart(o);
    Poly p(vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(ea);
            for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
            p.add_term(e, ca * cb);
        }
    }
    return p;
}

Poly Poly::operator*(const Rational& c) const {
    Poly p(vars_);
    if (c == 0) return p;
    for (const auto& [exp, coef] : terms_) p.terms_.emplace(exp, coef * c);
    return p;
}

Poly Poly::derivative(int i) const {
    if (i < 1 || i > vars_) throw IndexError("derivative index out of range: " + std::to_string(i));
    const std::size_t k = static_cast<std::size_t>(i - 1);
    Poly p(vars_);
    for (const auto& [exp, c] : terms_) {
        if (exp[k] == 0) continue;
        Exponents e(exp);
        e[k] -= 1;
        p.add_term(e, c * Rational(exp[k]));
    }
    return p;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != static_cast<std::size_t>(vars_))
        throw DimensionError("evaluation point of wrong length");
    Rational acc = 0;
    for (const auto& [exp, c] : terms_) {
        Rational t = c;
        for (std::size_t k = 0; k < exp.size(); ++k) {
            for (unsigned j = 0; j < exp[k]; ++j) t *= point[k];
        }
        acc += t;
    }
    return acc;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Reverse map order so higher-degree leading terms print first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [exp, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool any_var = std::any_of(exp.begin(), exp.end(), [](unsigned e) { return e != 0; });
        bool unit = (a == 1);
        if (!unit || !any_var) os << to_string(a);
        bool need_star = !unit || !any_var;
        for (std::size_t k = 0; k < exp.size(); ++k) {
            if (exp[k] == 0) continue;
            if (need_star) os << "*";
            need_star = true;
            os << "x" << (k + 1);
            if (exp[k] > 1) os << "^" << exp[k];
        }
    }
    return os.str();
}

}  // namespace homni
