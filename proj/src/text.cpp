#include "homni/text.hpp"

#include <cctype>
#include <sstream>

namespace homni {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool at_end() { return peek() == '\0'; }
    std::size_t pos() const { return pos_; }

    [[noreturn]] void fail(const std::string& expected) {
        throw ParseError("expected " + expected, pos_);
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("'") + c + "'");
        ++pos_;
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    /// Consumes the keyword only when followed by a non-identifier char.
    bool accept_word(const std::string& w) {
        skip_ws();
        if (text_.compare(pos_, w.size(), w) != 0) return false;
        const std::size_t after = pos_ + w.size();
        if (after < text_.size() && std::isalnum(static_cast<unsigned char>(text_[after])))
            return false;
        pos_ = after;
        return true;
    }
    bool accept_prefix(const std::string& w) {
        skip_ws();
        if (text_.compare(pos_, w.size(), w) != 0) return false;
        pos_ += w.size();
        return true;
    }
    bool peek_prefix(const std::string& w) {
        skip_ws();
        return text_.compare(pos_, w.size(), w) == 0;
    }

    unsigned long parse_uint() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("a number");
        unsigned long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            v = v * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
        return v;
    }
    Rational parse_rational() {
        bool neg = accept('-');
        Integer num(parse_uint());
        Integer den(1);
        if (accept('/')) den = Integer(parse_uint());
        if (den == 0) throw ParseError("zero denominator", pos_);
        Rational r(num, den);
        return neg ? -r : r;
    }

    // --- polynomial: sum of *-joined factors, factors are numbers or x<i> ---

    bool at_poly_factor() {
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return true;
        return c == 'x' && is_var_here();
    }
    Poly parse_poly(int m) {
        Poly out(m);
        bool first = true;
        for (;;) {
            int sign = 1;
            if (accept('-'))
                sign = -1;
            else if (accept('+'))
                sign = 1;
            else if (!first)
                break;
            out = out + parse_poly_term(m, sign);
            first = false;
            const char c = peek();
            if (c != '+' && c != '-') break;
        }
        return out;
    }
    Poly parse_poly_term(int m, int sign) {
        Rational coef(sign);
        Poly::Exponents exp(static_cast<std::size_t>(m), 0u);
        bool any = false;
        for (;;) {
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coef *= parse_rational();
                any = true;
            } else if (c == 'x' && is_var_here()) {
                ++pos_;  // 'x'
                const auto i = parse_uint();
                if (i < 1 || static_cast<int>(i) > m)
                    throw ParseError("variable index out of range", pos_);
                unsigned long e = 1;
                if (accept('^')) e = parse_uint();
                exp[static_cast<std::size_t>(i - 1)] += static_cast<unsigned>(e);
                any = true;
            } else {
                fail("a coefficient or variable");
            }
            // only take a '*' that joins another scalar factor; a trailing
            // '*' belongs to the caller (form coefficients end with one)
            const std::size_t save = pos_;
            if (!accept('*')) break;
            if (!at_poly_factor()) {
                pos_ = save;
                break;
            }
        }
        if (!any) fail("a term");
        Poly p(m);
        p.add_term(exp, coef);
        return p;
    }

private:
    bool is_var_here() {
        // x directly followed by a digit
        skip_ws();
        return pos_ + 1 < text_.size() && text_[pos_] == 'x' &&
               std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
    }

    const std::string& text_;
    std::size_t pos_ = 0;

public:
    // --- bundle-valued forms: sum of  <coef>*F<i1>^...^F<ik> @ e<alpha> ---
    // F is "dx" for chart forms and "D" for gauge-frame forms.

    template <typename AddTerm>
    int parse_form_sum(int m, const std::string& factor_kw, int max_index, int degree_hint,
                       AddTerm&& add) {
        if (peek() == '0') {
            const std::size_t save = pos_;
            ++pos_;
            if (at_end() || peek() == ';' || peek() == ')') {
                if (degree_hint < 0) throw ParseError("cannot infer the degree of 0", save);
                return degree_hint;
            }
            pos_ = save;
        }
        int degree = -1;
        bool first = true;
        for (;;) {
            int sign = 1;
            if (accept('-')) {
                sign = -1;
            } else if (!first) {
                expect('+');
                if (accept('-')) sign = -1;
            }
            first = false;

            Poly coef = Poly::constant(m, sign);
            bool have_coef = false;
            if (accept('(')) {
                coef = coef * parse_poly(m);
                expect(')');
                accept('*');
                have_coef = true;
            } else if (at_poly_factor()) {
                coef = coef * parse_poly_term(m, 1);
                accept('*');
                have_coef = true;
            }
            Index I;
            while (accept_prefix(factor_kw)) {
                const auto i = parse_uint();
                if (i < 1 || static_cast<int>(i) > max_index)
                    throw ParseError("frame index out of range", pos_);
                I.push_back(static_cast<int>(i));
                if (!accept('^')) break;
            }
            if (!have_coef && I.empty()) fail("a form term");
            for (std::size_t t = 1; t < I.size(); ++t)
                if (I[t] <= I[t - 1])
                    throw ParseError("form indices must be strictly increasing", pos_);
            expect('@');
            if (!accept_prefix("e")) fail("a frame section e<alpha>");
            const auto alpha = parse_uint();
            if (degree == -1)
                degree = static_cast<int>(I.size());
            else if (degree != static_cast<int>(I.size()))
                throw ParseError("mixed form degrees in one expression", pos_);
            add(I, static_cast<int>(alpha), coef);
            if (peek() != '+' && peek() != '-') break;
        }
        if (degree_hint >= 0 && degree != degree_hint)
            throw ParseError("form degree does not match the expected degree", pos_);
        return degree;
    }

    // --- scalar forms: the same grammar without the @ e<alpha> tail ---

    template <typename AddTerm>
    int parse_scalar_sum(int m, int degree_hint, AddTerm&& add) {
        if (peek() == '0') {
            const std::size_t save = pos_;
            ++pos_;
            if (at_end() || peek() == ';' || peek() == ')') {
                if (degree_hint < 0) throw ParseError("cannot infer the degree of 0", save);
                return degree_hint;
            }
            pos_ = save;
        }
        int degree = -1;
        bool first = true;
        for (;;) {
            int sign = 1;
            if (accept('-')) {
                sign = -1;
            } else if (!first) {
                expect('+');
                if (accept('-')) sign = -1;
            }
            first = false;

            Poly coef = Poly::constant(m, sign);
            bool have_coef = false;
            if (accept('(')) {
                coef = coef * parse_poly(m);
                expect(')');
                accept('*');
                have_coef = true;
            } else if (at_poly_factor()) {
                coef = coef * parse_poly_term(m, 1);
                accept('*');
                have_coef = true;
            }
            Index I;
            while (accept_prefix("dx")) {
                const auto i = parse_uint();
                if (i < 1 || static_cast<int>(i) > m)
                    throw ParseError("coordinate index out of range", pos_);
                I.push_back(static_cast<int>(i));
                if (!accept('^')) break;
            }
            if (!have_coef && I.empty()) fail("a form term");
            for (std::size_t t = 1; t < I.size(); ++t)
                if (I[t] <= I[t - 1])
                    throw ParseError("form indices must be strictly increasing", pos_);
            if (degree == -1)
                degree = static_cast<int>(I.size());
            else if (degree != static_cast<int>(I.size()))
                throw ParseError("mixed form degrees in one expression", pos_);
            add(I, coef);
            if (peek() != '+' && peek() != '-') break;
        }
        if (degree_hint >= 0 && degree != degree_hint)
            throw ParseError("form degree does not match the expected degree", pos_);
        return degree;
    }
};

std::string poly_factor_text(const Poly& p) {
    if (p.terms().size() == 1 && !(p == Poly::constant(p.vars(), 1)))
        return p.str() + "*";
    if (p == Poly::constant(p.vars(), 1)) return "";
    return "(" + p.str() + ")*";
}

template <typename Comps>
std::string form_text(const Comps& comps, const std::string& factor_kw, int degree) {
    if (comps.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, p] : comps) {
        if (!first) os << " + ";
        first = false;
        std::string coef = poly_factor_text(p);
        if (degree == 0 && !coef.empty()) coef.pop_back();  // no factor follows
        if (degree == 0 && coef.empty()) coef = "1";
        os << coef;
        for (std::size_t t = 0; t < key.first.size(); ++t)
            os << (t ? "^" : "") << factor_kw << key.first[t];
        os << " @ e" << key.second;
    }
    return os.str();
}

EForm parse_eform_at(Parser& ps, ChartConfig chart, int degree_hint) {
    std::vector<std::tuple<Index, int, Poly>> terms;
    int degree = ps.parse_form_sum(chart.m, "dx", chart.m, degree_hint,
                                   [&](const Index& I, int alpha, const Poly& c) {
                                       if (alpha < 1 || alpha > chart.r)
                                           throw ParseError("frame section index out of range",
                                                            ps.pos());
                                       terms.emplace_back(I, alpha, c);
                                   });
    EForm out(chart, degree);
    for (const auto& [I, alpha, c] : terms) out.add_component(I, alpha, c);
    return out;
}

JForm parse_jform_at(Parser& ps, ChartConfig chart) {
    if (!ps.accept_prefix("jform")) ps.fail("jform(...)");
    ps.expect('(');
    const int n = static_cast<int>(ps.parse_uint());
    ps.expect(';');
    EForm mu0 = parse_eform_at(ps, chart, n);
    if (n == 0) {
        ps.expect(')');
        return JForm(mu0);
    }
    ps.expect(';');
    EForm mu1 = parse_eform_at(ps, chart, n - 1);
    ps.expect(')');
    return {std::move(mu0), std::move(mu1)};
}

Derivation parse_der_at(Parser& ps, ChartConfig chart) {
    if (!ps.accept_prefix("der")) ps.fail("der(...)");
    ps.expect('(');
    Derivation d(chart);
    while (ps.peek() != ')') {
        if (ps.accept_prefix("X")) {
            const auto i = ps.parse_uint();
            if (i < 1 || static_cast<int>(i) > chart.m)
                throw ParseError("vector component index out of range", ps.pos());
            ps.expect('=');
            d.X(static_cast<int>(i)) = ps.parse_poly(chart.m);
        } else if (ps.accept_prefix("Phi")) {
            ps.expect('[');
            const auto g = ps.parse_uint();
            ps.expect(']');
            ps.expect('[');
            const auto b = ps.parse_uint();
            ps.expect(']');
            if (g < 1 || static_cast<int>(g) > chart.r || b < 1 ||
                static_cast<int>(b) > chart.r)
                throw ParseError("endomorphism index out of range", ps.pos());
            ps.expect('=');
            d.Phi(static_cast<int>(g), static_cast<int>(b)) = ps.parse_poly(chart.m);
        } else {
            ps.fail("X<i>=... or Phi[g][b]=...");
        }
        if (!ps.accept(';') && !ps.accept(',')) break;
    }
    ps.expect(')');
    return d;
}

}  // namespace

Poly parse_poly(const std::string& text, int m) {
    Parser ps(text);
    if (ps.peek() == '0') {
        Parser probe(text);
        probe.accept('0');
        if (probe.at_end()) return Poly::constant(m, 0);
    }
    Poly out = ps.parse_poly(m);
    if (!ps.at_end()) ps.fail("end of input");
    return out;
}

ScalarForm parse_scalar_form(const std::string& text, int m, int degree_hint) {
    Parser ps(text);
    std::vector<std::pair<Index, Poly>> terms;
    const int degree = ps.parse_scalar_sum(
        m, degree_hint, [&](const Index& I, const Poly& c) { terms.emplace_back(I, c); });
    if (!ps.at_end()) ps.fail("end of input");
    ScalarForm out(m, degree);
    for (const auto& [I, c] : terms) out.add_component(I, c);
    return out;
}

EForm parse_eform(const std::string& text, ChartConfig chart, int degree_hint) {
    Parser ps(text);
    EForm out = parse_eform_at(ps, chart, degree_hint);
    if (!ps.at_end()) ps.fail("end of input");
    return out;
}

JForm parse_jform(const std::string& text, ChartConfig chart) {
    Parser ps(text);
    JForm out = parse_jform_at(ps, chart);
    if (!ps.at_end()) ps.fail("end of input");
    return out;
}

GenForm parse_genform(const std::string& text, ChartConfig chart) {
    Parser ps(text);
    if (!ps.accept_prefix("genform")) ps.fail("genform(...)");
    ps.expect('(');
    const int k = static_cast<int>(ps.parse_uint());
    GenForm out(chart, k);
    while (ps.accept(';')) {
        if (ps.peek() == ')') break;
        ps.parse_form_sum(chart.m, "D", frame_size(chart), k,
                          [&](const Index& I, int alpha, const Poly& c) {
                              if (alpha < 1 || alpha > chart.r)
                                  throw ParseError("frame section index out of range",
                                                   ps.pos());
                              out.add_component(I, alpha, c);
                          });
    }
    ps.expect(')');
    if (!ps.at_end()) ps.fail("end of input");
    return out;
}

Derivation parse_derivation(const std::string& text, ChartConfig chart) {
    Parser ps(text);
    Derivation out = parse_der_at(ps, chart);
    if (!ps.at_end()) ps.fail("end of input");
    return out;
}

OmniSection parse_omni(const std::string& text, ChartConfig chart) {
    Parser ps(text);
    if (!ps.accept_prefix("omni")) ps.fail("omni(...)");
    ps.expect('(');
    Derivation d = parse_der_at(ps, chart);
    ps.expect(';');
    JForm mu = parse_jform_at(ps, chart);
    ps.expect(')');
    if (!ps.at_end()) ps.fail("end of input");
    return {std::move(d), std::move(mu)};
}

ZStructure parse_zstruct(const std::string& text, ChartConfig chart) {
    Parser ps(text);
    if (!ps.accept_prefix("zstruct")) ps.fail("zstruct(...)");
    ps.expect('(');
    ZStructure z(chart);
    while (ps.peek() != ')') {
        if (ps.accept_prefix("top")) {
            ps.expect('=');
            z.set_top(ps.parse_poly(chart.m));
        } else if (ps.accept_prefix("c")) {
            ps.expect('[');
            const auto g = ps.parse_uint();
            ps.expect(']');
            ps.expect('[');
            const auto a = ps.parse_uint();
            ps.expect(']');
            ps.expect('[');
            const auto b = ps.parse_uint();
            ps.expect(']');
            ps.expect('=');
            try {
                z.set_c(static_cast<int>(g), static_cast<int>(a), static_cast<int>(b),
                        ps.parse_poly(chart.m));
            } catch (const IndexError& err) {
                throw ParseError(err.what(), ps.pos());
            }
        } else {
            ps.fail("top=... or c[g][a][b]=...");
        }
        if (!ps.accept(';') && !ps.accept(',')) break;
    }
    ps.expect(')');
    if (!ps.at_end()) ps.fail("end of input");
    return z;
}

std::vector<Rational> parse_point(const std::string& text, int m) {
    Parser ps(text);
    std::vector<Rational> out;
    if (!ps.at_end()) {
        out.push_back(ps.parse_rational());
        while (ps.accept(',')) out.push_back(ps.parse_rational());
    }
    if (!ps.at_end()) ps.fail("end of input");
    if (static_cast<int>(out.size()) != m)
        throw ParseError("point of wrong dimension", 0);
    return out;
}

std::string to_text(const Poly& p) { return p.str(); }

std::string to_text(const ScalarForm& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [I, p] : a.components()) {
        if (!first) os << " + ";
        first = false;
        std::string coef = poly_factor_text(p);
        if (a.degree() == 0 && !coef.empty()) coef.pop_back();  // no factor follows
        if (a.degree() == 0 && coef.empty()) coef = "1";
        os << coef;
        for (std::size_t t = 0; t < I.size(); ++t) os << (t ? "^" : "") << "dx" << I[t];
    }
    return os.str();
}

std::string to_text(const EForm& a) { return form_text(a.components(), "dx", a.degree()); }

std::string to_text(const JForm& mu) {
    std::ostringstream os;
    os << "jform(" << mu.degree() << "; " << to_text(mu.mu0());
    if (mu.degree() > 0) os << "; " << to_text(mu.mu1());
    os << ")";
    return os.str();
}

std::string to_text(const GenForm& g) {
    std::ostringstream os;
    os << "genform(" << g.degree();
    if (!g.is_zero()) os << "; " << form_text(g.components(), "D", g.degree());
    os << ")";
    return os.str();
}

std::string to_text(const Derivation& d) {
    std::ostringstream os;
    os << "der(";
    bool first = true;
    for (int i = 1; i <= d.chart().m; ++i) {
        if (d.X(i).is_zero()) continue;
        os << (first ? "" : "; ") << "X" << i << "=" << d.X(i).str();
        first = false;
    }
    for (int g = 1; g <= d.chart().r; ++g)
        for (int b = 1; b <= d.chart().r; ++b) {
            if (d.Phi(g, b).is_zero()) continue;
            os << (first ? "" : "; ") << "Phi[" << g << "][" << b << "]=" << d.Phi(g, b).str();
            first = false;
        }
    os << ")";
    return os.str();
}

std::string to_text(const OmniSection& e) {
    return "omni(" + to_text(e.dpart()) + "; " + to_text(e.jpart()) + ")";
}

std::string to_text(const ZStructure& z) {
    std::ostringstream os;
    os << "zstruct(top=" << z.top().str();
    for (int g = 1; g <= z.chart().r; ++g)
        for (int a = 1; a <= z.chart().r; ++a)
            for (int b = a + 1; b <= z.chart().r; ++b) {
                const Poly p = z.c(g, a, b);
                if (p.is_zero()) continue;
                os << "; c[" << g << "][" << a << "][" << b << "]=" << p.str();
            }
    os << ")";
    return os.str();
}

std::string to_text(const std::vector<Rational>& point) {
    std::ostringstream os;
    for (std::size_t i = 0; i < point.size(); ++i)
        os << (i ? ", " : "") << to_string(point[i]);
    return os.str();
}

}  // namespace homni
