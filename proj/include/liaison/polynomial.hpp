#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liaison/fp.hpp"
#include "liaison/monomial.hpp"

namespace liaison {

struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

struct Term {
    Fp c;  // nonzero
    Monomial m;
    bool operator==(const Term&) const = default;
};

// Element of F_p[X,Y,Z,T]. Terms are kept strictly decreasing in degrevlex,
// coefficients nonzero; this canonical form makes equality term-by-term.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(Fp c) {
        if (!c.is_zero()) terms_.push_back({c, Monomial::one()});
    }
    Polynomial(Fp c, const Monomial& m) {
        if (!c.is_zero()) terms_.push_back({c, m});
    }
    static Polynomial zero() { return {}; }
    static Polynomial one() { return Polynomial(Fp::one()); }
    static Polynomial variable(int i, int k = 1) { return Polynomial(Fp::one(), Monomial::var(i, k)); }
    // Builds the canonical form out of an arbitrary term list.
    static Polynomial from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    const Term& leading() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        return terms_.front();
    }

    bool is_homogeneous() const;
    bool is_constant() const { return terms_.empty() || terms_.front().m.is_one(); }
    // Common degree of a nonzero homogeneous polynomial.
    int degree() const;
    // Degree of the leading (= highest-degree) term; -1 for zero.
    int top_degree() const { return terms_.empty() ? -1 : terms_.front().m.degree(); }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    // c * x^m * this; preserves term order without re-sorting.
    Polynomial term_multiple(Fp c, const Monomial& m) const;
    Polynomial scaled(Fp c) const { return term_multiple(c, Monomial::one()); }
    Polynomial monic() const;

    bool operator==(const Polynomial&) const = default;

    std::string to_string() const;
    static Polynomial parse(const std::string& text);  // throws parse_error

  private:
    std::vector<Term> terms_;
};

inline Polynomial operator*(Fp c, const Polynomial& f) { return f.scaled(c); }
std::ostream& operator<<(std::ostream& os, const Polynomial& f);

inline Polynomial parse_polynomial(const std::string& text) { return Polynomial::parse(text); }

// (leading coefficient, leading monomial); throws on zero input.
inline std::pair<Fp, Monomial> leading_term(const Polynomial& f) {
    const Term& t = f.leading();
    return {t.c, t.m};
}

// Quotient of an exact division g = q*f, or nullopt if f does not divide g.
std::optional<Polynomial> divide_exact(const Polynomial& g, const Polynomial& f);

}  // namespace liaison
