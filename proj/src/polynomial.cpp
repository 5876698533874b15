#include "liaison/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace liaison {

Polynomial Polynomial::from_terms(std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(),
              [](const Term& a, const Term& b) { return degrevlex_cmp(a.m, b.m) > 0; });
    Polynomial r;
    for (const Term& t : ts) {
        if (!r.terms_.empty() && r.terms_.back().m == t.m)
            r.terms_.back().c += t.c;
        else
            r.terms_.push_back(t);
        if (!r.terms_.empty() && r.terms_.back().c.is_zero()) r.terms_.pop_back();
    }
    return r;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().m.degree();
    for (const Term& t : terms_)
        if (t.m.degree() != d) return false;
    return true;
}

int Polynomial::degree() const {
    if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
    if (!is_homogeneous()) throw std::domain_error("degree of inhomogeneous polynomial");
    return terms_.front().m.degree();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (Term& t : r.terms_) t.c = -t.c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = degrevlex_cmp(terms_[i].m, o.terms_[j].m);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Fp s = terms_[i].c + o.terms_[j].c;
            if (!s.is_zero()) r.terms_.push_back({s, terms_[i].m});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : o.terms_) prod.push_back({a.c * b.c, a.m * b.m});
    return from_terms(std::move(prod));
}

Polynomial Polynomial::term_multiple(Fp c, const Monomial& m) const {
    if (c.is_zero()) return {};
    Polynomial r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.c * c, t.m * m});
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    return scaled(terms_.front().c.inv());
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        std::int64_t c = t.c.lift_signed();
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::int64_t a = c < 0 ? -c : c;
        bool printed_coeff = false;
        if (a != 1 || t.m.is_one()) {
            os << a;
            printed_coeff = true;
        }
        bool printed_var = false;
        for (int i = 0; i < kNumVars; ++i) {
            if (t.m.e[i] == 0) continue;
            if (printed_coeff || printed_var) os << "*";
            os << kVarNames[i];
            if (t.m.e[i] > 1) os << "^" << t.m.e[i];
            printed_var = true;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.to_string(); }

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }

    long long integer() {
        skip_ws();
        std::size_t start = i;
        long long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > (1ll << 62)) v %= field::prime();  // keep huge literals from overflowing
            ++i;
        }
        if (i == start) throw parse_error("expected integer", i);
        return v;
    }

    int var_index() {
        char c = s[i];
        for (int k = 0; k < kNumVars; ++k)
            if (c == kVarNames[k][0]) return k;
        if (std::isalpha(static_cast<unsigned char>(c)))
            throw parse_error(std::string("unknown variable '") + c + "'", i);
        throw parse_error("expected variable or integer", i);
    }

    // term := [int] ('*'? var ('^' int)?)*
    Term term() {
        Term t{Fp::one(), Monomial::one()};
        bool any = false;
        if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            t.c = Fp(integer());
            any = true;
        }
        while (!eof()) {
            skip_ws();
            std::size_t save = i;
            if (s[i] == '*') {
                ++i;
                skip_ws();
                if (i >= s.size()) throw parse_error("dangling '*'", save);
            } else if (s[i] == '+' || s[i] == '-') {
                break;
            }
            if (i >= s.size()) break;
            if (!std::isalpha(static_cast<unsigned char>(s[i]))) {
                if (save == i) break;  // no '*' consumed, stop the term
                throw parse_error("expected variable after '*'", i);
            }
            int v = var_index();
            ++i;
            int exp = 1;
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                long long e = integer();
                if (e < 0 || e > 60000) throw parse_error("exponent out of range", i);
                exp = static_cast<int>(e);
            }
            t.m = t.m * Monomial::var(v, exp);
            any = true;
        }
        if (!any) throw parse_error("empty term", i);
        return t;
    }

    Polynomial poly() {
        std::vector<Term> ts;
        skip_ws();
        bool neg = false;
        if (!eof() && (peek() == '+' || peek() == '-')) {
            neg = peek() == '-';
            ++i;
        }
        while (true) {
            Term t = term();
            if (neg) t.c = -t.c;
            ts.push_back(t);
            if (eof()) break;
            char c = peek();
            if (c == '+' || c == '-') {
                neg = c == '-';
                ++i;
            } else {
                throw parse_error(std::string("unexpected character '") + c + "'", i);
            }
        }
        return Polynomial::from_terms(std::move(ts));
    }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text) {
    Parser p{text};
    if (p.eof()) throw parse_error("empty polynomial", 0);
    Polynomial f = p.poly();
    return f;
}

std::optional<Polynomial> divide_exact(const Polynomial& g, const Polynomial& f) {
    if (f.is_zero()) return std::nullopt;
    Polynomial rem = g, q;
    const Term& lf = f.leading();
    while (!rem.is_zero()) {
        const Term& lr = rem.leading();
        if (!lf.m.divides(lr.m)) return std::nullopt;
        Fp c = lr.c / lf.c;
        Monomial m = lr.m / lf.m;
        q += Polynomial(c, m);
        rem -= f.term_multiple(c, m);
    }
    return q;
}

}  // namespace liaison
