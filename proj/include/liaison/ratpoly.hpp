#pragma once

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace liaison {

// Exact rational with small numerator/denominator (Hilbert-polynomial sized).
struct Rat {
    long long n = 0, d = 1;

    Rat() = default;
    Rat(long long num, long long den = 1) : n(num), d(den) { normalize(); }
    void normalize() {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
    }
    bool is_zero() const { return n == 0; }
    bool is_integer() const { return d == 1; }
    Rat operator+(const Rat& o) const { return Rat(n * o.d + o.n * d, d * o.d); }
    Rat operator-(const Rat& o) const { return Rat(n * o.d - o.n * d, d * o.d); }
    Rat operator*(const Rat& o) const { return Rat(n * o.n, d * o.d); }
    Rat operator-() const { return Rat(-n, d); }
    bool operator==(const Rat&) const = default;
};

// Polynomial in one variable n with rational coefficients; c_[k] is the n^k
// coefficient, trailing zeros stripped.
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static RatPoly constant(Rat r) { return RatPoly({r}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Rat coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rat(0);
    }

    Rat eval(long long x) const {
        Rat acc(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * Rat(x) + c_[k];
        return acc;
    }

    RatPoly operator+(const RatPoly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
        return RatPoly(std::move(r));
    }
    RatPoly operator-(const RatPoly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(static_cast<int>(k)) - o.coeff(static_cast<int>(k));
        return RatPoly(std::move(r));
    }
    bool operator==(const RatPoly&) const = default;

    // (n - t + 3)(n - t + 2)(n - t + 1)/6, the Hilbert polynomial of R(-t).
    static RatPoly twisted_binomial(int t) {
        // expand (n+a)(n+b)(n+c)/6 with a = 3-t, b = 2-t, c = 1-t
        long long a = 3 - t, b = 2 - t, c = 1 - t;
        std::vector<Rat> r(4);
        r[3] = Rat(1, 6);
        r[2] = Rat(a + b + c, 6);
        r[1] = Rat(a * b + a * c + b * c, 6);
        r[0] = Rat(a * b * c, 6);
        return RatPoly(std::move(r));
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            Rat r = coeff(k);
            if (r.is_zero()) continue;
            long long num = r.n;
            if (first) {
                if (num < 0) os << "-";
            } else {
                os << (num < 0 ? " - " : " + ");
            }
            long long an = num < 0 ? -num : num;
            if (an != 1 || r.d != 1 || k == 0) {
                os << an;
                if (r.d != 1) os << "/" << r.d;
                if (k > 0) os << "*";
            }
            if (k == 1) os << "n";
            if (k > 1) os << "n^" << k;
            first = false;
        }
        return os.str();
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rat> c_;
};

}  // namespace liaison
