#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace liaison {

inline constexpr int kNumVars = 4;
inline constexpr const char* kVarNames[kNumVars] = {"X", "Y", "Z", "T"};

// Power product X^a Y^b Z^c T^d.
struct Monomial {
    std::array<std::uint16_t, 4> e{0, 0, 0, 0};

    int degree() const { return e[0] + e[1] + e[2] + e[3]; }
    bool is_one() const { return e[0] == 0 && e[1] == 0 && e[2] == 0 && e[3] == 0; }

    static Monomial one() { return {}; }
    static Monomial var(int i, int k = 1) {
        Monomial m;
        m.e[i] = static_cast<std::uint16_t>(k);
        return m;
    }

    bool divides(const Monomial& b) const {
        for (int i = 0; i < 4; ++i)
            if (e[i] > b.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& b) const {
        Monomial r;
        for (int i = 0; i < 4; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] + b.e[i]);
        return r;
    }
    // Caller guarantees b.divides(*this).
    Monomial operator/(const Monomial& b) const {
        Monomial r;
        for (int i = 0; i < 4; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] - b.e[i]);
        return r;
    }
    bool operator==(const Monomial&) const = default;
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    return r;
}
inline Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
    return r;
}
inline bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < 4; ++i)
        if (a.e[i] != 0 && b.e[i] != 0) return false;
    return true;
}

// Degree-reverse-lexicographic order with X > Y > Z > T.
// Returns +1 if a > b, 0 if equal, -1 if a < b.
inline int degrevlex_cmp(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    // Same degree: larger is the one whose rightmost differing exponent is smaller.
    for (int i = 3; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
}

inline bool degrevlex_less(const Monomial& a, const Monomial& b) { return degrevlex_cmp(a, b) < 0; }

// All monomials of total degree d, in decreasing degrevlex order. Deterministic;
// used for degreewise bases.
std::vector<Monomial> monomials_of_degree(int d);

// dim_k R_d = C(d+3, 3) for d >= 0, else 0.
inline long long dim_ring_degree(int d) {
    if (d < 0) return 0;
    return static_cast<long long>(d + 3) * (d + 2) * (d + 1) / 6;
}

}  // namespace liaison
