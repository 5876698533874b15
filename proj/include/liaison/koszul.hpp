#pragma once

#include <array>

#include "liaison/liaison_ops.hpp"

namespace liaison {

// Type (n1, n2, n3, n4) of a complete-intersection quotient of finite length.
struct KoszulType {
    std::array<int, 4> n{1, 1, 1, 1};

    static KoszulType of(int n1, int n2, int n3, int n4);  // validates 1 <= n1 <= ... <= n4
    int mu() const { return std::max(n[0] + n[3], n[1] + n[2]); }
    int deg_f() const { return mu() - n[0] - n[3]; }
    int deg_g() const { return mu() - n[1] - n[2]; }
    bool operator==(const KoszulType&) const = default;
};

struct PredictedInvariants {
    int mu = 0, s0 = 0, e = 0;
};
// s0 = mu + n1 - n4 and e = 2*mu - n3 - n4 - 4 for the minimal curves below.
PredictedInvariants predicted_invariants(const KoszulType& t);

// Minimal curves of the class are subcanonical exactly when n1+n4 = n2+n3.
bool is_subcanonical_class(const KoszulType& t);

// Coefficient list of prod_i (1 + t + ... + t^(n_i - 1)); index = degree.
std::vector<long long> koszul_hilbert_coefficients(const KoszulType& t);

// A generic realization: a regular sequence (f1..f4) of the given degrees and
// auxiliary forms f, g, drawn from the seed with rejection against the
// checkable genericity conditions (regularity, nonzero f and g, pairwise
// coprimality verified by pair Hilbert polynomials).
struct KoszulData {
    KoszulType type;
    std::array<Polynomial, 4> forms;
    Polynomial f, g;
    std::uint64_t seed = 0;
};
KoszulData draw_koszul(const KoszulType& t, std::uint64_t seed, int tries = 24);

// R/(f1..f4); finite length with the product Hilbert coefficients.
GradedModule koszul_module(const KoszulData& d);

// The minimal curve of the class: saturation of
// (f*f1^2, f1*f2, g*f2^2, f*f1*f4 + g*f2*f3).
Curve koszul_minimal_curve(const KoszulData& d);

// Surfaces of the given degree through the minimal curve, with factorizations
// recovered by exact division by f1 where possible.
std::vector<FactoredSurface> koszul_surfaces(const KoszulData& d, const Curve& C, int degree,
                                             std::uint64_t seed, int random_count = 2);

}  // namespace liaison
