#pragma once

#include <string>

#include "liaison/curve.hpp"

namespace liaison {

// Surface with a caller-supplied multiset factorization. Factorizations are
// never computed here; declared factors are validated exactly (product equals
// q up to a nonzero scalar) and drive the strict-divisor tests. A surface
// declared with a single factor admits no tested decompositions, which can
// only over-report injectivity.
struct FactoredSurface {
    Polynomial q;
    std::vector<std::pair<Polynomial, int>> factors;

    int degree() const { return q.degree(); }
    static FactoredSurface single(Polynomial surface);
    static FactoredSurface with_factors(Polynomial surface,
                                        std::vector<std::pair<Polynomial, int>> factors);
};

// Liaison by the complete intersection (F, G): I_{C'} = ((F,G) : I_C).
// Verifies on construction that deg C' = ab - deg C and that the Rao
// dimensions get reversed, dim M_{C'}(n) = dim M_C(a+b-4-n).
Curve link(const Curve& C, const Polynomial& F, const Polynomial& G);

struct BiliaisonStep {
    FactoredSurface surface;
    int height = 0;
    std::optional<Polynomial> multiplier;                    // ascending steps
    std::optional<std::pair<Polynomial, Polynomial>> links;  // descending double-link pair
    Curve source, target;
};

// Ascending elementary biliaison on Q realized as multiplication by f:
// I_{C'} = sat(f*I_C + (q)). Verifies the height-h shift of the Rao
// dimensions and the degree bookkeeping on construction.
BiliaisonStep elementary_biliaison(const Curve& C, const FactoredSurface& Q, const Polynomial& f);

// Descending elementary biliaison of height h < 0 on Q, executed as a double
// liaison by (q, S) then (q, S') with deg S' = deg S + h. The linking
// surfaces are drawn from seeded random combinations; throws when no descent
// materializes within the given budget.
BiliaisonStep descending_biliaison(const Curve& C, const FactoredSurface& Q, int h,
                                   std::uint64_t seed = 1, int tries = 48);

// dim Hom(J_{C/Q}, O_Q(h)) for h < 0, which equals h^0 omega_C(4-s+h).
long long hom_dimension(const Curve& C, const FactoredSurface& Q, int h);

enum class HomVerdict { no_nonzero_hom, all_annihilated, injective_exists };
const char* to_string(HomVerdict v);

struct FactorKernelInfo {
    Polynomial factor;
    int multiplicity = 1;
    Polynomial cofactor;      // q/factor, the tested strict divisor
    long long kernel_dim = 0; // dim ker of multiplication by the cofactor on the section space
};

struct HomProbe {
    Polynomial q;
    int s = 0, h = 0;
    bool admissible = true;  // s0 <= s <= e + 4 + h
    long long dim_hom = 0;
    std::vector<FactorKernelInfo> factors;
    HomVerdict verdict = HomVerdict::no_nonzero_hom;
    std::optional<VecPoly> witness;  // section of omega in degree 4-s+h with injective hom
    std::optional<Polynomial> annihilating_divisor;
};

// Decides whether some nonzero hom J_{C/Q} -> O_Q(h) is injective: the
// noninjective sections are exactly those killed by a strict divisor of q, so
// the section space is scanned against the declared maximal strict divisors.
HomProbe injective_hom_exists(const Curve& C, const FactoredSurface& Q, int h,
                              std::uint64_t seed = 1, int tries = 32);

struct ObstructionReport {
    int e = 0, s0 = 0;
    std::vector<HomProbe> probes;  // deterministic (h, surface) order
    bool descent_found = false;
    std::optional<std::size_t> first_descent;
    std::vector<std::string> notes;
};

// Scans the supplied surfaces over a window of negative heights. Verdicts
// quantify over the tested family only; unfactored surfaces can only
// over-report injectivity.
ObstructionReport descending_obstruction_report(const Curve& C,
                                                const std::vector<FactoredSurface>& surfaces,
                                                int h_min, int h_max, std::uint64_t seed = 1);

// Default surface family of a given degree: Groebner elements of I_C of that
// degree plus seeded random combinations, declared single-factor.
std::vector<FactoredSurface> enumerate_surfaces(const Curve& C, int degree, std::uint64_t seed,
                                                int random_count = 2);

// Section-level verification of the fundamental diagram for u = mult by f on
// Q: the graded Hom module against O_Q splits as forms plus dualizing
// sections twist by twist, multiplication operators commute, and u vanishes
// exactly when f lies on Q.
bool fundamental_diagram_check(const Curve& C, const FactoredSurface& Q, const Polynomial& f,
                               int twist_lo = -4, int twist_hi = 4,
                               std::string* diagnostics = nullptr);

struct MinimalityReport {
    int alpha = 0, e = 0, s0 = 0;
    bool rao_zero = false;
    bool bundle_minimal = false;  // h^0 J_C(alpha+3) = 0, i.e. s0 > alpha + 3
    bool window_empty = false;
    std::vector<int> heights;  // admissible negative heights examined
    bool heights_degree_bound = false;  // a + h - s < 0 across all probes, a = alpha + 4
    ObstructionReport obstructions;
    bool pass = false;
    std::string reason;
};

// Instance check of biliaison-minimality for a subcanonical curve: a zero Rao
// module is trivially minimal; otherwise no descending biliaison may be found
// over the supplied surfaces across all admissible negative heights.
MinimalityReport verify_minimality_subcanonical(const Curve& C,
                                                const std::vector<FactoredSurface>& surfaces,
                                                std::uint64_t seed = 1);

}  // namespace liaison
