#pragma once

#include "liaison/module.hpp"
#include "liaison/rng.hpp"

namespace liaison {

// Space curve: a saturated homogeneous ideal whose quotient has a degree-1
// Hilbert polynomial, together with cached cohomological invariants. Local
// Cohen-Macaulayness is not certified directly; the accepted proxy is
// saturation + the dimension check + a finite-length Rao module, and reports
// flag it as assumed by construction.
class Curve {
  public:
    // Saturates the input ideal and validates. strict additionally checks that
    // the quotient has projective dimension at most 3.
    static Curve make(std::vector<Polynomial> gens, bool strict = false);
    static Curve from_ideal(GradedIdeal I, bool strict = false);

    const GradedIdeal& ideal() const { return ideal_; }
    const GradedModule& coordinate_ring() const;  // R/I_C
    const GradedModule& omega() const;            // dualizing module
    const GradedModule& rao() const;              // Rao module
    const IntegerWindowFunction& rao_dims() const;

    int degree() const;
    int genus() const;
    int s0() const;  // least degree of a surface containing C
    int e() const;   // largest n with h^1 O_C(n) != 0

    long long h0_ideal(int n) const;      // dim (I_C)_n
    long long h1_structure(int n) const;  // h^1 O_C(n)
    long long h0_structure(int n) const;  // h^0 O_C(n) via duality + Euler characteristic

    // Certifies an isomorphism of the dualizing sheaf with O_C(alpha): the
    // Hilbert polynomials must match and a section with annihilator exactly
    // I_C must exist in the witnessing degree. Seeded and retried; a miss on
    // an actually subcanonical curve has probability ~ (1/p)^tries.
    std::optional<int> subcanonical_alpha(std::uint64_t seed = 1, int tries = 32) const;

    // The two independent routes to the Rao dimensions (duality vs Euler
    // characteristic bookkeeping) must agree on the certified window.
    bool duality_routes_agree() const;

    bool operator==(const Curve& o) const { return ideal_ == o.ideal_; }

  private:
    Curve() = default;
    GradedIdeal ideal_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

inline Curve make_curve(std::vector<Polynomial> gens, bool strict = false) {
    return Curve::make(std::move(gens), strict);
}

struct CurveInvariants {
    int e = 0, s0 = 0, degree = 0, genus = 0;
    IntegerWindowFunction rao_dims;
    std::optional<int> subcanonical_alpha;
};
CurveInvariants curve_invariants(const Curve& C, std::uint64_t seed = 1);

// Presents big/small for nested homogeneous ideals.
GradedModule ideal_quotient_module(const GradedIdeal& big, const GradedIdeal& small);

// Sections of the sheaf associated to a module of dimension <= 1 with no
// finite-length submodule: hf plus the first local-cohomology correction.
long long section_completed_hf(const GradedModule& S, const GradedModule& S_ext3, int n);

struct ResidualReport {
    Curve residual;           // C'' with I_{C''} = (I_C : I_{C'})
    int alpha = 0;
    bool hilbert_check_first = false;   // sections of I_{C'}/I_C match omega_{C''} twisted
    bool hilbert_check_second = false;  // sections of I_{C''}/I_C match omega_{C'} twisted
    bool annihilator_check = false;     // Ann(I_{C'}/I_C) = I_{C''}
    bool all() const { return hilbert_check_first && hilbert_check_second && annihilator_check; }
};

// Residual of a subcurve inside a subcanonical curve; verifies the structural
// identities numerically over a certified window.
ResidualReport residual_subcurve(const Curve& C, const Curve& Cp, std::uint64_t seed = 1);

}  // namespace liaison
