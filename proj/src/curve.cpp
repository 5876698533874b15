#include "liaison/curve.hpp"

#include <algorithm>

namespace liaison {

struct Curve::Cache {
    std::mutex mu;
    std::optional<GradedModule> ring, omega, rao;
    std::optional<IntegerWindowFunction> rao_dims;
    std::optional<std::pair<int, int>> deg_genus;
};

Curve Curve::make(std::vector<Polynomial> gens, bool strict) {
    return from_ideal(GradedIdeal(std::move(gens)), strict);
}

Curve Curve::from_ideal(GradedIdeal I, bool strict) {
    Curve c;
    c.cache_ = std::make_shared<Cache>();
    c.ideal_ = saturate(I, GradedIdeal::irrelevant());
    if (c.ideal_.is_unit() || c.ideal_.is_zero())
        throw precondition_error("not a curve: ideal saturates to the unit or zero ideal");

    const GradedModule& ring = c.coordinate_ring();
    const RatPoly& hp = ring.hilbert_polynomial();
    if (hp.degree() != 1)
        throw precondition_error("not a curve: Hilbert polynomial of the quotient is " +
                                 hp.to_string());
    if (!hp.coeff(1).is_integer() || !hp.coeff(0).is_integer() || hp.coeff(1).n < 1)
        throw std::logic_error("curve: malformed Hilbert polynomial " + hp.to_string());
    if (strict && ring.minimal_resolution().length() > 3)
        throw precondition_error("strict mode: quotient has projective dimension above 3");

    // finite-length Rao module is part of the locally-CM proxy
    GradedModule e3 = ring.ext(3);
    GradedModule rao = e3.is_zero_module() ? GradedModule() : dual_finite_length(e3).shift(4);
    if (!rao.finite_length())
        throw precondition_error("not a curve: Rao module has infinite length");
    {
        std::lock_guard<std::mutex> lock(c.cache_->mu);
        c.cache_->rao = rao;
        c.cache_->rao_dims = rao.is_zero_module() ? IntegerWindowFunction{} : rao.finite_support();
    }
    return c;
}

const GradedModule& Curve::coordinate_ring() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->ring) cache_->ring = GradedModule::quotient_ring(ideal_);
    return *cache_->ring;
}

const GradedModule& Curve::omega() const {
    const GradedModule& ring = coordinate_ring();
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->omega) cache_->omega = ring.ext(2).shift(-4);
    return *cache_->omega;
}

const GradedModule& Curve::rao() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    return *cache_->rao;
}

const IntegerWindowFunction& Curve::rao_dims() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    return *cache_->rao_dims;
}

int Curve::degree() const {
    const RatPoly& hp = coordinate_ring().hilbert_polynomial();
    return static_cast<int>(hp.coeff(1).n);
}

int Curve::genus() const {
    const RatPoly& hp = coordinate_ring().hilbert_polynomial();
    return static_cast<int>(1 - hp.coeff(0).n);
}

int Curve::s0() const { return ideal_.min_generator_degree(); }

int Curve::e() const {
    const GradedModule& w = omega();
    if (w.is_zero_module()) throw std::logic_error("curve has zero dualizing module");
    return -w.min_generator_degree();
}

long long Curve::h0_ideal(int n) const {
    if (n < 0) return 0;
    return dim_ring_degree(n) - coordinate_ring().hilbert_function(n);
}

long long Curve::h1_structure(int n) const { return omega().hilbert_function(-n); }

long long Curve::h0_structure(int n) const {
    Rat chi = coordinate_ring().hilbert_polynomial().eval(n);
    return chi.n + h1_structure(n);
}

bool Curve::duality_routes_agree() const {
    const IntegerWindowFunction& rd = rao_dims();
    int lo = rd.hi < rd.lo ? -3 : rd.lo - 3;
    int hi = rd.hi < rd.lo ? 3 : rd.hi + 3;
    for (int n = lo - 1; n <= hi + 1; ++n) {
        long long euler_route = h0_structure(n) - coordinate_ring().hilbert_function(n);
        if (rd.value(n) != euler_route) return false;
    }
    return true;
}

std::optional<int> Curve::subcanonical_alpha(std::uint64_t seed, int tries) const {
    const GradedModule& w = omega();
    const RatPoly& hp_w = w.hilbert_polynomial();
    const RatPoly& hp_r = coordinate_ring().hilbert_polynomial();
    // candidate alpha from matching Hilbert polynomials: hp_w(n) = hp_r(n + a)
    if (hp_w.coeff(1) != hp_r.coeff(1)) return std::nullopt;
    Rat a = (hp_w.coeff(0) - hp_r.coeff(0)) * Rat(1, hp_r.coeff(1).n);
    if (!a.is_integer()) return std::nullopt;
    int alpha = static_cast<int>(a.n);

    // necessary numerical condition: the section counts of the dualizing sheaf
    // and of the twisted structure sheaf must agree in every degree
    {
        int wlo = w.min_generator_degree() - 2, whi = wlo + 4;
        const Resolution& wres = w.minimal_resolution();
        for (int i = 0; i <= wres.length(); ++i)
            for (int t : wres.twists(i)) whi = std::max(whi, t + 2);
        const IntegerWindowFunction& rd = rao_dims();
        if (rd.hi >= rd.lo) {
            wlo = std::min(wlo, rd.lo - alpha - 2);
            whi = std::max(whi, rd.hi - alpha + 2);
        }
        for (int n = wlo; n <= whi; ++n)
            if (w.hilbert_function(n) != h0_structure(n + alpha)) return std::nullopt;
    }

    std::vector<VecPoly> basis = w.degreewise_basis(-alpha);
    if (basis.empty()) return std::nullopt;
    const std::vector<int>& wtw = w.presentation().row_twists;

    // cheap per-section rejection: in low degrees, the forms killing the
    // section must be exactly the ideal slice
    auto quick_reject = [&](const VecPoly& theta) {
        for (int d = std::max(1, s0() - 1); d <= s0() + 2; ++d) {
            auto monos = monomials_of_degree(d);
            std::vector<std::vector<Fp>> cols;
            for (const Monomial& m : monos)
                cols.push_back(w.reduce_to_basis(theta.term_multiple(Fp::one(), m), d - alpha));
            MatFp mat(cols.empty() ? 0 : cols[0].size(), cols.size());
            for (std::size_t j = 0; j < cols.size(); ++j)
                for (std::size_t i = 0; i < cols[j].size(); ++i) mat.set(i, j, cols[j][i]);
            long long ker = static_cast<long long>(mat.cols() - mat.rank());
            if (ker != h0_ideal(d)) return true;
        }
        return false;
    };

    Rng rng(seed);
    for (int t = 0; t < tries; ++t) {
        VecPoly theta(static_cast<int>(wtw.size()));
        if (t == 0) {
            for (const VecPoly& b : basis) theta = theta + b;
        } else {
            for (const VecPoly& b : basis) theta = theta + b.term_multiple(rng.scalar(), Monomial::one());
        }
        if (theta.is_zero() || quick_reject(theta)) continue;
        GradedIdeal ann = w.element_annihilator(theta);
        if (!ann.contains(ideal_))
            throw std::logic_error("omega section not annihilated by the curve ideal");
        if (ann == ideal_) return alpha;
    }
    return std::nullopt;
}

CurveInvariants curve_invariants(const Curve& C, std::uint64_t seed) {
    CurveInvariants inv;
    inv.e = C.e();
    inv.s0 = C.s0();
    inv.degree = C.degree();
    inv.genus = C.genus();
    inv.rao_dims = C.rao_dims();
    inv.subcanonical_alpha = C.subcanonical_alpha(seed);
    return inv;
}

GradedModule ideal_quotient_module(const GradedIdeal& big, const GradedIdeal& small) {
    if (!big.contains(small)) throw precondition_error("ideal_quotient_module: not nested");
    const auto& gb = big.groebner();
    const auto& gs = small.groebner();
    GradedMatrix stacked({0}, {});
    for (const Polynomial& g : gb) {
        stacked.col_twists.push_back(g.degree());
        stacked.e[0].push_back(g);
    }
    for (const Polynomial& s : gs) {
        stacked.col_twists.push_back(s.degree());
        stacked.e[0].push_back(s);
    }
    GradedMatrix syz = syzygies(stacked);
    int nb = static_cast<int>(gb.size());
    std::vector<int> gen_twists(stacked.col_twists.begin(), stacked.col_twists.begin() + nb);
    GradedMatrix rel(gen_twists, {});
    for (int j = 0; j < syz.ncols(); ++j) {
        bool zero = true;
        for (int i = 0; i < nb; ++i)
            if (!syz.e[i][j].is_zero()) zero = false;
        if (zero) continue;
        rel.col_twists.push_back(syz.col_twists[j]);
        for (int i = 0; i < nb; ++i) rel.e[i].push_back(syz.e[i][j]);
    }
    return GradedModule::from_presentation(std::move(rel));
}

long long section_completed_hf(const GradedModule& S, const GradedModule& S_ext3, int n) {
    return S.hilbert_function(n) + S_ext3.hilbert_function(-n - 4);
}

namespace {

// Equality of the section functions of S~ and of omega(h): checks the window
// where either side can be irregular, then Hilbert polynomials for the tail.
bool sections_match_omega(const GradedModule& S, const GradedModule& omega, int h) {
    GradedModule s3 = S.ext(3);
    if (!s3.is_zero_module() && !s3.finite_length()) return false;
    // window past which both section functions follow their Hilbert polynomials
    int hi = 0, lo = 0;
    auto widen = [&](const GradedModule& m, int off) {
        const Resolution& r = m.minimal_resolution();
        if (r.f0_twists.empty()) return;
        for (int i = 0; i <= r.length(); ++i)
            for (int t : r.twists(i)) {
                hi = std::max(hi, t + off);
                lo = std::min(lo, t + off);
            }
    };
    widen(S, 0);
    widen(omega, -h);
    if (!s3.is_zero_module()) widen(s3, 0);
    for (int n = lo - 1; n <= hi + 1; ++n)
        if (section_completed_hf(S, s3, n) != omega.hilbert_function(n + h)) return false;
    RatPoly lhs = S.hilbert_polynomial();
    RatPoly rhs = omega.hilbert_polynomial();
    for (int n = hi + 1; n <= hi + 4; ++n)
        if (!(lhs.eval(n) == rhs.eval(n + h))) return false;
    return true;
}

}  // namespace

ResidualReport residual_subcurve(const Curve& C, const Curve& Cp, std::uint64_t seed) {
    std::optional<int> alpha = C.subcanonical_alpha(seed);
    if (!alpha) throw precondition_error("residual_subcurve: curve is not subcanonical");
    if (!(Cp.ideal().contains(C.ideal())))
        throw precondition_error("residual_subcurve: the subcurve ideal does not contain I_C");
    if (Cp.ideal() == C.ideal())
        throw precondition_error("residual_subcurve: the subcurve must differ from C");

    GradedIdeal res_ideal = ideal_quotient(C.ideal(), Cp.ideal());
    ResidualReport rep{Curve::from_ideal(res_ideal), *alpha, false, false, false};

    GradedModule s1 = ideal_quotient_module(Cp.ideal(), C.ideal());
    GradedModule s2 = ideal_quotient_module(rep.residual.ideal(), C.ideal());
    rep.hilbert_check_first = sections_match_omega(s1, rep.residual.omega(), -*alpha);
    rep.hilbert_check_second = sections_match_omega(s2, Cp.omega(), -*alpha);
    rep.annihilator_check = s1.annihilator() == rep.residual.ideal();
    return rep;
}

}  // namespace liaison
