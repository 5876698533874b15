#include "liaison/koszul.hpp"

namespace liaison {

KoszulType KoszulType::of(int n1, int n2, int n3, int n4) {
    if (!(1 <= n1 && n1 <= n2 && n2 <= n3 && n3 <= n4))
        throw precondition_error("koszul type must satisfy 1 <= n1 <= n2 <= n3 <= n4");
    return KoszulType{{n1, n2, n3, n4}};
}

PredictedInvariants predicted_invariants(const KoszulType& t) {
    PredictedInvariants p;
    p.mu = t.mu();
    p.s0 = p.mu + t.n[0] - t.n[3];
    p.e = 2 * p.mu - t.n[2] - t.n[3] - 4;
    return p;
}

bool is_subcanonical_class(const KoszulType& t) { return t.n[0] + t.n[3] == t.n[1] + t.n[2]; }

std::vector<long long> koszul_hilbert_coefficients(const KoszulType& t) {
    std::vector<long long> c{1};
    for (int i = 0; i < 4; ++i) {
        std::vector<long long> next(c.size() + static_cast<std::size_t>(t.n[i]) - 1, 0);
        for (std::size_t a = 0; a < c.size(); ++a)
            for (int b = 0; b < t.n[i]; ++b) next[a + static_cast<std::size_t>(b)] += c[a];
        c = std::move(next);
    }
    return c;
}

namespace {

bool pair_is_coprime(const Polynomial& a, const Polynomial& b) {
    // no common divisor of positive degree <=> V(a, b) has codimension 2
    if (a.is_constant() || b.is_constant()) return true;
    GradedIdeal pair({a, b});
    return GradedModule::quotient_ring(pair).hilbert_polynomial().degree() <= 1;
}

}  // namespace

KoszulData draw_koszul(const KoszulType& t, std::uint64_t seed, int tries) {
    Rng rng(seed);
    for (int attempt = 0; attempt < tries; ++attempt) {
        KoszulData d;
        d.type = t;
        d.seed = seed;
        for (int i = 0; i < 4; ++i) d.forms[i] = rng.nonzero_form(t.n[i]);
        d.f = t.deg_f() == 0 ? Polynomial(rng.nonzero_scalar()) : rng.nonzero_form(t.deg_f());
        d.g = t.deg_g() == 0 ? Polynomial(rng.nonzero_scalar()) : rng.nonzero_form(t.deg_g());

        GradedIdeal full({d.forms[0], d.forms[1], d.forms[2], d.forms[3]});
        if (!GradedModule::quotient_ring(full).hilbert_polynomial().is_zero()) continue;
        std::vector<Polynomial> all = {d.forms[0], d.forms[1], d.forms[2], d.forms[3]};
        if (!d.f.is_constant()) all.push_back(d.f);
        if (!d.g.is_constant()) all.push_back(d.g);
        bool coprime_ok = true;
        for (std::size_t i = 0; i < all.size() && coprime_ok; ++i)
            for (std::size_t j = i + 1; j < all.size() && coprime_ok; ++j)
                if (!pair_is_coprime(all[i], all[j])) coprime_ok = false;
        if (!coprime_ok) continue;
        return d;
    }
    throw precondition_error("koszul draw: genericity conditions failed repeatedly; re-seed");
}

GradedModule koszul_module(const KoszulData& d) {
    GradedIdeal I({d.forms[0], d.forms[1], d.forms[2], d.forms[3]});
    GradedModule m = GradedModule::quotient_ring(I);
    if (!m.finite_length()) throw precondition_error("koszul module: sequence is not regular");
    return m;
}

Curve koszul_minimal_curve(const KoszulData& d) {
    const Polynomial &f1 = d.forms[0], &f2 = d.forms[1], &f3 = d.forms[2], &f4 = d.forms[3];
    std::vector<Polynomial> gens = {d.f * f1 * f1, f1 * f2, d.g * f2 * f2,
                                    d.f * f1 * f4 + d.g * f2 * f3};
    return Curve::make(std::move(gens));
}

std::vector<FactoredSurface> koszul_surfaces(const KoszulData& d, const Curve& C, int degree,
                                             std::uint64_t seed, int random_count) {
    std::vector<Polynomial> candidates;
    const auto& gb = C.ideal().groebner();
    for (const Polynomial& g : gb)
        if (g.degree() == degree) candidates.push_back(g);
    Rng rng(seed);
    for (int k = 0; k < random_count; ++k) {
        Polynomial q;
        for (const Polynomial& g : gb)
            if (g.degree() <= degree) q += g * rng.form(degree - g.degree());
        if (!q.is_zero() && !q.is_constant()) candidates.push_back(q);
    }
    std::vector<FactoredSurface> out;
    for (const Polynomial& q : candidates) {
        auto cof = divide_exact(q, d.forms[0]);
        if (cof && !cof->is_constant())
            out.push_back(FactoredSurface::with_factors(q, {{d.forms[0], 1}, {*cof, 1}}));
        else
            out.push_back(FactoredSurface::single(q));
    }
    return out;
}

}  // namespace liaison
