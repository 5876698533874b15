#include "doctest.h"
#include "liaison/koszul.hpp"
#include "liaison/liaison_ops.hpp"

using namespace liaison;

namespace {

Polynomial P(const std::string& s) { return Polynomial::parse(s); }

Curve curve(std::initializer_list<const char*> gens) {
    std::vector<Polynomial> v;
    for (const char* g : gens) v.push_back(P(g));
    return Curve::make(std::move(v));
}

Curve skew_lines() { return curve({"X*Z", "X*T", "Y*Z", "Y*T"}); }
FactoredSurface quadric() { return FactoredSurface::single(P("X*Z - Y*T")); }

// Injectivity of multiplication on a window of degrees, by kernel ranks.
bool mult_injective(const GradedModule& M, const Polynomial& f, int lo, int hi) {
    for (int n = lo; n <= hi; ++n) {
        MatFp m = M.multiplication_matrix(f, n);
        if (m.rank() != m.cols()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("link of two skew lines across a (2,3) complete intersection") {
    Curve c = skew_lines();
    Polynomial F = P("X*Z - Y*T"), G = P("X^2*T");  // X^2*T = X * (X*T) lies in I_C
    Curve out = link(c, F, G);
    CHECK(out.degree() == 4);
    // duality sends the dimension at 0 to a + b - 4 - 0 = 1
    CHECK(out.rao_dims().nonzero() == std::map<int, long long>{{1, 1}});
    // double linkage restores the curve ideal exactly
    Curve back = link(out, F, G);
    CHECK(back == c);
}

TEST_CASE("link rejects non complete intersections") {
    Curve l = curve({"X", "Y"});
    CHECK_THROWS_AS(link(l, P("X"), P("X^2")), precondition_error);
    CHECK_THROWS_AS(link(l, P("X"), P("Z")), precondition_error);  // Z not in I_C
}

TEST_CASE("ascending biliaison raises the rao module") {
    Curve c = skew_lines();
    BiliaisonStep step = elementary_biliaison(c, quadric(), P("X"));
    CHECK(step.height == 1);
    CHECK(step.target.degree() == 4);
    CHECK(step.target.rao_dims().nonzero() == std::map<int, long long>{{1, 1}});
    CHECK(step.target.genus() == 0);
    // two height-1 steps equal one height-2 step at the level of rao dims
    BiliaisonStep twice = elementary_biliaison(step.target, quadric(), P("Y"));
    BiliaisonStep once = elementary_biliaison(c, quadric(), P("X*Y"));
    CHECK(twice.target.rao_dims().nonzero() == once.target.rao_dims().nonzero());
    // a complete intersection stays arithmetically Cohen-Macaulay
    Curve q22 = curve({"X*Z - Y*T", "X*Y - Z^2 + T^2"});
    BiliaisonStep ci_step = elementary_biliaison(q22, quadric(), P("X"));
    CHECK(ci_step.target.rao_dims().is_zero());
}

TEST_CASE("biliaison preconditions") {
    Curve c = skew_lines();
    CHECK_THROWS_AS(elementary_biliaison(c, FactoredSurface::single(P("X*Y")), P("X")),
                    precondition_error);  // surface misses the curve
    CHECK_THROWS_AS(elementary_biliaison(c, quadric(), P("X*Z - Y*T")),
                    precondition_error);  // multiplier vanishes on the surface
}

TEST_CASE("hom dimension against the dualizing module") {
    Curve c = skew_lines();
    CHECK(hom_dimension(c, quadric(), -1) == 0);  // e = -2 collapses the window
    CHECK(hom_dimension(c, quadric(), -2) == 0);
    CHECK_THROWS_AS(hom_dimension(c, quadric(), 0), precondition_error);
    // raised curve: h^1 O(-1) = 3 by the Euler-characteristic route
    Curve c1 = elementary_biliaison(c, quadric(), P("X")).target;
    CHECK(c1.h0_structure(-1) == 0);
    CHECK(c1.coordinate_ring().hilbert_polynomial().eval(-1) == Rat(-3));
    CHECK(hom_dimension(c1, quadric(), -1) == 3);
}

TEST_CASE("injective hom detection") {
    Curve c = skew_lines();
    HomProbe empty = injective_hom_exists(c, quadric(), -1);
    CHECK(empty.verdict == HomVerdict::no_nonzero_hom);
    CHECK(empty.dim_hom == 0);

    // the raised curve descends: its section space on the irreducible quadric
    // has no strict divisors to kill it
    Curve c1 = elementary_biliaison(c, quadric(), P("X")).target;
    HomProbe probe = injective_hom_exists(c1, quadric(), -1);
    CHECK(probe.verdict == HomVerdict::injective_exists);
    CHECK(probe.dim_hom == 3);
    REQUIRE(probe.witness.has_value());
    // certified witness: q/p * witness nonzero for every declared factor
    CHECK(probe.factors.empty());  // irreducible declaration: no strict divisors tested
}

TEST_CASE("witness survives multiplication by every cofactor") {
    // reducible surface through the raised curve: q * extra linear form
    Curve c = skew_lines();
    Curve c1 = elementary_biliaison(c, quadric(), P("X")).target;
    // a cubic surface (XZ-YT)*X contains c1; declare its factorization
    Polynomial q3 = P("X*Z - Y*T") * P("X");
    FactoredSurface fs = FactoredSurface::with_factors(q3, {{P("X*Z - Y*T"), 1}, {P("X"), 1}});
    CHECK(c1.ideal().contains(q3));
    HomProbe probe = injective_hom_exists(c1, fs, -1);
    // h^0 omega(4-3-1) = h^1 O_C(0) on a (3,1) divisor: genus 0, so via duality
    // the space can still be nonzero or not; just check internal consistency
    if (probe.dim_hom == 0) {
        CHECK(probe.verdict == HomVerdict::no_nonzero_hom);
    } else if (probe.verdict == HomVerdict::injective_exists) {
        REQUIRE(probe.witness.has_value());
        for (const FactorKernelInfo& fk : probe.factors) {
            if (fk.cofactor.is_constant()) continue;
            VecPoly prod = probe.witness->poly_multiple(fk.cofactor);
            CHECK(!c1.omega().element_is_zero(prod, 4 - 3 - 1 + fk.cofactor.degree()));
        }
    }
}

TEST_CASE("obstruction report over skew lines") {
    Curve c = skew_lines();
    std::vector<FactoredSurface> qs = {quadric()};
    ObstructionReport rep = descending_obstruction_report(c, qs, -2, -1);
    CHECK(rep.probes.size() == 2);
    for (const HomProbe& p : rep.probes) CHECK(p.verdict == HomVerdict::no_nonzero_hom);
    CHECK(!rep.descent_found);
}

TEST_CASE("obstruction report finds the descent from the raised curve") {
    Curve c = skew_lines();
    Curve c1 = elementary_biliaison(c, quadric(), P("X")).target;
    ObstructionReport rep = descending_obstruction_report(c1, {quadric()}, -1, -1);
    CHECK(rep.descent_found);
    REQUIRE(rep.first_descent.has_value());
    CHECK(rep.probes[*rep.first_descent].verdict == HomVerdict::injective_exists);
}

TEST_CASE("descending biliaison round trip to minimality") {
    Curve c = skew_lines();
    Curve c1 = elementary_biliaison(c, quadric(), P("X")).target;
    BiliaisonStep down = descending_biliaison(c1, quadric(), -1, 5);
    CHECK(down.height == -1);
    CHECK(down.target.rao_dims().nonzero() == std::map<int, long long>{{0, 1}});
    CHECK(down.target.degree() == 2);
    REQUIRE(down.links.has_value());
    CHECK(down.links->first.degree() - down.links->second.degree() == 1);
}

TEST_CASE("restriction of an injective multiplication stays injective") {
    // C' = one line inside C = two skew lines, both on the quadric
    Curve c = skew_lines();
    Curve l = curve({"X", "Y"});
    GradedIdeal q({P("X*Z - Y*T")});
    GradedModule jc = ideal_quotient_module(c.ideal(), q);
    GradedModule jl = ideal_quotient_module(l.ideal(), q);
    for (const char* fs : {"X", "Z + T", "X + Y + Z"}) {
        Polynomial f = P(fs);
        if (mult_injective(jc, f, 2, 6)) {
            CHECK(mult_injective(jl, f, 1, 6));
        }
        // nonvanishing transfers the other way: mult on the smaller module is
        // nonzero iff f misses the surface
        bool on_q = q.contains(f);
        bool zero_big = true, zero_small = true;
        for (int n = 2; n <= 5; ++n) {
            if (!jc.multiplication_matrix(f, n).is_zero()) zero_big = false;
            if (!jl.multiplication_matrix(f, n).is_zero()) zero_small = false;
        }
        CHECK(zero_big == on_q);
        CHECK(zero_small == on_q);
    }
}

TEST_CASE("fundamental diagram") {
    Curve c = skew_lines();
    std::string why;
    CHECK(fundamental_diagram_check(c, quadric(), P("X"), -4, 4, &why));
    // degenerate: multiplier equal to the surface equation
    CHECK(fundamental_diagram_check(c, quadric(), P("X*Z - Y*T"), -4, 4, &why));
    // another corpus curve and multiplier
    Curve q22 = curve({"X*Z - Y*T", "X*Y - Z^2 + T^2"});
    CHECK(fundamental_diagram_check(q22, quadric(), P("Y"), -3, 3, &why));
    Curve c1 = elementary_biliaison(c, quadric(), P("X")).target;
    CHECK(fundamental_diagram_check(c1, quadric(), P("T"), -3, 3, &why));
}

TEST_CASE("minimality of the basic subcanonical instances") {
    // two skew lines: nonzero rao module but empty admissible window
    Curve c = skew_lines();
    MinimalityReport r1 = verify_minimality_subcanonical(c, {quadric()});
    CHECK(r1.pass);
    CHECK(r1.window_empty);
    CHECK(r1.alpha == -2);
    CHECK(r1.bundle_minimal);
    // complete intersection: zero rao module
    Curve q22 = curve({"X*Z - Y*T", "X*Y - Z^2 + T^2"});
    MinimalityReport r2 = verify_minimality_subcanonical(q22, {});
    CHECK(r2.pass);
    CHECK(r2.rao_zero);
    CHECK(r2.alpha == 0);
    // the raised curve is subcanonical? it needs not be; if it is, the verdict
    // must be a failure since it descends
    Curve c1 = elementary_biliaison(c, quadric(), P("X")).target;
    if (c1.subcanonical_alpha().has_value()) {
        MinimalityReport r3 = verify_minimality_subcanonical(c1, {quadric()});
        CHECK(!r3.pass);
    }
    // non-subcanonical input is rejected
    Curve tc = curve({"X*Z - Y^2", "X*T - Y*Z", "Y*T - Z^2"});
    CHECK_THROWS_AS(verify_minimality_subcanonical(tc, {}), precondition_error);
}

TEST_CASE("surface enumeration") {
    Curve c = skew_lines();
    auto qs = enumerate_surfaces(c, 2, 7);
    CHECK(qs.size() >= 4);
    for (const FactoredSurface& q : qs) CHECK(c.ideal().contains(q.q));
}
