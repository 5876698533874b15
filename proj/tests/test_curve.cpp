#include "doctest.h"
#include "liaison/curve.hpp"

using namespace liaison;

namespace {

Polynomial P(const std::string& s) { return Polynomial::parse(s); }

Curve curve(std::initializer_list<const char*> gens) {
    std::vector<Polynomial> v;
    for (const char* g : gens) v.push_back(P(g));
    return Curve::make(std::move(v));
}

Curve skew_lines() { return curve({"X*Z", "X*T", "Y*Z", "Y*T"}); }
Curve line_xy() { return curve({"X", "Y"}); }
Curve ci22() { return curve({"X*Z - Y*T", "X*Y - Z^2 + T^2"}); }
Curve twisted_cubic() { return curve({"X*Z - Y^2", "X*T - Y*Z", "Y*T - Z^2"}); }

}  // namespace

TEST_CASE("make_curve accepts curves and rejects other dimensions") {
    Curve l = line_xy();
    CHECK(l.degree() == 1);
    CHECK(l.genus() == 0);
    CHECK_THROWS_AS(curve({"X^2", "X*Y"}), precondition_error);  // a surface
    CHECK_THROWS_AS(curve({"X"}), precondition_error);           // a plane
    CHECK_THROWS_AS(curve({"X", "Y", "Z"}), precondition_error); // a point
    CHECK_THROWS_AS(curve({"1"}), precondition_error);
    // saturation fixpoint: the skew-lines ideal is already saturated
    Curve c = skew_lines();
    CHECK(c.ideal() == GradedIdeal({P("X*Z"), P("X*T"), P("Y*Z"), P("Y*T")}));
    CHECK(is_saturated(c.ideal()));
    // an unsaturated input gets saturated on the way in
    Curve c2 = curve({"X*Z", "X*T", "Y*Z", "Y*T", "X*X*Y - X*X*Y"});
    CHECK(c2 == c);
}

TEST_CASE("degree and genus") {
    CHECK(line_xy().degree() == 1);
    CHECK(line_xy().genus() == 0);
    Curve s = skew_lines();
    CHECK(s.degree() == 2);
    CHECK(s.genus() == -1);
    Curve q = ci22();
    CHECK(q.degree() == 4);
    CHECK(q.genus() == 1);
    Curve t = twisted_cubic();
    CHECK(t.degree() == 3);
    CHECK(t.genus() == 0);
}

TEST_CASE("rao module dims") {
    // complete intersections are arithmetically Cohen-Macaulay
    CHECK(ci22().rao().is_zero_module());
    CHECK(ci22().rao_dims().is_zero());
    CHECK(twisted_cubic().rao_dims().is_zero());
    // two skew lines: one-dimensional in degree 0
    Curve s = skew_lines();
    CHECK(s.rao_dims().nonzero() == std::map<int, long long>{{0, 1}});
    CHECK(line_xy().rao_dims().is_zero());
}

TEST_CASE("h0 of the ideal") {
    Curve s = skew_lines();
    CHECK(s.h0_ideal(1) == 0);
    CHECK(s.h0_ideal(2) == 4);
    CHECK(s.h0_ideal(-1) == 0);
    CHECK(s.h0_ideal(-5) == 0);
    CHECK(ci22().h0_ideal(2) == 2);
}

TEST_CASE("h1 of the structure sheaf") {
    Curve s = skew_lines();
    CHECK(s.h1_structure(-2) == 2);
    CHECK(s.h1_structure(0) == 0);
    CHECK(s.h1_structure(-3) == 4);
    CHECK(ci22().h1_structure(0) == 1);  // genus-1 quartic
    CHECK(ci22().h1_structure(1) == 0);
}

TEST_CASE("e and s0") {
    Curve s = skew_lines();
    CHECK(s.e() == -2);
    CHECK(s.s0() == 2);
    Curve q = ci22();
    CHECK(q.e() == 0);
    CHECK(q.s0() == 2);
    CHECK(line_xy().e() == -2);
    CHECK(line_xy().s0() == 1);
    // rational normal cubic: O_C(n) = O_{P^1}(3n), so h^1 O_C(-1) = h^1 O(-3) = 2
    CHECK(twisted_cubic().e() == -1);
    CHECK(twisted_cubic().s0() == 2);
}

TEST_CASE("dualizing module dims") {
    // line: canonical sheaf of P^1 has sections of O(n-2)
    Curve l = line_xy();
    for (int n = -1; n <= 5; ++n)
        CHECK(l.omega().hilbert_function(n) == std::max(0, n - 1));
    // skew lines: two copies
    Curve s = skew_lines();
    for (int n = -1; n <= 5; ++n)
        CHECK(s.omega().hilbert_function(n) == 2 * std::max(0, n - 1));
    // CI(2,2): numerically the coordinate ring itself
    Curve q = ci22();
    for (int n = -2; n <= 5; ++n)
        CHECK(q.omega().hilbert_function(n) == q.coordinate_ring().hilbert_function(n));
}

TEST_CASE("rao dims agree across the two duality routes") {
    for (const Curve& c : {skew_lines(), line_xy(), ci22(), twisted_cubic()})
        CHECK(c.duality_routes_agree());
}

TEST_CASE("subcanonical detection") {
    CHECK(ci22().subcanonical_alpha() == 0);
    CHECK(skew_lines().subcanonical_alpha() == -2);
    CHECK(line_xy().subcanonical_alpha() == -2);
    // twisted cubic: omega = O(-2) restricted... the rational normal curve has
    // omega_C = O_C(-2) pulled back from degree... h^1 O_C(n) = h^0 O_{P^1}(-3n-2)
    // which is not of the form h^0 O_C(a - n) for integer a on C, so no alpha
    // matches the Hilbert polynomials: 2g-2 = -2 over degree 3 is not integral.
    CHECK(!twisted_cubic().subcanonical_alpha().has_value());
}

TEST_CASE("residual subcurve inside two skew lines") {
    Curve c = skew_lines();
    Curve l1 = line_xy();
    ResidualReport rep = residual_subcurve(c, l1);
    CHECK(rep.residual == curve({"Z", "T"}));
    CHECK(rep.alpha == -2);
    CHECK(rep.hilbert_check_first);
    CHECK(rep.hilbert_check_second);
    CHECK(rep.annihilator_check);
    // symmetry: the residual of the residual is the original subcurve
    ResidualReport back = residual_subcurve(c, rep.residual);
    CHECK(back.residual == l1);
    CHECK(back.all());
    // strictness
    CHECK_THROWS_AS(residual_subcurve(ci22(), ci22()), precondition_error);
    // non-subcanonical curves are rejected
    CHECK_THROWS_AS(residual_subcurve(twisted_cubic(), line_xy()), precondition_error);
}

TEST_CASE("curve invariants aggregate") {
    CurveInvariants inv = curve_invariants(skew_lines());
    CHECK(inv.degree == 2);
    CHECK(inv.genus == -1);
    CHECK(inv.e == -2);
    CHECK(inv.s0 == 2);
    CHECK(inv.subcanonical_alpha == -2);
    CHECK(inv.rao_dims.nonzero() == std::map<int, long long>{{0, 1}});
}
