#include "liaison/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace liaison {

VecPoly VecPoly::operator+(const VecPoly& o) const {
    VecPoly r(static_cast<int>(c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] + o.c[i];
    return r;
}
VecPoly VecPoly::operator-(const VecPoly& o) const {
    VecPoly r(static_cast<int>(c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] - o.c[i];
    return r;
}
VecPoly VecPoly::term_multiple(Fp s, const Monomial& m) const {
    VecPoly r(static_cast<int>(c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = c[i].term_multiple(s, m);
    return r;
}
VecPoly VecPoly::poly_multiple(const Polynomial& f) const {
    VecPoly r(static_cast<int>(c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] * f;
    return r;
}

int modterm_cmp(const Monomial& m1, int p1, const Monomial& m2, int p2, int split) {
    int b1 = p1 < split ? 0 : 1, b2 = p2 < split ? 0 : 1;
    if (b1 != b2) return b1 < b2 ? 1 : -1;
    int c = degrevlex_cmp(m1, m2);
    if (c != 0) return c;
    if (p1 != p2) return p1 < p2 ? 1 : -1;
    return 0;
}

std::optional<ModTerm> module_leading_term(const VecPoly& v, int split) {
    std::optional<ModTerm> best;
    for (std::size_t i = 0; i < v.c.size(); ++i) {
        if (v.c[i].is_zero()) continue;
        const Term& t = v.c[i].leading();
        if (!best ||
            modterm_cmp(t.m, static_cast<int>(i), best->m, best->pos, split) > 0)
            best = ModTerm{t.c, t.m, static_cast<int>(i)};
    }
    return best;
}

bool vec_is_homogeneous(const VecPoly& v, const FreeModule& F) {
    std::optional<int> deg;
    for (std::size_t i = 0; i < v.c.size(); ++i) {
        for (const Term& t : v.c[i].terms()) {
            int d = t.m.degree() + F.twists[i];
            if (!deg)
                deg = d;
            else if (*deg != d)
                return false;
        }
    }
    return true;
}

int vec_degree(const VecPoly& v, const FreeModule& F) {
    for (std::size_t i = 0; i < v.c.size(); ++i)
        if (!v.c[i].is_zero()) return v.c[i].leading().m.degree() + F.twists[static_cast<int>(i)];
    throw std::domain_error("degree of zero module element");
}

VecPoly module_normal_form(const VecPoly& f, const std::vector<VecPoly>& basis, int split) {
    VecPoly w = f, rem(static_cast<int>(f.c.size()));
    while (true) {
        std::optional<ModTerm> lt = module_leading_term(w, split);
        if (!lt) break;
        bool reduced = false;
        for (const VecPoly& g : basis) {
            std::optional<ModTerm> lg = module_leading_term(g, split);
            if (!lg || lg->pos != lt->pos || !lg->m.divides(lt->m)) continue;
            w = w - g.term_multiple(lt->coef / lg->coef, lt->m / lg->m);
            reduced = true;
            break;
        }
        if (!reduced) {
            Polynomial t(lt->coef, lt->m);
            rem.c[lt->pos] += t;
            w.c[lt->pos] -= t;
        }
    }
    return rem;
}

namespace {

VecPoly make_monic(const VecPoly& v, int split) {
    std::optional<ModTerm> lt = module_leading_term(v, split);
    return v.term_multiple(lt->coef.inv(), Monomial::one());
}

struct PairKey {
    int deg;
    std::size_t i, j;
    bool operator<(const PairKey& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

}  // namespace

std::vector<VecPoly> module_groebner(std::vector<VecPoly> gens, const FreeModule& F, int split,
                                     bool product_criterion) {
    std::vector<VecPoly> basis;
    std::vector<ModTerm> lts;
    for (VecPoly& g : gens) {
        if (g.is_zero()) continue;
        if (!vec_is_homogeneous(g, F)) throw precondition_error("groebner: inhomogeneous generator");
        VecPoly m = make_monic(g, split);
        basis.push_back(m);
        lts.push_back(*module_leading_term(m, split));
    }

    std::set<PairKey> queue;
    std::set<std::pair<std::size_t, std::size_t>> done;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        if (lts[i].pos != lts[j].pos) return;
        int deg = lcm(lts[i].m, lts[j].m).degree() + F.twists[lts[i].pos];
        queue.insert({deg, i, j});
    };
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

    auto processed = [&](std::size_t a, std::size_t b) {
        return done.count({std::min(a, b), std::max(a, b)}) != 0;
    };

    while (!queue.empty()) {
        PairKey pk = *queue.begin();
        queue.erase(queue.begin());
        std::size_t i = pk.i, j = pk.j;
        done.insert({i, j});

        if (product_criterion && coprime(lts[i].m, lts[j].m)) continue;
        // Chain criterion: skip when a third element divides the pair's lcm and
        // both subpairs were already treated.
        Monomial L = lcm(lts[i].m, lts[j].m);
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == i || k == j || lts[k].pos != lts[i].pos) continue;
            if (lts[k].m.divides(L) && processed(i, k) && processed(j, k)) skip = true;
        }
        if (skip) continue;

        VecPoly s = basis[i].term_multiple(Fp::one(), L / lts[i].m) -
                    basis[j].term_multiple(Fp::one(), L / lts[j].m);
        VecPoly r = module_normal_form(s, basis, split);
        if (r.is_zero()) continue;
        r = make_monic(r, split);
        std::size_t idx = basis.size();
        basis.push_back(r);
        lts.push_back(*module_leading_term(r, split));
        for (std::size_t k = 0; k < idx; ++k) push_pair(k, idx);
    }

    // Minimalize: drop elements whose leading term is divisible by another's.
    std::vector<bool> drop(basis.size(), false);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (drop[i]) continue;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || drop[j] || lts[i].pos != lts[j].pos) continue;
            if (lts[j].m.divides(lts[i].m) && !(lts[j].m == lts[i].m && j > i)) {
                drop[i] = true;
                break;
            }
        }
    }
    std::vector<VecPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!drop[i]) minimal.push_back(basis[i]);

    // Tail-reduce each element against the others; normal forms against a fixed
    // leading-term set are canonical, so one pass suffices.
    std::vector<VecPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<VecPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        VecPoly nf = module_normal_form(minimal[i], others, split);
        if (!nf.is_zero()) reduced.push_back(make_monic(nf, split));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const VecPoly& a, const VecPoly& b) {
        ModTerm la = *module_leading_term(a, split), lb = *module_leading_term(b, split);
        return modterm_cmp(la.m, la.pos, lb.m, lb.pos, split) > 0;
    });
    return reduced;
}

namespace {

VecPoly wrap1(const Polynomial& f) {
    VecPoly v(1);
    v.c[0] = f;
    return v;
}

}  // namespace

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens) {
    FreeModule F{{0}};
    std::vector<VecPoly> vs;
    for (const Polynomial& g : gens)
        if (!g.is_zero()) vs.push_back(wrap1(g));
    std::vector<VecPoly> gb = module_groebner(std::move(vs), F, 1, /*product_criterion=*/true);
    std::vector<Polynomial> out;
    out.reserve(gb.size());
    for (const VecPoly& v : gb) out.push_back(v.c[0]);
    return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gb) {
    std::vector<VecPoly> basis;
    basis.reserve(gb.size());
    for (const Polynomial& g : gb) basis.push_back(wrap1(g));
    return module_normal_form(wrap1(f), basis, 1).c[0];
}

std::vector<Polynomial> transporter(const VecPoly& v, const std::vector<VecPoly>& gens,
                                    const FreeModule& F) {
    int n = F.rank();
    if (!vec_is_homogeneous(v, F)) throw precondition_error("transporter: inhomogeneous element");
    FreeModule aug{F.twists};
    int dv = v.is_zero() ? 0 : vec_degree(v, F);
    aug.twists.push_back(dv);

    std::vector<VecPoly> work;
    VecPoly v_aug(n + 1);
    for (int i = 0; i < n; ++i) v_aug.c[i] = v.c[i];
    v_aug.c[n] = Polynomial::one();
    work.push_back(v_aug);
    for (const VecPoly& g : gens) {
        if (g.is_zero()) continue;
        VecPoly ga(n + 1);
        for (int i = 0; i < n; ++i) ga.c[i] = g.c[i];
        work.push_back(ga);
    }
    std::vector<VecPoly> gb = module_groebner(std::move(work), aug, n);
    std::vector<Polynomial> out;
    for (const VecPoly& e : gb) {
        bool main_zero = true;
        for (int i = 0; i < n; ++i)
            if (!e.c[i].is_zero()) main_zero = false;
        if (main_zero && !e.c[n].is_zero()) out.push_back(e.c[n]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// GradedIdeal

GradedIdeal::GradedIdeal() : cache_(std::make_shared<Cache>()) {}

GradedIdeal::GradedIdeal(std::vector<Polynomial> gens) : cache_(std::make_shared<Cache>()) {
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous())
            throw precondition_error("ideal generator is not homogeneous: " + g.to_string());
        gens_.push_back(g);
    }
}

GradedIdeal GradedIdeal::unit() { return GradedIdeal({Polynomial::one()}); }

GradedIdeal GradedIdeal::irrelevant() {
    return GradedIdeal({Polynomial::variable(0), Polynomial::variable(1), Polynomial::variable(2),
                        Polynomial::variable(3)});
}

const std::vector<Polynomial>& GradedIdeal::groebner() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->gb) cache_->gb = groebner_basis(gens_);
    return *cache_->gb;
}

bool GradedIdeal::contains(const Polynomial& f) const { return normal_form(f, groebner()).is_zero(); }

bool GradedIdeal::contains(const GradedIdeal& other) const {
    for (const Polynomial& g : other.generators())
        if (!contains(g)) return false;
    return true;
}

bool GradedIdeal::is_unit() const {
    const auto& gb = groebner();
    return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

int GradedIdeal::min_generator_degree() const {
    const auto& gb = groebner();
    if (gb.empty()) throw precondition_error("min degree of the zero ideal");
    int d = gb[0].degree();
    for (const Polynomial& g : gb) d = std::min(d, g.degree());
    return d;
}

long long GradedIdeal::dim_in_degree(int n) const {
    if (n < 0) return 0;
    // Count standard monomials of the complement and subtract.
    long long outside = 0;
    const auto& gb = groebner();
    for (const Monomial& m : monomials_of_degree(n)) {
        bool in_lt = false;
        for (const Polynomial& g : gb)
            if (g.leading().m.divides(m)) {
                in_lt = true;
                break;
            }
        if (!in_lt) ++outside;
    }
    return dim_ring_degree(n) - outside;
}

std::optional<bool> GradedIdeal::saturated_flag() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->saturated;
}

void GradedIdeal::set_saturated_flag(bool v) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->saturated = v;
}

Polynomial normal_form(const Polynomial& f, const GradedIdeal& I) {
    return normal_form(f, I.groebner());
}

GradedIdeal ideal_sum(const GradedIdeal& I, const GradedIdeal& J) {
    std::vector<Polynomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return GradedIdeal(std::move(gens));
}

GradedIdeal ideal_product(const GradedIdeal& I, const GradedIdeal& J) {
    std::vector<Polynomial> gens;
    for (const Polynomial& f : I.generators())
        for (const Polynomial& g : J.generators()) gens.push_back(f * g);
    return GradedIdeal(std::move(gens));
}

GradedIdeal intersect(const GradedIdeal& I, const GradedIdeal& J) {
    if (I.is_unit()) return J;
    if (J.is_unit()) return I;
    FreeModule F{{0, 0}};
    VecPoly v(2);
    v.c[0] = Polynomial::one();
    v.c[1] = Polynomial::one();
    std::vector<VecPoly> gens;
    for (const Polynomial& g : I.groebner()) {
        VecPoly w(2);
        w.c[0] = g;
        gens.push_back(w);
    }
    for (const Polynomial& h : J.groebner()) {
        VecPoly w(2);
        w.c[1] = h;
        gens.push_back(w);
    }
    return GradedIdeal(transporter(v, gens, F));
}

GradedIdeal ideal_quotient(const GradedIdeal& I, const GradedIdeal& J) {
    const auto& fs = J.groebner();
    if (fs.empty()) return GradedIdeal::unit();  // (I : 0) = R
    if (J.is_unit()) return I;
    int r = static_cast<int>(fs.size());
    FreeModule F{{}};
    VecPoly v(r);
    for (int j = 0; j < r; ++j) {
        F.twists.push_back(-fs[j].degree());
        v.c[j] = fs[j];
    }
    std::vector<VecPoly> gens;
    for (const Polynomial& g : I.groebner())
        for (int j = 0; j < r; ++j) {
            VecPoly w(r);
            w.c[j] = g;
            gens.push_back(w);
        }
    return GradedIdeal(transporter(v, gens, F));
}

SaturationResult saturate_info(const GradedIdeal& I, const GradedIdeal& J) {
    GradedIdeal cur = I;
    int iters = 0;
    while (true) {
        GradedIdeal next = ideal_quotient(cur, J);
        ++iters;
        if (next == cur) break;
        cur = next;
    }
    bool vs_irrelevant = J == GradedIdeal::irrelevant();
    if (vs_irrelevant) cur.set_saturated_flag(true);
    return {cur, iters};
}

GradedIdeal saturate(const GradedIdeal& I, const GradedIdeal& J) { return saturate_info(I, J).ideal; }

bool is_saturated(const GradedIdeal& I) {
    if (auto f = I.saturated_flag()) return *f;
    bool sat = ideal_quotient(I, GradedIdeal::irrelevant()) == I;
    I.set_saturated_flag(sat);
    return sat;
}

}  // namespace liaison
