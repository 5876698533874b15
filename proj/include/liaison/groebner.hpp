#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "liaison/polynomial.hpp"

namespace liaison {

struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Free module ⊕_i R(-twists[i]); generator e_i sits in degree twists[i].
struct FreeModule {
    std::vector<int> twists;
    int rank() const { return static_cast<int>(twists.size()); }
};

// Element of a free module, one polynomial component per position.
struct VecPoly {
    std::vector<Polynomial> c;

    explicit VecPoly(int rank = 0) : c(rank) {}
    bool is_zero() const {
        for (const auto& p : c)
            if (!p.is_zero()) return false;
        return true;
    }
    bool operator==(const VecPoly&) const = default;

    VecPoly operator+(const VecPoly& o) const;
    VecPoly operator-(const VecPoly& o) const;
    VecPoly term_multiple(Fp s, const Monomial& m) const;
    VecPoly poly_multiple(const Polynomial& f) const;
};

struct ModTerm {
    Fp coef;
    Monomial m;
    int pos;
};

// Term-over-position order: degrevlex on the monomial, then smaller position
// wins. Positions >= split form a minor block ranked below everything in the
// major block (used to read syzygies off an augmented basis).
int modterm_cmp(const Monomial& m1, int p1, const Monomial& m2, int p2, int split);

// Largest term of a nonzero element; nullopt for zero.
std::optional<ModTerm> module_leading_term(const VecPoly& v, int split);

bool vec_is_homogeneous(const VecPoly& v, const FreeModule& F);
// Degree of a nonzero homogeneous element.
int vec_degree(const VecPoly& v, const FreeModule& F);

// Fully reduced normal form of f against basis (every term irreducible).
VecPoly module_normal_form(const VecPoly& f, const std::vector<VecPoly>& basis, int split);

// Buchberger. Returns the reduced (monic, auto-reduced) basis, sorted with
// decreasing leading terms. product_criterion is only sound for rank-1
// computations without a tracking block; callers assert that.
std::vector<VecPoly> module_groebner(std::vector<VecPoly> gens, const FreeModule& F, int split,
                                     bool product_criterion = false);

// Ring-level entry points (rank-1 wrappers).
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens);
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gb);

// Generators of the transporter ideal { a in R : a*v ∈ <gens> }, for v and
// gens inside the twisted free module F.
std::vector<Polynomial> transporter(const VecPoly& v, const std::vector<VecPoly>& gens,
                                    const FreeModule& F);

// Homogeneous ideal with a cached reduced Groebner basis. Values are
// immutable; the cache is shared between copies and filled at most once.
class GradedIdeal {
  public:
    GradedIdeal();  // zero ideal
    explicit GradedIdeal(std::vector<Polynomial> gens);  // throws on inhomogeneous input
    static GradedIdeal unit();
    static GradedIdeal irrelevant();  // (X, Y, Z, T)

    const std::vector<Polynomial>& generators() const { return gens_; }
    const std::vector<Polynomial>& groebner() const;

    bool contains(const Polynomial& f) const;
    bool contains(const GradedIdeal& other) const;
    bool is_zero() const { return groebner().empty(); }
    bool is_unit() const;
    // Smallest degree of a nonzero element (= least degree in the reduced GB).
    int min_generator_degree() const;
    long long dim_in_degree(int n) const;  // dim_k of the degree-n slice

    std::optional<bool> saturated_flag() const;
    void set_saturated_flag(bool v) const;

    bool operator==(const GradedIdeal& o) const { return groebner() == o.groebner(); }

  private:
    std::vector<Polynomial> gens_;
    struct Cache {
        std::mutex mu;
        std::optional<std::vector<Polynomial>> gb;
        std::optional<bool> saturated;
    };
    std::shared_ptr<Cache> cache_;
};

Polynomial normal_form(const Polynomial& f, const GradedIdeal& I);

GradedIdeal ideal_sum(const GradedIdeal& I, const GradedIdeal& J);
GradedIdeal ideal_product(const GradedIdeal& I, const GradedIdeal& J);
GradedIdeal intersect(const GradedIdeal& I, const GradedIdeal& J);
// (I : J) = { f : f*J ⊆ I }.
GradedIdeal ideal_quotient(const GradedIdeal& I, const GradedIdeal& J);

struct SaturationResult {
    GradedIdeal ideal;
    int iterations;
};
// (I : J^∞) by iterating quotients until the reduced GB stabilizes.
SaturationResult saturate_info(const GradedIdeal& I, const GradedIdeal& J);
GradedIdeal saturate(const GradedIdeal& I, const GradedIdeal& J);
bool is_saturated(const GradedIdeal& I);

}  // namespace liaison
