#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "liaison/graded_matrix.hpp"
#include "liaison/ratpoly.hpp"

namespace liaison {

// Ranks and twists of a minimal graded free resolution.
struct BettiTable {
    std::map<std::pair<int, int>, long long> beta;  // (homological index, twist) -> rank
    long long value(int i, int j) const {
        auto it = beta.find({i, j});
        return it == beta.end() ? 0 : it->second;
    }
    int length() const;
    bool operator==(const BettiTable&) const = default;
    std::string to_string() const;
};

// Degreewise dimension profile with certified-zero values outside [lo, hi].
struct IntegerWindowFunction {
    int lo = 0, hi = -1;  // empty when hi < lo
    std::vector<long long> vals;

    long long value(int n) const {
        if (n < lo || n > hi) return 0;
        return vals[static_cast<std::size_t>(n - lo)];
    }
    bool is_zero() const {
        for (long long v : vals)
            if (v != 0) return false;
        return true;
    }
    std::map<int, long long> nonzero() const {
        std::map<int, long long> m;
        for (int n = lo; n <= hi; ++n)
            if (value(n) != 0) m[n] = value(n);
        return m;
    }
    // g with g(n) = f(n - h).
    IntegerWindowFunction shifted_by(int h) const {
        IntegerWindowFunction g = *this;
        g.lo += h;
        g.hi += h;
        return g;
    }
    bool same_values(const IntegerWindowFunction& o) const { return nonzero() == o.nonzero(); }
};

// Minimal free resolution ... -> F_2 -> F_1 -> F_0 of a module presented as
// coker(F_1 -> F_0); maps[i] is F_{i+1} -> F_i, entries all in the maximal
// ideal.
struct Resolution {
    std::vector<int> f0_twists;
    std::vector<GradedMatrix> maps;

    int length() const { return static_cast<int>(maps.size()); }
    std::vector<int> twists(int i) const {
        if (i == 0) return f0_twists;
        return maps[static_cast<std::size_t>(i - 1)].col_twists;
    }
};

// Finitely generated graded module given by a presentation matrix. Immutable;
// derived data is cached behind a shared, mutex-guarded block so copies share
// work and concurrent readers are safe.
class GradedModule {
  public:
    GradedModule();  // zero module
    static GradedModule from_presentation(GradedMatrix pres);
    static GradedModule free_module(std::vector<int> twists);
    static GradedModule quotient_ring(const GradedIdeal& I);  // R/I

    const GradedMatrix& presentation() const { return pres_; }
    FreeModule ambient() const { return FreeModule{pres_.row_twists}; }

    long long hilbert_function(int n) const;
    const RatPoly& hilbert_polynomial() const;
    const Resolution& minimal_resolution(int max_length = 4) const;
    BettiTable betti() const;

    bool is_zero_module() const;
    bool finite_length() const { return hilbert_polynomial().is_zero(); }
    // Requires finite length; the window brackets the support by construction.
    IntegerWindowFunction finite_support() const;
    int min_generator_degree() const;  // throws on the zero module
    std::optional<int> is_cyclic_in_degree() const;

    GradedModule shift(int h) const;         // M(h): hf(shift(M,h), n) = hf(M, n+h)
    GradedModule ext(int i) const;           // Ext^i_R(M, R)
    GradedIdeal annihilator() const;
    GradedIdeal element_annihilator(const VecPoly& v) const;  // (im : v)

    std::vector<VecPoly> degreewise_basis(int n) const;
    // Matrix of multiplication by homogeneous f from M_n to M_{n+deg f} in the
    // degreewise bases.
    MatFp multiplication_matrix(const Polynomial& f, int n) const;
    // Coordinates of a degree-n element w.r.t. the degreewise basis of M_n.
    std::vector<Fp> reduce_to_basis(const VecPoly& v, int n) const;
    bool element_is_zero(const VecPoly& v, int n) const;

  private:
    GradedMatrix pres_;
    struct DegSpace;
    struct Cache;
    std::shared_ptr<Cache> cache_;
    const DegSpace& space(int n) const;
};

// Graded Hom_R(M, N) presented as a module (elements are homomorphisms; its
// degree-d slice is Hom(M, N(d))_0).
GradedModule hom_module(const GradedModule& M, const GradedModule& N);

// k-dual of a finite-length module, presented via duality against R(-4).
GradedModule dual_finite_length(const GradedModule& M);

// Spec-shaped wrappers.
inline std::vector<GradedMatrix> minimal_free_resolution(const GradedModule& M, int max_length = 4) {
    return M.minimal_resolution(max_length).maps;
}
inline long long hilbert_function(const GradedModule& M, int n) { return M.hilbert_function(n); }
inline RatPoly hilbert_polynomial(const GradedModule& M) { return M.hilbert_polynomial(); }
inline std::vector<VecPoly> degreewise_basis(const GradedModule& M, int n) {
    return M.degreewise_basis(n);
}
inline MatFp multiplication_map(const GradedModule& M, const Polynomial& f, int n) {
    return M.multiplication_matrix(f, n);
}
inline GradedModule ext_module(const GradedModule& M, int i) { return M.ext(i); }
inline GradedIdeal annihilator(const GradedModule& M) { return M.annihilator(); }
inline std::optional<int> is_cyclic_in_degree(const GradedModule& M) {
    return M.is_cyclic_in_degree();
}
inline GradedModule shift(const GradedModule& M, int h) { return M.shift(h); }

}  // namespace liaison
