#pragma once

#include <random>

#include "liaison/polynomial.hpp"

namespace liaison {

// Deterministic source for all "generic choice" constructions; fixing the seed
// makes failures reproducible.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}

    std::uint32_t below(std::uint32_t n) {
        std::uniform_int_distribution<std::uint32_t> d(0, n - 1);
        return d(g_);
    }
    Fp scalar() { return Fp::from_raw(below(field::prime())); }
    Fp nonzero_scalar() { return Fp::from_raw(1 + below(field::prime() - 1)); }

    // Dense random homogeneous form of the given degree.
    Polynomial form(int degree) {
        std::vector<Term> ts;
        for (const Monomial& m : monomials_of_degree(degree)) ts.push_back({scalar(), m});
        return Polynomial::from_terms(std::move(ts));
    }
    Polynomial nonzero_form(int degree) {
        for (int k = 0; k < 64; ++k) {
            Polynomial f = form(degree);
            if (!f.is_zero()) return f;
        }
        throw std::logic_error("nonzero_form: repeated zero draws");
    }

  private:
    std::mt19937_64 g_;
};

}  // namespace liaison
