#pragma once

#include <utility>
#include <vector>

#include "liaison/groebner.hpp"
#include "liaison/matrix_fp.hpp"

namespace liaison {

// Homogeneous matrix between twisted free modules: the (i,j) entry is zero or
// homogeneous of degree col_twists[j] - row_twists[i]. Columns are images of
// the source generators.
struct GradedMatrix {
    std::vector<int> row_twists, col_twists;
    std::vector<std::vector<Polynomial>> e;  // e[i][j]

    GradedMatrix() = default;
    GradedMatrix(std::vector<int> rt, std::vector<int> ct)
        : row_twists(std::move(rt)),
          col_twists(std::move(ct)),
          e(row_twists.size(), std::vector<Polynomial>(col_twists.size())) {}

    int nrows() const { return static_cast<int>(row_twists.size()); }
    int ncols() const { return static_cast<int>(col_twists.size()); }
    bool is_zero() const;

    FreeModule target() const { return FreeModule{row_twists}; }
    FreeModule source() const { return FreeModule{col_twists}; }

    VecPoly column(int j) const;
    void set_column(int j, const VecPoly& v);

    void validate() const;  // throws on inhomogeneous entries

    // Matrix of the dual map between the dual free modules (twists negated).
    GradedMatrix dual() const;
    static GradedMatrix zero_map(std::vector<int> rt, std::vector<int> ct) {
        return GradedMatrix(std::move(rt), std::move(ct));
    }
    // [a | b], same target.
    static GradedMatrix concat_cols(const GradedMatrix& a, const GradedMatrix& b);
};

// Composition a∘b (apply b, then a); requires a.col_twists == b.row_twists.
GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b);

// Columns generate ker(a) inside the source of a. Output rows are indexed by
// a's columns.
GradedMatrix syzygies(const GradedMatrix& a);

// Ordered basis of the degree-n slice of a twisted free module: pairs
// (position, monomial), positions ascending, monomials in decreasing order.
std::vector<std::pair<int, Monomial>> free_basis_in_degree(const std::vector<int>& twists, int n);
long long free_dim_in_degree(const std::vector<int>& twists, int n);

// The degree-n slice of the map as a dense matrix over F_p.
MatFp degree_matrix(const GradedMatrix& a, int n);

// Coordinates of a homogeneous degree-n element w.r.t. free_basis_in_degree.
std::vector<Fp> vec_coords(const VecPoly& v, const std::vector<int>& twists, int n);
VecPoly vec_from_coords(const std::vector<Fp>& x, const std::vector<int>& twists, int n);

}  // namespace liaison
