#include "liaison/graded_matrix.hpp"

#include <map>
#include <stdexcept>

namespace liaison {

bool GradedMatrix::is_zero() const {
    for (const auto& row : e)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

VecPoly GradedMatrix::column(int j) const {
    VecPoly v(nrows());
    for (int i = 0; i < nrows(); ++i) v.c[i] = e[i][j];
    return v;
}

void GradedMatrix::set_column(int j, const VecPoly& v) {
    for (int i = 0; i < nrows(); ++i) e[i][j] = v.c[i];
}

void GradedMatrix::validate() const {
    for (int i = 0; i < nrows(); ++i)
        for (int j = 0; j < ncols(); ++j) {
            const Polynomial& p = e[i][j];
            if (p.is_zero()) continue;
            if (!p.is_homogeneous() || p.degree() != col_twists[j] - row_twists[i])
                throw precondition_error("graded matrix entry has wrong degree");
        }
}

GradedMatrix GradedMatrix::dual() const {
    std::vector<int> rt, ct;
    for (int t : col_twists) rt.push_back(-t);
    for (int t : row_twists) ct.push_back(-t);
    GradedMatrix d(std::move(rt), std::move(ct));
    for (int i = 0; i < nrows(); ++i)
        for (int j = 0; j < ncols(); ++j) d.e[j][i] = e[i][j];
    return d;
}

GradedMatrix GradedMatrix::concat_cols(const GradedMatrix& a, const GradedMatrix& b) {
    if (a.row_twists != b.row_twists)
        throw precondition_error("concat_cols: target mismatch");
    std::vector<int> ct = a.col_twists;
    ct.insert(ct.end(), b.col_twists.begin(), b.col_twists.end());
    GradedMatrix r(a.row_twists, std::move(ct));
    for (int i = 0; i < a.nrows(); ++i) {
        for (int j = 0; j < a.ncols(); ++j) r.e[i][j] = a.e[i][j];
        for (int j = 0; j < b.ncols(); ++j) r.e[i][a.ncols() + j] = b.e[i][j];
    }
    return r;
}

GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b) {
    if (a.col_twists != b.row_twists) throw precondition_error("compose: twist mismatch");
    GradedMatrix r(a.row_twists, b.col_twists);
    for (int i = 0; i < a.nrows(); ++i)
        for (int j = 0; j < b.ncols(); ++j) {
            Polynomial s;
            for (int k = 0; k < a.ncols(); ++k) s += a.e[i][k] * b.e[k][j];
            r.e[i][j] = s;
        }
    return r;
}

GradedMatrix syzygies(const GradedMatrix& a) {
    a.validate();
    int n = a.nrows(), m = a.ncols();
    // Augment with a tracking block recording each column's coefficient; basis
    // elements with vanishing main block carry the syzygies.
    FreeModule aug{a.row_twists};
    for (int t : a.col_twists) aug.twists.push_back(t);
    std::vector<VecPoly> gens;
    for (int j = 0; j < m; ++j) {
        VecPoly v(n + m);
        for (int i = 0; i < n; ++i) v.c[i] = a.e[i][j];
        v.c[n + j] = Polynomial::one();
        gens.push_back(v);
    }
    std::vector<VecPoly> gb = module_groebner(std::move(gens), aug, n);
    std::vector<VecPoly> syz;
    for (const VecPoly& g : gb) {
        bool main_zero = true;
        for (int i = 0; i < n && main_zero; ++i)
            if (!g.c[i].is_zero()) main_zero = false;
        if (main_zero) syz.push_back(g);
    }
    GradedMatrix s(a.col_twists, {});
    for (const VecPoly& g : syz) {
        VecPoly col(m);
        for (int j = 0; j < m; ++j) col.c[j] = g.c[n + j];
        s.col_twists.push_back(vec_degree(col, s.target()));
        for (auto& row : s.e) row.emplace_back();
        s.set_column(s.ncols() - 1, col);
    }
    if (!compose(a, s).is_zero()) throw std::logic_error("syzygies: nonzero composition");
    return s;
}

std::vector<std::pair<int, Monomial>> free_basis_in_degree(const std::vector<int>& twists, int n) {
    std::vector<std::pair<int, Monomial>> out;
    for (std::size_t i = 0; i < twists.size(); ++i)
        for (const Monomial& m : monomials_of_degree(n - twists[i]))
            out.push_back({static_cast<int>(i), m});
    return out;
}

long long free_dim_in_degree(const std::vector<int>& twists, int n) {
    long long d = 0;
    for (int t : twists) d += dim_ring_degree(n - t);
    return d;
}

MatFp degree_matrix(const GradedMatrix& a, int n) {
    auto rows = free_basis_in_degree(a.row_twists, n);
    auto cols = free_basis_in_degree(a.col_twists, n);
    std::map<std::pair<int, Monomial>, std::size_t, decltype([](const auto& x, const auto& y) {
                 if (x.first != y.first) return x.first < y.first;
                 return degrevlex_cmp(x.second, y.second) > 0;
             })>
        row_index;
    for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = r;
    MatFp mat(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        auto [j, nu] = cols[c];
        for (int i = 0; i < a.nrows(); ++i) {
            if (a.e[i][j].is_zero()) continue;
            for (const Term& t : a.e[i][j].terms()) {
                auto it = row_index.find({i, t.m * nu});
                if (it == row_index.end()) throw std::logic_error("degree_matrix: missing row");
                mat.set(it->second, c, mat.at(it->second, c) + t.c);
            }
        }
    }
    return mat;
}

std::vector<Fp> vec_coords(const VecPoly& v, const std::vector<int>& twists, int n) {
    auto basis = free_basis_in_degree(twists, n);
    std::vector<Fp> x(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        auto [i, m] = basis[k];
        for (const Term& t : v.c[i].terms())
            if (t.m == m) x[k] = t.c;
    }
    return x;
}

VecPoly vec_from_coords(const std::vector<Fp>& x, const std::vector<int>& twists, int n) {
    auto basis = free_basis_in_degree(twists, n);
    if (x.size() != basis.size()) throw std::invalid_argument("vec_from_coords: size mismatch");
    VecPoly v(static_cast<int>(twists.size()));
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!x[k].is_zero()) v.c[basis[k].first] += Polynomial(x[k], basis[k].second);
    return v;
}

}  // namespace liaison
