#include "liaison/module.hpp"

#include <algorithm>
#include <sstream>

namespace liaison {

int BettiTable::length() const {
    int len = 0;
    for (const auto& [ij, b] : beta)
        if (b != 0) len = std::max(len, ij.first);
    return len;
}

std::string BettiTable::to_string() const {
    std::ostringstream os;
    for (const auto& [ij, b] : beta)
        if (b != 0) os << "beta(" << ij.first << "," << ij.second << ") = " << b << "\n";
    return os.str();
}

namespace {

void erase_row(GradedMatrix& m, int r) {
    m.row_twists.erase(m.row_twists.begin() + r);
    m.e.erase(m.e.begin() + r);
}

void erase_col(GradedMatrix& m, int c) {
    m.col_twists.erase(m.col_twists.begin() + c);
    for (auto& row : m.e) row.erase(row.begin() + c);
}

GradedMatrix identity_matrix(const std::vector<int>& twists) {
    GradedMatrix m(twists, twists);
    for (int i = 0; i < m.nrows(); ++i) m.e[i][i] = Polynomial::one();
    return m;
}

// Complex minimization: pivot out unit (degree-zero) entries of cur, mirroring
// the row operations into prev's columns when prev is present. Keeps
// prev∘cur = 0 and exactness; prev never regains unit entries.
void prune_pair(GradedMatrix* prev, GradedMatrix& cur) {
    while (true) {
        int pr = -1, pc = -1;
        for (int i = 0; i < cur.nrows() && pr < 0; ++i)
            for (int j = 0; j < cur.ncols(); ++j)
                if (!cur.e[i][j].is_zero() && cur.col_twists[j] == cur.row_twists[i]) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        Fp uinv = cur.e[pr][pc].leading().c.inv();
        // clear row pr by column operations (source basis change of cur)
        for (int j = 0; j < cur.ncols(); ++j) {
            if (j == pc || cur.e[pr][j].is_zero()) continue;
            Polynomial lam = cur.e[pr][j].scaled(uinv);
            for (int i = 0; i < cur.nrows(); ++i) cur.e[i][j] -= lam * cur.e[i][pc];
        }
        // clear column pc by row operations (basis change of the middle module),
        // mirrored as column operations on prev
        for (int i = 0; i < cur.nrows(); ++i) {
            if (i == pr || cur.e[i][pc].is_zero()) continue;
            Polynomial mu = cur.e[i][pc].scaled(uinv);
            for (int j = 0; j < cur.ncols(); ++j) cur.e[i][j] -= mu * cur.e[pr][j];
            if (prev)
                for (int k = 0; k < prev->nrows(); ++k) prev->e[k][pr] += mu * prev->e[k][i];
        }
        if (prev) {
            for (int k = 0; k < prev->nrows(); ++k)
                if (!prev->e[k][pr].is_zero())
                    throw std::logic_error("prune: stale column survived");
            erase_col(*prev, pr);
        }
        erase_row(cur, pr);
        erase_col(cur, pc);
    }
}

// Presents the module generated by the columns of gens, with the relations
// induced by the submodule im(sub) of the same ambient free module.
GradedModule present_subquotient(const GradedMatrix& gens, const GradedMatrix& sub) {
    GradedMatrix combined = GradedMatrix::concat_cols(gens, sub);
    GradedMatrix syz = syzygies(combined);
    GradedMatrix rel(gens.col_twists, {});
    for (int j = 0; j < syz.ncols(); ++j) {
        bool zero = true;
        for (int i = 0; i < gens.ncols(); ++i)
            if (!syz.e[i][j].is_zero()) zero = false;
        if (zero) continue;
        rel.col_twists.push_back(syz.col_twists[j]);
        for (int i = 0; i < gens.ncols(); ++i) rel.e[i].push_back(syz.e[i][j]);
    }
    return GradedModule::from_presentation(std::move(rel));
}

}  // namespace

// ---------------------------------------------------------------------------

struct GradedModule::DegSpace {
    std::vector<std::pair<int, Monomial>> free_basis;
    MatFp image_rref;                 // rows span the degree slice of the image
    std::vector<std::size_t> pivots;  // pivot column per nonzero rref row
    std::vector<std::size_t> reps;    // complement coordinates

    std::vector<Fp> reduce(std::vector<Fp> w) const {
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            Fp f = w[pivots[r]];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < w.size(); ++j) w[j] -= f * image_rref.at(r, j);
        }
        return w;
    }
};

struct GradedModule::Cache {
    std::mutex mu;
    std::map<int, DegSpace> spaces;
    std::optional<RatPoly> hp;
    std::optional<Resolution> res;
    std::optional<GradedIdeal> ann;
};

GradedModule::GradedModule() : cache_(std::make_shared<Cache>()) {}

GradedModule GradedModule::from_presentation(GradedMatrix pres) {
    pres.validate();
    GradedModule m;
    m.pres_ = std::move(pres);
    m.cache_ = std::make_shared<Cache>();
    return m;
}

GradedModule GradedModule::free_module(std::vector<int> twists) {
    return from_presentation(GradedMatrix(std::move(twists), {}));
}

GradedModule GradedModule::quotient_ring(const GradedIdeal& I) {
    GradedMatrix pres({0}, {});
    for (const Polynomial& g : I.groebner()) {
        pres.col_twists.push_back(g.degree());
        pres.e[0].push_back(g);
    }
    return from_presentation(std::move(pres));
}

const GradedModule::DegSpace& GradedModule::space(int n) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->spaces.find(n);
    if (it != cache_->spaces.end()) return it->second;

    DegSpace sp;
    sp.free_basis = free_basis_in_degree(pres_.row_twists, n);
    std::size_t dim = sp.free_basis.size();
    std::vector<std::vector<Fp>> rows;
    for (int j = 0; j < pres_.ncols(); ++j)
        for (const Monomial& nu : monomials_of_degree(n - pres_.col_twists[j])) {
            VecPoly v = pres_.column(j).term_multiple(Fp::one(), nu);
            rows.push_back(vec_coords(v, pres_.row_twists, n));
        }
    MatFp mat(rows.size(), dim);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) mat.set(i, j, rows[i][j]);
    sp.pivots = mat.rref();
    mat = [&] {  // drop zero tail rows
        MatFp trimmed(sp.pivots.size(), dim);
        for (std::size_t i = 0; i < sp.pivots.size(); ++i)
            for (std::size_t j = 0; j < dim; ++j) trimmed.set(i, j, mat.at(i, j));
        return trimmed;
    }();
    sp.image_rref = std::move(mat);
    std::vector<bool> is_pivot(dim, false);
    for (std::size_t p : sp.pivots) is_pivot[p] = true;
    for (std::size_t j = 0; j < dim; ++j)
        if (!is_pivot[j]) sp.reps.push_back(j);
    return cache_->spaces.emplace(n, std::move(sp)).first->second;
}

long long GradedModule::hilbert_function(int n) const {
    return static_cast<long long>(space(n).reps.size());
}

const Resolution& GradedModule::minimal_resolution(int max_length) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->res) return *cache_->res;

    GradedMatrix d1 = pres_;
    prune_pair(nullptr, d1);
    Resolution res;
    res.f0_twists = d1.row_twists;
    if (d1.ncols() != 0 && d1.nrows() != 0) {
        res.maps.push_back(std::move(d1));
        // Iterate to exhaustion: pruning a later map trims columns of the one
        // before it, so intermediate lengths may exceed the final one.
        int safety = std::max(12, max_length + 8);
        for (int iter = 0; iter < safety; ++iter) {
            if (res.maps.back().ncols() == 0) break;
            GradedMatrix k = syzygies(res.maps.back());
            if (k.ncols() == 0) break;
            res.maps.push_back(std::move(k));
            std::size_t last = res.maps.size() - 1;
            prune_pair(&res.maps[last - 1], res.maps[last]);
            if (res.maps[last].ncols() == 0) {
                res.maps.pop_back();
                break;
            }
        }
        while (!res.maps.empty() && res.maps.back().ncols() == 0) res.maps.pop_back();
        if (res.length() > 4 ||
            (!res.maps.empty() && syzygies(res.maps.back()).ncols() != 0))
            throw std::logic_error("minimal resolution exceeded the expected length");
    }
    cache_->res = std::move(res);
    return *cache_->res;
}

const RatPoly& GradedModule::hilbert_polynomial() const {
    const Resolution& res = minimal_resolution();
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->hp) {
        RatPoly hp;
        for (int i = 0; i <= res.length(); ++i) {
            for (int t : res.twists(i)) {
                RatPoly b = RatPoly::twisted_binomial(t);
                hp = (i % 2 == 0) ? hp + b : hp - b;
            }
        }
        cache_->hp = std::move(hp);
    }
    return *cache_->hp;
}

BettiTable GradedModule::betti() const {
    const Resolution& res = minimal_resolution();
    BettiTable b;
    for (int t : res.f0_twists) b.beta[{0, t}] += 1;
    for (int i = 1; i <= res.length(); ++i)
        for (int t : res.maps[static_cast<std::size_t>(i - 1)].col_twists) b.beta[{i, t}] += 1;
    return b;
}

bool GradedModule::is_zero_module() const { return minimal_resolution().f0_twists.empty(); }

IntegerWindowFunction GradedModule::finite_support() const {
    if (!finite_length()) throw precondition_error("finite_support: module has nonzero Hilbert polynomial");
    IntegerWindowFunction w;
    const Resolution& res = minimal_resolution();
    if (res.f0_twists.empty()) return w;
    int lo = *std::min_element(res.f0_twists.begin(), res.f0_twists.end());
    int hi = lo;
    for (int i = 0; i <= res.length(); ++i)
        for (int t : res.twists(i)) hi = std::max(hi, t);
    w.lo = lo;
    w.hi = hi;
    for (int n = lo; n <= hi; ++n) w.vals.push_back(hilbert_function(n));
    return w;
}

int GradedModule::min_generator_degree() const {
    const Resolution& res = minimal_resolution();
    if (res.f0_twists.empty()) throw precondition_error("min generator degree of the zero module");
    return *std::min_element(res.f0_twists.begin(), res.f0_twists.end());
}

std::optional<int> GradedModule::is_cyclic_in_degree() const {
    const Resolution& res = minimal_resolution();
    if (res.f0_twists.size() == 1) return res.f0_twists[0];
    return std::nullopt;
}

GradedModule GradedModule::shift(int h) const {
    GradedMatrix p = pres_;
    for (int& t : p.row_twists) t -= h;
    for (int& t : p.col_twists) t -= h;
    return from_presentation(std::move(p));
}

GradedModule GradedModule::ext(int i) const {
    if (i < 0 || i > 4) throw precondition_error("ext: homological index out of range");
    const Resolution& res = minimal_resolution();
    if (res.f0_twists.empty()) return GradedModule();
    int len = res.length();
    if (i > len) return GradedModule();

    std::vector<int> fiv;
    for (int t : res.twists(i)) fiv.push_back(-t);
    GradedMatrix A = (i == 0) ? GradedMatrix(fiv, {})
                              : res.maps[static_cast<std::size_t>(i - 1)].dual();
    GradedMatrix K = (i == len) ? identity_matrix(fiv)
                                : syzygies(res.maps[static_cast<std::size_t>(i)].dual());
    return present_subquotient(K, A);
}

GradedIdeal GradedModule::annihilator() const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        if (cache_->ann) return *cache_->ann;
    }
    GradedIdeal ann = GradedIdeal::unit();
    if (pres_.nrows() == 0) {
        // zero module: annihilated by everything
    } else {
        FreeModule F = ambient();
        std::vector<VecPoly> cols;
        for (int j = 0; j < pres_.ncols(); ++j) cols.push_back(pres_.column(j));
        for (int k = 0; k < pres_.nrows(); ++k) {
            VecPoly ek(pres_.nrows());
            ek.c[k] = Polynomial::one();
            GradedIdeal qk(transporter(ek, cols, F));
            ann = (k == 0) ? qk : intersect(ann, qk);
        }
    }
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->ann) cache_->ann = ann;
    return *cache_->ann;
}

GradedIdeal GradedModule::element_annihilator(const VecPoly& v) const {
    FreeModule F = ambient();
    std::vector<VecPoly> cols;
    for (int j = 0; j < pres_.ncols(); ++j) cols.push_back(pres_.column(j));
    return GradedIdeal(transporter(v, cols, F));
}

std::vector<VecPoly> GradedModule::degreewise_basis(int n) const {
    const DegSpace& sp = space(n);
    std::vector<VecPoly> out;
    for (std::size_t r : sp.reps) {
        std::vector<Fp> x(sp.free_basis.size());
        x[r] = Fp::one();
        out.push_back(vec_from_coords(x, pres_.row_twists, n));
    }
    return out;
}

MatFp GradedModule::multiplication_matrix(const Polynomial& f, int n) const {
    if (f.is_zero()) throw precondition_error("multiplication by zero");
    int d = f.degree();
    const DegSpace& dom = space(n);
    const DegSpace& cod = space(n + d);
    MatFp out(cod.reps.size(), dom.reps.size());
    for (std::size_t k = 0; k < dom.reps.size(); ++k) {
        std::vector<Fp> x(dom.free_basis.size());
        x[dom.reps[k]] = Fp::one();
        VecPoly v = vec_from_coords(x, pres_.row_twists, n);
        std::vector<Fp> w = cod.reduce(vec_coords(v.poly_multiple(f), pres_.row_twists, n + d));
        for (std::size_t a = 0; a < cod.reps.size(); ++a) out.set(a, k, w[cod.reps[a]]);
    }
    return out;
}

std::vector<Fp> GradedModule::reduce_to_basis(const VecPoly& v, int n) const {
    const DegSpace& sp = space(n);
    std::vector<Fp> w = sp.reduce(vec_coords(v, pres_.row_twists, n));
    std::vector<Fp> out;
    out.reserve(sp.reps.size());
    for (std::size_t r : sp.reps) out.push_back(w[r]);
    return out;
}

bool GradedModule::element_is_zero(const VecPoly& v, int n) const {
    for (Fp c : reduce_to_basis(v, n))
        if (!c.is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------------------

GradedModule hom_module(const GradedModule& M, const GradedModule& N) {
    const GradedMatrix& A = M.presentation();  // F1 -> F0
    const GradedMatrix& B = N.presentation();  // G1 -> G0
    int r0 = A.nrows(), r1 = A.ncols(), s0 = B.nrows(), s1 = B.ncols();

    // Hom(F0,G0) slots (k,i) flattened as k*r0+i, twist b_k - a_i; a map M->N
    // lifts to such a Phi with Phi A = B Psi for some Psi in Hom(F1,G1), and is
    // zero exactly when Phi factors through B.
    std::vector<int> tw_phi, tw_psi, tw_rows;
    for (int k = 0; k < s0; ++k)
        for (int i = 0; i < r0; ++i) tw_phi.push_back(B.row_twists[k] - A.row_twists[i]);
    for (int l = 0; l < s1; ++l)
        for (int j = 0; j < r1; ++j) tw_psi.push_back(B.col_twists[l] - A.col_twists[j]);
    for (int k = 0; k < s0; ++k)
        for (int j = 0; j < r1; ++j) tw_rows.push_back(B.row_twists[k] - A.col_twists[j]);

    std::vector<int> tw_cols = tw_phi;
    tw_cols.insert(tw_cols.end(), tw_psi.begin(), tw_psi.end());
    GradedMatrix T(tw_rows, tw_cols);
    for (int k = 0; k < s0; ++k)
        for (int i = 0; i < r0; ++i)
            for (int j = 0; j < r1; ++j) T.e[k * r1 + j][k * r0 + i] = A.e[i][j];
    for (int l = 0; l < s1; ++l)
        for (int j = 0; j < r1; ++j)
            for (int k = 0; k < s0; ++k)
                T.e[k * r1 + j][static_cast<int>(tw_phi.size()) + l * r1 + j] = -B.e[k][l];

    GradedMatrix ker = syzygies(T);
    GradedMatrix phi(tw_phi, {});
    for (int j = 0; j < ker.ncols(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < tw_phi.size(); ++i)
            if (!ker.e[static_cast<int>(i)][j].is_zero()) zero = false;
        if (zero) continue;
        phi.col_twists.push_back(ker.col_twists[j]);
        for (std::size_t i = 0; i < tw_phi.size(); ++i)
            phi.e[i].push_back(ker.e[static_cast<int>(i)][j]);
    }

    // maps homotopic to zero: Phi = B ∘ Lambda, Lambda in Hom(F0,G1)
    GradedMatrix null_homotopies(tw_phi, {});
    for (int l = 0; l < s1; ++l)
        for (int i = 0; i < r0; ++i) {
            null_homotopies.col_twists.push_back(B.col_twists[l] - A.row_twists[i]);
            for (std::size_t rr = 0; rr < tw_phi.size(); ++rr) null_homotopies.e[rr].emplace_back();
            for (int k = 0; k < s0; ++k)
                null_homotopies.e[k * r0 + i].back() = B.e[k][l];
        }

    return present_subquotient(phi, null_homotopies);
}

GradedModule dual_finite_length(const GradedModule& M) {
    if (!M.finite_length()) throw precondition_error("dual: module is not of finite length");
    return M.ext(4).shift(-4);
}

}  // namespace liaison
