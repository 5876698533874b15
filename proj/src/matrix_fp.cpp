#include "liaison/matrix_fp.hpp"

#include <stdexcept>

namespace liaison {

MatFp MatFp::operator*(const MatFp& o) const {
    if (c_ != o.r_) throw std::invalid_argument("MatFp: shape mismatch in product");
    MatFp out(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            Fp aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.c_; ++j)
                out.set(i, j, out.at(i, j) + aik * o.at(k, j));
        }
    return out;
}

bool MatFp::is_zero() const {
    for (std::uint32_t x : a_)
        if (x != 0) return false;
    return true;
}

std::vector<std::size_t> MatFp::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < c_ && row < r_; ++col) {
        std::size_t piv = row;
        while (piv < r_ && at(piv, col).is_zero()) ++piv;
        if (piv == r_) continue;
        for (std::size_t j = 0; j < c_; ++j) {
            std::uint32_t t = a_[row * c_ + j];
            a_[row * c_ + j] = a_[piv * c_ + j];
            a_[piv * c_ + j] = t;
        }
        Fp inv = at(row, col).inv();
        for (std::size_t j = col; j < c_; ++j) set(row, j, at(row, j) * inv);
        for (std::size_t i = 0; i < r_; ++i) {
            if (i == row) continue;
            Fp f = at(i, col);
            if (f.is_zero()) continue;
            for (std::size_t j = col; j < c_; ++j) set(i, j, at(i, j) - f * at(row, j));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t MatFp::rank() const {
    MatFp m = *this;
    return m.rref().size();
}

std::vector<std::vector<Fp>> MatFp::kernel_basis() const {
    MatFp m = *this;
    std::vector<std::size_t> pivots = m.rref();
    std::vector<bool> is_pivot(c_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Fp>> basis;
    for (std::size_t free = 0; free < c_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Fp> v(c_);
        v[free] = Fp::one();
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.at(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Fp>> MatFp::solve(const std::vector<Fp>& b) const {
    if (b.size() != r_) throw std::invalid_argument("MatFp: rhs size mismatch");
    MatFp aug(r_, c_ + 1);
    for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t j = 0; j < c_; ++j) aug.set(i, j, at(i, j));
        aug.set(i, c_, b[i]);
    }
    std::vector<std::size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == c_) return std::nullopt;  // inconsistent
    std::vector<Fp> x(c_);
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, c_);
    return x;
}

}  // namespace liaison
