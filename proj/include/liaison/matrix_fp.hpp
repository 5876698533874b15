#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liaison/fp.hpp"

namespace liaison {

// Dense matrix over F_p. Sizes here stay in the hundreds, so plain Gaussian
// elimination is all we need.
class MatFp {
  public:
    MatFp() = default;
    MatFp(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Fp at(std::size_t i, std::size_t j) const { return Fp::from_raw(a_[i * c_ + j]); }
    void set(std::size_t i, std::size_t j, Fp v) { a_[i * c_ + j] = v.raw(); }

    bool operator==(const MatFp&) const = default;

    static MatFp identity(std::size_t n) {
        MatFp m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, Fp::one());
        return m;
    }

    MatFp operator*(const MatFp& o) const;
    bool is_zero() const;

    // Reduced row echelon form in place; returns pivot columns in order.
    std::vector<std::size_t> rref();
    std::size_t rank() const;
    // Basis of the right kernel, one column vector per element.
    std::vector<std::vector<Fp>> kernel_basis() const;
    // One solution x of A x = b, if the system is consistent.
    std::optional<std::vector<Fp>> solve(const std::vector<Fp>& b) const;

  private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<std::uint32_t> a_;
};

}  // namespace liaison
