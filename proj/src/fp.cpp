#include "liaison/fp.hpp"

#include <atomic>
#include <ostream>
#include <stdexcept>
#include <string>

namespace liaison {
namespace field {

namespace {
std::atomic<std::uint32_t> g_prime{32003};
}

std::uint32_t prime() { return g_prime.load(std::memory_order_relaxed); }

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

void set_prime(std::uint32_t p) {
    if (p <= 2 || p >= (1u << 31) || !is_prime(p))
        throw std::invalid_argument("field modulus must be an odd prime below 2^31, got " +
                                    std::to_string(p));
    g_prime.store(p, std::memory_order_relaxed);
}

}  // namespace field

Fp Fp::inv() const {
    if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
    std::int64_t a = v_, b = field::prime();
    std::int64_t x0 = 1, x1 = 0;
    while (b != 0) {
        std::int64_t q = a / b;
        a -= q * b;
        std::swap(a, b);
        x0 -= q * x1;
        std::swap(x0, x1);
    }
    std::int64_t p = field::prime();
    x0 %= p;
    if (x0 < 0) x0 += p;
    return from_raw(static_cast<std::uint32_t>(x0));
}

std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.raw(); }

}  // namespace liaison
