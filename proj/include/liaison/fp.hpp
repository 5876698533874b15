#pragma once

#include <cstdint>
#include <iosfwd>

namespace liaison {

// Prime-field context. The modulus is process-global and is expected to be
// set once, before any arithmetic happens (the CLI does this from --prime).
// Default is 32003.
namespace field {

std::uint32_t prime();
void set_prime(std::uint32_t p);  // throws std::invalid_argument unless p is prime, 2 < p < 2^31
bool is_prime(std::uint32_t p);

// RAII helper for tests that need a temporary modulus.
struct PrimeGuard {
    explicit PrimeGuard(std::uint32_t p) : saved_(prime()) { set_prime(p); }
    ~PrimeGuard() { set_prime(saved_); }
    PrimeGuard(const PrimeGuard&) = delete;
    PrimeGuard& operator=(const PrimeGuard&) = delete;

  private:
    std::uint32_t saved_;
};

}  // namespace field

// Scalar in F_p, stored as the least non-negative residue.
class Fp {
  public:
    Fp() = default;
    explicit Fp(std::int64_t x) {
        std::int64_t p = field::prime();
        std::int64_t r = x % p;
        v_ = static_cast<std::uint32_t>(r < 0 ? r + p : r);
    }
    static Fp from_raw(std::uint32_t v) {
        Fp s;
        s.v_ = v;
        return s;
    }
    static Fp one() { return from_raw(1); }

    std::uint32_t raw() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator-() const { return v_ == 0 ? *this : from_raw(field::prime() - v_); }
    Fp operator+(Fp o) const {
        std::uint64_t s = std::uint64_t(v_) + o.v_;
        std::uint64_t p = field::prime();
        return from_raw(static_cast<std::uint32_t>(s >= p ? s - p : s));
    }
    Fp operator-(Fp o) const {
        std::uint32_t p = field::prime();
        return from_raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p - o.v_);
    }
    Fp operator*(Fp o) const {
        return from_raw(static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % field::prime()));
    }
    Fp inv() const;  // throws std::domain_error on zero
    Fp operator/(Fp o) const { return *this * o.inv(); }

    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }

    bool operator==(const Fp&) const = default;

    // Symmetric representative in (-p/2, p/2], used by the printer.
    std::int64_t lift_signed() const {
        std::int64_t p = field::prime();
        return v_ * 2 > static_cast<std::uint32_t>(p) ? std::int64_t(v_) - p : std::int64_t(v_);
    }

  private:
    std::uint32_t v_ = 0;
};

std::ostream& operator<<(std::ostream& os, Fp a);

}  // namespace liaison
