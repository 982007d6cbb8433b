#include "charnet/ff.hpp"

namespace charnet {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p > (1u << 16))
        throw std::invalid_argument("modulus exceeds 2^16: " + std::to_string(p));
    if (!is_prime(p))
        throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    a %= p_;
    if (a == 0) throw ZeroInverse();
    // extended Euclid on (a, p): invariant a*x0 == r0 (mod p)
    std::int64_t r0 = a, r1 = p_, x0 = 1, x1 = 0;
    while (r1 != 0) {
        std::int64_t k = r0 / r1;
        r0 -= k * r1;
        x0 -= k * x1;
        std::swap(r0, r1);
        std::swap(x0, x1);
    }
    x0 %= p_;
    return static_cast<std::uint32_t>(x0 < 0 ? x0 + p_ : x0);
}

}  // namespace charnet
