#include "samelson/scalar.hpp"

namespace samelson {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((__uint128_t)a * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses decide primality for all n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Scalar::Scalar(long long value, std::uint64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw usage_error("Scalar: modulus must be an odd prime, got " + std::to_string(p));
    long long r = value % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    value_ = static_cast<std::uint64_t>(r);
}

long long Scalar::signed_value() const {
    if (value_ > p_ / 2) return static_cast<long long>(value_) - static_cast<long long>(p_);
    return static_cast<long long>(value_);
}

void Scalar::check_same(const Scalar& o) const {
    if (p_ != o.p_) throw usage_error("Scalar: mixed moduli " + std::to_string(p_) + " and " + std::to_string(o.p_));
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    return Scalar(static_cast<long long>((value_ + o.value_) % p_), p_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    return Scalar(static_cast<long long>((value_ + p_ - o.value_) % p_), p_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    return Scalar(static_cast<long long>((__uint128_t)value_ * o.value_ % p_), p_);
}

Scalar Scalar::operator-() const {
    return Scalar(static_cast<long long>((p_ - value_) % p_), p_);
}

}  // namespace samelson
