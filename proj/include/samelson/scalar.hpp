#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace samelson {

// Raised when a caller violates an operation's contract (bad arguments,
// mismatched polynomial contexts, invalid group parameters).
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when the input is outside the mathematical domain of the
// operation (non-p-regular group in a decision procedure, asymmetric
// input to symmetrize, oracle bounds exceeded).
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Deterministic Miller-Rabin, exact for the full 64-bit range.
bool is_prime(std::uint64_t n);

// A residue in F_p for an odd prime p. Values are stored as least
// non-negative residues; signed_value() gives the symmetric residue
// in [-(p-1)/2, (p-1)/2] for display.
class Scalar {
public:
    Scalar(long long value, std::uint64_t p);

    std::uint64_t value() const { return value_; }
    std::uint64_t modulus() const { return p_; }
    long long signed_value() const;
    bool is_zero() const { return value_ == 0; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    bool operator==(const Scalar& o) const { return p_ == o.p_ && value_ == o.value_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

private:
    std::uint64_t value_;
    std::uint64_t p_;
    void check_same(const Scalar& o) const;
};

}  // namespace samelson
