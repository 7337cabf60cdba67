#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cglab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an inverse is requested for a residue sharing a factor with
// the modulus.
class NonUnitError : public Error {
public:
    NonUnitError(std::uint64_t value, std::uint64_t modulus, std::uint64_t gcd);

    std::uint64_t value() const noexcept { return value_; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    std::uint64_t gcd() const noexcept { return gcd_; }

private:
    std::uint64_t value_;
    std::uint64_t modulus_;
    std::uint64_t gcd_;
};

// A Cauchy-type builder met a denominator that is not invertible.
// Indices are the 1-based math indices (j, k).
class NonUnitDenominator : public Error {
public:
    NonUnitDenominator(std::int64_t j, std::int64_t k, std::uint64_t modulus);

    std::int64_t j() const noexcept { return j_; }
    std::int64_t k() const noexcept { return k_; }

private:
    std::int64_t j_;
    std::int64_t k_;
};

class OrderTooLarge : public Error {
public:
    using Error::Error;
};

// Cells (1-based) that break the checkerboard support rule.
class SupportViolation : public Error {
public:
    explicit SupportViolation(std::vector<std::pair<std::size_t, std::size_t>> cells);

    const std::vector<std::pair<std::size_t, std::size_t>>& cells() const noexcept { return cells_; }

private:
    std::vector<std::pair<std::size_t, std::size_t>> cells_;
};

class InvalidModulus : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace cglab
