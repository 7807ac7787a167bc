#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace thermoinfo {

/// Base class of every error raised by the library. The CLI maps these to
/// exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the formula being evaluated.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A quantity is non-finite or otherwise not a valid physical amount.
class InvalidQuantityError : public Error {
public:
    using Error::Error;
};

class EmptyInputError : public Error {
public:
    EmptyInputError() : Error("input is empty: at least one byte is required") {}
};

/// Not enough bits to estimate a block entropy of the requested order.
class SampleSizeError : public Error {
public:
    SampleSizeError(std::uint64_t have_bits, std::uint64_t need_bits, unsigned block_bits)
        : Error("block entropy with k=" + std::to_string(block_bits) + " needs at least " +
                std::to_string(need_bits) + " bits, got " + std::to_string(have_bits)),
          required_bits(need_bits) {}

    std::uint64_t required_bits;
};

class InvalidDistributionError : public Error {
public:
    using Error::Error;
};

/// Temperature is 0/0 (no energy and no information).
class UndefinedTemperatureError : public Error {
public:
    using Error::Error;
};

} // namespace thermoinfo
