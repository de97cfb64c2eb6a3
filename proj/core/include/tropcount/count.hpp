#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace tropcount {

using BigInt = boost::multiprecision::cpp_int;

// Nonnegative arbitrary-precision count.
class Count {
public:
    Count() = default;
    Count(std::uint64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    explicit Count(BigInt value);

    const BigInt& value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_.is_zero(); }
    std::string to_string() const;

    Count& operator+=(const Count& other);
    Count& operator*=(const Count& other);
    friend Count operator+(Count lhs, const Count& rhs) { return lhs += rhs; }
    friend Count operator*(Count lhs, const Count& rhs) { return lhs *= rhs; }

    friend bool operator==(const Count&, const Count&) = default;
    friend std::strong_ordering operator<=>(const Count& lhs, const Count& rhs);

private:
    BigInt value_;
};

std::ostream& operator<<(std::ostream& out, const Count& count);

}  // namespace tropcount
