#include "tropcount/count.hpp"

#include <stdexcept>

namespace tropcount {

Count::Count(BigInt value) : value_(std::move(value)) {
    if (value_ < 0) throw std::domain_error("Count must be nonnegative");
}

std::string Count::to_string() const { return value_.str(); }

Count& Count::operator+=(const Count& other) {
    value_ += other.value_;
    return *this;
}

Count& Count::operator*=(const Count& other) {
    value_ *= other.value_;
    return *this;
}

std::strong_ordering operator<=>(const Count& lhs, const Count& rhs) {
    const int c = lhs.value_.compare(rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& out, const Count& count) {
    return out << count.to_string();
}

}  // namespace tropcount
