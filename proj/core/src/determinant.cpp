#include "tropcount/determinant.hpp"

#include <sstream>
#include <stdexcept>

namespace tropcount {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long long v : row) data_.emplace_back(v);
    }
}

std::string IntMatrix::to_string() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_; ++r) {
        out << '[';
        for (std::size_t c = 0; c < cols_; ++c) out << (c == 0 ? "" : " ") << (*this)(r, c);
        out << "]\n";
    }
    return out.str();
}

BigInt determinant(IntMatrix m) {
    if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    BigInt sign = 1;
    BigInt previous = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m(pivot, k) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(pivot, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
            m(i, k) = 0;
        }
        previous = m(k, k);
    }
    return n == 0 ? BigInt(1) : sign * m(n - 1, n - 1);
}

}  // namespace tropcount
