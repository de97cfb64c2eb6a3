#include "tropcount/recursion.hpp"

#include <mutex>
#include <stdexcept>

namespace tropcount {

namespace {

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

}  // namespace

Count kontsevich(unsigned degree) {
    if (degree == 0) throw std::domain_error("kontsevich: degree must be at least 1");

    static std::mutex guard;
    static std::vector<BigInt> table{0, 1};
    std::scoped_lock lock(guard);
    while (table.size() <= degree) {
        const unsigned d = static_cast<unsigned>(table.size());
        BigInt total = 0;
        for (unsigned d1 = 1; d1 < d; ++d1) {
            const unsigned d2 = d - d1;
            const BigInt a = BigInt(d1) * d1 * d2 * d2 * binomial(3 * d - 4, 3 * d1 - 2);
            const BigInt b = BigInt(d1) * d1 * d1 * d2 * binomial(3 * d - 4, 3 * d1 - 1);
            total += (a - b) * table[d1] * table[d2];
        }
        table.push_back(total);
    }
    return Count{table[degree]};
}

}  // namespace tropcount
