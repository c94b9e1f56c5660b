#include "dosusy/specfun.hpp"

#include "dosusy/errors.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dosusy {

double gegenbauer(const GegenbauerArgs& args)
{
    const int p = args.degree;
    const double q = args.order;
    const double xi = args.xi;
    if (p < 0) {
        throw DomainError("gegenbauer: negative degree " + std::to_string(p));
    }
    if (!(q > -0.5)) {
        throw DomainError("gegenbauer: order must exceed -1/2");
    }
    if (!(std::abs(xi) <= 1.0)) {
        throw DomainError("gegenbauer: argument outside [-1, 1]");
    }

    double prev = 1.0;
    if (p == 0) {
        return prev;
    }
    double curr = 2.0 * q * xi;
    // (k+1) C_{k+1} = 2(k+q) xi C_k - (k+2q-1) C_{k-1}
    for (int k = 1; k < p; ++k) {
        const double next = (2.0 * (k + q) * xi * curr - (k + 2.0 * q - 1.0) * prev) / (k + 1.0);
        prev = curr;
        curr = next;
    }
    return curr;
}

std::uint64_t binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n) {
        throw DomainError("binomial: need 0 <= k <= n, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
    }
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        // result * (n-k+i) / i is exact at every step; reduce by the gcd first
        // so the intermediate product stays in range as long as possible.
        std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        std::uint64_t den = static_cast<std::uint64_t>(i);
        const std::uint64_t g = std::gcd(result, den);
        result /= g;
        den /= g;
        num /= den;
        if (result > std::numeric_limits<std::uint64_t>::max() / num) {
            throw std::overflow_error("binomial: result exceeds 64 bits");
        }
        result *= num;
    }
    return result;
}

} // namespace dosusy
