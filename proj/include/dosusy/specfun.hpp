#pragma once

#include <cstdint>

namespace dosusy {

struct GegenbauerArgs {
    int degree = 0;    // p >= 0
    double order = 0;  // q > -1/2
    double xi = 0;     // |xi| <= 1
};

/// Gegenbauer (ultraspherical) polynomial C_p^q(xi) by forward recurrence in
/// the degree. Throws DomainError for p < 0, q <= -1/2 or |xi| > 1.
double gegenbauer(const GegenbauerArgs& args);

/// Exact binomial coefficient n over k. Throws DomainError unless 0 <= k <= n
/// and throws std::overflow_error if the result does not fit in 64 bits.
std::uint64_t binomial(int n, int k);

} // namespace dosusy
