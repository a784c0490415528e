#include "qtrace/unity.hpp"

#include <numeric>

namespace qtrace {

RootParams derive_params(int n, long long order) {
    if (n < 2) throw Error("InvalidArgument", "n must be >= 2");
    if (order < 1) throw Error("InvalidArgument", "order must be >= 1");
    RootParams p;
    p.n = n;
    p.order = order;
    p.d_prime = std::gcd<long long>(n, order);
    p.m_prime = order / p.d_prime;
    p.d = std::gcd<long long>(2LL * n, p.m_prime);
    p.m = p.m_prime / p.d;
    p.odd_order = order % 2 == 1;
    if (!p.odd_order)
        p.warnings.push_back("even order " + std::to_string(order) + ": center and rank checks only run for odd orders");
    return p;
}

void require_odd_order(const RootParams& p) {
    if (!p.odd_order) throw Error("OddOrderRequired", "order " + std::to_string(p.order) + " is even");
}

nlohmann::json to_json(const RootParams& p) {
    return {{"n", p.n},         {"order", p.order}, {"d_prime", p.d_prime}, {"m_prime", p.m_prime},
            {"d", p.d},         {"m", p.m},         {"odd_order", p.odd_order}, {"warnings", p.warnings}};
}

}  // namespace qtrace
