#pragma once

#include "qtrace/integer.hpp"

#include <json.hpp>

namespace qtrace {

struct RootParams {
    int n = 2;
    long long order = 1;  // m'', the order of q-hat squared
    long long d_prime = 1;  // gcd(n, m'')
    long long m_prime = 1;  // m'' / d'
    long long d = 1;  // gcd(2n, m')
    long long m = 1;  // m' / d
    bool odd_order = true;
    std::vector<std::string> warnings;
};

RootParams derive_params(int n, long long order);
// throws OddOrderRequired on even m''
void require_odd_order(const RootParams& p);
nlohmann::json to_json(const RootParams& p);

}  // namespace qtrace
