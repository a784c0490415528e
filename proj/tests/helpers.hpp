#pragma once

#include "qtrace/suite.hpp"

#include <doctest.h>

#include <fstream>
#include <functional>

namespace qtrace::testing {

inline IntMat mat(std::initializer_list<std::initializer_list<long long>> rows) {
    const Index r = static_cast<Index>(rows.size());
    const Index c = r ? static_cast<Index>(rows.begin()->size()) : 0;
    IntMat m(r, c);
    Index i = 0;
    for (const auto& row : rows) {
        Index j = 0;
        for (long long x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

inline IntRow row(std::initializer_list<long long> xs) {
    IntRow v(static_cast<Index>(xs.size()));
    Index j = 0;
    for (long long x : xs) v(j++) = x;
    return v;
}

inline const nlohmann::json& oracle() {
    static const nlohmann::json j = [] {
        std::ifstream in(QTRACE_TEST_DATA "/oracle.json");
        REQUIRE(in.good());
        return nlohmann::json::parse(in);
    }();
    return j;
}

inline Triangulation fixture(const std::string& name) { return parse_surface(builtin(name)); }

// three faces around one interior puncture
inline SurfaceSpec punctured_triangle() {
    return {"PT", {0, 1, 2}, {{{0, 2}, {1, 0}}, {{1, 2}, {2, 0}}, {{2, 2}, {0, 0}}}};
}

template <typename F>
void for_each_vector(Index m, long long N, F f) {
    std::vector<long long> x(m, 0);
    for (;;) {
        IntRow v(m);
        for (Index i = 0; i < m; ++i) v(i) = x[i];
        f(v);
        Index i = 0;
        while (i < m && ++x[i] == N) x[i++] = 0;
        if (i == m) break;
    }
}

inline bool throws_code(const std::function<void()>& f, const std::string& code) {
    try {
        f();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

}  // namespace qtrace::testing
