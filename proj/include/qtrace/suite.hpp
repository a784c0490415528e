#pragma once

#include "qtrace/cohomology.hpp"
#include "qtrace/reduced.hpp"

#include <cstdint>

namespace qtrace {

constexpr int kSchema = 1;
constexpr std::uint64_t kDefaultSeed = 20240917;

// QTRACE_MAX_DIM, default 2000
Index max_dim();
void check_dim(Index dim, const std::string& what);

nlohmann::json int_json(const Int& x);  // number when it fits, else string

// odd parts of h_i / n: the first `ones` equal 1, the next `rest` equal Odd(n),
// then `zeros` zero rows
struct PatternCheck {
    Index ones = 0, rest = 0, zeros = 0;
    bool pass = false;
    std::string detail;
};

PatternCheck odd_part_pattern(const AntisymNF& nf, int n, Index ones, Index rest, Index zeros);
PatternCheck odd_part_pattern(const AntisymNF& nf, const SurfaceInvariants& s, int n, bool reduced);

struct AnalyzeOptions {
    int n = 2;
    long long order = 3;
    bool reduced = false;
};

nlohmann::json analyze(const SurfaceSpec& spec, const AnalyzeOptions& o);

struct VerifyResult {
    std::vector<CheckEntry> checks;
    std::vector<std::pair<std::string, std::string>> skipped;  // id, reason
    bool ok() const;
};

VerifyResult verify(const SurfaceSpec& spec, int n, const std::vector<long long>& orders,
                    std::uint64_t seed = kDefaultSeed);
nlohmann::json to_json(const VerifyResult& v);

// torus checks on random exponent pairs
CheckEntry torus_commutation(const IntMat& P, int pairs, std::uint64_t seed);
CheckEntry torus_inverse(const IntMat& P, int samples, std::uint64_t seed);

nlohmann::json normal_form_report(const IntMat& P);

// "n=2,3;order=3,5,9,15"
struct Grid {
    std::vector<int> n;
    std::vector<long long> order;
};
Grid parse_grid(const std::string& text);

}  // namespace qtrace
