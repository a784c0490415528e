#include "helpers.hpp"

#include <random>

using namespace qtrace;
using namespace qtrace::testing;

TEST_CASE("integer helpers") {
    CHECK(gcd_of<Int>(12, 18) == 6);
    CHECK(floor_div<Int>(-7, 2) == -4);
    CHECK(mod_pos<Int>(-7, 5) == 3);
    auto [g, u, v] = ext_gcd<Int>(240, 46);
    CHECK(g == 2);
    CHECK(u * 240 + v * 46 == 2);
    CHECK(determinant(mat({{2, 4}, {6, 8}})) == -8);
    CHECK(determinant(mat({{0, 1, 2}, {1, 0, 3}, {4, -3, 8}})) == -2);
    CHECK(int_pow(3, 6) == 729);
}

TEST_CASE("odd part") {
    CHECK(odd_part(12) == 3);
    CHECK(odd_part(1) == 1);
    CHECK(odd_part(Int(64) * 15) == 15);
    CHECK(throws_code([] { odd_part(0); }, "InvalidArgument"));
}

TEST_CASE("smith normal form") {
    const IntMat M = mat({{2, 4}, {6, 8}});
    const auto s = smith_normal_form<Int>(M);
    CHECK(s.rank == 2);
    CHECK(s.diag == std::vector<Int>{2, 4});
    CHECK(same<Int>(IntMat(s.U * M * s.V), s.D));
    CHECK(smith_normal_form<Int>(IntMat::Zero(3, 2)).rank == 0);
    CHECK(smith_normal_form<Int>(identity<Int>(3)).diag == std::vector<Int>{1, 1, 1});

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dist(-6, 6);
    for (int it = 0; it < 50; ++it) {
        IntMat A(3 + it % 2, 4);
        for (Index i = 0; i < A.rows(); ++i)
            for (Index j = 0; j < A.cols(); ++j) A(i, j) = dist(rng);
        const auto t = smith_normal_form<Int>(A);
        CHECK(same<Int>(IntMat(t.U * A * t.V), t.D));
        CHECK(abs_of(determinant(t.U)) == 1);
        CHECK(abs_of(determinant(t.V)) == 1);
        for (std::size_t i = 1; i < t.diag.size(); ++i) CHECK(t.diag[i] % t.diag[i - 1] == 0);
    }
}

TEST_CASE("hermite basis is canonical") {
    const Lattice a = Lattice::from_generators(mat({{2, 0}, {0, 3}}), 2);
    const Lattice b = Lattice::from_generators(mat({{2, 3}, {4, 3}, {0, 6}}), 2);
    CHECK(lattice_equal(a, b));
    CHECK(a == b);
    const IntMat H = a.basis();
    CHECK(H(1, 0) == 0);  // echelon rows
    CHECK(H(0, 0) > 0);
}

TEST_CASE("kernel mod N examples") {
    const Lattice L = kernel_mod(mat({{2, 0}, {0, 3}}), 6);
    CHECK(lattice_equal(L, Lattice::from_generators(mat({{3, 0}, {0, 2}}), 2)));
    CHECK(*ambient_index(L) == 6);
    CHECK(lattice_equal(kernel_mod(mat({{5, 1}, {2, 7}}), 1), Lattice::full(2)));
    // invertible mod N gives N Z^m
    CHECK(lattice_equal(kernel_mod(mat({{1, 1}, {0, 1}}), 5), Lattice::scaled(2, 5)));
}

TEST_CASE("kernel mod N against enumeration") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (long long N = 1; N <= 8; ++N)
        for (Index m = 1; m <= 3; ++m)
            for (int rep = 0; rep < 3; ++rep) {
                IntMat M(m, 1 + rep);
                for (Index i = 0; i < M.rows(); ++i)
                    for (Index j = 0; j < M.cols(); ++j) M(i, j) = dist(rng);
                const Lattice L = kernel_mod(M, N);
                long long count = 0;
                bool agree = true;
                for_each_vector(m, N, [&](const IntRow& x) {
                    IntRow y = x * M;
                    bool in = true;
                    for (Index j = 0; j < y.cols(); ++j) in = in && y(j) % N == 0;
                    count += in;
                    agree = agree && in == L.contains(x);
                });
                CHECK(agree);
                CHECK(*ambient_index(L) * count == int_pow(N, m));
            }
}

TEST_CASE("lattice operations") {
    const Lattice twos = Lattice::scaled(2, 2);
    CHECK(*lattice_index(Lattice::full(2), twos) == 4);
    const Lattice g = Lattice::from_generators(mat({{3, 0}, {0, 2}}), 2);
    CHECK(*lattice_index(Lattice::full(2), g) == 6);
    CHECK(is_sublattice(Lattice::full(2), g));
    CHECK_FALSE(is_sublattice(g, Lattice::full(2)));
    CHECK(throws_code([&] { lattice_index(g, Lattice::full(2)); }, "NotSublattice"));
    CHECK_FALSE(lattice_index(Lattice::full(2), Lattice::zero(2)).has_value());
    CHECK(lattice_equal(lattice_sum(twos, g), Lattice::from_generators(mat({{1, 0}, {0, 2}}), 2)));
    CHECK(lattice_equal(lattice_intersect(twos, g), Lattice::from_generators(mat({{6, 0}, {0, 2}}), 2)));
    auto c = g.coordinates(row({6, -4}));
    REQUIRE(c.has_value());
    CHECK(same<Int>(IntRow(*c * g.basis()), row({6, -4})));
    CHECK_FALSE(g.coordinates(row({1, 0})).has_value());
}

TEST_CASE("integer left kernel") {
    const IntMat M = mat({{1, 2}, {2, 4}, {0, 1}});
    const Lattice K = integer_left_kernel(M);
    CHECK(K.rank() == 1);
    CHECK(all_zero<Int>(IntMat(K.basis() * M)));
    CHECK(K.contains(row({2, -1, 0})));
    CHECK(integer_left_kernel(mat({{0, 1}, {-1, 0}})).rank() == 0);
}

TEST_CASE("anti-symmetric normal form examples") {
    auto a = antisym_normal_form(mat({{0, 3}, {-3, 0}}));
    CHECK(a.h == std::vector<Int>{3});
    CHECK(a.zero_count == 0);
    CHECK(a.verified);
    CHECK(same<Int>(a.X, identity<Int>(2)));
    auto b = antisym_normal_form(mat({{0, 2, 0}, {-2, 0, 0}, {0, 0, 0}}));
    CHECK(b.h == std::vector<Int>{2});
    CHECK(b.zero_count == 1);
    CHECK(throws_code([] { antisym_normal_form(mat({{0, 1}, {2, 0}})); }, "NotAntisymmetric"));
}

TEST_CASE("anti-symmetric normal form on random forms") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> dist(-8, 8);
    for (int it = 0; it < 60; ++it) {
        const Index m = 2 + it % 6;
        IntMat P = IntMat::Zero(m, m);
        for (Index i = 0; i < m; ++i)
            for (Index j = i + 1; j < m; ++j) {
                P(i, j) = dist(rng) * (it % 3 + 1);
                P(j, i) = -P(i, j);
            }
        const auto nf = antisym_normal_form(P);
        CHECK(nf.verified);
        CHECK(same<Int>(IntMat(nf.X.transpose() * P * nf.X), nf.form));
        CHECK(abs_of(determinant(nf.X)) == 1);
        CHECK(same<Int>(nf.form, antisym_block_form(nf.h, m)));
        for (std::size_t i = 1; i < nf.h.size(); ++i) CHECK(nf.h[i] % nf.h[i - 1] == 0);
        // the Pfaffian-type invariant: |det P| = prod h_i^2 when nonsingular
        Int prod = 1;
        for (const auto& h : nf.h) prod *= h * h;
        if (nf.zero_count == 0) CHECK(abs_of(determinant(P)) == prod);
    }
}
