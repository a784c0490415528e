#pragma once

#include "qtrace/integer.hpp"

#include <optional>
#include <utility>

namespace qtrace {

template <typename S>
struct Smith {
    Mat<S> U, D, V;  // U * M * V == D
    std::vector<S> diag;  // nonzero invariants, d_i | d_{i+1}
    Index rank = 0;
};

template <typename S>
Smith<S> smith_normal_form(const Mat<S>& M) {
    const Index r = M.rows(), c = M.cols();
    Mat<S> A = M;
    Mat<S> U = identity<S>(r), V = identity<S>(c);

    auto swap_rows = [&](Index i, Index j) {
        if (i == j) return;
        A.row(i).swap(A.row(j));
        U.row(i).swap(U.row(j));
    };
    auto swap_cols = [&](Index i, Index j) {
        if (i == j) return;
        A.col(i).swap(A.col(j));
        V.col(i).swap(V.col(j));
    };
    auto row_axpy = [&](Index dst, Index src, const S& q) {  // row dst -= q row src
        A.row(dst) -= q * A.row(src);
        U.row(dst) -= q * U.row(src);
    };
    auto col_axpy = [&](Index dst, Index src, const S& q) {
        A.col(dst) -= q * A.col(src);
        V.col(dst) -= q * V.col(src);
    };

    Index t = 0;
    for (; t < std::min(r, c); ++t) {
        // smallest nonzero entry of the trailing block
        Index bi = -1, bj = -1;
        S best = 0;
        for (Index i = t; i < r; ++i)
            for (Index j = t; j < c; ++j)
                if (A(i, j) != 0 && (bi < 0 || abs_of(A(i, j)) < best)) {
                    best = abs_of(A(i, j));
                    bi = i;
                    bj = j;
                }
        if (bi < 0) break;
        swap_rows(t, bi);
        swap_cols(t, bj);

        for (;;) {
            bool clean = true;
            for (Index i = t + 1; i < r; ++i) {
                if (A(i, t) == 0) continue;
                row_axpy(i, t, S(A(i, t) / A(t, t)));
                if (A(i, t) != 0) clean = false;
            }
            for (Index j = t + 1; j < c; ++j) {
                if (A(t, j) == 0) continue;
                col_axpy(j, t, S(A(t, j) / A(t, t)));
                if (A(t, j) != 0) clean = false;
            }
            if (!clean) {
                Index pi = t, pj = t;
                S m = abs_of(A(t, t));
                for (Index i = t + 1; i < r; ++i)
                    if (A(i, t) != 0 && abs_of(A(i, t)) < m) { m = abs_of(A(i, t)); pi = i; pj = t; }
                for (Index j = t + 1; j < c; ++j)
                    if (A(t, j) != 0 && abs_of(A(t, j)) < m) { m = abs_of(A(t, j)); pi = t; pj = j; }
                swap_rows(t, pi);
                swap_cols(t, pj);
                continue;
            }
            // divisibility of the rest
            Index bad = -1;
            for (Index i = t + 1; i < r && bad < 0; ++i)
                for (Index j = t + 1; j < c; ++j)
                    if (A(i, j) % A(t, t) != 0) { bad = i; break; }
            if (bad < 0) break;
            A.row(t) += A.row(bad);
            U.row(t) += U.row(bad);
        }
        if (A(t, t) < 0) {
            A.row(t) = -A.row(t);
            U.row(t) = -U.row(t);
        }
    }
    Smith<S> out;
    out.rank = t;
    for (Index i = 0; i < t; ++i) out.diag.push_back(A(i, i));
    out.U = std::move(U);
    out.D = std::move(A);
    out.V = std::move(V);
    return out;
}

// row-style Hermite form: echelon rows, positive pivots, entries above a
// pivot reduced into [0, pivot). Zero rows dropped.
template <typename S>
Mat<S> hermite_rows(const Mat<S>& gens) {
    Mat<S> A = gens;
    const Index r = A.rows(), c = A.cols();
    Index top = 0;
    for (Index j = 0; j < c && top < r; ++j) {
        for (Index i = top + 1; i < r; ++i) {
            if (A(i, j) == 0) continue;
            if (A(top, j) == 0) {
                A.row(top).swap(A.row(i));
                continue;
            }
            auto [g, u, v] = ext_gcd<S>(A(top, j), A(i, j));
            S a = A(top, j) / g, b = A(i, j) / g;
            Row<S> p = u * A.row(top) + v * A.row(i);
            Row<S> q = a * A.row(i) - b * A.row(top);
            A.row(top) = p;
            A.row(i) = q;
        }
        if (A(top, j) == 0) continue;
        if (A(top, j) < 0) A.row(top) = -A.row(top);
        for (Index i = 0; i < top; ++i) {
            S q = floor_div<S>(A(i, j), A(top, j));
            if (q != 0) A.row(i) -= q * A.row(top);
        }
        ++top;
    }
    return A.topRows(top);
}

// Hermite basis of the full-rank lattice gens + N Z^m, with all arithmetic
// kept below N
template <typename S>
Mat<S> hermite_rows_mod(const Mat<S>& gens, const S& N) {
    const Index m = gens.cols();
    std::vector<Row<S>> work;
    for (Index i = 0; i < gens.rows(); ++i) {
        Row<S> row = gens.row(i);
        for (Index j = 0; j < m; ++j) row(j) = mod_pos<S>(row(j), N);
        if (!all_zero<S>(row)) work.push_back(row);
    }
    Mat<S> H = Mat<S>::Zero(m, m);
    for (Index j = 0; j < m; ++j) {
        Row<S> p = Row<S>::Zero(m);
        p(j) = N;
        for (auto& row : work) {
            if (row(j) == 0) continue;
            auto [g, u, v] = ext_gcd<S>(p(j), row(j));
            S a = p(j) / g, b = row(j) / g;
            Row<S> np = u * p + v * row;
            Row<S> nr = a * row - b * p;
            p = np;
            row = nr;
            for (Index k = j + 1; k < m; ++k) {
                p(k) = mod_pos<S>(p(k), N);
                row(k) = mod_pos<S>(row(k), N);
            }
        }
        std::vector<Row<S>> keep;
        for (auto& row : work)
            if (!all_zero<S>(row)) keep.push_back(row);
        work.swap(keep);
        if (p(j) < 0) p = -p;
        for (Index k = j + 1; k < m; ++k) p(k) = mod_pos<S>(p(k), N);
        H.row(j) = p;
    }
    for (Index j = 0; j < m; ++j)
        for (Index i = 0; i < j; ++i) {
            S q = floor_div<S>(H(i, j), H(j, j));
            if (q != 0) H.row(i) -= q * H.row(j);
        }
    return H;
}

class Lattice {
public:
    Lattice() = default;
    Lattice(Index dim, IntMat hermite_basis) : dim_(dim), basis_(std::move(hermite_basis)) {}

    static Lattice from_generators(const IntMat& gens, Index dim);
    static Lattice from_generators_mod(const IntMat& gens, const Int& N);  // gens + N Z^m
    static Lattice full(Index dim);
    static Lattice scaled(Index dim, const Int& N);  // N Z^m
    static Lattice zero(Index dim);

    Index dim() const { return dim_; }
    Index rank() const { return basis_.rows(); }
    const IntMat& basis() const { return basis_; }

    bool contains(const IntRow& v) const;
    // coordinates in the basis; nullopt when v is not in the lattice
    std::optional<IntRow> coordinates(const IntRow& v) const;
    bool operator==(const Lattice& o) const { return dim_ == o.dim_ && same<Int>(basis_, o.basis_); }

private:
    Index dim_ = 0;
    IntMat basis_ = IntMat(0, 0);
};

Lattice lattice_sum(const Lattice& a, const Lattice& b);
bool lattice_equal(const Lattice& a, const Lattice& b);
bool is_sublattice(const Lattice& big, const Lattice& small);
Lattice lattice_intersect(const Lattice& a, const Lattice& b);
// [big : small]; nullopt means infinite
std::optional<Int> lattice_index(const Lattice& big, const Lattice& small);
std::optional<Int> ambient_index(const Lattice& L);

// {k in Z^m : k M = 0 mod N}, m = M.rows()
Lattice kernel_mod(const IntMat& M, const Int& N);
// {k in Z^m : k M = 0}
Lattice integer_left_kernel(const IntMat& M);

struct AntisymNF {
    IntMat X;       // unimodular, X^T P X = block form
    IntMat form;
    std::vector<Int> h;  // h_1 | h_2 | ...
    Index zero_count = 0;  // size of the trailing zero block
    bool verified = false;
};

AntisymNF antisym_normal_form(const IntMat& P);
IntMat antisym_block_form(const std::vector<Int>& h, Index dim);

Int odd_part(Int l);

}  // namespace qtrace
