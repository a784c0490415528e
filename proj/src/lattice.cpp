#include "qtrace/lattice.hpp"

namespace qtrace {

Lattice Lattice::from_generators(const IntMat& gens, Index dim) {
    if (gens.rows() == 0) return zero(dim);
    if (gens.cols() != dim) throw Error("DimensionMismatch", "generator width");
    return Lattice(dim, hermite_rows<Int>(gens));
}

Lattice Lattice::from_generators_mod(const IntMat& gens, const Int& N) {
    return Lattice(gens.cols(), hermite_rows_mod<Int>(gens, N));
}

Lattice Lattice::full(Index dim) { return Lattice(dim, identity<Int>(dim)); }

Lattice Lattice::scaled(Index dim, const Int& N) {
    IntMat b = identity<Int>(dim);
    b *= N;
    return Lattice(dim, b);
}

Lattice Lattice::zero(Index dim) { return Lattice(dim, IntMat(0, dim)); }

std::optional<IntRow> Lattice::coordinates(const IntRow& v) const {
    if (v.cols() != dim_) throw Error("DimensionMismatch", "vector width");
    IntRow rest = v;
    IntRow x = IntRow::Zero(basis_.rows());
    for (Index i = 0; i < basis_.rows(); ++i) {
        Index p = 0;
        while (basis_(i, p) == 0) ++p;
        if (rest(p) % basis_(i, p) != 0) return std::nullopt;
        x(i) = rest(p) / basis_(i, p);
        if (x(i) != 0) rest -= x(i) * basis_.row(i);
    }
    if (!all_zero<Int>(rest)) return std::nullopt;
    return x;
}

bool Lattice::contains(const IntRow& v) const { return coordinates(v).has_value(); }

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
    if (a.dim() != b.dim()) throw Error("DimensionMismatch", "lattice_sum");
    return Lattice::from_generators(vstack<Int>(a.basis(), b.basis()), a.dim());
}

bool lattice_equal(const Lattice& a, const Lattice& b) { return a == b; }

bool is_sublattice(const Lattice& big, const Lattice& small) {
    if (big.dim() != small.dim()) return false;
    for (Index i = 0; i < small.rank(); ++i)
        if (!big.contains(small.basis().row(i))) return false;
    return true;
}

Lattice lattice_intersect(const Lattice& a, const Lattice& b) {
    if (a.dim() != b.dim()) throw Error("DimensionMismatch", "lattice_intersect");
    if (a.rank() == 0 || b.rank() == 0) return Lattice::zero(a.dim());
    IntMat stacked = vstack<Int>(a.basis(), IntMat(-b.basis()));
    Lattice k = integer_left_kernel(stacked);
    IntMat gens = k.basis().leftCols(a.rank()) * a.basis();
    return Lattice::from_generators(gens, a.dim());
}

std::optional<Int> lattice_index(const Lattice& big, const Lattice& small) {
    if (!is_sublattice(big, small)) throw Error("NotSublattice", "index needs small inside big");
    if (small.rank() != big.rank()) return std::nullopt;
    IntMat X(small.rank(), big.rank());
    for (Index i = 0; i < small.rank(); ++i) X.row(i) = *big.coordinates(small.basis().row(i));
    return abs_of<Int>(determinant(X));
}

std::optional<Int> ambient_index(const Lattice& L) {
    return lattice_index(Lattice::full(L.dim()), L);
}

Lattice kernel_mod(const IntMat& M, const Int& N) {
    if (N < 1) throw Error("InvalidModulus", "N must be >= 1");
    const Index m = M.rows();
    if (N == 1) return Lattice::full(m);
    Smith<Int> s = smith_normal_form<Int>(M);
    IntMat gens = s.U;
    for (Index i = 0; i < s.rank; ++i) gens.row(i) *= N / gcd_of<Int>(N, s.diag[i]);
    return Lattice::from_generators_mod(gens, N);
}

Lattice integer_left_kernel(const IntMat& M) {
    const Index m = M.rows();
    Smith<Int> s = smith_normal_form<Int>(M);
    return Lattice::from_generators(s.U.bottomRows(m - s.rank), m);
}

IntMat antisym_block_form(const std::vector<Int>& h, Index dim) {
    IntMat f = IntMat::Zero(dim, dim);
    for (std::size_t i = 0; i < h.size(); ++i) {
        f(2 * i, 2 * i + 1) = h[i];
        f(2 * i + 1, 2 * i) = -h[i];
    }
    return f;
}

AntisymNF antisym_normal_form(const IntMat& P) {
    if (!is_antisymmetric<Int>(P)) throw Error("NotAntisymmetric", "matrix is not anti-symmetric");
    const Index m = P.rows();
    IntMat A = P;
    IntMat X = identity<Int>(m);

    auto swap_basis = [&](Index i, Index j) {
        if (i == j) return;
        A.row(i).swap(A.row(j));
        A.col(i).swap(A.col(j));
        X.col(i).swap(X.col(j));
    };
    // basis_k += c basis_i
    auto addmul = [&](Index k, Index i, const Int& c) {
        A.col(k) += c * A.col(i);
        A.row(k) += c * A.row(i);
        X.col(k) += c * X.col(i);
    };
    auto bring_min = [&](Index t) {
        Index bi = -1, bj = -1;
        Int best = 0;
        for (Index i = t; i < m; ++i)
            for (Index j = i + 1; j < m; ++j)
                if (A(i, j) != 0 && (bi < 0 || abs_of(A(i, j)) < best)) {
                    best = abs_of(A(i, j));
                    bi = i;
                    bj = j;
                }
        if (bi < 0) return false;
        swap_basis(t, bi);
        swap_basis(t + 1, bj == t ? bi : bj);
        if (A(t, t + 1) < 0) swap_basis(t, t + 1);
        return true;
    };

    AntisymNF out;
    Index t = 0;
    while (t + 1 < m && bring_min(t)) {
        for (;;) {
            const Int h = A(t, t + 1);
            bool rem = false;
            for (Index k = t + 2; k < m; ++k) {
                Int q = A(t, k) / h;
                if (q != 0) addmul(k, t + 1, Int(-q));
                Int c = A(t + 1, k) / h;
                if (c != 0) addmul(k, t, c);
                if (A(t, k) != 0 || A(t + 1, k) != 0) rem = true;
            }
            if (rem) {
                bring_min(t);
                continue;
            }
            Index bad = -1;
            for (Index i = t + 2; i < m && bad < 0; ++i)
                for (Index j = i + 1; j < m; ++j)
                    if (A(i, j) % h != 0) { bad = i; break; }
            if (bad < 0) break;
            addmul(t, bad, 1);
        }
        out.h.push_back(A(t, t + 1));
        t += 2;
    }
    out.zero_count = m - 2 * static_cast<Index>(out.h.size());
    out.form = antisym_block_form(out.h, m);
    IntMat check = X.transpose() * P * X;
    bool chain = true;
    for (std::size_t i = 0; i + 1 < out.h.size(); ++i)
        if (out.h[i + 1] % out.h[i] != 0) chain = false;
    out.verified = chain && same<Int>(check, out.form) && same<Int>(A, out.form) && abs_of<Int>(determinant(X)) == 1;
    out.X = std::move(X);
    return out;
}

Int odd_part(Int l) {
    if (l < 1) throw Error("InvalidArgument", "odd_part needs l >= 1");
    while (l % 2 == 0) l /= 2;
    return l;
}

}  // namespace qtrace
