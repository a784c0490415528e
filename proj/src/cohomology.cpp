#include "qtrace/cohomology.hpp"

#include "qtrace/trace.hpp"

#include <numeric>

namespace qtrace {

CochainComplex cochain_complex(const Triangulation& t) {
    const Index V = t.num_punctures, E = static_cast<Index>(t.edges.size()), F = t.num_faces;
    CochainComplex c;
    c.d0 = IntMat::Zero(V, E);
    c.d1 = IntMat::Zero(E, F);
    for (Index e = 0; e < E; ++e) {
        const Edge& ed = t.edges[e];
        const SlotRef s = ed.a;
        int from = t.corner[s.face][s.slot], to = t.corner[s.face][(s.slot + 1) % 3];
        // sign of the counterclockwise side of each incident face
        int sign_a = 1;
        if (ed.boundary()) {
            std::swap(from, to);
            sign_a = -1;
        }
        c.d0(to, e) += 1;
        c.d0(from, e) -= 1;
        c.d1(e, s.face) += sign_a;
        if (!ed.boundary()) c.d1(e, ed.b.face) -= 1;
    }
    return c;
}

namespace {

Int power(long long b, Index e) { return int_pow(Int(b), static_cast<long long>(e)); }

}  // namespace

Int cocycle_count(const Triangulation& t, long long k) {
    if (k < 1) throw Error("InvalidArgument", "k must be >= 1");
    const CochainComplex c = cochain_complex(t);
    const Smith<Int> s = smith_normal_form<Int>(c.d1);
    Int count = power(k, c.d1.rows() - s.rank);
    for (const auto& di : s.diag) count *= gcd_of<Int>(di, Int(k));
    return count;
}

Int restricted_cocycle_count(const Triangulation& t, long long n, long long l) {
    if (l < 1 || n % l != 0) throw Error("NotADivisor", std::to_string(l) + " does not divide " + std::to_string(n));
    const CochainComplex c = cochain_complex(t);
    const Index E = c.d1.rows();
    // x = l y with y mod n/l; x is a cocycle iff y (l d1) = 0 mod n
    IntMat ld1 = c.d1;
    ld1 *= l;
    const Lattice ys = kernel_mod(ld1, Int(n));
    return power(n / l, E) / *ambient_index(ys);
}

ExactSequenceResult exact_sequence_index(const Triangulation& t, const Lattice& balanced, long long n, long long k) {
    ExactSequenceResult r;
    r.k = k;
    r.l = std::gcd(k, n);
    r.N = k * n / r.l;
    const Index m = balanced.dim();
    const Lattice cut = lattice_intersect(balanced, Lattice::scaled(m, Int(k)));
    r.lattice_side = *lattice_index(cut, Lattice::scaled(m, Int(r.N)));
    r.cocycle_side = restricted_cocycle_count(t, n, r.l);
    return r;
}

bool exact_sequence_check(const Triangulation& t, int n, long long k) {
    const PlainTrace plain = plain_trace(t, n);
    const Lattice reduced = balanced_lattice(plain.nt, plain.Hbar);
    const ExtendedData d = extended_data(t, n);
    const Lattice full = kernel_mod(d.H, Int(n));
    return exact_sequence_index(t, reduced, n, k).holds() && exact_sequence_index(t, full, n, k).holds();
}

}  // namespace qtrace
