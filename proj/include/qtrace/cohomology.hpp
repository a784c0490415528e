#pragma once

#include "qtrace/lattice.hpp"
#include "qtrace/surface.hpp"

namespace qtrace {

// cochains are row vectors: delta0(f) = f * d0, delta1(c) = c * d1
struct CochainComplex {
    IntMat d0;  // punctures x edges
    IntMat d1;  // edges x faces
};

// 0-cells punctures, 1-cells edges (boundary ones along the positive
// orientation, interior ones along their first gluing slot), 2-cells faces
CochainComplex cochain_complex(const Triangulation& t);

Int cocycle_count(const Triangulation& t, long long k);
Int restricted_cocycle_count(const Triangulation& t, long long n, long long l);

struct ExactSequenceResult {
    long long k = 1, l = 1, N = 1;
    Int lattice_side;  // [Lambda cap kZ : N Z]
    Int cocycle_side;  // |Z^1(Z_n)_l|
    bool holds() const { return lattice_side == cocycle_side; }
};

// balanced: {k : k H = 0 mod n} in its ambient Z^m
ExactSequenceResult exact_sequence_index(const Triangulation& t, const Lattice& balanced, long long n, long long k);
// both the reduced (V-bar) and the extended (V) balanced lattices
bool exact_sequence_check(const Triangulation& t, int n, long long k);

}  // namespace qtrace
