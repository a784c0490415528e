#pragma once

#include "qtrace/ntriang.hpp"

namespace qtrace {

// jk' + ki' + i'j after rotating both arguments until i' <= i and j' >= j
long long kbar_p3(const Coords& v, const Coords& w);

struct Skeleton {
    std::map<int, std::vector<Coords>> parts;  // face -> segment vertices
    std::vector<Coords> in(int face) const;
};

Skeleton skeleton(const Triangulation& t, int n, int face, const Coords& v);

void require_no_interior_punctures(const Triangulation& t);

// rows u, cols v, canonical vertex order
IntMat kbar_matrix(const NTriangulation& nt);

// matrices of a triangulation on its own vertex set
struct PlainTrace {
    NTriangulation nt;
    IntMat Kbar, Qbar, Hbar, Pbar;
};

PlainTrace plain_trace(const Triangulation& t, int n);

struct ExtendedData {
    ExtendedTriangulation ext;
    NTriangulation nt;
    int n = 2;
    std::vector<int> r_i;  // boundary edges per component
    IndexList ring, W, U;  // canonical vertex ids
    IndexList V, Vp;  // ring+W, ring+U
    IndexList original;  // vertices of original faces, canonical order
    IntMat Kbar, Qbar, Hbar;  // canonical order on all vertices of the extended triangulation
    IntMat C;  // Vp x canonical
    IntMat CK;  // C * Kbar
    IntMat K;  // Vp x V
    IntMat Q;  // V x V
    IntMat H;  // V x Vp
    IntMat P;  // Vp x Vp
    IntMat Ksq;  // K * C(:,V)^T, the square form entering n(K - K^T) = P
};

ExtendedData extended_data(const Triangulation& t, int n);

IntMat G_matrix(int n);
IntMat E_matrix(int n);
IntMat F_matrix(int n);
// r x r blocks: diag on the diagonal, off on the subdiagonal and in the top-right corner
IntMat block_cyclic(const IntMat& diag, const IntMat& off, int r);
IntMat block_diag(const std::vector<IntMat>& blocks);

struct CheckEntry {
    std::string id;
    bool pass = false;
    std::string detail;  // first counterexample when failing
};

struct BlockReport {
    std::vector<CheckEntry> entries;
    bool all() const;
    const CheckEntry& get(const std::string& id) const;
};

nlohmann::json to_json(const BlockReport& r);

// entrywise comparison; detail names the first differing entry
CheckEntry compare(const std::string& id, const IntMat& got, const IntMat& want);

BlockReport verify_blocks(const ExtendedData& d);

}  // namespace qtrace
