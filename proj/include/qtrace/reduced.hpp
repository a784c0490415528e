#pragma once

#include "qtrace/torus.hpp"

#include <cstdint>

namespace qtrace {

// boundary fans of one component: r >= 2 gives r/2 fan faces (slots e1, e2, e3
// with e2, e3 on the boundary) and for odd r one closing face tbar; r = 1 keeps
// the single boundary edge of the base polygon
struct MuComponent {
    int r = 0;
    std::vector<int> fans;
    int tbar = -1;
    SlotRef edge;  // r == 1 only
};

struct MuTriangulation {
    Triangulation tri;
    SurfaceInvariants source;  // invariants of the input surface
    std::vector<MuComponent> comps;  // same order as the input's boundary components
};

MuTriangulation mu_triangulation(const Triangulation& t);

// reduced matrices on the vertex set of the mu triangulation
struct ReducedData {
    MuTriangulation mu;
    NTriangulation nt;
    int n = 2;
    IntMat Kbar, Qbar, Hbar;  // canonical order
    std::vector<IndexList> W, U, Vc;  // per component, canonical ids
    IndexList inner, boundary, order;  // order = inner + boundary
    Index a = 0;  // number of inner vertices
    IntMat K, Q, Pbar;  // reordered; Pbar = K Q K^T
    IntMat KQ;
    IntMat Pprime;  // inner x boundary block of KQ
    IntMat P;  // boundary x boundary block of KQ
    IntMat Kd;  // boundary x boundary block of K
};

ReducedData reduced_data(const Triangulation& t, int n);

// expected blocks of one component
IntMat reduced_P_block(int r, int n);
IntMat reduced_S_block(int r, int n);
IntMat anti_identity(int k);
IntMat G_reversed(int n);

BlockReport reduced_blocks(const ReducedData& d);

struct ReducedLattices {
    Lattice lambda_mp;  // kernel of K mod m'
    IntMat boundary_gens;
    Lattice lambda_boundary;
    Lattice lambda_z;
};

// boundary generators: per edge of a component the (n-1)-block carries the
// same vector b; b free on even components, palindromic on odd ones
IntMat reduced_boundary_generators(const ReducedData& d);
ReducedLattices reduced_lattices(const ReducedData& d, const RootParams& p);

struct ReducedCenter {
    Lattice center;  // kernel of P-bar mod m''
    ReducedLattices lat;
    bool equal = false;
    bool boundary_in_center = false;
    bool boundary_in_exact_kernel = false;  // informational
};

ReducedCenter reduced_center_check(const ReducedData& d, const RootParams& p);
Int reduced_rank(const ReducedData& d, const RootParams& p);
Int reduced_rank_formula(const SurfaceInvariants& s, const RootParams& p);
Index reduced_vertex_count(const SurfaceInvariants& s, int n);

struct ReversalReport {
    int n = 2;
    long long m_prime = 1, m = 1;
    std::uint64_t seed = 0;
    bool reverse_identity = false;  // rev(k)G = kG' = rev(kG)
    bool palindromic_identity = false;  // (k + rev k)(G + G') = 2kG + 2 rev(kG)
    Int im_nu, im_nu_expected;  // palindromic inputs
    Int im_mu, im_mu_expected;
    bool all() const {
        return reverse_identity && palindromic_identity && im_nu == im_nu_expected && im_mu == im_mu_expected;
    }
};

// m' odd
ReversalReport reversal_properties(int n, long long m_prime, std::uint64_t seed = 20240917, int samples = 200);
// |{2pG mod m'}| by enumeration, all p or palindromic p only
Int image_count(int n, long long m_prime, bool palindromic);

nlohmann::json to_json(const ReversalReport& r);

}  // namespace qtrace
