#include "qtrace/trace.hpp"

#include <set>
#include <sstream>

namespace qtrace {

long long kbar_p3(const Coords& v, const Coords& w) {
    for (int r = 0; r < 3; ++r) {
        const long long i = v[r], j = v[(r + 1) % 3], k = v[(r + 2) % 3];
        const long long i2 = w[r], j2 = w[(r + 1) % 3], k2 = w[(r + 2) % 3];
        if (i2 <= i && j2 >= j) return j * k2 + k * i2 + i2 * j;
    }
    throw Error("NoAdmissibleRotation", "no rotation with i' <= i and j' >= j");
}

std::vector<Coords> Skeleton::in(int face) const {
    auto it = parts.find(face);
    return it == parts.end() ? std::vector<Coords>{} : it->second;
}

Skeleton skeleton(const Triangulation& t, int n, int face, const Coords& v) {
    Skeleton sk;
    sk.parts[face].push_back(v);
    // leg towards slot s carries weight v[s]; every step turns left
    for (int s = 0; s < 3; ++s) {
        const int w = v[s];
        if (w == 0) continue;
        SlotRef cur{face, s};
        std::set<SlotRef> seen;
        while (t.glued(cur)) {
            SlotRef o = t.across(cur);
            if (!seen.insert(o).second) throw Error("ElongationLoop", "left-turning path closes up");
            const int ex = (o.slot + 1) % 3;
            Coords y{0, 0, 0};
            y[ex] = w;
            y[o.slot] = n - w;
            sk.parts[o.face].push_back(y);
            cur = {o.face, ex};
        }
    }
    return sk;
}

void require_no_interior_punctures(const Triangulation& t) {
    for (bool b : t.puncture_on_boundary)
        if (!b) throw Error("InteriorPuncture", "trace matrices need a surface without interior punctures");
}

IntMat kbar_matrix(const NTriangulation& nt) {
    require_no_interior_punctures(nt.tri);
    const Index N = nt.size();
    IntMat K = IntMat::Zero(N, N);
    for (Index u = 0; u < N; ++u) {
        const Skeleton sk = skeleton(nt.tri, nt.n, nt.reps[u].face, nt.reps[u].c);
        for (Index v = 0; v < N; ++v) {
            bool first = true;
            long long val = 0;
            for (const auto& occ : nt.occurrences[v]) {
                long long s = 0;
                auto it = sk.parts.find(occ.face);
                if (it != sk.parts.end())
                    for (const auto& y : it->second) s += kbar_p3(y, occ.c);
                if (first) {
                    val = s;
                    first = false;
                } else if (s != val) {
                    throw Error("WellDefinednessViolation",
                                "K-bar(" + nt.label(u) + ", " + nt.label(v) + ") depends on the face");
                }
            }
            K(u, v) = val;
        }
    }
    return K;
}

PlainTrace plain_trace(const Triangulation& t, int n) {
    PlainTrace p;
    p.nt = small_vertices(t, n);
    p.Kbar = kbar_matrix(p.nt);
    p.Qbar = quiver_matrix(p.nt);
    p.Hbar = h_matrix(p.nt, p.Qbar);
    p.Pbar = p.Kbar * p.Qbar * p.Kbar.transpose();
    return p;
}

ExtendedData extended_data(const Triangulation& t, int n) {
    require_no_interior_punctures(t);
    ExtendedData d;
    d.n = n;
    d.ext = attach_triangles(t);
    d.nt = small_vertices(d.ext.tri, n);
    for (const auto& c : t.components) d.r_i.push_back(static_cast<int>(c.size()));
    const auto& nt = d.nt;

    for (const auto& a : d.ext.attached)
        for (int k = n - 1; k >= 1; --k) {
            d.W.push_back(nt.vid(a.face, {0, k, n - k}));
            d.U.push_back(nt.vid(a.face, {k, 0, n - k}));
        }
    std::set<Index> wu(d.W.begin(), d.W.end());
    wu.insert(d.U.begin(), d.U.end());
    std::set<Index> orig;
    for (Index v = 0; v < nt.size(); ++v) {
        if (!wu.count(v)) d.ring.push_back(v);
        for (const auto& occ : nt.occurrences[v])
            if (!d.ext.is_attached(occ.face)) orig.insert(v);
    }
    d.original.assign(orig.begin(), orig.end());
    d.V = d.ring;
    d.V.insert(d.V.end(), d.W.begin(), d.W.end());
    d.Vp = d.ring;
    d.Vp.insert(d.Vp.end(), d.U.begin(), d.U.end());

    d.Kbar = kbar_matrix(nt);
    d.Qbar = quiver_matrix(nt);
    d.Hbar = h_matrix(nt, d.Qbar);

    d.C = IntMat::Zero(static_cast<Index>(d.Vp.size()), nt.size());
    for (std::size_t r = 0; r < d.Vp.size(); ++r) {
        const Index v = d.Vp[r];
        d.C(r, v) += 1;
        if (orig.count(v)) continue;
        const SmallVertex& occ = nt.occurrences[v].front();
        d.C(r, nt.vid(occ.face, {0, n - occ.c[2], occ.c[2]})) -= 1;
    }
    d.CK = d.C * d.Kbar;
    d.K = d.CK(Eigen::all, d.V);
    d.Q = d.Qbar(d.V, d.V);
    d.H = d.Hbar(d.V, d.Vp);
    d.P = d.K * d.Q * d.K.transpose();
    IntMat CV = d.C(Eigen::all, d.V);
    d.Ksq = d.K * CV.transpose();
    return d;
}

IntMat G_matrix(int n) {
    IntMat G(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) G(i - 1, j - 1) = i <= j ? i * (n - j) : j * (n - i);
    return G;
}

IntMat E_matrix(int n) {
    IntMat E = IntMat::Zero(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j <= i; ++j) E(i - 1, j - 1) = i - j + 1;
    return E;
}

IntMat F_matrix(int n) {
    IntMat F = IntMat::Zero(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            if (i == 1)
                F(i - 1, j - 1) = n - j;
            else if (i == j + 1)
                F(i - 1, j - 1) = -n;
        }
    return F;
}

IntMat block_cyclic(const IntMat& diag, const IntMat& off, int r) {
    const Index s = diag.rows();
    IntMat M = IntMat::Zero(r * s, r * s);
    for (int j = 0; j < r; ++j) {
        M.block(j * s, j * s, s, s) += diag;
        const int prev = (j + r - 1) % r;
        M.block(j * s, prev * s, s, s) += off;
    }
    return M;
}

IntMat block_diag(const std::vector<IntMat>& blocks) {
    Index rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    IntMat M = IntMat::Zero(rows, cols);
    Index r = 0, c = 0;
    for (const auto& b : blocks) {
        M.block(r, c, b.rows(), b.cols()) = b;
        r += b.rows();
        c += b.cols();
    }
    return M;
}

bool BlockReport::all() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

const CheckEntry& BlockReport::get(const std::string& id) const {
    for (const auto& e : entries)
        if (e.id == id) return e;
    throw Error("UnknownCheck", id);
}

nlohmann::json to_json(const BlockReport& r) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : r.entries) j.push_back({{"id", e.id}, {"pass", e.pass}, {"detail", e.detail}});
    return j;
}

CheckEntry compare(const std::string& id, const IntMat& got, const IntMat& want) {
    CheckEntry e{id, true, ""};
    if (got.rows() != want.rows() || got.cols() != want.cols()) {
        e.pass = false;
        e.detail = "shape " + std::to_string(got.rows()) + "x" + std::to_string(got.cols()) + " vs " +
                   std::to_string(want.rows()) + "x" + std::to_string(want.cols());
        return e;
    }
    for (Index i = 0; i < got.rows(); ++i)
        for (Index j = 0; j < got.cols(); ++j)
            if (got(i, j) != want(i, j)) {
                e.pass = false;
                e.detail = "(" + std::to_string(i) + "," + std::to_string(j) + "): " + got(i, j).str() +
                           " vs " + want(i, j).str();
                return e;
            }
    return e;
}

namespace {

IntMat scalar_identity(Index s, long long c) {
    IntMat I = identity<Int>(s);
    I *= c;
    return I;
}

CheckEntry divisible(const std::string& id, const IntMat& m, long long n) {
    CheckEntry e{id, true, ""};
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (m(i, j) % n != 0) {
                e.pass = false;
                e.detail = "(" + std::to_string(i) + "," + std::to_string(j) + "): " + m(i, j).str();
                return e;
            }
    return e;
}

}  // namespace

BlockReport verify_blocks(const ExtendedData& d) {
    BlockReport rep;
    const int n = d.n;
    const Index a = static_cast<Index>(d.ring.size()), b = static_cast<Index>(d.W.size());
    const Index N = d.nt.size();

    rep.entries.push_back(compare("restriction_zero", d.CK(Eigen::all, d.U), IntMat::Zero(d.Vp.size(), b)));
    rep.entries.push_back(compare("KbarHbar_nI", d.Kbar * d.Hbar, scalar_identity(N, n)));
    rep.entries.push_back(compare("KH_nI", d.K * d.H, scalar_identity(a + b, n)));
    {
        CheckEntry e = divisible("P_antisymmetric_nZ", d.P, n);
        if (e.pass && !is_antisymmetric<Int>(d.P)) e = {"P_antisymmetric_nZ", false, "not anti-symmetric"};
        rep.entries.push_back(e);
    }
    {
        IntMat lhs = d.Ksq - d.Ksq.transpose();
        lhs *= n;
        rep.entries.push_back(compare("nK_minus_KT_eq_P", lhs, d.P));
    }

    IndexList order = d.ring;
    order.insert(order.end(), d.W.begin(), d.W.end());
    order.insert(order.end(), d.U.begin(), d.U.end());
    const IntMat KQ = (d.Kbar * d.Qbar)(order, order);
    {
        CheckEntry e = compare("KQ_block_form", KQ.topLeftCorner(a, a), scalar_identity(a, -2 * n));
        if (e.pass) e = compare("KQ_block_form", KQ.block(a, 0, 2 * b, a), IntMat::Zero(2 * b, a));
        rep.entries.push_back(e);
    }
    const IntMat A = KQ.block(a, a, b, b);
    const IntMat B = KQ.block(a + b, a, b, b);
    const IntMat D = KQ.block(0, a, a, b);
    rep.entries.push_back(compare("A_minus_nI", A, scalar_identity(b, -n)));

    std::vector<IntMat> Bs, Ls;
    const IntMat G = G_matrix(n);
    for (int r : d.r_i) {
        Bs.push_back(block_cyclic(IntMat::Zero(n - 1, n - 1), scalar_identity(n - 1, n), r));
        Ls.push_back(block_cyclic(IntMat(-G), G, r));
    }
    rep.entries.push_back(compare("B_cyclic", B, block_diag(Bs)));

    const IntMat C1 = d.C.topRows(a)(Eigen::all, d.W);
    rep.entries.push_back(divisible("D_plus_C1A_mod_n", D + C1 * A, n));

    const IntMat K2 = d.Kbar(order, order);
    rep.entries.push_back(compare("L_blocks", K2.block(a + b, a, b, b) - K2.block(a, a, b, b), block_diag(Ls)));

    {
        IntMat want = IntMat::Zero(a + b, a + b);
        want.topLeftCorner(a, a) = scalar_identity(a, -2 * n);
        want.topRightCorner(a, b) = D + C1 * A;
        want.bottomRightCorner(b, b) = B - A;
        rep.entries.push_back(compare("KQ_reduced_form", d.K * d.Q, want));
    }
    {
        CheckEntry e{"det_B_minus_A", true, ""};
        Index off = 0;
        int odd = 0;
        for (std::size_t i = 0; i < d.r_i.size(); ++i) {
            const int r = d.r_i[i];
            const Index s = static_cast<Index>(r) * (n - 1);
            if (r % 2 == 1) {
                ++odd;
                Int det = determinant(IntMat((B - A).block(off, off, s, s)));
                Int want = int_pow(2, n - 1) * int_pow(n, static_cast<long long>(r) * (n - 1));
                if (det != want && e.pass) {
                    e.pass = false;
                    e.detail = "component " + std::to_string(i) + ": " + det.str() + " vs " + want.str();
                }
            }
            off += s;
        }
        if (odd == 0) e.detail = "no odd component";
        rep.entries.push_back(e);
    }
    rep.entries.push_back(compare("EF_equals_G", E_matrix(n) * F_matrix(n), G));
    return rep;
}

}  // namespace qtrace
