#include "qtrace/reduced.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace qtrace {

namespace {

// X on the block subdiagonal, plus the top-right corner when wrap
IntMat cyc(const IntMat& X, int h, bool wrap = true) {
    const Index s = X.rows();
    IntMat M = IntMat::Zero(s * h, s * h);
    for (int j = 1; j < h; ++j) M.block(j * s, (j - 1) * s, s, s) = X;
    if (wrap) M.block(0, (h - 1) * s, s, s) += X;
    return M;
}

IntMat repeat_diag(const IntMat& X, int h) { return block_diag(std::vector<IntMat>(h, X)); }

IntMat scalar(Index s, long long c) {
    IntMat M = IntMat::Zero(s, s);
    for (Index i = 0; i < s; ++i) M(i, i) = c;
    return M;
}

}  // namespace

MuTriangulation mu_triangulation(const Triangulation& t) {
    MuTriangulation mu;
    mu.source = classify(t);
    const auto& src = mu.source;
    if (!src.no_interior_punctures) throw Error("InteriorPuncture", "mu triangulation needs no interior punctures");
    if (!src.essentially_bordered || t.components.empty())
        throw Error("NotTriangulable", "surface is not essentially bordered");
    if (!is_connected(t)) throw Error("NotTriangulable", "mu triangulation is built for connected surfaces only");

    const std::vector<int>& rs = src.r_i;
    const int b = static_cast<int>(rs.size());
    std::vector<int> rp;  // sides each component keeps on the base polygon
    for (int r : rs) rp.push_back(r % 2 == 0 ? r / 2 : (r == 1 ? 1 : (r - 1) / 2));

    SurfaceSpec spec;
    spec.name = t.spec.name + "~mu";
    std::vector<std::vector<SlotRef>> comp_sides(b);
    const bool bigon = src.genus == 0 && b == 1 && rp[0] <= 2;
    if (bigon) {
        if (rp[0] == 1)
            throw Error("NotTriangulable", "disk with " + std::to_string(rs[0]) + " boundary edges has no room for fan arcs");
    } else {
        PolygonFan base = polygon_fan(src.genus, rp);
        Triangulation bt = parse_surface(base.spec);
        for (const auto& comp : bt.components) {
            int id = -1;
            for (const auto& [slot, c] : base.side_component)
                if (slot == comp.front()) id = c;
            comp_sides.at(id) = comp;
        }
        spec = base.spec;
        spec.name = t.spec.name + "~mu";
    }

    int faces = static_cast<int>(spec.faces.size());
    auto new_face = [&]() {
        spec.faces.push_back(faces);
        return faces++;
    };
    for (int i = 0; i < b; ++i) {
        const int r = rs[i];
        MuComponent c;
        c.r = r;
        if (r == 1) {
            c.edge = comp_sides[i].at(0);
            mu.comps.push_back(c);
            continue;
        }
        for (int k = 0; k < r / 2; ++k) c.fans.push_back(new_face());
        std::vector<SlotRef> targets;
        const std::size_t last = r % 2 == 0 ? c.fans.size() : c.fans.size() - 1;
        for (std::size_t k = 0; k < last; ++k) targets.push_back({c.fans[k], 0});
        if (r % 2 == 1) {
            c.tbar = new_face();
            spec.gluings.push_back({{c.fans.back(), 0}, {c.tbar, 0}});
            targets.push_back({c.tbar, 1});
        }
        if (bigon) {
            spec.gluings.push_back({targets.at(0), targets.at(1)});
        } else {
            if (targets.size() != comp_sides[i].size()) throw Error("NotTriangulable", "fan count mismatch");
            for (std::size_t k = 0; k < targets.size(); ++k) spec.gluings.push_back({targets[k], comp_sides[i][k]});
        }
        mu.comps.push_back(c);
    }
    mu.tri = parse_surface(spec);

    const SurfaceInvariants got = classify(mu.tri);
    std::vector<int> a = got.r_i, e = src.r_i;
    std::sort(a.begin(), a.end());
    std::sort(e.begin(), e.end());
    if (got.genus != src.genus || got.chi != src.chi || a != e)
        throw Error("NotTriangulable", "mu triangulation changed the topology");
    return mu;
}

ReducedData reduced_data(const Triangulation& t, int n) {
    require_no_interior_punctures(t);
    ReducedData d;
    d.n = n;
    d.mu = mu_triangulation(t);
    d.nt = small_vertices(d.mu.tri, n);
    const auto& nt = d.nt;
    d.Kbar = kbar_matrix(nt);
    d.Qbar = quiver_matrix(nt);
    d.Hbar = h_matrix(nt, d.Qbar);

    for (const auto& c : d.mu.comps) {
        IndexList w, u, v;
        for (int f : c.fans)
            for (int k = n - 1; k >= 1; --k) {
                w.push_back(nt.vid(f, {0, k, n - k}));
                u.push_back(nt.vid(f, {k, 0, n - k}));
            }
        if (c.tbar >= 0)
            for (int j = n - 1; j >= 1; --j) v.push_back(nt.vid(c.tbar, {j, 0, n - j}));
        if (c.r == 1)
            for (int j = n - 1; j >= 1; --j) v.push_back(nt.vid(c.edge.face, slot_point(c.edge.slot, j, n)));
        d.boundary.insert(d.boundary.end(), w.begin(), w.end());
        d.boundary.insert(d.boundary.end(), u.begin(), u.end());
        d.boundary.insert(d.boundary.end(), v.begin(), v.end());
        d.W.push_back(w);
        d.U.push_back(u);
        d.Vc.push_back(v);
    }
    std::set<Index> bd(d.boundary.begin(), d.boundary.end());
    if (bd.size() != d.boundary.size()) throw Error("BlockMismatch", "boundary vertex listed twice");
    for (Index v = 0; v < nt.size(); ++v)
        if (!bd.count(v)) d.inner.push_back(v);
    d.order = d.inner;
    d.order.insert(d.order.end(), d.boundary.begin(), d.boundary.end());
    d.a = static_cast<Index>(d.inner.size());

    d.K = d.Kbar(d.order, d.order);
    d.Q = d.Qbar(d.order, d.order);
    d.Pbar = d.K * d.Q * d.K.transpose();
    d.KQ = d.K * d.Q;
    const Index nb = static_cast<Index>(d.boundary.size());
    d.Pprime = d.KQ.block(0, d.a, d.a, nb);
    d.P = d.KQ.block(d.a, d.a, nb, nb);
    d.Kd = d.K.block(d.a, d.a, nb, nb);
    return d;
}

IntMat anti_identity(int k) {
    IntMat M = IntMat::Zero(k, k);
    for (int i = 0; i < k; ++i) M(i, k - 1 - i) = 1;
    return M;
}

IntMat G_reversed(int n) { return G_matrix(n).colwise().reverse(); }

IntMat reduced_P_block(int r, int n) {
    const Index s = n - 1;
    const IntMat nI = scalar(s, n);
    const IntMat nIp = Int(n) * anti_identity(n - 1);
    if (r == 1) return nIp - nI;
    if (r % 2 == 0) {
        const int h = r / 2;
        const IntMat A = scalar(h * s, -n);
        IntMat M = IntMat::Zero(2 * h * s, 2 * h * s);
        M.block(0, 0, h * s, h * s) = A;
        M.block(0, h * s, h * s, h * s) = -A;
        M.block(h * s, 0, h * s, h * s) = cyc(nI, h);
        M.block(h * s, h * s, h * s, h * s) = A;
        return M;
    }
    const int h = (r - 1) / 2;
    const Index hs = h * s;
    const IntMat A = scalar(hs, -n);
    IntMat M = IntMat::Zero(2 * hs + s, 2 * hs + s);
    M.block(0, 0, hs, hs) = A;
    M.block(0, hs, hs, hs) = -A;
    M.block(hs, 0, hs, hs) = cyc(nI, h, false);
    M.block(hs, hs, hs, hs) = A;
    M.block(hs, 2 * hs, s, s) = nIp;  // first block row of the last column
    M.block(2 * hs, hs - s, s, s) = nI;  // last block column of the first part
    M.block(2 * hs, 2 * hs, s, s) = -nI;
    return M;
}

IntMat reduced_S_block(int r, int n) {
    const Index s = n - 1;
    const IntMat G = G_matrix(n), Gp = G_reversed(n);
    if (r == 1) return G + Gp;
    if (r % 2 == 0) {
        const int h = r / 2;
        const IntMat GG = repeat_diag(G, h);
        IntMat M = IntMat::Zero(2 * h * s, 2 * h * s);
        M.block(0, 0, h * s, h * s) = GG;
        M.block(0, h * s, h * s, h * s) = GG;
        M.block(h * s, 0, h * s, h * s) = cyc(G, h);
        M.block(h * s, h * s, h * s, h * s) = GG;
        return M;
    }
    const int h = (r - 1) / 2;
    const Index hs = h * s;
    const IntMat GG = repeat_diag(G, h);
    IntMat M = IntMat::Zero(2 * hs + s, 2 * hs + s);
    M.block(0, 0, hs, hs) = GG;
    M.block(0, hs, hs, hs) = GG;
    M.block(hs, 0, hs, hs) = cyc(G, h, false);
    M.block(hs, hs, hs, hs) = GG;
    M.block(hs, 2 * hs, s, s) = Gp;
    M.block(2 * hs, hs - s, s, s) = G;
    M.block(2 * hs, 2 * hs, s, s) = G;
    return M;
}

BlockReport reduced_blocks(const ReducedData& d) {
    BlockReport rep;
    const int n = d.n;
    const Index N = d.nt.size();
    rep.entries.push_back(compare("KbarHbar_nI", d.Kbar * d.Hbar, scalar(N, n)));

    // boundary walk of every fan component: e3, e2 of each fan, then e3 of tbar
    {
        CheckEntry e{"mu_boundary_order", true, ""};
        for (const auto& c : d.mu.comps) {
            if (c.r == 1) continue;
            std::vector<SlotRef> want;
            for (int f : c.fans) {
                want.push_back({f, 2});
                want.push_back({f, 1});
            }
            if (c.tbar >= 0) want.push_back({c.tbar, 2});
            bool found = false;
            for (auto comp : d.mu.tri.components) {
                auto it = std::find(comp.begin(), comp.end(), want.front());
                if (it == comp.end()) continue;
                found = true;
                std::rotate(comp.begin(), it, comp.end());
                if (comp != want) {
                    e.pass = false;
                    e.detail = "component of face " + std::to_string(c.fans.front()) + " out of order";
                }
            }
            if (!found) {
                e.pass = false;
                e.detail = "fan slot not on the boundary";
            }
        }
        rep.entries.push_back(e);
    }

    const Index a = d.a, nb = static_cast<Index>(d.boundary.size());
    rep.entries.push_back(compare("KQ_inner_minus_2nI", d.KQ.block(0, 0, a, a), scalar(a, -2 * n)));
    rep.entries.push_back(compare("KQ_boundary_inner_zero", d.KQ.block(a, 0, nb, a), IntMat::Zero(nb, a)));
    {
        CheckEntry e{"Pprime_nZ", true, ""}, f{"Pprime_0_or_n", true, ""};
        for (Index i = 0; i < d.Pprime.rows(); ++i)
            for (Index j = 0; j < d.Pprime.cols(); ++j) {
                const Int& x = d.Pprime(i, j);
                const std::string at = "(" + d.nt.label(d.order[i]) + ", " + d.nt.label(d.order[a + j]) + ") = " + x.str();
                if (x % n != 0 && e.pass) {
                    e.pass = false;
                    e.detail = at;
                }
                if (x != 0 && x != n && f.pass) {
                    f.pass = false;
                    f.detail = at;
                }
            }
        rep.entries.push_back(e);
        rep.entries.push_back(f);
    }
    std::vector<IntMat> ps, ss;
    for (const auto& c : d.mu.comps) {
        ps.push_back(reduced_P_block(c.r, n));
        ss.push_back(reduced_S_block(c.r, n));
    }
    rep.entries.push_back(compare("P_blocks", d.P, block_diag(ps)));
    rep.entries.push_back(compare("S_blocks", d.Kd, block_diag(ss)));
    rep.entries.push_back(compare("nK_minus_KT_eq_P", Int(n) * (d.K - d.K.transpose()), d.Pbar));
    {
        CheckEntry e{"P_antisymmetric_nZ", is_antisymmetric<Int>(d.Pbar) && all_divisible<Int>(d.Pbar, Int(n)), ""};
        if (!e.pass) e.detail = "P-bar not antisymmetric or not in nZ";
        rep.entries.push_back(e);
    }
    return rep;
}

IntMat reduced_boundary_generators(const ReducedData& d) {
    const int n = d.n;
    const Index N = d.nt.size();
    std::vector<IntRow> rows;
    Index off = d.a;
    for (std::size_t i = 0; i < d.mu.comps.size(); ++i) {
        const int r = d.mu.comps[i].r;
        auto put = [&](IntRow& v, int j) {
            for (int e = 0; e < r; ++e) v(off + e * (n - 1) + j) = 1;
        };
        if (r % 2 == 0) {
            for (int j = 0; j < n - 1; ++j) {
                IntRow v = IntRow::Zero(N);
                put(v, j);
                rows.push_back(v);
            }
        } else {
            for (int j = 0; j < n / 2; ++j) {
                IntRow v = IntRow::Zero(N);
                put(v, j);
                put(v, n - 2 - j);
                rows.push_back(v);
            }
        }
        off += static_cast<Index>(d.W[i].size() + d.U[i].size() + d.Vc[i].size());
    }
    IntMat g(static_cast<Index>(rows.size()), N);
    for (std::size_t i = 0; i < rows.size(); ++i) g.row(i) = rows[i];
    return g;
}

ReducedLattices reduced_lattices(const ReducedData& d, const RootParams& p) {
    require_odd_order(p);
    ReducedLattices out;
    const Index N = d.nt.size();
    out.lambda_mp = kernel_mod(d.K, Int(p.m_prime));
    out.boundary_gens = reduced_boundary_generators(d);
    out.lambda_boundary = Lattice::from_generators(out.boundary_gens, N);
    out.lambda_z = lattice_sum(out.lambda_mp, out.lambda_boundary);
    return out;
}

ReducedCenter reduced_center_check(const ReducedData& d, const RootParams& p) {
    ReducedCenter c;
    c.lat = reduced_lattices(d, p);
    c.center = center_lattice(d.Pbar, p.order);
    c.equal = lattice_equal(c.center, c.lat.lambda_z);
    c.boundary_in_center = is_sublattice(c.center, c.lat.lambda_boundary);
    c.boundary_in_exact_kernel = all_zero<Int>(IntMat(c.lat.boundary_gens * d.Pbar));
    return c;
}

Int reduced_rank(const ReducedData& d, const RootParams& p) {
    require_odd_order(p);
    return *ambient_index(center_lattice(d.Pbar, p.order));
}

Index reduced_vertex_count(const SurfaceInvariants& s, int n) {
    return static_cast<Index>((n * n - 1) * s.r - n * (n - 1) / 2 * s.boundary_edges);
}

Int reduced_rank_formula(const SurfaceInvariants& s, const RootParams& p) {
    const long long n = p.n;
    const long long e = reduced_vertex_count(s, p.n) - s.t * (n - 1) - (s.b - s.t) * (n / 2);
    return int_pow(p.d, s.r - s.t) * int_pow(p.m, e);
}

Int image_count(int n, long long m_prime, bool palindromic) {
    const int s = n - 1;
    const int free = palindromic ? (s + 1) / 2 : s;
    const IntMat G = G_matrix(n);
    std::set<std::vector<long long>> img;
    std::vector<long long> x(free, 0);
    for (;;) {
        std::vector<long long> p(s);
        for (int i = 0; i < s; ++i) p[i] = palindromic ? x[std::min(i, s - 1 - i)] : x[i];
        std::vector<long long> y(s, 0);
        for (int j = 0; j < s; ++j) {
            long long acc = 0;
            for (int i = 0; i < s; ++i) acc += 2 * p[i] * G(i, j).convert_to<long long>();
            y[j] = ((acc % m_prime) + m_prime) % m_prime;
        }
        img.insert(y);
        int i = 0;
        while (i < free && ++x[i] == m_prime) x[i++] = 0;
        if (i == free) break;
    }
    return Int(static_cast<long long>(img.size()));
}

ReversalReport reversal_properties(int n, long long m_prime, std::uint64_t seed, int samples) {
    if (m_prime % 2 == 0) throw Error("OddOrderRequired", "m' must be odd");
    ReversalReport rep;
    rep.n = n;
    rep.m_prime = m_prime;
    rep.m = m_prime / std::gcd<long long>(2LL * n, m_prime);
    rep.seed = seed;
    const IntMat G = G_matrix(n), Gp = G_reversed(n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> dist(-50, 50);
    rep.reverse_identity = rep.palindromic_identity = true;
    for (int it = 0; it < samples; ++it) {
        IntRow k(n - 1);
        for (Index i = 0; i < k.cols(); ++i) k(i) = dist(rng);
        const IntRow rk = k.reverse();
        const IntRow kG = k * G;
        const IntRow rkG = kG.reverse();
        if (!same<Int>(IntRow(rk * G), IntRow(k * Gp)) || !same<Int>(IntRow(k * Gp), rkG)) rep.reverse_identity = false;
        const IntRow lhs = (k + rk) * (G + Gp);
        const IntRow rhs = Int(2) * kG + Int(2) * rkG;
        if (!same<Int>(lhs, rhs)) rep.palindromic_identity = false;
    }
    rep.im_nu = image_count(n, m_prime, true);
    rep.im_nu_expected = int_pow(rep.m, n / 2);
    rep.im_mu = image_count(n, m_prime, false);
    rep.im_mu_expected = Int(m_prime) * int_pow(rep.m, n - 2);
    return rep;
}

nlohmann::json to_json(const ReversalReport& r) {
    return {{"n", r.n},
            {"m_prime", r.m_prime},
            {"m", r.m},
            {"seed", r.seed},
            {"reverse_identity", r.reverse_identity},
            {"palindromic_identity", r.palindromic_identity},
            {"im_nu", r.im_nu.convert_to<long long>()},
            {"im_nu_expected", r.im_nu_expected.convert_to<long long>()},
            {"im_mu", r.im_mu.convert_to<long long>()},
            {"im_mu_expected", r.im_mu_expected.convert_to<long long>()},
            {"pass", r.all()}};
}

}  // namespace qtrace
