#include "qtrace/ntriang.hpp"

#include <limits>
#include <set>

namespace qtrace {

std::vector<Coords> face_points(int n) {
    std::vector<Coords> out;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) {
            int k = n - i - j;
            if (i == n || j == n || k == n) continue;
            out.push_back({i, j, k});
        }
    return out;
}

Coords slot_point(int s, int a, int n) {
    Coords c{0, 0, 0};
    c[s] = n - a;
    c[(s + 1) % 3] = a;
    return c;
}

std::vector<int> slots_of(const Coords& c) {
    std::vector<int> out;
    for (int s = 0; s < 3; ++s)
        if (c[(s + 2) % 3] == 0) out.push_back(s);
    return out;
}

VertexSet::VertexSet(std::vector<SmallVertex> items) : items_(std::move(items)) {
    for (std::size_t i = 0; i < items_.size(); ++i) pos_[items_[i]] = static_cast<Index>(i);
}

Index VertexSet::index_of(const SmallVertex& v) const {
    auto it = pos_.find(v);
    return it == pos_.end() ? -1 : it->second;
}

Index NTriangulation::vid(int face, const Coords& c) const {
    auto it = id.find({face, c});
    if (it == id.end()) throw Error("UnknownVertex", "no small vertex at that position");
    return it->second;
}

std::string NTriangulation::label(Index v) const {
    const auto& r = reps[v];
    return "f" + std::to_string(tri.face_id(r.face)) + ":(" + std::to_string(r.c[0]) + "," +
           std::to_string(r.c[1]) + "," + std::to_string(r.c[2]) + ")";
}

NTriangulation small_vertices(const Triangulation& t, int n) {
    if (n < 2) throw Error("InvalidArgument", "n must be >= 2");
    NTriangulation nt;
    nt.tri = t;
    nt.n = n;
    const auto pts = face_points(n);
    std::map<SmallVertex, SmallVertex> parent;
    for (int f = 0; f < t.num_faces; ++f)
        for (const auto& c : pts) parent[{f, c}] = {f, c};
    auto find = [&](SmallVertex x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int f = 0; f < t.num_faces; ++f)
        for (int s = 0; s < 3; ++s) {
            if (!t.glued({f, s})) continue;
            SlotRef o = t.across({f, s});
            for (int a = 1; a < n; ++a) {
                SmallVertex x = find({f, slot_point(s, a, n)});
                SmallVertex y = find({o.face, slot_point(o.slot, n - a, n)});
                if (x != y) parent[std::max(x, y)] = std::min(x, y);
            }
        }
    std::map<SmallVertex, Index> rep_index;
    for (auto& [v, p] : parent) {
        SmallVertex r = find(v);
        if (!rep_index.count(r)) rep_index[r] = 0;
    }
    for (auto& [r, i] : rep_index) {
        i = static_cast<Index>(nt.reps.size());
        nt.reps.push_back(r);
    }
    nt.occurrences.resize(nt.reps.size());
    for (auto& [v, p] : parent) {
        Index i = rep_index[find(v)];
        nt.id[v] = i;
        nt.occurrences[i].push_back(v);
    }
    nt.boundary_slot.assign(nt.reps.size(), SlotRef{});
    for (int f = 0; f < t.num_faces; ++f)
        for (int s = 0; s < 3; ++s)
            if (!t.glued({f, s}))
                for (int a = 1; a < n; ++a) nt.boundary_slot[nt.vid(f, slot_point(s, a, n))] = {f, s};
    return nt;
}

IntMat quiver_matrix(const NTriangulation& nt) {
    const int n = nt.n;
    IntMat Q = IntMat::Zero(nt.size(), nt.size());
    static const Coords dirs[3] = {{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}};
    const auto pts = face_points(n);
    std::set<Coords> in_face(pts.begin(), pts.end());
    for (int f = 0; f < nt.tri.num_faces; ++f)
        for (const auto& v : pts)
            for (const auto& d : dirs) {
                Coords w{v[0] + d[0], v[1] + d[1], v[2] + d[2]};
                if (!in_face.count(w)) continue;
                bool on_side = false;
                for (int s = 0; s < 3; ++s)
                    if (v[s] == 0 && w[s] == 0) on_side = true;
                int wt = on_side ? 1 : 2;
                Index a = nt.vid(f, v), b = nt.vid(f, w);
                Q(a, b) += wt;
                Q(b, a) -= wt;
            }
    return Q;
}

IntMat h_matrix(const NTriangulation& nt, const IntMat& Q) {
    const Index N = nt.size();
    IntMat H = IntMat::Zero(N, N);
    for (Index x = 0; x < N; ++x)
        for (Index y = 0; y < N; ++y) {
            const SlotRef bx = nt.boundary_slot[x], by = nt.boundary_slot[y];
            if (bx.face >= 0 && bx == by) {
                if (x == y)
                    H(x, y) = 1;
                else if (Q(x, y) > 0)
                    H(x, y) = -1;
            } else {
                if (Q(x, y) % 2 != 0) throw Error("NonIntegerHalf", "odd quiver entry off a boundary edge");
                H(x, y) = -Q(x, y) / 2;
            }
        }
    return H;
}

Lattice balanced_lattice(const NTriangulation& nt, const IntMat& H) { return kernel_mod(H, Int(nt.n)); }

LabeledIntMatrix label(const NTriangulation& nt, const IntMat& m, const IndexList& rows, const IndexList& cols) {
    LabeledIntMatrix out;
    for (Index r : rows) out.rows.push_back(nt.label(r));
    for (Index c : cols) out.cols.push_back(nt.label(c));
    out.m = m;
    return out;
}

nlohmann::json matrix_json(const IntMat& m) {
    nlohmann::json j = nlohmann::json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Index k = 0; k < m.cols(); ++k) {
            const Int& x = m(i, k);
            if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
                row.push_back(x.convert_to<long long>());
            else
                row.push_back(x.str());
        }
        j.push_back(row);
    }
    return j;
}

IntMat matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw Error("MalformedMatrix", "expected an array of rows");
    const Index r = static_cast<Index>(j.size());
    const Index c = r ? static_cast<Index>(j[0].size()) : 0;
    IntMat m(r, c);
    for (Index i = 0; i < r; ++i) {
        if (!j[i].is_array() || static_cast<Index>(j[i].size()) != c)
            throw Error("MalformedMatrix", "ragged rows");
        for (Index k = 0; k < c; ++k) {
            const auto& x = j[i][k];
            if (x.is_number_integer())
                m(i, k) = x.get<long long>();
            else if (x.is_string())
                m(i, k) = Int(x.get<std::string>());
            else
                throw Error("MalformedMatrix", "entries must be integers");
        }
    }
    return m;
}

nlohmann::json to_json(const LabeledIntMatrix& m) {
    return {{"rows", m.rows}, {"cols", m.cols}, {"data", matrix_json(m.m)}};
}

}  // namespace qtrace
