#include "qtrace/surface.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

namespace qtrace {

std::string slot_name(int s) { return "e" + std::to_string(s + 1); }

int slot_index(const std::string& name) {
    if (name == "e1") return 0;
    if (name == "e2") return 1;
    if (name == "e3") return 2;
    throw Error("MalformedSpec", "unknown slot label " + name);
}

SurfaceSpec spec_from_json(const nlohmann::json& j) {
    SurfaceSpec s;
    try {
        s.name = j.value("name", std::string());
        for (const auto& f : j.at("faces")) s.faces.push_back(f.get<int>());
        if (j.contains("gluings")) {
            for (const auto& g : j.at("gluings")) {
                Gluing gl;
                gl.a = {g.at("a").at(0).get<int>(), slot_index(g.at("a").at(1).get<std::string>())};
                gl.b = {g.at("b").at(0).get<int>(), slot_index(g.at("b").at(1).get<std::string>())};
                s.gluings.push_back(gl);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error("MalformedSpec", e.what());
    }
    return s;
}

nlohmann::json spec_to_json(const SurfaceSpec& s) {
    std::vector<int> faces = s.faces;
    std::sort(faces.begin(), faces.end());
    std::vector<Gluing> gl = s.gluings;
    for (auto& g : gl)
        if (g.b < g.a) std::swap(g.a, g.b);
    std::sort(gl.begin(), gl.end(), [](const Gluing& x, const Gluing& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    nlohmann::json j;
    j["name"] = s.name;
    j["faces"] = faces;
    j["gluings"] = nlohmann::json::array();
    for (const auto& g : gl)
        j["gluings"].push_back({{"a", {g.a.face, slot_name(g.a.slot)}},
                                {"b", {g.b.face, slot_name(g.b.slot)}}});
    return j;
}

SurfaceSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("IOError", "cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error("MalformedSpec", e.what());
    }
    return spec_from_json(j);
}

int Triangulation::boundary_edge_count() const {
    int c = 0;
    for (const auto& e : edges) c += e.boundary();
    return c;
}

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};

// next boundary slot along the positive orientation: slot s is traversed
// from corner s+1 to corner s, then we rotate around corner s
SlotRef next_boundary(const Triangulation& t, SlotRef cur) {
    int f = cur.face, c = cur.slot, x = cur.slot;
    for (int guard = 0; guard <= 6 * t.num_faces; ++guard) {
        int y = (x == c) ? (c + 2) % 3 : c;
        SlotRef s{f, y};
        if (!t.glued(s)) return s;
        SlotRef o = t.across(s);
        int cc = (c == y) ? (o.slot + 1) % 3 : o.slot;
        f = o.face;
        c = cc;
        x = o.slot;
    }
    throw Error("OrientationInconsistency", "corner walk does not reach a boundary slot");
}

}  // namespace

Triangulation parse_surface(const SurfaceSpec& spec) {
    Triangulation t;
    t.spec = spec;
    t.num_faces = static_cast<int>(spec.faces.size());
    std::map<int, int> pos;
    for (int i = 0; i < t.num_faces; ++i) {
        if (!pos.emplace(spec.faces[i], i).second)
            throw Error("MalformedSpec", "face id listed twice: " + std::to_string(spec.faces[i]));
    }
    t.partner.assign(t.num_faces, {SlotRef{}, SlotRef{}, SlotRef{}});
    auto resolve = [&](SlotRef s) {
        auto it = pos.find(s.face);
        if (it == pos.end()) throw Error("MalformedSpec", "unknown face " + std::to_string(s.face));
        if (s.slot < 0 || s.slot > 2) throw Error("MalformedSpec", "slot out of range");
        return SlotRef{it->second, s.slot};
    };
    std::vector<Gluing> internal;
    for (const auto& g : spec.gluings) {
        SlotRef a = resolve(g.a), b = resolve(g.b);
        if (a == b) throw Error("SelfGluedSlot", "slot glued to itself on face " + std::to_string(g.a.face));
        if (t.glued(a) || t.glued(b))
            throw Error("DuplicateGluing", "slot appears in two gluings");
        // orientation reversal fixes the shared corner of two slots of one face
        if (a.face == b.face)
            throw Error("SelfFoldedTriangle", "face " + std::to_string(g.a.face) + " glued to itself");
        t.partner[a.face][a.slot] = b;
        t.partner[b.face][b.slot] = a;
        internal.push_back({a, b});
    }

    UnionFind uf(3 * t.num_faces);
    for (const auto& g : internal) {
        uf.unite(3 * g.a.face + g.a.slot, 3 * g.b.face + (g.b.slot + 1) % 3);
        uf.unite(3 * g.a.face + (g.a.slot + 1) % 3, 3 * g.b.face + g.b.slot);
    }
    std::map<int, int> pid;
    t.corner.assign(t.num_faces, {0, 0, 0});
    for (int f = 0; f < t.num_faces; ++f)
        for (int c = 0; c < 3; ++c) {
            int root = uf.find(3 * f + c);
            auto it = pid.emplace(root, static_cast<int>(pid.size())).first;
            t.corner[f][c] = it->second;
        }
    t.num_punctures = static_cast<int>(pid.size());
    t.puncture_on_boundary.assign(t.num_punctures, false);

    // each corner class is a cycle (no free slot ends) or a chain with two
    std::vector<int> free_ends(t.num_punctures, 0);
    for (int f = 0; f < t.num_faces; ++f)
        for (int s = 0; s < 3; ++s)
            if (!t.glued({f, s})) {
                free_ends[t.corner[f][s]]++;
                free_ends[t.corner[f][(s + 1) % 3]]++;
            }
    for (int p = 0; p < t.num_punctures; ++p) {
        if (free_ends[p] != 0 && free_ends[p] != 2)
            throw Error("OrientationInconsistency", "corner class with " + std::to_string(free_ends[p]) + " free slot ends");
        t.puncture_on_boundary[p] = free_ends[p] == 2;
    }

    for (const auto& g : internal) t.edges.push_back({g.a, g.b});
    std::vector<SlotRef> bslots;
    for (int f = 0; f < t.num_faces; ++f)
        for (int s = 0; s < 3; ++s)
            if (!t.glued({f, s})) {
                t.edges.push_back({{f, s}, SlotRef{}});
                bslots.push_back({f, s});
            }

    std::set<SlotRef> seen;
    for (const auto& start : bslots) {
        if (seen.count(start)) continue;
        std::vector<SlotRef> comp;
        SlotRef cur = start;
        do {
            if (!seen.insert(cur).second)
                throw Error("OrientationInconsistency", "boundary walk revisits a slot");
            comp.push_back(cur);
            cur = next_boundary(t, cur);
        } while (cur != start);
        t.components.push_back(comp);
    }
    return t;
}

SurfaceInvariants classify(const Triangulation& t) {
    SurfaceInvariants s;
    s.V = t.num_punctures;
    s.E = static_cast<int>(t.edges.size());
    s.F = t.num_faces;
    for (bool b : t.puncture_on_boundary) (b ? s.p_bdy : s.p_int)++;
    s.boundary_edges = t.boundary_edge_count();
    s.chi_closed = s.V - s.E + s.F;
    s.chi = s.chi_closed - s.p_int;
    s.r = s.boundary_edges - s.chi;
    s.b = static_cast<int>(t.components.size());
    for (const auto& c : t.components) {
        s.r_i.push_back(static_cast<int>(c.size()));
        if (c.size() % 2 == 0) s.t++;
    }

    UnionFind uf(std::max(t.num_faces, 1));
    for (int f = 0; f < t.num_faces; ++f)
        for (int sl = 0; sl < 3; ++sl)
            if (t.glued({f, sl})) uf.unite(f, t.across({f, sl}).face);
    std::set<int> parts, bordered;
    for (int f = 0; f < t.num_faces; ++f) {
        parts.insert(uf.find(f));
        for (int sl = 0; sl < 3; ++sl)
            if (!t.glued({f, sl})) bordered.insert(uf.find(f));
    }
    int cc = static_cast<int>(parts.size());
    s.genus = (2 * cc - s.b - s.chi_closed) / 2;
    s.essentially_bordered = t.num_faces > 0 && parts.size() == bordered.size();
    s.no_interior_punctures = s.p_int == 0;
    s.triangulable = t.num_faces > 0;
    return s;
}

nlohmann::json invariants_to_json(const SurfaceInvariants& s) {
    return {{"p_int", s.p_int},
            {"p_bdy", s.p_bdy},
            {"boundary_edges", s.boundary_edges},
            {"V", s.V},
            {"E", s.E},
            {"F", s.F},
            {"chi_closed", s.chi_closed},
            {"chi", s.chi},
            {"r", s.r},
            {"b", s.b},
            {"r_i", s.r_i},
            {"t", s.t},
            {"genus", s.genus},
            {"essentially_bordered", s.essentially_bordered},
            {"no_interior_punctures", s.no_interior_punctures},
            {"triangulable", s.triangulable}};
}

bool is_connected(const Triangulation& t) {
    if (t.num_faces == 0) return false;
    UnionFind uf(t.num_faces);
    for (int f = 0; f < t.num_faces; ++f)
        for (int sl = 0; sl < 3; ++sl)
            if (t.glued({f, sl})) uf.unite(f, t.across({f, sl}).face);
    for (int f = 1; f < t.num_faces; ++f)
        if (uf.find(f) != uf.find(0)) return false;
    return true;
}

ExtendedTriangulation attach_triangles(const Triangulation& t) {
    if (t.components.empty()) throw Error("NoBoundary", "surface has no boundary edge");
    if (!classify(t).essentially_bordered)
        throw Error("NoBoundary", "a connected component has no boundary");
    SurfaceSpec spec = t.spec;
    spec.name = t.spec.name + "*";
    int next_id = t.spec.faces.empty() ? 0 : *std::max_element(t.spec.faces.begin(), t.spec.faces.end()) + 1;
    ExtendedTriangulation ext;
    ext.original_faces = t.num_faces;
    int face = t.num_faces;
    for (std::size_t c = 0; c < t.components.size(); ++c)
        for (std::size_t k = 0; k < t.components[c].size(); ++k) {
            SlotRef base = t.components[c][k];
            spec.faces.push_back(next_id);
            spec.gluings.push_back({{next_id, 0}, {t.face_id(base.face), base.slot}});
            ext.attached.push_back({face, base, static_cast<int>(c), static_cast<int>(k)});
            ++next_id;
            ++face;
        }
    ext.tri = parse_surface(spec);
    return ext;
}

PolygonFan polygon_fan(int genus, const std::vector<int>& rs) {
    struct Side {
        char kind;
        int id;
        int sign;
    };
    if (rs.empty()) throw Error("NotTriangulable", "no boundary component");
    std::vector<Side> sides;
    for (int k = 0; k < rs[0]; ++k) sides.push_back({'B', 0, 0});
    for (std::size_t j = 1; j < rs.size(); ++j) {
        sides.push_back({'c', static_cast<int>(j), 1});
        for (int k = 0; k < rs[j]; ++k) sides.push_back({'B', static_cast<int>(j), 0});
        sides.push_back({'c', static_cast<int>(j), -1});
    }
    for (int h = 0; h < genus; ++h) {
        sides.push_back({'a', h, 1});
        sides.push_back({'b', h, 1});
        sides.push_back({'a', h, -1});
        sides.push_back({'b', h, -1});
    }
    const int N = static_cast<int>(sides.size());
    if (N < 3) throw Error("NotTriangulable", "polygon with fewer than three sides");
    // fan from corner 0: face i-1 = (c0, c_i, c_{i+1})
    auto slot_of = [&](int i) -> SlotRef {
        if (i == 0) return {0, 0};
        if (i == N - 1) return {N - 3, 2};
        return {i - 1, 1};
    };
    PolygonFan out;
    for (int f = 0; f < N - 2; ++f) out.spec.faces.push_back(f);
    for (int i = 1; i < N - 2; ++i) out.spec.gluings.push_back({{i - 1, 2}, {i, 0}});
    std::map<std::pair<char, int>, std::vector<int>> pairs;
    for (int i = 0; i < N; ++i) {
        if (sides[i].kind == 'B')
            out.side_component.push_back({slot_of(i), sides[i].id});
        else
            pairs[{sides[i].kind, sides[i].id}].push_back(i);
    }
    for (const auto& [key, idx] : pairs) out.spec.gluings.push_back({slot_of(idx[0]), slot_of(idx[1])});
    return out;
}

SurfaceSpec polygon_surface(int genus, const std::vector<int>& rs, const std::string& name) {
    SurfaceSpec s = polygon_fan(genus, rs).spec;
    s.name = name;
    if (s.name.empty()) {
        s.name = "g" + std::to_string(genus);
        for (int r : rs) s.name += "_" + std::to_string(r);
    }
    return s;
}

std::vector<SurfaceSpec> builtin_examples() {
    return {
        {"T3", {0}, {}},
        {"S4", {0, 1}, {{{0, 0}, {1, 0}}}},
        {"P5", {0, 1, 2}, {{{0, 1}, {1, 0}}, {{1, 1}, {2, 0}}}},
        {"A11", {0, 1}, {{{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}}},
    };
}

SurfaceSpec builtin(const std::string& name) {
    for (const auto& s : builtin_examples())
        if (s.name == name) return s;
    throw Error("UnknownSurface", "no built-in surface named " + name);
}

}  // namespace qtrace
