#pragma once

#include "qtrace/integer.hpp"

#include <json.hpp>

#include <array>
#include <string>
#include <vector>

namespace qtrace {

// slot s (0-based) of a face runs from corner s to corner s+1; "e1" is s = 0
struct SlotRef {
    int face = -1;
    int slot = 0;
    auto operator<=>(const SlotRef&) const = default;
};

struct Gluing {
    SlotRef a, b;
};

struct SurfaceSpec {
    std::string name;
    std::vector<int> faces;  // face ids; internally faces are positions in this list
    std::vector<Gluing> gluings;  // face fields hold ids
};

SurfaceSpec spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const SurfaceSpec& s);  // canonical order
SurfaceSpec load_spec(const std::string& path);

struct Edge {
    SlotRef a;
    SlotRef b;  // b.face < 0 on boundary edges
    bool boundary() const { return b.face < 0; }
};

struct Triangulation {
    SurfaceSpec spec;
    int num_faces = 0;
    std::vector<std::array<SlotRef, 3>> partner;  // face -1 when unglued
    std::vector<std::array<int, 3>> corner;  // puncture id of each corner
    int num_punctures = 0;
    std::vector<bool> puncture_on_boundary;
    std::vector<Edge> edges;  // gluings first (spec order), then boundary slots
    // boundary slots per component of the boundary of the closed surface, each
    // listed along the positive orientation
    std::vector<std::vector<SlotRef>> components;

    bool glued(SlotRef s) const { return partner[s.face][s.slot].face >= 0; }
    SlotRef across(SlotRef s) const { return partner[s.face][s.slot]; }
    int face_id(int pos) const { return spec.faces[pos]; }
    int boundary_edge_count() const;
};

Triangulation parse_surface(const SurfaceSpec& spec);

struct SurfaceInvariants {
    int p_int = 0, p_bdy = 0;
    int boundary_edges = 0;
    int V = 0, E = 0, F = 0;
    int chi_closed = 0;  // chi of the compact surface
    int chi = 0;
    int r = 0;
    int b = 0;
    std::vector<int> r_i;
    int t = 0;  // components with even r_i
    int genus = 0;
    bool essentially_bordered = false;
    bool no_interior_punctures = false;
    bool triangulable = false;
};

SurfaceInvariants classify(const Triangulation& t);
nlohmann::json invariants_to_json(const SurfaceInvariants& s);
bool is_connected(const Triangulation& t);

struct AttachedFace {
    int face;  // position in the extended triangulation
    SlotRef base;  // boundary slot of the original triangulation
    int component;
    int position;  // index along the component
};

struct ExtendedTriangulation {
    Triangulation tri;
    int original_faces = 0;
    std::vector<AttachedFace> attached;
    bool is_attached(int face) const { return face >= original_faces; }
};

ExtendedTriangulation attach_triangles(const Triangulation& t);

std::vector<SurfaceSpec> builtin_examples();
// fan triangulation of a polygon with side word
//   B_0 . c_1 B_1 c_1^-1 ... . [a_1,b_1] ...
// genus g, boundary components with rs[i] boundary edges (disk needs rs[0] >= 3)
struct PolygonFan {
    SurfaceSpec spec;
    std::vector<std::pair<SlotRef, int>> side_component;  // boundary slot -> index into rs
};
PolygonFan polygon_fan(int genus, const std::vector<int>& rs);
SurfaceSpec polygon_surface(int genus, const std::vector<int>& rs, const std::string& name = "");
SurfaceSpec builtin(const std::string& name);

std::string slot_name(int s);
int slot_index(const std::string& name);

}  // namespace qtrace
