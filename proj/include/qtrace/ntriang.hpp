#pragma once

#include "qtrace/lattice.hpp"
#include "qtrace/surface.hpp"

#include <map>

namespace qtrace {

using Coords = std::array<int, 3>;

struct SmallVertex {
    int face = 0;  // position, not spec id
    Coords c{0, 0, 0};
    auto operator<=>(const SmallVertex&) const = default;
};

// non-corner barycentric points of one face, lexicographic
std::vector<Coords> face_points(int n);
// point at parameter a along slot s (from corner s towards corner s+1)
Coords slot_point(int s, int a, int n);
// slots whose closure contains c
std::vector<int> slots_of(const Coords& c);

class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<SmallVertex> items);
    Index size() const { return static_cast<Index>(items_.size()); }
    const SmallVertex& operator[](Index i) const { return items_[i]; }
    Index index_of(const SmallVertex& v) const;  // -1 if absent
    bool contains(const SmallVertex& v) const { return index_of(v) >= 0; }
    const std::vector<SmallVertex>& items() const { return items_; }

private:
    std::vector<SmallVertex> items_;
    std::map<SmallVertex, Index> pos_;
};

struct NTriangulation {
    Triangulation tri;
    int n = 2;
    std::vector<SmallVertex> reps;  // canonical representatives, sorted
    std::map<SmallVertex, Index> id;  // every (face, coords) occurrence
    std::vector<std::vector<SmallVertex>> occurrences;
    std::vector<SlotRef> boundary_slot;  // face -1 when not on a boundary edge

    Index size() const { return static_cast<Index>(reps.size()); }
    Index vid(int face, const Coords& c) const;
    VertexSet vertices() const { return VertexSet(reps); }
    std::string label(Index v) const;
};

NTriangulation small_vertices(const Triangulation& t, int n);

// anti-symmetric signed adjacency, canonical order
IntMat quiver_matrix(const NTriangulation& nt);
IntMat h_matrix(const NTriangulation& nt, const IntMat& Q);
// {k : k H = 0 mod n}
Lattice balanced_lattice(const NTriangulation& nt, const IntMat& H);

struct LabeledIntMatrix {
    std::vector<std::string> rows, cols;
    IntMat m;
};

LabeledIntMatrix label(const NTriangulation& nt, const IntMat& m, const IndexList& rows, const IndexList& cols);
nlohmann::json to_json(const LabeledIntMatrix& m);
nlohmann::json matrix_json(const IntMat& m);
IntMat matrix_from_json(const nlohmann::json& j);

}  // namespace qtrace
