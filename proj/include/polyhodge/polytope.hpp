#ifndef POLYHODGE_POLYTOPE_HPP
#define POLYHODGE_POLYTOPE_HPP

#include <optional>
#include <string>
#include <vector>

#include "polyhodge/rational.hpp"

namespace polyhodge {

/// A face of a polytope, recorded by the set of polytope vertices lying on it.
/// The empty face has dim -1; the polytope itself is the face with all
/// vertices.
struct Face {
    std::vector<int> vertex_set;  // sorted vertex indices
    int dim = -1;
};

/// f_{-1}, f_0, ..., f_n with f_{-1} = 1.
struct FVector {
    std::vector<long> counts;

    long f(int j) const { return counts[j + 1]; }
    int top_dim() const { return static_cast<int>(counts.size()) - 2; }
    /// Alternating sum over j = -1..n vanishes for every polytope.
    bool euler_ok() const;
};

/// Compact convex polytope over Q, stored full-dimensional (inputs are
/// reduced to their affine hull). Immutable after construction.
class Polytope {
  public:
    static Polytope empty();

    /// Hull of the given points: reduces to the affine hull, drops
    /// non-extreme points, computes facets exactly and closes the face set
    /// under intersection. Throws EmptyInput when no points are given.
    static Polytope from_vertices(std::vector<RatVec> points, std::string name = "");

    bool is_empty() const { return faces_.size() <= 1; }
    int dim() const { return dim_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    const std::vector<RatVec>& vertices() const { return vertices_; }
    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int i) const { return faces_[i]; }
    int face_count() const { return static_cast<int>(faces_.size()); }

    std::vector<int> faces_of_dim(int d) const;
    /// Index of the face with exactly this (sorted) vertex set, or -1.
    int face_index(const std::vector<int>& vertex_set) const;
    int top_face() const;    // index of the whole polytope
    int empty_face() const;  // index of the empty face

    bool face_contains(int big, int small) const;
    /// Subfaces of `face` having dimension d (the face itself included when
    /// d equals its dimension).
    std::vector<int> subfaces_of(int face, int d) const;
    /// Faces of dimension d containing `face`.
    std::vector<int> superfaces_of(int face, int d) const;

    /// Vertices of a polygonal (2-dimensional) face in cyclic order,
    /// starting at the smallest index and moving toward its smaller neighbor.
    std::vector<int> polygon_cycle(int face) const;

    /// Facet inequalities <normal_j, x - barycenter> <= 1; one per facet,
    /// aligned with facet_tight_sets.
    const std::vector<RatVec>& facet_normals() const { return facet_normals_; }
    const std::vector<std::vector<int>>& facet_tight_sets() const { return facet_tight_sets_; }
    const RatVec& barycenter() const { return barycenter_; }

    FVector f_vector() const;
    bool is_simple() const;
    bool is_simplicial() const;

    /// Extract a face as a polytope in its own right (affine-hull reduced).
    Polytope face_polytope(int face) const;

  private:
    int dim_ = -1;  // -1 encodes the empty polytope
    std::string name_;
    std::vector<RatVec> vertices_;
    std::vector<Face> faces_;  // sorted by (dim, lex vertex set)
    std::vector<RatVec> facet_normals_;
    std::vector<std::vector<int>> facet_tight_sets_;
    RatVec barycenter_;
};

/// Polar polytope: faces in opposite order, computed about the barycenter.
Polytope polar_dual(const Polytope& p);

Polytope pyramid(const Polytope& p);
Polytope double_pyramid(const Polytope& p);
Polytope prism(const Polytope& p);
Polytope product(const Polytope& a, const Polytope& b);

/// True iff some 2-dimensional subface contains all vertices of the 3-face
/// except exactly one. Throws DimensionMismatch unless dim(face) == 3.
bool is_pyramid_3face(const Polytope& p, int face);

/// Combinatorial vertex figure: the faces through one vertex with dimension
/// shifted down by one. Elements are identified by the original face's
/// vertex set, so inclusion is subset containment.
struct FacePoset {
    struct Element {
        int dim;                        // dimension inside the figure
        std::vector<int> orig_vertices; // vertex set of the original face
    };
    std::vector<Element> elements;  // sorted by (dim, lex)

    bool leq(int a, int b) const;  // elements[a] <= elements[b]
};

FacePoset vertex_figure(const Polytope& p, int vertex);

}  // namespace polyhodge

#endif
