#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "nervelat/bitset.hpp"
#include "nervelat/errors.hpp"

namespace nervelat {

/// Simplex as a set of 0-based vertex bits over the universe [0, m).
using VertexSet = Bitset;

/// Build a vertex set from 1-based vertex numbers (the convention of all
/// text formats and of the examples in the docs).
VertexSet make_vertex_set(int m, std::initializer_list<int> vertices_1based);
VertexSet make_vertex_set(int m, const std::vector<int>& vertices_1based);

/// Entry j = number of j-dimensional simplices.
struct FVector {
  std::vector<long long> counts;

  friend bool operator==(const FVector& a, const FVector& b) { return a.counts == b.counts; }
};

inline constexpr size_t kDefaultFaceCap = 1'000'000;

/// A simplicial complex on the vertex set {1, ..., m}, stored as the
/// antichain of its maximal simplices (sorted, duplicate-free).
///
/// Values are immutable after construction and safe to share across threads.
class SimplicialComplex {
 public:
  struct Options {
    bool allow_ghost_vertices = false;  // vertices outside every maximal simplex
    bool allow_empty = false;           // the complex {∅} with no maximal simplex
  };

  /// Normalize arbitrary generating sets: drop empty sets and sets contained
  /// in another, sort, deduplicate. Throws DomainError on out-of-range bits,
  /// on ghost vertices (unless allowed), and on an empty generating family
  /// (unless allowed).
  static SimplicialComplex from_maximal(int m, std::vector<VertexSet> sets,
                                        Options opts = {});

  int vertex_count() const { return m_; }
  const std::vector<VertexSet>& maximal() const { return maximal_; }
  bool empty() const { return maximal_.empty(); }
  int dimension() const;  // -1 for the empty complex

  /// True iff I is contained in some maximal simplex (∅ is always a simplex).
  bool has_simplex(const VertexSet& simplex) const;

  /// All nonempty faces, sorted by (cardinality, lex). Throws ResourceError
  /// when more than `cap` faces would be produced.
  std::vector<VertexSet> faces(size_t cap = kDefaultFaceCap) const;

  FVector f_vector(size_t cap = kDefaultFaceCap) const;
  long long euler_characteristic(size_t cap = kDefaultFaceCap) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.m_ == b.m_ && a.maximal_ == b.maximal_;
  }

 private:
  SimplicialComplex(int m, std::vector<VertexSet> maximal)
      : m_(m), maximal_(std::move(maximal)) {}

  int m_ = 0;
  std::vector<VertexSet> maximal_;
};

/// lk_K I: faces J disjoint from I with I ∪ J ∈ K, on the same vertex
/// universe (ghost vertices allowed; the link of a maximal simplex is empty).
/// Throws DomainError unless ∅ ≠ I ∈ K.
SimplicialComplex link(const SimplicialComplex& k, const VertexSet& simplex);

/// st_K I: faces J with I ∪ J ∈ K. Throws DomainError unless ∅ ≠ I ∈ K.
SimplicialComplex star(const SimplicialComplex& k, const VertexSet& simplex);

/// Join on the disjoint union of vertex sets; k2's vertices are relabeled by
/// offset k1.vertex_count().
SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2);

/// Join with a single new vertex m+1 (the apex).
SimplicialComplex cone(const SimplicialComplex& k);

/// Subcomplex of all simplices not containing the 1-based vertex.
SimplicialComplex delete_vertex(const SimplicialComplex& k, int vertex_1based);

}  // namespace nervelat
