#include "nervelat/complex.hpp"

#include <algorithm>
#include <unordered_set>

namespace nervelat {

VertexSet make_vertex_set(int m, std::initializer_list<int> vertices_1based) {
  return make_vertex_set(m, std::vector<int>(vertices_1based));
}

VertexSet make_vertex_set(int m, const std::vector<int>& vertices_1based) {
  VertexSet s(m);
  for (int v : vertices_1based) {
    if (v < 1 || v > m) throw DomainError("vertex " + std::to_string(v) + " outside universe [1," + std::to_string(m) + "]");
    s.set(v - 1);
  }
  return s;
}

namespace {

// Keep the inclusion-maximal sets, sorted lex, duplicate-free.
std::vector<VertexSet> antichain_normalize(std::vector<VertexSet> sets) {
  std::erase_if(sets, [](const VertexSet& s) { return s.none(); });
  std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.count() > b.count();
  });
  std::vector<VertexSet> keep;
  for (const VertexSet& s : sets) {
    bool dominated = false;
    for (const VertexSet& k : keep)
      if (s.is_subset_of(k)) {
        dominated = true;
        break;
      }
    if (!dominated) keep.push_back(s);
  }
  std::sort(keep.begin(), keep.end());
  return keep;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal(int m, std::vector<VertexSet> sets,
                                                  Options opts) {
  if (m < 0) throw DomainError("negative vertex count");
  for (const VertexSet& s : sets)
    if (s.width() != m)
      throw DomainError("generating set width " + std::to_string(s.width()) +
                        " does not match m=" + std::to_string(m));
  std::vector<VertexSet> maximal = antichain_normalize(std::move(sets));
  if (maximal.empty() && !opts.allow_empty)
    throw DomainError("no nonempty generating set");
  if (!opts.allow_ghost_vertices) {
    VertexSet covered(m);
    for (const VertexSet& s : maximal) covered |= s;
    if (covered != Bitset::full(m))
      throw DomainError("ghost vertices: some vertex lies in no maximal simplex");
  }
  return SimplicialComplex(m, std::move(maximal));
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const VertexSet& s : maximal_) d = std::max(d, s.count() - 1);
  return d;
}

bool SimplicialComplex::has_simplex(const VertexSet& simplex) const {
  if (simplex.width() != m_) throw DomainError("simplex width does not match complex");
  if (simplex.none()) return true;
  for (const VertexSet& s : maximal_)
    if (simplex.is_subset_of(s)) return true;
  return false;
}

std::vector<VertexSet> SimplicialComplex::faces(size_t cap) const {
  std::unordered_set<VertexSet, Bitset::Hash> seen;
  for (const VertexSet& max : maximal_) {
    std::vector<int> verts = max.bits();
    if (verts.size() >= 63) throw ResourceError("maximal simplex too large to enumerate");
    uint64_t n = 1ull << verts.size();
    for (uint64_t mask = 1; mask < n; ++mask) {
      VertexSet f(m_);
      for (size_t i = 0; i < verts.size(); ++i)
        if (mask & (1ull << i)) f.set(verts[i]);
      seen.insert(std::move(f));
      if (seen.size() > cap)
        throw ResourceError("face cap " + std::to_string(cap) + " exceeded");
    }
  }
  std::vector<VertexSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), card_lex_less);
  return out;
}

FVector SimplicialComplex::f_vector(size_t cap) const {
  FVector fv;
  fv.counts.assign(static_cast<size_t>(std::max(dimension() + 1, 0)), 0);
  for (const VertexSet& f : faces(cap)) fv.counts[static_cast<size_t>(f.count() - 1)]++;
  return fv;
}

long long SimplicialComplex::euler_characteristic(size_t cap) const {
  long long chi = 0;
  long long sign = 1;
  for (long long c : f_vector(cap).counts) {
    chi += sign * c;
    sign = -sign;
  }
  return chi;
}

SimplicialComplex link(const SimplicialComplex& k, const VertexSet& simplex) {
  if (simplex.none()) throw DomainError("link of the empty simplex");
  if (!k.has_simplex(simplex)) throw DomainError("link: simplex not in complex");
  std::vector<VertexSet> gens;
  for (const VertexSet& max : k.maximal())
    if (simplex.is_subset_of(max)) gens.push_back(max.minus(simplex));
  return SimplicialComplex::from_maximal(k.vertex_count(), std::move(gens),
                                         {.allow_ghost_vertices = true, .allow_empty = true});
}

SimplicialComplex star(const SimplicialComplex& k, const VertexSet& simplex) {
  if (simplex.none()) throw DomainError("star of the empty simplex");
  if (!k.has_simplex(simplex)) throw DomainError("star: simplex not in complex");
  std::vector<VertexSet> gens;
  for (const VertexSet& max : k.maximal())
    if (simplex.is_subset_of(max)) gens.push_back(max);
  return SimplicialComplex::from_maximal(k.vertex_count(), std::move(gens),
                                         {.allow_ghost_vertices = true});
}

SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2) {
  int m1 = k1.vertex_count(), m2 = k2.vertex_count();
  int m = m1 + m2;
  auto lift1 = [&](const VertexSet& s) {
    VertexSet r(m);
    for (int b : s.bits()) r.set(b);
    return r;
  };
  auto lift2 = [&](const VertexSet& s) {
    VertexSet r(m);
    for (int b : s.bits()) r.set(b + m1);
    return r;
  };
  std::vector<VertexSet> gens;
  if (k1.empty()) {
    for (const VertexSet& b : k2.maximal()) gens.push_back(lift2(b));
  } else if (k2.empty()) {
    for (const VertexSet& a : k1.maximal()) gens.push_back(lift1(a));
  } else {
    for (const VertexSet& a : k1.maximal())
      for (const VertexSet& b : k2.maximal()) gens.push_back(lift1(a) | lift2(b));
  }
  return SimplicialComplex::from_maximal(m, std::move(gens),
                                         {.allow_ghost_vertices = true, .allow_empty = true});
}

SimplicialComplex cone(const SimplicialComplex& k) {
  VertexSet pt = Bitset::full(1);
  return join(k, SimplicialComplex::from_maximal(1, {pt}));
}

SimplicialComplex delete_vertex(const SimplicialComplex& k, int vertex_1based) {
  if (vertex_1based < 1 || vertex_1based > k.vertex_count())
    throw DomainError("delete_vertex: vertex out of range");
  int bit = vertex_1based - 1;
  std::vector<VertexSet> gens;
  for (const VertexSet& max : k.maximal()) {
    VertexSet g = max;
    if (g.test(bit)) g.reset(bit);
    gens.push_back(g);
  }
  return SimplicialComplex::from_maximal(k.vertex_count(), std::move(gens),
                                         {.allow_ghost_vertices = true, .allow_empty = true});
}

}  // namespace nervelat
