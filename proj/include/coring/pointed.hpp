#pragma once

// Pointed sets of equivalence classes: the common output shape of the
// cohomology computations.  Classes carry a canonical representative (the
// lex-least member) and are listed in lex order of those representatives;
// the distinguished index marks the class of the base point.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "fp.hpp"

namespace coring {

struct DisjointSets {
  std::vector<std::size_t> parent;

  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t i, std::size_t j) { parent[find(i)] = find(j); }
};

template <class Rep>
struct PointedClassSet {
  std::vector<Rep> reps;                         // lex order
  std::vector<std::vector<std::size_t>> classes; // member indices per class
  std::vector<std::size_t> class_of;             // element index -> class index
  std::size_t distinguished = 0;

  std::size_t size() const { return reps.size(); }
};

// Assemble a pointed class set over matrix-valued elements from a union-find
// partition.  Elements themselves stay wherever the caller keeps them; the
// representative stored per class is the lex-least member matrix.
inline PointedClassSet<FpMatrix> assemble_classes(const std::vector<FpMatrix>& elements,
                                                  DisjointSets& ds, std::size_t base_index) {
  const std::size_t n = elements.size();
  std::vector<std::size_t> roots;
  std::vector<std::size_t> root_class(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (ds.find(i) == i) roots.push_back(i);

  struct ClassDraft {
    FpMatrix rep;
    std::vector<std::size_t> members;
  };
  std::vector<ClassDraft> drafts;
  for (std::size_t r : roots) {
    ClassDraft d;
    for (std::size_t i = 0; i < n; ++i)
      if (ds.find(i) == r) d.members.push_back(i);
    d.rep = elements[d.members.front()];
    for (std::size_t i : d.members)
      if (lex_less(elements[i], d.rep)) d.rep = elements[i];
    drafts.push_back(std::move(d));
  }
  std::sort(drafts.begin(), drafts.end(),
            [](const ClassDraft& a, const ClassDraft& b) { return lex_less(a.rep, b.rep); });

  PointedClassSet<FpMatrix> out;
  out.class_of.resize(n);
  for (std::size_t k = 0; k < drafts.size(); ++k) {
    out.reps.push_back(std::move(drafts[k].rep));
    for (std::size_t i : drafts[k].members) out.class_of[i] = k;
    out.classes.push_back(std::move(drafts[k].members));
  }
  if (n) out.distinguished = out.class_of[base_index];
  return out;
}

} // namespace coring
