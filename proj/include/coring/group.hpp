#pragma once

// Finite groups as Cayley tables.  Used for abstract groups (partial module),
// unit groups of algebras, and composition groups of invertible maps.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace coring {

struct GroupTable {
  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> table; // table[i][j] = index of x_i * x_j
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;

  std::size_t mul(std::size_t i, std::size_t j) const { return table[i][j]; }

  std::vector<std::string> check() const {
    std::vector<std::string> bad;
    if (table.size() != order) {
      bad.push_back("table has wrong row count");
      return bad;
    }
    for (std::size_t i = 0; i < order; ++i) {
      if (table[i].size() != order) {
        bad.push_back("table row " + std::to_string(i) + " has wrong length");
        return bad;
      }
      for (std::size_t j = 0; j < order; ++j)
        if (table[i][j] >= order) {
          bad.push_back("table entry out of range at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
          return bad;
        }
    }
    if (identity >= order || inverse.size() != order) {
      bad.push_back("identity or inverse table malformed");
      return bad;
    }
    for (std::size_t i = 0; i < order; ++i) {
      if (table[identity][i] != i || table[i][identity] != i)
        bad.push_back("identity law fails at element " + std::to_string(i));
      if (table[i][inverse[i]] != identity || table[inverse[i]][i] != identity)
        bad.push_back("inverse law fails at element " + std::to_string(i));
    }
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j)
        for (std::size_t k = 0; k < order; ++k)
          if (table[table[i][j]][k] != table[i][table[j][k]]) {
            bad.push_back("associativity fails at (" + std::to_string(i) + "," +
                          std::to_string(j) + "," + std::to_string(k) + ")");
            return bad;
          }
    return bad;
  }
};

// Close a finite list of elements under a product that is known to stay in
// the list; locates identity and inverses.  prod(i, j) must return the index
// of element_i * element_j.
inline GroupTable table_from_product(std::size_t n,
                                     const std::function<std::size_t(std::size_t, std::size_t)>& prod) {
  GroupTable g;
  g.order = n;
  g.table.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.table[i][j] = prod(i, j);
  bool found_id = false;
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      ok = g.table[e][i] == i && g.table[i][e] == i;
    if (ok) {
      g.identity = e;
      found_id = true;
      break;
    }
  }
  if (!found_id && n > 0) throw internal_check_failure("element list has no identity");
  g.inverse.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < n; ++j)
      if (g.table[i][j] == g.identity && g.table[j][i] == g.identity) {
        g.inverse[i] = j;
        found = true;
        break;
      }
    if (!found) throw internal_check_failure("element " + std::to_string(i) + " has no inverse");
  }
  return g;
}

} // namespace coring
