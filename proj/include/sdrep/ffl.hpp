#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sdrep/lie.hpp"

namespace sdrep {

struct DyckPath {
  std::vector<PositiveRoot> roots;

  int start() const { return roots.front().p; }
  int end() const { return roots.back().q; }
  bool operator==(const DyckPath&) const = default;
};

struct MultiExponent {
  std::map<PositiveRoot, int> exps;

  int at(const PositiveRoot& a) const;
  int total() const;
  bool operator==(const MultiExponent&) const = default;
};

std::vector<DyckPath> enumerate_dyck_paths(int n);

// alpha_{p,q} > alpha_{r,s}  iff  p < r, or p = r and q < s.
bool pbw_greater(const PositiveRoot& a, const PositiveRoot& b);
// Positive roots of sl(n+1), largest first.
std::vector<PositiveRoot> pbw_order(int n);

// Sorted lexicographically along pbw_order.
std::vector<MultiExponent> s_lambda(const Weight& lambda);

std::uint64_t weyl_dim(const Weight& lambda, int m);
// Shorthand with m = rank + 1.
std::uint64_t weyl_dim(const Weight& lambda);

}  // namespace sdrep
