#pragma once

#include <vector>

#include "quadideal/numbers.hpp"

namespace quadideal {

// Plain integer row vectors (u, v); u is the rational coordinate, v the
// theta coordinate.
struct Vec2 {
    Int u, v;
};

// Hermite basis (a, 0), (b, c) with a, c > 0 and 0 <= b < a.
struct HnfBasis {
    Int a, b, c;
    bool operator==(const HnfBasis& o) const { return a == o.a && b == o.b && c == o.c; }
};

// Unique HNF basis of the lattice spanned by the given vectors.
// Throws domain_error if the span has rank < 2.
HnfBasis hnf_reduce(const std::vector<Vec2>& vectors);

// As hnf_reduce, but also returns integer coefficient rows expressing
// (a, 0) and (b, c) as combinations of the input vectors.
struct HnfTransform {
    HnfBasis basis;
    std::vector<Int> row_a;  // sum row_a[i] * vectors[i] = (a, 0)
    std::vector<Int> row_bc; // sum row_bc[i] * vectors[i] = (b, c)
};
HnfTransform hnf_with_transform(const std::vector<Vec2>& vectors);

bool lattice_contains(const HnfBasis& l, const Vec2& x);

HnfBasis lattice_intersect(const HnfBasis& l1, const HnfBasis& l2);

// Basis of { z : M z = 0 } for an integer matrix M (rows x cols), found
// by unimodular column reduction.
std::vector<std::vector<Int>> integer_kernel(const std::vector<std::vector<Int>>& m);

} // namespace quadideal
