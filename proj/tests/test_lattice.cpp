#include "doctest.h"

#include <random>

#include "quadideal/lattice.hpp"

using namespace quadideal;

namespace {

// Independent oracle: the index of the span of a vector set is the gcd
// of all 2x2 minors (0 if rank < 2).
Int minor_gcd_index(const std::vector<Vec2>& vs) {
    Int g = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            g = gcd(g, vs[i].u * vs[j].v - vs[i].v * vs[j].u);
        }
    }
    return abs(g);
}

// Independent membership test: solve x*g1 + y*g2 = w over Q by Cramer
// and check integrality.
bool in_span(const Vec2& g1, const Vec2& g2, const Vec2& w) {
    Int det = g1.u * g2.v - g1.v * g2.u;
    REQUIRE(det != 0);
    Int xn = w.u * g2.v - w.v * g2.u;
    Int yn = g1.u * w.v - g1.v * w.u;
    return divides(det, xn) && divides(det, yn);
}

std::vector<Vec2> random_vectors(std::mt19937_64& rng, int count) {
    std::vector<Vec2> vs;
    for (int i = 0; i < count; ++i) {
        vs.push_back({Int(rng() % 41) - 20, Int(rng() % 41) - 20});
    }
    return vs;
}

} // namespace

TEST_CASE("hnf_reduce on pinned examples") {
    // verified against the minor-gcd oracle: index 3, generators reduce
    std::vector<Vec2> vs = {{3, 0}, {0, 3}, {1, 2}, {-10, 1}};
    CHECK(minor_gcd_index(vs) == 3);
    HnfBasis h = hnf_reduce(vs);
    CHECK(h == HnfBasis{3, 2, 1});

    CHECK(hnf_reduce({{1, 0}, {0, 1}}) == HnfBasis{1, 0, 1});
    CHECK(hnf_reduce({{2, 0}, {0, 2}}) == HnfBasis{2, 0, 2});

    CHECK_THROWS_AS(hnf_reduce({{2, 0}, {4, 0}}), domain_error);
    CHECK_THROWS_AS(hnf_reduce({{1, 1}, {2, 2}, {-3, -3}}), domain_error);
}

TEST_CASE("hnf_reduce equals the span on random inputs") {
    std::mt19937_64 rng(19);
    int done = 0;
    while (done < 400) {
        auto vs = random_vectors(rng, 2 + static_cast<int>(rng() % 4));
        if (minor_gcd_index(vs) == 0) continue;
        ++done;
        HnfBasis h = hnf_reduce(vs);
        CHECK(h.a > 0);
        CHECK(h.c > 0);
        CHECK(h.b >= 0);
        CHECK(h.b < h.a);
        // same index and mutual containment => equal lattices
        CHECK(h.a * h.c == minor_gcd_index(vs));
        for (const auto& v : vs) {
            CHECK(in_span({h.a, 0}, {h.b, h.c}, v));
            CHECK(lattice_contains(h, v));
        }
    }
}

TEST_CASE("hnf transform rows reproduce the basis") {
    std::mt19937_64 rng(23);
    int done = 0;
    while (done < 300) {
        auto vs = random_vectors(rng, 2 + static_cast<int>(rng() % 4));
        if (minor_gcd_index(vs) == 0) continue;
        ++done;
        HnfTransform t = hnf_with_transform(vs);
        Vec2 acc_a{0, 0}, acc_bc{0, 0};
        for (std::size_t i = 0; i < vs.size(); ++i) {
            acc_a.u += t.row_a[i] * vs[i].u;
            acc_a.v += t.row_a[i] * vs[i].v;
            acc_bc.u += t.row_bc[i] * vs[i].u;
            acc_bc.v += t.row_bc[i] * vs[i].v;
        }
        CHECK(acc_a.u == t.basis.a);
        CHECK(acc_a.v == 0);
        CHECK(acc_bc.u == t.basis.b);
        CHECK(acc_bc.v == t.basis.c);
    }
}

TEST_CASE("integer kernel solves M z = 0") {
    std::mt19937_64 rng(29);
    for (int k = 0; k < 300; ++k) {
        std::size_t rows = 1 + rng() % 2, cols = 3 + rng() % 2;
        std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols));
        for (auto& row : m) {
            for (auto& x : row) x = Int(rng() % 21) - 10;
        }
        auto kernel = integer_kernel(m);
        for (const auto& z : kernel) {
            for (std::size_t i = 0; i < rows; ++i) {
                Int s = 0;
                for (std::size_t j = 0; j < cols; ++j) s += m[i][j] * z[j];
                CHECK(s == 0);
            }
        }
    }
}

TEST_CASE("lattice intersection is the set intersection") {
    std::mt19937_64 rng(31);
    int done = 0;
    while (done < 200) {
        auto vs1 = random_vectors(rng, 2);
        auto vs2 = random_vectors(rng, 2);
        if (minor_gcd_index(vs1) == 0 || minor_gcd_index(vs2) == 0) continue;
        ++done;
        HnfBasis l1 = hnf_reduce(vs1), l2 = hnf_reduce(vs2);
        HnfBasis m = lattice_intersect(l1, l2);
        // members of the intersection lie in both lattices
        CHECK(lattice_contains(l1, {m.a, 0}));
        CHECK(lattice_contains(l2, {m.a, 0}));
        CHECK(lattice_contains(l1, {m.b, m.c}));
        CHECK(lattice_contains(l2, {m.b, m.c}));
        // and every small common vector lies in the intersection
        for (Int u = -8; u <= 8; ++u) {
            for (Int v = -8; v <= 8; ++v) {
                if (lattice_contains(l1, {u, v}) && lattice_contains(l2, {u, v})) {
                    CHECK(lattice_contains(m, {u, v}));
                }
            }
        }
    }
}
