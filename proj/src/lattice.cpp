#include "quadideal/lattice.hpp"

namespace quadideal {

namespace {

struct Row {
    Vec2 vec;
    std::vector<Int> coeff;
};

Row scale(const Row& r, const Int& k) {
    Row out;
    out.vec = {r.vec.u * k, r.vec.v * k};
    out.coeff.reserve(r.coeff.size());
    for (const auto& c : r.coeff) out.coeff.push_back(c * k);
    return out;
}

Row add(const Row& a, const Row& b) {
    Row out;
    out.vec = {a.vec.u + b.vec.u, a.vec.v + b.vec.v};
    out.coeff.resize(a.coeff.size());
    for (std::size_t i = 0; i < a.coeff.size(); ++i) out.coeff[i] = a.coeff[i] + b.coeff[i];
    return out;
}

} // namespace

HnfTransform hnf_with_transform(const std::vector<Vec2>& vectors) {
    const std::size_t m = vectors.size();
    std::vector<Row> rows(m);
    for (std::size_t i = 0; i < m; ++i) {
        rows[i].vec = vectors[i];
        rows[i].coeff.assign(m, Int(0));
        rows[i].coeff[i] = 1;
    }

    // Pivot row accumulates gcd of the v-components; residuals with v = 0
    // feed the a-row gcd.
    Row pivot;
    pivot.vec = {0, 0};
    pivot.coeff.assign(m, Int(0));
    Row arow = pivot;

    auto fold_a = [&](const Row& r) {
        if (r.vec.u == 0) return;
        if (arow.vec.u == 0) {
            arow = r;
            return;
        }
        Egcd e = egcd(arow.vec.u, r.vec.u);
        arow = add(scale(arow, e.u), scale(r, e.v));
    };

    for (const Row& w : rows) {
        if (w.vec.v == 0) {
            fold_a(w);
            continue;
        }
        if (pivot.vec.v == 0) {
            pivot = w;
            continue;
        }
        Egcd e = egcd(pivot.vec.v, w.vec.v);
        Row np = add(scale(pivot, e.u), scale(w, e.v));
        // residual = (pivot.v/g) * w - (w.v/g) * pivot, second coordinate 0
        Row res = add(scale(w, divexact(pivot.vec.v, e.g)),
                      scale(pivot, -divexact(w.vec.v, e.g)));
        fold_a(res);
        pivot = np;
    }

    if (pivot.vec.v == 0 || arow.vec.u == 0) {
        throw domain_error("hnf_reduce: vectors span a lattice of rank < 2");
    }
    if (pivot.vec.v < 0) pivot = scale(pivot, Int(-1));
    if (arow.vec.u < 0) arow = scale(arow, Int(-1));

    // Reduce b into [0, a).
    Int q = floordiv(pivot.vec.u, arow.vec.u);
    if (q != 0) pivot = add(pivot, scale(arow, -q));

    HnfTransform out;
    out.basis = {arow.vec.u, pivot.vec.u, pivot.vec.v};
    out.row_a = std::move(arow.coeff);
    out.row_bc = std::move(pivot.coeff);
    return out;
}

HnfBasis hnf_reduce(const std::vector<Vec2>& vectors) {
    return hnf_with_transform(vectors).basis;
}

bool lattice_contains(const HnfBasis& l, const Vec2& x) {
    if (!divides(l.c, x.v)) return false;
    Int t = divexact(x.v, l.c);
    return divides(l.a, x.u - t * l.b);
}

std::vector<std::vector<Int>> integer_kernel(const std::vector<std::vector<Int>>& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<std::vector<Int>> a = m;
    std::vector<std::vector<Int>> u(cols, std::vector<Int>(cols, Int(0)));
    for (std::size_t j = 0; j < cols; ++j) u[j][j] = 1;

    auto colop = [&](std::size_t j, std::size_t k, const Int& s, const Int& t,
                     const Int& s2, const Int& t2) {
        // (col_j, col_k) <- (s*col_j + t*col_k, s2*col_j + t2*col_k)
        for (std::size_t i = 0; i < rows; ++i) {
            Int nj = s * a[i][j] + t * a[i][k];
            Int nk = s2 * a[i][j] + t2 * a[i][k];
            a[i][j] = nj;
            a[i][k] = nk;
        }
        for (std::size_t i = 0; i < cols; ++i) {
            Int nj = s * u[i][j] + t * u[i][k];
            Int nk = s2 * u[i][j] + t2 * u[i][k];
            u[i][j] = nj;
            u[i][k] = nk;
        }
    };

    std::size_t pivot = 0;
    for (std::size_t r = 0; r < rows && pivot < cols; ++r) {
        for (std::size_t k = pivot + 1; k < cols; ++k) {
            if (a[r][k] == 0) continue;
            if (a[r][pivot] == 0) {
                colop(pivot, k, Int(0), Int(1), Int(-1), Int(0));
                continue;
            }
            Egcd e = egcd(a[r][pivot], a[r][k]);
            colop(pivot, k, e.u, e.v, -divexact(a[r][k], e.g), divexact(a[r][pivot], e.g));
        }
        if (a[r][pivot] != 0) ++pivot;
    }

    std::vector<std::vector<Int>> kernel;
    for (std::size_t j = 0; j < cols; ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < rows; ++i) {
            if (a[i][j] != 0) {
                zero = false;
                break;
            }
        }
        if (!zero) continue;
        std::vector<Int> col(cols);
        for (std::size_t i = 0; i < cols; ++i) col[i] = u[i][j];
        kernel.push_back(std::move(col));
    }
    return kernel;
}

HnfBasis lattice_intersect(const HnfBasis& l1, const HnfBasis& l2) {
    // x in both lattices: m1*(a1,0) + m2*(b1,c1) = n1*(a2,0) + n2*(b2,c2).
    std::vector<std::vector<Int>> m = {
        {l1.a, l1.b, -l2.a, -l2.b},
        {Int(0), l1.c, Int(0), -l2.c},
    };
    auto kernel = integer_kernel(m);
    std::vector<Vec2> gens;
    gens.reserve(kernel.size());
    for (const auto& z : kernel) {
        gens.push_back({z[0] * l1.a + z[1] * l1.b, z[1] * l1.c});
    }
    return hnf_reduce(gens);
}

} // namespace quadideal
