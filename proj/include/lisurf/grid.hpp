#pragma once

// Rectangular Z^2 domains, nets over them, cross-ratio factorizing edge
// labellings and generators of discrete holomorphic functions.
//
// Face (n, m) has vertices i = (n, m), j = (n+1, m), k = (n+1, m+1),
// l = (n, m+1). Horizontal edges (n, m)-(n+1, m) carry label a[n]; vertical
// edges (n, m)-(n, m+1) carry label b[m].

#include <algorithm>
#include <functional>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "lisurf/error.hpp"
#include "lisurf/minkowski.hpp"
#include "lisurf/report.hpp"

namespace lisurf {

struct VertexId {
    int n = 0;
    int m = 0;
    friend bool operator==(const VertexId&, const VertexId&) = default;
};

struct Face {
    VertexId i, j, k, l;
};

class GridDomain {
public:
    GridDomain() = default;
    /// Vertices [0..N] x [0..M]; requires N, M >= 1.
    GridDomain(int N, int M);

    int N() const { return N_; }
    int M() const { return M_; }
    std::size_t vertex_count() const { return static_cast<std::size_t>((N_ + 1) * (M_ + 1)); }
    std::size_t face_count() const { return static_cast<std::size_t>(N_ * M_); }

    bool contains(VertexId v) const { return v.n >= 0 && v.n <= N_ && v.m >= 0 && v.m <= M_; }
    bool has_face(int n, int m) const { return n >= 0 && n < N_ && m >= 0 && m < M_; }
    /// Row-major index: n outer, m inner.
    std::size_t index(VertexId v) const {
        return static_cast<std::size_t>(v.n * (M_ + 1) + v.m);
    }
    Face face(int n, int m) const;

    friend bool operator==(const GridDomain&, const GridDomain&) = default;

private:
    int N_ = 1;
    int M_ = 1;
};

template <class T>
class Net {
public:
    Net() = default;
    explicit Net(GridDomain dom, const T& fill = T{})
        : dom_(dom), vals_(dom.vertex_count(), fill) {}
    Net(GridDomain dom, std::vector<T> vals) : dom_(dom), vals_(std::move(vals)) {
        if (vals_.size() != dom_.vertex_count()) throw InputError("Net: value count does not match domain");
    }

    const GridDomain& domain() const { return dom_; }
    const T& operator()(int n, int m) const { return vals_[dom_.index({n, m})]; }
    T& operator()(int n, int m) { return vals_[dom_.index({n, m})]; }
    const T& at(VertexId v) const { return vals_[dom_.index(v)]; }
    T& at(VertexId v) { return vals_[dom_.index(v)]; }
    const std::vector<T>& values() const { return vals_; }
    std::vector<T>& values() { return vals_; }

    template <class F>
    auto map(F&& f) const -> Net<std::invoke_result_t<F, const T&>> {
        using U = std::invoke_result_t<F, const T&>;
        std::vector<U> out;
        out.reserve(vals_.size());
        for (const auto& v : vals_) out.push_back(f(v));
        return Net<U>(dom_, std::move(out));
    }

private:
    GridDomain dom_;
    std::vector<T> vals_;
};

/// Real labels constant across opposite edges of every face.
class EdgeLabelling {
public:
    EdgeLabelling() = default;
    /// a: one label per column (size N), b: one per row (size M).
    /// Throws InputError if a label vanishes or a_n * b_m >= 0 for some pair.
    EdgeLabelling(std::vector<double> a, std::vector<double> b);

    /// Builds a labelling without the sign requirement a_n b_m < 0 (labels of
    /// Calapso-shifted surfaces need not satisfy it).
    static EdgeLabelling unchecked(std::vector<double> a, std::vector<double> b);

    const std::vector<double>& a() const { return a_; }
    const std::vector<double>& b() const { return b_; }
    double horizontal(int n) const { return a_.at(static_cast<std::size_t>(n)); }
    double vertical(int m) const { return b_.at(static_cast<std::size_t>(m)); }
    /// Label of the edge between two adjacent vertices (either orientation).
    double edge(VertexId u, VertexId v) const;
    /// b_m / a_n, the face cross ratio the labelling prescribes.
    double face_ratio(int n, int m) const { return vertical(m) / horizontal(n); }

    bool matches(const GridDomain& dom) const {
        return static_cast<int>(a_.size()) == dom.N() && static_cast<int>(b_.size()) == dom.M();
    }
    /// Labels l - t (labelling of the Calapso transform with parameter t).
    EdgeLabelling shifted(double t) const;
    EdgeLabelling scaled(double s) const;

private:
    std::vector<double> a_;
    std::vector<double> b_;
};

/// (zi - zj)(zk - zl) / ((zj - zk)(zl - zi)). Throws DegenerateError on a zero denominator.
Complex cross_ratio(Complex zi, Complex zj, Complex zk, Complex zl);

struct HoloData {
    Net<Complex> phi;
    EdgeLabelling labels;
};

/// Per-face residual |cr - b_m / a_n|, pass iff <= tol.
CheckReport is_discrete_holomorphic(const Net<Complex>& phi, const EdgeLabelling& labels, double tol);

/// phi(n, m) = eps (n + i m) + offset, labels a = 1, b = -1.
HoloData gen_identity(int N, int M, double eps = 1.0, Complex offset = {});
/// phi(n, m) = A^n B^m + offset with A real > 0, A != 1, and |B| = 1, B != 1.
HoloData gen_exponential(int N, int M, Complex A, Complex B, Complex offset = {});
/// Discrete z^gamma (0 < gamma < 2): axis recurrences then cross ratio -1 on every face.
HoloData gen_power(int N, int M, double gamma, Complex offset = {});

/// Pointwise (a phi + b) / (c phi + d); throws DegenerateError at a pole.
Net<Complex> mobius_apply(const SL2& B, const Net<Complex>& phi);
Complex mobius(const Mat2& B, Complex z);

}  // namespace lisurf

namespace lisurf {

enum class PathOrder { rows_first, columns_first };

/// Visits every vertex along a spanning tree rooted at `root`.
/// rows_first: walk the row m = root.m, then every column from that row.
/// columns_first: walk the column n = root.n, then every row from it.
/// step(from, to, value_at_from) returns the value at `to`.
template <class T, class Step>
Net<T> propagate(const GridDomain& dom, VertexId root, const T& seed, Step&& step,
                 PathOrder order = PathOrder::rows_first) {
    if (!dom.contains(root)) throw InputError("propagate: seed vertex outside domain");
    Net<T> out(dom, seed);
    auto walk = [&](VertexId start, int dn, int dm) {
        VertexId u = start;
        for (;;) {
            VertexId v{u.n + dn, u.m + dm};
            if (!dom.contains(v)) break;
            out.at(v) = step(u, v, out.at(u));
            u = v;
        }
    };
    out.at(root) = seed;
    if (order == PathOrder::rows_first) {
        walk(root, 1, 0);
        walk(root, -1, 0);
        for (int n = 0; n <= dom.N(); ++n) {
            walk({n, root.m}, 0, 1);
            walk({n, root.m}, 0, -1);
        }
    } else {
        walk(root, 0, 1);
        walk(root, 0, -1);
        for (int m = 0; m <= dom.M(); ++m) {
            walk({root.n, m}, 1, 0);
            walk({root.n, m}, -1, 0);
        }
    }
    return out;
}

/// One value per oriented edge, stored for the positive orientation
/// ((n,m)->(n+1,m) and (n,m)->(n,m+1)); reversed orientation negates.
template <class T>
class EdgeField {
public:
    EdgeField() = default;
    explicit EdgeField(GridDomain dom)
        : dom_(dom),
          h_(static_cast<std::size_t>(dom.N() * (dom.M() + 1))),
          v_(static_cast<std::size_t>((dom.N() + 1) * dom.M())) {}

    const GridDomain& domain() const { return dom_; }
    T& h(int n, int m) { return h_[static_cast<std::size_t>(n * (dom_.M() + 1) + m)]; }
    const T& h(int n, int m) const { return h_[static_cast<std::size_t>(n * (dom_.M() + 1) + m)]; }
    T& v(int n, int m) { return v_[static_cast<std::size_t>(n * dom_.M() + m)]; }
    const T& v(int n, int m) const { return v_[static_cast<std::size_t>(n * dom_.M() + m)]; }

    /// Value on the oriented edge from -> to.
    T value(VertexId from, VertexId to) const {
        if (to.m == from.m && to.n == from.n + 1) return h(from.n, from.m);
        if (to.m == from.m && to.n == from.n - 1) return -1.0 * h(to.n, to.m);
        if (to.n == from.n && to.m == from.m + 1) return v(from.n, from.m);
        if (to.n == from.n && to.m == from.m - 1) return -1.0 * v(to.n, to.m);
        throw InputError("EdgeField::value: vertices are not adjacent");
    }

    /// Sum over the face boundary i -> j -> k -> l -> i.
    T circulation(int n, int m) const {
        const Face f = dom_.face(n, m);
        return value(f.i, f.j) + value(f.j, f.k) + value(f.k, f.l) + value(f.l, f.i);
    }

    template <class F>
    void for_each_edge(F&& f) {
        for (int n = 0; n < dom_.N(); ++n)
            for (int m = 0; m <= dom_.M(); ++m) f(VertexId{n, m}, VertexId{n + 1, m}, h(n, m));
        for (int n = 0; n <= dom_.N(); ++n)
            for (int m = 0; m < dom_.M(); ++m) f(VertexId{n, m}, VertexId{n, m + 1}, v(n, m));
    }
    template <class F>
    void for_each_edge(F&& f) const {
        for (int n = 0; n < dom_.N(); ++n)
            for (int m = 0; m <= dom_.M(); ++m) f(VertexId{n, m}, VertexId{n + 1, m}, h(n, m));
        for (int n = 0; n <= dom_.N(); ++n)
            for (int m = 0; m < dom_.M(); ++m) f(VertexId{n, m}, VertexId{n, m + 1}, v(n, m));
    }

private:
    GridDomain dom_;
    std::vector<T> h_;
    std::vector<T> v_;
};

/// Calls f(from, to) for every edge in positive orientation.
template <class F>
void for_each_edge(const GridDomain& dom, F&& f) {
    for (int n = 0; n < dom.N(); ++n)
        for (int m = 0; m <= dom.M(); ++m) f(VertexId{n, m}, VertexId{n + 1, m});
    for (int n = 0; n <= dom.N(); ++n)
        for (int m = 0; m < dom.M(); ++m) f(VertexId{n, m}, VertexId{n, m + 1});
}

inline Site edge_site(VertexId from, VertexId to) {
    return {from.n == to.n ? Site::Kind::vedge : Site::Kind::hedge, std::min(from.n, to.n), std::min(from.m, to.m)};
}

}  // namespace lisurf
