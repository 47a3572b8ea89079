// Catalog of built-in algebra presentations: linear A_m chains and their
// tensor powers, Dynkin trees, the Kronecker quiver, canonical algebras of
// weighted projective lines (both the standard and the "bar" presentation),
// the three cyclic/relation examples, the one-parameter family with relation
// yx - t z, nilpotent chains with d^2 = 0, and semisimple products of k.
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "qdim/algebra.hpp"

namespace qdim {

namespace catalog {

template <class F>
Presentation<F> linear_a_pres(int m) {
    if (m < 1) throw std::invalid_argument("linear_a: need at least one vertex");
    Presentation<F> p;
    for (int i = 0; i < m; ++i) p.quiver.vlabel.push_back(std::to_string(i));
    for (int i = 0; i + 1 < m; ++i)
        p.quiver.arrows.push_back({"a" + std::to_string(i), i, i + 1});
    std::vector<int> ord(m);
    for (int i = 0; i < m; ++i) ord[i] = i;
    p.quiver.order = ord;
    return p;
}

// path algebra of the linearly oriented A_m quiver (m vertices)
template <class F>
Algebra<F> linear_a(const F& f, int m) {
    return Algebra<F>::build(f, linear_a_pres<F>(m));
}

// Dynkin tree with a chain orientation: vertices 0..n-1 along the long chain,
// the branch vertex hangs off the chain. Arrows point away from vertex 0.
template <class F>
Presentation<F> dynkin_pres(DynkinType t, int n) {
    Presentation<F> p;
    int chain = 0, branch_at = -1;
    switch (t) {
        case DynkinType::A: return linear_a_pres<F>(n);
        case DynkinType::D:
            if (n < 4) throw std::invalid_argument("dynkin: D_n needs n >= 4");
            chain = n - 1;
            branch_at = n - 3;  // fork at the second-to-last chain vertex
            break;
        case DynkinType::E6: chain = 5; branch_at = 2; n = 6; break;
        case DynkinType::E7: chain = 6; branch_at = 2; n = 7; break;
        case DynkinType::E8: chain = 7; branch_at = 2; n = 8; break;
        default: throw std::invalid_argument("dynkin: not a Dynkin type");
    }
    for (int i = 0; i < chain; ++i) p.quiver.vlabel.push_back(std::to_string(i));
    p.quiver.vlabel.push_back("b");
    for (int i = 0; i + 1 < chain; ++i)
        p.quiver.arrows.push_back({"a" + std::to_string(i), i, i + 1});
    p.quiver.arrows.push_back({"ab", branch_at, chain});
    std::vector<int> ord(n);
    for (int i = 0; i < n; ++i) ord[i] = i;
    p.quiver.order = ord;
    return p;
}

template <class F>
Algebra<F> dynkin(const F& f, DynkinType t, int n) {
    return Algebra<F>::build(f, dynkin_pres<F>(t, n));
}

template <class F>
Presentation<F> b_power_pres(const F& f, int m, int n) {
    if (n < 1) throw std::invalid_argument("b_power: n >= 1");
    Presentation<F> p = linear_a_pres<F>(m);
    for (int k = 1; k < n; ++k) p = tensor_presentation(f, p, linear_a_pres<F>(m));
    return p;
}

// B_m^n = (k A_m)^{tensor n}, the commutative n-cube with edge m-1
template <class F>
Algebra<F> b_power(const F& f, int m, int n) {
    return Algebra<F>::build(f, b_power_pres<F>(f, m, n));
}

template <class F>
Algebra<F> kronecker(const F& f) {
    Presentation<F> p;
    p.quiver.vlabel = {"0", "1"};
    p.quiver.arrows = {{"u", 0, 1}, {"v", 0, 1}};
    p.quiver.order = std::vector<int>{0, 1};
    return Algebra<F>::build(f, p);
}

// n isolated vertices: the semisimple algebra k^n
template <class F>
Algebra<F> semisimple(const F& f, int n) {
    Presentation<F> p;
    for (int i = 0; i < n; ++i) p.quiver.vlabel.push_back(std::to_string(i));
    std::vector<int> ord(n);
    for (int i = 0; i < n; ++i) ord[i] = i;
    p.quiver.order = ord;
    return Algebra<F>::build(f, p);
}

// Point on P^1 given by a slope: the linear form y(lambda) = v - lambda*u,
// and y(inf) = u. Distinct slopes give pairwise non-proportional forms.
struct P1Point {
    bool infinite = false;
    Rat lambda = 0;
    static P1Point inf() { return {true, 0}; }
    static P1Point at(const Rat& l) { return {false, l}; }
    // coordinates (cu, cv) of the form in the basis (u, v)
    std::pair<Rat, Rat> form() const {
        if (infinite) return {1, 0};
        return {-lambda, 1};
    }
    bool operator==(const P1Point& o) const {
        return infinite == o.infinite && (infinite || lambda == o.lambda);
    }
};

inline std::vector<P1Point> default_points(size_t n) {
    std::vector<P1Point> pts = {P1Point::at(0), P1Point::at(1), P1Point::inf()};
    for (Rat l = 2; pts.size() < n; ++l) pts.push_back(P1Point::at(l));
    pts.resize(n);
    return pts;
}

// Canonical algebra of the weighted projective line with the given weights
// and points: star quiver from a source to a sink through one arm per
// weight, with the arm compositions identified inside Hom(source, sink) = V*.
// The first two arms span V*; each further arm relation expresses its
// composite in that basis.
template <class F>
Algebra<F> canonical(const F& f, const std::vector<int>& weights, std::vector<P1Point> points = {}) {
    size_t n = weights.size();
    if (n < 2) throw std::invalid_argument("canonical: need at least two weights");
    for (int w : weights)
        if (w < 2) throw std::invalid_argument("canonical: weights must be >= 2");
    if (points.empty()) points = default_points(n);
    if (points.size() != n) throw std::invalid_argument("canonical: need one point per weight");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (points[i] == points[j]) throw std::invalid_argument("canonical: points must be distinct");

    Presentation<F> p;
    Quiver& q = p.quiver;
    q.vlabel.push_back("s");
    std::vector<std::vector<int>> arm(n);
    for (size_t i = 0; i < n; ++i)
        for (int j = 1; j < weights[i]; ++j) {
            arm[i].push_back(q.num_vertices());
            q.vlabel.push_back("a" + std::to_string(i + 1) + "." + std::to_string(j));
        }
    int sink = q.num_vertices();
    q.vlabel.push_back("t");

    std::vector<std::vector<int>> x(n);  // arrow ids along arm i, in application order
    for (size_t i = 0; i < n; ++i) {
        int prev = 0;
        for (int j = 0; j < weights[i]; ++j) {
            int next = (j + 1 < weights[i]) ? arm[i][j] : sink;
            x[i].push_back(q.num_arrows());
            q.arrows.push_back({"x" + std::to_string(i + 1) + "." + std::to_string(j + 1), prev, next});
            prev = next;
        }
    }

    // arm relations: X_i^{w_i} = c1 * X_1^{w_1} + c2 * X_2^{w_2} for i >= 3,
    // where the coefficients express the i-th point's form over the first two
    auto [u1, v1] = points[0].form();
    auto [u2, v2] = points[1].form();
    for (size_t i = 2; i < n; ++i) {
        auto [ui, vi] = points[i].form();
        // solve (c1, c2) from c1*(u1,v1) + c2*(u2,v2) = (ui,vi)
        Rat det = u1 * v2 - u2 * v1;
        if (det == 0) throw std::invalid_argument("canonical: degenerate point pair");
        Rat c1 = (ui * v2 - u2 * vi) / det;
        Rat c2 = (u1 * vi - ui * v1) / det;
        Relation<F> r;
        r.terms.push_back({f.one(), x[i]});
        if (c1 != 0) r.terms.push_back({f.neg(f.from_rat(c1)), x[0]});
        if (c2 != 0) r.terms.push_back({f.neg(f.from_rat(c2)), x[1]});
        p.relations.push_back(std::move(r));
    }

    std::vector<int> ord(q.num_vertices());
    ord[0] = 0;
    // arm vertices in between, sink last
    int pos = 1;
    for (size_t i = 0; i < n; ++i)
        for (int v : arm[i]) ord[v] = pos++;
    ord[sink] = pos;
    q.order = ord;
    return Algebra<F>::build(f, p);
}

// The mutated presentation of the same derived category: source 0, double
// arrow to vertex 1 spanning V*, then one arm of length w_i - 1 per weight,
// with relations a_i y_i = 0 where y_i in V* vanishes at the i-th point.
template <class F>
Algebra<F> bar_canonical(const F& f, const std::vector<int>& weights, std::vector<P1Point> points = {}) {
    size_t n = weights.size();
    if (n < 1) throw std::invalid_argument("bar_canonical: need at least one weight");
    for (int w : weights)
        if (w < 2) throw std::invalid_argument("bar_canonical: weights must be >= 2");
    if (points.empty()) points = default_points(n);
    if (points.size() != n) throw std::invalid_argument("bar_canonical: need one point per weight");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (points[i] == points[j]) throw std::invalid_argument("bar_canonical: points must be distinct");

    Presentation<F> p;
    Quiver& q = p.quiver;
    q.vlabel = {"0", "1"};
    q.arrows.push_back({"u", 0, 1});
    q.arrows.push_back({"v", 0, 1});
    std::vector<std::vector<int>> arm(n);  // vertex ids (i,1..w_i-1)
    std::vector<int> head(n);              // arrow 1 -> (i,1)
    for (size_t i = 0; i < n; ++i) {
        int prev = 1;
        for (int j = 1; j < weights[i]; ++j) {
            int vtx = q.num_vertices();
            q.vlabel.push_back(std::to_string(i + 1) + "." + std::to_string(j));
            int a = q.num_arrows();
            q.arrows.push_back({"a" + std::to_string(i + 1) + "." + std::to_string(j), prev, vtx});
            if (j == 1) head[i] = a;
            arm[i].push_back(vtx);
            prev = vtx;
        }
    }
    // y_i = cu*u + cv*v vanishing at the point; relation: first y_i, then a_i
    for (size_t i = 0; i < n; ++i) {
        auto [cu, cv] = points[i].form();
        Relation<F> r;
        if (cu != 0) r.terms.push_back({f.from_rat(cu), {0, head[i]}});
        if (cv != 0) r.terms.push_back({f.from_rat(cv), {1, head[i]}});
        p.relations.push_back(std::move(r));
    }
    std::vector<int> ord(q.num_vertices());
    for (int v = 0; v < q.num_vertices(); ++v) ord[v] = v;
    q.order = ord;
    return Algebra<F>::build(f, p);
}

// x: 0 -> 1, y: 1 -> 2, z: 0 -> 2 with relation yx = 0
template <class F>
Algebra<F> example_8_1(const F& f) {
    Presentation<F> p;
    p.quiver.vlabel = {"0", "1", "2"};
    p.quiver.arrows = {{"x", 0, 1}, {"y", 1, 2}, {"z", 0, 2}};
    p.quiver.order = std::vector<int>{0, 1, 2};
    Relation<F> r;
    r.terms.push_back({f.one(), {0, 1}});  // x then y
    p.relations.push_back(std::move(r));
    return Algebra<F>::build(f, p);
}

// x: 0 -> 1, y: 1 -> 2, z: 2 -> 0 with relations zy = xz = 0
template <class F>
Algebra<F> example_8_2(const F& f) {
    Presentation<F> p;
    p.quiver.vlabel = {"0", "1", "2"};
    p.quiver.arrows = {{"x", 0, 1}, {"y", 1, 2}, {"z", 2, 0}};
    Relation<F> r1;
    r1.terms.push_back({f.one(), {1, 2}});  // y then z
    Relation<F> r2;
    r2.terms.push_back({f.one(), {2, 0}});  // z then x
    p.relations.push_back(std::move(r1));
    p.relations.push_back(std::move(r2));
    p.cap = 4;
    return Algebra<F>::build(f, p);
}

// x: 0 -> 1, y: 1 -> 0 with relation xy = 0 (Auslander algebra of k[t]/t^2)
template <class F>
Algebra<F> example_8_3(const F& f) {
    Presentation<F> p;
    p.quiver.vlabel = {"0", "1"};
    p.quiver.arrows = {{"x", 0, 1}, {"y", 1, 0}};
    Relation<F> r;
    r.terms.push_back({f.one(), {1, 0}});  // y then x
    p.relations.push_back(std::move(r));
    p.cap = 4;
    return Algebra<F>::build(f, p);
}

// x: 0 -> 1, y: 1 -> 2, z: 0 -> 2 with relation yx - t z = 0
template <class F>
Algebra<F> intro_family(const F& f, const Rat& t) {
    Presentation<F> p;
    p.quiver.vlabel = {"0", "1", "2"};
    p.quiver.arrows = {{"x", 0, 1}, {"y", 1, 2}, {"z", 0, 2}};
    p.quiver.order = std::vector<int>{0, 1, 2};
    Relation<F> r;
    r.terms.push_back({f.one(), {0, 1}});
    if (t != 0) r.terms.push_back({f.neg(f.from_rat(t)), {2}});
    p.relations.push_back(std::move(r));
    return Algebra<F>::build(f, p);
}

// linear chain of n vertices with relations d^2 = 0
template <class F>
Algebra<F> radsq_chain(const F& f, int n) {
    Presentation<F> p = linear_a_pres<F>(n);
    for (int i = 0; i + 2 < n; ++i) {
        Relation<F> r;
        r.terms.push_back({f.one(), {i, i + 1}});
        p.relations.push_back(std::move(r));
    }
    return Algebra<F>::build(f, p);
}

// Parse "name" or "name:p1,p2,..." as used by the command line, e.g.
// b_power:2,3   dynkin:D4   canonical:2,2,2   intro_family:1   linear_a:3
template <class F>
Algebra<F> by_name(const F& f, const std::string& spec) {
    std::string name = spec, args;
    if (auto c = spec.find(':'); c != std::string::npos) {
        name = spec.substr(0, c);
        args = spec.substr(c + 1);
    }
    std::vector<std::string> parts;
    {
        std::stringstream ss(args);
        std::string tok;
        while (std::getline(ss, tok, ',')) parts.push_back(tok);
    }
    auto want = [&](size_t k) {
        if (parts.size() != k)
            throw std::invalid_argument("catalog '" + name + "': expected " + std::to_string(k) +
                                        " parameter(s)");
    };
    auto as_int = [](const std::string& s) { return std::stoi(s); };

    if (name == "linear_a") {
        want(1);
        return linear_a(f, as_int(parts[0]));
    }
    if (name == "dynkin") {
        want(1);
        const std::string& t = parts[0];
        if (t.size() < 2) throw std::invalid_argument("dynkin: bad type " + t);
        int n = as_int(t.substr(1));
        switch (t[0]) {
            case 'A': return dynkin(f, DynkinType::A, n);
            case 'D': return dynkin(f, DynkinType::D, n);
            case 'E':
                if (n == 6) return dynkin(f, DynkinType::E6, 6);
                if (n == 7) return dynkin(f, DynkinType::E7, 7);
                if (n == 8) return dynkin(f, DynkinType::E8, 8);
                throw std::invalid_argument("dynkin: E type must be E6/E7/E8");
            default: throw std::invalid_argument("dynkin: bad type " + t);
        }
    }
    if (name == "b_power") {
        want(2);
        return b_power(f, as_int(parts[0]), as_int(parts[1]));
    }
    if (name == "kronecker") {
        want(0);
        return kronecker(f);
    }
    if (name == "semisimple") {
        want(1);
        return semisimple(f, as_int(parts[0]));
    }
    if (name == "canonical" || name == "bar_canonical") {
        std::vector<int> w;
        for (const auto& s : parts) w.push_back(as_int(s));
        return name == "canonical" ? canonical(f, w) : bar_canonical(f, w);
    }
    if (name == "example_8_1") return example_8_1(f);
    if (name == "example_8_2") return example_8_2(f);
    if (name == "example_8_3") return example_8_3(f);
    if (name == "intro_family") {
        want(1);
        Rat t(parts[0]);
        t.canonicalize();
        return intro_family(f, t);
    }
    if (name == "radsq_chain") {
        want(1);
        return radsq_chain(f, as_int(parts[0]));
    }
    throw std::invalid_argument("unknown catalog algebra: " + name);
}

}  // namespace catalog

}  // namespace qdim
