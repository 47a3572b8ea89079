// Quivers: finite oriented multigraphs with optional vertex order, path
// enumeration, BGP reflections, and Dynkin classification of the underlying
// graph.
//
// Composition convention used throughout: a path stores its arrows in
// application order (first arrow first). The algebra product p*q is "apply q,
// then p", so the stored arrow list of p*q is q's arrows followed by p's.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdim {

struct Arrow {
    std::string label;
    int src = 0, dst = 0;
};

struct Quiver {
    std::vector<std::string> vlabel;
    std::vector<Arrow> arrows;
    // optional linear order: order[v] = position; every arrow must go strictly
    // upward in this order
    std::optional<std::vector<int>> order;

    int num_vertices() const { return static_cast<int>(vlabel.size()); }
    int num_arrows() const { return static_cast<int>(arrows.size()); }

    int vertex_by_label(const std::string& s) const {
        for (int v = 0; v < num_vertices(); ++v)
            if (vlabel[v] == s) return v;
        throw std::invalid_argument("unknown vertex label: " + s);
    }
    int arrow_by_label(const std::string& s) const {
        for (int a = 0; a < num_arrows(); ++a)
            if (arrows[a].label == s) return a;
        throw std::invalid_argument("unknown arrow label: " + s);
    }

    void validate() const {
        std::set<std::string> vs(vlabel.begin(), vlabel.end());
        if (static_cast<int>(vs.size()) != num_vertices())
            throw std::invalid_argument("duplicate vertex labels");
        std::set<std::string> as;
        for (const auto& a : arrows) {
            if (a.src < 0 || a.src >= num_vertices() || a.dst < 0 || a.dst >= num_vertices())
                throw std::invalid_argument("arrow endpoint out of range");
            if (!as.insert(a.label).second)
                throw std::invalid_argument("duplicate arrow label: " + a.label);
        }
        if (order) {
            if (static_cast<int>(order->size()) != num_vertices())
                throw std::invalid_argument("vertex order has wrong length");
            for (const auto& a : arrows)
                if ((*order)[a.src] >= (*order)[a.dst])
                    throw std::invalid_argument("vertex order not increasing along arrow " + a.label);
        }
    }

    // topological order when acyclic
    std::optional<std::vector<int>> topological_order() const {
        int n = num_vertices();
        std::vector<int> indeg(n, 0);
        for (const auto& a : arrows) indeg[a.dst]++;
        std::queue<int> q;
        for (int v = 0; v < n; ++v)
            if (indeg[v] == 0) q.push(v);
        std::vector<int> out;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            out.push_back(v);
            for (const auto& a : arrows)
                if (a.src == v && --indeg[a.dst] == 0) q.push(a.dst);
        }
        if (static_cast<int>(out.size()) != n) return std::nullopt;
        return out;
    }

    bool has_oriented_cycle() const { return !topological_order().has_value(); }

    bool is_source(int v) const {
        for (const auto& a : arrows)
            if (a.dst == v) return false;
        return true;
    }
    bool is_sink(int v) const {
        for (const auto& a : arrows)
            if (a.src == v) return false;
        return true;
    }
};

// A path, stored as arrow indices in application order. Empty = trivial path
// e_v at `src == dst`.
struct Path {
    int src = 0, dst = 0;
    std::vector<int> arrows;  // first applied first
    int length() const { return static_cast<int>(arrows.size()); }
};

// All paths of length <= cap, trivial paths included, in (length, discovery)
// order. The cap keeps the enumeration finite on oriented cycles.
inline std::vector<Path> enumerate_paths(const Quiver& q, int cap) {
    if (cap < 0) throw std::invalid_argument("enumerate_paths: negative cap");
    std::vector<Path> all;
    for (int v = 0; v < q.num_vertices(); ++v) all.push_back(Path{v, v, {}});
    size_t prev_begin = 0, prev_end = all.size();
    for (int len = 1; len <= cap; ++len) {
        for (size_t i = prev_begin; i < prev_end; ++i) {
            Path base = all[i];
            for (int a = 0; a < q.num_arrows(); ++a) {
                if (q.arrows[a].src != base.dst) continue;
                Path p = base;
                p.arrows.push_back(a);
                p.dst = q.arrows[a].dst;
                all.push_back(std::move(p));
            }
        }
        prev_begin = prev_end;
        prev_end = all.size();
        if (prev_begin == prev_end) break;  // no longer paths exist
    }
    return all;
}

// Maximal path length; throws if the quiver has an oriented cycle.
inline int quiver_length(const Quiver& q) {
    auto topo = q.topological_order();
    if (!topo) throw std::invalid_argument("quiver_length: oriented cycle present");
    std::vector<int> longest(q.num_vertices(), 0);
    int best = 0;
    for (auto it = topo->rbegin(); it != topo->rend(); ++it) {
        int v = *it;
        for (const auto& a : q.arrows)
            if (a.src == v) longest[v] = std::max(longest[v], 1 + longest[a.dst]);
        best = std::max(best, longest[v]);
    }
    return best;
}

enum class ReflectDir { Source, Sink };

// BGP reflection s_v^{+/-}: invert all arrows at a source (resp. sink) v.
inline Quiver reflect(const Quiver& q, int v, ReflectDir dir) {
    if (dir == ReflectDir::Source && !q.is_source(v))
        throw std::invalid_argument("reflect: vertex is not a source");
    if (dir == ReflectDir::Sink && !q.is_sink(v))
        throw std::invalid_argument("reflect: vertex is not a sink");
    Quiver r = q;
    r.order.reset();  // the old order is typically invalid after reflecting
    for (auto& a : r.arrows)
        if (a.src == v || a.dst == v) std::swap(a.src, a.dst);
    return r;
}

enum class DynkinType { A, D, E6, E7, E8, NonDynkin };

struct DynkinReport {
    DynkinType type = DynkinType::NonDynkin;
    int n = 0;        // rank for A_n / D_n; 6/7/8 for E types
    int coxeter = 0;  // h, only meaningful for Dynkin types
    bool connected = false;

    bool is_dynkin() const { return type != DynkinType::NonDynkin; }
    std::string name() const {
        switch (type) {
            case DynkinType::A: return "A" + std::to_string(n);
            case DynkinType::D: return "D" + std::to_string(n);
            case DynkinType::E6: return "E6";
            case DynkinType::E7: return "E7";
            case DynkinType::E8: return "E8";
            default: return "non-Dynkin";
        }
    }
};

// Classify the underlying undirected graph. Multiple arrows between the same
// pair of vertices count as a multi-edge (hence non-Dynkin).
inline DynkinReport classify_underlying(const Quiver& q) {
    DynkinReport rep;
    int n = q.num_vertices();
    if (n == 0) return rep;

    // connectivity + simple-graph check
    std::vector<std::vector<int>> adj(n);
    std::set<std::pair<int, int>> seen;
    bool multi = false, loop = false;
    for (const auto& a : q.arrows) {
        if (a.src == a.dst) loop = true;
        auto key = std::minmax(a.src, a.dst);
        if (!seen.insert(key).second) multi = true;
        adj[a.src].push_back(a.dst);
        adj[a.dst].push_back(a.src);
    }
    std::vector<bool> vis(n, false);
    std::queue<int> bfs;
    bfs.push(0);
    vis[0] = true;
    int cnt = 1;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int w : adj[v])
            if (!vis[w]) {
                vis[w] = true;
                ++cnt;
                bfs.push(w);
            }
    }
    rep.connected = (cnt == n);
    if (!rep.connected || multi || loop) return rep;
    if (static_cast<int>(seen.size()) != n - 1) return rep;  // connected + simple: tree iff n-1 edges

    // it is a tree; inspect degrees
    std::vector<int> deg(n, 0);
    for (auto& [u, v] : seen) {
        deg[u]++;
        deg[v]++;
    }
    int deg3 = -1;
    for (int v = 0; v < n; ++v) {
        if (deg[v] >= 4) return rep;
        if (deg[v] == 3) {
            if (deg3 >= 0) return rep;  // two branch points
            deg3 = v;
        }
    }
    if (deg3 < 0) {
        rep.type = DynkinType::A;
        rep.n = n;
        rep.coxeter = n + 1;
        return rep;
    }
    // branch lengths from the unique degree-3 vertex
    std::vector<int> arms;
    for (int w : adj[deg3]) {
        int len = 1, prev = deg3, cur = w;
        while (true) {
            int next = -1;
            for (int x : adj[cur])
                if (x != prev) next = x;
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] != 1) return rep;
    if (arms[1] == 1) {
        rep.type = DynkinType::D;
        rep.n = n;
        rep.coxeter = 2 * (n - 1);
        return rep;
    }
    if (arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
        rep.n = n;
        if (arms[2] == 2) rep.type = DynkinType::E6, rep.coxeter = 12;
        if (arms[2] == 3) rep.type = DynkinType::E7, rep.coxeter = 18;
        if (arms[2] == 4) rep.type = DynkinType::E8, rep.coxeter = 30;
        return rep;
    }
    return rep;
}

}  // namespace qdim
