// Finite-dimensional path algebras kQ/I with an explicit basis of path
// classes, structure constants, vertex pieces A_{uv} = e_u A e_v, and the
// radical filtration.
//
// Basis construction is plain linear algebra, length by length: the span of
// the two-sided ideal elements (pre * relation * post) is row-reduced against
// the paths. Two regimes are supported exactly:
//   * acyclic quiver: all paths are enumerated, any endpoint-homogeneous
//     relations (possibly length-inhomogeneous) are allowed;
//   * oriented cycles: a length cap must be supplied, relations must be
//     length-homogeneous, and the builder proves finite-dimensionality by
//     checking that every path of length == cap lies in the ideal.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdim/linalg.hpp"
#include "qdim/quiver.hpp"

namespace qdim {

template <class F>
struct RelTerm {
    typename F::Elem coeff;
    std::vector<int> arrows;  // arrow ids, application order (first applied first)
};

template <class F>
struct Relation {
    std::vector<RelTerm<F>> terms;
    int src = -1, dst = -1;

    void validate(const F& f, const Quiver& q) {
        if (terms.empty()) throw std::invalid_argument("relation: no terms");
        int maxlen = 0;
        for (auto& t : terms) {
            if (t.arrows.empty()) throw std::invalid_argument("relation: empty path term");
            int s = q.arrows[t.arrows[0]].src;
            int cur = s;
            for (int a : t.arrows) {
                if (q.arrows[a].src != cur)
                    throw std::invalid_argument("relation: path term is not composable");
                cur = q.arrows[a].dst;
            }
            if (src < 0) {
                src = s;
                dst = cur;
            } else if (s != src || cur != dst) {
                throw std::invalid_argument("relation: terms have inhomogeneous endpoints");
            }
            maxlen = std::max<int>(maxlen, static_cast<int>(t.arrows.size()));
            (void)f;
        }
        if (maxlen < 2) throw std::invalid_argument("relation: needs a term of length >= 2");
    }

    bool length_homogeneous() const {
        for (const auto& t : terms)
            if (t.arrows.size() != terms[0].arrows.size()) return false;
        return true;
    }
};

template <class F>
struct Presentation {
    Quiver quiver;
    std::vector<Relation<F>> relations;
    std::optional<int> cap;
};

template <class F>
class Algebra {
  public:
    using Elem = typename F::Elem;
    using AVec = std::vector<Elem>;  // dense coordinates over the class basis

    struct BasisElem {
        int src, dst, len;
        Path rep;  // chosen representative path
    };

    F f;
    Presentation<F> pres;
    int nv = 0;                    // vertices; basis[0..nv-1] are the idempotents e_v
    std::vector<BasisElem> basis;  // path classes

    Algebra() = default;

    int dim() const { return static_cast<int>(basis.size()); }
    const Quiver& quiver() const { return pres.quiver; }
    bool acyclic() const { return acyclic_; }

    // basis ids spanning A_{uv} = e_u A e_v (classes of paths from v to u)
    const std::vector<int>& piece(int u, int v) const { return piece_[u][v]; }
    int piece_dim(int u, int v) const { return static_cast<int>(piece_[u][v].size()); }

    AVec zero_vec() const { return AVec(dim(), f.zero()); }
    AVec unit_vec(int b) const {
        AVec v = zero_vec();
        v[b] = f.one();
        return v;
    }

    bool vec_is_zero(const AVec& v) const {
        for (const auto& x : v)
            if (!f.is_zero(x)) return false;
        return true;
    }

    // product of basis classes, paper order: first j, then i
    const AVec& prod(int i, int j) const { return prod_[i][j]; }

    AVec mul(const AVec& x, const AVec& y) const {
        AVec r = zero_vec();
        for (int i = 0; i < dim(); ++i) {
            if (f.is_zero(x[i])) continue;
            for (int j = 0; j < dim(); ++j) {
                if (f.is_zero(y[j])) continue;
                const AVec& p = prod_[i][j];
                auto c = f.mul(x[i], y[j]);
                for (int k = 0; k < dim(); ++k)
                    if (!f.is_zero(p[k])) r[k] = f.add(r[k], f.mul(c, p[k]));
            }
        }
        return r;
    }

    // reduce an arbitrary enumerated path to basis coordinates
    AVec path_class(const Path& p) const {
        auto it = path_index_.find(path_key(p));
        if (it == path_index_.end()) {
            // longer than everything enumerated: only possible past the cap,
            // where classes vanish
            return zero_vec();
        }
        return path_reduction_[it->second];
    }

    // left/right multiplication by basis element c, restricted to a piece:
    //   lmul: A_{u,w} -> A_{v,w}   (c in A_{v,u}),   x -> c*x
    Matrix<F> piece_lmul(int c, int u, int v, int w) const {
        const auto& src = piece_[u][w];
        const auto& dst = piece_[v][w];
        Matrix<F> m(f, static_cast<int>(dst.size()), static_cast<int>(src.size()));
        for (size_t j = 0; j < src.size(); ++j) {
            const AVec& p = prod_[c][src[j]];
            for (size_t i = 0; i < dst.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(j)) = p[dst[i]];
        }
        return m;
    }

    //   rmul: A_{w,v} -> A_{w,u}   (c in A_{v,u}),   x -> x*c
    Matrix<F> piece_rmul(int c, int u, int v, int w) const {
        const auto& src = piece_[w][v];
        const auto& dst = piece_[w][u];
        Matrix<F> m(f, static_cast<int>(dst.size()), static_cast<int>(src.size()));
        for (size_t j = 0; j < src.size(); ++j) {
            const AVec& p = prod_[src[j]][c];
            for (size_t i = 0; i < dst.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(j)) = p[dst[i]];
        }
        return m;
    }

    // general element version of piece_lmul; a must be supported in A_{v,u}
    Matrix<F> piece_lmul_elem(const AVec& a, int u, int v, int w) const {
        Matrix<F> m(f, piece_dim(v, w), piece_dim(u, w));
        for (int c = 0; c < dim(); ++c) {
            if (f.is_zero(a[c])) continue;
            if (basis[c].src != u || basis[c].dst != v)
                throw std::invalid_argument("piece_lmul_elem: element not supported in A_{v,u}");
            Matrix<F> mc = piece_lmul(c, u, v, w);
            for (int i = 0; i < m.nr; ++i)
                for (int j = 0; j < m.nc; ++j) m.at(i, j) = f.add(m.at(i, j), f.mul(a[c], mc.at(i, j)));
        }
        return m;
    }

    // smallest d with R^{d+1} = 0 (0 for semisimple)
    int radical_degree() const { return radical_deg_; }

    // basis vectors (in class coordinates) of R^k, k >= 1
    const std::vector<AVec>& radical_power(int k) const {
        static const std::vector<AVec> empty;
        if (k <= 0) throw std::invalid_argument("radical_power: k must be >= 1");
        if (k > static_cast<int>(rad_powers_.size())) return empty;
        return rad_powers_[k - 1];
    }

    // invert a within e_v A e_v; nullopt when not invertible
    std::optional<AVec> local_inverse(const AVec& a, int v) const {
        Matrix<F> L = piece_lmul_elem(a, v, v, v);
        Matrix<F> ev(f, piece_dim(v, v), 1);
        const auto& pc = piece_[v][v];
        for (size_t i = 0; i < pc.size(); ++i)
            if (pc[i] == v) ev.at(static_cast<int>(i), 0) = f.one();
        auto x = solve(L, ev);
        if (!x) return std::nullopt;
        AVec r = zero_vec();
        for (size_t i = 0; i < pc.size(); ++i) r[pc[i]] = x->at(static_cast<int>(i), 0);
        return r;
    }

    static Algebra build(const F& field, Presentation<F> pres);

  private:
    static std::pair<int, std::vector<int>> path_key(const Path& p) { return {p.src, p.arrows}; }

    bool acyclic_ = true;
    int maxlen_ = 0;  // enumeration bound (quiver length, or cap)
    std::map<std::pair<int, std::vector<int>>, int> path_index_;
    std::vector<AVec> path_reduction_;  // per enumerated path: class in basis coords
    std::vector<std::vector<std::vector<int>>> piece_;
    std::vector<std::vector<AVec>> prod_;
    std::vector<std::vector<AVec>> rad_powers_;
    int radical_deg_ = 0;
};

template <class F>
Algebra<F> Algebra<F>::build(const F& field, Presentation<F> pres) {
    pres.quiver.validate();
    for (auto& r : pres.relations) r.validate(field, pres.quiver);

    Algebra<F> A;
    A.f = field;
    A.nv = pres.quiver.num_vertices();

    const Quiver& q = pres.quiver;
    bool acyclic = !q.has_oriented_cycle();
    bool homogeneous = true;
    for (const auto& r : pres.relations)
        if (!r.length_homogeneous()) homogeneous = false;

    int L;
    if (acyclic) {
        L = quiver_length(q);
    } else {
        if (!pres.cap) throw std::invalid_argument("build_algebra: oriented cycle requires a length cap");
        if (!homogeneous)
            throw std::invalid_argument(
                "build_algebra: oriented cycles with length-inhomogeneous relations are not supported");
        L = *pres.cap;
        if (L < 1) throw std::invalid_argument("build_algebra: cap must be >= 1");
    }
    A.acyclic_ = acyclic;
    A.maxlen_ = L;
    A.pres = std::move(pres);
    const Quiver& qq = A.pres.quiver;  // pres was moved from; rebind

    std::vector<Path> paths = enumerate_paths(qq, L);
    int np = static_cast<int>(paths.size());
    for (int i = 0; i < np; ++i) A.path_index_[path_key(paths[i])] = i;

    F f = field;
    auto unit = [&](int pid) {
        typename RowSpan<F>::Vec v(np, f.zero());
        v[pid] = f.one();
        return v;
    };

    // span of the two-sided ideal inside the enumerated path space
    RowSpan<F> ideal(f, np);
    {
        // group paths by source / target for the pre * r * post enumeration
        std::vector<std::vector<int>> by_src(A.nv), by_dst(A.nv);
        for (int i = 0; i < np; ++i) {
            by_src[paths[i].src].push_back(i);
            by_dst[paths[i].dst].push_back(i);
        }
        for (const auto& r : A.pres.relations) {
            int rmin = L + 1;
            for (const auto& t : r.terms) rmin = std::min<int>(rmin, static_cast<int>(t.arrows.size()));
            for (int pre : by_dst[r.src]) {      // pre: ? -> src(r), applied first
                for (int post : by_src[r.dst]) {  // post: dst(r) -> ?, applied last
                    if (paths[pre].length() + rmin + paths[post].length() > L && homogeneous) continue;
                    typename RowSpan<F>::Vec v(np, f.zero());
                    bool in_range = true;
                    for (const auto& t : r.terms) {
                        Path whole;
                        whole.src = paths[pre].src;
                        whole.dst = paths[post].dst;
                        whole.arrows = paths[pre].arrows;
                        whole.arrows.insert(whole.arrows.end(), t.arrows.begin(), t.arrows.end());
                        whole.arrows.insert(whole.arrows.end(), paths[post].arrows.begin(),
                                            paths[post].arrows.end());
                        auto it = A.path_index_.find(path_key(whole));
                        if (it == A.path_index_.end()) {
                            in_range = false;  // only possible in the acyclic regime? no: skip
                            break;
                        }
                        v[it->second] = f.add(v[it->second], t.coeff);
                    }
                    if (in_range) ideal.add(std::move(v));
                }
            }
        }
    }

    // prove finite-dimensionality at the cap
    if (!acyclic) {
        for (int i = 0; i < np; ++i) {
            if (paths[i].length() != L) continue;
            if (!ideal.contains(unit(i)))
                throw std::runtime_error("build_algebra: not provably finite-dimensional at this cap (path '" +
                                         std::to_string(i) + "' of length " + std::to_string(L) +
                                         " does not lie in the ideal)");
        }
    }

    // choose basis classes: paths, shortest first, independent modulo the
    // ideal; the working span carries the ideal rows untagged and basis rows
    // tagged, so reduce_tracked expresses any path over the chosen basis
    RowSpan<F> work(f, np);
    {
        Matrix<F> ib = ideal.basis_matrix();
        for (int i = 0; i < ib.nr; ++i) {
            typename RowSpan<F>::Vec row(np);
            for (int j = 0; j < np; ++j) row[j] = ib.at(i, j);
            work.add(std::move(row));
        }
    }
    for (int i = 0; i < np; ++i) {
        if (!acyclic && paths[i].length() >= L) continue;
        int tag = static_cast<int>(A.basis.size());
        if (work.add_tagged(unit(i), tag))
            A.basis.push_back({paths[i].src, paths[i].dst, paths[i].length(), paths[i]});
    }
    for (int v = 0; v < A.nv; ++v)
        if (!(A.basis[v].len == 0 && A.basis[v].src == v))
            throw std::runtime_error("build_algebra: idempotents are not independent (ideal is not admissible)");

    int d = A.dim();
    A.piece_.assign(A.nv, std::vector<std::vector<int>>(A.nv));
    for (int b = 0; b < d; ++b) A.piece_[A.basis[b].dst][A.basis[b].src].push_back(b);

    // reduction of every enumerated path to basis coordinates
    A.path_reduction_.assign(np, AVec(d, f.zero()));
    for (int i = 0; i < np; ++i) {
        auto [res, coords] = work.reduce_tracked(unit(i));
        for (const auto& x : res)
            if (!f.is_zero(x)) throw std::runtime_error("build_algebra: path failed to reduce");
        for (const auto& [t, c] : coords) A.path_reduction_[i][t] = c;
    }

    // structure constants
    A.prod_.assign(d, std::vector<AVec>(d, AVec(d, f.zero())));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (A.basis[j].dst != A.basis[i].src) continue;  // p*q = 0 unless t(q) = s(p)
            Path cat;
            cat.src = A.basis[j].src;
            cat.dst = A.basis[i].dst;
            cat.arrows = A.basis[j].rep.arrows;
            cat.arrows.insert(cat.arrows.end(), A.basis[i].rep.arrows.begin(), A.basis[i].rep.arrows.end());
            A.prod_[i][j] = A.path_class(cat);
        }
    }

    // radical filtration: R^1 = positive-length classes, R^{k+1} = R^k * R
    {
        std::vector<AVec> rk;
        for (int b = A.nv; b < d; ++b) rk.push_back(A.unit_vec(b));
        while (!rk.empty()) {
            A.rad_powers_.push_back(rk);
            RowSpan<F> span(f, d);
            std::vector<AVec> next;
            for (const auto& x : A.rad_powers_.back())
                for (int b = A.nv; b < d; ++b) {
                    AVec p = A.mul(x, A.unit_vec(b));
                    if (!A.vec_is_zero(p) && span.add(p)) next.push_back(p);
                }
            rk = std::move(next);
        }
        A.radical_deg_ = static_cast<int>(A.rad_powers_.size());
    }
    return A;
}

// Tensor product presentation: product quiver, both factors' relations
// lifted, plus the commutativity relations.
template <class F>
Presentation<F> tensor_presentation(const F& f, const Presentation<F>& pa, const Presentation<F>& pb) {
    const Quiver& qa = pa.quiver;
    const Quiver& qb = pb.quiver;
    Presentation<F> out;
    Quiver& q = out.quiver;
    int na = qa.num_vertices(), nb = qb.num_vertices();
    auto vid = [&](int u, int v) { return u * nb + v; };
    for (int u = 0; u < na; ++u)
        for (int v = 0; v < nb; ++v) q.vlabel.push_back(qa.vlabel[u] + "_" + qb.vlabel[v]);

    // arrow (a, v): factor-a arrow at second coordinate v, and symmetrically
    std::vector<std::vector<int>> aid(qa.num_arrows(), std::vector<int>(nb));
    std::vector<std::vector<int>> bid(na, std::vector<int>(qb.num_arrows()));
    for (int a = 0; a < qa.num_arrows(); ++a)
        for (int v = 0; v < nb; ++v) {
            aid[a][v] = q.num_arrows();
            q.arrows.push_back({qa.arrows[a].label + "_" + qb.vlabel[v], vid(qa.arrows[a].src, v),
                                vid(qa.arrows[a].dst, v)});
        }
    for (int u = 0; u < na; ++u)
        for (int b = 0; b < qb.num_arrows(); ++b) {
            bid[u][b] = q.num_arrows();
            q.arrows.push_back({qa.vlabel[u] + "_" + qb.arrows[b].label, vid(u, qb.arrows[b].src),
                                vid(u, qb.arrows[b].dst)});
        }

    // commutativity squares
    for (int a = 0; a < qa.num_arrows(); ++a)
        for (int b = 0; b < qb.num_arrows(); ++b) {
            Relation<F> r;
            int u = qa.arrows[a].src, u2 = qa.arrows[a].dst;
            int v = qb.arrows[b].src, v2 = qb.arrows[b].dst;
            (void)u;
            (void)v2;
            r.terms.push_back({f.one(), {aid[a][v], bid[u2][b]}});          // a first, then b
            r.terms.push_back({f.neg(f.one()), {bid[u][b], aid[a][v2]}});   // b first, then a
            out.relations.push_back(std::move(r));
        }
    // lifted relations
    for (const auto& ra : pa.relations)
        for (int v = 0; v < nb; ++v) {
            Relation<F> r;
            for (const auto& t : ra.terms) {
                RelTerm<F> nt{t.coeff, {}};
                for (int arr : t.arrows) nt.arrows.push_back(aid[arr][v]);
                r.terms.push_back(std::move(nt));
            }
            out.relations.push_back(std::move(r));
        }
    for (const auto& rb : pb.relations)
        for (int u = 0; u < na; ++u) {
            Relation<F> r;
            for (const auto& t : rb.terms) {
                RelTerm<F> nt{t.coeff, {}};
                for (int arr : t.arrows) nt.arrows.push_back(bid[u][arr]);
                r.terms.push_back(std::move(nt));
            }
            out.relations.push_back(std::move(r));
        }

    if (qa.order && qb.order) {
        // lexicographic product order; arrows raise exactly one coordinate
        std::vector<std::pair<std::pair<int, int>, int>> ranked;
        for (int u = 0; u < na; ++u)
            for (int v = 0; v < nb; ++v) ranked.push_back({{(*qa.order)[u], (*qb.order)[v]}, vid(u, v)});
        std::sort(ranked.begin(), ranked.end());
        std::vector<int> ord(na * nb);
        for (size_t i = 0; i < ranked.size(); ++i) ord[ranked[i].second] = static_cast<int>(i);
        q.order = ord;
    }
    return out;
}

template <class F>
Algebra<F> tensor_algebra(const Algebra<F>& a, const Algebra<F>& b) {
    Presentation<F> p = tensor_presentation(a.f, a.pres, b.pres);
    Algebra<F> t = Algebra<F>::build(a.f, std::move(p));
    if (t.dim() != a.dim() * b.dim())
        throw std::runtime_error("tensor_algebra: dimension is not multiplicative (unexpected)");
    return t;
}

}  // namespace qdim
