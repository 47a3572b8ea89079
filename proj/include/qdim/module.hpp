// Right modules over a path algebra with relations: per-vertex vector spaces
// with one matrix per arrow (M_a: M_{t(a)} -> M_{s(a)}), the projective /
// injective / simple modules, hom spaces, projective covers, kernels,
// quotients, and isomorphism testing.
#pragma once

#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qdim/algebra.hpp"

namespace qdim {

template <class F>
struct RightModule {
    const Algebra<F>* A = nullptr;
    std::vector<int> dim;          // per vertex
    std::vector<Matrix<F>> act;    // per arrow a: M_{t(a)} -> M_{s(a)}

    int total_dim() const { return std::accumulate(dim.begin(), dim.end(), 0); }
    bool is_zero() const { return total_dim() == 0; }

    static RightModule zero(const Algebra<F>& A) {
        RightModule m;
        m.A = &A;
        m.dim.assign(A.nv, 0);
        for (const auto& ar : A.quiver().arrows) {
            (void)ar;
            m.act.push_back(Matrix<F>(A.f, 0, 0));
        }
        return m;
    }

    // action of a path (application order), M_{dst} -> M_{src};
    // M_p = M_{a_1} M_{a_2} ... M_{a_k} in the column-vector convention
    Matrix<F> path_action(const Path& p) const {
        if (p.arrows.empty()) return Matrix<F>::identity(A->f, dim[p.src]);
        Matrix<F> r = act[p.arrows.front()];
        for (size_t k = 1; k < p.arrows.size(); ++k) r = r.mul(act[p.arrows[k]]);
        return r;
    }

    // action of an algebra element supported in A_{v,u}: M_v -> M_u
    Matrix<F> elem_action(const typename Algebra<F>::AVec& x, int u, int v) const {
        const F& f = A->f;
        Matrix<F> r(f, dim[u], dim[v]);
        for (int b = 0; b < A->dim(); ++b) {
            if (f.is_zero(x[b])) continue;
            if (A->basis[b].src != u || A->basis[b].dst != v)
                throw std::invalid_argument("elem_action: element not supported in A_{v,u}");
            Matrix<F> pa = path_action(A->basis[b].rep);
            for (int i = 0; i < r.nr; ++i)
                for (int j = 0; j < r.nc; ++j) r.at(i, j) = f.add(r.at(i, j), f.mul(x[b], pa.at(i, j)));
        }
        return r;
    }

    // all relation matrices must vanish
    void validate() const {
        const F& f = A->f;
        for (const auto& rel : A->pres.relations) {
            Matrix<F> m(f, dim[rel.src], dim[rel.dst]);
            for (const auto& t : rel.terms) {
                Path p;
                p.src = rel.src;
                p.dst = rel.dst;
                p.arrows = t.arrows;
                Matrix<F> pa = path_action(p);
                for (int i = 0; i < m.nr; ++i)
                    for (int j = 0; j < m.nc; ++j) m.at(i, j) = f.add(m.at(i, j), f.mul(t.coeff, pa.at(i, j)));
            }
            if (!m.is_zero()) throw std::runtime_error("RightModule: relation does not vanish");
        }
    }
};

template <class F>
struct ModuleMap {
    std::vector<Matrix<F>> comp;  // per vertex

    bool commutes(const RightModule<F>& src, const RightModule<F>& dst) const {
        const Algebra<F>& A = *src.A;
        for (int a = 0; a < A.quiver().num_arrows(); ++a) {
            int s = A.quiver().arrows[a].src, t = A.quiver().arrows[a].dst;
            // f_s . M_a = N_a . f_t
            Matrix<F> lhs = comp[s].mul(src.act[a]);
            Matrix<F> rhs = dst.act[a].mul(comp[t]);
            if (!(lhs == rhs)) return false;
        }
        return true;
    }
};

// P_v = e_v A: (P_v)_u = A_{v,u}, arrows act by right multiplication
template <class F>
RightModule<F> projective(const Algebra<F>& A, int v) {
    RightModule<F> m;
    m.A = &A;
    m.dim.resize(A.nv);
    for (int u = 0; u < A.nv; ++u) m.dim[u] = A.piece_dim(v, u);
    for (int a = 0; a < A.quiver().num_arrows(); ++a) {
        int s = A.quiver().arrows[a].src, t = A.quiver().arrows[a].dst;
        // right multiplication by the arrow class: A_{v,t} -> A_{v,s}
        Path ap;
        ap.src = s;
        ap.dst = t;
        ap.arrows = {a};
        auto cls = A.path_class(ap);
        Matrix<F> mat(A.f, m.dim[s], m.dim[t]);
        const auto& srcp = A.piece(v, t);
        const auto& dstp = A.piece(v, s);
        for (size_t j = 0; j < srcp.size(); ++j) {
            typename Algebra<F>::AVec prod = A.mul(A.unit_vec(srcp[j]), cls);
            for (size_t i = 0; i < dstp.size(); ++i) mat.at(static_cast<int>(i), static_cast<int>(j)) = prod[dstp[i]];
        }
        m.act.push_back(std::move(mat));
    }
    return m;
}

// I_v = (A e_v)^*: (I_v)_u = (A_{u,v})^*, arrow a acts by (transpose of left
// multiplication by a): (A_{s(a),v})^* -> ... restricted appropriately
template <class F>
RightModule<F> injective(const Algebra<F>& A, int v) {
    RightModule<F> m;
    m.A = &A;
    m.dim.resize(A.nv);
    for (int u = 0; u < A.nv; ++u) m.dim[u] = A.piece_dim(u, v);
    for (int a = 0; a < A.quiver().num_arrows(); ++a) {
        int s = A.quiver().arrows[a].src, t = A.quiver().arrows[a].dst;
        // (f*a)(x) = f(a*x) for x in A_{s,v}; a*x in A_{t,v}
        Path ap;
        ap.src = s;
        ap.dst = t;
        ap.arrows = {a};
        auto cls = A.path_class(ap);
        Matrix<F> lm = A.piece_lmul_elem(cls, s, t, v);  // A_{s,v} -> A_{t,v}
        m.act.push_back(lm.transpose());                 // (A_{t,v})^* -> (A_{s,v})^*
    }
    return m;
}

template <class F>
RightModule<F> simple(const Algebra<F>& A, int v) {
    RightModule<F> m;
    m.A = &A;
    m.dim.assign(A.nv, 0);
    m.dim[v] = 1;
    for (int a = 0; a < A.quiver().num_arrows(); ++a) {
        int s = A.quiver().arrows[a].src, t = A.quiver().arrows[a].dst;
        m.act.push_back(Matrix<F>(A.f, m.dim[s], m.dim[t]));
    }
    return m;
}

template <class F>
RightModule<F> direct_sum(const RightModule<F>& x, const RightModule<F>& y) {
    const Algebra<F>& A = *x.A;
    const F& f = A.f;
    RightModule<F> m;
    m.A = &A;
    m.dim.resize(A.nv);
    for (int u = 0; u < A.nv; ++u) m.dim[u] = x.dim[u] + y.dim[u];
    for (int a = 0; a < A.quiver().num_arrows(); ++a) {
        int s = A.quiver().arrows[a].src, t = A.quiver().arrows[a].dst;
        Matrix<F> mat(f, m.dim[s], m.dim[t]);
        for (int i = 0; i < x.dim[s]; ++i)
            for (int j = 0; j < x.dim[t]; ++j) mat.at(i, j) = x.act[a].at(i, j);
        for (int i = 0; i < y.dim[s]; ++i)
            for (int j = 0; j < y.dim[t]; ++j) mat.at(x.dim[s] + i, x.dim[t] + j) = y.act[a].at(i, j);
        m.act.push_back(std::move(mat));
    }
    return m;
}

// Basis of Hom_A(M, N): solve the commutation system exactly.
template <class F>
std::vector<ModuleMap<F>> hom_space(const RightModule<F>& M, const RightModule<F>& N) {
    if (M.A != N.A) throw std::invalid_argument("hom_space: modules over different algebras");
    const Algebra<F>& A = *M.A;
    const F& f = A.f;
    // unknowns: entries of f_v, v = 0..nv-1
    std::vector<int> offset(A.nv + 1, 0);
    for (int v = 0; v < A.nv; ++v) offset[v + 1] = offset[v] + N.dim[v] * M.dim[v];
    int nunk = offset[A.nv];
    std::vector<std::vector<typename F::Elem>> rows;
    for (int a = 0; a < A.quiver().num_arrows(); ++a) {
        int s = A.quiver().arrows[a].src, t = A.quiver().arrows[a].dst;
        // f_s * M_a - N_a * f_t = 0, an (N.dim[s] x M.dim[t]) matrix of equations
        for (int i = 0; i < N.dim[s]; ++i)
            for (int j = 0; j < M.dim[t]; ++j) {
                std::vector<typename F::Elem> row(nunk, f.zero());
                for (int k = 0; k < M.dim[s]; ++k)
                    row[offset[s] + i * M.dim[s] + k] = f.add(row[offset[s] + i * M.dim[s] + k], M.act[a].at(k, j));
                for (int k = 0; k < N.dim[t]; ++k)
                    row[offset[t] + k * M.dim[t] + j] =
                        f.sub(row[offset[t] + k * M.dim[t] + j], N.act[a].at(i, k));
                rows.push_back(std::move(row));
            }
    }
    Matrix<F> sys(f, static_cast<int>(rows.size()), nunk);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < nunk; ++j) sys.at(static_cast<int>(i), j) = rows[i][j];
    Matrix<F> ker = rank_kernel_image(sys).kernel;

    std::vector<ModuleMap<F>> out;
    for (int c = 0; c < ker.nc; ++c) {
        ModuleMap<F> h;
        for (int v = 0; v < A.nv; ++v) {
            Matrix<F> mv(f, N.dim[v], M.dim[v]);
            for (int i = 0; i < N.dim[v]; ++i)
                for (int j = 0; j < M.dim[v]; ++j) mv.at(i, j) = ker.at(offset[v] + i * M.dim[v] + j, c);
            h.comp.push_back(std::move(mv));
        }
        out.push_back(std::move(h));
    }
    return out;
}

template <class F>
int hom_dim(const RightModule<F>& M, const RightModule<F>& N) {
    return static_cast<int>(hom_space(M, N).size());
}

// Submodule spanned by the given per-vertex column spans, closed under the
// arrow actions; returned as a module plus the inclusion.
template <class F>
std::pair<RightModule<F>, ModuleMap<F>> span_submodule(const RightModule<F>& M,
                                                       std::vector<Matrix<F>> gens) {
    const Algebra<F>& A = *M.A;
    const F& f = A.f;
    std::vector<RowSpan<F>> spans;
    for (int v = 0; v < A.nv; ++v) spans.emplace_back(f, M.dim[v]);
    // saturate under arrows
    bool changed = true;
    std::vector<std::vector<std::vector<typename F::Elem>>> vecs(A.nv);
    auto push = [&](int v, std::vector<typename F::Elem> x) {
        if (spans[v].add(x)) {
            vecs[v].push_back(std::move(x));
            return true;
        }
        return false;
    };
    for (int v = 0; v < A.nv; ++v)
        for (int c = 0; c < gens[v].nc; ++c) {
            std::vector<typename F::Elem> x(M.dim[v]);
            for (int i = 0; i < M.dim[v]; ++i) x[i] = gens[v].at(i, c);
            push(v, std::move(x));
        }
    while (changed) {
        changed = false;
        for (int a = 0; a < A.quiver().num_arrows(); ++a) {
            int s = A.quiver().arrows[a].src, t = A.quiver().arrows[a].dst;
            for (const auto& x : std::vector<std::vector<typename F::Elem>>(vecs[t])) {
                std::vector<typename F::Elem> y(M.dim[s], f.zero());
                for (int i = 0; i < M.dim[s]; ++i)
                    for (int j = 0; j < M.dim[t]; ++j) y[i] = f.add(y[i], f.mul(M.act[a].at(i, j), x[j]));
                if (push(s, std::move(y))) changed = true;
            }
        }
    }
    // basis per vertex
    RightModule<F> S;
    S.A = &A;
    S.dim.resize(A.nv);
    std::vector<Matrix<F>> basis(A.nv);
    for (int v = 0; v < A.nv; ++v) {
        basis[v] = spans[v].basis_matrix().transpose();  // columns
        S.dim[v] = basis[v].nc;
    }
    for (int a = 0; a < A.quiver().num_arrows(); ++a) {
        int s = A.quiver().arrows[a].src, t = A.quiver().arrows[a].dst;
        // express M.act[a] * basis[t] over basis[s]
        Matrix<F> img = M.act[a].mul(basis[t]);
        auto sol = solve(basis[s], img);
        if (!sol) throw std::runtime_error("span_submodule: not closed (internal)");
        S.act.push_back(*sol);
    }
    ModuleMap<F> inc;
    inc.comp = basis;
    return {std::move(S), std::move(inc)};
}

// Quotient M / span(gens): returns the quotient with the projection.
template <class F>
std::pair<RightModule<F>, ModuleMap<F>> quotient_module(const RightModule<F>& M,
                                                        std::vector<Matrix<F>> sub_gens) {
    const Algebra<F>& A = *M.A;
    const F& f = A.f;
    auto [S, inc] = span_submodule(M, std::move(sub_gens));
    RightModule<F> Q;
    Q.A = &A;
    Q.dim.resize(A.nv);
    std::vector<Matrix<F>> proj(A.nv);
    std::vector<Matrix<F>> lift(A.nv);  // section: Q -> M picking complement reps
    for (int v = 0; v < A.nv; ++v) {
        // complement basis: unit vectors independent modulo the submodule span
        RowSpan<F> sp(f, M.dim[v]);
        const Matrix<F>& sb = inc.comp[v];
        for (int c = 0; c < sb.nc; ++c) {
            std::vector<typename F::Elem> x(M.dim[v]);
            for (int i = 0; i < M.dim[v]; ++i) x[i] = sb.at(i, c);
            sp.add(std::move(x));
        }
        std::vector<int> reps;
        RowSpan<F> sp2 = sp;  // tagged complement picks
        for (int i = 0; i < M.dim[v]; ++i) {
            std::vector<typename F::Elem> e(M.dim[v], f.zero());
            e[i] = f.one();
            if (sp2.add_tagged(std::move(e), static_cast<int>(reps.size()))) reps.push_back(i);
        }
        Q.dim[v] = static_cast<int>(reps.size());
        // projection: x -> coefficients over the chosen reps modulo submodule
        Matrix<F> pv(f, Q.dim[v], M.dim[v]);
        for (int i = 0; i < M.dim[v]; ++i) {
            std::vector<typename F::Elem> e(M.dim[v], f.zero());
            e[i] = f.one();
            auto [res, coords] = sp2.reduce_tracked(std::move(e));
            for (const auto& x : res)
                if (!f.is_zero(x)) throw std::runtime_error("quotient_module: reduction failed");
            for (const auto& [t, c] : coords) pv.at(t, i) = c;
        }
        proj[v] = std::move(pv);
        Matrix<F> lv(f, M.dim[v], Q.dim[v]);
        for (int k = 0; k < Q.dim[v]; ++k) lv.at(reps[k], k) = f.one();
        lift[v] = std::move(lv);
    }
    for (int a = 0; a < A.quiver().num_arrows(); ++a) {
        int s = A.quiver().arrows[a].src, t = A.quiver().arrows[a].dst;
        Q.act.push_back(proj[s].mul(M.act[a]).mul(lift[t]));
    }
    ModuleMap<F> pr;
    pr.comp = proj;
    return {std::move(Q), std::move(pr)};
}

// Kernel of a module map h: M -> N, with the inclusion into M.
template <class F>
std::pair<RightModule<F>, ModuleMap<F>> kernel_module(const RightModule<F>& M, const ModuleMap<F>& h) {
    const Algebra<F>& A = *M.A;
    RightModule<F> K;
    K.A = &A;
    K.dim.resize(A.nv);
    std::vector<Matrix<F>> inc(A.nv);
    for (int v = 0; v < A.nv; ++v) {
        inc[v] = rank_kernel_image(h.comp[v]).kernel;
        K.dim[v] = inc[v].nc;
    }
    for (int a = 0; a < A.quiver().num_arrows(); ++a) {
        int s = A.quiver().arrows[a].src, t = A.quiver().arrows[a].dst;
        Matrix<F> img = M.act[a].mul(inc[t]);
        auto sol = solve(inc[s], img);
        if (!sol) throw std::runtime_error("kernel_module: kernel not arrow-closed (internal)");
        K.act.push_back(*sol);
    }
    ModuleMap<F> i;
    i.comp = inc;
    return {std::move(K), std::move(i)};
}

// M / (M * radical): dims of the top, i.e. multiplicities of the projective cover
template <class F>
std::vector<int> top_multiplicities(const RightModule<F>& M) {
    const Algebra<F>& A = *M.A;
    const F& f = A.f;
    std::vector<int> out(A.nv);
    for (int v = 0; v < A.nv; ++v) {
        // (M R)_v = sum over arrows a with s(a)=v of im M_a
        RowSpan<F> sp(f, M.dim[v]);
        for (int a = 0; a < A.quiver().num_arrows(); ++a) {
            if (A.quiver().arrows[a].src != v) continue;
            const Matrix<F>& m = M.act[a];
            for (int c = 0; c < m.nc; ++c) {
                std::vector<typename F::Elem> x(M.dim[v]);
                for (int i = 0; i < M.dim[v]; ++i) x[i] = m.at(i, c);
                sp.add(std::move(x));
            }
        }
        out[v] = M.dim[v] - sp.dim();
    }
    return out;
}

template <class F>
struct Cover {
    std::vector<int> mult;  // multiplicities of P_v
    RightModule<F> P;
    ModuleMap<F> surj;  // P -> M
};

// Projective cover: lift a basis of top(M) and map each P_v generator onto it.
template <class F>
Cover<F> projective_cover(const RightModule<F>& M) {
    const Algebra<F>& A = *M.A;
    const F& f = A.f;
    Cover<F> c;
    c.mult = top_multiplicities(M);

    // choose lifts of a basis of (M/MR)_v: unit vectors independent mod MR
    std::vector<std::vector<int>> gens(A.nv);
    for (int v = 0; v < A.nv; ++v) {
        RowSpan<F> sp(f, M.dim[v]);
        for (int a = 0; a < A.quiver().num_arrows(); ++a) {
            if (A.quiver().arrows[a].src != v) continue;
            for (int col = 0; col < M.act[a].nc; ++col) {
                std::vector<typename F::Elem> x(M.dim[v]);
                for (int i = 0; i < M.dim[v]; ++i) x[i] = M.act[a].at(i, col);
                sp.add(std::move(x));
            }
        }
        for (int i = 0; i < M.dim[v] && static_cast<int>(gens[v].size()) < c.mult[v]; ++i) {
            std::vector<typename F::Elem> e(M.dim[v], f.zero());
            e[i] = f.one();
            if (sp.add(std::move(e))) gens[v].push_back(i);
        }
    }

    // assemble P = direct sum of P_v^{mult[v]} and the surjection
    RightModule<F> P = RightModule<F>::zero(A);
    std::vector<std::pair<int, int>> summands;  // (vertex, generator index in M_v)
    for (int v = 0; v < A.nv; ++v)
        for (int g : gens[v]) summands.emplace_back(v, g);
    for (const auto& [v, g] : summands) {
        (void)g;
        P = direct_sum(P, projective(A, v));
    }
    // Columns of P at vertex u stack summand by summand, each block indexed by
    // the class basis of A_{v,u}. The generator e_v of the summand P_v maps to
    // its chosen lift m in M_v, and the class column p maps to m * p.
    ModuleMap<F> h;
    h.comp.resize(A.nv);
    std::vector<int> off(A.nv, 0);
    for (int u = 0; u < A.nv; ++u) h.comp[u] = Matrix<F>(f, M.dim[u], P.dim[u]);
    for (const auto& [v, g] : summands) {
        for (int u = 0; u < A.nv; ++u) {
            const auto& pc = A.piece(v, u);
            for (size_t j = 0; j < pc.size(); ++j) {
                Matrix<F> pa = M.path_action(A.basis[pc[j]].rep);  // M_v -> M_u
                for (int i = 0; i < M.dim[u]; ++i)
                    h.comp[u].at(i, off[u] + static_cast<int>(j)) = pa.at(i, g);
            }
            off[u] += static_cast<int>(pc.size());
        }
    }
    c.P = std::move(P);
    c.surj = std::move(h);
    return c;
}

enum class IsoResult { Yes, No, Undecided };

// Exact isomorphism test. Complete whenever the search grid is affordable;
// the certificate-style uses (cover by a single indecomposable projective)
// are decided exactly either way.
template <class F>
IsoResult module_iso(const RightModule<F>& M, const RightModule<F>& N) {
    if (M.A != N.A) throw std::invalid_argument("module_iso: different algebras");
    const Algebra<F>& A = *M.A;
    const F& f = A.f;
    if (M.dim != N.dim) return IsoResult::No;
    if (M.total_dim() == 0) return IsoResult::Yes;

    auto homs = hom_space(M, N);
    auto invertible = [&](const std::vector<typename F::Elem>& coef) {
        for (int v = 0; v < A.nv; ++v) {
            if (M.dim[v] == 0) continue;
            Matrix<F> m(f, N.dim[v], M.dim[v]);
            for (size_t h = 0; h < homs.size(); ++h) {
                if (f.is_zero(coef[h])) continue;
                for (int i = 0; i < m.nr; ++i)
                    for (int j = 0; j < m.nc; ++j)
                        m.at(i, j) = f.add(m.at(i, j), f.mul(coef[h], homs[h].comp[v].at(i, j)));
            }
            if (rank(m) < M.dim[v]) return false;
        }
        return true;
    };
    size_t r = homs.size();
    if (r == 0) return IsoResult::No;
    // single basis elements first
    for (size_t h = 0; h < r; ++h) {
        std::vector<typename F::Elem> c(r, f.zero());
        c[h] = f.one();
        if (invertible(c)) return IsoResult::Yes;
    }
    // exhaustive grid {0..D}^r decides: the determinant polynomial has degree
    // <= D in each variable, so vanishing on the grid means vanishing identically
    long D = M.total_dim();
    double cost = static_cast<double>(r) * std::log2(static_cast<double>(D) + 1);
    if (cost <= 18.0) {
        std::vector<long> idx(r, 0);
        while (true) {
            std::vector<typename F::Elem> c(r);
            for (size_t h = 0; h < r; ++h) c[h] = f.from_long(idx[h]);
            if (invertible(c)) return IsoResult::Yes;
            size_t k = 0;
            while (k < r && ++idx[k] > D) idx[k++] = 0;
            if (k == r) break;
        }
        return IsoResult::No;
    }
    // moment-curve probes as a cheap heuristic before giving up
    for (long t = 1; t <= D + 1; ++t) {
        std::vector<typename F::Elem> c(r);
        typename F::Elem cur = f.one();
        for (size_t h = 0; h < r; ++h) {
            c[h] = cur;
            cur = f.mul(cur, f.from_long(t));
        }
        if (invertible(c)) return IsoResult::Yes;
    }
    return IsoResult::Undecided;
}

// Decide M ≅ P_v / I_v via the cover shape; exact in both directions.
template <class F>
bool iso_to_projective(const RightModule<F>& M, int v) {
    const Algebra<F>& A = *M.A;
    RightModule<F> P = projective(A, v);
    if (M.dim != P.dim) return false;
    Cover<F> c = projective_cover(M);
    std::vector<int> want(A.nv, 0);
    want[v] = 1;
    if (c.mult != want) return false;
    // cover P_v ->> M between equal finite dims is an iso
    return true;
}

}  // namespace qdim
