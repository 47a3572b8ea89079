// Dense exact linear algebra over a field object: row reduction, rank,
// kernel/image bases, linear solving, subspace intersection, and an
// incremental row-span used for quotient bookkeeping.
//
// Everything is immutable-in-spirit: functions return fresh values and never
// mutate their inputs, so concurrent reads are safe.
#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qdim/field.hpp"

namespace qdim {

template <class F>
struct Matrix {
    using Elem = typename F::Elem;

    F f;
    int nr = 0, nc = 0;
    std::vector<Elem> a;  // row-major

    Matrix() = default;
    Matrix(const F& field, int rows, int cols)
        : f(field), nr(rows), nc(cols), a(static_cast<size_t>(rows) * cols, field.zero()) {}

    Elem& at(int i, int j) { return a[static_cast<size_t>(i) * nc + j]; }
    const Elem& at(int i, int j) const { return a[static_cast<size_t>(i) * nc + j]; }

    static Matrix identity(const F& f, int n) {
        Matrix m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    bool is_zero() const {
        for (const auto& x : a)
            if (!f.is_zero(x)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(f, nc, nr);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Matrix mul(const Matrix& o) const {
        if (nc != o.nr) throw std::invalid_argument("Matrix::mul: dimension mismatch");
        Matrix r(f, nr, o.nc);
        for (int i = 0; i < nr; ++i)
            for (int k = 0; k < nc; ++k) {
                if (f.is_zero(at(i, k))) continue;
                for (int j = 0; j < o.nc; ++j)
                    r.at(i, j) = f.add(r.at(i, j), f.mul(at(i, k), o.at(k, j)));
            }
        return r;
    }

    Matrix add(const Matrix& o) const {
        assert(nr == o.nr && nc == o.nc);
        Matrix r(f, nr, nc);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = f.add(a[i], o.a[i]);
        return r;
    }

    Matrix scale(const Elem& c) const {
        Matrix r(f, nr, nc);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = f.mul(a[i], c);
        return r;
    }

    Matrix neg() const {
        Matrix r(f, nr, nc);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = f.neg(a[i]);
        return r;
    }

    Matrix col(int j) const {
        Matrix c(f, nr, 1);
        for (int i = 0; i < nr; ++i) c.at(i, 0) = at(i, j);
        return c;
    }

    // [this | o] side by side
    Matrix hstack(const Matrix& o) const {
        assert(nr == o.nr);
        Matrix r(f, nr, nc + o.nc);
        for (int i = 0; i < nr; ++i) {
            for (int j = 0; j < nc; ++j) r.at(i, j) = at(i, j);
            for (int j = 0; j < o.nc; ++j) r.at(i, nc + j) = o.at(i, j);
        }
        return r;
    }

    Matrix vstack(const Matrix& o) const {
        assert(nc == o.nc);
        Matrix r(f, nr + o.nr, nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) r.at(i, j) = at(i, j);
        for (int i = 0; i < o.nr; ++i)
            for (int j = 0; j < nc; ++j) r.at(nr + i, j) = o.at(i, j);
        return r;
    }

    bool operator==(const Matrix& o) const {
        if (nr != o.nr || nc != o.nc) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (!f.eq(a[i], o.a[i])) return false;
        return true;
    }
};

// Reduced row echelon form; pivots normalized to 1, eliminated above and
// below. Returns pivot columns.
template <class F>
std::vector<int> rref_inplace(Matrix<F>& m) {
    const F& f = m.f;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.nc && row < m.nr; ++col) {
        int pr = -1;
        for (int i = row; i < m.nr; ++i)
            if (!f.is_zero(m.at(i, col))) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.nc; ++j) std::swap(m.at(pr, j), m.at(row, j));
        auto pinv = f.inv(m.at(row, col));
        for (int j = col; j < m.nc; ++j) m.at(row, j) = f.mul(m.at(row, j), pinv);
        for (int i = 0; i < m.nr; ++i) {
            if (i == row || f.is_zero(m.at(i, col))) continue;
            auto c = m.at(i, col);
            for (int j = col; j < m.nc; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
struct RankKernelImage {
    int rank = 0;
    Matrix<F> kernel;  // columns form a basis of { x : m x = 0 }
    Matrix<F> image;   // columns form a basis of the column space (pivot columns of m)
};

template <class F>
RankKernelImage<F> rank_kernel_image(const Matrix<F>& m) {
    const F& f = m.f;
    Matrix<F> r = m;
    std::vector<int> piv = rref_inplace(r);
    RankKernelImage<F> out;
    out.rank = static_cast<int>(piv.size());

    std::vector<bool> is_piv(m.nc, false);
    std::vector<int> piv_row(m.nc, -1);
    for (int i = 0; i < out.rank; ++i) {
        is_piv[piv[i]] = true;
        piv_row[piv[i]] = i;
    }
    int nfree = m.nc - out.rank;
    out.kernel = Matrix<F>(f, m.nc, nfree);
    int kc = 0;
    for (int j = 0; j < m.nc; ++j) {
        if (is_piv[j]) continue;
        out.kernel.at(j, kc) = f.one();
        for (int c = 0; c < m.nc; ++c)
            if (is_piv[c]) out.kernel.at(c, kc) = f.neg(r.at(piv_row[c], j));
        ++kc;
    }

    out.image = Matrix<F>(f, m.nr, out.rank);
    for (int k = 0; k < out.rank; ++k)
        for (int i = 0; i < m.nr; ++i) out.image.at(i, k) = m.at(i, piv[k]);
    return out;
}

template <class F>
int rank(const Matrix<F>& m) {
    Matrix<F> r = m;
    return static_cast<int>(rref_inplace(r).size());
}

// Solve m X = rhs exactly. Returns std::nullopt when rhs lies outside the
// column space. Free variables are set to zero.
template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& m, const Matrix<F>& rhs) {
    if (m.nr != rhs.nr) throw std::invalid_argument("solve: row counts differ");
    const F& f = m.f;
    Matrix<F> aug = m.hstack(rhs);
    std::vector<int> piv = rref_inplace(aug);
    for (int p : piv)
        if (p >= m.nc) return std::nullopt;
    Matrix<F> x(f, m.nc, rhs.nc);
    for (size_t i = 0; i < piv.size(); ++i)
        for (int j = 0; j < rhs.nc; ++j) x.at(piv[i], j) = aug.at(static_cast<int>(i), m.nc + j);
    return x;
}

// Intersection of column spans. All bases must share the ambient row count.
template <class F>
Matrix<F> intersect_subspaces(const std::vector<Matrix<F>>& bases) {
    if (bases.empty()) throw std::invalid_argument("intersect_subspaces: empty input");
    const F& f = bases[0].f;
    int amb = bases[0].nr;
    for (const auto& b : bases)
        if (b.nr != amb) throw std::invalid_argument("intersect_subspaces: ambient mismatch");
    Matrix<F> cur = rank_kernel_image(bases[0]).image;
    for (size_t k = 1; k < bases.size(); ++k) {
        const Matrix<F>& b = bases[k];
        if (cur.nc == 0) return cur;
        // span(cur) ∩ span(b) = cur * (top block of ker[cur | -b])
        Matrix<F> stacked = cur.hstack(b.neg());
        Matrix<F> ker = rank_kernel_image(stacked).kernel;
        Matrix<F> top(f, cur.nc, ker.nc);
        for (int i = 0; i < cur.nc; ++i)
            for (int j = 0; j < ker.nc; ++j) top.at(i, j) = ker.at(i, j);
        cur = rank_kernel_image(cur.mul(top)).image;
    }
    return cur;
}

// Incrementally maintained reduced row span with optional bookkeeping of how
// each inserted row was expressed in terms of tagged generators. This is the
// workhorse behind quotient bases (path algebra construction, homology).
template <class F>
class RowSpan {
  public:
    using Elem = typename F::Elem;
    using Vec = std::vector<Elem>;

    RowSpan(const F& field, int width) : f_(field), width_(width) {}

    int dim() const { return static_cast<int>(rows_.size()); }
    int width() const { return width_; }

    // Reduce v against the current span; returns the residual.
    Vec reduce(Vec v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Elem& c = v[pivot_[r]];
            if (f_.is_zero(c)) continue;
            axpy(v, f_.neg(c), rows_[r]);
        }
        return v;
    }

    // Reduce v and also accumulate the coordinates over the tags of the rows
    // used, i.e. v = residual + sum coeff_t * (tagged generator t).
    std::pair<Vec, std::vector<std::pair<int, Elem>>> reduce_tracked(Vec v) const {
        std::vector<Elem> coef(tag_count_, f_.zero());
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Elem& c = v[pivot_[r]];
            if (f_.is_zero(c)) continue;
            Elem cc = c;
            axpy(v, f_.neg(cc), rows_[r]);
            for (const auto& [t, tv] : tags_[r]) coef[t] = f_.add(coef[t], f_.mul(cc, tv));
        }
        std::vector<std::pair<int, Elem>> out;
        for (int t = 0; t < tag_count_; ++t)
            if (!f_.is_zero(coef[t])) out.emplace_back(t, coef[t]);
        return {std::move(v), std::move(out)};
    }

    // Insert v (untagged). Returns true when v enlarged the span.
    bool add(Vec v) { return insert(std::move(v), {}); }

    // Insert v tagged as generator `tag` (v = that generator, exactly).
    bool add_tagged(Vec v, int tag) {
        tag_count_ = std::max(tag_count_, tag + 1);
        return insert(std::move(v), {{tag, f_.one()}});
    }

    bool contains(const Vec& v) const {
        Vec r = reduce(v);
        for (const auto& x : r)
            if (!f_.is_zero(x)) return false;
        return true;
    }

    Matrix<F> basis_matrix() const {  // rows
        Matrix<F> m(f_, dim(), width_);
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < width_; ++j) m.at(i, j) = rows_[i][j];
        return m;
    }

  private:
    void axpy(Vec& v, const Elem& c, const Vec& w) const {
        for (int j = 0; j < width_; ++j)
            if (!f_.is_zero(w[j])) v[j] = f_.add(v[j], f_.mul(c, w[j]));
    }

    bool insert(Vec v, std::vector<std::pair<int, Elem>> tag) {
        // forward-reduce, accumulating tag corrections
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Elem& c = v[pivot_[r]];
            if (f_.is_zero(c)) continue;
            Elem cc = c;
            axpy(v, f_.neg(cc), rows_[r]);
            for (const auto& [t, tv] : tags_[r]) add_tag(tag, t, f_.neg(f_.mul(cc, tv)));
        }
        int p = -1;
        for (int j = 0; j < width_; ++j)
            if (!f_.is_zero(v[j])) {
                p = j;
                break;
            }
        if (p < 0) return false;
        Elem pinv = f_.inv(v[p]);
        for (int j = 0; j < width_; ++j) v[j] = f_.mul(v[j], pinv);
        for (auto& [t, tv] : tag) tv = f_.mul(tv, pinv);
        // back-eliminate the new pivot from existing rows
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Elem& c = rows_[r][p];
            if (f_.is_zero(c)) continue;
            Elem cc = c;
            axpy(rows_[r], f_.neg(cc), v);
            for (const auto& [t, tv] : tag) add_tag(tags_[r], t, f_.neg(f_.mul(cc, tv)));
        }
        rows_.push_back(std::move(v));
        tags_.push_back(std::move(tag));
        pivot_.push_back(p);
        return true;
    }

    void add_tag(std::vector<std::pair<int, Elem>>& tags, int t, Elem v) const {
        for (auto& [tt, tv] : tags)
            if (tt == t) {
                tv = f_.add(tv, v);
                return;
            }
        tags.emplace_back(t, std::move(v));
    }

    F f_;
    int width_;
    int tag_count_ = 0;
    std::vector<Vec> rows_;
    std::vector<std::vector<std::pair<int, Elem>>> tags_;
    std::vector<int> pivot_;
};

}  // namespace qdim
