#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "opgrid/actions.hpp"
#include "opgrid/vectors.hpp"

namespace opgrid {

/// Arithmetic progression of exponents lo, lo+step, ..., hi defining the
/// finite truncation a Subspace or operator matrix lives on. step 2 windows
/// carry a fixed parity.
struct Window {
    long lo = 0;
    long hi = 0;
    long step = 1;

    static Window range(long lo, long hi, long step = 1) {
        if (step < 1 || hi < lo) throw std::invalid_argument("bad window");
        hi = lo + ((hi - lo) / step) * step;
        return Window{lo, hi, step};
    }

    long size() const { return (hi - lo) / step + 1; }
    bool contains(long e) const { return e >= lo && e <= hi && (e - lo) % step == 0; }
    long index_of(long e) const { return (e - lo) / step; }
    long exp_at(long i) const { return lo + i * step; }

    Window expanded(long pad) const { return Window{lo - pad * step, hi + pad * step, step}; }

    bool operator==(const Window&) const = default;
};

class WindowMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <class Tag>
std::optional<std::vector<Rational>> to_coordinates(const SparseVec<Tag>& v, const Window& w) {
    std::vector<Rational> x(w.size(), Rational(0));
    for (const auto& [e, c] : v.coeffs()) {
        if (!w.contains(e)) return std::nullopt;
        x[w.index_of(e)] = c;
    }
    return x;
}

template <class Tag>
SparseVec<Tag> from_coordinates(const std::vector<Rational>& x, const Window& w) {
    SparseVec<Tag> v;
    for (long i = 0; i < static_cast<long>(x.size()); ++i) v.set(w.exp_at(i), x[i]);
    return v;
}

/// Dense exact matrix over Q.
class QMatrix {
public:
    QMatrix(long rows, long cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    Rational& at(long r, long c) { return a_[r * cols_ + c]; }
    const Rational& at(long r, long c) const { return a_[r * cols_ + c]; }

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<long> rref() {
        std::vector<long> pivots;
        long row = 0;
        for (long col = 0; col < cols_ && row < rows_; ++col) {
            long p = -1;
            for (long r = row; r < rows_; ++r)
                if (at(r, col) != 0) {
                    p = r;
                    break;
                }
            if (p < 0) continue;
            if (p != row)
                for (long c = 0; c < cols_; ++c) std::swap(at(p, c), at(row, c));
            const Rational inv = Rational(1) / at(row, col);
            for (long c = col; c < cols_; ++c) at(row, c) *= inv;
            for (long r = 0; r < rows_; ++r) {
                if (r == row || at(r, col) == 0) continue;
                const Rational f = at(r, col);
                for (long c = col; c < cols_; ++c) at(r, c) -= f * at(row, c);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    /// Reduced-echelon basis of the kernel.
    std::vector<std::vector<Rational>> nullspace() const {
        QMatrix m = *this;
        const std::vector<long> pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (long p : pivots) is_pivot[p] = true;
        std::vector<std::vector<Rational>> basis;
        for (long f = 0; f < cols_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<Rational> x(cols_, Rational(0));
            x[f] = 1;
            for (long r = 0; r < static_cast<long>(pivots.size()); ++r)
                x[pivots[r]] = -m.at(r, f);
            basis.push_back(std::move(x));
        }
        return basis;
    }

    /// The scalar c with A = c*I, if the matrix is a scalar multiple of the
    /// identity (used by the SIE detector).
    std::optional<Rational> scalar_multiple_of_identity() const {
        if (rows_ != cols_ || rows_ == 0) return std::nullopt;
        const Rational c = at(0, 0);
        for (long r = 0; r < rows_; ++r)
            for (long col = 0; col < cols_; ++col)
                if (at(r, col) != (r == col ? c : Rational(0))) return std::nullopt;
        return c;
    }

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        QMatrix r(a.rows_, b.cols_);
        for (long i = 0; i < a.rows_; ++i)
            for (long kk = 0; kk < a.cols_; ++kk) {
                if (a.at(i, kk) == 0) continue;
                for (long jj = 0; jj < b.cols_; ++jj) r.at(i, jj) += a.at(i, kk) * b.at(kk, jj);
            }
        return r;
    }

private:
    long rows_, cols_;
    std::vector<Rational> a_;
};

class WindowOverflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matrix of the action of `e` from window_in to window_out; throws
/// WindowOverflow if some image coordinate falls outside window_out.
template <class Traits>
QMatrix operator_matrix(const typename Traits::Element& e, const Window& win_in,
                        const Window& win_out) {
    QMatrix m(win_out.size(), win_in.size());
    for (long i = 0; i < win_in.size(); ++i) {
        const auto img = Traits::act(e, Traits::Vector::basis(win_in.exp_at(i)));
        for (const auto& [ex, c] : img.coeffs()) {
            if (!win_out.contains(ex))
                throw WindowOverflow("image exponent " + std::to_string(ex) +
                                     " outside output window");
            m.at(win_out.index_of(ex), i) = c;
        }
    }
    return m;
}

/// Finite-dimensional subspace spanned by an echelonized basis over a
/// declared window. Pivot = lowest-exponent nonzero coordinate; each basis
/// vector is stored in primitive integer form (positive leading coefficient)
/// so printed bases match the diagrams.
template <class Tag>
class Subspace {
public:
    Subspace() = default;
    Subspace(Window w, std::vector<SparseVec<Tag>> gens) : win_(w) {
        // echelonize the generators over the window
        std::vector<std::vector<Rational>> rows;
        for (const auto& g : gens) {
            auto x = to_coordinates(g, win_);
            if (!x) throw WindowMismatch("generator support outside subspace window");
            rows.push_back(std::move(*x));
        }
        if (rows.empty()) return;
        QMatrix m(static_cast<long>(rows.size()), win_.size());
        for (long r = 0; r < m.rows(); ++r)
            for (long c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
        const auto pivots = m.rref();
        for (long r = 0; r < static_cast<long>(pivots.size()); ++r) {
            std::vector<Rational> x(win_.size());
            for (long c = 0; c < m.cols(); ++c) x[c] = m.at(r, c);
            basis_.push_back(from_coordinates<Tag>(x, win_).primitive());
            pivots_.push_back(pivots[r]);
        }
    }

    const Window& window() const { return win_; }
    const std::vector<SparseVec<Tag>>& basis() const { return basis_; }
    long dim() const { return static_cast<long>(basis_.size()); }

    /// Coordinates of v in the basis, or nullopt if v is not in the span.
    /// Throws WindowMismatch if v does not live on the window.
    std::optional<std::vector<Rational>> membership(const SparseVec<Tag>& v) const {
        auto x = to_coordinates(v, win_);
        if (!x) throw WindowMismatch("vector support outside subspace window");
        std::vector<Rational> coords(basis_.size(), Rational(0));
        SparseVec<Tag> rem = v;
        for (size_t i = 0; i < basis_.size(); ++i) {
            const long pe = win_.exp_at(pivots_[i]);
            const Rational c = rem.coeff(pe) / basis_[i].coeff(pe);
            if (c != 0) {
                coords[i] = c;
                rem -= c * basis_[i];
            }
        }
        if (!rem.is_zero()) return std::nullopt;
        return coords;
    }

    bool contains(const SparseVec<Tag>& v) const { return membership(v).has_value(); }

    /// v = c * (single basis vector): the scalar, if this is 1-dimensional
    /// and v lies in the span.
    std::optional<Rational> scalar_on_line(const SparseVec<Tag>& v) const {
        if (dim() != 1) return std::nullopt;
        auto c = membership(v);
        if (!c) return std::nullopt;
        return (*c)[0];
    }

    bool same_space(const Subspace& o) const {
        if (dim() != o.dim()) return false;
        for (const auto& b : basis_)
            if (!o.contains(b)) return false;
        return true;
    }

private:
    Window win_{0, 0, 1};
    std::vector<SparseVec<Tag>> basis_;
    std::vector<long> pivots_;
};

class EmptyKernel : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Intersection of the kernels of `ops` restricted to the window. The image
/// support determines the equation rows, so no output window is needed.
template <class Traits>
Subspace<typename Traits::Vector::tag> kernel_space(
    const std::vector<typename Traits::Element>& ops, const Window& win) {
    using Tag = typename Traits::Vector::tag;
    std::vector<SparseVec<Tag>> images;
    std::set<long> support;
    for (const auto& op : ops)
        for (long i = 0; i < win.size(); ++i) {
            auto img = Traits::act(op, SparseVec<Tag>::basis(win.exp_at(i)));
            for (const auto& [e, c] : img.coeffs()) support.insert(e);
            images.push_back(std::move(img));
        }
    const std::vector<long> rows(support.begin(), support.end());
    const long nrows = static_cast<long>(rows.size());
    QMatrix stacked(std::max<long>(1, nrows * static_cast<long>(ops.size())), win.size());
    for (size_t oi = 0; oi < ops.size(); ++oi)
        for (long i = 0; i < win.size(); ++i) {
            const auto& img = images[oi * win.size() + i];
            for (const auto& [e, c] : img.coeffs()) {
                const long r = static_cast<long>(oi) * nrows +
                               (std::lower_bound(rows.begin(), rows.end(), e) - rows.begin());
                stacked.at(r, i) = c;
            }
        }
    std::vector<SparseVec<Tag>> gens;
    for (const auto& x : stacked.nullspace()) gens.push_back(from_coordinates<Tag>(x, win));
    return Subspace<Tag>(win, gens);
}

}  // namespace opgrid
