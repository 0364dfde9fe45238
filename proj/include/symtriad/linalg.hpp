#pragma once

// Dense exact linear algebra on small dimensions (<= 16 in practice):
// vectors, Gaussian elimination, linear maps given by basis images.

#include "symtriad/rational.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace symtriad {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major

inline RatVec zero_vec(std::size_t n) { return RatVec(n, Rat(0)); }

inline RatVec add(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatVec sub(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline RatVec neg(const RatVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline RatVec scale(const Rat& c, const RatVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat norm2(const RatVec& a) { return dot(a, a); }

inline bool is_zero(const RatVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

// Lexicographic comparison; the canonical order on roots everywhere.
inline bool lex_less(const RatVec& a, const RatVec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

struct LexLess {
    bool operator()(const RatVec& a, const RatVec& b) const { return lex_less(a, b); }
};

// A root is lex-positive when its first nonzero coordinate is positive.
inline bool lex_positive(const RatVec& a) {
    for (const Rat& x : a) {
        if (x != 0) return x > 0;
    }
    return false;
}

// Solves A x = b where A is given by columns; returns nullopt when
// inconsistent. If the kernel is nontrivial, free variables are set to 0.
inline std::optional<RatVec> solve_columns(const std::vector<RatVec>& cols, const RatVec& b) {
    if (cols.empty()) return is_zero(b) ? std::optional<RatVec>(RatVec{}) : std::nullopt;
    std::size_t n = cols[0].size(), m = cols.size();
    RatMat a(n, RatVec(m + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) a[i][j] = cols[j][i];
        a[i][m] = b[i];
    }
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < n; ++col) {
        std::size_t sel = row;
        while (sel < n && a[sel][col] == 0) ++sel;
        if (sel == n) continue;
        std::swap(a[row], a[sel]);
        Rat pv = a[row][col];
        for (auto& x : a[row]) x /= pv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r != row && a[r][col] != 0) {
                Rat f = a[r][col];
                for (std::size_t c = 0; c <= m; ++c) a[r][c] -= f * a[row][c];
            }
        }
        pivot_col.push_back(static_cast<int>(col));
        ++row;
    }
    for (std::size_t r = row; r < n; ++r) {
        if (a[r][m] != 0) return std::nullopt;
    }
    RatVec x(m, Rat(0));
    for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = a[k][m];
    return x;
}

inline std::size_t rank_of(const std::vector<RatVec>& vecs) {
    if (vecs.empty()) return 0;
    RatMat a;
    for (const auto& v : vecs) a.push_back(v);
    std::size_t n = a.size(), m = a[0].size(), row = 0;
    for (std::size_t col = 0; col < m && row < n; ++col) {
        std::size_t sel = row;
        while (sel < n && a[sel][col] == 0) ++sel;
        if (sel == n) continue;
        std::swap(a[row], a[sel]);
        Rat pv = a[row][col];
        for (auto& x : a[row]) x /= pv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r != row && a[r][col] != 0) {
                Rat f = a[r][col];
                for (std::size_t c = 0; c < m; ++c) a[r][c] -= f * a[row][c];
            }
        }
        ++row;
    }
    return row;
}

// Inverse of a square matrix; throws on singular input.
inline RatMat invert(const RatMat& mat) {
    std::size_t n = mat.size();
    RatMat a(n, RatVec(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = mat[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a[sel][col] == 0) ++sel;
        if (sel == n) throw std::domain_error("singular matrix");
        std::swap(a[col], a[sel]);
        Rat pv = a[col][col];
        for (auto& x : a[col]) x /= pv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r != col && a[r][col] != 0) {
                Rat f = a[r][col];
                for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
            }
        }
    }
    RatMat inv(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

// Linear endomorphism of an ambient space, stored as a dense matrix.
class LinearMap {
public:
    LinearMap() = default;
    explicit LinearMap(RatMat m) : mat_(std::move(m)) {}

    static LinearMap identity(std::size_t n) {
        RatMat m(n, RatVec(n, Rat(0)));
        for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
        return LinearMap(std::move(m));
    }

    // Reflection w_alpha(h) = h - 2<alpha,h>/|alpha|^2 alpha.
    static LinearMap reflection(const RatVec& alpha) {
        std::size_t n = alpha.size();
        Rat nn = norm2(alpha);
        if (nn == 0) throw std::invalid_argument("reflection about zero vector");
        RatMat m(n, RatVec(n, Rat(0)));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] = (i == j ? Rat(1) : Rat(0)) - Rat(2) * alpha[i] * alpha[j] / nn;
            }
        }
        return LinearMap(std::move(m));
    }

    // The map sending basis[i] -> image[i] and fixing the orthogonal
    // complement of span(basis) pointwise.
    static LinearMap from_basis_images(const std::vector<RatVec>& basis,
                                       const std::vector<RatVec>& images) {
        if (basis.empty()) throw std::invalid_argument("empty basis");
        std::size_t n = basis[0].size(), m = basis.size();
        RatMat gram(m, RatVec(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) gram[i][j] = dot(basis[i], basis[j]);
        RatMat ginv = invert(gram);
        // L(x) = x + sum_i c_i(x) (images_i - basis_i), c = G^{-1} B^T x
        RatMat out(n, RatVec(n, Rat(0)));
        for (std::size_t col = 0; col < n; ++col) {
            RatVec x = zero_vec(n);
            x[col] = 1;
            RatVec bx(m);
            for (std::size_t i = 0; i < m; ++i) bx[i] = dot(basis[i], x);
            RatVec c(m, Rat(0));
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) c[i] += ginv[i][j] * bx[j];
            RatVec y = x;
            for (std::size_t i = 0; i < m; ++i) {
                if (c[i] != 0) y = add(y, scale(c[i], sub(images[i], basis[i])));
            }
            for (std::size_t rowi = 0; rowi < n; ++rowi) out[rowi][col] = y[rowi];
        }
        return LinearMap(std::move(out));
    }

    RatVec operator()(const RatVec& x) const {
        std::size_t n = mat_.size();
        RatVec y(n, Rat(0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (mat_[i][j] != 0 && x[j] != 0) y[i] += mat_[i][j] * x[j];
            }
        }
        return y;
    }

    LinearMap compose(const LinearMap& rhs) const {  // (*this) after rhs
        std::size_t n = mat_.size();
        RatMat m(n, RatVec(n, Rat(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (mat_[i][k] != 0)
                    for (std::size_t j = 0; j < n; ++j) m[i][j] += mat_[i][k] * rhs.mat_[k][j];
        return LinearMap(std::move(m));
    }

    bool operator==(const LinearMap& o) const { return mat_ == o.mat_; }

    const RatMat& matrix() const { return mat_; }
    std::size_t dim() const { return mat_.size(); }

private:
    RatMat mat_;
};

}  // namespace symtriad
