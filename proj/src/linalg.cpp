#include "weylmodes/linalg.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>

#include "weylmodes/errors.hpp"

namespace weylmodes {

Mat operator+(const Mat& x, const Mat& y) {
    assert(x.n_ == y.n_);
    Mat r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
    return r;
}

Mat operator-(const Mat& x, const Mat& y) {
    assert(x.n_ == y.n_);
    Mat r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= y.a_[i];
    return r;
}

Mat operator*(const Mat& x, const Mat& y) {
    assert(x.n_ == y.n_);
    const std::size_t n = x.n_;
    Mat r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double xik = x(i, k);
            if (xik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) r(i, j) += xik * y(k, j);
        }
    return r;
}

Mat& Mat::operator*=(double s) {
    for (double& v : a_) v *= s;
    return *this;
}

double dot(const Vec& x, const Vec& y) {
    assert(x.size() == y.size());
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

double norm(const Vec& x) { return std::sqrt(dot(x, x)); }

Vec operator+(const Vec& x, const Vec& y) {
    assert(x.size() == y.size());
    Vec r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
    return r;
}

Vec operator-(const Vec& x, const Vec& y) {
    assert(x.size() == y.size());
    Vec r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
    return r;
}

Vec operator*(double s, const Vec& x) {
    Vec r = x;
    for (double& v : r) v *= s;
    return r;
}

Vec mat_vec(const Mat& m, const Vec& x) {
    const std::size_t n = m.size();
    assert(x.size() == n);
    Vec r(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i] += m(i, j) * x[j];
    return r;
}

double frobenius(const Mat& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) s += m(i, j) * m(i, j);
    return std::sqrt(s);
}

double max_abs_offdiag_asym(const Mat& m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            worst = std::max(worst, std::abs(m(i, j) - m(j, i)));
    return worst;
}

void add_outer(Mat& m, const Vec& x, double s) {
    const std::size_t n = m.size();
    assert(x.size() == n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) += s * x[i] * x[j];
}

Vec solve(Mat m, Vec b) {
    const std::size_t n = m.size();
    assert(b.size() == n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
        if (m(piv, col) == 0.0) throw SingularInput("solve: singular matrix");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(piv, j));
            std::swap(b[col], b[piv]);
        }
        const double inv = 1.0 / m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = m(r, col) * inv;
            if (f == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
            b[r] -= f * b[col];
        }
    }
    Vec x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= m(i, j) * x[j];
        x[i] = s / m(i, i);
    }
    return x;
}

Mat cholesky(const Mat& g) {
    const std::size_t n = g.size();
    Mat e(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = g(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= e(i, k) * e(j, k);
            if (i == j) {
                if (s <= 0.0) throw SingularInput("cholesky: matrix not positive definite");
                e(i, i) = std::sqrt(s);
            } else {
                e(i, j) = s / e(j, j);
            }
        }
    }
    return e;
}

RatMat rat_inverse(RatMat m) {
    const std::size_t n = m.size();
    RatMat inv(n, RatVec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == Rational(0)) ++piv;
        if (piv == n) throw SingularInput("rat_inverse: singular matrix");
        std::swap(m[col], m[piv]);
        std::swap(inv[col], inv[piv]);
        const Rational d = m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == Rational(0)) continue;
            const Rational f = m[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

RatVec rat_mat_vec(const RatMat& m, const RatVec& x) {
    RatVec r(m.size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) r[i] += m[i][j] * x[j];
    return r;
}

Rational rat_dot(const RatVec& x, const RatVec& y) {
    Rational s(0);
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

Rational rat_bilinear(const RatVec& x, const RatMat& g, const RatVec& y) {
    Rational s(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == Rational(0)) continue;
        for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * g[i][j] * y[j];
    }
    return s;
}

} // namespace weylmodes
