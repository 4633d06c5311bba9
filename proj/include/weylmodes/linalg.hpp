#pragma once

#include <cstddef>
#include <vector>

#include "weylmodes/rational.hpp"

namespace weylmodes {

using Vec = std::vector<double>;
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

// Dense square matrix, row-major.  Systems here have rank <= 8, so no
// attempt at blocking or sparsity.
class Mat {
  public:
    Mat() = default;
    explicit Mat(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}

    static Mat identity(std::size_t n) {
        Mat m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t size() const { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    friend Mat operator+(const Mat& x, const Mat& y);
    friend Mat operator-(const Mat& x, const Mat& y);
    friend Mat operator*(const Mat& x, const Mat& y);
    Mat& operator*=(double s);
    friend Mat operator*(double s, Mat m) { return m *= s; }

  private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

double dot(const Vec& x, const Vec& y);
double norm(const Vec& x);
Vec operator+(const Vec& x, const Vec& y);
Vec operator-(const Vec& x, const Vec& y);
Vec operator*(double s, const Vec& x);

Vec mat_vec(const Mat& m, const Vec& x);
double frobenius(const Mat& m);
double max_abs_offdiag_asym(const Mat& m);

// Adds s * (x outer x) to m; the building block of every Hessian here.
void add_outer(Mat& m, const Vec& x, double s);

// Solves m x = b by Gaussian elimination with partial pivoting.
// Throws SingularInput on a vanishing pivot.
Vec solve(Mat m, Vec b);

// Lower-triangular Cholesky factor of a symmetric positive definite matrix.
Mat cholesky(const Mat& g);

// Exact Gauss-Jordan inverse of a rational matrix.
RatMat rat_inverse(RatMat m);

RatVec rat_mat_vec(const RatMat& m, const RatVec& x);
Rational rat_dot(const RatVec& x, const RatVec& y);

// Bilinear form x^T g y in exact arithmetic.
Rational rat_bilinear(const RatVec& x, const RatMat& g, const RatVec& y);

} // namespace weylmodes
