#pragma once

#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "minorb/rational.hpp"

namespace minorb {

// Dense matrix over the rationals, row-major. Everything in this project is
// small (at most a few hundred columns), so no sparse machinery.
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative shape");
    }
    Mat(int rows, int cols, std::initializer_list<Rat> entries) : Mat(rows, cols) {
        if (static_cast<size_t>(rows) * cols != entries.size())
            throw std::invalid_argument("Mat: entry count mismatch");
        size_t k = 0;
        for (const Rat& q : entries) a_[k++] = q;
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }
    static Mat diag(const std::vector<Rat>& d) {
        Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
        for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
        return m;
    }
    // Column vector helper.
    static Mat col(const std::vector<Rat>& v) {
        Mat m(static_cast<int>(v.size()), 1);
        for (size_t i = 0; i < v.size(); ++i) m.at(static_cast<int>(i), 0) = v[i];
        return m;
    }
    static Mat row(const std::vector<Rat>& v) {
        Mat m(1, static_cast<int>(v.size()));
        for (size_t i = 0; i < v.size(); ++i) m.at(0, static_cast<int>(i)) = v[i];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) {
        check(i, j);
        return a_[static_cast<size_t>(i) * cols_ + j];
    }
    const Rat& at(int i, int j) const {
        check(i, j);
        return a_[static_cast<size_t>(i) * cols_ + j];
    }

    bool same_shape(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    Mat operator+(const Mat& o) const {
        require_shape(o);
        Mat r = *this;
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
        return r;
    }
    Mat operator-(const Mat& o) const {
        require_shape(o);
        Mat r = *this;
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
        return r;
    }
    Mat operator-() const {
        Mat r = *this;
        for (Rat& q : r.a_) q = -q;
        return r;
    }
    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Mat*: inner dims");
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rat& x = at(i, k);
                if (is_zero(x)) continue;
                for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
            }
        return r;
    }
    friend Mat operator*(const Rat& s, const Mat& m) {
        Mat r = m;
        for (Rat& q : r.a_) q *= s;
        return r;
    }
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Rat trace() const {
        if (rows_ != cols_) throw std::invalid_argument("trace: not square");
        Rat t(0);
        for (int i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    bool is_zero_matrix() const {
        for (const Rat& q : a_)
            if (!is_zero(q)) return false;
        return true;
    }

    bool is_scalar_matrix(Rat* lambda = nullptr) const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (i != j && !is_zero(at(i, j))) return false;
        for (int i = 1; i < rows_; ++i)
            if (at(i, i) != at(0, 0)) return false;
        if (lambda) *lambda = rows_ > 0 ? at(0, 0) : Rat(0);
        return true;
    }

    bool is_upper_triangular() const {
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < std::min(i, cols_); ++j)
                if (!is_zero(at(i, j))) return false;
        return true;
    }

    // u unipotent: upper triangular with unit diagonal.
    bool is_upper_unitriangular() const {
        if (rows_ != cols_ || !is_upper_triangular()) return false;
        for (int i = 0; i < rows_; ++i)
            if (at(i, i) != 1) return false;
        return true;
    }

    Mat submat(int i0, int j0, int nrows, int ncols) const {
        Mat r(nrows, ncols);
        for (int i = 0; i < nrows; ++i)
            for (int j = 0; j < ncols; ++j) r.at(i, j) = at(i0 + i, j0 + j);
        return r;
    }
    Mat column(int j) const { return submat(0, j, rows_, 1); }
    Mat row_vec(int i) const { return submat(i, 0, 1, cols_); }

    static Mat hcat(const Mat& a, const Mat& b) {
        if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row mismatch");
        Mat r(a.rows(), a.cols() + b.cols());
        for (int i = 0; i < a.rows(); ++i) {
            for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
            for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
        }
        return r;
    }
    static Mat vcat(const Mat& a, const Mat& b) {
        if (a.cols() != b.cols()) throw std::invalid_argument("vcat: col mismatch");
        Mat r(a.rows() + b.rows(), a.cols());
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
        return r;
    }

  private:
    void check(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("Mat::at");
    }
    void require_shape(const Mat& o) const {
        if (!same_shape(o)) throw std::invalid_argument("Mat: shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> a_;
};

using Vec = Mat;  // column vector, cols() == 1

}  // namespace minorb
