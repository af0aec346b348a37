#include "minorb/linalg.hpp"

namespace minorb {

Mat rref(const Mat& m, std::vector<int>* pivots) {
    Mat r = m;
    if (pivots) pivots->clear();
    int lead = 0;
    for (int col = 0; col < r.cols() && lead < r.rows(); ++col) {
        int piv = -1;
        for (int i = lead; i < r.rows(); ++i)
            if (!is_zero(r.at(i, col))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != lead)
            for (int j = 0; j < r.cols(); ++j) std::swap(r.at(piv, j), r.at(lead, j));
        Rat inv = 1 / r.at(lead, col);
        for (int j = col; j < r.cols(); ++j) r.at(lead, j) *= inv;
        for (int i = 0; i < r.rows(); ++i) {
            if (i == lead || is_zero(r.at(i, col))) continue;
            Rat f = r.at(i, col);
            for (int j = col; j < r.cols(); ++j) r.at(i, j) -= f * r.at(lead, j);
        }
        if (pivots) pivots->push_back(col);
        ++lead;
    }
    return r;
}

int rank(const Mat& m) {
    std::vector<int> pivots;
    rref(m, &pivots);
    return static_cast<int>(pivots.size());
}

Rat det(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
    Mat r = m;
    const int n = r.rows();
    Rat d(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!is_zero(r.at(i, col))) {
                piv = i;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(r.at(piv, j), r.at(col, j));
            d = -d;
        }
        d *= r.at(col, col);
        Rat inv = 1 / r.at(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (is_zero(r.at(i, col))) continue;
            Rat f = r.at(i, col) * inv;
            for (int j = col; j < n; ++j) r.at(i, j) -= f * r.at(col, j);
        }
    }
    return d;
}

std::vector<Vec> kernel_basis(const Mat& m) {
    std::vector<int> pivots;
    Mat r = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols(), 1);
        v.at(free, 0) = 1;
        for (size_t k = 0; k < pivots.size(); ++k) v.at(pivots[k], 0) = -r.at(static_cast<int>(k), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
    Mat aug = Mat::hcat(a, b);
    std::vector<int> pivots;
    Mat r = rref(aug, &pivots);
    // Inconsistent iff some pivot lands in the b-block.
    for (int c : pivots)
        if (c >= a.cols()) return std::nullopt;

    Mat x(a.cols(), b.cols());
    for (size_t k = 0; k < pivots.size(); ++k)
        for (int j = 0; j < b.cols(); ++j) x.at(pivots[k], j) = r.at(static_cast<int>(k), a.cols() + j);
    return x;
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    // For singular m the augmented system [m | I] is inconsistent, so solve
    // already reports nullopt.
    return solve(m, Mat::identity(m.rows()));
}

}  // namespace minorb
