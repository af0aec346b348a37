#pragma once

#include <vector>

#include "minorb/bivector.hpp"

namespace minorb {

// Quadratic form on Lambda^2 C^{2m}, stored as a symmetric Gram matrix over
// the C(2m, 2) coordinate pairs (i < j). Evaluation at a bivector is
// coeff-vector^T * gram * coeff-vector. These are the targets of the
// Kostant maps Phi and Psi.
class QuadForm {
  public:
    explicit QuadForm(int m);

    int m() const { return m_; }
    int pairs() const { return npairs_; }

    // Index of the pair (i, j), i < j, in the fixed lexicographic order.
    int pair_index(int i, int j) const;

    Rat& gram(int p, int q) { return g_.at(p, q); }
    const Rat& gram(int p, int q) const { return g_.at(p, q); }

    Rat eval(const Bivector& a) const;

    // Flattened upper triangle (row-major, p <= q) as a coordinate vector in
    // the C(npairs + 1, 2)-dimensional space of quadratic forms.
    std::vector<Rat> coords() const;

  private:
    int m_;
    int npairs_;
    Mat g_;
};

// Phi(e_i^* ^ e_j^* ^ e_k^* ^ e_l^*): alpha |-> coefficient of the tuple in
// alpha ^ alpha. Indices must be strictly increasing in 1..2m.
QuadForm phi_kostant(int m, int i, int j, int k, int l);

// Psi(e_r^* . e_s^*): alpha |-> (iota_{e_r^*} alpha, iota_{e_s^*} alpha),
// 1 <= r <= s <= 2m.
QuadForm psi_kostant(int m, int r, int s);

// The squared highest weight covector (e_1^* ^ e_2^*)^2: alpha |-> coeff_{12}(alpha)^2.
QuadForm highest_weight_square(int m);

struct KostantRankReport {
    int rank_joint = 0;     // rank of the 70 Phi-images and 36 Psi-images
    int rank_with_hwv = 0;  // plus (e_1^* ^ e_2^*)^2
    int dim_v2psi = 0;      // Weyl dimension formula value m/3 (4m^3 - 7m - 3)
    int dim_dec = 0;        // C(2m, 4)
    int dim_iso = 0;        // C(2m + 1, 2)
    int dim_sym2 = 0;       // C(C(2m,2) + 1, 2)
};

// Exact ranks of the stacked Phi/Psi images inside the 406-dimensional space
// of quadratic forms (m = 4).
KostantRankReport kostant_rank_report(int m = 4);

}  // namespace minorb
