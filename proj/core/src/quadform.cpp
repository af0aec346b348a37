#include "minorb/quadform.hpp"

#include <array>
#include <stdexcept>

namespace minorb {

QuadForm::QuadForm(int m) : m_(m), npairs_(m * (2 * m - 1)), g_(Mat(npairs_, npairs_)) {}

int QuadForm::pair_index(int i, int j) const {
    if (!(1 <= i && i < j && j <= 2 * m_)) throw std::out_of_range("pair_index");
    // Lexicographic: (1,2), (1,3), ..., (1,2m), (2,3), ...
    int before = (i - 1) * (2 * m_) - (i - 1) * i / 2;
    return before + (j - i - 1);
}

Rat QuadForm::eval(const Bivector& a) const {
    if (a.m() != m_) throw std::invalid_argument("QuadForm::eval: m mismatch");
    // Only nonzero coefficients matter.
    Rat acc(0);
    for (const auto& [ij1, c1] : a.terms()) {
        int p = pair_index(ij1.first, ij1.second);
        for (const auto& [ij2, c2] : a.terms()) {
            int q = pair_index(ij2.first, ij2.second);
            const Rat& g = g_.at(p, q);
            if (!is_zero(g)) acc += c1 * c2 * g;
        }
    }
    return acc;
}

std::vector<Rat> QuadForm::coords() const {
    std::vector<Rat> v;
    v.reserve(static_cast<size_t>(npairs_) * (npairs_ + 1) / 2);
    for (int p = 0; p < npairs_; ++p)
        for (int q = p; q < npairs_; ++q) v.push_back(g_.at(p, q));
    return v;
}

QuadForm phi_kostant(int m, int i, int j, int k, int l) {
    if (!(1 <= i && i < j && j < k && k < l && l <= 2 * m)) throw std::out_of_range("phi_kostant: bad 4-tuple");
    QuadForm q(m);
    // alpha ^ alpha picks up 2(l_ij l_kl - l_ik l_jl + l_il l_jk).
    auto put = [&q](int a, int b, int c, int d, int sign) {
        int p1 = q.pair_index(a, b), p2 = q.pair_index(c, d);
        q.gram(p1, p2) += sign;
        q.gram(p2, p1) += sign;
    };
    put(i, j, k, l, 1);
    put(i, k, j, l, -1);
    put(i, l, j, k, 1);
    return q;
}

QuadForm psi_kostant(int m, int r, int s) {
    if (!(1 <= r && r <= s && s <= 2 * m)) throw std::out_of_range("psi_kostant: bad indices");
    QuadForm q(m);
    const int d = 2 * m;
    // (iota_r alpha, iota_s alpha) expanded over coefficients: iota_r alpha
    // has e_t-component sgn * l_{rt}, paired against e_{2m+1-t}.
    auto coeff_of = [d](int r0, int t, int& i, int& j, int& sgn) {
        // lambda_{r0 t} with orientation: returns the stored pair and sign.
        if (r0 < t) {
            i = r0;
            j = t;
            sgn = 1;
        } else {
            i = t;
            j = r0;
            sgn = -1;
        }
    };
    for (int t = 1; t <= d; ++t) {
        if (t == r) continue;
        int tb = d + 1 - t;
        if (tb == s) continue;
        int i1, j1, s1, i2, j2, s2;
        coeff_of(r, t, i1, j1, s1);
        coeff_of(s, tb, i2, j2, s2);
        int p1 = q.pair_index(i1, j1), p2 = q.pair_index(i2, j2);
        // Contribution l_{r,t} l_{s, 2m+1-t}; halve on the symmetric split.
        Rat half(s1 * s2, 2);
        q.gram(p1, p2) += half;
        q.gram(p2, p1) += half;
    }
    return q;
}

QuadForm highest_weight_square(int m) {
    QuadForm q(m);
    int p = q.pair_index(1, 2);
    q.gram(p, p) = 1;
    return q;
}

KostantRankReport kostant_rank_report(int m) {
    KostantRankReport rep;
    rep.dim_v2psi = m * (4 * m * m * m - 7 * m - 3) / 3;
    auto binom = [](int n, int k) {
        long r = 1;
        for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
        return static_cast<int>(r);
    };
    rep.dim_dec = binom(2 * m, 4);
    rep.dim_iso = binom(2 * m + 1, 2);
    rep.dim_sym2 = binom(m * (2 * m - 1) + 1, 2);

    std::vector<std::vector<Rat>> rows;
    for (int i = 1; i <= 2 * m; ++i)
        for (int j = i + 1; j <= 2 * m; ++j)
            for (int k = j + 1; k <= 2 * m; ++k)
                for (int l = k + 1; l <= 2 * m; ++l) rows.push_back(phi_kostant(m, i, j, k, l).coords());
    for (int r = 1; r <= 2 * m; ++r)
        for (int s = r; s <= 2 * m; ++s) rows.push_back(psi_kostant(m, r, s).coords());

    const int ncols = static_cast<int>(rows.front().size());
    Mat stacked(static_cast<int>(rows.size()), ncols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < ncols; ++j) stacked.at(static_cast<int>(i), j) = rows[i][j];
    rep.rank_joint = rank(stacked);

    std::vector<Rat> hw = highest_weight_square(m).coords();
    Mat with_hwv(stacked.rows() + 1, ncols);
    for (int i = 0; i < stacked.rows(); ++i)
        for (int j = 0; j < ncols; ++j) with_hwv.at(i, j) = stacked.at(i, j);
    for (int j = 0; j < ncols; ++j) with_hwv.at(stacked.rows(), j) = hw[j];
    rep.rank_with_hwv = rank(with_hwv);
    return rep;
}

}  // namespace minorb
