#include "minorb/quiver.hpp"

#include <functional>
#include <stdexcept>

namespace minorb {

QuiverPoint QuiverPoint::zero(int n) {
    QuiverPoint p;
    p.n = n;
    for (int k = 1; k <= n - 1; ++k) {
        p.alpha.push_back(Mat::zero(k + 1, k));
        p.beta.push_back(Mat::zero(k, k + 1));
    }
    return p;
}

void QuiverPoint::validate() const {
    if (n < 2) throw std::invalid_argument("QuiverPoint: n must be >= 2");
    if (static_cast<int>(alpha.size()) != n - 1 || static_cast<int>(beta.size()) != n - 1)
        throw std::invalid_argument("QuiverPoint: ladder length");
    for (int k = 1; k <= n - 1; ++k) {
        if (alpha[k - 1].rows() != k + 1 || alpha[k - 1].cols() != k) throw std::invalid_argument("QuiverPoint: alpha shape");
        if (beta[k - 1].rows() != k || beta[k - 1].cols() != k + 1) throw std::invalid_argument("QuiverPoint: beta shape");
    }
}

QuiverPoint QuiverPoint::operator+(const QuiverPoint& o) const {
    if (n != o.n) throw std::invalid_argument("QuiverPoint+: rank mismatch");
    QuiverPoint r = *this;
    for (int k = 0; k < n - 1; ++k) {
        r.alpha[k] = r.alpha[k] + o.alpha[k];
        r.beta[k] = r.beta[k] + o.beta[k];
    }
    return r;
}

QuiverPoint QuiverPoint::operator-(const QuiverPoint& o) const { return *this + Rat(-1) * o; }

QuiverPoint operator*(const Rat& s, const QuiverPoint& p) {
    QuiverPoint r = p;
    for (auto& m : r.alpha) m = s * m;
    for (auto& m : r.beta) m = s * m;
    return r;
}

Json QuiverPoint::to_json() const {
    Json j;
    j["n"] = n;
    Json as = Json::array(), bs = Json::array();
    for (const auto& m : alpha) as.push_back(minorb::to_json(m));
    for (const auto& m : beta) bs.push_back(minorb::to_json(m));
    j["alpha"] = std::move(as);
    j["beta"] = std::move(bs);
    return j;
}

QuiverPoint QuiverPoint::from_json(const Json& j) {
    QuiverPoint p;
    p.n = j.at("n").get<int>();
    for (const auto& m : j.at("alpha")) p.alpha.push_back(mat_from_json(m));
    for (const auto& m : j.at("beta")) p.beta.push_back(mat_from_json(m));
    p.validate();
    return p;
}

void HElement::validate() const {
    if (static_cast<int>(gs.size()) != std::max(0, n - 2)) throw std::invalid_argument("HElement: length");
    for (size_t i = 0; i < gs.size(); ++i) {
        int k = static_cast<int>(i) + 2;
        if (gs[i].rows() != k || gs[i].cols() != k) throw std::invalid_argument("HElement: shape");
        if (det(gs[i]) != 1) throw std::invalid_argument("HElement: det != 1");
    }
}

std::vector<Mat> moment_map(const QuiverPoint& p) {
    p.validate();
    std::vector<Mat> out;
    for (int k = 2; k <= p.n - 1; ++k) {
        Mat d = p.alpha[k - 2] * p.beta[k - 2] - p.beta[k - 1] * p.alpha[k - 1];
        Rat tr = d.trace() / k;
        for (int i = 0; i < k; ++i) d.at(i, i) -= tr;
        out.push_back(std::move(d));
    }
    return out;
}

std::optional<std::vector<Rat>> in_N(const QuiverPoint& p) {
    p.validate();
    std::vector<Rat> lambdas;
    for (int k = 1; k <= p.n - 1; ++k) {
        Mat d = p.beta[k - 1] * p.alpha[k - 1];
        if (k >= 2) d = d - p.alpha[k - 2] * p.beta[k - 2];
        Rat lam;
        if (!d.is_scalar_matrix(&lam)) return std::nullopt;
        lambdas.push_back(lam);
    }
    return lambdas;
}

bool is_surjective_part(const QuiverPoint& p) {
    p.validate();
    for (int k = 1; k <= p.n - 1; ++k)
        if (rank(p.beta[k - 1]) != k) return false;
    return true;
}

Rat symplectic_form(const QuiverPoint& p, const QuiverPoint& q) {
    if (p.n != q.n) throw std::invalid_argument("symplectic_form: rank mismatch");
    Rat s(0);
    for (int k = 0; k < p.n - 1; ++k) s += (q.beta[k] * p.alpha[k]).trace() - (p.beta[k] * q.alpha[k]).trace();
    return s;
}

QuiverPoint h_act(const HElement& h, const QuiverPoint& p) {
    h.validate();
    p.validate();
    if (h.n != p.n) throw std::invalid_argument("h_act: rank mismatch");
    auto g = [&](int k) -> Mat {  // g_k with g_1 = g_n = Id
        if (k <= 1 || k >= p.n) return Mat::identity(k);
        return h.gs[k - 2];
    };
    QuiverPoint r = p;
    for (int k = 1; k <= p.n - 1; ++k) {
        Mat gk_inv = *inverse(g(k));
        Mat gk1_inv = *inverse(g(k + 1));
        r.alpha[k - 1] = g(k + 1) * p.alpha[k - 1] * gk_inv;
        r.beta[k - 1] = g(k) * p.beta[k - 1] * gk1_inv;
    }
    return r;
}

HElement random_h(Rng& rng, int n) {
    HElement h;
    h.n = n;
    for (int k = 2; k <= n - 1; ++k) {
        // Unipotent upper times unipotent lower has determinant 1 exactly.
        Mat up = Mat::identity(k), lo = Mat::identity(k);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                up.at(i, j) = rng.next_scalar(2);
                lo.at(j, i) = rng.next_scalar(2);
            }
        h.gs.push_back(up * lo);
    }
    return h;
}

QuiverPoint sample_N(int n, Rng& rng) {
    if (n < 2) throw std::invalid_argument("sample_N: n must be >= 2");
    for (;;) {
        QuiverPoint p = QuiverPoint::zero(n);
        bool ok = true;
        Mat prev;  // alpha_{k-1} beta_{k-1}, shape k x k at step k
        for (int k = 1; k <= n - 1 && ok; ++k) {
            Mat a(k + 1, k);
            for (int tries = 0;; ++tries) {
                a = rng.next_matrix(k + 1, k, 3);
                if (rank(a) == k) break;
                if (tries > 64) throw std::logic_error("sample_N: cannot draw injective alpha");
            }
            p.alpha[k - 1] = a;
            Mat rhs = Mat::identity(k);
            Rat lam = rng.next_scalar(3);
            rhs = lam * rhs;
            if (k >= 2) rhs = rhs + prev;
            // beta_k alpha_k = rhs: complete alpha to an invertible square
            // matrix and read off a particular solution with last column 0.
            Mat completed = a;
            for (int e = 0; e < k + 1 && completed.cols() < k + 1; ++e) {
                Mat col = Mat::zero(k + 1, 1);
                col.at(e, 0) = 1;
                Mat trial = Mat::hcat(completed, col);
                if (rank(trial) == trial.cols()) completed = trial;
            }
            Mat inv = *inverse(completed);
            Mat b = Mat::hcat(rhs, Mat::zero(k, 1)) * inv;
            p.beta[k - 1] = b;
            if (rank(b) != k) ok = false;  // resample the whole point
            prev = p.alpha[k - 1] * p.beta[k - 1];
        }
        if (!ok) continue;
        if (!in_N(p)) throw std::logic_error("sample_N: construction left N");
        return p;
    }
}

bool flag_inequality_check(int n) {
    if (n > 12) throw std::invalid_argument("flag_inequality_check: enumeration bound is n <= 12");
    if (n < 1) return true;
    const int target = n * (n - 1) / 2;
    bool all_ok = true;
    std::vector<int> m(n + 1);
    m[0] = 0;
    m[n] = n;
    std::function<void(int)> walk = [&](int k) {
        if (!all_ok) return;
        if (k == n) {
            if (m[n - 1] > m[n]) return;
            int sum = 0;
            for (int i = 1; i <= n - 1; ++i) sum += m[i] * (m[i + 1] - m[i]);
            bool is_complete_flag = true;
            for (int i = 1; i <= n - 1; ++i)
                if (m[i] != i) is_complete_flag = false;
            if (sum > target) all_ok = false;
            if (sum == target && !is_complete_flag) all_ok = false;
            if (is_complete_flag && sum != target) all_ok = false;
            return;
        }
        for (int v = m[k - 1]; v <= k; ++v) {
            m[k] = v;
            walk(k + 1);
        }
    };
    if (n == 1) return true;  // vacuous
    walk(1);
    return all_ok;
}

}  // namespace minorb
