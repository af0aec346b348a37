#include "minorb/bivector.hpp"

#include <stdexcept>

namespace minorb {

namespace {
int pair_partner(int i, int m) { return 2 * m + 1 - i; }
}  // namespace

Bivector Bivector::of_vectors(const Vec& v1, const Vec& v2) {
    if (v1.rows() != v2.rows() || v1.cols() != 1 || v2.cols() != 1)
        throw std::invalid_argument("of_vectors: shape");
    Bivector b(v1.rows() / 2);
    for (int i = 1; i <= v1.rows(); ++i)
        for (int j = i + 1; j <= v1.rows(); ++j)
            b.add_term(i, j, v1.at(i - 1, 0) * v2.at(j - 1, 0) - v1.at(j - 1, 0) * v2.at(i - 1, 0));
    return b;
}

Rat Bivector::coeff(int i, int j) const {
    if (i == j) return Rat(0);
    const bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = terms_.find({i, j});
    if (it == terms_.end()) return Rat(0);
    return flip ? Rat(-it->second) : it->second;
}

void Bivector::add_term(int i, int j, const Rat& c) {
    if (i < 1 || j < 1 || i > dim() || j > dim()) throw std::out_of_range("Bivector index");
    if (i == j || minorb::is_zero(c)) return;
    Rat v = c;
    if (i > j) {
        std::swap(i, j);
        v = -v;
    }
    auto [it, inserted] = terms_.try_emplace({i, j}, v);
    if (!inserted) {
        it->second += v;
        if (minorb::is_zero(it->second)) terms_.erase(it);
    }
}

Bivector Bivector::operator+(const Bivector& o) const {
    if (m_ != o.m_) throw std::invalid_argument("Bivector+: m mismatch");
    Bivector r = *this;
    for (const auto& [ij, c] : o.terms_) r.add_term(ij.first, ij.second, c);
    return r;
}

Bivector Bivector::operator-(const Bivector& o) const { return *this + (-o); }

Bivector Bivector::operator-() const {
    Bivector r(m_);
    for (const auto& [ij, c] : terms_) r.terms_.emplace(ij, -c);
    return r;
}

Bivector operator*(const Rat& s, const Bivector& b) {
    Bivector r(b.m_);
    if (is_zero(s)) return r;
    for (const auto& [ij, c] : b.terms_) r.terms_.emplace(ij, s * c);
    return r;
}

Json Bivector::to_json() const {
    Json j;
    j["m"] = m_;
    Json terms = Json::array();
    for (const auto& [ij, c] : terms_) terms.push_back(Json::array({ij.first, ij.second, rat_to_string(c)}));
    j["terms"] = std::move(terms);
    return j;
}

Bivector Bivector::from_json(const Json& j) {
    Bivector b(j.at("m").get<int>());
    for (const auto& t : j.at("terms")) b.add_term(t.at(0).get<int>(), t.at(1).get<int>(), rat_from_string(t.at(2).get<std::string>()));
    return b;
}

void FourVector::add_term(const std::array<int, 4>& idx, const Rat& c) {
    if (!(idx[0] < idx[1] && idx[1] < idx[2] && idx[2] < idx[3])) throw std::invalid_argument("FourVector: tuple not increasing");
    if (minorb::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (minorb::is_zero(it->second)) terms_.erase(it);
    }
}

Rat FourVector::coeff(const std::array<int, 4>& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat pairing(const Vec& v, const Vec& w) {
    if (v.rows() != w.rows() || v.cols() != 1 || w.cols() != 1) throw std::invalid_argument("pairing: dim mismatch");
    const int d = v.rows();
    Rat s(0);
    for (int i = 1; i <= d; ++i) s += v.at(i - 1, 0) * w.at(d - i, 0);
    return s;
}

Mat biv_to_matrix(const Bivector& a) {
    const int d = a.dim();
    Mat r(d, d);
    // e_i ^ e_j acts (adopted sign) as E_{i, 2m+1-j} - E_{j, 2m+1-i}.
    for (const auto& [ij, c] : a.terms()) {
        const int i = ij.first, j = ij.second;
        const Rat s = kOperatorSign * c;
        r.at(i - 1, pair_partner(j, a.m()) - 1) += s;
        r.at(j - 1, pair_partner(i, a.m()) - 1) -= s;
    }
    return r;
}

Bivector biv_from_matrix(const Mat& a, int m) {
    if (a.rows() != 2 * m || a.cols() != 2 * m) throw std::invalid_argument("biv_from_matrix: shape");
    Bivector b(m);
    for (int i = 1; i <= 2 * m; ++i)
        for (int j = i + 1; j <= 2 * m; ++j) b.add_term(i, j, Rat(kOperatorSign) * a.at(i - 1, pair_partner(j, m) - 1));
    return b;
}

Bivector bracket(const Bivector& a, const Bivector& b) {
    if (a.m() != b.m()) throw std::invalid_argument("bracket: m mismatch");
    Mat ma = biv_to_matrix(a), mb = biv_to_matrix(b);
    return biv_from_matrix(ma * mb - mb * ma, a.m());
}

Vec contract(const Bivector& a, int r) {
    Vec v(a.dim(), 1);
    for (const auto& [ij, c] : a.terms()) {
        if (ij.first == r) v.at(ij.second - 1, 0) += c;
        if (ij.second == r) v.at(ij.first - 1, 0) -= c;
    }
    return v;
}

FourVector wedge_square(const Bivector& a) {
    FourVector w(a.m());
    const auto& ts = a.terms();
    for (auto it1 = ts.begin(); it1 != ts.end(); ++it1)
        for (auto it2 = ts.begin(); it2 != ts.end(); ++it2) {
            const auto [i, j] = it1->first;
            const auto [k, l] = it2->first;
            if (i == k || i == l || j == k || j == l) continue;
            // Sort (i,j,k,l) and pick up the permutation sign of
            // e_i e_j e_k e_l -> increasing order.
            std::array<int, 4> idx{i, j, k, l};
            int sign = 1;
            for (int x = 0; x < 4; ++x)
                for (int y = x + 1; y < 4; ++y)
                    if (idx[x] > idx[y]) {
                        std::swap(idx[x], idx[y]);
                        sign = -sign;
                    }
            w.add_term(idx, sign * it1->second * it2->second);
        }
    return w;
}

bool is_decomposable(const Bivector& a) { return wedge_square(a).is_zero(); }

bool is_isotropic(const Bivector& a) {
    // Bilinearity makes basis contractions sufficient.
    const int d = a.dim();
    std::vector<Vec> c;
    c.reserve(d);
    for (int r = 1; r <= d; ++r) c.push_back(contract(a, r));
    for (int r = 0; r < d; ++r)
        for (int s = r; s < d; ++s)
            if (!is_zero(pairing(c[r], c[s]))) return false;
    return true;
}

bool in_min_closure(const Bivector& a) { return is_decomposable(a) && is_isotropic(a); }

std::optional<std::pair<Vec, Vec>> decompose(const Bivector& a) {
    if (a.is_zero()) return std::nullopt;
    const auto& [ij, c] = *a.terms().begin();
    // With lambda_{pq} != 0: (iota_p a) ^ (iota_q a) = lambda_{pq} a.
    Vec v1 = contract(a, ij.first);
    Vec v2 = (1 / c) * contract(a, ij.second);
    if (Bivector::of_vectors(v1, v2) != a) return std::nullopt;
    return std::make_pair(std::move(v1), std::move(v2));
}

Bivector tangent_at(const Bivector& point, const Bivector& dir) {
    auto f = decompose(point);
    if (!f) throw std::domain_error("tangent_at: point not decomposable");
    const auto& [v1, v2] = *f;
    Mat d = biv_to_matrix(dir);
    return Bivector::of_vectors(d * v1, v2) + Bivector::of_vectors(v1, d * v2);
}

Rat kks_lambda(const Bivector& x, const Bivector& y) {
    if (x.m() != y.m()) throw std::invalid_argument("kks_lambda: m mismatch");
    return (biv_to_matrix(x) * biv_to_matrix(y)).trace();
}

Mat exp_nilpotent(const Mat& n) {
    if (n.rows() != n.cols()) throw std::invalid_argument("exp_nilpotent: not square");
    Mat acc = Mat::identity(n.rows());
    Mat term = Mat::identity(n.rows());
    for (int k = 1; k <= n.rows(); ++k) {
        term = Rat(1, k) * (term * n);
        if (term.is_zero_matrix()) return acc;
        acc = acc + term;
    }
    throw std::domain_error("exp_nilpotent: matrix is not nilpotent");
}

Bivector apply_group(const Mat& g, const Bivector& a) {
    Bivector r(a.m());
    for (const auto& [ij, c] : a.terms()) {
        Vec gi = g.column(ij.first - 1);
        Vec gj = g.column(ij.second - 1);
        r = r + c * Bivector::of_vectors(gi, gj);
    }
    return r;
}

// Root vectors are defined in chevalley.cpp; declared here to keep
// the sampler self-contained.
Bivector chevalley_root_vector(int index, bool positive, int m);

Bivector sample_min_orbit(const GroupWord& word, int m) {
    Mat g = Mat::identity(2 * m);
    for (const auto& letter : word) {
        Bivector root = chevalley_root_vector(letter.root_index, letter.positive, m);
        g = g * exp_nilpotent(letter.t * biv_to_matrix(root));
    }
    return apply_group(g, Bivector::wedge(m, 1, 2));
}

Bivector random_orbit_point(Rng& rng, int m) {
    GroupWord word;
    const int len = static_cast<int>(rng.next_int(2, 4));
    for (int i = 0; i < len; ++i) {
        WordLetter l;
        l.root_index = static_cast<int>(rng.next_int(0, 11));
        l.positive = rng.next_int(0, 1) == 1;
        l.t = rng.next_nonzero_scalar(3);
        word.push_back(l);
    }
    return sample_min_orbit(word, m);
}

}  // namespace minorb
