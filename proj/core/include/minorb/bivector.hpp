#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "minorb/json_io.hpp"
#include "minorb/linalg.hpp"
#include "minorb/matrix.hpp"
#include "minorb/rng.hpp"

namespace minorb {

// The split orthogonal space C^{2m} with (e_i, e_j) = delta_{i, 2m+1-j},
// and the bivector model Lambda^2 C^{2m} = so_{2m}.
//
// Sign convention: the operator of v1^v2 is taken as
//     u |-> (v2,u) v1 - (v1,u) v2.
// With this choice the built-in root-vector table is a genuine Chevalley
// basis: [X_a, Y_{-a}] = +H_a and [H_a, X_a] = +2X_a. kOperatorSign records
// the choice; flipping it negates every operator and every bracket.
inline constexpr int kOperatorSign = +1;

// Element of Lambda^2 C^{2m}: coefficients on e_i ^ e_j, 1 <= i < j <= 2m.
// Zero coefficients are never stored.
class Bivector {
  public:
    Bivector() = default;
    explicit Bivector(int m) : m_(m) {}

    static Bivector wedge(int m, int i, int j, Rat coeff = Rat(1)) {
        Bivector b(m);
        b.add_term(i, j, coeff);
        return b;
    }
    // v1 ^ v2 for explicit column vectors of dimension 2m.
    static Bivector of_vectors(const Vec& v1, const Vec& v2);

    int m() const { return m_; }
    int dim() const { return 2 * m_; }

    // Signed coefficient lookup: coeff(j, i) = -coeff(i, j).
    Rat coeff(int i, int j) const;
    void add_term(int i, int j, const Rat& c);

    const std::map<std::pair<int, int>, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Bivector operator+(const Bivector& o) const;
    Bivector operator-(const Bivector& o) const;
    Bivector operator-() const;
    friend Bivector operator*(const Rat& s, const Bivector& b);
    bool operator==(const Bivector& o) const { return m_ == o.m_ && terms_ == o.terms_; }
    bool operator!=(const Bivector& o) const { return !(*this == o); }

    Json to_json() const;
    static Bivector from_json(const Json& j);

  private:
    int m_ = 4;
    std::map<std::pair<int, int>, Rat> terms_;
};

// Element of Lambda^4 C^{2m}, strictly increasing 4-tuples only.
class FourVector {
  public:
    FourVector() = default;
    explicit FourVector(int m) : m_(m) {}

    int m() const { return m_; }
    void add_term(const std::array<int, 4>& idx, const Rat& c);
    Rat coeff(const std::array<int, 4>& idx) const;
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::array<int, 4>, Rat>& terms() const { return terms_; }

  private:
    int m_ = 4;
    std::map<std::array<int, 4>, Rat> terms_;
};

// (v, w) = sum_i v_i w_{2m+1-i}; throws on dimension mismatch.
Rat pairing(const Vec& v, const Vec& w);

// The linear operator of a bivector under the adopted sign convention.
// The result is skew for the pairing: (Au, w) + (u, Aw) = 0.
Mat biv_to_matrix(const Bivector& a);

// Inverse of biv_to_matrix on pairing-skew matrices.
Bivector biv_from_matrix(const Mat& a, int m);

// Lie bracket, transported through biv_to_matrix (matrix commutator).
Bivector bracket(const Bivector& a, const Bivector& b);

// Contraction iota_{e_r^*} a as a column vector.
Vec contract(const Bivector& a, int r);

FourVector wedge_square(const Bivector& a);
bool is_decomposable(const Bivector& a);
bool is_isotropic(const Bivector& a);

// Closure of the minimal nilpotent orbit: decomposable and isotropic.
bool in_min_closure(const Bivector& a);

// Recover an explicit factorization v1 ^ v2 of a nonzero decomposable
// bivector; nullopt when not decomposable (or zero).
std::optional<std::pair<Vec, Vec>> decompose(const Bivector& a);

// Tangent vector phi_dir(v1) ^ v2 + v1 ^ phi_dir(v2) at a decomposable
// point, extended bilinearly in dir. Throws std::domain_error when the
// point is not decomposable or is zero.
Bivector tangent_at(const Bivector& point, const Bivector& dir);

// lambda^KKS pairing via the trace form: Tr(phi_x phi_y).
Rat kks_lambda(const Bivector& x, const Bivector& y);

// One letter of an orbit-sampling word: the root vector at `index` in the
// Chevalley-table order (0..11), positive = X, negative = Y, flow time t.
struct WordLetter {
    int root_index = 0;
    bool positive = true;
    Rat t;
};
using GroupWord = std::vector<WordLetter>;

// Applies prod exp(t * ad of root vector) to e1 ^ e2. Exponentials of the
// nilpotent root-vector matrices are exact finite sums, so the result is an
// exact point of the orbit closure. Throws std::out_of_range on a bad index.
Bivector sample_min_orbit(const GroupWord& word, int m = 4);

// Random exact orbit point: exp-action of a short random word on e1 ^ e2.
Bivector random_orbit_point(Rng& rng, int m = 4);

// Exact exp of a nilpotent matrix (throws if the power series fails to
// terminate within dim steps).
Mat exp_nilpotent(const Mat& n);

// Lambda^2 g action: v1 ^ v2 |-> g v1 ^ g v2, extended linearly.
Bivector apply_group(const Mat& g, const Bivector& a);

}  // namespace minorb
