#pragma once

#include <optional>
#include <vector>

#include "minorb/json_io.hpp"
#include "minorb/linalg.hpp"
#include "minorb/rng.hpp"

namespace minorb {

// Representation of the type-A double quiver
//   C <-> C^2 <-> ... <-> C^n,
// alpha_k : C^k -> C^{k+1} and beta_k : C^{k+1} -> C^k for k = 1..n-1
// (alpha_0 = beta_0 = 0 implicitly).
struct QuiverPoint {
    int n = 0;
    std::vector<Mat> alpha;  // alpha[k-1] is (k+1) x k
    std::vector<Mat> beta;   // beta[k-1] is k x (k+1)

    static QuiverPoint zero(int n);
    void validate() const;  // throws on any shape violation

    QuiverPoint operator+(const QuiverPoint& o) const;
    QuiverPoint operator-(const QuiverPoint& o) const;
    friend QuiverPoint operator*(const Rat& s, const QuiverPoint& p);
    bool operator==(const QuiverPoint& o) const { return n == o.n && alpha == o.alpha && beta == o.beta; }

    Json to_json() const;
    static QuiverPoint from_json(const Json& j);
};

// (g_2, ..., g_{n-1}) in H = prod SL_k; g_1 = g_n = Id for the H-action.
struct HElement {
    int n = 0;
    std::vector<Mat> gs;  // gs[i] is (i+2) x (i+2), det 1, for k = 2..n-1

    void validate() const;  // shape + det 1
};

// Traceless parts of alpha_{k-1} beta_{k-1} - beta_k alpha_k for k = 2..n-1
// (the sl_k^* components of the moment map under the trace pairing).
std::vector<Mat> moment_map(const QuiverPoint& p);

// The lambda-vector when each beta_k alpha_k - alpha_{k-1} beta_{k-1}
// is an exact scalar matrix; nullopt (NotInN) otherwise.
std::optional<std::vector<Rat>> in_N(const QuiverPoint& p);

// All beta_k surjective (rank k).
bool is_surjective_part(const QuiverPoint& p);

// Canonical cotangent form through the trace pairing:
// sum_k Tr(q.beta_k p.alpha_k) - Tr(p.beta_k q.alpha_k).
Rat symplectic_form(const QuiverPoint& p, const QuiverPoint& q);

// alpha_k |-> g_{k+1} alpha_k g_k^{-1}, beta_k |-> g_k beta_k g_{k+1}^{-1}.
QuiverPoint h_act(const HElement& h, const QuiverPoint& p);

// Random H element with small-integer unipotent-times-diagonal factors.
HElement random_h(Rng& rng, int n);

// Draws random injective alpha's and solves for beta's so the scalar
// condition beta_k alpha_k - alpha_{k-1} beta_{k-1} = lambda_k Id holds
// with random lambda's; the result always satisfies in_N, and the beta's
// are surjective (resampled otherwise).
QuiverPoint sample_N(int n, Rng& rng);

// Flag-dimension bound by enumeration: over all 0 = m_0 <= m_1 <= ... <= m_n = n with
// m_k <= k, the flag-dimension sum is at most n(n-1)/2 with equality exactly
// at m_k = k. Requires n <= 12.
bool flag_inequality_check(int n);

}  // namespace minorb
