#pragma once

#include <array>
#include <string>
#include <vector>

#include "minorb/bivector.hpp"

namespace minorb {

// A fixed Chevalley basis of so_8 = Lambda^2 C^8 in the bivector model, together
// with the D4 root bookkeeping. Roots are stored as coordinate vectors in
// the simple-root basis (a1, a2, a3, a4).

using RootCoeffs = std::array<int, 4>;  // root = sum a_i alpha_i

struct ChevalleyEntry {
    RootCoeffs root;      // positive root
    Bivector x;           // X_root
    Bivector y;           // Y_{-root}
    std::string name;     // e.g. "a1+2a2+a3+a4"
};

class ChevalleyTable {
  public:
    explicit ChevalleyTable(int m = 4);

    // 12 positive roots, simple roots first, in a fixed order.
    const std::vector<ChevalleyEntry>& entries() const { return entries_; }
    const Bivector& X(int index) const { return entries_.at(index).x; }
    const Bivector& Y(int index) const { return entries_.at(index).y; }
    const Bivector& H(int i) const { return h_.at(i - 1); }  // i in 1..4

    // Index of a positive root by coefficients; -1 if absent.
    int find_root(const RootCoeffs& r) const;

    // All 28 basis bivectors: X(0..11), Y(0..11), H(1..4).
    std::vector<Bivector> all() const;

    // D4 Cartan matrix entry <alpha_i, alpha_j^v>.
    static int cartan(int i, int j);

    int m() const { return m_; }

  private:
    int m_;
    std::vector<ChevalleyEntry> entries_;
    std::array<Bivector, 4> h_;
};

const ChevalleyTable& chevalley();

struct RelationFailure {
    std::string relation;
};

struct ChevalleyReport {
    int cases = 0;
    std::vector<RelationFailure> failures;
    bool ok() const { return failures.empty(); }
};

// Verifies, under the adopted sign convention:
//   [X_i, Y_i] = H_i for the four simple roots,
//   [H_i, X_j] = <a_j, a_i^v> X_j for all 16 pairs,
//   [X_a, X_b] in {0, +-X_{a+b}} for all positive-root pairs,
//   closure of the 28-element table under bracket with integer constants.
ChevalleyReport chevalley_relations_report();

}  // namespace minorb
