#include "minorb/chevalley.hpp"

#include <sstream>
#include <stdexcept>

namespace minorb {

namespace {

std::string root_name(const RootCoeffs& r) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (r[i] == 0) continue;
        if (!first) os << "+";
        if (r[i] != 1) os << r[i];
        os << "a" << (i + 1);
        first = false;
    }
    return os.str();
}

}  // namespace

ChevalleyTable::ChevalleyTable(int m) : m_(m) {
    if (m != 4) throw std::invalid_argument("ChevalleyTable: table is for so_8 (m = 4)");
    auto W = [m](int i, int j) { return Bivector::wedge(m, i, j); };
    auto add = [&](RootCoeffs r, Bivector x, Bivector y) {
        entries_.push_back({r, std::move(x), std::move(y), root_name(r)});
    };
    // The fixed basis.
    add({1, 0, 0, 0}, W(1, 7), W(2, 8));
    add({0, 1, 0, 0}, W(2, 6), W(3, 7));
    add({0, 0, 1, 0}, W(3, 5), W(4, 6));
    add({0, 0, 0, 1}, W(3, 4), W(5, 6));
    add({1, 1, 0, 0}, W(1, 6), W(3, 8));
    add({0, 1, 1, 0}, W(2, 5), W(4, 7));
    add({0, 1, 0, 1}, W(2, 4), W(5, 7));
    add({0, 1, 1, 1}, W(2, 3), W(6, 7));
    add({1, 1, 0, 1}, W(1, 4), W(5, 8));
    add({1, 1, 1, 0}, W(1, 5), W(4, 8));
    add({1, 1, 1, 1}, W(1, 3), W(6, 8));
    add({1, 2, 1, 1}, W(1, 2), W(7, 8));

    h_[0] = W(1, 8) - W(2, 7);
    h_[1] = W(2, 7) - W(3, 6);
    h_[2] = W(3, 6) - W(4, 5);
    h_[3] = W(3, 6) + W(4, 5);
}

int ChevalleyTable::find_root(const RootCoeffs& r) const {
    for (size_t k = 0; k < entries_.size(); ++k)
        if (entries_[k].root == r) return static_cast<int>(k);
    return -1;
}

std::vector<Bivector> ChevalleyTable::all() const {
    std::vector<Bivector> v;
    for (const auto& e : entries_) v.push_back(e.x);
    for (const auto& e : entries_) v.push_back(e.y);
    for (const auto& h : h_) v.push_back(h);
    return v;
}

int ChevalleyTable::cartan(int i, int j) {
    // Node 2 is the center of the D4 diagram.
    static const int C[4][4] = {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
    return C[i - 1][j - 1];
}

const ChevalleyTable& chevalley() {
    static const ChevalleyTable table(4);
    return table;
}

// Used by the orbit sampler in bivector.cpp.
Bivector chevalley_root_vector(int index, bool positive, int m) {
    if (m != 4) throw std::invalid_argument("chevalley_root_vector: m must be 4");
    const auto& entries = chevalley().entries();
    if (index < 0 || index >= static_cast<int>(entries.size())) throw std::out_of_range("root index");
    return positive ? entries[index].x : entries[index].y;
}

ChevalleyReport chevalley_relations_report() {
    const auto& T = chevalley();
    ChevalleyReport rep;
    auto fail = [&rep](const std::string& what) { rep.failures.push_back({what}); };

    // [X_i, Y_i] = H_i on the simple roots (they come first in the table).
    for (int i = 0; i < 4; ++i) {
        ++rep.cases;
        if (bracket(T.X(i), T.Y(i)) != T.H(i + 1)) fail("[X_a" + std::to_string(i + 1) + ", Y_-a" + std::to_string(i + 1) + "] != H");
    }

    // Cartan integers on all 16 (H_i, X_j) pairs.
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            ++rep.cases;
            Bivector expect = Rat(ChevalleyTable::cartan(j, i)) * T.X(j - 1);
            if (bracket(T.H(i), T.X(j - 1)) != expect)
                fail("[H_a" + std::to_string(i) + ", X_a" + std::to_string(j) + "] != <a_j, a_i^v> X");
        }

    // [X_a, X_b] is 0 or +-X_{a+b} for positive-root pairs (simply laced).
    const auto& E = T.entries();
    for (size_t a = 0; a < E.size(); ++a)
        for (size_t b = a + 1; b < E.size(); ++b) {
            ++rep.cases;
            Bivector br = bracket(E[a].x, E[b].x);
            RootCoeffs sum;
            for (int k = 0; k < 4; ++k) sum[k] = E[a].root[k] + E[b].root[k];
            int idx = T.find_root(sum);
            bool ok;
            if (idx < 0)
                ok = br.is_zero();
            else
                ok = br == E[idx].x || br == -E[idx].x;
            if (!ok) fail("[X_" + E[a].name + ", X_" + E[b].name + "] not in {0, +-X_sum}");
        }

    // Closure: every bracket of basis elements lies in the integer span of
    // the table. The 28 bivectors form a basis of so_8, so we check that the
    // exact coordinates against that basis are integers.
    std::vector<Bivector> basis = T.all();
    Mat B(28, 28);
    auto flatten = [](const Bivector& v, Mat& out, int col) {
        int r = 0;
        for (int i = 1; i <= 8; ++i)
            for (int j = i + 1; j <= 8; ++j) out.at(r++, col) = v.coeff(i, j);
    };
    Mat coords(28, 28);
    for (int k = 0; k < 28; ++k) flatten(basis[k], coords, k);
    for (int a = 0; a < 28; ++a)
        for (int b = a + 1; b < 28; ++b) {
            ++rep.cases;
            Bivector br = bracket(basis[a], basis[b]);
            Mat rhs(28, 1);
            flatten(br, rhs, 0);
            auto x = solve(coords, rhs);
            if (!x) {
                fail("bracket outside span of table");
                continue;
            }
            bool integral = true;
            for (int r = 0; r < 28; ++r)
                if (x->at(r, 0).get_den() != 1) integral = false;
            if (!integral) fail("non-integral structure constant at pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    return rep;
}

}  // namespace minorb
