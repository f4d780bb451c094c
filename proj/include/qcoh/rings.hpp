#pragma once

// Constructors for the concrete quantum rings the analysis pipeline consumes:
// h-power models of Fano complete intersections, the two-row Grassmannians
// with their hook-reduction product, and partially specified coadjoint rings
// (unit row plus degree-two row) ready for associativity completion.

#include "qcoh/qring.hpp"
#include "qcoh/rootsys.hpp"

#include <string>
#include <vector>

namespace qcoh {

// Q[h,q] / (h^(n+1) - q): n-dimensional projective space.
QRing projective_space(int n);

// Admissibility data for the h-power model of a complete intersection of
// multidegree (d_1..d_r) and dimension n inside P^(n+r).
struct CICertification {
    bool admissible = false;
    std::string reason;   // empty when admissible
    int c1 = 0;           // n + r + 1 - sum d_i
    int excess = 0;       // s = sum (d_i - 1)
    Int scale;            // D = prod d_i^(d_i)
};
CICertification certify_complete_intersection(int n, const std::vector<int>& degrees);

// Q[h,q] / (h^(n+1) - D q h^s); throws when not admissible.
QRing complete_intersection(int n, const std::vector<int>& degrees);

// Gr(2,n): basis of two-row shapes in the 2 x (n-2) box, product by the
// two-row Littlewood-Richardson rule with n-hook reduction.
QRing grassmannian2(int n);

// Two-row shape helpers exposed for tests.
struct TwoRowTerm {
    int a, b;   // resulting shape
    int d;      // q power
    int sign;   // +1 / -1 before cancellation
};
std::vector<TwoRowTerm> two_row_product(int n, int a, int b, int c, int dd);

// Partially specified coadjoint ring: basis indexed by the short roots,
// products filled in only for the unit row and the degree-two row.
struct CoadjointSeed {
    QRing partial;
    std::vector<int> dual; // Poincare involution on basis indices
    CoadjointRootData roots;
};
// Accepts "C3", "C4", ... or "F4".
CoadjointSeed coadjoint_chevalley(const std::string& label);

// Multiplication by the degree-two class at q = 1, as a dim x dim matrix over
// the class basis. Needs only the degree-two row, so it works on seeds.
Mat degree_two_operator_q1(const QRing& r);

} // namespace qcoh
