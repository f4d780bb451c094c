#pragma once

// Completes a partially known graded multiplication table to a full ring.
//
// Structure constants are stored triple-symmetrically: the coefficient of
// q^d sigma_k in sigma_i * sigma_j depends only on the unordered triple
// {i, j, dual(k)} (and d, which the grading determines from the triple).
// Every associativity relation (p, i, j) with p a fully known row is linear
// in these constants, so a pass of constraint propagation followed by dense
// elimination either pins the whole table, exhibits explicit freedom, or
// reports a contradiction.

#include "qcoh/qring.hpp"

#include <string>
#include <vector>

namespace qcoh {

enum class CompletionStatus { Unique, Underdetermined, Inconsistent };

struct CompletionResult {
    CompletionStatus status = CompletionStatus::Inconsistent;
    int degrees_of_freedom = 0; // set when Underdetermined
    QRing ring;                 // set when Unique
    std::string detail;
};

// `partial` must contain at least the full unit row; every other fully
// present row acts as a pivot generating associativity constraints.
// `dual[k]` is the basis index pairing with k (degree-complementary).
CompletionResult associativity_complete(const QRing& partial,
                                        const std::vector<int>& dual);

} // namespace qcoh
