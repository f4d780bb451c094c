#pragma once

// Root systems of the finite simple Lie types, built abstractly from Cartan
// matrices. Roots are integer coordinate vectors over the simple roots; no
// Euclidean embedding is used. The CoadjointRootData layer adds the affine
// bookkeeping needed for the degree-two Schubert product on coadjoint spaces:
// classes are indexed by short roots, quantum corrections enter through the
// affine simple reflection.

#include <string>
#include <vector>

namespace qcoh {

using RootCoords = std::vector<int>;

struct RootSystem {
    char family = 0; // 'A'..'G'
    int rank = 0;
    std::string name; // "C3", "F4", ...

    // cartan[i][j] = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)
    std::vector<std::vector<int>> cartan;
    // Symmetrizer: d[i] * cartan[i][j] is the symmetric doubled Gram matrix.
    std::vector<int> d;

    std::vector<RootCoords> positive_roots; // sorted by (height, lex)
    RootCoords highest_root;                // the long one
    RootCoords highest_short_root;          // equals highest_root when simply laced
    int min_norm2 = 0;

    static RootSystem build(char family, int rank);
    static RootSystem build(const std::string& label);

    int height(const RootCoords& a) const;
    bool is_positive(const RootCoords& a) const; // assumes a is a root
    bool is_root(const RootCoords& a) const;

    // <alpha_i^vee, beta> for a simple root alpha_i.
    int coroot_pairing(int i, const RootCoords& beta) const;
    // Doubled symmetric form x^T (d_i cartan_ij) y = 2 (x, y).
    long pair2(const RootCoords& x, const RootCoords& y) const;
    int norm2(const RootCoords& a) const; // pair2(a, a)
    // <gamma^vee, beta> for any root gamma; exact integer division.
    int root_pairing(const RootCoords& gamma, const RootCoords& beta) const;

    bool is_short(const RootCoords& a) const;
    RootCoords simple_reflection(int i, const RootCoords& beta) const;

    std::vector<RootCoords> all_roots() const; // positives then negatives
    std::vector<RootCoords> short_roots() const;
};

// Compact coordinate label like "a1+2*a2-a3"; used for class names.
std::string root_label(const RootCoords& a);

// Affine data for the Schubert basis of a coadjoint space. The basis consists
// of the short roots; the class attached to a positive root alpha sits in
// degree 2(h_s - ht(alpha)) and the one attached to a negative root in degree
// 2(h_s - ht(alpha) - 1), where h_s is the height of the highest short root.
struct CoadjointRootData {
    RootSystem rs;
    RootCoords theta_short;
    int anchor_height = 0; // ht(theta_short)
    int c1 = 0;            // ht(highest long root); q has degree 2*c1
    int dim_complex = 0;   // 2 * anchor_height - 1
    std::vector<RootCoords> basis; // short roots sorted by (degree, lex)

    static CoadjointRootData build(const RootSystem& rs);

    int class_degree(const RootCoords& a) const;
    int index_of(const RootCoords& a) const; // -1 when absent

    // One summand of the degree-two Schubert product h * sigma_alpha.
    struct ChevTerm {
        int index;   // basis index of the output class
        int qpower;  // 0 for classical terms
        long coeff;  // positive integer
    };
    // All summands; every term raises total degree by exactly 2.
    std::vector<ChevTerm> chevalley_h(const RootCoords& a) const;
};

} // namespace qcoh
