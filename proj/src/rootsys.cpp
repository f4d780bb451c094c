#include "qcoh/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qcoh {

namespace {

void validate_label(char family, int rank) {
    switch (family) {
        case 'A': if (rank >= 1) return; break;
        case 'B': if (rank >= 2) return; break;
        case 'C': if (rank >= 2) return; break;
        case 'D': if (rank >= 4) return; break;
        case 'E': if (rank >= 6 && rank <= 8) return; break;
        case 'F': if (rank == 4) return; break;
        case 'G': if (rank == 2) return; break;
        default: break;
    }
    throw std::invalid_argument(std::string("unsupported type ") + family + std::to_string(rank));
}

} // namespace

RootSystem RootSystem::build(const std::string& label) {
    if (label.size() < 2) throw std::invalid_argument("bad type label: " + label);
    char family = label[0];
    int rank = 0;
    try {
        rank = std::stoi(label.substr(1));
    } catch (...) {
        throw std::invalid_argument("bad type label: " + label);
    }
    return build(family, rank);
}

RootSystem RootSystem::build(char family, int rank) {
    validate_label(family, rank);
    RootSystem rs;
    rs.family = family;
    rs.rank = rank;
    rs.name = std::string(1, family) + std::to_string(rank);

    auto& a = rs.cartan;
    a.assign(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };

    rs.d.assign(rank, 2);
    switch (family) {
        case 'A':
            for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
            break;
        case 'B': // last simple root short
            for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
            a[rank - 1][rank - 2] = -2;
            rs.d[rank - 1] = 1;
            break;
        case 'C': // last simple root long
            for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
            a[rank - 2][rank - 1] = -2;
            rs.d[rank - 1] = 4;
            break;
        case 'D':
            for (int i = 0; i + 2 < rank; ++i) link(i, i + 1);
            link(rank - 3, rank - 1);
            break;
        case 'E':
            link(0, 2);
            link(1, 3);
            link(2, 3);
            link(3, 4);
            link(4, 5);
            if (rank >= 7) link(5, 6);
            if (rank >= 8) link(6, 7);
            break;
        case 'F':
            link(0, 1);
            link(2, 3);
            a[1][2] = -1;
            a[2][1] = -2;
            rs.d = {2, 2, 1, 1};
            break;
        case 'G':
            a[0][1] = -3;
            a[1][0] = -1;
            rs.d = {2, 6};
            break;
    }

    // Enumerate positive roots by height through root strings: for a root a
    // and simple i, with p the length of the string below a in direction i,
    // a + alpha_i is a root iff p - <a, alpha_i^vee> >= 1.
    std::set<RootCoords> seen;
    std::vector<RootCoords> level;
    for (int i = 0; i < rank; ++i) {
        RootCoords e(rank, 0);
        e[i] = 1;
        seen.insert(e);
        level.push_back(e);
    }
    std::vector<RootCoords> all(level);
    while (!level.empty()) {
        std::vector<RootCoords> next;
        for (const RootCoords& root : level) {
            for (int i = 0; i < rank; ++i) {
                int p = 0;
                RootCoords down = root;
                while (true) {
                    down[i] -= 1;
                    if (down[i] < 0 || !seen.count(down)) break;
                    ++p;
                }
                int pair = 0;
                for (int j = 0; j < rank; ++j) pair += a[i][j] * root[j];
                if (p - pair < 1) continue;
                RootCoords up = root;
                up[i] += 1;
                if (seen.insert(up).second) {
                    next.push_back(up);
                    all.push_back(up);
                }
            }
        }
        level = std::move(next);
    }

    std::sort(all.begin(), all.end(), [&rs](const RootCoords& x, const RootCoords& y) {
        int hx = rs.height(x), hy = rs.height(y);
        if (hx != hy) return hx < hy;
        return x < y;
    });
    rs.positive_roots = std::move(all);
    rs.highest_root = rs.positive_roots.back();

    rs.min_norm2 = rs.norm2(rs.positive_roots.front());
    for (const auto& r : rs.positive_roots) rs.min_norm2 = std::min(rs.min_norm2, rs.norm2(r));
    for (const auto& r : rs.positive_roots)
        if (rs.norm2(r) == rs.min_norm2) rs.highest_short_root = r; // sorted by height
    return rs;
}

int RootSystem::height(const RootCoords& a) const {
    int h = 0;
    for (int x : a) h += x;
    return h;
}

bool RootSystem::is_positive(const RootCoords& a) const {
    for (int x : a)
        if (x != 0) return x > 0;
    return false;
}

bool RootSystem::is_root(const RootCoords& a) const {
    RootCoords b = a;
    if (!is_positive(b))
        for (int& x : b) x = -x;
    return std::binary_search(
        positive_roots.begin(), positive_roots.end(), b,
        [this](const RootCoords& x, const RootCoords& y) {
            int hx = height(x), hy = height(y);
            if (hx != hy) return hx < hy;
            return x < y;
        });
}

int RootSystem::coroot_pairing(int i, const RootCoords& beta) const {
    int s = 0;
    for (int j = 0; j < rank; ++j) s += cartan[i][j] * beta[j];
    return s;
}

long RootSystem::pair2(const RootCoords& x, const RootCoords& y) const {
    long s = 0;
    for (int i = 0; i < rank; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < rank; ++j) s += (long)d[i] * cartan[i][j] * x[i] * y[j];
    }
    return s;
}

int RootSystem::norm2(const RootCoords& a) const { return (int)pair2(a, a); }

int RootSystem::root_pairing(const RootCoords& gamma, const RootCoords& beta) const {
    long num = 2 * pair2(gamma, beta);
    long den = pair2(gamma, gamma);
    if (den == 0 || num % den != 0)
        throw std::logic_error("non-integral coroot pairing");
    return (int)(num / den);
}

bool RootSystem::is_short(const RootCoords& a) const { return norm2(a) == min_norm2; }

RootCoords RootSystem::simple_reflection(int i, const RootCoords& beta) const {
    RootCoords r = beta;
    r[i] -= coroot_pairing(i, beta);
    return r;
}

std::vector<RootCoords> RootSystem::all_roots() const {
    std::vector<RootCoords> out = positive_roots;
    for (const auto& r : positive_roots) {
        RootCoords m = r;
        for (int& x : m) x = -x;
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<RootCoords> RootSystem::short_roots() const {
    std::vector<RootCoords> out;
    for (const auto& r : all_roots())
        if (is_short(r)) out.push_back(r);
    return out;
}

std::string root_label(const RootCoords& a) {
    std::string s;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        int c = a[i];
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += c > 0 ? "+" : "-";
        }
        int m = c > 0 ? c : -c;
        if (m != 1) s += std::to_string(m) + "*";
        s += "a" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

CoadjointRootData CoadjointRootData::build(const RootSystem& rs) {
    CoadjointRootData cd;
    cd.rs = rs;
    cd.theta_short = rs.highest_short_root;
    cd.anchor_height = rs.height(cd.theta_short);
    cd.c1 = rs.height(rs.highest_root);
    cd.dim_complex = 2 * cd.anchor_height - 1;
    cd.basis = rs.short_roots();
    std::sort(cd.basis.begin(), cd.basis.end(), [&cd](const RootCoords& x, const RootCoords& y) {
        int dx = cd.class_degree(x), dy = cd.class_degree(y);
        if (dx != dy) return dx < dy;
        return x < y;
    });
    return cd;
}

int CoadjointRootData::class_degree(const RootCoords& a) const {
    int h = rs.height(a);
    if (rs.is_positive(a)) return 2 * (anchor_height - h);
    return 2 * (anchor_height - h - 1);
}

int CoadjointRootData::index_of(const RootCoords& a) const {
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == a) return (int)i;
    return -1;
}

std::vector<CoadjointRootData::ChevTerm> CoadjointRootData::chevalley_h(const RootCoords& a) const {
    // Finite reflections: every positive root beta with <beta^vee, a> = c > 0
    // contributes c * sigma_{s_beta(a)} provided the reflection raises the
    // class degree by exactly 2. Simple reflections account for the height
    // one steps; reflections by height two roots give the positive to
    // negative crossings (without them the top self-intersection number of
    // the space comes out wrong).
    std::vector<ChevTerm> out;
    int target = class_degree(a) + 2;
    for (const RootCoords& beta : rs.positive_roots) {
        int c = rs.root_pairing(beta, a);
        if (c <= 0) continue;
        RootCoords b = a;
        for (int j = 0; j < rs.rank; ++j) b[j] -= c * beta[j];
        if (class_degree(b) != target) continue;
        int idx = index_of(b);
        if (idx < 0) throw std::logic_error("reflection left the class basis");
        out.push_back({idx, 0, (long)c});
    }
    // Affine node: <alpha_0^vee, alpha> = -<Theta^vee, alpha>, and the
    // reflection sends alpha to alpha + c*Theta minus c copies of delta,
    // which contributes q^c.
    int c0 = -rs.root_pairing(rs.highest_root, a);
    if (c0 > 0) {
        RootCoords b = a;
        for (int j = 0; j < rs.rank; ++j) b[j] += c0 * rs.highest_root[j];
        if (2 * c1 * c0 + class_degree(b) == target) {
            int idx = index_of(b);
            if (idx < 0) throw std::logic_error("affine reflection left the class basis");
            out.push_back({idx, c0, (long)c0});
        }
    }
    return out;
}

} // namespace qcoh
