#include "qcoh/completion.hpp"

#include "qcoh/linalg.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace qcoh {

namespace {

using Triple = std::array<int, 3>;

Triple sorted_triple(int a, int b, int c) {
    Triple t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

struct Slot {
    Triple t{};
    int qpow = 0;
    bool known = false;
    Rational value;
};

struct EqTerm {
    int slot;
    Rational coeff;
};

struct Completer {
    const QRing& r;
    const std::vector<int>& dual;
    int n;
    int twodim;

    std::map<Triple, int> slot_of;
    std::vector<Slot> slots;

    std::vector<std::vector<EqTerm>> eqs;
    std::vector<std::vector<int>> eqs_touching; // slot -> equation indices

    std::string error;
    int seeded = 0, propagated = 0, eliminated = 0, stage_two = 0;

    Completer(const QRing& ring, const std::vector<int>& d)
        : r(ring), dual(d), n((int)ring.dim()), twodim(ring.top_degree()) {}

    // d such that deg a + deg b + deg c = 2 dim + 2 c1 d, or -1.
    int triple_qpow(const Triple& t) const {
        int s = r.degree(t[0]) + r.degree(t[1]) + r.degree(t[2]) - twodim;
        if (s < 0 || s % (2 * r.c1) != 0) return -1;
        return s / (2 * r.c1);
    }

    void enumerate_slots() {
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b)
                for (int c = b; c < n; ++c) {
                    Triple t{a, b, c};
                    int d = triple_qpow(t);
                    if (d < 0) continue;
                    slot_of[t] = (int)slots.size();
                    slots.push_back({t, d, false, Rational(0)});
                }
    }

    int find_slot(int a, int b, int c) const {
        auto it = slot_of.find(sorted_triple(a, b, c));
        return it == slot_of.end() ? -1 : it->second;
    }

    bool set_known(int s, const Rational& v, const char* origin) {
        Slot& sl = slots[s];
        if (sl.known) {
            if (sl.value != v) {
                std::ostringstream os;
                os << "conflicting values for the structure constant on classes ("
                   << r.basis[sl.t[0]].label << ", " << r.basis[sl.t[1]].label
                   << ", " << r.basis[sl.t[2]].label << ") from " << origin;
                error = os.str();
                return false;
            }
            return true;
        }
        sl.known = true;
        sl.value = v;
        return true;
    }

    bool seed() {
        // Unit row: 1 * sigma_b = sigma_b.
        for (auto& sl : slots) {
            if (sl.t[0] != 0) continue;
            int x = sl.t[1], y = sl.t[2];
            sl.known = true;
            sl.value = (y == dual[x]) ? 1 : 0;
        }
        // Every stored row fixes its full set of constants, zeros included.
        for (const auto& [key, terms] : r.table) {
            auto [i, j] = key;
            for (int k = 0; k < n; ++k) {
                int s = find_slot(i, j, dual[k]);
                if (s < 0) continue;
                Rational v(0);
                for (const auto& t : terms)
                    if (t.k == k && t.d == slots[s].qpow) v = t.c;
                if (!set_known(s, v, "a stored product row")) return false;
            }
        }
        for (const auto& sl : slots)
            if (sl.known) ++seeded;
        return true;
    }

    std::vector<int> pivot_rows() const {
        std::vector<int> pivots;
        for (int x = 0; x < n; ++x) {
            bool full = true;
            for (int j = 0; j < n && full; ++j)
                full = r.table.count({std::min(x, j), std::max(x, j)}) > 0;
            if (full) pivots.push_back(x);
        }
        return pivots;
    }

    void build_equations() {
        std::set<std::vector<std::pair<int, std::string>>> seen;
        eqs_touching.assign(slots.size(), {});
        for (int p : pivot_rows()) {
            if (p == 0) continue; // unit associativity is vacuous
            for (int i = 1; i < n; ++i) {
                const auto& row_pi =
                    r.product(std::min(p, i), std::max(p, i));
                // j runs over everything: swapping i and j changes the left
                // side but not the right, so both orders contribute.
                for (int j = 1; j < n; ++j) {
                    // bucket per output class: sum coeff * slot = 0
                    std::map<int, std::map<int, Rational>> buckets;
                    // (p * sigma_i) * sigma_j
                    for (const auto& t : row_pi) {
                        for (int k = 0; k < n; ++k) {
                            int s = find_slot(t.k, j, dual[k]);
                            if (s >= 0) buckets[k][s] += t.c;
                        }
                    }
                    // p * (sigma_i * sigma_j)
                    for (int k = 0; k < n; ++k) {
                        int s = find_slot(i, j, dual[k]);
                        if (s < 0) continue;
                        for (const auto& t2 :
                             r.product(std::min(p, k), std::max(p, k)))
                            buckets[t2.k][s] -= t2.c;
                    }
                    for (auto& [kout, m] : buckets) {
                        std::vector<EqTerm> eq;
                        for (auto& [s, c] : m)
                            if (c != 0) eq.push_back({s, c});
                        if (eq.empty()) continue;
                        // normalize for deduplication
                        std::vector<std::pair<int, std::string>> norm;
                        for (const auto& t : eq) {
                            Rational c = t.coeff / eq[0].coeff;
                            norm.emplace_back(t.slot, rat_to_string(c));
                        }
                        if (!seen.insert(norm).second) continue;
                        int id = (int)eqs.size();
                        eqs.push_back(std::move(eq));
                        for (const auto& t : eqs.back())
                            eqs_touching[t.slot].push_back(id);
                    }
                }
            }
        }
    }

    // Returns false on contradiction. `solved` collects slots fixed here.
    bool examine(int e, std::vector<int>& solved) {
        Rational cst(0);
        int unknown = -1;
        Rational ucoeff;
        for (const auto& t : eqs[e]) {
            const Slot& sl = slots[t.slot];
            if (sl.known) {
                cst += t.coeff * sl.value;
            } else if (unknown < 0) {
                unknown = t.slot;
                ucoeff = t.coeff;
            } else if (unknown != t.slot) {
                return true; // two or more unknowns: nothing to do yet
            } else {
                ucoeff += t.coeff;
            }
        }
        if (unknown < 0) {
            if (cst != 0) {
                error = "associativity forces a nonzero constant to vanish";
                return false;
            }
            return true;
        }
        if (ucoeff == 0) return true;
        if (!set_known(unknown, -cst / ucoeff, "propagation")) return false;
        ++propagated;
        solved.push_back(unknown);
        return true;
    }

    bool propagate() {
        std::deque<int> work;
        std::vector<char> queued(eqs.size(), 1);
        for (int e = 0; e < (int)eqs.size(); ++e) work.push_back(e);
        while (!work.empty()) {
            int e = work.front();
            work.pop_front();
            queued[e] = 0;
            std::vector<int> solved;
            if (!examine(e, solved)) return false;
            for (int s : solved)
                for (int e2 : eqs_touching[s])
                    if (!queued[e2]) {
                        queued[e2] = 1;
                        work.push_back(e2);
                    }
        }
        return true;
    }

    std::vector<int> remaining_unknowns() const {
        std::vector<int> u;
        for (int s = 0; s < (int)slots.size(); ++s)
            if (!slots[s].known) u.push_back(s);
        return u;
    }

    // Dense elimination over whatever propagation left. Returns false on
    // contradiction; sets dof to the residual freedom.
    bool eliminate(int& dof) {
        std::vector<int> unk = remaining_unknowns();
        dof = 0;
        if (unk.empty()) return true;
        std::map<int, int> col_of;
        for (int c = 0; c < (int)unk.size(); ++c) col_of[unk[c]] = c;

        std::vector<QVec> rows;
        for (const auto& eq : eqs) {
            QVec row(unk.size() + 1, Rational(0));
            bool has_unknown = false;
            for (const auto& t : eq) {
                const Slot& sl = slots[t.slot];
                if (sl.known)
                    row.back() += t.coeff * sl.value;
                else {
                    row[col_of.at(t.slot)] += t.coeff;
                    has_unknown = true;
                }
            }
            if (has_unknown) rows.push_back(std::move(row));
        }

        Mat m((int)rows.size(), (int)unk.size() + 1);
        for (int i = 0; i < m.rows; ++i) m.a[i] = rows[i];
        std::vector<int> piv = rref(m);
        for (int p : piv)
            if (p == (int)unk.size()) {
                error = "residual linear system is inconsistent";
                return false;
            }
        // full-rank columns are solved; the rest are free
        std::set<int> pivset(piv.begin(), piv.end());
        if ((int)piv.size() == (int)unk.size()) {
            for (int i = 0; i < (int)piv.size(); ++i) {
                // row i: x_piv[i] + sum(free)*... = -rhs; no free vars here
                if (!set_known(unk[piv[i]], -m.a[i].back(), "elimination"))
                    return false;
                ++eliminated;
            }
            return true;
        }
        dof = (int)unk.size() - (int)piv.size();
        return true;
    }

    // Linearized passes over full triple associativity: any relation whose
    // quadratic terms all have at least one known factor becomes linear.
    bool stage_two_pass(bool& progress) {
        progress = false;
        std::vector<QVec> rows;
        std::vector<int> unk = remaining_unknowns();
        if (unk.empty()) return true;
        std::map<int, int> col_of;
        for (int c = 0; c < (int)unk.size(); ++c) col_of[unk[c]] = c;

        for (int a = 1; a < n; ++a)
            for (int b = a; b < n; ++b)
                for (int c = b; c < n; ++c) {
                    // bucket per output l: sum_k N(a,b,du k) N(k,c,du l)
                    //                    - sum_k N(b,c,du k) N(a,k,du l) = 0
                    std::map<int, QVec> lin; // l -> row over unk + const
                    std::map<int, bool> bad;
                    auto add = [&](int l, int s1, int s2, int sign) {
                        if (s1 < 0 || s2 < 0) return;
                        const Slot &x = slots[s1], &y = slots[s2];
                        auto& row = lin
                                        .try_emplace(l, QVec(unk.size() + 1,
                                                             Rational(0)))
                                        .first->second;
                        if (x.known && y.known)
                            row.back() += Rational(sign) * x.value * y.value;
                        else if (x.known)
                            row[col_of.at(s2)] += Rational(sign) * x.value;
                        else if (y.known)
                            row[col_of.at(s1)] += Rational(sign) * y.value;
                        else
                            bad[l] = true;
                    };
                    for (int l = 0; l < n; ++l)
                        for (int k = 0; k < n; ++k) {
                            add(l, find_slot(a, b, dual[k]),
                                find_slot(k, c, dual[l]), 1);
                            add(l, find_slot(b, c, dual[k]),
                                find_slot(a, k, dual[l]), -1);
                        }
                    for (auto& [l, row] : lin) {
                        if (bad.count(l)) continue;
                        bool nonzero = false;
                        for (const auto& v : row)
                            if (v != 0) nonzero = true;
                        if (nonzero) rows.push_back(row);
                    }
                }
        if (rows.empty()) return true;

        Mat m((int)rows.size(), (int)unk.size() + 1);
        for (int i = 0; i < m.rows; ++i) m.a[i] = rows[i];
        std::vector<int> piv = rref(m);
        for (int p : piv)
            if (p == (int)unk.size()) {
                error = "triple associativity is inconsistent";
                return false;
            }
        // read off rows with a single unknown column
        for (int i = 0; i < (int)piv.size(); ++i) {
            bool lone = true;
            for (int j = piv[i] + 1; j < (int)unk.size(); ++j)
                if (m.a[i][j] != 0) lone = false;
            if (!lone) continue;
            if (!set_known(unk[piv[i]], -m.a[i].back(), "triple relations"))
                return false;
            ++stage_two;
            progress = true;
        }
        return true;
    }

    QRing materialize() const {
        QRing out;
        out.name = r.name;
        out.provenance = "completed";
        out.c1 = r.c1;
        out.unit = r.unit;
        out.basis = r.basis;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                std::vector<ProductTerm> terms;
                for (int k = 0; k < n; ++k) {
                    int s = find_slot(i, j, dual[k]);
                    if (s < 0 || slots[s].value == 0) continue;
                    terms.push_back({k, slots[s].qpow, slots[s].value});
                }
                out.set_product(i, j, terms);
            }
        return out;
    }
};

} // namespace

CompletionResult associativity_complete(const QRing& partial,
                                        const std::vector<int>& dual) {
    CompletionResult res;
    if (dual.size() != partial.dim()) {
        res.status = CompletionStatus::Inconsistent;
        res.detail = "duality map size does not match the basis";
        return res;
    }
    Completer c(partial, dual);
    c.enumerate_slots();
    if (!c.seed()) {
        res.status = CompletionStatus::Inconsistent;
        res.detail = c.error;
        return res;
    }
    c.build_equations();
    if (!c.propagate()) {
        res.status = CompletionStatus::Inconsistent;
        res.detail = c.error;
        return res;
    }
    int dof = 0;
    if (!c.eliminate(dof)) {
        res.status = CompletionStatus::Inconsistent;
        res.detail = c.error;
        return res;
    }
    if (dof > 0) {
        // second stage: bring in relations among three general classes
        bool progress = true;
        while (progress && dof > 0) {
            if (!c.stage_two_pass(progress)) {
                res.status = CompletionStatus::Inconsistent;
                res.detail = c.error;
                return res;
            }
            if (progress && !c.propagate()) {
                res.status = CompletionStatus::Inconsistent;
                res.detail = c.error;
                return res;
            }
            if (!c.eliminate(dof)) {
                res.status = CompletionStatus::Inconsistent;
                res.detail = c.error;
                return res;
            }
        }
    }

    std::ostringstream os;
    os << c.slots.size() << " structure constants: " << c.seeded
       << " seeded, " << c.propagated << " propagated, " << c.eliminated
       << " eliminated";
    if (c.stage_two > 0) os << ", " << c.stage_two << " from triple relations";

    if (dof > 0) {
        res.status = CompletionStatus::Underdetermined;
        res.degrees_of_freedom = dof;
        os << "; " << dof << " left free";
        res.detail = os.str();
        return res;
    }

    res.ring = c.materialize();
    std::vector<std::string> issues = res.ring.validate();
    if (!issues.empty()) {
        res.status = CompletionStatus::Inconsistent;
        res.detail = "completed table fails validation: " + issues.front();
        return res;
    }
    res.status = CompletionStatus::Unique;
    res.detail = os.str();
    return res;
}

} // namespace qcoh
