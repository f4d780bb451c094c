#include "qcoh/rings.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcoh {

QRing projective_space(int n) { return complete_intersection(n, {}); }

CICertification certify_complete_intersection(int n, const std::vector<int>& degrees) {
    CICertification cert;
    cert.scale = 1;
    int sumd = 0;
    cert.excess = 0;
    for (int d : degrees) {
        if (d < 2) {
            cert.reason = "degrees below 2 do not cut the ambient space";
            return cert;
        }
        sumd += d;
        cert.excess += d - 1;
        for (int i = 0; i < d; ++i) cert.scale *= d;
    }
    int r = (int)degrees.size();
    cert.c1 = n + r + 1 - sumd;
    if (degrees.empty()) {
        // Projective space: fine in every positive dimension.
        if (n >= 1)
            cert.admissible = true;
        else
            cert.reason = "dimension must be positive";
        return cert;
    }
    if (n < 2) {
        cert.reason = "dimension must be at least 2";
        return cert;
    }
    if (cert.c1 < 1) {
        cert.reason = "canonical degree is not positive";
        return cert;
    }
    if (n < 2 * cert.excess - 1) {
        cert.reason = "dimension too small for the h-power model";
        return cert;
    }
    cert.admissible = true;
    return cert;
}

QRing complete_intersection(int n, const std::vector<int>& degrees) {
    CICertification cert = certify_complete_intersection(n, degrees);
    if (!cert.admissible)
        throw std::invalid_argument("inadmissible complete intersection: " + cert.reason);

    QRing ring;
    if (degrees.empty()) {
        ring.name = "P" + std::to_string(n);
    } else {
        ring.name = "CI(";
        for (size_t i = 0; i < degrees.size(); ++i) {
            if (i) ring.name += ",";
            ring.name += std::to_string(degrees[i]);
        }
        ring.name += ")/P" + std::to_string(n + (int)degrees.size());
    }
    ring.c1 = cert.c1;
    ring.unit = 0;
    for (int k = 0; k <= n; ++k) {
        std::string label = k == 0 ? "1" : (k == 1 ? "h" : "h^" + std::to_string(k));
        ring.basis.push_back({label, 2 * k});
    }

    // h^i * h^j, reducing h^(n+1+t) -> D q h^(s+t) until the exponent fits.
    int s = cert.excess;
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            int e = i + j;
            int d = 0;
            Rational coeff(1);
            while (e > n) {
                e = e - (n + 1) + s;
                d += 1;
                coeff *= Rational(cert.scale);
            }
            ring.set_product(i, j, {{e, d, coeff}});
        }
    return ring;
}

namespace {

// One n-hook removal from a two-row shape with e > n - 2. Returns false when
// the term dies. The conditions for the two hook heights exclude each other.
bool remove_hook(int n, int& e, int& f, int& sign) {
    if (e - n >= f) {
        e -= n;
        sign = -sign;
        return true;
    }
    if (e + 1 - n >= 0 && e + 1 - n <= f - 1) {
        int ne = f - 1, nf = e + 1 - n;
        e = ne;
        f = nf;
        return true;
    }
    return false;
}

} // namespace

std::vector<TwoRowTerm> two_row_product(int n, int a, int b, int c, int dd) {
    std::vector<TwoRowTerm> out;
    for (int i = 0; i <= std::min(a - b, c - dd); ++i) {
        int e = a + c - i, f = b + dd + i;
        int q = 0, sign = 1;
        bool alive = true;
        while (alive && e > n - 2) {
            alive = remove_hook(n, e, f, sign);
            ++q;
        }
        if (!alive) continue;
        out.push_back({e, f, q, sign});
    }
    return out;
}

QRing grassmannian2(int n) {
    if (n < 4) throw std::invalid_argument("two-row Grassmannian needs n >= 4");
    QRing ring;
    ring.name = "Gr(2," + std::to_string(n) + ")";
    ring.c1 = n;
    ring.unit = 0;

    std::vector<std::pair<int, int>> shapes;
    for (int a = 0; a <= n - 2; ++a)
        for (int b = 0; b <= a; ++b) shapes.emplace_back(a, b);
    std::sort(shapes.begin(), shapes.end(), [](const auto& x, const auto& y) {
        int dx = x.first + x.second, dy = y.first + y.second;
        if (dx != dy) return dx < dy;
        return x < y;
    });
    auto index_of = [&shapes](int a, int b) {
        for (size_t k = 0; k < shapes.size(); ++k)
            if (shapes[k] == std::make_pair(a, b)) return (int)k;
        return -1;
    };
    for (const auto& [a, b] : shapes) {
        std::string label =
            "p[" + std::to_string(a) + "," + std::to_string(b) + "]";
        ring.basis.push_back({label, 2 * (a + b)});
    }

    for (size_t i = 0; i < shapes.size(); ++i)
        for (size_t j = i; j < shapes.size(); ++j) {
            QElem acc;
            for (const TwoRowTerm& t :
                 two_row_product(n, shapes[i].first, shapes[i].second, shapes[j].first,
                                 shapes[j].second))
                acc.add(index_of(t.a, t.b), t.d, Rational(t.sign));
            std::vector<ProductTerm> terms;
            for (const auto& [kd, coeff] : acc.terms) terms.push_back({kd.first, kd.second, coeff});
            ring.set_product((int)i, (int)j, std::move(terms));
        }
    return ring;
}

namespace {

std::string short_root_class_label(const RootCoords& a) {
    std::string s = "s[";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + "]";
}

} // namespace

CoadjointSeed coadjoint_chevalley(const std::string& label) {
    RootSystem rs = RootSystem::build(label);
    if (rs.family != 'C' && rs.family != 'F')
        throw std::invalid_argument("coadjoint construction covers types C and F only");
    if (rs.family == 'C' && rs.rank < 3)
        throw std::invalid_argument("type C coadjoint spaces need rank at least 3");

    CoadjointSeed seed;
    seed.roots = CoadjointRootData::build(rs);
    QRing& ring = seed.partial;
    ring.name = rs.family == 'C' ? "IG(2," + std::to_string(2 * rs.rank) + ")" : "F4/P4";
    ring.c1 = seed.roots.c1;

    const auto& basis = seed.roots.basis;
    for (const auto& a : basis)
        ring.basis.push_back({short_root_class_label(a), seed.roots.class_degree(a)});
    ring.unit = 0;
    if (ring.basis[0].degree != 0) throw std::logic_error("basis not sorted by degree");

    seed.dual.resize(basis.size());
    for (size_t k = 0; k < basis.size(); ++k) {
        RootCoords neg = basis[k];
        for (int& x : neg) x = -x;
        int dk = seed.roots.index_of(neg);
        if (dk < 0) throw std::logic_error("basis not closed under negation");
        seed.dual[k] = dk;
        if (ring.degree(dk) + ring.degree((int)k) != 2 * seed.roots.dim_complex)
            throw std::logic_error("duality is not degree complementary");
    }

    for (int k = 0; k < ring.dim(); ++k)
        ring.set_product(ring.unit, k, {{k, 0, 1}});
    int h = ring.h_index();
    for (int k = 0; k < ring.dim(); ++k) {
        if (k == ring.unit) continue;
        std::vector<ProductTerm> terms;
        for (const auto& t : seed.roots.chevalley_h(basis[k]))
            terms.push_back({t.index, t.qpower, Rational(t.coeff)});
        ring.set_product(h, k, std::move(terms));
    }
    return seed;
}

Mat degree_two_operator_q1(const QRing& r) {
    int n = r.dim();
    int h = r.h_index();
    Mat m(n, n);
    for (int j = 0; j < n; ++j)
        for (const ProductTerm& t : r.product(h, j)) m.a[t.k][j] += t.c;
    return m;
}

} // namespace qcoh
