#include "qcoh/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qcoh {

Poly Poly::operator+(const Poly& o) const {
    QVec r(std::max(c.size(), o.c.size()), Rational(0));
    for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    QVec r(std::max(c.size(), o.c.size()), Rational(0));
    for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r[i] -= o.c[i];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    QVec r(c.size() + o.c.size() - 1, Rational(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < o.c.size(); ++j)
            if (o.c[j] != 0) r[i + j] += c[i] * o.c[j];
    }
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rational& s) const {
    QVec r = c;
    for (auto& x : r) x *= s;
    return Poly(std::move(r));
}

Poly Poly::operator-() const { return *this * Rational(-1); }

Rational Poly::eval(const Rational& x) const {
    Rational r(0);
    for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * (1 / lc());
}

std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    Poly rem = num;
    int dd = den.degree();
    if (rem.degree() < dd) return {Poly(), rem};
    QVec q(rem.degree() - dd + 1, Rational(0));
    Rational inv = 1 / den.lc();
    while (!rem.is_zero() && rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        Rational f = rem.lc() * inv;
        q[shift] = f;
        for (int i = 0; i <= dd; ++i) rem.c[shift + i] -= f * den.c[i];
        rem.normalize();
    }
    return {Poly(std::move(q)), rem};
}

bool poly_divides(const Poly& div, const Poly& num) {
    if (div.is_zero()) return num.is_zero();
    return poly_divmod(num, div).second.is_zero();
}

Poly poly_derivative(const Poly& p) {
    if (p.degree() < 1) return Poly();
    QVec r(p.c.size() - 1);
    for (size_t i = 1; i < p.c.size(); ++i) r[i - 1] = p.c[i] * Rational((long)i);
    return Poly(std::move(r));
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

PolyXgcd poly_extended_gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::one(), u1 = Poly::zero();
    Poly v0 = Poly::zero(), v1 = Poly::one();
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly u2 = u0 - q * u1;
        Poly v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero()) return {Poly(), Poly(), Poly()};
    Rational inv = 1 / r0.lc();
    return {r0 * inv, u0 * inv, v0 * inv};
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly g = poly_gcd(a, b);
    return poly_divmod(a * b, g).first.monic();
}

Poly poly_compose_xpow(const Poly& p, int k) {
    if (k <= 0) throw std::invalid_argument("compose_xpow needs k >= 1");
    if (p.is_zero()) return Poly();
    QVec r((size_t)(p.degree() * k + 1), Rational(0));
    for (size_t i = 0; i < p.c.size(); ++i) r[i * k] = p.c[i];
    return Poly(std::move(r));
}

Poly squarefree_part(const Poly& p) {
    if (p.degree() <= 0) return p.is_zero() ? p : Poly::one();
    Poly g = poly_gcd(p, poly_derivative(p));
    return poly_divmod(p, g).first.monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() <= 0) return out;
    Poly f = p.monic();
    Poly fp = poly_derivative(f);
    Poly g = poly_gcd(f, fp);
    Poly c = poly_divmod(f, g).first;
    Poly d = poly_divmod(fp, g).first - poly_derivative(c);
    int i = 1;
    while (c.degree() > 0) {
        Poly pi = poly_gcd(c, d);
        if (pi.degree() > 0) out.emplace_back(pi, i);
        c = poly_divmod(c, pi).first;
        d = poly_divmod(d, pi).first - poly_derivative(c);
        ++i;
    }
    return out;
}

namespace {

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

int sign_changes(const std::vector<int>& signs) {
    int changes = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

} // namespace

int count_real_roots(const Poly& p) {
    Poly s = squarefree_part(p);
    if (s.degree() <= 0) return 0;
    std::vector<Poly> chain{s, poly_derivative(s)};
    while (chain.back().degree() > 0) {
        Poly r = poly_divmod(chain[chain.size() - 2], chain.back()).second;
        chain.push_back(-r);
        if (chain.back().is_zero()) {
            chain.pop_back();
            break;
        }
    }
    std::vector<int> at_minus, at_plus;
    for (const Poly& q : chain) {
        if (q.is_zero()) continue;
        int s_lead = sign_of(q.lc());
        at_plus.push_back(s_lead);
        at_minus.push_back(q.degree() % 2 == 0 ? s_lead : -s_lead);
    }
    return sign_changes(at_minus) - sign_changes(at_plus);
}

bool all_roots_real(const Poly& p) {
    Poly s = squarefree_part(p);
    if (s.degree() <= 0) return true;
    return count_real_roots(s) == s.degree();
}

Poly minimal_polynomial(const Mat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("minimal polynomial of non-square matrix");
    int n = m.rows;
    Poly mu = Poly::one();
    for (int start = 0; start < n && mu.degree() < n; ++start) {
        QVec v(n, Rational(0));
        v[start] = 1;
        std::vector<QVec> krylov{v};
        while (true) {
            QVec w = m.apply(krylov.back());
            auto sol = solve_linear(mat_from_columns(krylov), w);
            if (sol) {
                QVec coeffs(krylov.size() + 1, Rational(0));
                for (size_t j = 0; j < krylov.size(); ++j) coeffs[j] = -(*sol)[j];
                coeffs[krylov.size()] = 1;
                mu = poly_lcm(mu, Poly(std::move(coeffs)));
                break;
            }
            krylov.push_back(std::move(w));
        }
    }
    return mu;
}

Mat poly_of_matrix(const Poly& p, const Mat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("polynomial of non-square matrix");
    int n = m.rows;
    Mat r(n, n);
    if (p.is_zero()) return r;
    for (size_t i = p.c.size(); i-- > 0;) {
        r = r * m;
        for (int d = 0; d < n; ++d) r.a[d][d] += p.c[i];
    }
    return r;
}

// ---------------------------------------------------------------------------
// Factorization over Q. Strategy: reduce to a monic integer polynomial, factor
// it mod a small prime with Berlekamp, Hensel-lift the modular factors past
// the Mignotte bound, then recombine subsets.

namespace {

using ZPoly = std::vector<Int>; // trimmed, coefficient i on X^i

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZPoly& p) { return (int)p.size() - 1; }

ZPoly zmul_plain(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ztrim(r);
    return r;
}

// Division by a monic divisor over Z; returns true when the remainder is zero.
bool zdivmod_monic(const ZPoly& num, const ZPoly& den, ZPoly& quot) {
    ZPoly rem = num;
    int dd = zdeg(den);
    quot.assign(std::max<int>(0, zdeg(rem) - dd + 1), Int(0));
    while (zdeg(rem) >= dd) {
        int shift = zdeg(rem) - dd;
        Int f = rem.back();
        quot[shift] = f;
        for (int i = 0; i <= dd; ++i) rem[shift + i] -= f * den[i];
        ztrim(rem);
    }
    ztrim(quot);
    return rem.empty();
}

void zmod_normalize(ZPoly& p, const Int& M) {
    for (auto& x : p) {
        x %= M;
        if (x < 0) x += M;
    }
    ztrim(p);
}

ZPoly zadd_mod(const ZPoly& a, const ZPoly& b, const Int& M) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    zmod_normalize(r, M);
    return r;
}

ZPoly zsub_mod(const ZPoly& a, const ZPoly& b, const Int& M) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    zmod_normalize(r, M);
    return r;
}

ZPoly zmul_mod(const ZPoly& a, const ZPoly& b, const Int& M) {
    ZPoly r = zmul_plain(a, b);
    zmod_normalize(r, M);
    return r;
}

// divmod mod M by a monic divisor.
void zdivmod_mod(const ZPoly& num, const ZPoly& den, const Int& M, ZPoly& quot, ZPoly& rem) {
    rem = num;
    int dd = zdeg(den);
    quot.assign(std::max<int>(0, zdeg(rem) - dd + 1), Int(0));
    while (zdeg(rem) >= dd) {
        int shift = zdeg(rem) - dd;
        Int f = rem.back();
        quot[shift] = f;
        for (int i = 0; i <= dd; ++i) rem[shift + i] -= f * den[i];
        zmod_normalize(rem, M);
    }
    zmod_normalize(quot, M);
}

// ---- arithmetic mod a small prime, long coefficients ----

using PPoly = std::vector<long>;

void ptrim(PPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int pdeg(const PPoly& p) { return (int)p.size() - 1; }

long pinv(long a, long p) {
    long t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
    while (nr != 0) {
        long q = r / nr;
        long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::logic_error("not invertible mod p");
    return t < 0 ? t + p : t;
}

PPoly pmul(const PPoly& a, const PPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    ptrim(r);
    return r;
}

void pdivmod(const PPoly& num, const PPoly& den, long p, PPoly& quot, PPoly& rem) {
    rem = num;
    int dd = pdeg(den);
    long inv = pinv(den.back(), p);
    quot.assign(std::max<int>(0, pdeg(rem) - dd + 1), 0);
    while (pdeg(rem) >= dd) {
        int shift = pdeg(rem) - dd;
        long f = rem.back() * inv % p;
        quot[shift] = f;
        for (int i = 0; i <= dd; ++i) {
            rem[shift + i] = (rem[shift + i] - f * den[i]) % p;
            if (rem[shift + i] < 0) rem[shift + i] += p;
        }
        ptrim(rem);
    }
    ptrim(quot);
}

PPoly pmod(const PPoly& num, const PPoly& den, long p) {
    PPoly q, r;
    pdivmod(num, den, p, q, r);
    return r;
}

PPoly pmonic(PPoly a, long p) {
    if (a.empty()) return a;
    long inv = pinv(a.back(), p);
    for (auto& x : a) x = x * inv % p;
    return a;
}

PPoly pgcd(PPoly a, PPoly b, long p) {
    while (!b.empty()) {
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(std::move(a), p);
}

PPoly pderiv(const PPoly& a, long p) {
    PPoly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back((long)(a[i] * (long)(i % p) % p));
    ptrim(r);
    return r;
}

// Extended Euclid mod p for coprime inputs: u*a + v*b = 1.
void pbezout(const PPoly& a, const PPoly& b, long p, PPoly& u, PPoly& v) {
    PPoly r0 = a, r1 = b;
    PPoly u0{1}, u1{}, v0{}, v1{1};
    auto sub_scaled = [&](const PPoly& x, const PPoly& q, const PPoly& y) {
        PPoly qy = pmul(q, y, p);
        PPoly r(std::max(x.size(), qy.size()), 0);
        for (size_t i = 0; i < x.size(); ++i) r[i] = x[i];
        for (size_t i = 0; i < qy.size(); ++i) {
            r[i] = (r[i] - qy[i]) % p;
            if (r[i] < 0) r[i] += p;
        }
        ptrim(r);
        return r;
    };
    while (!r1.empty()) {
        PPoly q, rem;
        pdivmod(r0, r1, p, q, rem);
        PPoly u2 = sub_scaled(u0, q, u1);
        PPoly v2 = sub_scaled(v0, q, v1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (pdeg(r0) != 0) throw std::logic_error("bezout inputs not coprime mod p");
    long inv = pinv(r0[0], p);
    u = u0;
    v = v0;
    for (auto& x : u) x = x * inv % p;
    for (auto& x : v) x = x * inv % p;
}

// Berlekamp factorization of a monic squarefree polynomial mod p. Returns the
// monic irreducible factors.
std::vector<PPoly> berlekamp(const PPoly& f, long p) {
    int n = pdeg(f);
    if (n == 1) return {f};

    // Rows of Q: x^(i*p) mod f.
    PPoly xp{0, 1};
    {
        // x^p mod f by square and multiply.
        PPoly base{0, 1}, acc{1};
        long e = p;
        while (e > 0) {
            if (e & 1) acc = pmod(pmul(acc, base, p), f, p);
            base = pmod(pmul(base, base, p), f, p);
            e >>= 1;
        }
        xp = acc;
    }
    std::vector<PPoly> rows(n);
    rows[0] = PPoly{1};
    for (int i = 1; i < n; ++i) rows[i] = pmod(pmul(rows[i - 1], xp, p), f, p);

    // Kernel of (Q - I)^T: vectors v with sum v_i x^{ip} = v mod f.
    std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (size_t j = 0; j < rows[i].size(); ++j) m[j][i] = rows[i][j];
        m[i][i] = (m[i][i] - 1 + p) % p;
    }
    // Gaussian elimination mod p, collecting a kernel basis.
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int sel = -1;
        for (int i = row; i < n; ++i)
            if (m[i][col] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(m[sel], m[row]);
        long inv = pinv(m[row][col], p);
        for (int j = 0; j < n; ++j) m[row][j] = m[row][j] * inv % p;
        for (int i = 0; i < n; ++i) {
            if (i == row || m[i][col] == 0) continue;
            long fac = m[i][col];
            for (int j = 0; j < n; ++j) {
                m[i][j] = (m[i][j] - fac * m[row][j]) % p;
                if (m[i][j] < 0) m[i][j] += p;
            }
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<PPoly> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        PPoly v(n, 0);
        v[free] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = (p - m[i][free]) % p;
        ptrim(v);
        basis.push_back(std::move(v));
    }
    size_t r = basis.size(); // dimension of the fixed-point algebra
    if (r == 1) return {f};

    std::vector<PPoly> factors{f};
    for (const PPoly& v : basis) {
        if (factors.size() == r) break;
        std::vector<PPoly> next;
        for (const PPoly& u : factors) {
            if (pdeg(u) <= 1) {
                next.push_back(u);
                continue;
            }
            PPoly rest = u;
            for (long s = 0; s < p && pdeg(rest) > 0; ++s) {
                PPoly shifted = v;
                if (shifted.empty()) shifted = PPoly{0};
                shifted[0] = (shifted[0] - s % p + p) % p;
                ptrim(shifted);
                PPoly g = pgcd(rest, shifted, p);
                if (pdeg(g) > 0 && pdeg(g) < pdeg(rest)) {
                    next.push_back(g);
                    PPoly q, rem;
                    pdivmod(rest, g, p, q, rem);
                    rest = pmonic(std::move(q), p);
                }
            }
            if (pdeg(rest) > 0) next.push_back(pmonic(std::move(rest), p));
        }
        factors = std::move(next);
    }
    return factors;
}

// ---- Hensel lifting ----

struct LiftPair {
    ZPoly g, h, u, v;
};

// One quadratic step: identities valid mod m become valid mod m*m.
void hensel_step(const ZPoly& f, LiftPair& t, const Int& m) {
    Int M = m * m;
    ZPoly fM = f;
    zmod_normalize(fM, M);
    ZPoly e = zsub_mod(fM, zmul_mod(t.g, t.h, M), M);
    ZPoly q, r;
    zdivmod_mod(zmul_mod(t.v, e, M), t.g, M, q, r);
    ZPoly dh_num = zsub_mod(e, zmul_mod(t.h, r, M), M);
    ZPoly dh, rem0;
    zdivmod_mod(dh_num, t.g, M, dh, rem0);
    if (!rem0.empty()) throw std::logic_error("hensel defect not divisible");
    t.g = zadd_mod(t.g, r, M);
    t.h = zadd_mod(t.h, dh, M);

    ZPoly one{Int(1)};
    ZPoly b = zsub_mod(zadd_mod(zmul_mod(t.u, t.g, M), zmul_mod(t.v, t.h, M), M), one, M);
    ZPoly q2, s;
    zdivmod_mod(zmul_mod(t.u, b, M), t.h, M, q2, s);
    t.u = zsub_mod(t.u, s, M);
    t.v = zsub_mod(t.v, zadd_mod(zmul_mod(t.v, b, M), zmul_mod(q2, t.g, M), M), M);
}

ZPoly ppoly_to_z(const PPoly& a) {
    ZPoly r;
    for (long x : a) r.emplace_back(x);
    ztrim(r);
    return r;
}

// Lift the factorization f = prod(mods) from mod p to mod p^(2^steps),
// recursively splitting the factor list in two.
void hensel_multi(const ZPoly& f, const std::vector<PPoly>& mods, long p, int steps,
                  const Int& P, std::vector<ZPoly>& out) {
    if (mods.size() == 1) {
        ZPoly g = f;
        zmod_normalize(g, P);
        out.push_back(std::move(g));
        return;
    }
    size_t half = mods.size() / 2;
    std::vector<PPoly> left(mods.begin(), mods.begin() + half);
    std::vector<PPoly> right(mods.begin() + half, mods.end());
    PPoly g0{1}, h0{1};
    for (const auto& q : left) g0 = pmul(g0, q, p);
    for (const auto& q : right) h0 = pmul(h0, q, p);
    PPoly u0, v0;
    pbezout(g0, h0, p, u0, v0);

    LiftPair t{ppoly_to_z(g0), ppoly_to_z(h0), ppoly_to_z(u0), ppoly_to_z(v0)};
    Int m(p);
    for (int i = 0; i < steps; ++i) {
        hensel_step(f, t, m);
        m *= m;
    }
    hensel_multi(t.g, left, p, steps, P, out);
    hensel_multi(t.h, right, p, steps, P, out);
}

Int zpoly_max_abs(const ZPoly& f) {
    Int m(0);
    for (const auto& x : f) {
        Int a = abs(x);
        if (a > m) m = a;
    }
    return m;
}

// Factor a monic squarefree integer polynomial into monic irreducibles over Z.
std::vector<ZPoly> factor_monic_squarefree_z(const ZPoly& F) {
    int n = zdeg(F);
    if (n <= 0) return {};
    if (n == 1) return {F};

    static const long primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                  41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    long best_p = 0;
    std::vector<PPoly> best_factors;
    int tried = 0;
    for (long p : primes) {
        PPoly fp(F.size());
        for (size_t i = 0; i < F.size(); ++i) {
            Int r = F[i] % p;
            if (r < 0) r += p;
            fp[i] = r.get_si();
        }
        ptrim(fp);
        if (pdeg(fp) != n) continue; // cannot happen for monic F, defensive
        PPoly d = pderiv(fp, p);
        if (d.empty()) continue;
        PPoly g = pgcd(fp, d, p);
        if (pdeg(g) != 0) continue; // not squarefree mod p
        std::vector<PPoly> fac = berlekamp(fp, p);
        if (fac.size() == 1) return {F};
        if (best_p == 0 || fac.size() < best_factors.size()) {
            best_p = p;
            best_factors = std::move(fac);
        }
        if (++tried >= 3) break;
    }
    if (best_p == 0) throw std::logic_error("no usable prime for factorization");
    long p = best_p;
    std::sort(best_factors.begin(), best_factors.end(),
              [](const PPoly& a, const PPoly& b) { return pdeg(a) < pdeg(b); });

    // Coefficient bound for any monic factor of F: 2^n * (n+1) * max|F_i| is a
    // comfortable overshoot of the Mignotte bound.
    Int bound = zpoly_max_abs(F);
    if (bound == 0) bound = 1;
    bound *= Int(n + 1);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
    Int need = 2 * bound + 1;
    int steps = 0;
    Int P(p);
    while (P < need) {
        P *= P;
        ++steps;
    }

    std::vector<ZPoly> lifted;
    hensel_multi(F, best_factors, p, steps, P, lifted);

    auto balanced = [&](const ZPoly& a) {
        ZPoly r = a;
        for (auto& x : r) {
            x %= P;
            if (x < 0) x += P;
            if (2 * x >= P) x -= P;
        }
        ztrim(r);
        return r;
    };

    std::vector<ZPoly> result;
    ZPoly rem_f = F;
    std::vector<int> live(lifted.size());
    for (size_t i = 0; i < live.size(); ++i) live[i] = (int)i;

    for (size_t d = 1; !live.empty() && 2 * d <= live.size();) {
        bool found = false;
        std::vector<int> comb(d);
        for (size_t i = 0; i < d; ++i) comb[i] = (int)i;
        while (true) {
            ZPoly prod{Int(1)};
            for (size_t i = 0; i < d; ++i) prod = zmul_mod(prod, lifted[live[comb[i]]], P);
            ZPoly cand = balanced(prod);
            ZPoly quot;
            if (!cand.empty() && cand.back() == 1 && zdivmod_monic(rem_f, cand, quot)) {
                result.push_back(cand);
                rem_f = quot;
                std::vector<int> nlive;
                for (size_t i = 0, ci = 0; i < live.size(); ++i) {
                    if (ci < d && (int)i == comb[ci]) { ++ci; continue; }
                    nlive.push_back(live[i]);
                }
                live = std::move(nlive);
                found = true;
                break;
            }
            // next combination
            int i = (int)d - 1;
            while (i >= 0 && comb[i] == (int)(live.size() - d + i)) --i;
            if (i < 0) break;
            ++comb[i];
            for (size_t j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (!found) ++d;
    }
    if (zdeg(rem_f) > 0) result.push_back(rem_f);
    return result;
}

Poly zpoly_to_poly(const ZPoly& z) {
    QVec c;
    for (const auto& x : z) c.emplace_back(Rational(x));
    return Poly(std::move(c));
}

// Monic irreducible rational factors of a monic squarefree rational polynomial.
std::vector<Poly> factor_squarefree_monic(const Poly& q) {
    int n = q.degree();
    if (n <= 0) return {};
    if (n == 1) return {q};

    // Clear denominators, strip content, force a positive leading coefficient.
    Int den(1);
    for (const auto& x : q.c) den = lcm(den, Int(x.get_den()));
    ZPoly f(q.c.size());
    for (size_t i = 0; i < q.c.size(); ++i) {
        Rational scaled = q.c[i] * Rational(den);
        f[i] = scaled.get_num();
    }
    Int content(0);
    for (const auto& x : f) content = gcd(content, x);
    if (content == 0) return {};
    for (auto& x : f) x /= content;
    if (f.back() < 0)
        for (auto& x : f) x = -x;

    // Monicize: F(X) = c^(n-1) * f(X/c) with c the leading coefficient.
    Int c = f.back();
    ZPoly F(f.size());
    F[n] = 1;
    Int pw(1);
    for (int i = n - 1; i >= 0; --i) {
        F[i] = f[i] * pw;
        pw *= c;
    }

    std::vector<ZPoly> zfactors = factor_monic_squarefree_z(F);

    std::vector<Poly> out;
    for (const ZPoly& G : zfactors) {
        // Map back: g(X) = G(cX), then make monic over Q.
        ZPoly g(G.size());
        Int cp(1);
        for (size_t i = 0; i < G.size(); ++i) {
            g[i] = G[i] * cp;
            cp *= c;
        }
        out.push_back(zpoly_to_poly(g).monic());
    }
    return out;
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    return false;
}

} // namespace

PolyFactors factor_rational(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("factoring the zero polynomial");
    PolyFactors out;
    out.leading = p.lc();
    if (p.degree() == 0) return out;
    for (const auto& [sf, mult] : squarefree_decomposition(p))
        for (const Poly& irr : factor_squarefree_monic(sf))
            out.factors.emplace_back(irr, mult);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

std::string poly_to_string(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational c = p.coeff(i);
        if (c == 0) continue;
        Rational a = c > 0 ? c : Rational(-c);
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += c > 0 ? " + " : " - ";
        }
        bool unit_coeff = (a == 1) && i > 0;
        if (!unit_coeff) {
            s += a.get_num().get_str();
            if (a.get_den() != 1) s += "/" + a.get_den().get_str();
        }
        if (i > 0) {
            if (!unit_coeff) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

} // namespace qcoh
