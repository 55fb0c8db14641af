#include "anewdsc/reference.hpp"

#include <algorithm>

#include "anewdsc/error.hpp"

namespace anewdsc::reference {

namespace {

void trim(std::vector<mpq_class>& c) {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

void trim(std::vector<mpz_class>& c) {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

// Integer polynomials for the Sturm sequence: primitive PRS keeps them small.
using ZPoly = std::vector<mpz_class>;

void make_primitive(ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) g = gcd(g, c);
    if (g > 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// r with |lc(b)|^(deg a - deg b + 1) a = q b + r; the positive multiplier keeps signs.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
    const mpz_class lb = b.back();
    const mpz_class alb = abs(lb);
    const int db = static_cast<int>(b.size()) - 1;
    mpz_class f;
    while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
        const int shift = static_cast<int>(a.size()) - 1 - db;
        const mpz_class la = a.back();
        // a := |lb| a - sgn(lb) la x^shift b
        for (auto& c : a) c *= alb;
        f = la * sgn(lb);
        for (int i = 0; i <= db; ++i) a[i + shift] -= f * b[i];
        trim(a);
    }
    return a;
}

ZPoly derivative_z(const ZPoly& p) {
    ZPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
    trim(d);
    return d;
}

// sign of p(num/den), den > 0
int sign_at(const ZPoly& p, const mpz_class& num, const mpz_class& den) {
    // homogeneous Horner: sum c_i num^i den^(d-i)
    mpz_class acc = 0, dpow = 1;
    const std::size_t d = p.size() - 1;
    for (std::size_t i = d + 1; i-- > 0;) {
        acc = acc * num + p[i] * dpow;
        dpow *= den;
    }
    return sgn(acc);
}

std::vector<ZPoly> sturm_sequence(const ExactPoly& p) {
    std::vector<ZPoly> seq{primitive_integer(p)};
    ZPoly d = derivative_z(seq[0]);
    if (d.empty()) return seq;
    make_primitive(d);
    seq.push_back(d);
    for (;;) {
        ZPoly r = pseudo_remainder(seq[seq.size() - 2], seq.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        make_primitive(r);
        seq.push_back(std::move(r));
    }
    return seq;
}

int variations_at(const std::vector<ZPoly>& seq, const mpz_class& num, const mpz_class& den) {
    int count = 0, last = 0;
    for (const auto& s : seq) {
        const int v = sign_at(s, num, den);
        if (v == 0) continue;
        if (last != 0 && v != last) ++count;
        last = v;
    }
    return count;
}

int variations_at_infinity(const std::vector<ZPoly>& seq, int side) {
    int count = 0, last = 0;
    for (const auto& s : seq) {
        int v = sgn(s.back());
        if (side < 0 && (s.size() - 1) % 2 == 1) v = -v;
        if (last != 0 && v != last) ++count;
        last = v;
    }
    return count;
}

} // namespace

ExactPoly::ExactPoly(std::vector<mpq_class> c) : coeffs(std::move(c)) {
    for (auto& x : coeffs) x.canonicalize();
    trim(coeffs);
}

ExactPoly ExactPoly::from_integers(const std::vector<mpz_class>& c) {
    std::vector<mpq_class> q(c.begin(), c.end());
    return ExactPoly(std::move(q));
}

mpq_class to_rational(const Dyadic& x) {
    mpq_class q(x.mantissa());
    if (x.exponent() >= 0)
        mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(x.exponent()));
    else
        mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-x.exponent()));
    return q;
}

ExactPoly ExactPoly::from_dyadics(const std::vector<Dyadic>& c) {
    std::vector<mpq_class> q;
    q.reserve(c.size());
    for (const auto& x : c) q.push_back(to_rational(x));
    return ExactPoly(std::move(q));
}

ExactPoly from_oracle(const CoefficientOracle& p) {
    if (!p.exact()) throw Error(ErrorKind::invalid_input, "reference needs an exact oracle");
    return ExactPoly::from_dyadics(p.approximate(Precision{1}).coeffs);
}

Oracle to_oracle(const ExactPoly& p) { return from_rational_poly(p.coeffs); }

mpq_class evaluate(const ExactPoly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (std::size_t i = p.coeffs.size(); i-- > 0;) acc = acc * x + p.coeffs[i];
    return acc;
}

ExactPoly derivative(const ExactPoly& p) {
    std::vector<mpq_class> d;
    for (std::size_t i = 1; i < p.coeffs.size(); ++i) d.push_back(p.coeffs[i] * static_cast<unsigned long>(i));
    return ExactPoly(std::move(d));
}

ExactPoly operator+(const ExactPoly& a, const ExactPoly& b) {
    std::vector<mpq_class> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
    return ExactPoly(std::move(c));
}

ExactPoly operator-(const ExactPoly& a, const ExactPoly& b) {
    std::vector<mpq_class> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] -= b.coeffs[i];
    return ExactPoly(std::move(c));
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> c(a.coeffs.size() + b.coeffs.size() - 1);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    return ExactPoly(std::move(c));
}

std::pair<ExactPoly, ExactPoly> divmod(const ExactPoly& a, const ExactPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::invalid_input, "division by the zero polynomial");
    std::vector<mpq_class> r = a.coeffs;
    const int db = b.degree();
    std::vector<mpq_class> q(std::max(0, a.degree() - db + 1));
    while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
        const int shift = static_cast<int>(r.size()) - 1 - db;
        const mpq_class f = r.back() / b.leading();
        q[shift] = f;
        for (int i = 0; i <= db; ++i) r[i + shift] -= f * b.coeffs[i];
        r.pop_back();
        trim(r);
    }
    return {ExactPoly(std::move(q)), ExactPoly(std::move(r))};
}

ExactPoly gcd(ExactPoly a, ExactPoly b) {
    // primitive remainder sequence over Z; rational Euclid blows up the coefficients
    if (a.is_zero()) std::swap(a, b);
    if (a.is_zero()) return a;
    ZPoly x = primitive_integer(a);
    ZPoly y = b.is_zero() ? ZPoly{} : primitive_integer(b);
    while (!y.empty()) {
        ZPoly r = pseudo_remainder(std::move(x), y);
        make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    ExactPoly g = ExactPoly::from_integers(x);
    const mpq_class lc = g.leading();
    for (auto& c : g.coeffs) c /= lc;
    return g;
}

std::vector<mpz_class> primitive_integer(const ExactPoly& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs) l = lcm(l, c.get_den());
    std::vector<mpz_class> z;
    z.reserve(p.coeffs.size());
    for (const auto& c : p.coeffs) z.push_back(c.get_num() * (l / c.get_den()));
    trim(z);
    make_primitive(z);
    if (!z.empty() && z.back() < 0)
        for (auto& c : z) c = -c;
    return z;
}

ExactPoly square_free_part(const ExactPoly& p) {
    if (p.is_zero()) throw Error(ErrorKind::invalid_input, "zero polynomial has no square-free part");
    const ExactPoly g = gcd(p, derivative(p));
    return ExactPoly::from_integers(primitive_integer(divmod(p, g).first));
}

int sturm_count(const ExactPoly& p, const mpq_class& a, const mpq_class& b) {
    if (p.is_zero()) throw Error(ErrorKind::invalid_input, "zero polynomial");
    if (sgn(evaluate(p, a)) == 0 || sgn(evaluate(p, b)) == 0)
        throw Error(ErrorKind::invalid_input, "Sturm count needs nonzero endpoint values");
    if (a >= b) return 0;
    const auto seq = sturm_sequence(p);
    return variations_at(seq, a.get_num(), a.get_den()) - variations_at(seq, b.get_num(), b.get_den());
}

int real_root_count(const ExactPoly& p) {
    if (p.is_zero()) throw Error(ErrorKind::invalid_input, "zero polynomial");
    const auto seq = sturm_sequence(p);
    return variations_at_infinity(seq, -1) - variations_at_infinity(seq, 1);
}

ExactPoly exact_transform(const ExactPoly& p, const mpq_class& a, const mpq_class& b) {
    const int n = p.degree();
    const ExactPoly lin(std::vector<mpq_class>{b, a});
    const ExactPoly xp1(std::vector<mpq_class>{1, 1});
    // powers of (ax+b) and (x+1)
    std::vector<ExactPoly> pa{ExactPoly({mpq_class(1)})}, pb{ExactPoly({mpq_class(1)})};
    for (int i = 1; i <= n; ++i) {
        pa.push_back(pa.back() * lin);
        pb.push_back(pb.back() * xp1);
    }
    ExactPoly sum;
    for (int i = 0; i <= n; ++i) {
        if (sgn(p.coeffs[i]) == 0) continue;
        ExactPoly term = pa[i] * pb[n - i];
        for (auto& c : term.coeffs) c *= p.coeffs[i];
        sum = sum + term;
    }
    // keep length n+1 so coefficient positions line up
    sum.coeffs.resize(n + 1);
    return sum;
}

ExactPoly exact_transform(const ExactPoly& p, const Interval& I) {
    return exact_transform(p, to_rational(I.a), to_rational(I.b));
}

int sign_variations(const std::vector<mpq_class>& seq) {
    int count = 0, last = 0;
    for (const auto& c : seq) {
        const int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int exact_var(const ExactPoly& p, const Interval& I) { return sign_variations(exact_transform(p, I).coeffs); }

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::vector<mpq_class> bernstein_unit(const ExactPoly& p) {
    const int n = p.degree();
    std::vector<mpq_class> b(n + 1);
    for (int k = 0; k <= n; ++k)
        for (int i = 0; i <= k; ++i) {
            mpq_class w(binomial(k, i), binomial(n, i));
            w.canonicalize();
            b[k] += w * p.coeffs[i];
        }
    return b;
}

std::pair<std::vector<mpq_class>, std::vector<mpq_class>> de_casteljau_split(const std::vector<mpq_class>& b,
                                                                          const mpq_class& t) {
    const std::size_t n = b.size() - 1;
    std::vector<mpq_class> work = b, left(n + 1), right(n + 1);
    const mpq_class s = 1 - t;
    left[0] = work[0];
    right[n] = work[n];
    for (std::size_t r = 1; r <= n; ++r) {
        for (std::size_t i = 0; i + r <= n; ++i) work[i] = s * work[i] + t * work[i + 1];
        left[r] = work[0];
        right[n - r] = work[n - r];
    }
    return {left, right};
}

} // namespace anewdsc::reference
