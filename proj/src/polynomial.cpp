#include "pqderiv/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace pqderiv {

namespace {

void trim(std::vector<Rat>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(c_); }

Poly Poly::constant(const Rat& c) { return Poly({c}); }

Poly Poly::x() { return Poly({Rat(0), Rat(1)}); }

const Rat& Poly::leading() const {
    if (c_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return c_.back();
}

Rat Poly::eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rat(static_cast<long>(k));
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rat(1) / leading());
}

Poly Poly::primitive() const {
    if (is_zero()) return *this;
    Int den_lcm = 1;
    for (const auto& c : c_) {
        Int d = denominator(c);
        den_lcm = lcm(den_lcm, d);
    }
    std::vector<Int> ic(c_.size());
    Int content = 0;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        Rat scaledc = c_[k] * den_lcm;
        ic[k] = numerator(scaledc);
        content = gcd(content, ic[k]);
    }
    if (ic.back() < 0) content = -content;
    std::vector<Rat> out(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) out[k] = Rat(ic[k] / content);
    return Poly(std::move(out));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) + o.coeff(k);
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) - o.coeff(k);
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j] != 0) r[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(r));
}

Poly Poly::scaled(const Rat& c) const {
    std::vector<Rat> r(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) r[k] = c * c_[k];
    return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rat> rem = c_;
    const int dd = divisor.degree();
    if (degree() < dd) return {Poly(), *this};
    std::vector<Rat> quo(degree() - dd + 1);
    for (int k = degree(); k >= dd; --k) {
        const Rat f = rem[k] / divisor.leading();
        if (f == 0) continue;
        quo[k - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * divisor.coeffs()[j];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat c = coeff(k);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        const Rat a = abs(c);
        if (k == 0 || a != 1) os << to_string(a);
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(1), s1;
    Poly t0, t1 = Poly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Rat inv = Rat(1) / r0.leading();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Poly char_poly(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly of non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Rat> c(n + 1);
    c[n] = 1;
    Matrix mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) mk = m * mk;
        c[n - k] = -mk.trace() / Rat(static_cast<long>(k));
        if (k < n) mk = mk + Matrix::identity(n).scaled(c[n - k]);
    }
    return Poly(std::move(c));
}

namespace {

// All positive divisors of |n|, n != 0, by trial division.
std::vector<Int> divisors(Int n) {
    if (n < 0) n = -n;
    std::vector<std::pair<Int, int>> fac;
    for (Int p = 2; p * p <= n; p == 2 ? p = 3 : p += 2) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            fac.emplace_back(p, e);
        }
    }
    if (n > 1) fac.emplace_back(n, 1);
    std::vector<Int> ds{1};
    for (const auto& [p, e] : fac) {
        const std::size_t sz = ds.size();
        Int pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pe);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

int root_multiplicity(Poly& p, const Rat& t) {
    int mult = 0;
    const Poly lin({-t, Rat(1)});
    for (;;) {
        auto [q, r] = p.divmod(lin);
        if (!r.is_zero()) break;
        p = std::move(q);
        ++mult;
    }
    return mult;
}

}  // namespace

std::vector<std::pair<Rat, int>> rational_roots(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots of zero polynomial");
    std::vector<std::pair<Rat, int>> roots;
    Poly w = p;
    // Strip x^m first.
    int zero_mult = 0;
    while (!w.is_zero() && w.coeff(0) == 0) {
        std::vector<Rat> c(w.coeffs().begin() + 1, w.coeffs().end());
        w = Poly(std::move(c));
        ++zero_mult;
    }
    if (zero_mult > 0) roots.emplace_back(Rat(0), zero_mult);
    if (w.degree() < 1) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    const Poly pr = w.primitive();
    const Int a0 = numerator(pr.coeff(0));
    const Int an = numerator(pr.leading());
    for (const Int& r : divisors(a0)) {
        for (const Int& s : divisors(an)) {
            if (gcd(r, s) != 1) continue;
            for (int sign : {1, -1}) {
                const Rat t(sign * r, s);
                if (w.eval(t) != 0) continue;
                roots.emplace_back(t, root_multiplicity(w, t));
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace {

// Lagrange interpolation through (xs[i], ys[i]).
Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    Poly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly li = Poly::constant(1);
        Rat den = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            li = li * Poly({-xs[j], Rat(1)});
            den *= xs[i] - xs[j];
        }
        acc = acc + li.scaled(ys[i] / den);
    }
    return acc;
}

// One irreducible factor of degree in [2, deg/2] of a primitive squarefree
// integer polynomial with no rational roots, or nothing when g is irreducible.
std::optional<Poly> kronecker_split(const Poly& g) {
    const int deg = g.degree();
    for (int d = 2; d <= deg / 2; ++d) {
        std::vector<Rat> xs;
        std::vector<std::vector<Int>> choices;
        for (long v = 0; static_cast<int>(xs.size()) < d + 1; v = v <= 0 ? -v + 1 : -v) {
            const Rat x(v);
            const Rat gx = g.eval(x);
            // No rational roots remain, so g(x) != 0 at integer points.
            xs.push_back(x);
            std::vector<Int> ds;
            for (const Int& u : divisors(numerator(gx))) {
                ds.push_back(u);
                ds.push_back(-u);
            }
            choices.push_back(std::move(ds));
        }
        std::vector<std::size_t> idx(d + 1, 0);
        std::vector<Rat> ys(d + 1);
        for (;;) {
            for (int i = 0; i <= d; ++i) ys[i] = Rat(choices[i][idx[i]]);
            Poly h = interpolate(xs, ys);
            if (h.degree() == d) {
                h = h.primitive();
                auto [q, r] = g.divmod(h);
                if (r.is_zero()) return h;
            }
            int i = 0;
            while (i <= d && ++idx[i] == choices[i].size()) idx[i++] = 0;
            if (i > d) break;
        }
    }
    return std::nullopt;
}

// Factor a squarefree polynomial into irreducibles (primitive integer form).
std::vector<Poly> factor_squarefree(Poly s) {
    std::vector<Poly> out;
    for (const auto& [t, mult] : rational_roots(s)) {
        const Poly lin = Poly({-t, Rat(1)}).primitive();
        for (int i = 0; i < mult; ++i) {
            out.push_back(lin);
            s = s.divmod(Poly({-t, Rat(1)})).first;
        }
    }
    s = s.primitive();
    while (s.degree() >= 2) {
        if (s.degree() <= 3) {  // no rational roots left, so irreducible
            out.push_back(s);
            break;
        }
        auto piece = kronecker_split(s);
        if (!piece) {
            out.push_back(s);
            break;
        }
        // Recurse on the found factor in case it is itself reducible.
        for (const auto& f : factor_squarefree(*piece)) out.push_back(f);
        s = s.divmod(*piece).first.primitive();
    }
    return out;
}

}  // namespace

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero polynomial");
    std::vector<std::pair<Poly, int>> out;
    Poly f = p.monic();
    if (f.degree() < 1) return out;
    Poly c = poly_gcd(f, f.derivative());
    Poly w = f.divmod(c).first;
    int i = 1;
    while (c.degree() > 0) {
        Poly y = poly_gcd(w, c);
        Poly z = w.divmod(y).first;
        if (z.degree() > 0) out.emplace_back(z, i);
        ++i;
        w = std::move(y);
        c = c.divmod(w).first;
    }
    if (w.degree() > 0) out.emplace_back(w, i);
    return out;
}

std::vector<std::pair<Poly, int>> factor_polynomial(const Poly& p, int degree_cap) {
    if (p.is_zero()) throw std::invalid_argument("factor of zero polynomial");
    if (p.degree() > degree_cap)
        throw DegreeCapExceeded("polynomial degree " + std::to_string(p.degree()) +
                                " exceeds cap " + std::to_string(degree_cap));
    std::vector<std::pair<Poly, int>> out;
    for (const auto& [sf, mult] : squarefree_decomposition(p))
        for (const auto& irr : factor_squarefree(sf)) out.emplace_back(irr, mult);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.coeffs() < b.first.coeffs();
    });
    return out;
}

Matrix poly_at_matrix(const Poly& p, const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("poly_at_matrix needs a square matrix");
    const std::size_t n = m.rows();
    Matrix acc(n, n);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * m + Matrix::identity(n).scaled(*it);
    return acc;
}

}  // namespace pqderiv
