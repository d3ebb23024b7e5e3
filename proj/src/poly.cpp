#include "modlie/poly.hpp"

#include <algorithm>
#include <functional>

#include "modlie/errors.hpp"

namespace modlie {

Poly::Poly(Field f, Vec coeffs) : field_(std::move(f)), c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(Field f, Elem c) { return Poly(std::move(f), Vec{c}); }
Poly Poly::x(Field f) { return Poly(std::move(f), Vec{0, 1}); }

Poly Poly::monomial(Field f, std::size_t deg, Elem c) {
    Vec v(deg + 1, 0);
    v[deg] = c;
    return Poly(std::move(f), std::move(v));
}

Poly Poly::from_ints(Field f, const std::vector<long long>& coeffs) {
    Vec v;
    for (long long c : coeffs) v.push_back(f->from_int(c));
    return Poly(std::move(f), std::move(v));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Poly r = *this;
    scale(*field_, field_->inv(lead()), r.c_.data(), r.c_.size());
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    Vec d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = field_->mul(field_->from_int(static_cast<long long>(i)), c_[i]);
    return Poly(field_, std::move(d));
}

Elem Poly::eval(Elem x) const noexcept {
    Elem r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = field_->add(field_->mul(r, x), c_[i]);
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    Vec c(std::max(a.c_.size(), b.c_.size()), 0);
    std::copy(a.c_.begin(), a.c_.end(), c.begin());
    axpy(*a.field_, 1, b.c_.data(), c.data(), b.c_.size());
    return Poly(a.field_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    Vec c(std::max(a.c_.size(), b.c_.size()), 0);
    std::copy(a.c_.begin(), a.c_.end(), c.begin());
    axpy(*a.field_, a.field_->neg(1), b.c_.data(), c.data(), b.c_.size());
    return Poly(a.field_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    Vec c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) axpy(*a.field_, a.c_[i], b.c_.data(), c.data() + i, b.c_.size());
    return Poly(a.field_, std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const FiniteField& f = *a.field();
    Vec r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {Poly(a.field()), a};
    Vec q(a.degree() - db + 1, 0);
    const Elem li = f.inv(b.lead());
    for (int i = a.degree(); i >= db; --i) {
        Elem c = r[i];
        if (!c) continue;
        Elem t = f.mul(c, li);
        q[i - db] = t;
        axpy(f, f.neg(t), b.coeffs().data(), r.data() + (i - db), b.coeffs().size());
    }
    r.resize(db);
    return {Poly(a.field(), std::move(q)), Poly(a.field(), std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod) {
    Poly result = Poly::constant(base.field(), 1) % mod;
    Poly b = base % mod;
    while (e) {
        if (e & 1) result = (result * b) % mod;
        e >>= 1;
        if (e) b = (b * b) % mod;
    }
    return result;
}

Matrix evaluate(const Poly& f, const Matrix& m) {
    const std::size_t n = m.rows();
    Matrix r(m.field(), n, n);
    for (int i = f.degree(); i >= 0; --i) {
        r = r * m;
        Elem c = f.coeff(static_cast<std::size_t>(i));
        for (std::size_t j = 0; j < n; ++j) r(j, j) = m.field()->add(r(j, j), c);
    }
    return r;
}

namespace {

// Inverse Frobenius on coefficients: a^(1/p) = a^(q/p).
Poly pth_root(const Poly& f) {
    const FiniteField& F = *f.field();
    const int p = F.p();
    const std::uint64_t e = static_cast<std::uint64_t>(F.order() / p);
    Vec c(f.degree() / p + 1, 0);
    for (int i = 0; i <= f.degree(); i += p) c[i / p] = F.pow(f.coeff(i), e);
    return Poly(f.field(), std::move(c));
}

void squarefree_decomposition(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
    if (f.degree() <= 0) return;
    const int p = f.field()->p();
    Poly c = gcd(f, f.derivative());
    Poly w = f.monic() / c;
    int i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (z.degree() > 0) out.push_back({z.monic(), i * mult});
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) squarefree_decomposition(pth_root(c.monic()), mult * p, out);
}

Poly frobenius_power(const Poly& g, const Poly& mod) {
    return powmod(g, static_cast<std::uint64_t>(mod.field()->order()), mod);
}

// Factors a squarefree monic g all of whose irreducible factors have degree d.
void equal_degree_split(const Poly& g, int d, Rng& rng, std::vector<Poly>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const FiniteField& F = *g.field();
    const int q = F.order();
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Vec coeffs(static_cast<std::size_t>(g.degree()));
        for (auto& c : coeffs) c = rng.element(F);
        Poly a(g.field(), coeffs);
        if (a.degree() <= 0) continue;
        Poly u = gcd(a, g);
        if (u.degree() > 0 && u.degree() < g.degree()) {
            equal_degree_split(u, d, rng, out);
            equal_degree_split(g / u, d, rng, out);
            return;
        }
        Poly b(g.field());
        if (q % 2 == 1) {
            // a^((q^d-1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2)
            Poly t = a, s = a;
            for (int i = 1; i < d; ++i) {
                s = frobenius_power(s, g);
                t = (t * s) % g;
            }
            b = powmod(t, static_cast<std::uint64_t>((q - 1) / 2), g) - Poly::constant(g.field(), 1);
        } else {
            // Absolute trace to F_2: sum of a^(2^i) for i < k*d.
            Poly t = a, s = a;
            const int steps = F.degree() * d;
            for (int i = 1; i < steps; ++i) {
                s = (s * s) % g;
                t = t + s;
            }
            b = t;
        }
        u = gcd(b, g);
        if (u.degree() > 0 && u.degree() < g.degree()) {
            equal_degree_split(u, d, rng, out);
            equal_degree_split(g / u, d, rng, out);
            return;
        }
    }
    throw IterationBudget("equal-degree splitting did not converge");
}

}  // namespace

std::vector<Factor> factor(const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::domain_error("factor of zero polynomial");
    std::vector<Factor> result;
    if (f.degree() == 0) return result;
    std::vector<std::pair<Poly, int>> sqf;
    squarefree_decomposition(f.monic(), 1, sqf);
    Rng rng(seed);
    for (auto& [g0, mult] : sqf) {
        Poly g = g0;
        Poly xq = Poly::x(f.field()) % g;
        Poly h = xq;
        for (int d = 1; g.degree() >= 2 * d; ++d) {
            h = frobenius_power(h, g);
            Poly gd = gcd(g, h - Poly::x(f.field()));
            if (gd.degree() > 0) {
                std::vector<Poly> parts;
                equal_degree_split(gd, d, rng, parts);
                for (auto& part : parts) result.push_back({part, mult});
                g = g / gd;
                h = h % g;
            }
        }
        if (g.degree() > 0) result.push_back({g.monic(), mult});
    }
    std::sort(result.begin(), result.end(), [](const Factor& a, const Factor& b) {
        if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
        if (a.poly.coeffs() != b.poly.coeffs())
            return std::lexicographical_compare(a.poly.coeffs().rbegin(), a.poly.coeffs().rend(),
                                                b.poly.coeffs().rbegin(), b.poly.coeffs().rend());
        return a.multiplicity < b.multiplicity;
    });
    return result;
}

std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t seed) {
    std::vector<Poly> out;
    for (const auto& fac : factor(f, seed))
        for (int i = 0; i < fac.multiplicity; ++i) out.push_back(fac.poly);
    return out;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    auto fs = factor(f);
    return fs.size() == 1 && fs[0].multiplicity == 1;
}

Poly charpoly(const Matrix& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("charpoly of non-square matrix");
    const FiniteField& F = *m.field();
    const std::size_t n = m.rows();
    Matrix h = m;
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = n;
        for (std::size_t i = j + 1; i < n; ++i)
            if (h(i, j)) {
                piv = i;
                break;
            }
        if (piv == n) continue;
        if (piv != j + 1) {
            std::swap_ranges(h.row_ptr(piv), h.row_ptr(piv) + n, h.row_ptr(j + 1));
            for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
        }
        const Elem inv = F.inv(h(j + 1, j));
        for (std::size_t r = j + 2; r < n; ++r) {
            Elem u = F.mul(h(r, j), inv);
            if (!u) continue;
            axpy(F, F.neg(u), h.row_ptr(j + 1), h.row_ptr(r), n);
            for (std::size_t s = 0; s < n; ++s)
                if (h(s, r)) h(s, j + 1) = F.add(h(s, j + 1), F.mul(u, h(s, r)));
        }
    }
    // p_k(x) = (x - h_kk) p_{k-1} - sum_i h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}, 1-indexed.
    std::vector<Poly> p;
    p.reserve(n + 1);
    p.push_back(Poly::constant(m.field(), 1));
    const Poly x = Poly::x(m.field());
    for (std::size_t k = 1; k <= n; ++k) {
        Poly pk = (x - Poly::constant(m.field(), h(k - 1, k - 1))) * p[k - 1];
        Elem t = 1;
        for (std::size_t i = k - 1; i >= 1; --i) {
            t = F.mul(t, h(i, i - 1));
            if (!t) break;
            Elem c = F.mul(h(i - 1, k - 1), t);
            if (c) pk = pk - Poly::constant(m.field(), c) * p[i - 1];
        }
        p.push_back(std::move(pk));
    }
    return p[n];
}

int lucas_binom(std::uint64_t a, std::uint64_t b, int p) {
    int result = 1;
    const auto P = static_cast<std::uint64_t>(p);
    while (a || b) {
        const int ai = static_cast<int>(a % P), bi = static_cast<int>(b % P);
        if (bi > ai) return 0;
        // Small binomial by Pascal recursion on the digit.
        long long c = 1;
        for (int i = 0; i < bi; ++i) c = c * (ai - i) / (i + 1);
        result = static_cast<int>((result * (c % p)) % p);
        a /= P;
        b /= P;
    }
    return result;
}

}  // namespace modlie
