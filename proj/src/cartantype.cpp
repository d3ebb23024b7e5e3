#include "modlie/cartantype.hpp"

#include <algorithm>
#include <map>

#include "modlie/errors.hpp"
#include "modlie/poly.hpp"

namespace modlie {

namespace {

struct FieldTerm {
    std::size_t mono;
    int k;
    Elem c;
};

std::vector<FieldTerm> terms_of(const DividedPowerAlgebra& O, std::span<const Elem> x) {
    std::vector<FieldTerm> out;
    const std::size_t m = static_cast<std::size_t>(O.m());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) out.push_back({i / m, static_cast<int>(i % m), x[i]});
    return out;
}

std::string exponent_label(const std::vector<int>& a, bool divided) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        s += "x" + std::to_string(i + 1);
        if (divided)
            s += "^(" + std::to_string(a[i]) + ")";
        else if (a[i] > 1)
            s += "^" + std::to_string(a[i]);
    }
    return s.empty() ? "1" : s;
}

std::string field_label(const DividedPowerAlgebra& O, std::size_t mono, int k) {
    std::string f = exponent_label(O.exponent(mono), !O.truncated());
    return (f == "1" ? std::string() : f) + "d" + std::to_string(k + 1);
}

int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

// ---------------------------------------------------------------- O(m;n)

DividedPowerAlgebra::DividedPowerAlgebra(int m, std::vector<int> n, int p)
    : field_(FiniteField::get(p, 1)), m_(m), p_(p), n_(std::move(n)) {
    if (m < 1 || static_cast<int>(n_.size()) != m) throw ShapeMismatch("need one exponent bound per variable");
    std::size_t total = 1;
    for (int ni : n_) {
        if (ni < 1) throw ShapeMismatch("exponent bounds must be positive");
        bound_.push_back(ipow(p, ni));
        total *= static_cast<std::size_t>(bound_.back());
        if (total > (std::size_t{1} << 20)) throw SizeGuard("divided power algebra too large");
        if (ni != 1) truncated_ = false;
    }
    stride_.assign(static_cast<std::size_t>(m), 1);
    for (int i = m - 2; i >= 0; --i) stride_[i] = stride_[i + 1] * static_cast<std::size_t>(bound_[i + 1]);
    monomials_.reserve(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::vector<int> a(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) a[i] = static_cast<int>((idx / stride_[i]) % static_cast<std::size_t>(bound_[i]));
        monomials_.push_back(std::move(a));
    }
}

long DividedPowerAlgebra::index_of(const std::vector<int>& a) const {
    if (static_cast<int>(a.size()) != m_) return -1;
    std::size_t idx = 0;
    for (int i = 0; i < m_; ++i) {
        if (a[i] < 0 || a[i] >= bound_[i]) return -1;
        idx += static_cast<std::size_t>(a[i]) * stride_[i];
    }
    return static_cast<long>(idx);
}

std::string DividedPowerAlgebra::label(std::size_t i) const { return exponent_label(monomials_.at(i), !truncated_); }

std::optional<std::pair<Elem, std::size_t>> DividedPowerAlgebra::basis_product(std::size_t i, std::size_t j) const {
    const auto& a = monomials_[i];
    const auto& b = monomials_[j];
    std::vector<int> s(static_cast<std::size_t>(m_));
    long long coeff = 1;
    for (int k = 0; k < m_; ++k) {
        s[k] = a[k] + b[k];
        if (s[k] >= bound_[k]) return std::nullopt;
        if (!truncated_) coeff = coeff * lucas_binom(static_cast<std::uint64_t>(s[k]), static_cast<std::uint64_t>(a[k]), p_) % p_;
    }
    if (coeff % p_ == 0) return std::nullopt;
    return std::make_pair(field_->from_int(coeff), static_cast<std::size_t>(index_of(s)));
}

std::optional<std::pair<Elem, std::size_t>> DividedPowerAlgebra::basis_partial(std::size_t i, int k) const {
    std::vector<int> a = monomials_[i];
    if (a[k] == 0) return std::nullopt;
    const int c = truncated_ ? a[k] % p_ : 1;
    if (c == 0) return std::nullopt;
    --a[k];
    return std::make_pair(field_->from_int(c), static_cast<std::size_t>(index_of(a)));
}

Vec DividedPowerAlgebra::multiply(std::span<const Elem> f, std::span<const Elem> g) const {
    const FiniteField& F = *field_;
    Vec out(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!f[i]) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (!g[j]) continue;
            if (auto t = basis_product(i, j)) out[t->second] = F.add(out[t->second], F.mul(t->first, F.mul(f[i], g[j])));
        }
    }
    return out;
}

Vec DividedPowerAlgebra::partial(int k, std::span<const Elem> f) const {
    const FiniteField& F = *field_;
    Vec out(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i)
        if (f[i])
            if (auto t = basis_partial(i, k)) out[t->second] = F.add(out[t->second], F.mul(t->first, f[i]));
    return out;
}

Vec DividedPowerAlgebra::monomial(const std::vector<int>& a) const {
    const long idx = index_of(a);
    if (idx < 0) throw CoordOutOfRange("monomial exponent out of range");
    return unit_vector(dim(), static_cast<std::size_t>(idx));
}

Matrix DividedPowerAlgebra::mult_matrix(std::span<const Elem> f) const {
    Matrix mat(field_, dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        Vec col = multiply(f, unit_vector(dim(), j));
        for (std::size_t i = 0; i < dim(); ++i) mat(i, j) = col[i];
    }
    return mat;
}

DividedPowerAlgebra build_O(int m, const std::vector<int>& n, int p) { return DividedPowerAlgebra(m, n, p); }

// ---------------------------------------------------------------- vector fields

Vec field_bracket(const DividedPowerAlgebra& O, std::span<const Elem> x, std::span<const Elem> y) {
    const FiniteField& F = *O.field();
    const std::size_t m = static_cast<std::size_t>(O.m());
    Vec out(O.dim() * m, 0);
    const auto tx = terms_of(O, x), ty = terms_of(O, y);
    // [f d_i, g d_j] = f d_i(g) d_j - g d_j(f) d_i
    auto add = [&](const FieldTerm& a, const FieldTerm& b, bool negate) {
        auto d = O.basis_partial(b.mono, a.k);
        if (!d) return;
        auto prod = O.basis_product(a.mono, d->second);
        if (!prod) return;
        Elem c = F.mul(F.mul(a.c, b.c), F.mul(d->first, prod->first));
        if (negate) c = F.neg(c);
        Elem& slot = out[prod->second * m + static_cast<std::size_t>(b.k)];
        slot = F.add(slot, c);
    };
    for (const auto& a : tx)
        for (const auto& b : ty) {
            add(a, b, false);
            add(b, a, true);
        }
    return out;
}

Vec field_apply(const DividedPowerAlgebra& O, std::span<const Elem> x, std::span<const Elem> f) {
    const FiniteField& F = *O.field();
    Vec out(O.dim(), 0);
    for (const auto& a : terms_of(O, x))
        for (std::size_t j = 0; j < O.dim(); ++j) {
            if (!f[j]) continue;
            auto d = O.basis_partial(j, a.k);
            if (!d) continue;
            auto prod = O.basis_product(a.mono, d->second);
            if (!prod) continue;
            out[prod->second] = F.add(out[prod->second], F.mul(F.mul(a.c, f[j]), F.mul(d->first, prod->first)));
        }
    return out;
}

Vec field_divergence(const DividedPowerAlgebra& O, std::span<const Elem> x) {
    const FiniteField& F = *O.field();
    Vec out(O.dim(), 0);
    for (const auto& a : terms_of(O, x))
        if (auto d = O.basis_partial(a.mono, a.k)) out[d->second] = F.add(out[d->second], F.mul(a.c, d->first));
    return out;
}

Vec field_from_components(const DividedPowerAlgebra& O, const std::vector<Vec>& comps) {
    const std::size_t m = static_cast<std::size_t>(O.m());
    if (comps.size() != m) throw ShapeMismatch("one component per variable");
    Vec out(O.dim() * m, 0);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < O.dim(); ++i) out[i * m + k] = comps[k].at(i);
    return out;
}

Vec field_component(const DividedPowerAlgebra& O, std::span<const Elem> x, int k) {
    const std::size_t m = static_cast<std::size_t>(O.m());
    Vec out(O.dim(), 0);
    for (std::size_t i = 0; i < O.dim(); ++i) out[i] = x[i * m + static_cast<std::size_t>(k)];
    return out;
}

Matrix WittAlgebra::action_on_O(std::span<const Elem> x) const {
    Matrix mat(O.field(), O.dim(), O.dim());
    for (std::size_t j = 0; j < O.dim(); ++j) {
        Vec col = field_apply(O, x, unit_vector(O.dim(), j));
        for (std::size_t i = 0; i < O.dim(); ++i) mat(i, j) = col[i];
    }
    return mat;
}

WittAlgebra build_W(int m, const std::vector<int>& n, int p) {
    std::size_t dim = static_cast<std::size_t>(m);
    for (int ni : n) {
        dim *= static_cast<std::size_t>(ipow(p, ni));
        if (dim > kMaxCartanDim) throw SizeGuard("W(m;n) dimension exceeds " + std::to_string(kMaxCartanDim));
    }
    WittAlgebra w;
    w.O = build_O(m, n, p);
    std::vector<std::string> labels;
    for (std::size_t mono = 0; mono < w.O.dim(); ++mono)
        for (int k = 0; k < m; ++k) labels.push_back(field_label(w.O, mono, k));
    std::string name = "W(" + std::to_string(m) + ";";
    for (std::size_t i = 0; i < n.size(); ++i) name += (i ? "," : "") + std::to_string(n[i]);
    name += ")/F" + std::to_string(p);
    const std::size_t d = w.O.dim() * static_cast<std::size_t>(m);
    w.algebra = LieAlgebra::from_bracket(
        w.O.field(), std::move(labels),
        [&](std::size_t i, std::size_t j) { return field_bracket(w.O, unit_vector(d, i), unit_vector(d, j)); },
        name);
    return w;
}

Grading grade_W(const WittAlgebra& w, const std::vector<int>& degrees) {
    const int m = w.O.m();
    if (static_cast<int>(degrees.size()) != m) throw ShapeMismatch("one degree per variable");
    std::vector<int> deg(w.algebra.dim());
    for (std::size_t mono = 0; mono < w.O.dim(); ++mono) {
        int s = 0;
        for (int i = 0; i < m; ++i) s += w.O.exponent(mono)[i] * degrees[i];
        for (int k = 0; k < m; ++k) deg[w.index(mono, k)] = s - degrees[k];
    }
    return make_grading(w.algebra, std::move(deg));
}

FieldSubalgebra field_subalgebra(const DividedPowerAlgebra& O, std::vector<Vec> fields, std::vector<std::string> labels,
                                 std::string name) {
    const std::size_t ambient = O.dim() * static_cast<std::size_t>(O.m());
    Coordinatizer coords(O.field(), ambient);
    for (const auto& f : fields)
        if (!coords.add(f)) throw ShapeMismatch("vector fields are linearly dependent");
    FieldSubalgebra out;
    out.algebra = LieAlgebra::from_bracket(
        O.field(), std::move(labels),
        [&](std::size_t i, std::size_t j) {
            auto c = coords.coordinates(field_bracket(O, fields[i], fields[j]));
            if (!c) throw NotSubalgebra("bracket of " + std::to_string(i) + " and " + std::to_string(j) + " leaves the span");
            return *c;
        },
        std::move(name));
    out.fields = std::move(fields);
    return out;
}

// ---------------------------------------------------------------- Hamiltonian

Vec D_H(const DividedPowerAlgebra& O, std::span<const Elem> f) {
    if (O.m() != 2) throw ShapeMismatch("D_H needs two variables");
    const FiniteField& F = *O.field();
    Vec d2 = O.partial(1, f);
    for (auto& c : d2) c = F.neg(c);
    return field_from_components(O, {d2, O.partial(0, f)});
}

Hamiltonian2 build_H2(int p) {
    if (p < 3) throw BadPrime("H(2;1) needs p >= 3");
    Hamiltonian2 h{build_W(2, {1, 1}, p), {}, {}};
    const DividedPowerAlgebra& O = h.W.O;
    std::vector<Vec> gens;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < O.dim(); ++i) {
        const auto& a = O.exponent(i);
        const int deg = a[0] + a[1];
        if (deg == 0 || deg == 2 * (p - 1)) continue;
        gens.push_back(D_H(O, unit_vector(O.dim(), i)));
        labels.push_back("DH(" + O.label(i) + ")");
    }
    h.second_derived = field_subalgebra(O, gens, labels, "H(2;1)^(2)/F" + std::to_string(p));

    gens.push_back(D_H(O, O.monomial({p - 1, p - 1})));
    labels.push_back("DH(" + O.label(static_cast<std::size_t>(O.index_of({p - 1, p - 1}))) + ")");
    std::vector<Vec> zero(2, Vec(O.dim(), 0));
    for (int k = 0; k < 2; ++k) {
        std::vector<int> a(2, 0);
        a[k] = p - 1;
        std::vector<Vec> comps = zero;
        comps[1 - k] = O.monomial(a);  // x_k^{p-1} d_{other}
        gens.push_back(field_from_components(O, comps));
        labels.push_back(field_label(O, static_cast<std::size_t>(O.index_of(a)), 1 - k));
    }
    // These fields must be exactly the divergence-free part of W(2;1).
    Matrix div(O.field(), O.dim(), h.W.algebra.dim());
    for (std::size_t j = 0; j < h.W.algebra.dim(); ++j) {
        Vec col = field_divergence(O, unit_vector(h.W.algebra.dim(), j));
        for (std::size_t i = 0; i < O.dim(); ++i) div(i, j) = col[i];
    }
    Subspace ker = kernel(div);
    Subspace spanned = Subspace::span(O.field(), h.W.algebra.dim(), gens);
    if (!(ker == spanned)) throw std::logic_error("H(2;1) basis does not match the divergence-free fields");
    h.full = field_subalgebra(O, std::move(gens), std::move(labels), "H(2;1)/F" + std::to_string(p));
    return h;
}

long poisson_index(int p, int a, int b) {
    if (a < 0 || b < 0 || a >= p || b >= p) return -1;
    const int deg = a + b;
    if (deg == 0 || deg >= 2 * (p - 1)) return -1;
    // Row-major over (a, b) with (0,0) skipped.
    return static_cast<long>(a) * p + b - 1;
}

LieAlgebra build_poisson_H(int p) {
    if (p < 5) throw BadPrime("Poisson model needs p >= 5");
    Field f = FiniteField::get(p, 1);
    std::vector<std::pair<int, int>> mono;
    std::vector<std::string> labels;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            if (poisson_index(p, a, b) >= 0) {
                mono.push_back({a, b});
                labels.push_back(exponent_label({a, b}, false));
            }
    const std::size_t n = mono.size();
    return LieAlgebra::from_bracket(
        f, std::move(labels),
        [&](std::size_t i, std::size_t j) {
            Vec out(n, 0);
            auto [m1, m2] = mono[i];
            auto [n1, n2] = mono[j];
            const long idx = poisson_index(p, m1 + n1 - 1, m2 + n2 - 1);
            if (idx >= 0) out[static_cast<std::size_t>(idx)] = f->from_int(static_cast<long long>(m1) * n2 - static_cast<long long>(m2) * n1);
            return out;
        },
        "Poisson/F" + std::to_string(p));
}

// ---------------------------------------------------------------- Block and Albert-Zassenhaus

long block_index(int p, int a1, int a2) {
    a1 = ((a1 % p) + p) % p;
    a2 = ((a2 % p) + p) % p;
    if (a1 == 0 && a2 == 0) return -1;
    return static_cast<long>(a1) * p + a2 - 1;
}

LieAlgebra build_block(int p) {
    if (p < 3) throw BadPrime("Block algebra needs p >= 3");
    Field f = FiniteField::get(p, 1);
    std::vector<std::pair<int, int>> roots;
    std::vector<std::string> labels;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            if (a || b) {
                roots.push_back({a, b});
                labels.push_back("v(" + std::to_string(a) + "," + std::to_string(b) + ")");
            }
    const std::size_t n = roots.size();
    return LieAlgebra::from_bracket(
        f, std::move(labels),
        [&](std::size_t i, std::size_t j) {
            Vec out(n, 0);
            auto [a1, a2] = roots[i];
            auto [b1, b2] = roots[j];
            const long idx = block_index(p, a1 + b1, a2 + b2);
            if (idx >= 0) out[static_cast<std::size_t>(idx)] = f->from_int(a1 * b2 - a2 * b1);
            return out;
        },
        "Block/F" + std::to_string(p));
}

LieAlgebra build_AZ(int p) {
    if (p < 3) throw BadPrime("Albert-Zassenhaus algebra needs p >= 3");
    Field f = FiniteField::get(p, 2);
    const FiniteField& F = *f;
    const std::size_t n = static_cast<std::size_t>(F.order());
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) labels.push_back("u[" + F.format(static_cast<Elem>(a)) + "]");
    return LieAlgebra::from_bracket(
        f, std::move(labels),
        [&](std::size_t i, std::size_t j) {
            const Elem a = static_cast<Elem>(i), b = static_cast<Elem>(j);
            // beta - alpha + alpha Theta(beta) - beta Theta(alpha)
            Elem c = F.sub(b, a);
            c = F.add(c, F.mul(a, F.frobenius(b)));
            c = F.sub(c, F.mul(b, F.frobenius(a)));
            Vec out(n, 0);
            out[F.add(a, b)] = c;
            return out;
        },
        "AZ/F" + std::to_string(p) + "^2");
}

// ---------------------------------------------------------------- contact and special

Vec D_K(const DividedPowerAlgebra& O, std::span<const Elem> f) {
    if (O.m() != 3) throw ShapeMismatch("D_K needs three variables");
    const FiniteField& F = *O.field();
    const Vec x1 = O.monomial({1, 0, 0}), x2 = O.monomial({0, 1, 0});
    const Vec d1 = O.partial(0, f), d2 = O.partial(1, f), d3 = O.partial(2, f);
    Vec f1 = O.multiply(x1, d3), f2 = O.multiply(x2, d3);
    const Vec x1d1 = O.multiply(x1, d1), x2d2 = O.multiply(x2, d2);
    Vec f3(O.dim(), 0);
    for (std::size_t i = 0; i < O.dim(); ++i) {
        f1[i] = F.sub(f1[i], d2[i]);
        f2[i] = F.add(f2[i], d1[i]);
        f3[i] = F.sub(F.sub(F.add(f[i], f[i]), x1d1[i]), x2d2[i]);
    }
    return field_from_components(O, {f1, f2, f3});
}

FieldSubalgebra build_K3(int p) {
    if (p < 5) throw BadPrime("K(3;1) needs p >= 5");
    DividedPowerAlgebra O = build_O(3, {1, 1, 1}, p);
    std::vector<Vec> gens;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < O.dim(); ++i) {
        gens.push_back(D_K(O, unit_vector(O.dim(), i)));
        labels.push_back("DK(" + O.label(i) + ")");
    }
    return field_subalgebra(O, std::move(gens), std::move(labels), "K(3;1)/F" + std::to_string(p));
}

FieldSubalgebra build_S3(int p) {
    if (p < 5) throw BadPrime("S(3;1) needs p >= 5");
    DividedPowerAlgebra O = build_O(3, {1, 1, 1}, p);
    const std::size_t m = 3, ambient = O.dim() * m;
    // The divergence preserves the weight a - e_k, so its kernel splits over weights.
    std::map<std::vector<int>, std::vector<std::size_t>> by_weight;
    for (std::size_t mono = 0; mono < O.dim(); ++mono)
        for (int k = 0; k < 3; ++k) {
            std::vector<int> w = O.exponent(mono);
            --w[k];
            by_weight[w].push_back(mono * m + static_cast<std::size_t>(k));
        }
    std::vector<Vec> sfree;
    std::vector<std::vector<int>> sweight;
    for (const auto& [w, cols] : by_weight) {
        Matrix div(O.field(), O.dim(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            Vec d = field_divergence(O, unit_vector(ambient, cols[c]));
            for (std::size_t i = 0; i < O.dim(); ++i) div(i, c) = d[i];
        }
        Subspace ker = kernel(div);
        for (std::size_t r = 0; r < ker.dim(); ++r) {
            Vec v(ambient, 0);
            for (std::size_t c = 0; c < cols.size(); ++c) v[cols[c]] = ker.basis_row(r)[c];
            sfree.push_back(std::move(v));
            sweight.push_back(w);
        }
    }
    std::map<std::vector<int>, EchelonBuilder> derived;
    for (std::size_t i = 0; i < sfree.size(); ++i)
        for (std::size_t j = i + 1; j < sfree.size(); ++j) {
            Vec b = field_bracket(O, sfree[i], sfree[j]);
            if (std::all_of(b.begin(), b.end(), [](Elem c) { return c == 0; })) continue;
            std::vector<int> w(3);
            for (int k = 0; k < 3; ++k) w[k] = sweight[i][k] + sweight[j][k];
            derived.try_emplace(w, O.field(), ambient).first->second.add(b);
        }
    std::vector<Vec> gens;
    std::vector<std::string> labels;
    for (const auto& [w, eb] : derived) {
        Subspace s = eb.to_subspace();
        for (std::size_t r = 0; r < s.dim(); ++r) {
            gens.push_back(s.basis_vector(r));
            std::string l = "S[" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + "]";
            if (s.dim() > 1) l += "#" + std::to_string(r);
            labels.push_back(l);
        }
    }
    return field_subalgebra(O, std::move(gens), std::move(labels), "S(3;1)^(1)/F" + std::to_string(p));
}

Grading grade_S3(const FieldSubalgebra& s) {
    std::vector<int> deg;
    const std::size_t m = 3;
    for (const auto& v : s.fields) {
        std::optional<int> d;
        const int p = s.algebra.field()->p();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i]) continue;
            const std::size_t mono = i / m;
            const int k = static_cast<int>(i % m);
            const int a3 = static_cast<int>(mono % static_cast<std::size_t>(p));  // x3 is the fastest index
            const int di = (k == 2 ? 1 : 0) - a3;
            if (d && *d != di) throw ShapeMismatch("basis field is not homogeneous");
            d = di;
        }
        deg.push_back(d.value_or(0));
    }
    return make_grading(s.algebra, std::move(deg));
}

// ---------------------------------------------------------------- W ltimes O

SemidirectWO build_W_ltimes_O(int m, int p) {
    SemidirectWO s{build_W(m, std::vector<int>(static_cast<std::size_t>(m), 1), p), {}, {}};
    const DividedPowerAlgebra& O = s.W.O;
    const LieAlgebra& W = s.W.algebra;
    const std::size_t nw = W.dim(), no = O.dim(), n = nw + no;
    std::vector<std::string> labels = W.labels();
    for (std::size_t i = 0; i < no; ++i) labels.push_back("[" + O.label(i) + "]");
    s.algebra = LieAlgebra::from_bracket(
        O.field(), std::move(labels),
        [&](std::size_t i, std::size_t j) {
            Vec out(n, 0);
            if (i < nw && j < nw) {
                auto b = W.bracket_basis(i, j);
                std::copy(b.begin(), b.end(), out.begin());
            } else if (i < nw) {
                Vec img = field_apply(O, W.basis_vector(i), unit_vector(no, j - nw));
                std::copy(img.begin(), img.end(), out.begin() + static_cast<long>(nw));
            }
            return out;
        },
        W.name() + " x| O");
    for (std::size_t i = 0; i < nw; ++i) s.action.push_back(s.W.action_on_O(W.basis_vector(i)));
    for (std::size_t i = 0; i < no; ++i) s.action.push_back(O.mult_matrix(unit_vector(no, i)));
    return s;
}

}  // namespace modlie
