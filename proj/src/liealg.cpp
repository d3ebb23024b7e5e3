#include "modlie/liealg.hpp"

#include <algorithm>

#include "modlie/errors.hpp"

namespace modlie {

namespace {

Vec flatten(const Matrix& m) { return m.data(); }


// Adds the rows of m to b; stops early once b is full.
void add_rows(EchelonBuilder& b, const Matrix& m) {
    for (std::size_t r = 0; r < m.rows() && !b.is_full(); ++r) b.add(m.row(r));
}

std::vector<std::string> default_labels(const std::string& prefix, std::size_t n) {
    std::vector<std::string> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = prefix + std::to_string(i);
    return out;
}

}  // namespace

Subspace spin_under(const Field& f, std::size_t n, const std::vector<Vec>& seeds, const std::vector<Matrix>& mats) {
    EchelonBuilder b(f, n);
    std::vector<Vec> queue;
    for (const auto& s : seeds)
        if (b.add(s)) queue.push_back(s);
    for (std::size_t head = 0; head < queue.size() && !b.is_full(); ++head) {
        for (const auto& m : mats) {
            Vec v = m * queue[head];
            if (b.add(v)) queue.push_back(std::move(v));
            if (b.is_full()) break;
        }
    }
    return b.to_subspace();
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& s) {
    for (std::size_t i = 0; i < s.dim(); ++i) {
        Matrix a = L.ad(s.basis_row(i));
        for (std::size_t j = i + 1; j < s.dim(); ++j)
            if (!s.contains(a * s.basis_row(j))) return false;
    }
    return true;
}

bool is_ideal(const LieAlgebra& L, const Subspace& s) {
    for (const Matrix& g : L.generator_ads())
        for (std::size_t i = 0; i < s.dim(); ++i)
            if (!s.contains(g * s.basis_row(i))) return false;
    return true;
}

SubalgebraHandle make_handle(const LieAlgebra& L, Subspace space) {
    SubalgebraHandle h;
    h.is_ideal = is_ideal(L, space);
    h.is_subalgebra = h.is_ideal || is_subalgebra(L, space);
    h.space = std::move(space);
    return h;
}

Subspace bracket_spaces(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
    const std::size_t n = L.dim();
    EchelonBuilder eb(L.field(), n);
    if (a.is_zero() || b.is_zero()) return eb.to_subspace();
    Matrix bt = b.basis().transpose();
    for (std::size_t i = 0; i < a.dim() && !eb.is_full(); ++i) {
        Matrix img = L.ad(a.basis_row(i)) * bt;  // columns are [a_i, b_j]
        Matrix rows = img.transpose();
        add_rows(eb, rows);
    }
    return eb.to_subspace();
}

SubalgebraHandle subalgebra_closure(const LieAlgebra& L, const std::vector<Vec>& gens) {
    std::vector<Matrix> ads;
    ads.reserve(gens.size());
    for (const auto& g : gens) ads.push_back(L.ad(g));
    // Left-normed brackets of generators span the generated subalgebra.
    Subspace s = spin_under(L.field(), L.dim(), gens, ads);
    SubalgebraHandle h;
    h.is_subalgebra = true;
    h.is_ideal = is_ideal(L, s);
    h.space = std::move(s);
    return h;
}

SubalgebraHandle ideal_closure(const LieAlgebra& L, const std::vector<Vec>& gens) {
    SubalgebraHandle h;
    h.space = spin_under(L.field(), L.dim(), gens, L.generator_ads());
    h.is_subalgebra = true;
    h.is_ideal = true;
    return h;
}

SubalgebraHandle centralizer(const LieAlgebra& L, const Subspace& v) {
    EchelonBuilder eb(L.field(), L.dim());
    for (std::size_t i = 0; i < v.dim() && !eb.is_full(); ++i) add_rows(eb, L.ad(v.basis_row(i)));
    SubalgebraHandle h;
    h.space = annihilator(eb.to_subspace());
    h.is_subalgebra = true;
    h.is_ideal = is_ideal(L, h.space);
    return h;
}

SubalgebraHandle normalizer(const LieAlgebra& L, const Subspace& v) {
    if (v.is_full() || v.is_zero()) return make_handle(L, Subspace::full(L.field(), L.dim()));
    EchelonBuilder eb(L.field(), L.dim());
    Matrix proj = v.projector();
    for (std::size_t i = 0; i < v.dim() && !eb.is_full(); ++i) add_rows(eb, proj * L.ad(v.basis_row(i)));
    SubalgebraHandle h;
    h.space = annihilator(eb.to_subspace());
    h.is_subalgebra = true;
    h.is_ideal = is_ideal(L, h.space);
    return h;
}

SubalgebraHandle center(const LieAlgebra& L) {
    EchelonBuilder eb(L.field(), L.dim());
    for (const Matrix& g : L.generator_ads()) add_rows(eb, g);
    SubalgebraHandle h;
    h.space = annihilator(eb.to_subspace());
    h.is_subalgebra = true;
    h.is_ideal = true;
    return h;
}

std::vector<Subspace> derived_series(const LieAlgebra& L, const Subspace& s) {
    std::vector<Subspace> out{s};
    while (!out.back().is_zero()) {
        Subspace next = bracket_spaces(L, out.back(), out.back());
        if (next == out.back()) break;
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<Subspace> derived_series(const LieAlgebra& L) {
    return derived_series(L, Subspace::full(L.field(), L.dim()));
}

std::vector<Subspace> lower_central_series(const LieAlgebra& L, const Subspace& s) {
    std::vector<Subspace> out{s};
    while (!out.back().is_zero()) {
        Subspace next = bracket_spaces(L, s, out.back());
        if (next == out.back()) break;
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& L) {
    return lower_central_series(L, Subspace::full(L.field(), L.dim()));
}

bool is_solvable(const LieAlgebra& L, const Subspace& s) { return derived_series(L, s).back().is_zero(); }
bool is_solvable(const LieAlgebra& L) { return derived_series(L).back().is_zero(); }
bool is_nilpotent(const LieAlgebra& L) { return lower_central_series(L).back().is_zero(); }
bool is_abelian(const LieAlgebra& L, const Subspace& s) { return bracket_spaces(L, s, s).is_zero(); }
bool is_abelian(const LieAlgebra& L) { return is_abelian(L, Subspace::full(L.field(), L.dim())); }

SubalgebraHandle largest_ideal_in(const LieAlgebra& L, const Subspace& v) {
    Subspace w = v;
    const auto& gads = L.generator_ads();
    while (!w.is_zero() && !w.is_full()) {
        Matrix proj = w.projector();
        Matrix wt = w.basis().transpose();
        std::vector<Matrix> blocks;
        for (const Matrix& g : gads) blocks.push_back(proj * (g * wt));
        Subspace k = kernel(vstack(blocks));
        if (k.dim() == w.dim()) break;
        std::vector<Vec> gens;
        for (std::size_t i = 0; i < k.dim(); ++i) gens.push_back(w.combine(k.basis_row(i)));
        w = Subspace::span(L.field(), L.dim(), gens);
    }
    SubalgebraHandle h;
    h.space = std::move(w);
    h.is_subalgebra = true;
    h.is_ideal = true;
    return h;
}

std::optional<Vec> p_power(const LieAlgebra& L, std::span<const Elem> x) {
    if (!L.centerless()) throw CenterNonzero("p_power needs a centreless algebra");
    return L.solve_ad(power(L.ad(x), static_cast<unsigned long long>(L.field()->p())));
}

bool is_toral(const LieAlgebra& L, std::span<const Elem> x) {
    auto y = p_power(L, x);
    return y && std::equal(y->begin(), y->end(), x.begin(), x.end());
}

bool is_ad_nilpotent(const LieAlgebra& L, std::span<const Elem> x) {
    Matrix a = L.ad(x);
    std::size_t e = 1;
    while (e < L.dim()) {
        a = a * a;
        e *= 2;
        if (a.is_zero()) return true;
    }
    return a.is_zero();
}

bool p_power_nilpotent(const LieAlgebra& L, std::span<const Elem> x) {
    Vec y(x.begin(), x.end());
    for (std::size_t step = 0; step <= L.dim() + 1; ++step) {
        if (is_zero(y)) return true;
        auto z = p_power(L, y);
        if (!z) return false;
        y = std::move(*z);
    }
    return is_zero(y);
}

// ---------------------------------------------------------------- matrix algebras

std::optional<Vec> MatrixLieAlgebra::coordinates(const Matrix& m) const { return index->coordinates(flatten(m)); }

Matrix MatrixLieAlgebra::matrix_of(std::span<const Elem> coords) const {
    const Field& f = algebra.field();
    const std::size_t n = matrices.empty() ? 0 : matrices[0].rows();
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i]) axpy(*f, coords[i], matrices[i].row_ptr(0), m.row_ptr(0), n * n);
    return m;
}

std::optional<Vec> MatrixLieAlgebra::p_power(std::span<const Elem> x) const {
    return coordinates(power(matrix_of(x), static_cast<unsigned long long>(algebra.field()->p())));
}

MatrixLieAlgebra matrix_lie_algebra(const std::vector<Matrix>& spanning, std::vector<std::string> labels,
                                    std::string name) {
    if (spanning.empty()) throw ShapeMismatch("matrix_lie_algebra needs at least one matrix");
    const Field f = spanning[0].field();
    const std::size_t n = spanning[0].rows();
    auto index = std::make_shared<Coordinatizer>(f, n * n);
    MatrixLieAlgebra out;
    std::vector<std::string> kept_labels;
    for (std::size_t i = 0; i < spanning.size(); ++i) {
        if (index->add(flatten(spanning[i]))) {
            out.matrices.push_back(spanning[i]);
            kept_labels.push_back(i < labels.size() ? labels[i] : "m" + std::to_string(out.matrices.size() - 1));
        }
    }
    const std::size_t d = out.matrices.size();
    std::vector<Elem> table(d * d * d, 0);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            auto c = index->coordinates(flatten(commutator(out.matrices[a], out.matrices[b])));
            if (!c) throw NotSubalgebra("matrix span not closed under commutators");
            for (std::size_t k = 0; k < d; ++k) {
                table[(a * d + b) * d + k] = (*c)[k];
                table[(b * d + a) * d + k] = f->neg((*c)[k]);
            }
        }
    out.algebra = LieAlgebra(f, std::move(kept_labels), std::move(table), std::move(name));
    out.index = std::move(index);
    return out;
}

std::vector<Matrix> commutator_closure(const std::vector<Matrix>& gens) {
    if (gens.empty()) return {};
    const Field f = gens[0].field();
    const std::size_t n = gens[0].rows();
    EchelonBuilder eb(f, n * n);
    std::vector<Matrix> basis;
    for (const auto& g : gens)
        if (eb.add(flatten(g))) basis.push_back(g);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            Matrix c = commutator(basis[i], basis[j]);
            if (eb.add(flatten(c))) basis.push_back(std::move(c));
        }
    return basis;
}

std::vector<Matrix> restricted_closure(const std::vector<Matrix>& gens) {
    if (gens.empty()) return {};
    const auto p = static_cast<unsigned long long>(gens[0].field()->p());
    std::vector<Matrix> basis = commutator_closure(gens);
    while (true) {
        std::vector<Matrix> ext = basis;
        for (const auto& b : basis) ext.push_back(power(b, p));
        std::vector<Matrix> next = commutator_closure(ext);
        if (next.size() == basis.size()) return basis;
        basis = std::move(next);
    }
}

SubalgebraHandle p_closure(const LieAlgebra& L, const Subspace& h) {
    if (!L.centerless()) throw CenterNonzero("inner p-closure needs a centreless algebra");
    Subspace s = subalgebra_closure(L, h.basis_vectors()).space;
    while (true) {
        std::vector<Vec> gens = s.basis_vectors();
        for (std::size_t i = 0; i < s.dim(); ++i) {
            auto y = p_power(L, s.basis_row(i));
            if (!y) throw NotComputable("p-th power of a basis vector is not inner");
            gens.push_back(std::move(*y));
        }
        Subspace next = subalgebra_closure(L, gens).space;
        if (next.dim() == s.dim()) break;
        s = std::move(next);
    }
    return make_handle(L, std::move(s));
}

// ---------------------------------------------------------------- derivations

DerivationAlgebra derivations(const LieAlgebra& L) {
    const std::size_t n = L.dim();
    const Field& f = L.field();
    const FiniteField& F = *f;
    const auto& gens = L.lie_generators();
    const auto& gads = L.generator_ads();
    const std::size_t r = gens.size();
    const std::size_t u = r * n;  // unknowns: the images D(g_a)

    auto block = [&](std::size_t a, const Matrix& m) {
        Matrix out(f, n, u);
        for (std::size_t i = 0; i < n; ++i) std::copy(m.row_ptr(i), m.row_ptr(i) + n, out.row_ptr(i) + a * n);
        return out;
    };

    // Spin words w with linear forms: D(w) = forms[w] * unknowns.
    Coordinatizer words(f, n);
    std::vector<Vec> word_vecs;
    std::vector<Matrix> forms;
    std::vector<std::size_t> queue;
    for (std::size_t a = 0; a < r; ++a)
        if (words.add(gens[a])) {
            word_vecs.push_back(gens[a]);
            forms.push_back(block(a, Matrix::identity(f, n)));
            queue.push_back(word_vecs.size() - 1);
        }
    for (std::size_t head = 0; head < queue.size() && words.size() < n; ++head) {
        const std::size_t w = queue[head];
        Matrix adw = L.ad(word_vecs[w]);
        for (std::size_t a = 0; a < r && words.size() < n; ++a) {
            Vec v = gads[a] * word_vecs[w];
            if (!words.add(v)) continue;
            // D[g, w] = -ad(w) D(g) + ad(g) D(w)
            Matrix form = block(a, scaled(adw, F.neg(1))) + gads[a] * forms[w];
            word_vecs.push_back(std::move(v));
            forms.push_back(std::move(form));
            queue.push_back(word_vecs.size() - 1);
        }
    }
    if (words.size() != n) throw NotComputable("generators do not span the algebra");

    // Forms for the standard basis.
    std::vector<Matrix> basis_forms;
    basis_forms.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        Vec c = *words.coordinates(L.basis_vector(k));
        Matrix m(f, n, u);
        for (std::size_t l = 0; l < n; ++l)
            if (c[l]) axpy(F, c[l], forms[l].row_ptr(0), m.row_ptr(0), n * u);
        basis_forms.push_back(std::move(m));
    }
    auto form_of = [&](std::span<const Elem> v) {
        Matrix m(f, n, u);
        for (std::size_t k = 0; k < n; ++k)
            if (v[k]) axpy(F, v[k], basis_forms[k].row_ptr(0), m.row_ptr(0), n * u);
        return m;
    };

    EchelonBuilder eqs(f, u);
    for (std::size_t a = 0; a < r && !eqs.is_full(); ++a) {
        // The unknown block must agree with the map applied to g_a.
        add_rows(eqs, form_of(gens[a]) - block(a, Matrix::identity(f, n)));
        for (std::size_t j = 0; j < n && !eqs.is_full(); ++j) {
            // D[g_a, b_j] - [D g_a, b_j] - [g_a, D b_j] = 0
            Matrix lhs = form_of(L.bracket(gens[a], L.basis_vector(j))) + block(a, L.ad_basis(j)) -
                         gads[a] * basis_forms[j];
            add_rows(eqs, lhs);
        }
    }
    Subspace sol = annihilator(eqs.to_subspace());

    std::vector<Matrix> spanning;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        spanning.push_back(L.ad_basis(i));
        labels.push_back("ad(" + L.label(i) + ")");
    }
    for (std::size_t s = 0; s < sol.dim(); ++s) {
        Matrix d(f, n, n);
        for (std::size_t k = 0; k < n; ++k) d.set_column(k, basis_forms[k] * sol.basis_row(s));
        spanning.push_back(std::move(d));
        labels.push_back("D" + std::to_string(s));
    }
    DerivationAlgebra out{matrix_lie_algebra(spanning, labels, "Der(" + L.name() + ")"), Matrix(f, 0, n)};
    Matrix emb(f, out.der.matrices.size(), n);
    for (std::size_t i = 0; i < n; ++i) emb.set_column(i, *out.der.coordinates(spanning[i]));
    out.ad_embedding = std::move(emb);
    return out;
}

Elem killing_form(const LieAlgebra& L, std::span<const Elem> x, std::span<const Elem> y) {
    Matrix a = L.ad(x), b = L.ad(y);
    const FiniteField& f = *L.field();
    Elem t = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) && b(j, i)) t = f.add(t, f.mul(a(i, j), b(j, i)));
    return t;
}

// ---------------------------------------------------------------- quotients and restrictions

Quotient quotient(const LieAlgebra& L, const Subspace& ideal, std::string name) {
    if (ideal.ambient_dim() != L.dim()) throw AmbientMismatch("quotient");
    if (!is_ideal(L, ideal)) throw NotIdeal("quotient by a non-ideal");
    Quotient q;
    q.complement = ideal.complement_indices();
    q.projection = ideal.projector();
    const std::size_t m = q.complement.size();
    q.section = Matrix(L.field(), L.dim(), m);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < m; ++a) {
        q.section(q.complement[a], a) = 1;
        labels.push_back(L.label(q.complement[a]));
    }
    const Matrix& P = q.projection;
    q.algebra = LieAlgebra::from_bracket(
        L.field(), std::move(labels),
        [&](std::size_t a, std::size_t b) { return P * L.bracket_basis(q.complement[a], q.complement[b]); },
        std::move(name));
    return q;
}

Vec Restriction::coords(std::span<const Elem> parent_vec) const {
    auto c = space.coordinates(parent_vec);
    if (!c) throw NotSubalgebra("vector outside the subalgebra");
    return *c;
}

Vec Restriction::embed(std::span<const Elem> sub_vec) const { return space.combine(sub_vec); }

Subspace Restriction::embed(const Subspace& sub) const {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < sub.dim(); ++i) gens.push_back(space.combine(sub.basis_row(i)));
    return Subspace::span(space.field(), space.ambient_dim(), gens);
}

Subspace Restriction::pull(const Subspace& parent_sub) const {
    Subspace meet = subspace_intersect(space, parent_sub);
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < meet.dim(); ++i) gens.push_back(coords(meet.basis_row(i)));
    return Subspace::span(space.field(), space.dim(), gens);
}

Restriction restrict_to(const LieAlgebra& L, const Subspace& s, std::string name) {
    Restriction r;
    r.space = s;
    r.inclusion = s.basis().transpose();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        auto row = s.basis_row(i);
        std::size_t nz = 0, last = 0;
        for (std::size_t k = 0; k < row.size(); ++k)
            if (row[k]) {
                ++nz;
                last = k;
            }
        labels.push_back(nz == 1 && row[last] == 1 ? L.label(last) : "s" + std::to_string(i));
    }
    std::vector<Matrix> ads;
    ads.reserve(s.dim());
    Matrix bt = s.basis().transpose();
    std::vector<Elem> table(s.dim() * s.dim() * s.dim(), 0);
    const std::size_t d = s.dim();
    for (std::size_t a = 0; a < d; ++a) {
        Matrix img = L.ad(s.basis_row(a)) * bt;
        for (std::size_t b = a + 1; b < d; ++b) {
            Vec v = img.column(b);
            auto c = s.coordinates(v);
            if (!c) throw NotSubalgebra("subspace not closed under bracket");
            for (std::size_t k = 0; k < d; ++k) {
                table[(a * d + b) * d + k] = (*c)[k];
                table[(b * d + a) * d + k] = L.field()->neg((*c)[k]);
            }
        }
    }
    r.algebra = LieAlgebra(L.field(), std::move(labels), std::move(table), std::move(name));
    return r;
}

LieAlgebra rebase(const LieAlgebra& L, const Matrix& u, std::vector<std::string> labels, std::string name) {
    const std::size_t n = L.dim();
    if (u.rows() != n || u.cols() != n) throw ShapeMismatch("rebase needs a square basis matrix");
    auto uinv = solve(u, Matrix::identity(L.field(), n));
    if (!uinv || rank(u) != n) throw ShapeMismatch("rebase basis is singular");
    if (labels.size() != n) labels = default_labels("u", n);
    std::vector<Elem> table(n * n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        Matrix coords = *uinv * (L.ad(u.column(a)) * u);  // column b = coordinates of [u_a, u_b]
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t k = 0; k < n; ++k) {
                const Elem c = coords(k, b);
                table[(a * n + b) * n + k] = c;
                table[(b * n + a) * n + k] = L.field()->neg(c);
            }
    }
    return LieAlgebra(L.field(), std::move(labels), std::move(table), std::move(name));
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, std::string name) {
    if (a.field() != b.field()) throw FieldMismatch("direct sum over different fields");
    const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
    std::vector<std::string> labels = a.labels();
    for (const auto& l : b.labels()) labels.push_back(l + "'");
    std::vector<Elem> table(n * n * n, 0);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (const Term& t : a.sparse(i, j)) table[(i * n + j) * n + t.index] = t.coeff;
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (const Term& t : b.sparse(i, j))
                table[((na + i) * n + (na + j)) * n + (na + t.index)] = t.coeff;
    return LieAlgebra(a.field(), std::move(labels), std::move(table), std::move(name));
}

}  // namespace modlie

namespace modlie {

Subspace Grading::component(const LieAlgebra& L, int deg) const {
    auto it = components.find(deg);
    if (it == components.end()) return Subspace(L.field(), L.dim());
    return Subspace::coordinate(L.field(), L.dim(), it->second);
}

std::size_t Grading::component_dim(int deg) const {
    auto it = components.find(deg);
    return it == components.end() ? 0 : it->second.size();
}

Grading make_grading(const LieAlgebra& L, std::vector<int> degree) {
    if (degree.size() != L.dim()) throw ShapeMismatch("one degree per basis vector");
    Grading gr;
    gr.degree = std::move(degree);
    for (std::size_t i = 0; i < L.dim(); ++i) gr.components[gr.degree[i]].push_back(i);
    gr.additive = true;
    for (std::size_t i = 0; i < L.dim() && gr.additive; ++i)
        for (std::size_t j = i + 1; j < L.dim(); ++j)
            for (const Term& t : L.sparse(i, j))
                if (gr.degree[t.index] != gr.degree[i] + gr.degree[j]) gr.additive = false;
    return gr;
}

}  // namespace modlie
