#include "modlie/lie_algebra.hpp"

#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>

#include "modlie/errors.hpp"

namespace modlie {

struct LieAlgebra::AdjointSolver {
    // Row k of y -> [y, g_a] for each probe (a, k); together injective.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> probes;
    Matrix inverse;  // recovers y from the probe values
};

struct LieAlgebra::Data {
    Field field;
    std::size_t dim = 0;
    std::vector<std::string> labels;
    std::string name;
    std::vector<Elem> table;
    std::vector<std::uint32_t> offsets;
    std::vector<Term> terms;

    mutable std::once_flag gen_once;
    mutable std::vector<Vec> gens;
    mutable std::vector<Matrix> gen_ads;
    mutable std::once_flag solver_once;
    mutable std::unique_ptr<AdjointSolver> solver;
};

namespace {

// Span of seeds under repeated application of the matrices.
Subspace spin_matrices(const Field& f, std::size_t n, const std::vector<Vec>& seeds, const std::vector<Matrix>& mats) {
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

}  // namespace

LieAlgebra::LieAlgebra(Field f, std::vector<std::string> labels, std::vector<Elem> table, std::string name) {
    auto d = std::make_shared<Data>();
    d->field = std::move(f);
    d->dim = labels.size();
    d->labels = std::move(labels);
    d->name = std::move(name);
    const std::size_t n = d->dim;
    if (table.size() != n * n * n) throw ShapeMismatch("structure-constant table size");
    d->table = std::move(table);
    d->offsets.resize(n * n + 1);
    for (std::size_t ij = 0; ij < n * n; ++ij) {
        d->offsets[ij] = static_cast<std::uint32_t>(d->terms.size());
        const Elem* row = d->table.data() + ij * n;
        for (std::size_t k = 0; k < n; ++k)
            if (row[k]) d->terms.push_back({static_cast<std::uint32_t>(k), row[k]});
    }
    d->offsets[n * n] = static_cast<std::uint32_t>(d->terms.size());
    d_ = std::move(d);
}

LieAlgebra LieAlgebra::from_bracket(Field f, std::vector<std::string> labels,
                                    const std::function<Vec(std::size_t, std::size_t)>& bracket, std::string name) {
    const std::size_t n = labels.size();
    std::vector<Elem> table(n * n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec v = bracket(i, j);
            if (v.size() != n) throw ShapeMismatch("bracket result length");
            for (std::size_t k = 0; k < n; ++k) {
                table[(i * n + j) * n + k] = v[k];
                table[(j * n + i) * n + k] = f->neg(v[k]);
            }
        }
    return LieAlgebra(std::move(f), std::move(labels), std::move(table), std::move(name));
}

const Field& LieAlgebra::field() const noexcept { return d_->field; }
std::size_t LieAlgebra::dim() const noexcept { return d_ ? d_->dim : 0; }
const std::vector<std::string>& LieAlgebra::labels() const noexcept { return d_->labels; }
const std::string& LieAlgebra::label(std::size_t i) const { return d_->labels.at(i); }
const std::string& LieAlgebra::name() const noexcept { return d_->name; }
const std::vector<Elem>& LieAlgebra::table() const noexcept { return d_->table; }

LieAlgebra LieAlgebra::renamed(std::string name) const {
    return LieAlgebra(d_->field, d_->labels, d_->table, std::move(name));
}

std::span<const Elem> LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const noexcept {
    const std::size_t n = d_->dim;
    return {d_->table.data() + (i * n + j) * n, n};
}

std::span<const Term> LieAlgebra::sparse(std::size_t i, std::size_t j) const noexcept {
    const std::size_t ij = i * d_->dim + j;
    return {d_->terms.data() + d_->offsets[ij], d_->offsets[ij + 1] - d_->offsets[ij]};
}

Elem LieAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    const std::size_t n = d_->dim;
    return d_->table[(i * n + j) * n + k];
}

Vec LieAlgebra::bracket(std::span<const Elem> x, std::span<const Elem> y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw ShapeMismatch("bracket operand length");
    const FiniteField& f = *field();
    std::vector<std::uint32_t> ynz;
    for (std::size_t j = 0; j < n; ++j)
        if (y[j]) ynz.push_back(static_cast<std::uint32_t>(j));
    Vec out(n, 0);
    if (f.is_prime_field()) {
        std::vector<std::uint32_t> acc(n, 0);
        const unsigned p = static_cast<unsigned>(f.p());
        for (std::size_t i = 0; i < n; ++i) {
            if (!x[i]) continue;
            for (auto j : ynz) {
                const unsigned c = static_cast<unsigned>(x[i]) * y[j] % p;
                for (const Term& t : sparse(i, j)) acc[t.index] += c * t.coeff;
            }
        }
        for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<Elem>(acc[k] % p);
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!x[i]) continue;
        for (auto j : ynz) {
            const Elem c = f.mul(x[i], y[j]);
            for (const Term& t : sparse(i, j)) out[t.index] = f.add(out[t.index], f.mul(c, t.coeff));
        }
    }
    return out;
}

Vec LieAlgebra::bracket_with_basis(std::size_t i, std::span<const Elem> y) const {
    const std::size_t n = dim();
    const FiniteField& f = *field();
    Vec out(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        if (!y[j]) continue;
        for (const Term& t : sparse(i, j)) out[t.index] = f.add(out[t.index], f.mul(y[j], t.coeff));
    }
    return out;
}

Matrix LieAlgebra::ad(std::span<const Elem> x) const {
    const std::size_t n = dim();
    if (x.size() != n) throw ShapeMismatch("ad operand length");
    const FiniteField& f = *field();
    Matrix m(field(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!x[i]) continue;
        const Elem* mr = f.mul_row(x[i]);
        for (std::size_t j = 0; j < n; ++j)
            for (const Term& t : sparse(i, j)) m(t.index, j) = f.add(m(t.index, j), mr[t.coeff]);
    }
    return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const {
    const std::size_t n = dim();
    Matrix m(field(), n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (const Term& t : sparse(i, j)) m(t.index, j) = t.coeff;
    return m;
}

bool LieAlgebra::check_antisymmetry() const {
    const std::size_t n = dim();
    const FiniteField& f = *field();
    for (std::size_t i = 0; i < n; ++i) {
        if (!sparse(i, i).empty()) return false;
        for (std::size_t j = i + 1; j < n; ++j) {
            auto a = bracket_basis(i, j);
            auto b = bracket_basis(j, i);
            for (std::size_t k = 0; k < n; ++k)
                if (f.add(a[k], b[k])) return false;
        }
    }
    return true;
}

bool LieAlgebra::check_jacobi() const {
    const std::size_t n = dim();
    const FiniteField& f = *field();
    Vec accv(n, 0);
    std::vector<std::uint32_t> touched;
    std::vector<char> mark(n, 0);
    auto accumulate = [&](std::size_t a, std::size_t b, std::size_t c) {
        for (const Term& t : sparse(b, c))
            for (const Term& u : sparse(a, t.index)) {
                if (!mark[u.index]) {
                    mark[u.index] = 1;
                    touched.push_back(u.index);
                }
                accv[u.index] = f.add(accv[u.index], f.mul(t.coeff, u.coeff));
            }
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                accumulate(i, j, k);
                accumulate(j, k, i);
                accumulate(k, i, j);
                bool ok = true;
                for (auto idx : touched) {
                    if (accv[idx]) ok = false;
                    accv[idx] = 0;
                    mark[idx] = 0;
                }
                touched.clear();
                if (!ok) return false;
            }
    return true;
}

bool LieAlgebra::check_jacobi_sampled(std::size_t samples, std::uint64_t seed) const {
    const std::size_t n = dim();
    if (n == 0) return true;
    Rng rng(seed);
    const FiniteField& f = *field();
    for (std::size_t s = 0; s < samples; ++s) {
        Vec x = rng.vector(f, n), y = rng.vector(f, n), z = rng.vector(f, n);
        Vec j1 = bracket(x, bracket(y, z));
        Vec j2 = bracket(y, bracket(z, x));
        Vec j3 = bracket(z, bracket(x, y));
        Vec sum = add(f, add(f, j1, j2), j3);
        if (!is_zero(sum)) return false;
    }
    return true;
}

const std::vector<Vec>& LieAlgebra::lie_generators() const {
    std::call_once(d_->gen_once, [this] {
        const std::size_t n = dim();
        const Field& f = field();
        std::vector<Vec> gens;
        std::vector<Matrix> ads;
        if (n > 0) {
            Rng rng(0x11E5EEDull);
            for (int i = 0; i < 2; ++i) {
                Vec v = rng.vector(*f, n);
                if (is_zero(v)) v[0] = 1;
                ads.push_back(ad(v));
                gens.push_back(std::move(v));
            }
            Subspace s = spin_matrices(f, n, gens, ads);
            while (!s.is_full()) {
                std::size_t k = 0;
                while (s.contains(basis_vector(k))) ++k;
                gens.push_back(basis_vector(k));
                ads.push_back(ad_basis(k));
                s = spin_matrices(f, n, gens, ads);
            }
            // Drop random generators that the rest make redundant.
            for (std::size_t r = 0; r < 2 && gens.size() > 1;) {
                std::vector<Vec> g2;
                std::vector<Matrix> a2;
                for (std::size_t i = 0; i < gens.size(); ++i)
                    if (i != r) {
                        g2.push_back(gens[i]);
                        a2.push_back(ads[i]);
                    }
                if (spin_matrices(f, n, g2, a2).is_full()) {
                    gens = std::move(g2);
                    ads = std::move(a2);
                } else {
                    ++r;
                }
                if (r >= gens.size()) break;
            }
        }
        d_->gens = std::move(gens);
        d_->gen_ads = std::move(ads);
    });
    return d_->gens;
}

const std::vector<Matrix>& LieAlgebra::generator_ads() const {
    lie_generators();
    return d_->gen_ads;
}

const LieAlgebra::AdjointSolver* LieAlgebra::adjoint_solver() const {
    std::call_once(d_->solver_once, [this] {
        const std::size_t n = dim();
        if (n == 0) {
            d_->solver = std::make_unique<AdjointSolver>();
            d_->solver->inverse = Matrix(field(), 0, 0);
            return;
        }
        const auto& ads = generator_ads();
        const FiniteField& f = *field();
        EchelonBuilder b(field(), n);
        std::vector<std::pair<std::uint32_t, std::uint32_t>> probes;
        std::vector<Vec> rows;
        for (std::size_t a = 0; a < ads.size() && !b.is_full(); ++a) {
            // y -> [y, g_a] is -ad(g_a).
            for (std::size_t k = 0; k < n && !b.is_full(); ++k) {
                Vec row = scaled(f, f.neg(1), ads[a].row(k));
                if (b.add(row)) {
                    probes.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(k)});
                    rows.push_back(std::move(row));
                }
            }
        }
        if (!b.is_full()) return;
        Matrix s = Matrix::from_rows(field(), rows, n);
        auto inv = solve(s, Matrix::identity(field(), n));
        auto solver = std::make_unique<AdjointSolver>();
        solver->probes = std::move(probes);
        solver->inverse = std::move(*inv);
        d_->solver = std::move(solver);
    });
    return d_->solver.get();
}

bool LieAlgebra::centerless() const { return adjoint_solver() != nullptr; }

std::optional<Vec> LieAlgebra::solve_ad(const Matrix& m) const {
    const AdjointSolver* s = adjoint_solver();
    if (!s) throw CenterNonzero("adjoint solve needs a centreless algebra");
    const std::size_t n = dim();
    const auto& gens = lie_generators();
    std::vector<Vec> images(gens.size());
    Vec values(n);
    for (std::size_t i = 0; i < s->probes.size(); ++i) {
        auto [a, k] = s->probes[i];
        if (images[a].empty()) images[a] = m * gens[a];
        values[i] = images[a][k];
    }
    Vec y = s->inverse * values;
    if (!(ad(y) == m)) return std::nullopt;
    return y;
}

Element make_element(const LieAlgebra& L, Vec coords) {
    if (coords.size() != L.dim()) throw ShapeMismatch("element coordinate length");
    return {L.id(), std::move(coords)};
}

Element bracket(const LieAlgebra& L, const Element& x, const Element& y) {
    if (x.parent != L.id() || y.parent != L.id()) throw ParentMismatch("elements belong to different algebras");
    return {L.id(), L.bracket(x.coords, y.coords)};
}

void write_dump(const LieAlgebra& L, std::ostream& out) {
    const std::size_t n = L.dim();
    out << n << ' ' << L.field()->p() << ' ' << L.field()->degree() << '\n';
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const Term& t : L.sparse(i, j))
                out << i << ' ' << j << ' ' << t.index << ' ' << static_cast<int>(t.coeff) << '\n';
}

std::string dump_string(const LieAlgebra& L) {
    std::ostringstream os;
    write_dump(L, os);
    return os.str();
}

LieAlgebra read_dump(std::istream& in, std::string name) {
    std::size_t n = 0;
    int p = 0, k = 0;
    if (!(in >> n >> p >> k)) throw ParseError("missing header");
    Field f = FiniteField::get(p, k);
    std::vector<Elem> table(n * n * n, 0);
    std::size_t i, j, c;
    int v;
    while (in >> i >> j >> c >> v) {
        if (i >= n || j >= n || c >= n || v <= 0 || v >= f->order()) throw ParseError("entry out of range");
        table[(i * n + j) * n + c] = static_cast<Elem>(v);
    }
    if (!in.eof()) throw ParseError("malformed entry line");
    std::vector<std::string> labels(n);
    for (std::size_t idx = 0; idx < n; ++idx) labels[idx] = "b" + std::to_string(idx);
    return LieAlgebra(f, std::move(labels), std::move(table), std::move(name));
}

}  // namespace modlie
