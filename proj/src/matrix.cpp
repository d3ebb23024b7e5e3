#include "modlie/matrix.hpp"

#include <algorithm>
#include <cassert>

#include "modlie/errors.hpp"

namespace modlie {

namespace {

template <int P>
void axpy_prime(Elem c, const Elem* x, Elem* y, std::size_t n) noexcept {
    const unsigned cc = c;
    for (std::size_t i = 0; i < n; ++i) y[i] = static_cast<Elem>((y[i] + cc * x[i]) % P);
}

template <int P>
void reduce_acc(const std::uint32_t* acc, Elem* out, std::size_t n) noexcept {
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Elem>(acc[i] % P);
}

void reduce_acc_dispatch(int p, const std::uint32_t* acc, Elem* out, std::size_t n) noexcept {
    switch (p) {
        case 2: reduce_acc<2>(acc, out, n); break;
        case 3: reduce_acc<3>(acc, out, n); break;
        case 5: reduce_acc<5>(acc, out, n); break;
        case 7: reduce_acc<7>(acc, out, n); break;
        case 11: reduce_acc<11>(acc, out, n); break;
        case 13: reduce_acc<13>(acc, out, n); break;
        default:
            for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Elem>(acc[i] % static_cast<unsigned>(p));
    }
}

void check_field(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw FieldMismatch("matrices over different fields");
}

}  // namespace

void axpy(const FiniteField& f, Elem c, const Elem* x, Elem* y, std::size_t n) noexcept {
    if (c == 0) return;
    if (f.is_prime_field()) {
        switch (f.p()) {
            case 2:
                for (std::size_t i = 0; i < n; ++i) y[i] ^= x[i];
                return;
            case 3: axpy_prime<3>(c, x, y, n); return;
            case 5: axpy_prime<5>(c, x, y, n); return;
            case 7: axpy_prime<7>(c, x, y, n); return;
            case 11: axpy_prime<11>(c, x, y, n); return;
            case 13: axpy_prime<13>(c, x, y, n); return;
            default: break;
        }
    }
    const Elem* mr = f.mul_row(c);
    for (std::size_t i = 0; i < n; ++i)
        if (x[i]) y[i] = f.add(y[i], mr[x[i]]);
}

void scale(const FiniteField& f, Elem c, Elem* x, std::size_t n) noexcept {
    const Elem* mr = f.mul_row(c);
    for (std::size_t i = 0; i < n; ++i) x[i] = mr[x[i]];
}

bool is_zero(std::span<const Elem> v) noexcept {
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

Vec add(const FiniteField& f, std::span<const Elem> a, std::span<const Elem> b) {
    Vec r(a.begin(), a.end());
    axpy(f, 1, b.data(), r.data(), r.size());
    return r;
}

Vec sub(const FiniteField& f, std::span<const Elem> a, std::span<const Elem> b) {
    Vec r(a.begin(), a.end());
    axpy(f, f.neg(1), b.data(), r.data(), r.size());
    return r;
}

Vec scaled(const FiniteField& f, Elem c, std::span<const Elem> a) {
    Vec r(a.begin(), a.end());
    scale(f, c, r.data(), r.size());
    return r;
}

Elem dot(const FiniteField& f, std::span<const Elem> a, std::span<const Elem> b) noexcept {
    if (f.is_prime_field()) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<unsigned>(a[i]) * b[i];
        return static_cast<Elem>(s % static_cast<unsigned>(f.p()));
    }
    Elem s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

Vec unit_vector(std::size_t n, std::size_t i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(std::move(f), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(std::move(f), rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

Matrix Matrix::from_columns(Field f, const std::vector<Vec>& cols, std::size_t rows) {
    Matrix m(std::move(f), rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
    return m;
}

Matrix Matrix::from_ints(Field f, std::initializer_list<std::initializer_list<long long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    Matrix m(f, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw ShapeMismatch("ragged initializer");
        std::size_t j = 0;
        for (long long v : row) m(i, j++) = f->from_int(v);
        ++i;
    }
    return m;
}

Vec Matrix::column(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_row(std::size_t r, std::span<const Elem> v) {
    if (v.size() != cols_) throw ShapeMismatch("row length");
    std::copy(v.begin(), v.end(), row_ptr(r));
}

void Matrix::set_column(std::size_t c, std::span<const Elem> v) {
    if (v.size() != rows_) throw ShapeMismatch("column length");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

void Matrix::append_row(std::span<const Elem> v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw ShapeMismatch("row length");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    Matrix s(field_, rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
    return s;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
    Matrix s(field_, rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i) s.set_row(i, row(rows[i]));
    return s;
}

bool Matrix::is_zero() const noexcept { return modlie::is_zero(data_); }

bool Matrix::is_diagonal() const noexcept {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (r != c && (*this)(r, c)) return false;
    return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    check_field(a, b);
    if (a.cols() != b.rows()) throw ShapeMismatch("matrix product");
    const FiniteField& f = *a.field();
    Matrix c(a.field(), a.rows(), b.cols());
    const std::size_t n = b.cols();
    if (f.is_prime_field()) {
        std::vector<std::uint32_t> acc(n);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            std::fill(acc.begin(), acc.end(), 0u);
            const Elem* ai = a.row_ptr(i);
            for (std::size_t k = 0; k < a.cols(); ++k) {
                const std::uint32_t x = ai[k];
                if (!x) continue;
                const Elem* bk = b.row_ptr(k);
                for (std::size_t j = 0; j < n; ++j) acc[j] += x * bk[j];
            }
            reduce_acc_dispatch(f.p(), acc.data(), c.row_ptr(i), n);
        }
        return c;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const Elem* ai = a.row_ptr(i);
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (ai[k]) axpy(f, ai[k], b.row_ptr(k), c.row_ptr(i), n);
    }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    check_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("matrix sum");
    Matrix c = a;
    if (!c.empty()) axpy(*a.field(), 1, b.row_ptr(0), c.row_ptr(0), a.rows() * a.cols());
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    check_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("matrix difference");
    Matrix c = a;
    if (!c.empty()) axpy(*a.field(), a.field()->neg(1), b.row_ptr(0), c.row_ptr(0), a.rows() * a.cols());
    return c;
}

Matrix scaled(const Matrix& a, Elem c) {
    Matrix r = a;
    if (!r.empty()) scale(*a.field(), c, r.row_ptr(0), a.rows() * a.cols());
    return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Vec operator*(const Matrix& a, std::span<const Elem> v) {
    if (a.cols() != v.size()) throw ShapeMismatch("matrix-vector product");
    Vec r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) r[i] = dot(*a.field(), a.row(i), v);
    return r;
}

Vec row_times(std::span<const Elem> v, const Matrix& a) {
    if (a.rows() != v.size()) throw ShapeMismatch("vector-matrix product");
    Vec r(a.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) axpy(*a.field(), v[i], a.row_ptr(i), r.data(), r.size());
    return r;
}

Matrix power(const Matrix& a, unsigned long long e) {
    if (a.rows() != a.cols()) throw ShapeMismatch("power of non-square matrix");
    const FiniteField& f = *a.field();
    if (a.is_diagonal()) {
        Matrix r(a.field(), a.rows(), a.cols());
        for (std::size_t i = 0; i < a.rows(); ++i) r(i, i) = f.pow(a(i, i), e);
        return r;
    }
    Matrix result = Matrix::identity(a.field(), a.rows());
    Matrix base = a;
    bool first = true;
    while (e) {
        if (e & 1) {
            result = first ? base : result * base;
            first = false;
        }
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Elem trace(const Matrix& a) noexcept {
    Elem t = 0;
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t = a.field()->add(t, a(i, i));
    return t;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return {};
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != blocks[0].cols()) throw ShapeMismatch("vstack");
        rows += b.rows();
    }
    Matrix m(blocks[0].field(), rows, blocks[0].cols());
    std::size_t r = 0;
    for (const auto& b : blocks)
        for (std::size_t i = 0; i < b.rows(); ++i) m.set_row(r++, b.row(i));
    return m;
}

Matrix hstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return {};
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != blocks[0].rows()) throw ShapeMismatch("hstack");
        cols += b.cols();
    }
    Matrix m(blocks[0].field(), blocks[0].rows(), cols);
    std::size_t c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            std::copy(b.row_ptr(i), b.row_ptr(i) + b.cols(), m.row_ptr(i) + c0);
        c0 += b.cols();
    }
    return m;
}

// ---------------------------------------------------------------- RREF

Echelon echelon(const Matrix& m) {
    Matrix a = m;
    const FiniteField& f = *m.field() ;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (a(i, c)) {
                sel = i;
                break;
            }
        if (sel == rows) continue;
        if (sel != r) std::swap_ranges(a.row_ptr(sel), a.row_ptr(sel) + cols, a.row_ptr(r));
        scale(f, f.inv(a(r, c)), a.row_ptr(r) + c, cols - c);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && a(i, c)) axpy(f, f.neg(a(i, c)), a.row_ptr(r) + c, a.row_ptr(i) + c, cols - c);
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(m.field(), r, cols);
    for (std::size_t i = 0; i < r; ++i) reduced.set_row(i, a.row(i));
    return {std::move(reduced), std::move(pivots)};
}

Matrix rref(const Matrix& m) {
    Echelon e = echelon(m);
    Matrix out(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < e.reduced.rows(); ++i) out.set_row(i, e.reduced.row(i));
    return out;
}

std::size_t rank(const Matrix& m) {
    EchelonBuilder b(m.field(), m.cols());
    for (std::size_t i = 0; i < m.rows() && !b.is_full(); ++i) b.add(m.row(i));
    return b.rank();
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(Field f, std::size_t ambient) : field_(f), ambient_(ambient), basis_(f, 0, ambient) {}

Subspace Subspace::from_rref(Echelon e, std::size_t ambient) {
    Subspace s(e.reduced.field(), ambient);
    s.basis_ = std::move(e.reduced);
    s.pivots_ = std::move(e.pivots);
    return s;
}

Subspace Subspace::span(const Matrix& generators) {
    EchelonBuilder b(generators.field(), generators.cols());
    for (std::size_t i = 0; i < generators.rows() && !b.is_full(); ++i) b.add(generators.row(i));
    return b.to_subspace();
}

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<Vec>& generators) {
    EchelonBuilder b(f, ambient);
    for (const auto& g : generators) {
        if (g.size() != ambient) throw AmbientMismatch("generator length");
        if (b.is_full()) break;
        b.add(g);
    }
    return b.to_subspace();
}

Subspace Subspace::full(Field f, std::size_t ambient) {
    Subspace s(f, ambient);
    s.basis_ = Matrix::identity(f, ambient);
    s.pivots_.resize(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots_[i] = i;
    return s;
}

Subspace Subspace::coordinate(Field f, std::size_t ambient, const std::vector<std::size_t>& indices) {
    std::vector<std::size_t> idx = indices;
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    Subspace s(f, ambient);
    s.basis_ = Matrix(f, idx.size(), ambient);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= ambient) throw AmbientMismatch("coordinate index out of range");
        s.basis_(i, idx[i]) = 1;
    }
    s.pivots_ = idx;
    return s;
}

std::vector<Vec> Subspace::basis_vectors() const {
    std::vector<Vec> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
    return out;
}

std::vector<std::size_t> Subspace::complement_indices() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t c = 0; c < ambient_; ++c) {
        if (k < pivots_.size() && pivots_[k] == c) {
            ++k;
            continue;
        }
        out.push_back(c);
    }
    return out;
}

Vec Subspace::reduce(std::span<const Elem> v) const {
    if (v.size() != ambient_) throw AmbientMismatch("vector length");
    Vec r(v.begin(), v.end());
    const FiniteField& f = *field_;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        Elem c = r[pivots_[i]];
        if (c) axpy(f, f.neg(c), basis_.row_ptr(i), r.data(), ambient_);
    }
    return r;
}

bool Subspace::contains(std::span<const Elem> v) const { return modlie::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw AmbientMismatch("subspace containment");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_row(i))) return false;
    return true;
}

std::optional<Vec> Subspace::coordinates(std::span<const Elem> v) const {
    if (!contains(v)) return std::nullopt;
    Vec c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return c;
}

Matrix Subspace::projector() const {
    auto comp = complement_indices();
    Matrix p(field_, comp.size(), ambient_);
    const FiniteField& f = *field_;
    for (std::size_t r = 0; r < comp.size(); ++r) {
        p(r, comp[r]) = 1;
        for (std::size_t i = 0; i < pivots_.size(); ++i) p(r, pivots_[i]) = f.neg(basis_(i, comp[r]));
    }
    return p;
}

Vec Subspace::combine(std::span<const Elem> coords) const {
    if (coords.size() != dim()) throw ShapeMismatch("coordinate length");
    Vec v(ambient_, 0);
    for (std::size_t i = 0; i < dim(); ++i) axpy(*field_, coords[i], basis_.row_ptr(i), v.data(), ambient_);
    return v;
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

Subspace kernel(const Matrix& m) {
    Echelon e = echelon(m);
    const FiniteField& f = *m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Vec> gens;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = f.neg(e.reduced(r, free));
        gens.push_back(std::move(v));
    }
    return Subspace::span(m.field(), m.cols(), gens);
}

Subspace image(const Matrix& m) { return Subspace::span(m.transpose()); }

std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs) {
    if (m.rows() != rhs.rows()) throw ShapeMismatch("solve: row counts differ");
    Matrix aug = hstack({m, rhs});
    Echelon e = echelon(aug);
    Matrix x(m.field(), m.cols(), rhs.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= m.cols()) return std::nullopt;
        for (std::size_t j = 0; j < rhs.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, m.cols() + j);
    }
    return x;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("subspace_sum");
    EchelonBuilder eb(a.field(), a.ambient_dim());
    for (std::size_t i = 0; i < a.dim(); ++i) eb.add(a.basis_row(i));
    for (std::size_t i = 0; i < b.dim() && !eb.is_full(); ++i) eb.add(b.basis_row(i));
    return eb.to_subspace();
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("subspace_intersect");
    if (a.is_zero() || b.is_zero()) return Subspace(a.field(), a.ambient_dim());
    if (b.is_full()) return a;
    if (a.is_full()) return b;
    // x = coords * A lies in b iff P_b A^T coords = 0.
    Matrix pa = b.projector() * a.basis().transpose();
    Subspace k = kernel(pa);
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < k.dim(); ++i) gens.push_back(a.combine(k.basis_row(i)));
    return Subspace::span(a.field(), a.ambient_dim(), gens);
}

bool contains(const Subspace& a, std::span<const Elem> v) { return a.contains(v); }

Subspace annihilator(const Subspace& s) {
    if (s.is_zero()) return Subspace::full(s.field(), s.ambient_dim());
    return kernel(s.basis());
}

Subspace map_subspace(const Matrix& m, const Subspace& s) {
    if (m.cols() != s.ambient_dim()) throw AmbientMismatch("map_subspace");
    EchelonBuilder eb(m.field(), m.rows());
    for (std::size_t i = 0; i < s.dim() && !eb.is_full(); ++i) eb.add(m * s.basis_row(i));
    return eb.to_subspace();
}

Subspace preimage(const Matrix& m, const Subspace& s) {
    if (m.rows() != s.ambient_dim()) throw AmbientMismatch("preimage");
    if (s.is_full()) return Subspace::full(m.field(), m.cols());
    return kernel(s.projector() * m);
}

// ---------------------------------------------------------------- builders

EchelonBuilder::EchelonBuilder(Field f, std::size_t ambient) : field_(std::move(f)), ambient_(ambient) {}

bool EchelonBuilder::reduce(Vec& v) const {
    const FiniteField& f = *field_;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Elem c = v[pivots_[i]];
        if (c) axpy(f, f.neg(c), rows_[i].data(), v.data(), ambient_);
    }
    return modlie::is_zero(v);
}

bool EchelonBuilder::contains(std::span<const Elem> v) const {
    Vec w(v.begin(), v.end());
    return reduce(w);
}

bool EchelonBuilder::add(std::span<const Elem> v) {
    if (v.size() != ambient_) throw AmbientMismatch("EchelonBuilder::add");
    if (is_full()) return false;
    Vec w(v.begin(), v.end());
    if (reduce(w)) return false;
    return add_reduced(std::move(w));
}

bool EchelonBuilder::add_reduced(Vec&& v) {
    std::size_t piv = 0;
    while (piv < ambient_ && v[piv] == 0) ++piv;
    if (piv == ambient_) return false;
    scale(*field_, field_->inv(v[piv]), v.data(), ambient_);
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

Subspace EchelonBuilder::to_subspace() const {
    if (rows_.empty()) return Subspace(field_, ambient_);
    // Back-substitute into reduced form, ordering rows by pivot.
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    Matrix m(field_, rows_.size(), ambient_);
    std::vector<std::size_t> piv(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        m.set_row(i, rows_[order[i]]);
        piv[i] = pivots_[order[i]];
    }
    const FiniteField& f = *field_;
    std::vector<std::size_t> position(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
    // A row is zero at the pivots of rows inserted before it, so clearing
    // columns in reverse insertion order never refills a cleared column.
    for (std::size_t ins = rows_.size(); ins-- > 0;) {
        const std::size_t i = position[ins];
        for (std::size_t j = 0; j < m.rows(); ++j) {
            if (j == i) continue;
            Elem c = m(j, piv[i]);
            if (c) axpy(f, f.neg(c), m.row_ptr(i), m.row_ptr(j), ambient_);
        }
    }
    return Subspace::from_rref({std::move(m), std::move(piv)}, ambient_);
}

Coordinatizer::Coordinatizer(Field f, std::size_t ambient) : field_(std::move(f)), ambient_(ambient) {}

bool Coordinatizer::add(std::span<const Elem> v) {
    if (v.size() != ambient_) throw AmbientMismatch("Coordinatizer::add");
    const FiniteField& f = *field_;
    Vec w(v.begin(), v.end());
    Vec combo(count_ + 1, 0);
    combo[count_] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Elem c = w[pivots_[i]];
        if (!c) continue;
        Elem nc = f.neg(c);
        axpy(f, nc, rows_[i].data(), w.data(), ambient_);
        axpy(f, nc, combos_[i].data(), combo.data(), combos_[i].size());
    }
    std::size_t piv = 0;
    while (piv < ambient_ && w[piv] == 0) ++piv;
    if (piv == ambient_) return false;
    Elem s = f.inv(w[piv]);
    scale(f, s, w.data(), ambient_);
    scale(f, s, combo.data(), combo.size());
    for (auto& c : combos_) c.resize(count_ + 1, 0);
    rows_.push_back(std::move(w));
    combos_.push_back(std::move(combo));
    pivots_.push_back(piv);
    ++count_;
    return true;
}

std::optional<Vec> Coordinatizer::coordinates(std::span<const Elem> v) const {
    if (v.size() != ambient_) throw AmbientMismatch("Coordinatizer::coordinates");
    const FiniteField& f = *field_;
    Vec w(v.begin(), v.end());
    Vec out(count_, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Elem c = w[pivots_[i]];
        if (!c) continue;
        axpy(f, f.neg(c), rows_[i].data(), w.data(), ambient_);
        axpy(f, c, combos_[i].data(), out.data(), combos_[i].size());
    }
    if (!modlie::is_zero(w)) return std::nullopt;
    return out;
}

bool Coordinatizer::contains(std::span<const Elem> v) const { return coordinates(v).has_value(); }

// ---------------------------------------------------------------- Rng

Vec Rng::vector(const FiniteField& f, std::size_t n) {
    Vec v(n);
    for (auto& e : v) e = element(f);
    return v;
}

Matrix Rng::matrix(const Field& f, std::size_t rows, std::size_t cols) {
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = element(*f);
    return m;
}

Subspace Rng::subspace(const Field& f, std::size_t ambient, std::size_t dim) {
    EchelonBuilder b(f, ambient);
    while (b.rank() < dim) b.add(vector(*f, ambient));
    return b.to_subspace();
}

}  // namespace modlie
