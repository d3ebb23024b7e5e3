#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "modlie/field.hpp"

namespace modlie {

// Row-major dense matrix over a finite field.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols);

    static Matrix identity(Field f, std::size_t n);
    static Matrix from_rows(Field f, const std::vector<Vec>& rows, std::size_t cols);
    static Matrix from_columns(Field f, const std::vector<Vec>& cols, std::size_t rows);
    static Matrix from_ints(Field f, std::initializer_list<std::initializer_list<long long>> rows);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    const Elem* row_ptr(std::size_t r) const noexcept { return data_.data() + r * cols_; }
    Elem* row_ptr(std::size_t r) noexcept { return data_.data() + r * cols_; }
    std::span<const Elem> row(std::size_t r) const noexcept { return {row_ptr(r), cols_}; }
    Vec row_vec(std::size_t r) const { return Vec(row_ptr(r), row_ptr(r) + cols_); }
    Vec column(std::size_t c) const;
    void set_row(std::size_t r, std::span<const Elem> v);
    void set_column(std::size_t c, std::span<const Elem> v);
    void append_row(std::span<const Elem> v);

    Matrix transpose() const;
    Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
    Matrix select_rows(const std::vector<std::size_t>& rows) const;
    bool is_zero() const noexcept;
    bool is_diagonal() const noexcept;
    const std::vector<Elem>& data() const noexcept { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

// y += c*x over n entries.
void axpy(const FiniteField& f, Elem c, const Elem* x, Elem* y, std::size_t n) noexcept;
void scale(const FiniteField& f, Elem c, Elem* x, std::size_t n) noexcept;
bool is_zero(std::span<const Elem> v) noexcept;
Vec add(const FiniteField& f, std::span<const Elem> a, std::span<const Elem> b);
Vec sub(const FiniteField& f, std::span<const Elem> a, std::span<const Elem> b);
Vec scaled(const FiniteField& f, Elem c, std::span<const Elem> a);
Elem dot(const FiniteField& f, std::span<const Elem> a, std::span<const Elem> b) noexcept;
Vec unit_vector(std::size_t n, std::size_t i);

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scaled(const Matrix& a, Elem c);
Matrix commutator(const Matrix& a, const Matrix& b);
Vec operator*(const Matrix& a, std::span<const Elem> v);
// v^T * a.
Vec row_times(std::span<const Elem> v, const Matrix& a);
Matrix power(const Matrix& a, unsigned long long e);
Elem trace(const Matrix& a) noexcept;
Matrix vstack(const std::vector<Matrix>& blocks);
Matrix hstack(const std::vector<Matrix>& blocks);

struct Echelon {
    Matrix reduced;                   // nonzero rows only
    std::vector<std::size_t> pivots;  // pivot column per row
};

Matrix rref(const Matrix& m);
Echelon echelon(const Matrix& m);
std::size_t rank(const Matrix& m);

// Canonical subspace of F^n held in reduced row-echelon form.
class Subspace {
public:
    Subspace() = default;
    Subspace(Field f, std::size_t ambient);  // zero subspace

    static Subspace span(const Matrix& generators);
    static Subspace span(Field f, std::size_t ambient, const std::vector<Vec>& generators);
    static Subspace full(Field f, std::size_t ambient);
    static Subspace coordinate(Field f, std::size_t ambient, const std::vector<std::size_t>& indices);
    // The rows of m must already be in reduced row-echelon form.
    static Subspace from_rref(Echelon e, std::size_t ambient);

    const Field& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return pivots_.size(); }
    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t codim() const noexcept { return ambient_ - dim(); }
    bool is_zero() const noexcept { return pivots_.empty(); }
    bool is_full() const noexcept { return dim() == ambient_; }
    const Matrix& basis() const noexcept { return basis_; }
    std::span<const Elem> basis_row(std::size_t i) const noexcept { return basis_.row(i); }
    Vec basis_vector(std::size_t i) const { return basis_.row_vec(i); }
    std::vector<Vec> basis_vectors() const;
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    // Standard basis indices spanning a complement (the non-pivot columns).
    std::vector<std::size_t> complement_indices() const;

    bool contains(std::span<const Elem> v) const;
    bool contains(const Subspace& other) const;
    // Coordinates with respect to basis(); nullopt if v is outside.
    std::optional<Vec> coordinates(std::span<const Elem> v) const;
    // v minus its combination of basis rows read off the pivots; zero iff v is inside.
    Vec reduce(std::span<const Elem> v) const;
    // (codim x ambient) matrix sending v to reduce(v) restricted to the complement indices.
    Matrix projector() const;
    // Vector with the given coordinates.
    Vec combine(std::span<const Elem> coords) const;

    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    Field field_;
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);  // column space
// One solution x of m*x = rhs, or nullopt when none exists.
std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, std::span<const Elem> v);
// {x : x.y = 0 for all y in s}.
Subspace annihilator(const Subspace& s);
// Image of s under the linear map v -> m*v.
Subspace map_subspace(const Matrix& m, const Subspace& s);
// Preimage {v : m*v in s}.
Subspace preimage(const Matrix& m, const Subspace& s);

// Incremental semi-echelon basis.  Later rows vanish at earlier pivots, so a
// single pass in insertion order reduces any vector.
class EchelonBuilder {
public:
    EchelonBuilder(Field f, std::size_t ambient);

    // Reduces v in place; returns true when v is in the span.
    bool reduce(Vec& v) const;
    bool contains(std::span<const Elem> v) const;
    // Inserts v if independent of the current rows.
    bool add(std::span<const Elem> v);
    bool add_reduced(Vec&& v);  // v already reduced and nonzero, or zero
    std::size_t rank() const noexcept { return pivots_.size(); }
    std::size_t ambient_dim() const noexcept { return ambient_; }
    bool is_full() const noexcept { return rank() == ambient_; }
    const Vec& row(std::size_t i) const noexcept { return rows_[i]; }
    std::size_t pivot(std::size_t i) const noexcept { return pivots_[i]; }
    Subspace to_subspace() const;
    const Field& field() const noexcept { return field_; }

private:
    Field field_;
    std::size_t ambient_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

// Coordinates with respect to an arbitrary independent list of vectors.
class Coordinatizer {
public:
    Coordinatizer(Field f, std::size_t ambient);
    // Appends v to the basis if independent; returns false otherwise.
    bool add(std::span<const Elem> v);
    std::size_t size() const noexcept { return count_; }
    std::optional<Vec> coordinates(std::span<const Elem> v) const;
    bool contains(std::span<const Elem> v) const;

private:
    Field field_;
    std::size_t ambient_;
    std::size_t count_ = 0;
    std::vector<Vec> rows_;
    std::vector<Vec> combos_;  // rows_[i] = sum combos_[i][j] * basis_j
    std::vector<std::size_t> pivots_;
};

// Seeded source of uniformly random field data; portable across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
    Elem element(const FiniteField& f) { return static_cast<Elem>(engine_() % static_cast<std::uint64_t>(f.order())); }
    Elem nonzero(const FiniteField& f) { return static_cast<Elem>(1 + engine_() % static_cast<std::uint64_t>(f.order() - 1)); }
    Vec vector(const FiniteField& f, std::size_t n);
    Matrix matrix(const Field& f, std::size_t rows, std::size_t cols);
    Subspace subspace(const Field& f, std::size_t ambient, std::size_t dim);

private:
    std::mt19937_64 engine_;
};

}  // namespace modlie
