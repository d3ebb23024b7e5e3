#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "modlie/field.hpp"
#include "modlie/matrix.hpp"

namespace modlie {

// Univariate polynomial over a finite field, coefficients low to high, trimmed.
class Poly {
public:
    Poly() = default;
    explicit Poly(Field f) : field_(std::move(f)) {}
    Poly(Field f, Vec coeffs);

    static Poly constant(Field f, Elem c);
    static Poly x(Field f);
    static Poly monomial(Field f, std::size_t deg, Elem c = 1);
    static Poly from_ints(Field f, const std::vector<long long>& coeffs);

    const Field& field() const noexcept { return field_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Elem{0}; }
    Elem lead() const noexcept { return c_.empty() ? Elem{0} : c_.back(); }
    const Vec& coeffs() const noexcept { return c_; }
    Poly monic() const;
    Poly derivative() const;
    Elem eval(Elem x) const noexcept;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

private:
    void trim();
    Field field_;
    Vec c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);  // monic
Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod);
// f(m) by Horner's rule.
Matrix evaluate(const Poly& f, const Matrix& m);

struct Factor {
    Poly poly;  // monic irreducible
    int multiplicity;
};

// Complete factorisation into monic irreducibles; deterministic for a given seed.
std::vector<Factor> factor(const Poly& f, std::uint64_t seed = 0xC0FFEE);
// Irreducible factors listed with repetition; their product is f up to its leading coefficient.
std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t seed = 0xC0FFEE);
bool is_irreducible(const Poly& f);

// Characteristic polynomial det(x I - m), via Hessenberg form.
Poly charpoly(const Matrix& m);

// binomial(a, b) mod p from base-p digits.
int lucas_binom(std::uint64_t a, std::uint64_t b, int p);

}  // namespace modlie
