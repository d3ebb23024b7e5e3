#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace modlie {

// An element of F_{p^k} is the integer sum c_i p^i where sum c_i X^i is its
// residue modulo the field polynomial.  Prime-field elements are 0..p-1.
using Elem = std::uint8_t;
using Vec = std::vector<Elem>;

class FiniteField {
public:
    // Fields are interned: equal (p, k) always yields the same object.
    static std::shared_ptr<const FiniteField> get(int p, int k = 1);

    int p() const noexcept { return p_; }
    int degree() const noexcept { return k_; }
    int order() const noexcept { return q_; }
    bool is_prime_field() const noexcept { return k_ == 1; }

    // Coefficients c_0..c_k (c_k = 1) of the monic modulus.
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    Elem add(Elem a, Elem b) const noexcept { return add_[a * q_ + b]; }
    Elem sub(Elem a, Elem b) const noexcept { return add_[a * q_ + neg_[b]]; }
    Elem mul(Elem a, Elem b) const noexcept { return mul_[a * q_ + b]; }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, unsigned long long e) const noexcept;
    Elem frobenius(Elem a) const noexcept { return frob_[a]; }

    const Elem* mul_row(Elem c) const noexcept { return mul_.data() + c * q_; }
    const Elem* add_row(Elem c) const noexcept { return add_.data() + c * q_; }

    Elem from_int(long long v) const noexcept;
    bool in_prime_field(Elem a) const noexcept { return a < p_; }
    // The residue class of X; equals 1 in a prime field.
    Elem adjoined_root() const noexcept { return k_ == 1 ? Elem{1} : static_cast<Elem>(p_); }
    std::string format(Elem a) const;

private:
    FiniteField(int p, int k);

    int p_;
    int k_;
    int q_;
    std::vector<int> modulus_;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    std::vector<Elem> inv_;
    std::vector<Elem> frob_;
};

using Field = std::shared_ptr<const FiniteField>;

bool is_prime(int n) noexcept;

// Smallest monic irreducible polynomial of degree k over F_p, ordered by the
// coefficient tuple (c_{k-1}, ..., c_0) read lexicographically.
std::vector<int> default_modulus(int p, int k);

// Irreducibility by trial division with every monic polynomial of degree <= k/2.
bool is_irreducible_over_prime(const std::vector<int>& coeffs, int p);

}  // namespace modlie
