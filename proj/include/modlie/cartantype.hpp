#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modlie/lie_algebra.hpp"
#include "modlie/liealg.hpp"
#include "modlie/matrix.hpp"

namespace modlie {

inline constexpr std::size_t kMaxCartanDim = 512;

// O(m;n) with basis x^(a), 0 <= a_i < p^{n_i}.  When every n_i = 1 the basis is
// read as ordinary truncated monomials x^a, so x^a x^b = x^{a+b} and
// d_k x^a = a_k x^{a-e_k}; otherwise products carry Lucas binomials and
// d_k x^(a) = x^(a-e_k).
class DividedPowerAlgebra {
public:
    DividedPowerAlgebra() = default;
    DividedPowerAlgebra(int m, std::vector<int> n, int p);

    const Field& field() const noexcept { return field_; }
    int m() const noexcept { return m_; }
    int p() const noexcept { return p_; }
    const std::vector<int>& n() const noexcept { return n_; }
    bool truncated() const noexcept { return truncated_; }
    std::size_t dim() const noexcept { return monomials_.size(); }
    const std::vector<int>& exponent(std::size_t i) const { return monomials_.at(i); }
    // -1 when some exponent is out of range.
    long index_of(const std::vector<int>& a) const;
    std::string label(std::size_t i) const;

    // x^(a) x^(b) as (coefficient, index); nullopt when zero.
    std::optional<std::pair<Elem, std::size_t>> basis_product(std::size_t i, std::size_t j) const;
    std::optional<std::pair<Elem, std::size_t>> basis_partial(std::size_t i, int k) const;

    Vec multiply(std::span<const Elem> f, std::span<const Elem> g) const;
    Vec partial(int k, std::span<const Elem> f) const;
    Vec monomial(const std::vector<int>& a) const;
    Vec one() const { return monomial(std::vector<int>(static_cast<std::size_t>(m_), 0)); }
    // Matrix of multiplication by f.
    Matrix mult_matrix(std::span<const Elem> f) const;

private:
    Field field_;
    int m_ = 0;
    int p_ = 0;
    std::vector<int> n_;
    std::vector<int> bound_;
    std::vector<std::size_t> stride_;
    bool truncated_ = true;
    std::vector<std::vector<int>> monomials_;
};

DividedPowerAlgebra build_O(int m, const std::vector<int>& n, int p);

// Vector fields sum f_k d_k stored with layout index = monomial * m + k.
Vec field_bracket(const DividedPowerAlgebra& O, std::span<const Elem> x, std::span<const Elem> y);
Vec field_apply(const DividedPowerAlgebra& O, std::span<const Elem> x, std::span<const Elem> f);
Vec field_divergence(const DividedPowerAlgebra& O, std::span<const Elem> x);
Vec field_from_components(const DividedPowerAlgebra& O, const std::vector<Vec>& comps);
Vec field_component(const DividedPowerAlgebra& O, std::span<const Elem> x, int k);

struct WittAlgebra {
    DividedPowerAlgebra O;
    LieAlgebra algebra;  // basis x^(a) d_k, index = monomial * m + k

    std::size_t index(std::size_t mono, int k) const { return mono * static_cast<std::size_t>(O.m()) + static_cast<std::size_t>(k); }
    Vec field(const std::vector<Vec>& comps) const { return field_from_components(O, comps); }
    Vec apply(std::span<const Elem> x, std::span<const Elem> f) const { return field_apply(O, x, f); }
    Vec divergence(std::span<const Elem> x) const { return field_divergence(O, x); }
    // Columns: images of the monomial basis of O.
    Matrix action_on_O(std::span<const Elem> x) const;
};

// Throws SizeGuard when m p^{|n|} exceeds kMaxCartanDim.
WittAlgebra build_W(int m, const std::vector<int>& n, int p);

// deg(x^(a) d_k) = sum a_i g_i - g_k.
Grading grade_W(const WittAlgebra& w, const std::vector<int>& degrees);

// Lie algebra on independent vector fields closed under the bracket; throws NotSubalgebra.
struct FieldSubalgebra {
    LieAlgebra algebra;
    std::vector<Vec> fields;  // basis in W(m;n) coordinates
};
FieldSubalgebra field_subalgebra(const DividedPowerAlgebra& O, std::vector<Vec> fields,
                                 std::vector<std::string> labels, std::string name);

// d_1(f) d_2 - d_2(f) d_1 in W(2;1).
Vec D_H(const DividedPowerAlgebra& O, std::span<const Elem> f);

struct Hamiltonian2 {
    WittAlgebra W;
    FieldSubalgebra second_derived;  // span D_H(x^a), 0 < |a| < 2(p-1)
    FieldSubalgebra full;            // divergence-free fields of W(2;1)
};
Hamiltonian2 build_H2(int p);

// Poisson model on monomials x1^a x2^b with 0 < a+b < 2(p-1).
LieAlgebra build_poisson_H(int p);
// Basis index of x1^a x2^b in build_poisson_H, or -1.
long poisson_index(int p, int a, int b);

// v_alpha for alpha in F_p^2 minus 0, [v_a, v_b] = (a1 b2 - a2 b1) v_{a+b}.
LieAlgebra build_block(int p);
long block_index(int p, int a1, int a2);

// u_alpha for alpha in F_{p^2}; basis index equals the field encoding of alpha.
LieAlgebra build_AZ(int p);

// D_K(f) = f1 d1 + f2 d2 + f3 d3 with f1 = x1 d3 f - d2 f, f2 = x2 d3 f + d1 f,
// f3 = 2f - x1 d1 f - x2 d2 f.
Vec D_K(const DividedPowerAlgebra& O, std::span<const Elem> f);
FieldSubalgebra build_K3(int p);

// Derived algebra of the divergence-free fields in W(3;1), dim 2(p^3 - 1).
FieldSubalgebra build_S3(int p);
// deg(x^(a) d_k) = d_{k3} - a_3 on build_S3.
Grading grade_S3(const FieldSubalgebra& s);

// W(m;1) acting on O(m;1) by derivations, O(m;1) by multiplication, as one algebra.
struct SemidirectWO {
    WittAlgebra W;
    LieAlgebra algebra;              // basis of W then O, [D, f] = D(f), [f, g] = 0
    std::vector<Matrix> action;      // on V = O(m;1), one matrix per basis element
};
SemidirectWO build_W_ltimes_O(int m, int p);

}  // namespace modlie
