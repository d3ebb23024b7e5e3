#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "modlie/lie_algebra.hpp"
#include "modlie/liealg.hpp"

namespace modlie {

// Root system of a simple type in Bourbaki numbering.
struct RootSystem {
    std::string type;  // "A3", "D4", "E6", "E7", "E8", "F4", "G2"
    char family = 'A';
    int rank = 0;
    // cartan[i][j] = <alpha_j, alpha_i^vee>, so [h_i, e_{alpha_j}] = cartan[i][j] e_{alpha_j}.
    std::vector<std::vector<int>> cartan;
    std::vector<int> norms;                   // (alpha_i, alpha_i), short roots of a G2/F4 pair have norm 2
    std::vector<std::vector<int>> pos_roots;  // ordered by height, then alpha_1 before alpha_2 lexicographically
    std::vector<int> highest;
    // Permutations of the extended nodes 0..rank (node 0 is minus the highest root); includes the identity.
    std::vector<std::vector<int>> ext_symmetries;

    std::size_t num_pos() const noexcept { return pos_roots.size(); }
    int index_of(const std::vector<int>& coeffs) const;  // -1 when not a positive root
    // (alpha_i, alpha_j) for extended nodes, node 0 included.
    int ext_form(int i, int j) const;
    // <gamma, alpha_i^vee> for a coefficient vector gamma.
    int pairing(const std::vector<int>& gamma, int i) const;
    long long det_cartan() const;
};

// Throws UnsupportedType.
RootSystem build_root_system(const std::string& type);

// Chevalley basis reduced mod p.  Basis order: positive roots, h_1..h_l, negatives in the same order.
struct ChevalleyAlgebra {
    RootSystem roots;
    int p = 0;
    LieAlgebra algebra;
    std::vector<Vec> t;    // dual torals t_i with [t_j, e_{alpha_i}] = delta_ij e_{alpha_i}; empty at bad primes
    bool has_torals() const noexcept { return !t.empty(); }
    const std::vector<Vec>& torals() const;  // throws BadPrime when absent

    std::size_t pos_index(std::size_t k) const noexcept { return k; }
    std::size_t h_index(int i) const noexcept { return roots.num_pos() + static_cast<std::size_t>(i); }
    std::size_t neg_index(std::size_t k) const noexcept { return roots.num_pos() + roots.rank + k; }
    std::size_t simple_index(int i) const;  // basis index of e_{alpha_i}, 0-based i
    // Signed root coefficients of a root basis vector; empty for Cartan elements.
    std::vector<int> root_of(std::size_t basis_index) const;
};

// Integer structure constants are built once per type and reduced on demand.
// Throws BadPrime only for p outside the supported field range.
std::shared_ptr<const ChevalleyAlgebra> build_g(const std::string& type, int p);

struct KacClass {
    std::vector<int> coords;    // (a_0, ..., a_l)
    std::vector<int> eig_dims;  // index k in F_p
    int centralizer_dim = 0;
    bool balanced = false;
    std::vector<int> zero_subdiagram;  // extended nodes with a_i = 0
    std::string zero_subdiagram_type;
};

// Eigenspace profile of h = sum a_i t_i from root arithmetic alone.
KacClass kac_class(const RootSystem& rs, int p, const std::vector<int>& interior, int d);

struct ToralResult {
    Vec h;
    KacClass cls;
    bool toral = false;
    int ker_ad_dim = 0;
    Elem killing = 0;
};

// Throws CoordOutOfRange and BadPrime.
ToralResult toral_from_kac(const ChevalleyAlgebra& g, const std::vector<int>& interior, int d = 0);

// Balanced classes up to extended-diagram symmetry, sorted by coordinates.
struct CensusEntry {
    KacClass cls;
    int ker_ad_dim = 0;
    bool toral = false;
    Elem killing = 0;
};
std::vector<CensusEntry> kac_census(const std::string& type, int p, int d);

// Lexicographically largest image of extended coordinates under the symmetries.
std::vector<int> canonical_coords(const RootSystem& rs, const std::vector<int>& ext);

// Dynkin type of a set of extended nodes, e.g. "D4A1"; empty for no nodes.
std::string subdiagram_type(const RootSystem& rs, const std::vector<int>& nodes);

Grading grade_by_cocharacter(const ChevalleyAlgebra& g, const std::vector<int>& weights);

// Sum of e_{alpha_i} over the given 0-based simple roots; throws NotComputable if not ad-nilpotent.
Vec nilpotent_rep(const ChevalleyAlgebra& g, const std::vector<int>& simple);

}  // namespace modlie
