#include "modlie/rootdata.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include <boost/rational.hpp>

#include "modlie/errors.hpp"
#include "modlie/liealg.hpp"

namespace modlie {

namespace {

using Rat = boost::rational<long long>;
using SparseInt = std::vector<std::pair<std::uint32_t, long long>>;

int height(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

struct Shape {
    char family;
    int rank;
    std::vector<int> norms;
    std::vector<std::pair<int, int>> edges;  // 0-based simple roots
};

Shape parse_shape(const std::string& type) {
    if (type.size() < 2) throw UnsupportedType("unknown type '" + type + "'");
    const char fam = type[0];
    int rank = 0;
    try {
        std::size_t used = 0;
        rank = std::stoi(type.substr(1), &used);
        if (used != type.size() - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw UnsupportedType("unknown type '" + type + "'");
    }
    Shape s{fam, rank, std::vector<int>(static_cast<std::size_t>(std::max(rank, 0)), 2), {}};
    switch (fam) {
        case 'A':
            if (rank < 1 || rank > 12) break;
            for (int i = 0; i + 1 < rank; ++i) s.edges.push_back({i, i + 1});
            return s;
        case 'D':
            if (rank < 4 || rank > 12) break;
            for (int i = 0; i + 2 < rank; ++i) s.edges.push_back({i, i + 1});
            s.edges.push_back({rank - 3, rank - 1});
            return s;
        case 'E':
            if (rank < 6 || rank > 8) break;
            s.edges = {{0, 2}, {2, 3}, {1, 3}};
            for (int i = 3; i + 1 < rank; ++i) s.edges.push_back({i, i + 1});
            return s;
        case 'F':
            if (rank != 4) break;
            s.norms = {4, 4, 2, 2};
            s.edges = {{0, 1}, {1, 2}, {2, 3}};
            return s;
        case 'G':
            if (rank != 2) break;
            s.norms = {2, 6};
            s.edges = {{0, 1}};
            return s;
        default:
            break;
    }
    throw UnsupportedType("unsupported type '" + type + "'");
}

std::vector<std::vector<int>> symmetries(char fam, int n) {
    std::vector<int> id(static_cast<std::size_t>(n + 1));
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> out{id};
    if (fam == 'A') {
        for (int s = 1; s <= n; ++s) {
            std::vector<int> rot(id.size());
            for (int i = 0; i <= n; ++i) rot[i] = (i + s) % (n + 1);
            out.push_back(rot);
        }
    } else if (fam == 'D') {
        std::vector<int> s1 = id;
        std::swap(s1[0], s1[1]);
        std::swap(s1[n - 1], s1[n]);
        if (n % 2 == 0) {
            std::vector<int> s2(id.size());
            for (int i = 0; i <= n; ++i) s2[i] = n - i;
            std::vector<int> s3(id.size());
            for (int i = 0; i <= n; ++i) s3[i] = s2[s1[i]];
            out.push_back(s1);
            out.push_back(s2);
            out.push_back(s3);
        } else {
            std::vector<int> r(id.size());
            for (int i = 2; i <= n - 2; ++i) r[i] = n - i;
            r[0] = n - 1;
            r[n - 1] = 1;
            r[1] = n;
            r[n] = 0;
            std::vector<int> r2(id.size()), r3(id.size());
            for (int i = 0; i <= n; ++i) r2[i] = r[r[i]];
            for (int i = 0; i <= n; ++i) r3[i] = r[r2[i]];
            out.push_back(r);
            out.push_back(r2);
            out.push_back(r3);
        }
    } else if (fam == 'E' && n == 6) {
        // Rotation of the three arms (1,3), (6,5), (0,2) about node 4.
        std::vector<int> r = {1, 6, 3, 5, 4, 2, 0};
        std::vector<int> r2(7);
        for (int i = 0; i < 7; ++i) r2[i] = r[r[i]];
        out.push_back(r);
        out.push_back(r2);
    } else if (fam == 'E' && n == 7) {
        out.push_back({7, 6, 2, 5, 4, 3, 1, 0});
    }
    return out;
}

// ---------------------------------------------------------------- integer Chevalley forms

struct ZForm {
    RootSystem rs;
    std::size_t dim = 0;
    std::vector<SparseInt> sc;  // sc[i*dim + j] = [b_i, b_j]
    std::vector<std::string> labels;
};

std::size_t basis_size(const RootSystem& rs) { return 2 * rs.num_pos() + static_cast<std::size_t>(rs.rank); }

// Frenkel-Kac algebra of a simply laced root system.
class KacAlgebra {
public:
    explicit KacAlgebra(const RootSystem& rs) : rs_(rs), n_(basis_size(rs)) {
        for (std::size_t k = 0; k < rs.num_pos(); ++k) {
            index_[rs.pos_roots[k]] = static_cast<int>(k);
            std::vector<int> neg = rs.pos_roots[k];
            for (auto& c : neg) c = -c;
            index_[neg] = static_cast<int>(rs.num_pos() + rs.rank + k);
        }
    }

    std::size_t dim() const { return n_; }
    std::size_t npos() const { return rs_.num_pos(); }
    int root_index(const std::vector<int>& r) const {
        auto it = index_.find(r);
        return it == index_.end() ? -1 : it->second;
    }
    std::vector<int> root(std::size_t i) const {
        const std::size_t np = npos(), l = rs_.rank;
        if (i < np) return rs_.pos_roots[i];
        if (i < np + l) return {};
        std::vector<int> r = rs_.pos_roots[i - np - l];
        for (auto& c : r) c = -c;
        return r;
    }
    bool is_cartan(std::size_t i) const { return i >= npos() && i < npos() + rs_.rank; }

    // Sparse bracket of two basis vectors.
    void bracket(std::size_t i, std::size_t j, std::vector<std::pair<std::size_t, long long>>& out) const {
        out.clear();
        const bool hi = is_cartan(i), hj = is_cartan(j);
        if (hi && hj) return;
        if (hi || hj) {
            const std::size_t h = hi ? i : j, e = hi ? j : i;
            const int c = rs_.pairing(root(e), static_cast<int>(h - npos()));
            if (c) out.push_back({e, hi ? c : -c});
            return;
        }
        std::vector<int> a = root(i), b = root(j), s(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b[k];
        const bool zero = std::all_of(s.begin(), s.end(), [](int x) { return x == 0; });
        if (zero) {
            // [e_a, e_-a] = -h_a with h_a = sum a_k h_k.
            for (std::size_t k = 0; k < a.size(); ++k)
                if (a[k]) out.push_back({npos() + k, -a[k]});
            return;
        }
        const int t = root_index(s);
        if (t < 0) return;
        long long parity = 0;
        for (int u = 0; u < rs_.rank; ++u) {
            parity += static_cast<long long>(a[u]) * b[u];
            for (int v = u + 1; v < rs_.rank; ++v)
                if (rs_.cartan[u][v] != 0) parity += static_cast<long long>(a[u]) * b[v];
        }
        out.push_back({static_cast<std::size_t>(t), (parity % 2 == 0) ? 1 : -1});
    }

private:
    const RootSystem& rs_;
    std::size_t n_;
    std::map<std::vector<int>, int> index_;
};

using RVec = std::vector<std::pair<std::size_t, Rat>>;

RVec rbracket(const KacAlgebra& K, const RVec& u, const RVec& v) {
    std::map<std::size_t, Rat> acc;
    std::vector<std::pair<std::size_t, long long>> terms;
    for (const auto& [i, x] : u)
        for (const auto& [j, y] : v) {
            K.bracket(i, j, terms);
            for (const auto& [k, c] : terms) acc[k] += x * y * Rat(c);
        }
    RVec out;
    for (const auto& [k, c] : acc)
        if (c.numerator() != 0) out.push_back({k, c});
    return out;
}

RVec rscale(RVec v, Rat c) {
    for (auto& t : v) t.second *= c;
    return v;
}

std::shared_ptr<const ZForm> build_zform(const std::string& type) {
    RootSystem target = build_root_system(type);
    const int l = target.rank;
    RootSystem seed;
    // fiber[i] lists the seed simple roots folded onto target simple root i.
    std::vector<std::vector<int>> fiber;
    if (target.family == 'F') {
        seed = build_root_system("E6");
        fiber = {{1}, {3}, {2, 4}, {0, 5}};
    } else if (target.family == 'G') {
        seed = build_root_system("D4");
        fiber = {{0, 2, 3}, {1}};
    } else {
        seed = target;
        for (int i = 0; i < l; ++i) fiber.push_back({i});
    }
    KacAlgebra K(seed);
    const std::size_t snp = seed.num_pos();
    std::vector<RVec> E(l), F(l), H(l);
    for (int i = 0; i < l; ++i) {
        for (int s : fiber[i]) {
            std::vector<int> a(static_cast<std::size_t>(seed.rank), 0);
            a[s] = 1;
            E[i].push_back({static_cast<std::size_t>(K.root_index(a)), Rat(1)});
            for (auto& c : a) c = -c;
            F[i].push_back({static_cast<std::size_t>(K.root_index(a)), Rat(-1)});
            H[i].push_back({snp + static_cast<std::size_t>(s), Rat(1)});
        }
        std::sort(E[i].begin(), E[i].end(), [](auto& x, auto& y) { return x.first < y.first; });
        std::sort(F[i].begin(), F[i].end(), [](auto& x, auto& y) { return x.first < y.first; });
    }

    const std::size_t np = target.num_pos();
    std::vector<RVec> pos(np), neg(np);
    for (std::size_t k = 0; k < np; ++k) {
        const auto& g = target.pos_roots[k];
        if (height(g) == 1) {
            const int i = static_cast<int>(std::find(g.begin(), g.end(), 1) - g.begin());
            pos[k] = E[i];
            neg[k] = F[i];
            continue;
        }
        int i = 0;
        std::vector<int> beta;
        for (; i < l; ++i) {
            beta = g;
            --beta[i];
            if (beta[i] >= 0 && target.index_of(beta) >= 0) break;
        }
        int r = 0;
        for (std::vector<int> down = beta;;) {
            --down[i];
            if (down[i] < 0 || target.index_of(down) < 0) break;
            ++r;
        }
        const std::size_t b = static_cast<std::size_t>(target.index_of(beta));
        pos[k] = rscale(rbracket(K, E[i], pos[b]), Rat(1, r + 1));
        neg[k] = rscale(rbracket(K, F[i], neg[b]), Rat(-1, r + 1));
    }

    // Target basis and pivot coordinates.
    std::vector<RVec> basis;
    for (std::size_t k = 0; k < np; ++k) basis.push_back(pos[k]);
    for (int i = 0; i < l; ++i) basis.push_back(H[i]);
    for (std::size_t k = 0; k < np; ++k) basis.push_back(neg[k]);
    const std::size_t n = basis.size();
    std::vector<int> owner(K.dim(), -1);
    for (std::size_t t = 0; t < n; ++t)
        for (const auto& [idx, c] : basis[t]) {
            if (owner[idx] != -1) throw std::logic_error("Chevalley basis vectors overlap");
            owner[idx] = static_cast<int>(t);
        }

    auto coords = [&](const RVec& v) {
        std::map<std::size_t, Rat> c;
        for (const auto& [idx, x] : v) {
            const int t = owner[idx];
            if (t < 0) throw std::logic_error("bracket leaves the folded subalgebra");
            const auto& bt = basis[static_cast<std::size_t>(t)];
            auto it = std::find_if(bt.begin(), bt.end(), [&](auto& e) { return e.first == idx; });
            Rat ratio = x / it->second;
            auto [pos_it, fresh] = c.insert({static_cast<std::size_t>(t), ratio});
            if (!fresh && pos_it->second != ratio) throw std::logic_error("bracket is not a basis combination");
        }
        SparseInt out;
        for (const auto& [t, x] : c) {
            if (x.denominator() != 1) throw std::logic_error("non-integral structure constant");
            if (x.numerator() != 0) out.push_back({static_cast<std::uint32_t>(t), x.numerator()});
        }
        return out;
    };

    // [e_g, e_-g] must be the coroot h_g.
    for (std::size_t k = 0; k < np; ++k) {
        const auto& g = target.pos_roots[k];
        int norm = 0;
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) norm += g[i] * g[j] * target.ext_form(i + 1, j + 1);
        SparseInt expect;
        for (int i = 0; i < l; ++i)
            if (g[i]) expect.push_back({static_cast<std::uint32_t>(np + i), static_cast<long long>(g[i]) * target.norms[i] / norm});
        if (coords(rbracket(K, pos[k], neg[k])) != expect) throw std::logic_error("coroot normalisation failed");
    }

    auto z = std::make_shared<ZForm>();
    z->rs = target;
    z->dim = n;
    z->sc.assign(n * n, {});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            SparseInt c = coords(rbracket(K, basis[a], basis[b]));
            SparseInt neg_c = c;
            for (auto& t : neg_c) t.second = -t.second;
            z->sc[a * n + b] = std::move(c);
            z->sc[b * n + a] = std::move(neg_c);
        }
    auto digits = [](const std::vector<int>& v) {
        std::string s;
        for (int c : v) s += std::to_string(c);
        return s;
    };
    for (std::size_t k = 0; k < np; ++k) z->labels.push_back("e_" + digits(target.pos_roots[k]));
    for (int i = 0; i < l; ++i) z->labels.push_back("h_" + std::to_string(i + 1));
    for (std::size_t k = 0; k < np; ++k) z->labels.push_back("e_-" + digits(target.pos_roots[k]));
    return z;
}

std::shared_ptr<const ZForm> zform(const std::string& type) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const ZForm>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(type);
    if (it != cache.end()) return it->second;
    auto z = build_zform(type);
    cache[type] = z;
    return z;
}

void enumerate_interior(const RootSystem& rs, int p, std::vector<int>& a, int i, int budget,
                        const std::function<void(const std::vector<int>&)>& visit) {
    if (i == rs.rank) {
        if (std::any_of(a.begin(), a.end(), [](int x) { return x != 0; })) visit(a);
        return;
    }
    for (int v = 0; v < p && v * rs.highest[i] <= budget; ++v) {
        a[i] = v;
        enumerate_interior(rs, p, a, i + 1, budget - v * rs.highest[i], visit);
    }
    a[i] = 0;
}

}  // namespace

// ---------------------------------------------------------------- RootSystem

int RootSystem::index_of(const std::vector<int>& coeffs) const {
    auto it = std::find(pos_roots.begin(), pos_roots.end(), coeffs);
    return it == pos_roots.end() ? -1 : static_cast<int>(it - pos_roots.begin());
}

int RootSystem::ext_form(int i, int j) const {
    auto simple = [&](int a, int b) {  // 1-based simple roots
        if (a == b) return norms[a - 1];
        const int c = cartan[a - 1][b - 1];
        return c * norms[a - 1] / 2;
    };
    auto theta_with = [&](int b) {
        int s = 0;
        for (int k = 0; k < rank; ++k) s += highest[k] * simple(k + 1, b);
        return s;
    };
    if (i == 0 && j == 0) {
        int s = 0;
        for (int k = 0; k < rank; ++k) s += highest[k] * theta_with(k + 1);
        return s;
    }
    if (i == 0) return -theta_with(j);
    if (j == 0) return -theta_with(i);
    return simple(i, j);
}

int RootSystem::pairing(const std::vector<int>& gamma, int i) const {
    int s = 0;
    for (int j = 0; j < rank; ++j) s += gamma[j] * cartan[i][j];
    return s;
}

long long RootSystem::det_cartan() const {
    std::vector<std::vector<Rat>> m(rank, std::vector<Rat>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) m[i][j] = cartan[i][j];
    Rat det = 1;
    for (int c = 0; c < rank; ++c) {
        int piv = c;
        while (piv < rank && m[piv][c].numerator() == 0) ++piv;
        if (piv == rank) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < rank; ++r) {
            Rat f = m[r][c] / m[c][c];
            for (int k = c; k < rank; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det.numerator();
}

RootSystem build_root_system(const std::string& type) {
    Shape s = parse_shape(type);
    RootSystem rs;
    rs.type = type;
    rs.family = s.family;
    rs.rank = s.rank;
    rs.norms = s.norms;
    const int l = s.rank;
    rs.cartan.assign(l, std::vector<int>(l, 0));
    for (int i = 0; i < l; ++i) rs.cartan[i][i] = 2;
    for (auto [i, j] : s.edges) {
        const int form = -std::max(s.norms[i], s.norms[j]) / 2;
        rs.cartan[i][j] = 2 * form / s.norms[i];
        rs.cartan[j][i] = 2 * form / s.norms[j];
    }
    // Roots by height: gamma + alpha_i is a root iff (down-string length) - <gamma, alpha_i^vee> > 0.
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> roots;
    for (int i = 0; i < l; ++i) {
        std::vector<int> a(l, 0);
        a[i] = 1;
        roots.push_back(a);
        seen.insert(a);
    }
    for (std::size_t head = 0; head < roots.size(); ++head) {
        const std::vector<int> g = roots[head];
        for (int i = 0; i < l; ++i) {
            int down = 0;
            for (std::vector<int> d = g;;) {
                --d[i];
                if (d[i] < 0 || !seen.count(d)) break;
                ++down;
            }
            if (down - rs.pairing(g, i) > 0) {
                std::vector<int> up = g;
                ++up[i];
                if (seen.insert(up).second) roots.push_back(up);
            }
        }
    }
    std::stable_sort(roots.begin(), roots.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        const int ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a > b;
    });
    rs.pos_roots = std::move(roots);
    rs.highest = rs.pos_roots.back();
    rs.ext_symmetries = symmetries(s.family, l);
    return rs;
}

// ---------------------------------------------------------------- Chevalley algebras

const std::vector<Vec>& ChevalleyAlgebra::torals() const {
    if (t.empty()) throw BadPrime("det(Cartan) vanishes mod " + std::to_string(p));
    return t;
}

std::size_t ChevalleyAlgebra::simple_index(int i) const {
    std::vector<int> a(static_cast<std::size_t>(roots.rank), 0);
    a.at(static_cast<std::size_t>(i)) = 1;
    return static_cast<std::size_t>(roots.index_of(a));
}

std::vector<int> ChevalleyAlgebra::root_of(std::size_t i) const {
    const std::size_t np = roots.num_pos(), l = roots.rank;
    if (i < np) return roots.pos_roots[i];
    if (i < np + l) return {};
    std::vector<int> r = roots.pos_roots[i - np - l];
    for (auto& c : r) c = -c;
    return r;
}

std::shared_ptr<const ChevalleyAlgebra> build_g(const std::string& type, int p) {
    static std::mutex mu;
    static std::map<std::pair<std::string, int>, std::shared_ptr<const ChevalleyAlgebra>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({type, p});
        if (it != cache.end()) return it->second;
    }
    Field f = FiniteField::get(p, 1);
    auto z = zform(type);
    const std::size_t n = z->dim;
    std::vector<Elem> table(n * n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (const auto& [k, c] : z->sc[a * n + b]) table[(a * n + b) * n + k] = f->from_int(c);
    auto g = std::make_shared<ChevalleyAlgebra>();
    g->roots = z->rs;
    g->p = p;
    g->algebra = LieAlgebra(f, z->labels, std::move(table), type + "/F" + std::to_string(p));
    if (!g->algebra.check_antisymmetry() || !g->algebra.check_jacobi())
        throw std::logic_error("Chevalley structure constants fail the Lie axioms mod p");

    const int l = g->roots.rank;
    if (g->roots.det_cartan() % p != 0) {
        Matrix m(f, l, l);
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) m(i, j) = f->from_int(g->roots.cartan[i][j]);
        Matrix inv = *solve(m, Matrix::identity(f, l));
        for (int j = 0; j < l; ++j) {
            Vec t(n, 0);
            for (int k = 0; k < l; ++k) t[g->h_index(k)] = inv(j, k);
            g->t.push_back(std::move(t));
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    cache[{type, p}] = g;
    return g;
}

// ---------------------------------------------------------------- Kac coordinates

std::vector<int> canonical_coords(const RootSystem& rs, const std::vector<int>& ext) {
    std::vector<int> best = ext;
    for (const auto& perm : rs.ext_symmetries) {
        std::vector<int> img(ext.size());
        for (std::size_t i = 0; i < ext.size(); ++i) img[static_cast<std::size_t>(perm[i])] = ext[i];
        best = std::max(best, img);
    }
    return best;
}

std::string subdiagram_type(const RootSystem& rs, const std::vector<int>& nodes) {
    const std::size_t m = nodes.size();
    std::vector<int> comp(m, -1);
    int ncomp = 0;
    auto linked = [&](std::size_t a, std::size_t b) { return rs.ext_form(nodes[a], nodes[b]) != 0; };
    for (std::size_t s = 0; s < m; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < m; ++v)
                if (comp[v] < 0 && v != u && linked(u, v)) {
                    comp[v] = ncomp;
                    stack.push_back(v);
                }
        }
        ++ncomp;
    }
    struct Piece {
        char letter;
        int rank;
    };
    std::vector<Piece> pieces;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<std::size_t> mem;
        for (std::size_t i = 0; i < m; ++i)
            if (comp[i] == c) mem.push_back(i);
        const int k = static_cast<int>(mem.size());
        int maxbond = 0, maxnorm = 0;
        std::vector<int> deg(mem.size(), 0);
        for (std::size_t a = 0; a < mem.size(); ++a) {
            maxnorm = std::max(maxnorm, rs.ext_form(nodes[mem[a]], nodes[mem[a]]));
            for (std::size_t b = 0; b < mem.size(); ++b) {
                if (a == b || !linked(mem[a], mem[b])) continue;
                ++deg[a];
                const int f = rs.ext_form(nodes[mem[a]], nodes[mem[b]]);
                const int bond = 4 * f * f /
                                 (rs.ext_form(nodes[mem[a]], nodes[mem[a]]) * rs.ext_form(nodes[mem[b]], nodes[mem[b]]));
                maxbond = std::max(maxbond, bond);
            }
        }
        if (maxbond == 3) {
            pieces.push_back({'G', 2});
        } else if (maxbond == 2) {
            int shorts = 0;
            for (auto i : mem)
                if (rs.ext_form(nodes[i], nodes[i]) < maxnorm) ++shorts;
            if (k == 2)
                pieces.push_back({'B', 2});
            else if (k == 4 && shorts == 2)
                pieces.push_back({'F', 4});
            else
                pieces.push_back({shorts == 1 ? 'B' : 'C', k});
        } else {
            auto branch = std::find(deg.begin(), deg.end(), 3);
            if (branch == deg.end()) {
                pieces.push_back({'A', k});
            } else {
                // Arm lengths from the branch node.
                const std::size_t bidx = static_cast<std::size_t>(branch - deg.begin());
                std::vector<int> arms;
                for (std::size_t nb = 0; nb < mem.size(); ++nb) {
                    if (nb == bidx || !linked(mem[bidx], mem[nb])) continue;
                    int len = 1;
                    std::size_t prev = bidx, cur = nb;
                    while (true) {
                        std::size_t next = mem.size();
                        for (std::size_t w = 0; w < mem.size(); ++w)
                            if (w != prev && w != cur && linked(mem[cur], mem[w])) next = w;
                        if (next == mem.size()) break;
                        prev = cur;
                        cur = next;
                        ++len;
                    }
                    arms.push_back(len);
                }
                std::sort(arms.begin(), arms.end());
                if (arms[0] == 1 && arms[1] == 1)
                    pieces.push_back({'D', k});
                else
                    pieces.push_back({'E', k});
            }
        }
    }
    auto priority = [](char c) { return std::string("EFGDCBA").find(c); };
    std::sort(pieces.begin(), pieces.end(), [&](const Piece& a, const Piece& b) {
        if (a.letter != b.letter) return priority(a.letter) < priority(b.letter);
        return a.rank > b.rank;
    });
    std::string out;
    for (const auto& pc : pieces) out += pc.letter + std::to_string(pc.rank);
    return out;
}

KacClass kac_class(const RootSystem& rs, int p, const std::vector<int>& interior, int d) {
    if (static_cast<int>(interior.size()) != rs.rank) throw CoordOutOfRange("wrong number of Kac coordinates");
    KacClass k;
    int weighted = 0;
    for (int i = 0; i < rs.rank; ++i) weighted += rs.highest[i] * interior[i];
    k.coords.push_back(p - weighted);
    k.coords.insert(k.coords.end(), interior.begin(), interior.end());
    k.eig_dims.assign(static_cast<std::size_t>(p), 0);
    k.eig_dims[0] = rs.rank;
    for (const auto& g : rs.pos_roots) {
        int s = 0;
        for (int i = 0; i < rs.rank; ++i) s += g[i] * interior[i];
        s %= p;
        ++k.eig_dims[static_cast<std::size_t>(s)];
        ++k.eig_dims[static_cast<std::size_t>((p - s) % p)];
    }
    k.centralizer_dim = k.eig_dims[0];
    const int first = p > 1 ? k.eig_dims[1] : 0;
    k.balanced = p > 1 && first > 0;
    for (int i = 1; i < p; ++i)
        if (k.eig_dims[i] != first) k.balanced = false;
    if (d > 0 && first % d != 0) k.balanced = false;
    for (int i = 0; i <= rs.rank; ++i)
        if (k.coords[static_cast<std::size_t>(i)] == 0) k.zero_subdiagram.push_back(i);
    k.zero_subdiagram_type = subdiagram_type(rs, k.zero_subdiagram);
    return k;
}

ToralResult toral_from_kac(const ChevalleyAlgebra& g, const std::vector<int>& a, int d) {
    const RootSystem& rs = g.roots;
    if (static_cast<int>(a.size()) != rs.rank) throw CoordOutOfRange("wrong number of Kac coordinates");
    int weighted = 0;
    for (int i = 0; i < rs.rank; ++i) {
        if (a[i] < 0 || a[i] >= g.p) throw CoordOutOfRange("Kac coordinate outside [0, p)");
        weighted += rs.highest[i] * a[i];
    }
    if (weighted > g.p) throw CoordOutOfRange("a_0 would be negative");
    if (std::all_of(a.begin(), a.end(), [](int x) { return x == 0; })) throw CoordOutOfRange("zero coordinates");
    const auto& t = g.torals();
    const LieAlgebra& L = g.algebra;
    const FiniteField& f = *L.field();
    ToralResult r;
    r.h = L.zero();
    for (int i = 0; i < rs.rank; ++i)
        if (a[i]) axpy(f, f.from_int(a[i]), t[i].data(), r.h.data(), L.dim());
    r.cls = kac_class(rs, g.p, a, d == 0 ? g.p : d);
    r.toral = is_toral(L, r.h);
    r.ker_ad_dim = static_cast<int>(kernel(L.ad(r.h)).dim());
    r.killing = killing_form(L, r.h, r.h);
    return r;
}

std::vector<CensusEntry> kac_census(const std::string& type, int p, int d) {
    RootSystem rs = build_root_system(type);
    std::set<std::vector<int>> canon;
    std::vector<int> a(static_cast<std::size_t>(rs.rank), 0);
    enumerate_interior(rs, p, a, 0, p, [&](const std::vector<int>& x) {
        KacClass k = kac_class(rs, p, x, d);
        if (k.balanced) canon.insert(canonical_coords(rs, k.coords));
    });
    std::vector<CensusEntry> out;
    if (canon.empty()) return out;
    auto g = build_g(type, p);
    for (const auto& ext : canon) {
        std::vector<int> interior(ext.begin() + 1, ext.end());
        ToralResult r = toral_from_kac(*g, interior, d);
        out.push_back({r.cls, r.ker_ad_dim, r.toral, r.killing});
    }
    return out;
}

// ---------------------------------------------------------------- gradings and nilpotents

Grading grade_by_cocharacter(const ChevalleyAlgebra& g, const std::vector<int>& w) {
    if (static_cast<int>(w.size()) != g.roots.rank) throw ShapeMismatch("one weight per simple root");
    const LieAlgebra& L = g.algebra;
    std::vector<int> degree(L.dim(), 0);
    for (std::size_t i = 0; i < L.dim(); ++i) {
        auto r = g.root_of(i);
        for (std::size_t k = 0; k < r.size(); ++k) degree[i] += r[k] * w[k];
    }
    return make_grading(L, std::move(degree));
}

Vec nilpotent_rep(const ChevalleyAlgebra& g, const std::vector<int>& simple) {
    Vec e = g.algebra.zero();
    for (int i : simple) e[g.simple_index(i)] = 1;
    if (!is_ad_nilpotent(g.algebra, e)) throw NotComputable("sum of simple root vectors is not ad-nilpotent");
    return e;
}

}  // namespace modlie
