#include "modlie/modrep.hpp"

#include <algorithm>
#include <numeric>

#include "modlie/errors.hpp"
#include "modlie/poly.hpp"

namespace modlie {

namespace {

Matrix transpose_neg(const Matrix& m) {
    Matrix t = m.transpose();
    return scaled(t, m.field()->neg(1));
}

std::vector<std::size_t> all_indices(std::size_t n) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return idx;
}

// Action of g on an invariant subspace w, in coordinates read off the pivots.
Matrix restrict_matrix(const Matrix& g, const Subspace& w) {
    Matrix img = g * w.basis().transpose();  // n x d
    return img.select_rows(w.pivots());
}

Matrix quotient_matrix(const Matrix& g, const Subspace& w) {
    const auto comp = w.complement_indices();
    return w.projector() * g.submatrix(all_indices(g.rows()), comp);
}

// w + the vectors of q lifted along the complement indices of w.
Subspace lift_from_quotient(const Subspace& w, const Subspace& q) {
    const auto comp = w.complement_indices();
    std::vector<Vec> gens = w.basis_vectors();
    for (std::size_t i = 0; i < q.dim(); ++i) {
        Vec v(w.ambient_dim(), 0);
        auto row = q.basis_row(i);
        for (std::size_t c = 0; c < comp.size(); ++c) v[comp[c]] = row[c];
        gens.push_back(std::move(v));
    }
    return Subspace::span(w.field(), w.ambient_dim(), gens);
}

Subspace embed_in(const Subspace& w, const Subspace& inner) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < inner.dim(); ++i) gens.push_back(w.combine(inner.basis_row(i)));
    return Subspace::span(w.field(), w.ambient_dim(), gens);
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

Vec random_nonzero_in(Rng& rng, const Subspace& s) {
    const FiniteField& f = *s.field();
    while (true) {
        Vec c = rng.vector(f, s.dim());
        if (!is_zero(c)) return s.combine(c);
    }
}

void composition_into(const GenRep& rep, std::uint64_t seed, std::uint64_t& counter, std::vector<Subspace>& chain,
                      std::vector<GenRep>& factors) {
    chain.clear();
    factors.clear();
    chain.emplace_back(rep.field, rep.dim);
    if (rep.dim == 0) return;
    SplitResult s = split(rep, mix(seed, counter++));
    if (!s.submodule) {
        chain.push_back(Subspace::full(rep.field, rep.dim));
        factors.push_back(rep);
        return;
    }
    const Subspace& w = *s.submodule;
    std::vector<Subspace> low, high;
    std::vector<GenRep> flow, fhigh;
    composition_into(rep.sub(w), seed, counter, low, flow);
    composition_into(rep.quotient(w), seed, counter, high, fhigh);
    for (std::size_t i = 1; i < low.size(); ++i) chain.push_back(embed_in(w, low[i]));
    for (std::size_t i = 1; i < high.size(); ++i) chain.push_back(lift_from_quotient(w, high[i]));
    factors = std::move(flow);
    for (auto& f : fhigh) factors.push_back(std::move(f));
}

}  // namespace

// ---------------------------------------------------------------- GenRep

GenRep GenRep::sub(const Subspace& w) const {
    GenRep out{field, w.dim(), {}};
    for (const auto& g : gens) out.gens.push_back(restrict_matrix(g, w));
    return out;
}

GenRep GenRep::quotient(const Subspace& w) const {
    GenRep out{field, w.codim(), {}};
    for (const auto& g : gens) out.gens.push_back(quotient_matrix(g, w));
    return out;
}

GenRep GenRep::dual() const {
    GenRep out{field, dim, {}};
    for (const auto& g : gens) out.gens.push_back(transpose_neg(g));
    return out;
}

bool GenRep::is_invariant(const Subspace& w) const {
    for (const auto& g : gens)
        for (std::size_t i = 0; i < w.dim(); ++i)
            if (!w.contains(g * w.basis_row(i))) return false;
    return true;
}

// ---------------------------------------------------------------- ModuleRep

ModuleRep::ModuleRep(LieAlgebra algebra, std::vector<Matrix> action, bool validate)
    : algebra_(std::move(algebra)), action_(std::move(action)) {
    if (action_.size() != algebra_.dim()) throw ShapeMismatch("one matrix per basis element is required");
    dim_ = action_.empty() ? 0 : action_[0].rows();
    for (const auto& m : action_) {
        if (m.rows() != dim_ || m.cols() != dim_) throw ShapeMismatch("action matrices must be square of equal size");
        if (m.field() != algebra_.field()) throw FieldMismatch("action over a different field");
    }
    if (validate && !check_homomorphism()) throw NotHomomorphism("rho([x,y]) != [rho(x), rho(y)]");
}

ModuleRep ModuleRep::adjoint(const LieAlgebra& L) {
    std::vector<Matrix> ads;
    ads.reserve(L.dim());
    for (std::size_t i = 0; i < L.dim(); ++i) ads.push_back(L.ad_basis(i));
    return ModuleRep(L, std::move(ads), false);
}

Matrix ModuleRep::of(std::span<const Elem> x) const {
    Matrix m(field(), dim_, dim_);
    const FiniteField& f = *field();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) axpy(f, x[i], action_[i].row_ptr(0), m.row_ptr(0), dim_ * dim_);
    return m;
}

GenRep ModuleRep::generators() const {
    GenRep g{field(), dim_, {}};
    for (const auto& v : algebra_.lie_generators()) g.gens.push_back(of(v));
    return g;
}

bool ModuleRep::check_homomorphism() const {
    const auto& gens = algebra_.lie_generators();
    for (const auto& g : gens) {
        Matrix rg = of(g);
        for (std::size_t j = 0; j < algebra_.dim(); ++j) {
            Vec br = algebra_.bracket(g, algebra_.basis_vector(j));
            if (!(of(br) == commutator(rg, action_[j]))) return false;
        }
    }
    return true;
}

ModuleRep ModuleRep::dual() const {
    std::vector<Matrix> act;
    for (const auto& m : action_) act.push_back(transpose_neg(m));
    return ModuleRep(algebra_, std::move(act), false);
}

ModuleRep ModuleRep::sub(const Subspace& w) const {
    std::vector<Matrix> act;
    for (const auto& m : action_) act.push_back(restrict_matrix(m, w));
    return ModuleRep(algebra_, std::move(act), false);
}

ModuleRep ModuleRep::quotient(const Subspace& w) const {
    std::vector<Matrix> act;
    for (const auto& m : action_) act.push_back(quotient_matrix(m, w));
    return ModuleRep(algebra_, std::move(act), false);
}

// ---------------------------------------------------------------- MeatAxe

Subspace spin(const GenRep& rep, const std::vector<Vec>& seeds) { return spin_under(rep.field, rep.dim, seeds, rep.gens); }

Subspace spin(const ModuleRep& rep, const std::vector<Vec>& seeds) {
    return spin_under(rep.field(), rep.dim(), seeds, rep.generators().gens);
}

SplitResult split(const GenRep& rep, std::uint64_t seed, std::size_t budget) {
    SplitResult out;
    const std::size_t n = rep.dim;
    if (n <= 1) return out;
    const Field& F = rep.field;
    const FiniteField& f = *F;

    std::vector<Matrix> gens;
    for (const auto& g : rep.gens)
        if (!g.is_zero()) gens.push_back(g);
    if (gens.empty()) {
        out.submodule = Subspace::span(F, n, {unit_vector(n, 0)});
        return out;
    }
    Rng rng(seed);
    std::vector<Matrix> transposes;
    std::vector<Matrix> pool = gens;
    const double cube = static_cast<double>(n) * n * n;

    for (std::size_t attempt = 0; attempt < budget; ++attempt) {
        out.attempts = attempt + 1;
        const Matrix& a = pool[rng.below(pool.size())];
        const Matrix& b = pool[rng.below(pool.size())];
        Matrix x = a * b;
        for (const auto& g : gens) x = x + scaled(g, rng.element(f));
        if (pool.size() < 12)
            pool.push_back(x);
        else
            pool[gens.size() + rng.below(pool.size() - gens.size())] = x;
        Matrix theta = x;
        const Elem shift = rng.element(f);
        for (std::size_t i = 0; i < n; ++i) theta(i, i) = f.add(theta(i, i), shift);

        auto factors = factor(charpoly(theta), rng.next());
        std::stable_sort(factors.begin(), factors.end(),
                         [](const Factor& l, const Factor& r) { return l.poly.degree() < r.poly.degree(); });
        std::size_t tried = 0;
        for (const Factor& fac : factors) {
            const int d = fac.poly.degree();
            if (tried >= 3) break;
            if (d > 3 && d * cube > 6e8) break;
            ++tried;
            Matrix fm = evaluate(fac.poly, theta);
            Subspace nul = kernel(fm);
            Subspace s = spin(rep, {random_nonzero_in(rng, nul)});
            if (!s.is_full()) {
                out.submodule = std::move(s);
                return out;
            }
            if (nul.dim() != static_cast<std::size_t>(d)) continue;
            // Norton's criterion: the dual spin decides.
            if (transposes.empty())
                for (const auto& g : rep.gens) transposes.push_back(g.transpose());
            Subspace nulT = kernel(fm.transpose());
            Subspace sT = spin_under(F, n, {random_nonzero_in(rng, nulT)}, transposes);
            if (!sT.is_full()) {
                out.submodule = annihilator(sT);
                return out;
            }
            return out;  // irreducible
        }
    }
    throw IterationBudget("MeatAxe split exceeded " + std::to_string(budget) + " attempts");
}

bool is_irreducible(const GenRep& rep, std::uint64_t seed) {
    if (rep.dim == 0) return false;
    return !split(rep, seed).submodule;
}

bool is_irreducible(const ModuleRep& rep, std::uint64_t seed) { return is_irreducible(rep.generators(), seed); }

Subspace find_minimal_submodule(const GenRep& rep, std::uint64_t seed) {
    Subspace current = Subspace::full(rep.field, rep.dim);
    GenRep sub = rep;
    std::uint64_t counter = 0;
    while (true) {
        SplitResult s = split(sub, mix(seed, counter++));
        if (!s.submodule) return current;
        current = embed_in(current, *s.submodule);
        sub = rep.sub(current);
    }
}

CompositionSeries composition_series(const GenRep& rep, std::uint64_t seed) {
    CompositionSeries cs;
    std::uint64_t counter = 0;
    composition_into(rep, seed, counter, cs.chain, cs.factors);
    Coordinatizer basis(rep.field, rep.dim);
    std::vector<Vec> cols;
    for (const auto& step : cs.chain)
        for (std::size_t i = 0; i < step.dim(); ++i)
            if (basis.add(step.basis_row(i))) cols.push_back(step.basis_vector(i));
    cs.adapted = Matrix::from_columns(rep.field, cols, rep.dim);
    return cs;
}

// ---------------------------------------------------------------- homomorphisms and socle

Subspace hom_images(const GenRep& t, const GenRep& rep) {
    if (t.gens.size() != rep.gens.size()) throw ShapeMismatch("modules with different generator counts");
    const Field& F = rep.field;
    const std::size_t n = rep.dim;
    if (t.dim == 0 || n == 0) return Subspace(F, n);

    Coordinatizer tc(F, t.dim);
    std::vector<Vec> tv;
    std::vector<Matrix> images;  // images[k] = word_k applied to the candidate basis K
    Matrix K = Matrix::identity(F, n);
    tv.push_back(unit_vector(t.dim, 0));
    tc.add(tv[0]);
    images.push_back(K);

    auto shrink = [&](const Matrix& relation) {
        Subspace z = kernel(relation);
        if (z.dim() == K.cols()) return;
        Matrix zt = z.basis().transpose();
        K = K * zt;
        for (auto& y : images) y = y * zt;
    };

    for (std::size_t k = 0; k < tv.size() && K.cols() > 0; ++k) {
        for (std::size_t a = 0; a < t.gens.size() && K.cols() > 0; ++a) {
            Vec v = t.gens[a] * tv[k];
            Matrix y = rep.gens[a] * images[k];
            if (tc.add(v)) {
                tv.push_back(std::move(v));
                images.push_back(std::move(y));
                continue;
            }
            Vec c = *tc.coordinates(v);
            for (std::size_t l = 0; l < c.size(); ++l)
                if (c[l]) y = y - scaled(images[l], c[l]);
            shrink(y);
        }
    }
    if (K.cols() == 0) return Subspace(F, n);
    if (tv.size() != t.dim) throw NotComputable("hom_images needs an irreducible source module");
    return image(K);
}

bool isomorphic_irreducibles(const GenRep& a, const GenRep& b) {
    if (a.dim != b.dim) return false;
    return !hom_images(a, b).is_zero();
}

std::vector<Subspace> minimal_submodules(const GenRep& rep, std::uint64_t seed) {
    std::vector<Subspace> out;
    if (rep.dim == 0) return out;
    CompositionSeries cs = composition_series(rep, seed);
    std::vector<GenRep> types;
    for (const auto& fac : cs.factors) {
        bool seen = false;
        for (const auto& t : types)
            if (isomorphic_irreducibles(t, fac)) {
                seen = true;
                break;
            }
        if (!seen) types.push_back(fac);
    }
    EchelonBuilder total(rep.field, rep.dim);
    for (const auto& t : types) {
        Subspace e = hom_images(t, rep);
        for (std::size_t i = 0; i < e.dim(); ++i) {
            if (total.contains(e.basis_row(i))) continue;
            Subspace m = spin(rep, {e.basis_vector(i)});
            for (std::size_t j = 0; j < m.dim(); ++j) total.add(m.basis_row(j));
            out.push_back(std::move(m));
        }
    }
    // Certification: invariance plus cyclicity from random vectors.
    Rng rng(mix(seed, 0xCE27));
    std::size_t sum = 0;
    for (const auto& m : out) {
        if (!rep.is_invariant(m)) throw NotComputable("minimal submodule failed invariance");
        for (int trial = 0; trial < 20; ++trial)
            if (!(spin(rep, {random_nonzero_in(rng, m)}) == m))
                throw NotComputable("minimal submodule failed cyclicity");
        sum += m.dim();
    }
    if (sum != total.rank()) throw NotComputable("socle decomposition is not direct");
    return out;
}

std::vector<Subspace> minimal_submodules(const ModuleRep& rep, std::uint64_t seed) {
    return minimal_submodules(rep.generators(), seed);
}

Subspace socle(const GenRep& rep, std::uint64_t seed) {
    EchelonBuilder b(rep.field, rep.dim);
    for (const auto& m : minimal_submodules(rep, seed))
        for (std::size_t i = 0; i < m.dim(); ++i) b.add(m.basis_row(i));
    return b.to_subspace();
}

Subspace socle(const ModuleRep& rep, std::uint64_t seed) { return socle(rep.generators(), seed); }

// ---------------------------------------------------------------- radical, nil ideal, simplicity

namespace {

Subspace radical_space(const LieAlgebra& L, std::uint64_t seed, int depth) {
    const Field& F = L.field();
    if (L.dim() == 0) return Subspace(F, 0);
    GenRep adj{F, L.dim(), L.generator_ads()};
    Subspace soc = socle(adj, mix(seed, static_cast<std::uint64_t>(depth)));
    Subspace z = subspace_intersect(soc, centralizer(L, soc).space);
    if (z.is_zero()) return z;
    if (z.is_full()) return z;
    Quotient q = quotient(L, z);
    Subspace r = radical_space(q.algebra, seed, depth + 1);
    std::vector<Vec> gens = z.basis_vectors();
    for (std::size_t i = 0; i < r.dim(); ++i) gens.push_back(q.section * r.basis_row(i));
    return Subspace::span(F, L.dim(), gens);
}

}  // namespace

SubalgebraHandle radical(const LieAlgebra& L, std::uint64_t seed) {
    Subspace r = radical_space(L, seed, 0);
    if (!is_ideal(L, r) || !is_solvable(L, r)) throw NotComputable("radical failed verification");
    SubalgebraHandle h;
    h.space = std::move(r);
    h.is_subalgebra = true;
    h.is_ideal = true;
    return h;
}

GenRep restricted_adjoint(const LieAlgebra& L, const Subspace& s) {
    GenRep g{L.field(), L.dim(), {}};
    if (s.is_zero()) return g;
    Restriction r = restrict_to(L, s);
    for (const auto& v : r.algebra.lie_generators()) g.gens.push_back(L.ad(r.embed(v)));
    return g;
}

SubalgebraHandle nil_ideal(const LieAlgebra& ambient, const Subspace& s, std::uint64_t seed) {
    const Field& F = ambient.field();
    const std::size_t n = ambient.dim();
    if (s.ambient_dim() != n) throw AmbientMismatch("nil_ideal");
    if (!is_subalgebra(ambient, s)) throw NotSubalgebra("nil_ideal needs a subalgebra");
    // The nil ideal is the joint kernel of the composition factors of the ambient as an s-module.
    CompositionSeries cs = composition_series(restricted_adjoint(ambient, s), seed);
    const Matrix& U = cs.adapted;
    Matrix Uinv = *solve(U, Matrix::identity(F, n));
    std::vector<std::size_t> offsets{0};
    for (const auto& fac : cs.factors) offsets.push_back(offsets.back() + fac.dim);
    std::size_t rows = 0;
    for (const auto& fac : cs.factors) rows += fac.dim * fac.dim;

    Matrix blocks(F, rows, s.dim());
    for (std::size_t k = 0; k < s.dim(); ++k) {
        Matrix au = ambient.ad(s.basis_row(k)) * U;
        std::size_t r = 0;
        for (std::size_t b = 0; b < cs.factors.size(); ++b) {
            const std::size_t lo = offsets[b], hi = offsets[b + 1];
            for (std::size_t i = lo; i < hi; ++i) {
                const Elem* ui = Uinv.row_ptr(i);
                for (std::size_t j = lo; j < hi; ++j) {
                    Elem acc = 0;
                    for (std::size_t t = 0; t < n; ++t)
                        if (ui[t] && au(t, j)) acc = F->add(acc, F->mul(ui[t], au(t, j)));
                    blocks(r++, k) = acc;
                }
            }
        }
    }
    Subspace coeffs = kernel(blocks);
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < coeffs.dim(); ++i) gens.push_back(s.combine(coeffs.basis_row(i)));
    Subspace nil = Subspace::span(F, n, gens);

    Restriction res = restrict_to(ambient, s);
    Subspace inner = res.pull(nil);
    if (!is_ideal(res.algebra, inner)) throw NotComputable("nil candidate is not an ideal");
    const bool inner_pmap = ambient.centerless();
    for (std::size_t i = 0; i < nil.dim(); ++i) {
        const bool ok = inner_pmap ? p_power_nilpotent(ambient, nil.basis_row(i))
                                   : is_ad_nilpotent(ambient, nil.basis_row(i));
        if (!ok) throw NotComputable("nil candidate contains a non-nilpotent element");
    }
    SubalgebraHandle h;
    h.space = std::move(nil);
    h.is_subalgebra = true;
    h.is_ideal = true;
    return h;
}

bool is_simple(const LieAlgebra& L, std::uint64_t seed) {
    if (L.dim() <= 1) return false;
    Subspace full = Subspace::full(L.field(), L.dim());
    if (!bracket_spaces(L, full, full).is_full()) return false;
    if (!is_irreducible(GenRep{L.field(), L.dim(), L.generator_ads()}, seed)) return false;
    if (L.dim() <= 64)
        for (std::size_t i = 0; i < L.dim(); ++i)
            if (!ideal_closure(L, {L.basis_vector(i)}).space.is_full()) return false;
    return true;
}

Subspace joint_kernel(const std::vector<Matrix>& mats, const Field& f, std::size_t dim) {
    if (mats.empty()) return Subspace::full(f, dim);
    return kernel(vstack(mats));
}

Subspace joint_kernel(const ModuleRep& rep, const std::vector<Vec>& elements) {
    std::vector<Matrix> mats;
    for (const auto& x : elements) mats.push_back(rep.of(x));
    return joint_kernel(mats, rep.field(), rep.dim());
}

Elem trace_form(const ModuleRep& rep, std::span<const Elem> x, std::span<const Elem> y) {
    return trace(rep.of(x) * rep.of(y));
}

}  // namespace modlie
