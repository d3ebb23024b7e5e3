#include "modlie/field.hpp"

#include <map>
#include <mutex>

#include "modlie/errors.hpp"

namespace modlie {

bool is_prime(int n) noexcept {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Remainder of a modulo b over F_p; b monic.  Coefficients low to high.
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
    const int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        int c = a[i] % p;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
    }
    a.resize(std::max(db, 0));
    return a;
}

std::vector<int> digits(int v, int p, int k) {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

int undigits(const std::vector<int>& d, int p) {
    int v = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
    return v;
}

}  // namespace

bool is_irreducible_over_prime(const std::vector<int>& coeffs, int p) {
    const int k = static_cast<int>(coeffs.size()) - 1;
    if (k < 1) return false;
    if (k == 1) return true;
    for (int d = 1; 2 * d <= k; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int low = 0; low < count; ++low) {
            std::vector<int> g = digits(low, p, d);
            g.push_back(1);
            auto r = poly_rem(coeffs, g, p);
            bool zero = true;
            for (int c : r) zero = zero && c == 0;
            if (zero) return false;
        }
    }
    return true;
}

std::vector<int> default_modulus(int p, int k) {
    if (k == 1) return {0, 1};
    int count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (int low = 0; low < count; ++low) {
        std::vector<int> f = digits(low, p, k);
        f.push_back(1);
        if (is_irreducible_over_prime(f, p)) return f;
    }
    throw BadPrime("no irreducible polynomial found");
}

FiniteField::FiniteField(int p, int k) : p_(p), k_(k), q_(1) {
    for (int i = 0; i < k; ++i) q_ *= p;
    modulus_ = default_modulus(p, k);
    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    frob_.resize(q_);
    std::vector<std::vector<int>> dig(q_);
    for (int a = 0; a < q_; ++a) dig[a] = digits(a, p, k);
    for (int a = 0; a < q_; ++a) {
        std::vector<int> n(k);
        for (int i = 0; i < k; ++i) n[i] = (p - dig[a][i]) % p;
        neg_[a] = static_cast<Elem>(undigits(n, p));
        for (int b = 0; b < q_; ++b) {
            std::vector<int> s(k);
            for (int i = 0; i < k; ++i) s[i] = (dig[a][i] + dig[b][i]) % p;
            add_[a * q_ + b] = static_cast<Elem>(undigits(s, p));
            std::vector<int> prod(2 * k - 1, 0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + dig[a][i] * dig[b][j]) % p;
            auto r = k == 1 ? prod : poly_rem(prod, modulus_, p);
            r.resize(k, 0);
            mul_[a * q_ + b] = static_cast<Elem>(undigits(r, p));
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Elem>(b);
    for (int a = 0; a < q_; ++a) frob_[a] = pow(static_cast<Elem>(a), static_cast<unsigned long long>(p));
}

std::shared_ptr<const FiniteField> FiniteField::get(int p, int k) {
    if (!is_prime(p) || p > 13) throw BadPrime("unsupported characteristic " + std::to_string(p));
    if (k < 1) throw BadPrime("extension degree must be positive");
    long long q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    if (q > 256) throw BadPrime("field order exceeds 256");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const FiniteField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{p, k}];
    if (!slot) slot = std::shared_ptr<const FiniteField>(new FiniteField(p, k));
    return slot;
}

Elem FiniteField::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return inv_[a];
}

Elem FiniteField::pow(Elem a, unsigned long long e) const noexcept {
    Elem r = 1;
    Elem b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

Elem FiniteField::from_int(long long v) const noexcept {
    long long r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

std::string FiniteField::format(Elem a) const {
    if (k_ == 1) return std::to_string(a);
    auto d = digits(a, p_, k_);
    std::string out;
    for (int i = k_ - 1; i >= 0; --i) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(d[i]);
        } else {
            if (d[i] != 1) out += std::to_string(d[i]);
            out += "z";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace modlie
