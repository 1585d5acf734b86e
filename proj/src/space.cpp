#include "srkb/space.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace srkb {

SpaceParams::SpaceParams(int q_, std::vector<int> n_, std::vector<int> m_)
    : q(q_), n(std::move(n_)), m(std::move(m_)) {}

int SpaceParams::N() const { return std::accumulate(n.begin(), n.end(), 0); }

int SpaceParams::log_size() const {
    int s = 0;
    for (size_t i = 0; i < n.size(); ++i) s += n[i] * m[i];
    return s;
}

BigInt SpaceParams::size() const { return ipow(q, unsigned(log_size())); }

int SpaceParams::max_m() const { return m.empty() ? 0 : *std::max_element(m.begin(), m.end()); }

int SpaceParams::characteristic() const { return prime_power(q).first; }

bool SpaceParams::is_ordered() const {
    for (size_t i = 1; i < m.size(); ++i)
        if (m[i] > m[i - 1]) return false;
    return true;
}

void SpaceParams::validate(bool require_order) const {
    if (q < 2 || prime_power(q).first == 0)
        throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    if (n.empty()) throw std::invalid_argument("at least one block is required");
    if (n.size() != m.size())
        throw std::invalid_argument("n and m must have the same number of blocks");
    for (size_t i = 0; i < n.size(); ++i) {
        if (n[i] < 1 || m[i] < 1) throw std::invalid_argument("block sizes must be positive");
        if (m[i] < n[i])
            throw std::invalid_argument("block " + std::to_string(i + 1) + " has m_i < n_i");
    }
    if (require_order && !is_ordered())
        throw std::invalid_argument("m must be non-increasing (" + to_string() + ")");
}

SpaceParams SpaceParams::canonical() const {
    std::vector<size_t> idx(n.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (m[a] != m[b]) return m[a] > m[b];
        return n[a] > n[b];
    });
    SpaceParams out;
    out.q = q;
    for (auto i : idx) {
        out.n.push_back(n[i]);
        out.m.push_back(m[i]);
    }
    return out;
}

std::string SpaceParams::to_string() const {
    auto join = [](const std::vector<int>& v) {
        std::ostringstream os;
        for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        return os.str();
    };
    return "q=" + std::to_string(q) + " n=(" + join(n) + ") m=(" + join(m) + ")";
}

SpaceParams hamming_space(int t, int q) {
    return SpaceParams(q, std::vector<int>(t, 1), std::vector<int>(t, 1));
}

SpaceParams rank_space(int q, int n, int m) { return SpaceParams(q, {n}, {m}); }

SpaceParams one_big_block_space(int q, int m, int n, int t) {
    std::vector<int> nn(t, 1), mm(t, 1);
    nn[0] = n;
    mm[0] = m;
    return SpaceParams(q, nn, mm);
}

BigInt gaussian_binomial(int n, int j, int q) {
    if (j < 0 || j > n) return 0;
    BigInt num = 1, den = 1;
    for (int i = 0; i < j; ++i) {
        num *= ipow(q, unsigned(n - i)) - 1;
        den *= ipow(q, unsigned(j - i)) - 1;
    }
    return num / den;
}

BigInt rank_count(int n, int m, int k, int q, bool strict) {
    if (k < 0 || k > std::min(n, m)) {
        if (strict) throw std::out_of_range("rank_count: rank " + std::to_string(k) + " out of range");
        return 0;
    }
    BigInt r = gaussian_binomial(n, k, q);
    BigInt qm = ipow(q, unsigned(m));
    for (int j = 0; j < k; ++j) r *= qm - ipow(q, unsigned(j));
    return r;
}

std::vector<BigInt> sphere_volumes(const SpaceParams& sp) {
    // Convolve the per-block rank distributions; each term of the product is
    // one composition (k_1, ..., k_t) with k_i <= min(n_i, m_i).
    std::vector<BigInt> acc{1};
    for (int i = 0; i < sp.t(); ++i) {
        int top = std::min(sp.n[i], sp.m[i]);
        std::vector<BigInt> block(top + 1);
        for (int k = 0; k <= top; ++k) block[k] = rank_count(sp.n[i], sp.m[i], k, sp.q);
        std::vector<BigInt> next(acc.size() + top, BigInt(0));
        for (size_t a = 0; a < acc.size(); ++a)
            for (int k = 0; k <= top; ++k) next[a + k] += acc[a] * block[k];
        acc = std::move(next);
    }
    return acc;
}

BigInt sphere_volume(const SpaceParams& sp, int l) {
    if (l < 0 || l > sp.N()) return 0;
    return sphere_volumes(sp)[l];
}

BigInt ball_volume(const SpaceParams& sp, int r) {
    auto s = sphere_volumes(sp);
    BigInt v = 0;
    for (int l = 0; l <= r && l < int(s.size()); ++l) v += s[l];
    return v;
}

BigInt v1_one_big_block(int q, int m, int n, int t) {
    return (ipow(q, unsigned(n)) - 1) / (q - 1) * (ipow(q, unsigned(m)) - 1) + (t - 1) * (q - 1) + 1;
}

BigInt volume_upper_bound_one_big_block(int q, int m, int n, int t, int r) {
    long e = long(m + n + 1) * r - long(r) * r + 1;
    BigRat v = BigRat((r + 1) * binomial(unsigned(t - 1), unsigned((t - 1) / 2)) * ipow(q - 1, unsigned(r)));
    v *= rpow(BigRat(q), int(e));
    // Negative exponents only occur far outside the radii the bound is used for.
    return floor(v);
}

int congruence_residue(int q, int t, int r) {
    int p = prime_power(q).first;
    if (p == 0) throw std::invalid_argument("congruence_residue: q is not a prime power");
    if (t < 2) throw std::invalid_argument("congruence_residue: needs t >= 2");
    BigInt s = 0;
    for (int i = 0; i <= r; ++i) s += binomial(unsigned(t - 2), unsigned(i));
    return int(mod(s, p));
}

// ---------------------------------------------------------------- fields

namespace {

std::vector<int> digits_of(int a, int p, int k) {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

int from_digits(const std::vector<int>& d, int p) {
    int a = 0;
    for (int i = int(d.size()) - 1; i >= 0; --i) a = a * p + d[i];
    return a;
}

// Product of two polynomials of degree < k reduced modulo the monic f (degree k).
int poly_mulmod(int a, int b, const std::vector<int>& f, int p, int k) {
    auto da = digits_of(a, p, k), db = digits_of(b, p, k);
    std::vector<int> c(2 * k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) c[i + j] = (c[i + j] + da[i] * db[j]) % p;
    for (int i = 2 * k - 1; i >= k; --i) {
        int coef = c[i];
        if (!coef) continue;
        for (int j = 0; j <= k; ++j) c[i - k + j] = ((c[i - k + j] - coef * f[j]) % p + p) % p;
    }
    c.resize(k);
    return from_digits(c, p);
}

}  // namespace

GaloisField::GaloisField(int q) : q_(q) {
    auto [p, k] = prime_power(q);
    if (p == 0) throw std::invalid_argument("GaloisField: " + std::to_string(q) + " is not a prime power");
    if (q > 256) throw std::invalid_argument("GaloisField: q > 256 is not supported");
    p_ = p;
    k_ = k;
    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, 0);
    for (int a = 0; a < q; ++a) {
        auto da = digits_of(a, p, k);
        std::vector<int> dn(k);
        for (int i = 0; i < k; ++i) dn[i] = (p - da[i]) % p;
        neg_[a] = from_digits(dn, p);
        for (int b = 0; b < q; ++b) {
            auto db = digits_of(b, p, k);
            std::vector<int> ds(k);
            for (int i = 0; i < k; ++i) ds[i] = (da[i] + db[i]) % p;
            add_[a * q + b] = from_digits(ds, p);
        }
    }
    // Search monic polynomials of degree k until the multiplication is a field.
    for (int low = 0; low < q; ++low) {
        std::vector<int> f = digits_of(low, p, k);
        f.push_back(1);
        bool field = true;
        std::vector<int> inv(q, 0);
        for (int a = 1; a < q && field; ++a) {
            for (int b = 0; b < q; ++b) {
                int c = poly_mulmod(a, b, f, p, k);
                mul_[a * q + b] = c;
                if (c == 1) inv[a] = b;
            }
            if (inv[a] == 0) field = false;
        }
        if (field) {
            inv_ = inv;
            for (int b = 0; b < q; ++b) mul_[b] = 0;
            return;
        }
    }
    throw std::logic_error("GaloisField: no irreducible polynomial found");
}

int GaloisField::inv(int a) const {
    if (a == 0) throw std::domain_error("GaloisField: inverse of zero");
    return inv_[a];
}

int matrix_rank(const GaloisField& f, std::vector<int> a, int rows, int cols) {
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r * cols + c]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
        int iv = f.inv(a[rank * cols + c]);
        for (int r = rank + 1; r < rows; ++r) {
            int x = a[r * cols + c];
            if (!x) continue;
            int factor = f.mul(x, iv);
            for (int j = c; j < cols; ++j)
                a[r * cols + j] = f.sub(a[r * cols + j], f.mul(factor, a[rank * cols + j]));
        }
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------- vectors

SumRankSpace::SumRankSpace(SpaceParams sp) : sp_(std::move(sp)), field_(sp_.q) {
    sp_.validate(false);
}

void SumRankSpace::check_shape(const SumRankVector& x) const {
    if (!contains(x)) throw std::invalid_argument("vector does not belong to " + sp_.to_string());
}

bool SumRankSpace::contains(const SumRankVector& x) const {
    if (int(x.blocks.size()) != sp_.t()) return false;
    for (int i = 0; i < sp_.t(); ++i) {
        if (int(x.blocks[i].size()) != sp_.n[i] * sp_.m[i]) return false;
        for (int v : x.blocks[i])
            if (v < 0 || v >= sp_.q) return false;
    }
    return true;
}

SumRankVector SumRankSpace::zero() const {
    SumRankVector z;
    for (int i = 0; i < sp_.t(); ++i) z.blocks.emplace_back(sp_.n[i] * sp_.m[i], 0);
    return z;
}

SumRankVector SumRankSpace::add(const SumRankVector& x, const SumRankVector& y) const {
    check_shape(x);
    check_shape(y);
    SumRankVector z = x;
    for (size_t i = 0; i < z.blocks.size(); ++i)
        for (size_t j = 0; j < z.blocks[i].size(); ++j) z.blocks[i][j] = field_.add(x.blocks[i][j], y.blocks[i][j]);
    return z;
}

SumRankVector SumRankSpace::sub(const SumRankVector& x, const SumRankVector& y) const {
    check_shape(x);
    check_shape(y);
    SumRankVector z = x;
    for (size_t i = 0; i < z.blocks.size(); ++i)
        for (size_t j = 0; j < z.blocks[i].size(); ++j) z.blocks[i][j] = field_.sub(x.blocks[i][j], y.blocks[i][j]);
    return z;
}

std::vector<int> SumRankSpace::rank_profile(const SumRankVector& x) const {
    check_shape(x);
    std::vector<int> r(sp_.t());
    for (int i = 0; i < sp_.t(); ++i) r[i] = matrix_rank(field_, x.blocks[i], sp_.n[i], sp_.m[i]);
    return r;
}

int SumRankSpace::weight(const SumRankVector& x) const {
    auto r = rank_profile(x);
    return std::accumulate(r.begin(), r.end(), 0);
}

int SumRankSpace::distance(const SumRankVector& x, const SumRankVector& y) const {
    return weight(sub(x, y));
}

std::uint64_t SumRankSpace::size() const {
    BigInt s = sp_.size();
    if (s > (BigInt(1) << 62)) throw std::overflow_error("space too large to enumerate: " + sp_.to_string());
    return std::uint64_t(to_ll(s));
}

SumRankVector SumRankSpace::element(std::uint64_t index) const {
    if (index >= size()) throw std::out_of_range("element index out of range");
    SumRankVector x = zero();
    for (int i = sp_.t() - 1; i >= 0; --i)
        for (int j = int(x.blocks[i].size()) - 1; j >= 0; --j) {
            x.blocks[i][j] = int(index % sp_.q);
            index /= sp_.q;
        }
    return x;
}

std::uint64_t SumRankSpace::index(const SumRankVector& x) const {
    check_shape(x);
    std::uint64_t idx = 0;
    for (const auto& b : x.blocks)
        for (int v : b) idx = idx * sp_.q + std::uint64_t(v);
    return idx;
}

int srk_distance(const SumRankSpace& space, const SumRankVector& x, const SumRankVector& y) {
    return space.distance(x, y);
}

}  // namespace srkb
