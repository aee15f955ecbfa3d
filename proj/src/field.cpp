#include "skewrep/field.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "skewrep/polynomial.hpp"

namespace skewrep {

namespace {

i64 mod_mul(i64 a, i64 b, i64 m) {
    return static_cast<i64>(static_cast<__int128>(a) * b % m);
}

i64 mod_pow(i64 base, u64 exp, i64 m) {
    i64 r = 1 % m;
    base %= m;
    if (base < 0) base += m;
    while (exp) {
        if (exp & 1) r = mod_mul(r, base, m);
        base = mod_mul(base, base, m);
        exp >>= 1;
    }
    return r;
}

// inverse mod prime p
i64 mod_inv(i64 a, i64 p) {
    i64 t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
    while (nr != 0) {
        i64 qq = r / nr;
        std::swap(t -= qq * nt, nt);
        std::swap(r -= qq * nr, nr);
    }
    if (r != 1) throw FieldError("not invertible mod p");
    return t < 0 ? t + p : t;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> ps;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

constexpr i64 kMaxQ = i64(1) << 46; // keeps canonical indices and dlog exact

} // namespace

Fq::Fq(i64 p) : Fq(p, 1) {}

Fq::Fq(i64 p, int e) : p_(p), e_(e) {
    if (!is_prime(p)) throw FieldError("p is not prime");
    if (e < 1) throw FieldError("e must be positive");
    i64 q = 1;
    for (int i = 0; i < e; ++i) {
        if (q > kMaxQ / p) throw FieldError("field too large");
        q *= p;
    }
    q_ = q;
    if (e > 1) mod_ = find_irreducible_modulus(p, e);
}

Fq::Fq(i64 p, int e, std::vector<i64> modulus) : p_(p), e_(e) {
    if (!is_prime(p)) throw FieldError("p is not prime");
    if (e < 1) throw FieldError("e must be positive");
    i64 q = 1;
    for (int i = 0; i < e; ++i) {
        if (q > kMaxQ / p) throw FieldError("field too large");
        q *= p;
    }
    q_ = q;
    if (e == 1) {
        if (!modulus.empty()) throw FieldError("modulus must be absent for e = 1");
        return;
    }
    if (static_cast<int>(modulus.size()) != e + 1)
        throw FieldError("modulus must have length e + 1");
    for (auto& c : modulus) {
        c %= p;
        if (c < 0) c += p;
    }
    if (modulus.back() != 1) throw FieldError("modulus must be monic");
    mod_ = std::move(modulus);
    std::vector<FieldElement> cs;
    Fq base(p_);
    for (i64 c : mod_) cs.push_back(base.from_int(c));
    if (!is_irreducible(Poly(base, std::move(cs))))
        throw FieldError("modulus is reducible");
}

FieldElement Fq::zero() const { return FieldElement{std::vector<i64>(e_, 0)}; }

FieldElement Fq::one() const {
    FieldElement a = zero();
    if (p_ > 1) a.coeffs[0] = 1 % p_;
    return a;
}

FieldElement Fq::from_int(i64 v) const {
    FieldElement a = zero();
    v %= p_;
    if (v < 0) v += p_;
    a.coeffs[0] = v;
    return a;
}

FieldElement Fq::from_coeffs(std::vector<i64> c) const {
    if (static_cast<int>(c.size()) > e_)
        throw FieldError("too many coefficients for this field");
    c.resize(e_, 0);
    for (auto& x : c) {
        x %= p_;
        if (x < 0) x += p_;
    }
    return FieldElement{std::move(c)};
}

void Fq::check_element(const FieldElement& a) const {
    if (static_cast<int>(a.coeffs.size()) != e_)
        throw FieldError("element does not belong to this field");
}

bool Fq::is_zero(const FieldElement& a) const {
    check_element(a);
    return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](i64 c) { return c == 0; });
}

bool Fq::is_one(const FieldElement& a) const {
    check_element(a);
    return a == one();
}

FieldElement Fq::add(const FieldElement& a, const FieldElement& b) const {
    check_element(a);
    check_element(b);
    FieldElement r = zero();
    add_in(r.coeffs.data(), a.coeffs.data(), b.coeffs.data());
    return r;
}

FieldElement Fq::sub(const FieldElement& a, const FieldElement& b) const {
    check_element(a);
    check_element(b);
    FieldElement r = zero();
    sub_in(r.coeffs.data(), a.coeffs.data(), b.coeffs.data());
    return r;
}

FieldElement Fq::neg(const FieldElement& a) const {
    check_element(a);
    FieldElement r = zero();
    neg_in(r.coeffs.data(), a.coeffs.data());
    return r;
}

FieldElement Fq::mul(const FieldElement& a, const FieldElement& b) const {
    check_element(a);
    check_element(b);
    FieldElement r = zero();
    mul_in(r.coeffs.data(), a.coeffs.data(), b.coeffs.data());
    return r;
}

void Fq::add_in(i64* dst, const i64* a, const i64* b) const {
    for (int i = 0; i < e_; ++i) {
        i64 s = a[i] + b[i];
        dst[i] = s >= p_ ? s - p_ : s;
    }
}

void Fq::sub_in(i64* dst, const i64* a, const i64* b) const {
    for (int i = 0; i < e_; ++i) {
        i64 s = a[i] - b[i];
        dst[i] = s < 0 ? s + p_ : s;
    }
}

void Fq::neg_in(i64* dst, const i64* a) const {
    for (int i = 0; i < e_; ++i) dst[i] = a[i] == 0 ? 0 : p_ - a[i];
}

bool Fq::is_zero_raw(const i64* a) const {
    for (int i = 0; i < e_; ++i)
        if (a[i] != 0) return false;
    return true;
}

void Fq::reduce_product(i64* dst, const i64* wide) const {
    // wide: 2e-1 coefficients of the schoolbook product, reduced mod p.
    // Fold down by the monic modulus from the top.
    std::vector<i64> w(wide, wide + 2 * e_ - 1);
    for (int i = 2 * e_ - 2; i >= e_; --i) {
        i64 c = w[i];
        if (c == 0) continue;
        w[i] = 0;
        for (int j = 0; j < e_; ++j) {
            // subtract c * x^(i-e) * (modulus - x^e)
            i64 t = w[i - e_ + j] - mod_mul(c, mod_[j], p_);
            t %= p_;
            if (t < 0) t += p_;
            w[i - e_ + j] = t;
        }
    }
    std::copy(w.begin(), w.begin() + e_, dst);
}

void Fq::mul_in(i64* dst, const i64* a, const i64* b) const {
    if (e_ == 1) {
        dst[0] = mod_mul(a[0], b[0], p_);
        return;
    }
    std::vector<i64> wide(2 * e_ - 1, 0);
    for (int i = 0; i < e_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < e_; ++j) {
            if (b[j] == 0) continue;
            wide[i + j] = (wide[i + j] + mod_mul(a[i], b[j], p_)) % p_;
        }
    }
    reduce_product(dst, wide.data());
}

void Fq::mul_add_in(i64* dst, const i64* a, const i64* b) const {
    if (e_ == 1) {
        dst[0] = (dst[0] + mod_mul(a[0], b[0], p_)) % p_;
        return;
    }
    std::vector<i64> tmp(e_, 0);
    mul_in(tmp.data(), a, b);
    add_in(dst, dst, tmp.data());
}

FieldElement Fq::pow(const FieldElement& a, u64 k) const {
    check_element(a);
    FieldElement r = one();
    FieldElement base = a;
    while (k) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

FieldElement Fq::inv(const FieldElement& a) const {
    check_element(a);
    if (is_zero(a)) throw FieldError("division by zero");
    if (e_ == 1) return FieldElement{{mod_inv(a.coeffs[0], p_)}};
    // extended Euclid in F_p[x] against the modulus
    Fq base(p_);
    std::vector<FieldElement> ac, mc;
    for (i64 c : a.coeffs) ac.push_back(base.from_int(c));
    for (i64 c : mod_) mc.push_back(base.from_int(c));
    auto r = poly_xgcd(Poly(base, ac), Poly(base, mc));
    if (r.g.degree() != 0) throw FieldError("element not invertible");
    Poly u = r.u.scale(base.inv(r.g.coeff(0)));
    std::vector<i64> out(e_, 0);
    for (int i = 0; i <= u.degree(); ++i) out[i] = u.coeff(i).coeffs[0];
    return FieldElement{std::move(out)};
}

FieldElement Fq::div(const FieldElement& a, const FieldElement& b) const {
    return mul(a, inv(b));
}

i64 Fq::canonical_index(const FieldElement& a) const {
    check_element(a);
    i64 idx = 0;
    for (int i = e_ - 1; i >= 0; --i) idx = idx * p_ + a.coeffs[i];
    return idx;
}

FieldElement Fq::element_at(i64 index) const {
    if (index < 0 || index >= q_) throw FieldError("element index out of range");
    std::vector<i64> c(e_);
    for (int i = 0; i < e_; ++i) {
        c[i] = index % p_;
        index /= p_;
    }
    return FieldElement{std::move(c)};
}

u64 Fq::mult_order(const FieldElement& a) const {
    if (is_zero(a)) throw FieldError("zero has no multiplicative order");
    u64 t = static_cast<u64>(q_ - 1);
    for (i64 ell : prime_factors(q_ - 1)) {
        while (t % static_cast<u64>(ell) == 0 &&
               is_one(pow(a, t / static_cast<u64>(ell))))
            t /= static_cast<u64>(ell);
    }
    return t;
}

FieldElement Fq::smallest_generator() const {
    if (q_ == 2) return one();
    auto ps = prime_factors(q_ - 1);
    for (i64 idx = 2; idx < q_; ++idx) {
        FieldElement a = element_at(idx);
        bool gen = true;
        for (i64 ell : ps) {
            if (is_one(pow(a, static_cast<u64>((q_ - 1) / ell)))) {
                gen = false;
                break;
            }
        }
        if (gen) return a;
    }
    throw FieldError("no generator found");
}

int Fq::extension_factor_for_order(i64 n) const {
    if (n < 1) throw FieldError("order must be positive");
    if (n % p_ == 0) throw FieldError("characteristic divides the requested order");
    for (int d = 1;; ++d) {
        // n | q^d - 1  <=>  q^d = 1 (mod n)
        if (mod_pow(q_ % n, static_cast<u64>(d), n) == 1 % n) return d;
        if (d > 64 * e_ + 64) throw FieldError("no extension contains the requested order");
    }
}

RootResult Fq::primitive_root_of_unity(i64 n) const {
    if (n < 1) throw FieldError("order must be positive");
    if (n % p_ == 0) throw FieldError("characteristic divides the requested order");
    if (n == 1) return one();
    if ((q_ - 1) % n != 0) {
        // smallest absolute degree e' with n | p^e' - 1
        int ep = 1;
        while (mod_pow(p_ % n, static_cast<u64>(ep), n) != 1 % n) ++ep;
        return NeedsExtension{ep};
    }
    FieldElement g = smallest_generator();
    FieldElement z = pow(g, static_cast<u64>((q_ - 1) / n));
    // order-n elements are exactly z^j with gcd(j, n) = 1; take the smallest
    FieldElement best = z;
    i64 best_idx = canonical_index(z);
    FieldElement zj = z;
    for (i64 j = 2; j < n; ++j) {
        zj = mul(zj, z);
        if (std::gcd(j, n) != 1) continue;
        i64 idx = canonical_index(zj);
        if (idx < best_idx) {
            best_idx = idx;
            best = zj;
        }
    }
    return best;
}

RootResult Fq::nth_root(const FieldElement& c, i64 n) const {
    check_element(c);
    if (n < 1) throw FieldError("root order must be positive");
    if (n % p_ == 0) throw FieldError("characteristic divides the root order");
    if (is_zero(c)) return zero();
    if (n == 1) return c;

    i64 N = q_ - 1;
    FieldElement g = smallest_generator();

    // baby-step giant-step discrete log of c base g
    i64 mstep = 1;
    while (mstep * mstep < N) ++mstep;
    std::unordered_map<i64, i64> table;
    table.reserve(static_cast<size_t>(mstep));
    FieldElement cur = one();
    for (i64 j = 0; j < mstep; ++j) {
        table.emplace(canonical_index(cur), j);
        cur = mul(cur, g);
    }
    FieldElement giant = inv(pow(g, static_cast<u64>(mstep)));
    i64 L = -1;
    FieldElement y = c;
    for (i64 i = 0; i <= mstep; ++i) {
        auto it = table.find(canonical_index(y));
        if (it != table.end()) {
            L = i * mstep + it->second;
            break;
        }
        y = mul(y, giant);
    }
    if (L < 0) throw FieldError("discrete log failure");
    L %= N;

    i64 d = std::gcd(n, N);
    if (L % d != 0) {
        // no root here; find the minimal extension factor among divisors of n
        i64 t = N / std::gcd(N, L); // multiplicative order of c
        for (i64 j = 2; j <= n; ++j) {
            if (n % j != 0) continue;
            // root exists in F_{q^j} iff q^j = 1 (mod t * gcd(n, q^j - 1))
            i64 qj_mod_n = mod_pow(q_ % n, static_cast<u64>(j), n);
            i64 gj = std::gcd(n, (qj_mod_n - 1 + n) % n);
            i64 m = t * gj;
            if (mod_pow(q_ % m, static_cast<u64>(j), m) == 1 % m)
                return NeedsExtension{static_cast<int>(j)};
        }
        throw FieldError("no root in any extension of degree dividing n");
    }
    // solve n*k = L (mod N): k0 = (L/d) * inv(n/d) mod N/d
    i64 Nd = N / d;
    i64 k0 = mod_mul((L / d) % Nd, mod_inv((n / d) % Nd, Nd), Nd);
    FieldElement best = pow(g, static_cast<u64>(k0));
    i64 best_idx = canonical_index(best);
    FieldElement stepper = pow(g, static_cast<u64>(Nd));
    FieldElement r = best;
    for (i64 j = 1; j < d; ++j) {
        r = mul(r, stepper);
        i64 idx = canonical_index(r);
        if (idx < best_idx) {
            best_idx = idx;
            best = r;
        }
    }
    return best;
}

Fq extended_field(const Fq& base, int factor) {
    if (factor < 1) throw FieldError("extension factor must be positive");
    if (factor == 1) return base;
    return Fq(base.p(), base.e() * factor);
}

FieldEmbedding::FieldEmbedding(Fq from, Fq to)
    : from_(std::move(from)), to_(std::move(to)), gen_image_{{}} {
    if (from_.p() != to_.p()) throw FieldError("embedding requires equal characteristic");
    if (to_.e() % from_.e() != 0) throw FieldError("no embedding: source degree does not divide target degree");
    if (from_.e() == 1 || from_ == to_) {
        gen_image_ = to_.zero();
        return;
    }
    // canonical root of the source modulus inside the target field
    std::vector<FieldElement> cs;
    for (i64 c : from_.modulus()) cs.push_back(to_.from_int(c));
    auto roots = poly_roots(Poly(to_, std::move(cs)));
    if (roots.empty()) throw FieldError("source modulus has no root in target field");
    gen_image_ = roots.front(); // poly_roots sorts canonically
}

FieldElement FieldEmbedding::map(const FieldElement& a) const {
    if (from_ == to_) return a;
    if (static_cast<int>(a.coeffs.size()) != from_.e())
        throw FieldError("element does not belong to the source field");
    FieldElement acc = to_.zero();
    // Horner in the image of the source generator
    for (int i = from_.e() - 1; i >= 0; --i) {
        acc = to_.mul(acc, gen_image_);
        acc = to_.add(acc, to_.from_int(a.coeffs[i]));
    }
    return acc;
}

void FieldTower::extend(int factor) {
    if (factor == 1) return;
    Fq next = extended_field(top_, factor);
    steps_.emplace_back(top_, next);
    top_ = next;
}

FieldElement FieldTower::map(const FieldElement& a) const {
    FieldElement r = a;
    for (const auto& s : steps_) r = s.map(r);
    return r;
}

Fq default_field_for_order(i64 n) {
    if (n < 1) throw FieldError("order must be positive");
    for (i64 p = 101;; ++p) {
        if (!is_prime(p)) continue;
        if ((p - 1) % n == 0) return Fq(p);
    }
}

} // namespace skewrep
