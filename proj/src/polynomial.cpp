#include "skewrep/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "skewrep/rng.hpp"

namespace skewrep {

namespace {

std::vector<i64> small_prime_factors(i64 n) {
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

u64 hash_poly(const Poly& f) {
    u64 h = 0xcbf29ce484222325ULL;
    auto mix = [&h](u64 v) {
        h ^= v;
        h *= 0x100000001b3ULL;
    };
    mix(static_cast<u64>(f.degree()));
    for (const auto& c : f.coeffs())
        mix(static_cast<u64>(f.field().canonical_index(c)));
    return h;
}

Poly random_poly_below(const Fq& f, int deg_bound, Rng& rng) {
    std::vector<FieldElement> cs;
    cs.reserve(static_cast<size_t>(deg_bound));
    for (int i = 0; i < deg_bound; ++i)
        cs.push_back(f.element_at(static_cast<i64>(rng.below(static_cast<u64>(f.q())))));
    return Poly(f, std::move(cs));
}

} // namespace

Poly::Poly(Fq field, std::vector<FieldElement> coeffs)
    : f_(std::move(field)), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (static_cast<int>(c.coeffs.size()) != f_.e())
            throw FieldError("coefficient does not belong to the field");
    trim();
}

void Poly::trim() {
    while (!c_.empty() && f_.is_zero(c_.back())) c_.pop_back();
}

Poly Poly::one(const Fq& f) { return constant(f, f.one()); }

Poly Poly::x(const Fq& f) { return Poly(f, {f.zero(), f.one()}); }

Poly Poly::constant(const Fq& f, const FieldElement& a) { return Poly(f, {a}); }

FieldElement Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return f_.zero();
    return c_[static_cast<size_t>(i)];
}

FieldElement Poly::leading() const {
    if (is_zero()) throw FieldError("zero polynomial has no leading coefficient");
    return c_.back();
}

Poly Poly::add(const Poly& o) const {
    std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), f_.zero());
    for (size_t i = 0; i < r.size(); ++i) {
        FieldElement a = i < c_.size() ? c_[i] : f_.zero();
        FieldElement b = i < o.c_.size() ? o.c_[i] : f_.zero();
        r[i] = f_.add(a, b);
    }
    return Poly(f_, std::move(r));
}

Poly Poly::sub(const Poly& o) const { return add(o.neg()); }

Poly Poly::neg() const {
    std::vector<FieldElement> r = c_;
    for (auto& a : r) a = f_.neg(a);
    return Poly(f_, std::move(r));
}

Poly Poly::mul(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(f_);
    std::vector<FieldElement> r(c_.size() + o.c_.size() - 1, f_.zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (f_.is_zero(c_[i])) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = f_.add(r[i + j], f_.mul(c_[i], o.c_[j]));
    }
    return Poly(f_, std::move(r));
}

Poly Poly::scale(const FieldElement& a) const {
    std::vector<FieldElement> r = c_;
    for (auto& x : r) x = f_.mul(x, a);
    return Poly(f_, std::move(r));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scale(f_.inv(leading()));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw FieldError("polynomial division by zero");
    if (degree() < d.degree()) return {Poly(f_), *this};
    FieldElement lead_inv = f_.inv(d.leading());
    std::vector<FieldElement> rem = c_;
    std::vector<FieldElement> quo(static_cast<size_t>(degree() - d.degree() + 1), f_.zero());
    for (int i = degree(); i >= d.degree(); --i) {
        FieldElement c = rem[static_cast<size_t>(i)];
        if (f_.is_zero(c)) continue;
        FieldElement qc = f_.mul(c, lead_inv);
        quo[static_cast<size_t>(i - d.degree())] = qc;
        for (int j = 0; j <= d.degree(); ++j) {
            auto& slot = rem[static_cast<size_t>(i - d.degree() + j)];
            slot = f_.sub(slot, f_.mul(qc, d.c_[static_cast<size_t>(j)]));
        }
    }
    return {Poly(f_, std::move(quo)), Poly(f_, std::move(rem))};
}

Poly Poly::derivative() const {
    if (degree() < 1) return Poly(f_);
    std::vector<FieldElement> r(c_.size() - 1, f_.zero());
    for (size_t i = 1; i < c_.size(); ++i) {
        FieldElement k = f_.from_int(static_cast<i64>(i));
        r[i - 1] = f_.mul(c_[i], k);
    }
    return Poly(f_, std::move(r));
}

FieldElement Poly::eval(const FieldElement& a) const {
    FieldElement acc = f_.zero();
    for (int i = degree(); i >= 0; --i)
        acc = f_.add(f_.mul(acc, a), c_[static_cast<size_t>(i)]);
    return acc;
}

Poly Poly::lift(const FieldEmbedding& emb) const {
    if (emb.from() != f_) throw FieldError("embedding source mismatch");
    std::vector<FieldElement> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(emb.map(c));
    return Poly(emb.to(), std::move(r));
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly r2 = r0.mod(r1);
        r0 = r1;
        r1 = r2;
    }
    return r0.is_zero() ? r0 : r0.monic();
}

XgcdResult poly_xgcd(const Poly& a, const Poly& b) {
    const Fq& f = a.field();
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::one(f), u1 = Poly::zero(f);
    Poly v0 = Poly::zero(f), v1 = Poly::one(f);
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        Poly u2 = u0.sub(q.mul(u1));
        Poly v2 = v0.sub(q.mul(v1));
        r0 = r1; r1 = r2;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (!r0.is_zero()) {
        FieldElement s = f.inv(r0.leading());
        r0 = r0.scale(s);
        u0 = u0.scale(s);
        v0 = v0.scale(s);
    }
    return {r0, u0, v0};
}

Poly pow_mod(const Poly& base, u64 exp, const Poly& m) {
    Poly r = Poly::one(base.field()).mod(m);
    Poly b = base.mod(m);
    while (exp) {
        if (exp & 1) r = r.mul(b).mod(m);
        b = b.mul(b).mod(m);
        exp >>= 1;
    }
    return r;
}

Poly frobenius_power_x(const Poly& m, int k) {
    const Fq& f = m.field();
    Poly h = Poly::x(f).mod(m);
    for (int i = 0; i < k; ++i) h = pow_mod(h, static_cast<u64>(f.q()), m);
    return h;
}

namespace {

// p-th root of f when f'(x) = 0, i.e. f = g(x^p); coefficientwise inverse
// Frobenius a -> a^(p^(e-1))
Poly pth_root_poly(const Poly& f) {
    const Fq& k = f.field();
    i64 p = k.p();
    u64 inv_frob = 1;
    for (int i = 0; i < k.e() - 1; ++i) inv_frob *= static_cast<u64>(p);
    std::vector<FieldElement> r;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p))
        r.push_back(k.pow(f.coeff(i), inv_frob));
    return Poly(k, std::move(r));
}

void edf(const Poly& g, int d, Rng& rng, std::vector<Poly>& out) {
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    const Fq& f = g.field();
    i64 q = f.q();
    while (true) {
        Poly r = random_poly_below(f, g.degree(), rng);
        if (r.is_zero()) continue;
        Poly s(f);
        if (q % 2 == 1) {
            // r^((q^d-1)/2) via norm ladder: (q^d-1)/2 = (1+q+...+q^(d-1)) * (q-1)/2
            Poly u = r.mod(g), acc = u;
            for (int i = 1; i < d; ++i) {
                u = pow_mod(u, static_cast<u64>(q), g);
                acc = acc.mul(u).mod(g);
            }
            Poly t = pow_mod(acc, static_cast<u64>((q - 1) / 2), g);
            s = poly_gcd(t.sub(Poly::one(f)), g);
        } else {
            // char 2: absolute trace of r over F_2
            int bits = 0;
            for (i64 v = q; v > 1; v >>= 1) ++bits;
            Poly u = r.mod(g), acc = Poly::zero(f);
            for (int i = 0; i < bits * d; ++i) {
                acc = acc.add(u).mod(g);
                u = u.mul(u).mod(g);
            }
            s = poly_gcd(acc, g);
        }
        if (s.degree() > 0 && s.degree() < g.degree()) {
            edf(s, d, rng, out);
            edf(g.divmod(s).first, d, rng, out);
            return;
        }
    }
}

// distinct irreducible factors of a squarefree monic polynomial
std::vector<Poly> ddf_edf(Poly v, Rng& rng) {
    std::vector<Poly> out;
    const Fq& f = v.field();
    Poly h = Poly::x(f).mod(v);
    for (int d = 1; 2 * d <= v.degree(); ++d) {
        h = pow_mod(h, static_cast<u64>(f.q()), v);
        Poly g = poly_gcd(h.sub(Poly::x(f)), v);
        if (g.degree() > 0) {
            edf(g, d, rng, out);
            v = v.divmod(g).first;
            h = h.mod(v);
        }
    }
    if (v.degree() > 0) out.push_back(v);
    return out;
}

void factor_rec(Poly f, int mult_scale, Rng& rng, std::vector<PolyFactor>& out) {
    if (f.degree() < 1) return;
    Poly fp = f.derivative();
    if (fp.is_zero()) {
        factor_rec(pth_root_poly(f), mult_scale * static_cast<int>(f.field().p()), rng, out);
        return;
    }
    Poly s = poly_gcd(f, fp);
    Poly sqfree = f.divmod(s).first;
    for (const Poly& u : ddf_edf(sqfree, rng)) {
        int m = 0;
        while (true) {
            auto [quo, rem] = f.divmod(u);
            if (!rem.is_zero()) break;
            f = quo;
            ++m;
        }
        out.push_back({u, m * mult_scale});
    }
    factor_rec(f, mult_scale, rng, out);
}

} // namespace

std::vector<PolyFactor> factor(const Poly& f) {
    if (f.is_zero()) throw FieldError("cannot factor the zero polynomial");
    Rng rng(0x9b1a5fb1 ^ hash_poly(f));
    std::vector<PolyFactor> out;
    factor_rec(f.monic(), 1, rng, out);
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.factor.degree() != b.factor.degree())
            return a.factor.degree() < b.factor.degree();
        const Fq& k = a.factor.field();
        for (int i = a.factor.degree(); i >= 0; --i) {
            i64 ia = k.canonical_index(a.factor.coeff(i));
            i64 ib = k.canonical_index(b.factor.coeff(i));
            if (ia != ib) return ia < ib;
        }
        return false;
    });
    return out;
}

std::vector<FieldElement> poly_roots(const Poly& f) {
    if (f.is_zero()) throw FieldError("zero polynomial has every root");
    const Fq& k = f.field();
    if (f.degree() < 1) return {};
    // product of the distinct linear factors
    Poly xq = pow_mod(Poly::x(k), static_cast<u64>(k.q()), f);
    Poly lin = poly_gcd(xq.sub(Poly::x(k)), f);
    if (lin.degree() < 1) return {};
    Rng rng(0x700f5 ^ hash_poly(f));
    std::vector<Poly> facs;
    edf(lin, 1, rng, facs);
    std::vector<FieldElement> roots;
    roots.reserve(facs.size());
    for (const Poly& u : facs) roots.push_back(k.neg(u.coeff(0)));
    std::sort(roots.begin(), roots.end(), [&k](const FieldElement& a, const FieldElement& b) {
        return k.canonical_index(a) < k.canonical_index(b);
    });
    return roots;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const Fq& k = f.field();
    Poly m = f.monic();
    int n = m.degree();
    if (frobenius_power_x(m, n) != Poly::x(k).mod(m)) return false;
    for (i64 ell : small_prime_factors(n)) {
        Poly h = frobenius_power_x(m, n / static_cast<int>(ell));
        if (poly_gcd(h.sub(Poly::x(k)), m).degree() != 0) return false;
    }
    return true;
}

std::vector<i64> find_irreducible_modulus(i64 p, int e) {
    Fq base(p);
    i64 count = 1;
    for (int i = 0; i < e; ++i) {
        if (count > (i64(1) << 50) / p) break; // enumeration cap, never hit at desk scale
        count *= p;
    }
    for (i64 v = 0; v < count; ++v) {
        std::vector<FieldElement> cs;
        i64 t = v;
        for (int i = 0; i < e; ++i) {
            cs.push_back(base.from_int(t % p));
            t /= p;
        }
        cs.push_back(base.one());
        Poly f(base, cs);
        if (is_irreducible(f)) {
            std::vector<i64> out;
            out.reserve(static_cast<size_t>(e) + 1);
            for (int i = 0; i <= e; ++i) out.push_back(f.coeff(i).coeffs[0]);
            return out;
        }
    }
    throw FieldError("no irreducible modulus found");
}

Poly poly_crt(const std::vector<Poly>& residues, const std::vector<Poly>& moduli) {
    if (residues.size() != moduli.size() || residues.empty())
        throw FieldError("CRT requires matching nonempty residue and modulus lists");
    Poly r = residues[0].mod(moduli[0]);
    Poly m = moduli[0];
    for (size_t i = 1; i < residues.size(); ++i) {
        auto x = poly_xgcd(m.mod(moduli[i]), moduli[i]);
        if (x.g.degree() != 0) throw FieldError("CRT moduli are not coprime");
        // r + m * t = residues[i] (mod moduli[i])
        Poly t = residues[i].sub(r).mul(x.u).mod(moduli[i]);
        r = r.add(m.mul(t));
        m = m.mul(moduli[i]);
    }
    return r.mod(m);
}

} // namespace skewrep
