#include "isoclass/zfactor.hpp"

#include "isoclass/modpoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace isoclass {

namespace {

u64 next_good_prime(u64& state) {
    Int p = next_prime(Int(static_cast<unsigned long>(state)));
    state = p.get_ui();
    return state;
}

Int crt_pair(const Int& a1, const Int& m1, const Int& a2, const Int& m2) {
    // x = a1 mod m1, x = a2 mod m2 (m1, m2 coprime)
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
    Int x = a1 + m1 * fdiv_r(s * (a2 - a1), m2);
    return fdiv_r(x, m1 * m2);
}

Int sym_mod(const Int& a, const Int& m) {
    Int r = fdiv_r(a, m);
    if (2 * r > m) r -= m;
    return r;
}

ZPoly sym_mod(const ZPoly& f, const Int& m) {
    ZPoly r = f;
    for (auto& x : r.c) x = sym_mod(x, m);
    r.trim();
    return r;
}

double log2_norm2(const ZPoly& f) {
    // upper bound on log2 of the coefficient 2-norm
    double mx = 0;
    for (auto& x : f.c) mx = std::max(mx, (double)mpz_sizeinbase(x.get_mpz_t(), 2));
    return mx + 0.5 * std::log2((double)f.c.size() + 1);
}

} // namespace

ZPoly zgcd(const ZPoly& a_in, const ZPoly& b_in) {
    if (a_in.is_zero()) return primitive_part(b_in);
    if (b_in.is_zero()) return primitive_part(a_in);
    ZPoly a = primitive_part(a_in), b = primitive_part(b_in);
    if (a.degree() < b.degree()) std::swap(a, b);
    Int lead_gcd = gcd(a.lead(), b.lead());

    u64 pstate = (1ULL << 62);
    long best_deg = -1;
    Int modulus = 1;
    ZPoly acc; // coefficients of lead_gcd * monic-gcd, CRTed
    for (int iter = 0; iter < 10000; ++iter) {
        u64 p = next_good_prime(pstate);
        if (divides(Int((unsigned long)p), a.lead()) || divides(Int((unsigned long)p), b.lead())) continue;
        FpPoly ga = fp_from_zpoly(a, p), gb = fp_from_zpoly(b, p);
        FpPoly g = fp_gcd(ga, gb, p);
        long dg = fp_deg(g);
        if (dg == 0) return ZPoly(Int(1));
        if (best_deg == -1 || dg < best_deg) {
            best_deg = dg;
            modulus = 1;
            acc = ZPoly();
        } else if (dg > best_deg) {
            continue; // unlucky prime
        }
        // scale to lead_gcd
        u64 lg = mpz_fdiv_ui(lead_gcd.get_mpz_t(), p);
        FpPoly gs = g;
        for (auto& x : gs) x = mulmod(x, lg, p);
        // CRT into acc
        Int pz((unsigned long)p);
        ZPoly nacc;
        nacc.c.resize(gs.size());
        for (size_t i = 0; i < gs.size(); ++i) {
            Int prev = (i < acc.c.size()) ? acc.c[i] : Int(0);
            nacc.c[i] = modulus == 1 ? Int(gs[i]) : crt_pair(prev, modulus, Int(gs[i]), pz);
        }
        modulus *= pz;
        ZPoly cand;
        cand.c.resize(nacc.c.size());
        for (size_t i = 0; i < nacc.c.size(); ++i) cand.c[i] = sym_mod(nacc.c[i], modulus);
        cand.trim();
        bool stable = (cand == sym_mod(acc, modulus / pz)) && modulus > pz;
        acc = nacc;
        if (stable) {
            ZPoly g2 = primitive_part(cand);
            if (zdivides(g2, a) && zdivides(g2, b)) return g2;
        }
    }
    throw std::runtime_error("zgcd did not stabilize");
}

Int zresultant(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    if (a.degree() == 0) return pow(a.c[0], (unsigned long)b.degree());
    if (b.degree() == 0) return pow(b.c[0], (unsigned long)a.degree());
    // Hadamard-style bound: |res| <= norm2(a)^deg(b) * norm2(b)^deg(a)
    double bits = log2_norm2(a) * b.degree() + log2_norm2(b) * a.degree() + 4;
    u64 pstate = (1ULL << 62);
    Int modulus = 1, acc = 0;
    while (mpz_sizeinbase(modulus.get_mpz_t(), 2) < bits + 2) {
        u64 p = next_good_prime(pstate);
        if (divides(Int((unsigned long)p), a.lead()) || divides(Int((unsigned long)p), b.lead())) continue;
        u64 rp = fp_resultant(fp_from_zpoly(a, p), fp_from_zpoly(b, p), p);
        Int pz((unsigned long)p);
        acc = modulus == 1 ? Int(rp) : crt_pair(acc, modulus, Int(rp), pz);
        modulus *= pz;
    }
    return sym_mod(acc, modulus);
}

Int zdiscriminant(const ZPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("discriminant of constant");
    ZPoly df;
    df.c.resize(f.c.size() - 1);
    for (size_t i = 1; i < f.c.size(); ++i) df.c[i - 1] = Int((unsigned long)i) * f.c[i];
    df.trim();
    Int res = zresultant(f, df);
    Int d = divexact(res, f.lead());
    long n = f.degree();
    if (((n * (n - 1)) / 2) % 2) d = -d;
    return d;
}

ZPoly zsquarefree_part(const ZPoly& f) {
    if (f.degree() <= 0) return primitive_part(f);
    ZPoly df;
    df.c.resize(f.c.size() - 1);
    for (size_t i = 1; i < f.c.size(); ++i) df.c[i - 1] = Int((unsigned long)i) * f.c[i];
    df.trim();
    ZPoly g = zgcd(f, df);
    if (g.degree() == 0) return primitive_part(f);
    QPoly q = to_qpoly(f) / to_qpoly(g);
    return primitive_zpoly(q);
}

namespace {

// quadratic two-factor Hensel step: f = g*h, s*g + t*h = 1 (mod m) -> same mod m^2
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Int& m) {
    Int m2 = m * m;
    auto mod2 = [&](const ZPoly& x) { return sym_mod(x, m2); };
    auto mul2 = [&](const ZPoly& x, const ZPoly& y) { return mod2(x * y); };
    // h stays monic; division by monic h is valid over Z/m^2
    auto divmod_monic = [&](const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r) {
        q = ZPoly();
        r = a;
        long db = b.degree();
        while (!r.is_zero() && r.degree() >= db) {
            long k = r.degree() - db;
            Int fcoef = r.lead();
            if (q.c.size() < (size_t)k + 1) q.c.resize(k + 1, 0);
            q.c[k] += fcoef;
            for (long i = 0; i <= db; ++i) r.c[k + i] -= fcoef * b.c[i];
            r = mod2(r);
            r.trim();
        }
        q = mod2(q);
    };
    ZPoly e = mod2(f - g * h);
    ZPoly q, r;
    divmod_monic(mul2(s, e), h, q, r);
    ZPoly g1 = mod2(g + mul2(t, e) + mul2(q, g));
    ZPoly h1 = mod2(h + r);
    ZPoly b = mod2(mul2(s, g1) + mul2(t, h1) - ZPoly(Int(1)));
    ZPoly c, d;
    divmod_monic(mul2(s, b), h1, c, d);
    ZPoly s1 = mod2(s - d);
    ZPoly t1 = mod2(t - mul2(t, b) - mul2(c, g1));
    g = g1; h = h1; s = s1; t = t1;
}

ZPoly zpoly_from_fp(const FpPoly& f, u64 p) {
    ZPoly r;
    r.c.reserve(f.size());
    Int pz((unsigned long)p);
    for (auto x : f) r.c.push_back(sym_mod(Int(x), pz));
    r.trim();
    return r;
}

// lift the monic mod-p factorization of primitive f (f = lc * prod fi mod p) to mod p^(2^k) >= target
std::vector<ZPoly> hensel_lift_tree(const ZPoly& f, const std::vector<FpPoly>& fac, u64 p,
                                    const Int& target, Int& modulus_out) {
    Int m((unsigned long)p);
    int steps = 0;
    while (m < target) {
        m = m * m;
        ++steps;
    }
    modulus_out = m;

    std::function<std::vector<ZPoly>(const ZPoly&, size_t, size_t, const Int&)> rec =
        [&](const ZPoly& fcur, size_t lo, size_t hi, const Int& mod_final) -> std::vector<ZPoly> {
        if (hi - lo == 1) {
            // normalize monic mod mod_final
            ZPoly r = sym_mod(fcur, mod_final);
            Int linv;
            Int lead = fdiv_r(r.lead(), mod_final);
            if (mpz_invert(linv.get_mpz_t(), lead.get_mpz_t(), mod_final.get_mpz_t()) == 0)
                throw std::runtime_error("hensel: non-invertible lead");
            for (auto& x : r.c) x = fdiv_r(x * linv, mod_final);
            return {sym_mod(r, mod_final)};
        }
        size_t mid = lo + (hi - lo) / 2;
        FpPoly gl{1}, gr{1};
        for (size_t i = lo; i < mid; ++i) gl = fp_mul(gl, fac[i], p);
        for (size_t i = mid; i < hi; ++i) gr = fp_mul(gr, fac[i], p);
        // g = lc(fcur) * gl (mod p), h = gr monic
        u64 lc = mpz_fdiv_ui(fdiv_r(fcur.lead(), Int((unsigned long)p)).get_mpz_t(), p);
        FpPoly g0 = gl;
        for (auto& x : g0) x = mulmod(x, lc, p);
        FpPoly s0, t0;
        FpPoly one = fp_xgcd(g0, gr, s0, t0, p);
        if (fp_deg(one) != 0) throw std::runtime_error("hensel: factors not coprime");
        ZPoly g = zpoly_from_fp(g0, p), h = zpoly_from_fp(gr, p);
        ZPoly s = zpoly_from_fp(s0, p), t = zpoly_from_fp(t0, p);
        Int m_cur((unsigned long)p);
        while (m_cur < mod_final) {
            hensel_step(fcur, g, h, s, t, m_cur);
            m_cur = m_cur * m_cur;
        }
        auto left = rec(g, lo, mid, mod_final);
        auto right = rec(h, mid, hi, mod_final);
        left.insert(left.end(), right.begin(), right.end());
        return left;
    };
    return rec(sym_mod(f, m), 0, fac.size(), m);
}

} // namespace

zfactorization zfactor(const ZPoly& f_in, size_t subset_cap) {
    zfactorization out;
    out.unit = 1;
    if (f_in.is_zero()) throw std::invalid_argument("factor of zero polynomial");
    ZPoly f = f_in;
    {
        Int c = content(f);
        if (f.lead() < 0) c = -c;
        out.unit = Rat(c);
        for (auto& x : f.c) x = divexact(x, c);
    }
    // strip X^k
    size_t k0 = 0;
    while (k0 < f.c.size() && f.c[k0] == 0) ++k0;
    if (k0) {
        out.factors.emplace_back(ZPoly::X(), (unsigned)k0);
        f.c.erase(f.c.begin(), f.c.begin() + k0);
    }
    if (f.degree() == 0) return out;

    // squarefree decomposition via repeated radical splitting
    std::vector<std::pair<ZPoly, unsigned>> sqf; // (squarefree piece, multiplicity)
    {
        ZPoly g = f;
        unsigned mult = 1;
        while (g.degree() > 0) {
            ZPoly rad = zsquarefree_part(g);
            QPoly q = to_qpoly(g) / to_qpoly(rad);
            ZPoly next = primitive_zpoly(q);
            // rad contains every prime factor of g; factors of g/next^... appear once more
            // standard Yun-lite: pieces with multiplicity exactly mult are rad / gcd(rad, next)
            ZPoly same = zgcd(rad, next);
            ZPoly only = primitive_zpoly(to_qpoly(rad) / to_qpoly(same));
            if (only.degree() > 0) sqf.emplace_back(only, mult);
            g = next;
            ++mult;
        }
    }

    for (auto& [sf, mult] : sqf) {
        if (sf.degree() == 1) {
            out.factors.emplace_back(sf, mult);
            continue;
        }
        // pick a prime keeping sf squarefree, with few modular factors
        u64 pstate = 2;
        u64 best_p = 0;
        std::vector<FpPoly> best_fac;
        int tried = 0;
        while (tried < 8) {
            u64 p = next_good_prime(pstate);
            if (p < 3) continue;
            if (divides(Int((unsigned long)p), sf.lead())) continue;
            FpPoly fp = fp_from_zpoly(sf, p);
            if (fp_deg(fp) != sf.degree()) continue;
            FpPoly d(fp.size() - 1);
            for (size_t i = 1; i < fp.size(); ++i) d[i - 1] = mulmod(fp[i], i % p, p);
            fp_trim(d);
            if (fp_deg(fp_gcd(fp, d, p)) != 0) continue; // not squarefree mod p
            auto fac = fp_factor_squarefree(fp_monic(fp, p), p);
            ++tried;
            if (best_p == 0 || fac.size() < best_fac.size()) {
                best_p = p;
                best_fac = fac;
                if (fac.size() <= 2) break;
            }
        }
        if (best_p == 0) throw std::runtime_error("zfactor: no usable prime");
        if (best_fac.size() == 1) {
            out.factors.emplace_back(sf, mult);
            continue;
        }
        // Mignotte-style bound: factors of sf have coefficients below 2^(n+1) * norm2(sf) * |lc|
        double bits = sf.degree() + 1 + log2_norm2(sf) + mpz_sizeinbase(sf.lead().get_mpz_t(), 2) + 2;
        Int target = pow(Int(2), (unsigned long)std::ceil(bits) + 2);
        Int modulus;
        std::vector<ZPoly> lifted = hensel_lift_tree(sf, best_fac, best_p, target, modulus);

        // Zassenhaus recombination
        std::vector<size_t> live(lifted.size());
        for (size_t i = 0; i < live.size(); ++i) live[i] = i;
        ZPoly rem = sf;
        size_t tested = 0;
        size_t card = 1;
        while (2 * card <= live.size()) {
            // iterate over subsets of size card
            std::vector<size_t> idx(card);
            for (size_t i = 0; i < card; ++i) idx[i] = i;
            bool advanced = true;
            while (advanced) {
                if (++tested > subset_cap) throw std::runtime_error("zfactor: recombination cap hit");
                ZPoly prod(ZPoly(rem.lead()));
                for (size_t i : idx) prod = sym_mod(prod * lifted[live[i]], modulus);
                ZPoly cand = primitive_part(sym_mod(prod, modulus));
                ZPoly quot;
                if (cand.degree() >= 1 && zdivides(cand, rem, &quot)) {
                    out.factors.emplace_back(cand, mult);
                    // remove used modular factors
                    std::vector<size_t> nl;
                    for (size_t i = 0; i < live.size(); ++i)
                        if (std::find(idx.begin(), idx.end(), i) == idx.end()) nl.push_back(live[i]);
                    live = nl;
                    rem = primitive_part(quot);
                    idx.assign(card, 0);
                    for (size_t i = 0; i < card; ++i) idx[i] = i;
                    if (2 * card > live.size()) { advanced = false; }
                    if (live.empty()) { advanced = false; }
                    continue;
                }
                // next subset
                long pos = (long)card - 1;
                while (pos >= 0 && idx[pos] == live.size() - card + pos) --pos;
                if (pos < 0) {
                    advanced = false;
                } else {
                    ++idx[pos];
                    for (size_t i = pos + 1; i < card; ++i) idx[i] = idx[i - 1] + 1;
                }
            }
            ++card;
        }
        if (rem.degree() >= 1) out.factors.emplace_back(rem, mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](auto& a, auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.c < b.first.c;
    });
    return out;
}

std::vector<Rat> rational_roots(const ZPoly& f_in) {
    std::vector<Rat> roots;
    if (f_in.is_zero()) throw std::invalid_argument("roots of zero polynomial");
    ZPoly f = primitive_part(f_in);
    size_t k0 = 0;
    while (k0 < f.c.size() && f.c[k0] == 0) ++k0;
    if (k0) {
        roots.push_back(Rat(0));
        f.c.erase(f.c.begin(), f.c.begin() + k0);
    }
    if (f.degree() < 1) return roots;
    for (auto& p : divisors(f.c[0] == 0 ? Int(1) : f.c[0])) {
        for (auto& q : divisors(f.lead())) {
            for (int s : {1, -1}) {
                Rat r(s * p, q);
                r.canonicalize();
                if (eval(to_qpoly(f), r) == 0 &&
                    std::find(roots.begin(), roots.end(), r) == roots.end())
                    roots.push_back(r);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool zis_irreducible(const ZPoly& f) {
    if (f.degree() < 1) return false;
    auto fac = zfactor(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1 &&
           fac.factors[0].first.degree() == f.degree();
}

} // namespace isoclass
