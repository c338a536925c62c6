#include "isoclass/modpoly.hpp"

#include <functional>
#include <random>

namespace isoclass {

// distinct-degree, then equal-degree splitting
std::vector<FpPoly> fp_factor_squarefree(const FpPoly& f_in, u64 p, u64 seed) {
    std::vector<FpPoly> out;
    FpPoly f = fp_monic(f_in, p);
    if (fp_deg(f) <= 0) return out;

    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 12345);

    // distinct-degree decomposition
    std::vector<std::pair<FpPoly, long>> stages; // (product of the degree-d factors, d)
    {
        FpPoly h{0, 1}; // X
        FpPoly v = f;
        long d = 0;
        while (fp_deg(v) > 0) {
            ++d;
            if (2 * d > fp_deg(v)) {
                stages.emplace_back(v, fp_deg(v)); // what is left is irreducible
                break;
            }
            h = fp_powmod(h, Int(static_cast<unsigned long>(p)), v, p);
            FpPoly hx = h; // h - X
            if (hx.size() < 2) hx.resize(2, 0);
            hx[1] = submod(hx[1], 1, p);
            fp_trim(hx);
            FpPoly g = fp_gcd(v, hx, p);
            if (fp_deg(g) > 0) {
                stages.emplace_back(g, d);
                FpPoly q, r;
                fp_divmod(v, g, q, r, p);
                v = q;
                h = fp_mod(h, v, p);
            }
        }
    }

    // equal-degree splitting within each stage
    std::function<void(const FpPoly&, long)> split = [&](const FpPoly& g, long d) {
        if (fp_deg(g) == d) {
            out.push_back(fp_monic(g, p));
            return;
        }
        for (;;) {
            FpPoly a(static_cast<size_t>(fp_deg(g)), 0);
            for (auto& x : a) x = rng() % p;
            fp_trim(a);
            if (a.empty()) continue;
            FpPoly b;
            if (p == 2) {
                // trace map a + a^2 + ... + a^(2^(d-1)) mod g
                FpPoly t = fp_mod(a, g, p), s = t;
                for (long i = 1; i < d; ++i) {
                    t = fp_mod(fp_mul(t, t, p), g, p);
                    s.resize(std::max(s.size(), t.size()), 0);
                    for (size_t k = 0; k < t.size(); ++k) s[k] = addmod(s[k], t[k], p);
                    fp_trim(s);
                }
                b = s;
            } else {
                Int e = (pow(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(d)) - 1) / 2;
                b = fp_powmod(a, e, g, p);
                if (b.empty()) continue;
                b[0] = submod(b[0], 1, p); // a^e - 1
                fp_trim(b);
            }
            FpPoly h = fp_gcd(g, b, p);
            if (fp_deg(h) > 0 && fp_deg(h) < fp_deg(g)) {
                FpPoly q, r;
                fp_divmod(g, h, q, r, p);
                split(h, d);
                split(q, d);
                return;
            }
        }
    };
    for (auto& [g, d] : stages)
        if (fp_deg(g) > 0) split(g, d);
    return out;
}

u64 fp_resultant(FpPoly a, FpPoly b, u64 p) {
    if (a.empty() || b.empty()) return 0;
    u64 res = 1;
    for (;;) {
        long da = fp_deg(a), db = fp_deg(b);
        if (db == 0) return mulmod(res, powmod(b[0], static_cast<u64>(da), p), p);
        FpPoly q, r;
        fp_divmod(a, b, q, r, p);
        if (r.empty()) return 0;
        long dr = fp_deg(r);
        res = mulmod(res, powmod(b.back(), static_cast<u64>(da - dr), p), p);
        if ((da & 1) && (db & 1)) res = res ? p - res : 0;
        a = std::move(b);
        b = std::move(r);
    }
}

} // namespace isoclass
