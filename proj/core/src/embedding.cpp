#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "fusionforge/fusion_ring.hpp"

namespace fusionforge {

namespace {

using QPoly = std::vector<mpq_class>;

// a * b mod f for monic f
QPoly mul_mod(const QPoly& a, const QPoly& b, const ZPoly& f) {
    int d = degree(f);
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (int k = static_cast<int>(r.size()) - 1; k >= d; --k) {
        if (r[k] == 0) continue;
        mpq_class c = r[k];
        for (int i = 0; i < d; ++i) r[k - d + i] -= c * f[i];
        r[k] = 0;
    }
    r.resize(std::min<std::size_t>(r.size(), d));
    return r;
}

bool composes_to_root(const ZPoly& f, const QPoly& theta) {
    QPoly acc{mpq_class(f.back())};
    for (int i = degree(f) - 1; i >= 0; --i) {
        acc = mul_mod(acc, theta, f);
        if (acc.empty()) acc.resize(1);
        acc[0] += f[i];
    }
    return std::all_of(acc.begin(), acc.end(), [](const mpq_class& c) { return c == 0; });
}

// r/s = a mod m with |r|, s bounded by sqrt(m/2)
std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& m) {
    mpz_class bound;
    mpz_class half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = m, r1 = a, t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    mpq_class out(r1, t1);
    out.canonicalize();
    return out;
}

std::vector<u64> unit_generators(u64 n) {
    std::vector<u64> gens;
    if (n <= 2) return gens;
    std::vector<char> in(n, 0);
    std::vector<u64> members{1};
    in[1] = 1;
    u64 total = euler_phi(n);
    for (u64 g : units_mod(n)) {
        if (members.size() == total) break;
        if (in[g]) continue;
        gens.push_back(g);
        std::vector<u64> frontier = members;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            u64 v = frontier[i] * g % n;
            if (!in[v]) {
                in[v] = 1;
                frontier.push_back(v);
            }
        }
        members = std::move(frontier);
    }
    return gens;
}

// cheap necessary test: f splits completely at primes q = 1 mod n
bool splits_at_one_mod(const ZPoly& f, u64 n, int tests) {
    u64 q = (u64(1) << 40) / n * n;
    for (int done = 0; done < tests;) {
        q = next_prime_in_class(q + 1, 1, n);
        if (!squarefree_mod(f, q)) continue;
        if (static_cast<int>(roots_mod(f, q).size()) != degree(f)) return false;
        ++done;
    }
    return true;
}

// the polynomial theta with sigma_g(x) = theta(x), from Frobenius at primes
// q = g mod n; empty when reconstruction does not settle
std::optional<QPoly> frobenius_lift(const ZPoly& f, u64 g, u64 n) {
    int d = degree(f);
    mpz_class modulus = 1;
    std::vector<mpz_class> residues(d);
    u64 q = (u64(1) << 61) / n * n;
    for (int used = 0; used < 400;) {
        q = next_prime_in_class(q + 1, g, n);
        if (!squarefree_mod(f, q)) continue;
        ZPoly frob = x_power_mod(f, mpz_class(static_cast<unsigned long>(q)), q);
        frob.resize(d);
        mpz_class mq = static_cast<unsigned long>(q);
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), mq.get_mpz_t());
        for (int i = 0; i < d; ++i) {
            mpz_class delta = (frob[i] - residues[i]) * inv;
            mpz_fdiv_r(delta.get_mpz_t(), delta.get_mpz_t(), mq.get_mpz_t());
            residues[i] += modulus * delta;
        }
        modulus *= mq;
        ++used;
        QPoly theta(d);
        bool ok = true;
        for (int i = 0; i < d && ok; ++i) {
            auto c = rational_reconstruct(residues[i], modulus);
            if (!c) ok = false;
            else theta[i] = *c;
        }
        if (ok && composes_to_root(f, theta)) return theta;
    }
    return std::nullopt;
}

u64 reduce_mod(const mpq_class& c, u64 p) {
    mpz_class mp = static_cast<unsigned long>(p), num, den;
    mpz_fdiv_r(num.get_mpz_t(), c.get_num_mpz_t(), mp.get_mpz_t());
    mpz_fdiv_r(den.get_mpz_t(), c.get_den_mpz_t(), mp.get_mpz_t());
    if (den == 0) throw std::domain_error("denominator vanishes mod p");
    return mulmod(num.get_ui(), invmod(den.get_ui(), p), p);
}

u64 eval_mod(const QPoly& theta, u64 x, u64 p) {
    u64 acc = 0;
    for (std::size_t i = theta.size(); i-- > 0;) acc = (mulmod(acc, x, p) + reduce_mod(theta[i], p)) % p;
    return acc;
}

// Ramanujan sum c_n(m)
mpz_class ramanujan(u64 n, i64 m) {
    u64 g = gcd_u(n, static_cast<u64>(mod_floor(m, static_cast<i64>(n))));
    if (g == 0) g = n;
    u64 r = n / g;
    return mpz_class(mobius(r)) * static_cast<unsigned long>(euler_phi(n) / euler_phi(r));
}

// exact solve of a square rational system, empty when singular
std::optional<std::vector<mpq_class>> solve(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b) {
    std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[c]);
        std::swap(b[piv], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            mpq_class t = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= t * a[c][k];
            b[r] -= t * b[c];
        }
    }
    for (std::size_t c = 0; c < n; ++c) b[c] /= a[c][c];
    return b;
}

bool nonsingular(const std::vector<std::vector<mpq_class>>& a) {
    return solve(a, std::vector<mpq_class>(a.size())).has_value();
}

CycElem eval_poly(const ZPoly& f, const CycElem& x) {
    CycElem acc(0);
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + CycElem(mpq_class(f[i]));
    return acc;
}

// x = the real root of f in iv, as an element of Q(zeta_n) if it lies there
std::optional<CycElem> embed_at(const AlgebraicReal& x, u64 n) {
    const ZPoly& f = x.minimal_polynomial;
    int d = x.degree();
    if (f.back() != 1) return std::nullopt;
    if (d == 1) return CycElem(mpq_class(-f[0]));
    u64 phi = euler_phi(n);
    if (phi % d != 0) return std::nullopt;
    if (!splits_at_one_mod(f, n, 3)) return std::nullopt;

    std::vector<u64> gens = unit_generators(n);
    std::vector<QPoly> thetas;
    for (u64 g : gens) {
        auto th = frobenius_lift(f, g, n);
        if (!th) return std::nullopt;
        thetas.push_back(std::move(*th));
    }

    mpz_class root_bound = 0;
    for (const auto& c : f) root_bound = std::max(root_bound, mpz_class(abs(c)));
    root_bound += 1;
    if (root_bound * static_cast<unsigned long>(phi) * 4 >= mpz_class(1) << 61) return std::nullopt;

    // auxiliary prime where Q(zeta_n) splits
    u64 p = (u64(1) << 62) / n * n;
    std::vector<u64> roots;
    while (true) {
        p = next_prime_in_class(p + 1, 1, n);
        if (!squarefree_mod(f, p)) continue;
        roots = roots_mod(f, p);
        if (static_cast<int>(roots.size()) != d) return std::nullopt;
        bool denominators_ok = true;
        for (const auto& th : thetas)
            for (const auto& c : th)
                if (mpz_divisible_ui_p(c.get_den_mpz_t(), p)) denominators_ok = false;
        if (denominators_ok) break;
    }
    std::map<u64, int> index;
    for (int i = 0; i < d; ++i) index[roots[i]] = i;
    std::vector<std::vector<int>> perm(gens.size(), std::vector<int>(d));
    for (std::size_t s = 0; s < gens.size(); ++s)
        for (int i = 0; i < d; ++i) {
            auto it = index.find(eval_mod(thetas[s], roots[i], p));
            if (it == index.end()) return std::nullopt;
            perm[s][i] = it->second;
        }

    // image[u]: index of sigma_u(y) where y is the conjugate sent to roots[0]
    std::vector<int> image(n, -1);
    std::vector<u64> order{1 % n};
    image[1 % n] = 0;
    for (std::size_t at = 0; at < order.size(); ++at)
        for (std::size_t s = 0; s < gens.size(); ++s) {
            u64 v = order[at] * gens[s] % n;
            if (image[v] < 0) {
                image[v] = perm[s][image[order[at]]];
                order.push_back(v);
            }
        }
    std::vector<u64> H;
    for (u64 u : order)
        if (image[u] == 0) H.push_back(u);
    if (H.size() * d != phi) return std::nullopt;

    // Gaussian periods eta_a = sum_h zeta^{ah}, chosen to keep the trace form nonsingular
    std::vector<u64> reps;
    std::vector<std::vector<mpq_class>> gram;
    std::vector<char> seen(n, 0);
    for (u64 a = 0; a < n && static_cast<int>(reps.size()) < d; ++a) {
        if (seen[a]) continue;
        for (u64 h : H) seen[a * h % n] = 1;
        auto trace = [&](u64 x1, u64 x2) {
            mpz_class s = 0;
            for (u64 h : H) s += ramanujan(n, static_cast<i64>((x1 * h + x2) % n));
            return mpq_class(s);
        };
        auto trial = gram;
        for (std::size_t i = 0; i < reps.size(); ++i) trial[i].push_back(trace(reps[i], a));
        trial.emplace_back();
        for (u64 r : reps) trial.back().push_back(trace(a, r));
        trial.back().push_back(trace(a, a));
        if (nonsingular(trial)) {
            gram = std::move(trial);
            reps.push_back(a);
        }
    }
    if (static_cast<int>(reps.size()) != d) return std::nullopt;

    // traces Tr(y eta_b) mod p, lifted symmetrically; y is an algebraic integer
    u64 w = 0;
    for (u64 c = 2;; ++c) {
        w = powmod(c, (p - 1) / n, p);
        bool primitive = true;
        for (u64 l : prime_divisors(n))
            if (powmod(w, n / l, p) == 1) primitive = false;
        if (primitive) break;
    }
    std::vector<u64> wpow(n);
    wpow[0] = 1;
    for (u64 e = 1; e < n; ++e) wpow[e] = mulmod(wpow[e - 1], w, p);
    u64 inv_h = invmod(H.size() % p, p);
    std::vector<mpq_class> rhs;
    for (u64 b : reps) {
        u64 acc = 0;
        for (u64 u : order) {
            u64 eta = 0;
            for (u64 h : H) eta = (eta + wpow[u * b % n * h % n]) % p;
            acc = (acc + mulmod(roots[image[u]], eta, p)) % p;
        }
        acc = mulmod(acc, inv_h, p);
        mpz_class t = static_cast<unsigned long>(acc);
        if (acc > p / 2) t -= static_cast<unsigned long>(p);
        rhs.emplace_back(t);
    }
    auto coeffs = solve(gram, rhs);
    if (!coeffs) return std::nullopt;
    std::vector<std::pair<i64, Rational>> terms;
    for (int i = 0; i < d; ++i)
        for (u64 h : H) terms.emplace_back(static_cast<i64>(reps[i] * h % n), (*coeffs)[i]);
    CycElem y = CycElem::from_terms(n, terms);
    if (!eval_poly(f, y).is_zero()) return std::nullopt;

    // pick the conjugate of y that is x
    BigFloat target = x.value(256);
    std::optional<CycElem> best;
    BigFloat best_dist(256);
    std::vector<char> coset_seen(n, 0);
    for (u64 u : order) {
        if (coset_seen[u]) continue;
        for (u64 h : H) coset_seen[u * h % n] = 1;
        CycElem z = galois_apply(GaloisElement(n, static_cast<i64>(u)), y);
        FloatApprox za = to_float(z, 256);
        BigFloat dist = abs(za.re - target) + abs(za.im);
        if (!best || dist < best_dist) {
            best = z;
            best_dist = dist;
        }
    }
    if (!best || BigFloat(1e-30, 256) < best_dist) return std::nullopt;
    return best;
}

std::optional<CycElem> embed_search(const AlgebraicReal& x, u64 bound) {
    if (x.degree() == 1) return embed_at(x, 1);
    for (u64 n = 3; n <= bound; ++n) {
        if (n % 4 == 2) continue;  // Q(zeta_n) = Q(zeta_{n/2})
        if (euler_phi(n) % x.degree() != 0) continue;
        if (auto e = embed_at(x, n)) return e;
    }
    return std::nullopt;
}

}  // namespace

EmbeddedRing attach_cyclotomic_embedding(const FusionRing& r, u64 n, ConductorMode mode) {
    EmbeddedRing out{r, fpdims(r), false, 1, {}};
    // equal minimal polynomials with equal intervals give equal dims
    std::map<std::pair<std::string, std::string>, CycElem> cache;
    for (int i = 0; i < r.rank(); ++i) {
        AlgebraicReal& x = out.dims[i];
        auto key = std::make_pair(poly_to_string(x.minimal_polynomial), x.value(64).to_string(15));
        if (auto it = cache.find(key); it != cache.end()) {
            x.cyclotomic_form = it->second;
            continue;
        }
        std::optional<CycElem> e = mode == ConductorMode::exact ? embed_at(x, n) : embed_search(x, n);
        if (!e) {
            out.note = "FPdim(" + r.labels()[i] + ") = " + x.to_string() + " not found in Q(zeta_N) for " +
                       (mode == ConductorMode::exact ? "N = " : "N <= ") + std::to_string(n);
            out.conductor = 0;
            for (auto& dim : out.dims) dim.cyclotomic_form.reset();
            return out;
        }
        x.cyclotomic_form = *e;
        cache.emplace(key, *e);
        out.conductor = lcm_u(out.conductor, e->conductor());
    }
    out.embedded = true;
    return out;
}

}  // namespace fusionforge
