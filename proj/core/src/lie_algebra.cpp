#include "fusionforge/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace fusionforge {

namespace {

IntMatrix cartan_matrix(char t, int n) {
    IntMatrix a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    switch (t) {
    case 'A': case 'B': case 'C':
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        if (t == 'B') a[n - 2][n - 1] = -2;
        if (t == 'C') a[n - 1][n - 2] = -2;
        break;
    case 'D':
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
        link(n - 3, n - 1);
        break;
    case 'E':
        link(0, 2); link(2, 3); link(3, 4); link(4, 5); link(1, 3);
        if (n >= 7) link(5, 6);
        if (n >= 8) link(6, 7);
        break;
    case 'F':
        link(0, 1); link(2, 3);
        a[1][2] = -2;
        a[2][1] = -1;
        break;
    case 'G':
        a[0][1] = -1;
        a[1][0] = -3;
        break;
    }
    return a;
}

std::vector<std::vector<mpq_class>> inverse(const IntMatrix& a) {
    std::size_t n = a.size();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (m[p][c] == 0) ++p;
        std::swap(m[p], m[c]);
        mpq_class inv = 1 / m[c][c];
        for (auto& x : m[c]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            mpq_class f = m[r][c];
            for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    std::vector<std::vector<mpq_class>> out(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = m[i][n + j];
    return out;
}

u64 factorial(int n) {
    u64 r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<u64>(i);
    return r;
}

}  // namespace

bool valid_type(char t, int n) {
    switch (t) {
    case 'A': return n >= 1;
    case 'B': return n >= 3;
    case 'C': return n >= 2;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
    }
}

std::string AlgebraData::name() const { return std::string(1, type_letter) + std::to_string(rank); }

int dual_coxeter_number(char t, int n) {
    if (!valid_type(t, n)) throw std::invalid_argument("invalid simple type");
    switch (t) {
    case 'A': return n + 1;
    case 'B': return 2 * n - 1;
    case 'C': return n + 1;
    case 'D': return 2 * n - 2;
    case 'E': return n == 6 ? 12 : n == 7 ? 18 : 30;
    case 'F': return 9;
    default: return 4;
    }
}

AlgebraData build_algebra(char t, int n) {
    if (!valid_type(t, n))
        throw std::invalid_argument("invalid simple type " + std::string(1, t) + std::to_string(n));
    AlgebraData g;
    g.type_letter = t;
    g.rank = n;
    g.cartan = cartan_matrix(t, n);
    const auto& a = g.cartan;

    // symmetrize: (alpha_i, alpha_j) = a[i][j] * D_j is symmetric
    std::vector<mpq_class> d(n, mpq_class(0));
    d[0] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (a[i][j] != 0 && d[i] != 0 && d[j] == 0) {
                    d[j] = mpq_class(a[j][i]) * d[i] / a[i][j];
                    changed = true;
                }
    }
    mpq_class mn = *std::min_element(d.begin(), d.end());
    for (int i = 0; i < n; ++i) {
        mpq_class v = d[i] / mn;
        g.half_lengths.push_back(static_cast<int>(v.get_num().get_si()));
    }
    g.lacing_m = *std::max_element(g.half_lengths.begin(), g.half_lengths.end());

    // positive roots by root strings from the simple roots
    std::set<std::vector<int>> roots;
    std::vector<std::vector<int>> layer;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        roots.insert(e);
        layer.push_back(e);
    }
    while (!layer.empty()) {
        std::vector<std::vector<int>> next;
        for (auto& b : layer) {
            for (int j = 0; j < n; ++j) {
                int lab = 0;
                for (int i = 0; i < n; ++i) lab += b[i] * a[i][j];
                int p = 0;
                auto c = b;
                while (true) {
                    --c[j];
                    if (roots.count(c)) ++p;
                    else break;
                }
                if (p - lab > 0) {
                    auto nb = b;
                    ++nb[j];
                    if (roots.insert(nb).second) next.push_back(nb);
                }
            }
        }
        layer = std::move(next);
    }
    g.positive_roots_simple.assign(roots.begin(), roots.end());
    std::stable_sort(g.positive_roots_simple.begin(), g.positive_roots_simple.end(), [](auto& x, auto& y) {
        int sx = 0, sy = 0;
        for (int v : x) sx += v;
        for (int v : y) sy += v;
        return sx < sy;
    });
    for (auto& r : g.positive_roots_simple) {
        std::vector<int> w(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) w[j] += r[i] * a[i][j];
        g.positive_roots.push_back(w);
    }

    const auto& theta = g.positive_roots_simple.back();
    int hv = 1;
    for (int i = 0; i < n; ++i) {
        int c = theta[i] * g.half_lengths[i] / g.lacing_m;
        g.comarks.push_back(c);
        hv += c;
    }
    g.h_dual = hv;
    g.dim_g = n + 2 * static_cast<int>(g.positive_roots.size());
    g.rho.assign(n, 1);

    auto ainv = inverse(a);
    g.form.assign(n, std::vector<mpq_class>(n));
    mpz_class den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            g.form[i][j] = ainv[i][j] * g.half_lengths[j];
            g.form[i][j].canonicalize();
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), g.form[i][j].get_den_mpz_t());
        }
    g.form_denominator = static_cast<int>(den.get_si());
    g.scaled_form.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mpq_class v = g.form[i][j] * den;
            g.scaled_form[i][j] = static_cast<int>(v.get_num().get_si());
        }
    return g;
}

int level_of(const AlgebraData& g, const Weight& w) {
    int s = 0;
    for (int i = 0; i < g.rank; ++i) s += g.comarks[i] * w[i];
    return s;
}

std::vector<Weight> weyl_alcove(const AlgebraData& g, int k) {
    std::vector<Weight> out;
    Weight cur(g.rank, 0);
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == g.rank) {
            out.push_back(cur);
            return;
        }
        for (int l = 0; l * g.comarks[i] <= rem; ++l) {
            cur[i] = l;
            self(self, i + 1, rem - l * g.comarks[i]);
        }
        cur[i] = 0;
    };
    rec(rec, 0, k);
    return out;
}

u64 alcove_size(const AlgebraData& g, int k) {
    // count solutions of sum c_i l_i <= k
    std::vector<u64> ways(k + 1, 0);
    ways[0] = 1;
    for (int c : g.comarks)
        for (int s = c; s <= k; ++s) ways[s] += ways[s - c];
    u64 total = 0;
    for (u64 w : ways) total += w;
    return total;
}

int root_pairing(const AlgebraData& g, std::size_t r, const Weight& w) {
    const auto& c = g.positive_roots_simple[r];
    int s = 0;
    for (int i = 0; i < g.rank; ++i) s += c[i] * g.half_lengths[i] * w[i];
    return s;
}

Weight plus_rho(const Weight& w) {
    Weight r = w;
    for (auto& x : r) ++x;
    return r;
}

Weight dual_weight(const AlgebraData& g, const Weight& w) {
    Weight r = w;
    int n = g.rank;
    switch (g.type_letter) {
    case 'A':
        std::reverse(r.begin(), r.end());
        break;
    case 'D':
        if (n % 2 == 1) std::swap(r[n - 2], r[n - 1]);
        break;
    case 'E':
        if (n == 6) {
            std::swap(r[0], r[5]);
            std::swap(r[2], r[4]);
        }
        break;
    default:
        break;
    }
    return r;
}

i64 scaled_inner(const AlgebraData& g, const Weight& x, const Weight& y) {
    i64 s = 0;
    for (int i = 0; i < g.rank; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < g.rank; ++j) s += static_cast<i64>(x[i]) * g.scaled_form[i][j] * y[j];
    }
    return s;
}

u64 weyl_group_order(const AlgebraData& g) {
    int n = g.rank;
    switch (g.type_letter) {
    case 'A': return factorial(n + 1);
    case 'B': case 'C': return (u64{1} << n) * factorial(n);
    case 'D': return (u64{1} << (n - 1)) * factorial(n);
    case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    case 'G': return 12;
    }
    return 0;
}

Weight act(const WeylElement& w, const Weight& x) {
    std::size_t n = x.size();
    Weight r(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i] += w.matrix[i][j] * x[j];
    return r;
}

std::vector<WeylElement> weyl_group(const AlgebraData& g, int rank_cap) {
    if (g.rank > rank_cap)
        throw std::length_error("Weyl group of " + g.name() + " exceeds rank cap " + std::to_string(rank_cap));
    int n = g.rank;
    // s_i(x)_j = x_j - x_i * cartan[i][j]
    std::vector<IntMatrix> refl;
    for (int i = 0; i < n; ++i) {
        IntMatrix s(n, std::vector<int>(n, 0));
        for (int j = 0; j < n; ++j) s[j][j] = 1;
        for (int j = 0; j < n; ++j) s[j][i] -= g.cartan[i][j];
        refl.push_back(s);
    }
    // the orbit of rho is regular, so it indexes the group
    std::map<Weight, std::size_t> seen;
    std::vector<WeylElement> out;
    IntMatrix id(n, std::vector<int>(n, 0));
    for (int j = 0; j < n; ++j) id[j][j] = 1;
    out.push_back({id, 1});
    seen[g.rho] = 0;
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (const auto& s : refl) {
            IntMatrix m(n, std::vector<int>(n, 0));
            for (int i = 0; i < n; ++i)
                for (int l = 0; l < n; ++l) {
                    if (s[i][l] == 0) continue;
                    for (int j = 0; j < n; ++j) m[i][j] += s[i][l] * out[k].matrix[l][j];
                }
            WeylElement w{std::move(m), -out[k].det};
            Weight img = act(w, g.rho);
            if (seen.emplace(img, out.size()).second) out.push_back(std::move(w));
        }
    }
    return out;
}

}  // namespace fusionforge
