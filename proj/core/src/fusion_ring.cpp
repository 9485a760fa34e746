#include "fusionforge/fusion_ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fusionforge {

FusionRing::FusionRing() = default;

FusionRing::FusionRing(std::vector<std::string> labels, std::vector<int> duality, std::vector<int> constants)
    : rank_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      duality_(std::move(duality)),
      c_(std::move(constants)) {
    std::size_t r = static_cast<std::size_t>(rank_);
    if (rank_ < 1) throw std::invalid_argument("rank must be positive");
    if (duality_.size() != r) throw std::invalid_argument("duality has length " + std::to_string(duality_.size()) +
                                                          ", expected " + std::to_string(r));
    if (c_.size() != r * r * r)
        throw std::invalid_argument("constants has length " + std::to_string(c_.size()) + ", expected " +
                                    std::to_string(r * r * r));
    for (std::size_t i = 0; i < r; ++i)
        if (duality_[i] < 0 || duality_[i] >= rank_)
            throw std::invalid_argument("duality[" + std::to_string(i) + "] out of range");
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] < 0) throw std::invalid_argument("constants[" + std::to_string(i) + "] is negative");
}

std::string Violation::message() const {
    std::string s = axiom + " at (";
    for (std::size_t i = 0; i < indices.size(); ++i) s += (i ? "," : "") + std::to_string(indices[i]);
    return s + ")";
}

std::vector<Violation> validate(const FusionRing& R) {
    std::vector<Violation> out;
    int r = R.rank();
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) {
            int want = j == k;
            if (R(0, j, k) != want) out.push_back({"unit: b0 b_j", {j, k}});
            if (R(j, 0, k) != want) out.push_back({"unit: b_j b0", {j, k}});
        }
    for (int i = 0; i < r; ++i)
        if (R.dual(R.dual(i)) != i) out.push_back({"duality is not an involution", {i}});
    if (R.dual(0) != 0) out.push_back({"duality does not fix the unit", {0}});
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            int want = i == R.dual(j);
            if (R(i, j, 0) != want) out.push_back({"duality: c_ij^0 = 1 iff b_i = b_j*", {i, j}});
        }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                if (R(i, j, k) != R(R.dual(j), R.dual(i), R.dual(k)))
                    out.push_back({"anti-involution: c_ij^k = c_j*i*^k*", {i, j, k}});
    // (b_i b_j) b_k = b_i (b_j b_k)
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                for (int l = 0; l < r; ++l) {
                    long left = 0, right = 0;
                    for (int m = 0; m < r; ++m) {
                        left += static_cast<long>(R(i, j, m)) * R(m, k, l);
                        right += static_cast<long>(R(j, k, m)) * R(i, m, l);
                    }
                    if (left != right) out.push_back({"associativity", {i, j, k, l}});
                }
    return out;
}

ZMatrix fusion_matrix(const FusionRing& R, int i) {
    int r = R.rank();
    ZMatrix m(r, std::vector<mpz_class>(r));
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) m[j][k] = R(i, j, k);
    return m;
}

BigFloat AlgebraicReal::value(long precision) const {
    SturmChain s(minimal_polynomial);
    mpq_class width(1);
    width /= mpz_class(1) << static_cast<unsigned>(precision + 8);
    RootInterval iv = interval;
    if (degree() == 1) {
        mpq_class root(-minimal_polynomial[0], minimal_polynomial[1]);
        root.canonicalize();
        return BigFloat(root, precision);
    }
    iv = refine(s, iv, width);
    return BigFloat(mpq_class((iv.lo + iv.hi) / 2), precision);
}

std::string AlgebraicReal::to_string() const {
    std::ostringstream os;
    if (cyclotomic_form) os << cyclotomic_form->to_string() << " ";
    os << "[root of " << poly_to_string(minimal_polynomial) << " ~ " << value(64).to_string(12) << "]";
    return os.str();
}

AlgebraicReal algebraic_from_charpoly(const ZPoly& f, const BigFloat& guess) {
    ZPoly sf = primitive_part(squarefree_part(f));
    long prec = std::max<long>(guess.prec(), 128);
    AlgebraicReal best;
    BigFloat best_dist(prec);
    bool found = false;
    mpq_class width(1);
    width /= mpz_class(1) << 80;
    for (const auto& g : factor_squarefree(sf)) {
        SturmChain s(g);
        for (auto iv : isolate_real_roots(g)) {
            AlgebraicReal a{g, iv, std::nullopt};
            BigFloat d = abs(a.value(prec) - guess);
            if (!found || d < best_dist) {
                best = a;
                best_dist = d;
                found = true;
            }
        }
    }
    if (!found) throw std::runtime_error("characteristic polynomial has no real root");
    return best;
}

namespace {

// largest real root of f, reduced to its minimal polynomial
AlgebraicReal largest_root(const ZPoly& f) {
    ZPoly sf = primitive_part(squarefree_part(f));
    auto roots = isolate_real_roots(sf);
    if (roots.empty()) throw std::runtime_error("no real eigenvalue");
    RootInterval top = roots.back();
    for (const auto& g : factor_squarefree(sf)) {
        SturmChain s(g);
        if (s.count(top.lo, top.hi) == 1) return {g, top, std::nullopt};
    }
    throw std::logic_error("largest root lost in factorization");
}

ZMatrix element_matrix(const FusionRing& R, const std::vector<long>& x) {
    int r = R.rank();
    ZMatrix m(r, std::vector<mpz_class>(r));
    for (int i = 0; i < r; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) m[j][k] += x[i] * R(i, j, k);
    }
    return m;
}

}  // namespace

AlgebraicReal fpdim(const FusionRing& R, int i) { return largest_root(charpoly(fusion_matrix(R, i))); }

std::vector<AlgebraicReal> fpdims(const FusionRing& R) {
    std::vector<AlgebraicReal> out;
    for (int i = 0; i < R.rank(); ++i) out.push_back(fpdim(R, i));
    return out;
}

AlgebraicReal fpdim_of_element(const FusionRing& R, const FusionElement& x) {
    if (static_cast<int>(x.coefficients.size()) != R.rank()) throw std::invalid_argument("element length != rank");
    long prec = 192;
    BigFloat guess(prec);
    auto dims = fpdims(R);
    for (int i = 0; i < R.rank(); ++i)
        if (x.coefficients[i] != 0)
            guess = guess + BigFloat(mpz_class(x.coefficients[i]), prec) * dims[i].value(prec);
    return algebraic_from_charpoly(charpoly(element_matrix(R, x.coefficients)), guess);
}

AlgebraicReal fpdim_total(const FusionRing& R) {
    FusionElement y{std::vector<long>(R.rank(), 0)};
    for (int j = 0; j < R.rank(); ++j)
        for (int k = 0; k < R.rank(); ++k) y.coefficients[k] += R(j, R.dual(j), k);
    return fpdim_of_element(R, y);
}

BasisSet pointed_subring(const FusionRing& R) {
    BasisSet out;
    for (int j = 0; j < R.rank(); ++j) {
        bool unit = true;
        for (int k = 0; k < R.rank(); ++k)
            if (R(j, R.dual(j), k) != (k == 0)) unit = false;
        if (unit) out.push_back(j);
    }
    return out;
}

BasisSet subring_generated_by(const FusionRing& R, const BasisSet& seed) {
    std::vector<char> in(R.rank(), 0);
    in[0] = 1;
    for (int s : seed) in[s] = in[R.dual(s)] = 1;
    for (bool grew = true; grew;) {
        grew = false;
        for (int i = 0; i < R.rank(); ++i) {
            if (!in[i]) continue;
            for (int j = 0; j < R.rank(); ++j) {
                if (!in[j]) continue;
                for (int k = 0; k < R.rank(); ++k)
                    if (R(i, j, k) > 0 && !in[k]) {
                        in[k] = in[R.dual(k)] = 1;
                        grew = true;
                    }
            }
        }
    }
    BasisSet out;
    for (int i = 0; i < R.rank(); ++i)
        if (in[i]) out.push_back(i);
    return out;
}

BasisSet adjoint_subring(const FusionRing& R) {
    BasisSet seed;
    for (int j = 0; j < R.rank(); ++j)
        for (int k = 0; k < R.rank(); ++k)
            if (R(j, R.dual(j), k) > 0) seed.push_back(k);
    std::sort(seed.begin(), seed.end());
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
    return subring_generated_by(R, seed);
}

bool is_subring(const FusionRing& R, const BasisSet& s) {
    std::vector<char> in(R.rank(), 0);
    for (int x : s) in[x] = 1;
    if (!in[0]) return false;
    for (int i : s) {
        if (!in[R.dual(i)]) return false;
        for (int j : s)
            for (int k = 0; k < R.rank(); ++k)
                if (R(i, j, k) > 0 && !in[k]) return false;
    }
    return true;
}

bool is_multiplicatively_generated_by(const FusionRing& R, int i) {
    int r = R.rank();
    std::vector<char> reached(r, 0), power(r, 0);
    power[i] = 1;
    std::set<std::vector<char>> seen;
    while (seen.insert(power).second) {
        for (int k = 0; k < r; ++k)
            if (power[k]) reached[k] = 1;
        std::vector<char> next(r, 0);
        for (int a = 0; a < r; ++a) {
            if (!power[a]) continue;
            for (int k = 0; k < r; ++k)
                if (R(a, i, k) > 0) next[k] = 1;
        }
        power = std::move(next);
    }
    return std::all_of(reached.begin(), reached.end(), [](char c) { return c != 0; });
}

namespace {

// structure of a finite group given by its multiplication table, identity 0
void describe_group(GradingPartition& g) {
    std::size_t n = g.product.size();
    g.abelian = true;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (g.product[a][b] != g.product[b][a]) g.abelian = false;
    g.invariant_factors.clear();
    if (!g.abelian || n == 1) return;
    auto power = [&](int a, u64 e) {
        int x = 0;
        for (u64 i = 0; i < e; ++i) x = g.product[x][a];
        return x;
    };
    // per prime p: number of cyclic factors of order >= p^j is s_j - s_{j-1},
    // where p^{s_j} counts solutions of x^{p^j} = 1
    std::vector<std::vector<u64>> per_prime;
    for (auto [p, e] : factorize(n).parts) {
        std::vector<int> s{0};
        u64 pj = 1;
        for (int j = 1; j <= e; ++j) {
            pj *= p;
            u64 count = 0;
            for (std::size_t a = 0; a < n; ++a)
                if (power(static_cast<int>(a), pj) == 0) ++count;
            int sj = 0;
            while (count > 1) {
                count /= p;
                ++sj;
            }
            s.push_back(sj);
        }
        std::vector<u64> cyc;  // p-power cyclic factor orders, descending
        for (int j = e; j >= 1; --j) {
            int at_least_j = s[j] - s[j - 1];
            int at_least_next = j + 1 <= e ? s[j + 1] - s[j] : 0;
            u64 pw = 1;
            for (int t = 0; t < j; ++t) pw *= p;
            for (int t = 0; t < at_least_j - at_least_next; ++t) cyc.push_back(pw);
        }
        per_prime.push_back(cyc);
    }
    std::size_t len = 0;
    for (auto& c : per_prime) len = std::max(len, c.size());
    std::vector<u64> f(len, 1);
    for (auto& c : per_prime)
        for (std::size_t i = 0; i < c.size(); ++i) f[i] *= c[i];
    std::reverse(f.begin(), f.end());
    g.invariant_factors = f;
}

GradingPartition grading_from_classes(const FusionRing& R, std::vector<int> cls) {
    GradingPartition g;
    // renumber with the unit's class first, others by first appearance
    std::map<int, int> renum;
    renum[cls[0]] = 0;
    for (int c : cls)
        if (!renum.count(c)) renum.emplace(c, static_cast<int>(renum.size()));
    for (auto& c : cls) c = renum[c];
    g.component_of = cls;
    g.components.assign(renum.size(), {});
    for (int i = 0; i < R.rank(); ++i) g.components[cls[i]].push_back(i);
    std::size_t n = g.components.size();
    g.product.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < R.rank(); ++i)
        for (int j = 0; j < R.rank(); ++j)
            for (int k = 0; k < R.rank(); ++k) {
                if (R(i, j, k) == 0) continue;
                int& slot = g.product[cls[i]][cls[j]];
                if (slot == -1) slot = cls[k];
                else if (slot != cls[k]) throw std::runtime_error("components do not multiply consistently");
            }
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<char> row(n, 0);
        for (std::size_t b = 0; b < n; ++b) {
            int x = g.product[a][b];
            if (x < 0 || row[x]) throw std::runtime_error("component multiplication is not a group");
            row[x] = 1;
        }
    }
    describe_group(g);
    return g;
}

}  // namespace

bool GradingPartition::is_elementary_abelian_2() const {
    if (!abelian) return false;
    return std::all_of(invariant_factors.begin(), invariant_factors.end(), [](u64 f) { return f == 2; });
}

std::string GradingPartition::group_name() const {
    if (components.size() == 1) return "trivial";
    if (!abelian) return "nonabelian of order " + std::to_string(components.size());
    std::string s;
    for (std::size_t i = 0; i < invariant_factors.size(); ++i)
        s += (i ? " x " : "") + std::string("Z/") + std::to_string(invariant_factors[i]);
    return s;
}

GradingPartition universal_grading(const FusionRing& R) {
    int r = R.rank();
    std::vector<int> parent(r);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    // b_i ~ b_j when b_i occurs in b_a b_j for some adjoint b_a
    for (int a : adjoint_subring(R))
        for (int j = 0; j < r; ++j)
            for (int i = 0; i < r; ++i)
                if (R(a, j, i) > 0) parent[find(i)] = find(j);
    std::vector<int> cls(r);
    for (int i = 0; i < r; ++i) cls[i] = find(i);
    return grading_from_classes(R, cls);
}

SubfieldHandle K1_of(const EmbeddedRing& e) {
    if (!e.embedded) throw std::invalid_argument("ring has no cyclotomic embedding");
    SubfieldHandle f = rational_field();
    for (int i = 0; i < e.ring.rank(); ++i) f = field_join(f, field_generated_by(e.dim(i)));
    return f;
}

SubfieldHandle K0_of(const EmbeddedRing& e) {
    if (!e.embedded) throw std::invalid_argument("ring has no cyclotomic embedding");
    CycElem total(0);
    for (int i = 0; i < e.ring.rank(); ++i) total += e.dim(i) * e.dim(i);
    return field_generated_by(total);
}

DimensionalGrading dimensional_grading(const EmbeddedRing& e) {
    DimensionalGrading d;
    d.K0 = K0_of(e);
    d.K1 = K1_of(e);
    std::map<SubfieldHandle, int> ids;
    std::vector<int> cls;
    for (int i = 0; i < e.ring.rank(); ++i) {
        d.fields.push_back(field_generated_by(e.dim(i)));
        auto f = field_join(d.K0, d.fields.back());
        cls.push_back(ids.emplace(f, static_cast<int>(ids.size())).first->second);
    }
    d.partition = grading_from_classes(e.ring, cls);
    return d;
}

bool check_main_lemma(const EmbeddedRing& e, const std::vector<Rational>& x1, const std::vector<Rational>& x2) {
    if (!e.embedded) throw std::invalid_argument("ring has no cyclotomic embedding");
    int r = e.ring.rank();
    if (static_cast<int>(x1.size()) != r || static_cast<int>(x2.size()) != r)
        throw std::invalid_argument("element length != rank");
    CycElem d1(0), d2(0);
    for (int i = 0; i < r; ++i) {
        if (x1[i] < 0 || x2[i] < 0) throw std::invalid_argument("coefficients must be nonnegative");
        if (x1[i] != 0) d1 += CycElem(x1[i]) * e.dim(i);
        if (x2[i] != 0) d2 += CycElem(x2[i]) * e.dim(i);
    }
    auto f = field_generated_by(d1 + d2);
    return contains(f, d1) && contains(f, d2);
}

BasisSet subring_R_K(const EmbeddedRing& e, const SubfieldHandle& k) {
    if (!e.embedded) throw std::invalid_argument("ring has no cyclotomic embedding");
    BasisSet out;
    for (int i = 0; i < e.ring.rank(); ++i)
        if (contains(k, e.dim(i))) out.push_back(i);
    return out;
}

FusionRing product_ring(const FusionRing& S, const FusionRing& T) {
    int a = S.rank(), b = T.rank(), r = a * b;
    std::vector<std::string> labels;
    std::vector<int> duality;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            labels.push_back(S.labels()[i] + "." + T.labels()[j]);
            duality.push_back(S.dual(i) * b + T.dual(j));
        }
    std::vector<int> c(static_cast<std::size_t>(r) * r * r, 0);
    for (int i1 = 0; i1 < a; ++i1)
        for (int j1 = 0; j1 < a; ++j1)
            for (int k1 = 0; k1 < a; ++k1) {
                int s = S(i1, j1, k1);
                if (!s) continue;
                for (int i2 = 0; i2 < b; ++i2)
                    for (int j2 = 0; j2 < b; ++j2)
                        for (int k2 = 0; k2 < b; ++k2) {
                            int t = T(i2, j2, k2);
                            if (!t) continue;
                            std::size_t idx = (static_cast<std::size_t>(i1 * b + i2) * r + (j1 * b + j2)) * r + (k1 * b + k2);
                            c[idx] = s * t;
                        }
            }
    return FusionRing(std::move(labels), std::move(duality), std::move(c));
}

namespace {

FusionRing cyclic_group_ring(int n) {
    std::vector<std::string> labels;
    std::vector<int> duality;
    std::vector<int> c(static_cast<std::size_t>(n) * n * n, 0);
    for (int i = 0; i < n; ++i) {
        labels.push_back(i == 0 ? "1" : "g^" + std::to_string(i));
        duality.push_back((n - i) % n);
        for (int j = 0; j < n; ++j) c[(static_cast<std::size_t>(i) * n + j) * n + (i + j) % n] = 1;
    }
    return FusionRing(std::move(labels), std::move(duality), std::move(c));
}

}  // namespace

FusionRing group_ring_cyclic(const std::vector<int>& orders) {
    if (orders.empty()) return FusionRing();
    FusionRing r = cyclic_group_ring(orders[0]);
    for (std::size_t i = 1; i < orders.size(); ++i) r = product_ring(r, cyclic_group_ring(orders[i]));
    return r;
}

FusionRing fibonacci_ring() {
    // X^2 = 1 + X
    return FusionRing({"1", "X"}, {0, 1}, {1, 0, 0, 1, 0, 1, 1, 1});
}

FusionRing ising_ring() {
    // basis 1, X, Y with X^2 = 1 + Y, Y^2 = 1, XY = YX = X
    std::vector<int> c(27, 0);
    auto set = [&](int i, int j, int k) { c[(i * 3 + j) * 3 + k] = 1; };
    for (int j = 0; j < 3; ++j) set(0, j, j), set(j, 0, j);
    set(1, 1, 0);
    set(1, 1, 2);
    set(2, 2, 0);
    set(1, 2, 1);
    set(2, 1, 1);
    return FusionRing({"1", "X", "Y"}, {0, 1, 2}, std::move(c));
}

}  // namespace fusionforge
