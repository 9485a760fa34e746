#include "support/corpus.hpp"

#include <algorithm>
#include <set>

#include "fusionforge/modular_data.hpp"
#include "fusionforge/quantum_group.hpp"

namespace fusionforge::testing {

std::vector<NamedRing> abelian_group_rings(int max_order) {
    // invariant factor decompositions, each factor dividing the next
    std::vector<std::vector<int>> groups;
    std::vector<int> current;
    auto extend = [&](auto&& self, int remaining, int last) -> void {
        if (remaining == 1) {
            groups.push_back(current);
            return;
        }
        for (int d = 2; d <= remaining; ++d) {
            if (remaining % d != 0 || (last > 0 && d % last != 0)) continue;
            current.push_back(d);
            self(self, remaining / d, d);
            current.pop_back();
        }
    };
    std::vector<NamedRing> out;
    for (int n = 1; n <= max_order; ++n) {
        groups.clear();
        extend(extend, n, 0);
        for (const auto& g : groups) {
            std::string name = "Z";
            if (g.empty()) name = "trivial";
            for (std::size_t i = 0; i < g.size(); ++i) name += (i ? "xZ" : "") + std::to_string(g[i]);
            out.push_back({name, group_ring_cyclic(g)});
        }
    }
    return out;
}

FusionRing ring_S() { return ising_ring(); }
FusionRing ring_T() { return fibonacci_ring(); }
FusionRing ring_S_times_T() { return product_ring(ring_S(), ring_T()); }

std::vector<NamedRing> verlinde_rings() {
    const std::tuple<char, int, int> cats[] = {{'A', 1, 1}, {'A', 1, 2}, {'A', 1, 3}, {'A', 1, 4}, {'A', 1, 5},
                                               {'A', 2, 1}, {'A', 2, 2}, {'C', 2, 1}, {'C', 2, 2}, {'G', 2, 1},
                                               {'G', 2, 2}, {'B', 3, 1}, {'D', 4, 1}};
    std::vector<NamedRing> out;
    for (auto [t, n, k] : cats) {
        CategoryHandle c = make_category(t, n, k);
        out.push_back({"K(" + c.name() + ")", grothendieck_ring(modular_data(c))});
    }
    return out;
}

std::vector<NamedRing> full_corpus() {
    auto out = abelian_group_rings();
    out.push_back({"Fibonacci", fibonacci_ring()});
    out.push_back({"Ising", ising_ring()});
    out.push_back({"S", ring_S()});
    out.push_back({"T", ring_T()});
    out.push_back({"SxT", ring_S_times_T()});
    for (auto& v : verlinde_rings()) out.push_back(std::move(v));
    return out;
}

std::optional<std::vector<int>> ring_isomorphism(const FusionRing& a, const FusionRing& b) {
    const int r = a.rank();
    if (b.rank() != r) return std::nullopt;
    std::vector<int> p(r, -1);
    std::vector<bool> used(r, false);
    p[0] = 0;
    used[0] = true;
    // constants among the first m assigned elements must agree
    auto consistent = [&](int m) {
        for (int i = 0; i <= m; ++i)
            for (int j = 0; j <= m; ++j)
                for (int k = 0; k <= m; ++k)
                    if ((i == m || j == m || k == m) && a(i, j, k) != b(p[i], p[j], p[k])) return false;
        return a.dual(m) > m || p[a.dual(m)] == b.dual(p[m]);
    };
    auto extend = [&](auto&& self, int m) -> bool {
        if (m == r) return true;
        for (int c = 1; c < r; ++c) {
            if (used[c]) continue;
            p[m] = c;
            used[c] = true;
            if (consistent(m) && self(self, m + 1)) return true;
            used[c] = false;
        }
        p[m] = -1;
        return false;
    };
    if (!extend(extend, 1)) return std::nullopt;
    return p;
}

namespace {

CycElem total_of(const EmbeddedRing& e, const BasisSet& s) {
    CycElem t(0);
    for (int i : s) t += e.dim(i) * e.dim(i);
    return t;
}

std::string idx(std::initializer_list<int> v) {
    std::string s = "(";
    for (int x : v) s += (s.size() > 1 ? "," : "") + std::to_string(x);
    return s + ")";
}

}  // namespace

std::string check_fpdim_homomorphism(const EmbeddedRing& e) {
    const FusionRing& r = e.ring;
    for (int i = 0; i < r.rank(); ++i) {
        if (e.dim(r.dual(i)) != e.dim(i)) return "FPdim of dual differs at " + idx({i});
        bool pointed = e.dim(i) == CycElem(1);
        auto pt = pointed_subring(r);
        if (pointed != std::binary_search(pt.begin(), pt.end(), i)) return "d = 1 does not match invertibility at " + idx({i});
        if (e.dims[i].approx() < 1 - 1e-12) return "dimension below 1 at " + idx({i});
        for (int j = 0; j < r.rank(); ++j) {
            CycElem rhs(0);
            for (int k = 0; k < r.rank(); ++k)
                if (r(i, j, k)) rhs += CycElem(r(i, j, k)) * e.dim(k);
            if (e.dim(i) * e.dim(j) != rhs) return "d_i d_j != sum c d_k at " + idx({i, j});
        }
    }
    return {};
}

std::string check_squares_in_K0(const EmbeddedRing& e) {
    SubfieldHandle k0 = K0_of(e);
    for (int i = 0; i < e.ring.rank(); ++i)
        if (!contains(k0, e.dim(i) * e.dim(i))) return "d^2 outside K0 at " + idx({i});
    return {};
}

std::string check_subring_dims_in_K0(const EmbeddedRing& e) {
    const FusionRing& r = e.ring;
    SubfieldHandle k0 = K0_of(e);
    std::set<BasisSet> subrings{pointed_subring(r), adjoint_subring(r)};
    for (int i = 0; i < r.rank(); ++i) subrings.insert(subring_generated_by(r, {i}));
    std::set<SubfieldHandle> fields{rational_field(), k0, K1_of(e)};
    for (int i = 0; i < r.rank(); ++i) fields.insert(field_generated_by(e.dim(i)));
    for (const auto& k : fields) {
        BasisSet s = subring_R_K(e, k);
        if (!is_subring(r, s)) return "R_K is not a subring for K = " + describe(k);
        subrings.insert(s);
    }
    for (const auto& s : subrings)
        if (!contains(k0, total_of(e, s))) return "subring of size " + std::to_string(s.size()) + " has FPdim outside K0";
    return {};
}

std::string check_main_lemma_exhaustive(const EmbeddedRing& e, int max_coef) {
    // x ranges over {0..max_coef}^r in mixed radix.  Both parts of any
    // decomposition x = x1 + x2 lie below x, and every y <= x is reached from
    // x through a chain x - e_i, so K(y) <= K(x) for all such y follows from
    // the covering pairs (x - e_i, e_i), which are checked one by one.
    const int r = e.ring.rank();
    const u64 base = static_cast<u64>(max_coef) + 1;
    u64 count = 1;
    for (int i = 0; i < r; ++i) count *= base;
    std::vector<CycElem> dim(count);
    std::vector<SubfieldHandle> field(count);
    std::vector<SubfieldHandle> basis_field(r);
    for (int i = 0; i < r; ++i) basis_field[i] = field_generated_by(e.dim(i));
    for (u64 code = 1; code < count; ++code) {
        u64 rest = code, place = 1;
        int first = 0;
        while (rest % base == 0) rest /= base, place *= base, ++first;
        dim[code] = dim[code - place] + e.dim(first);
        field[code] = field_generated_by(dim[code]);
        u64 digits = code;
        u64 p = 1;
        for (int i = 0; i < r; ++i, digits /= base, p *= base) {
            if (digits % base == 0) continue;
            if (!subfield_leq(field[code - p], field[code]) || !subfield_leq(basis_field[i], field[code]))
                return "main lemma fails below x = code " + std::to_string(code);
        }
    }
    // the library entry point on every decomposition of small elements
    if (count <= 81) {
        for (u64 code = 0; code < count; ++code)
            for (u64 sub = 0; sub < count; ++sub) {
                std::vector<Rational> x1(r), x2(r);
                bool below = true;
                u64 a = code, b = sub;
                for (int i = 0; i < r; ++i, a /= base, b /= base) {
                    if (b % base > a % base) below = false;
                    x1[i] = static_cast<long>(b % base);
                    x2[i] = static_cast<long>(a % base) - static_cast<long>(b % base);
                }
                if (below && !check_main_lemma(e, x1, x2)) return "check_main_lemma false at code " + std::to_string(code);
            }
    }
    return {};
}

std::string check_dimensional_grading(const EmbeddedRing& e) {
    const FusionRing& r = e.ring;
    DimensionalGrading dg = dimensional_grading(e);
    const auto& g = dg.partition;
    if (!g.is_elementary_abelian_2()) return "grading group " + g.group_name() + " is not elementary abelian 2";
    if (g.group_order() != field_degree(dg.K1) / field_degree(dg.K0)) return "grading group order differs from [K1:K0]";
    for (const auto& comp : g.components)
        if (comp.empty()) return "empty component";
    for (int i = 0; i < r.rank(); ++i) {
        bool trivial = g.component_of[i] == 0;
        if (trivial != contains(dg.K0, e.dim(i))) return "trivial component differs from {d in K0} at " + idx({i});
        if (g.component_of[r.dual(i)] != g.component_of[i]) return "duality moves component at " + idx({i});
        for (int j = 0; j < r.rank(); ++j)
            for (int k = 0; k < r.rank(); ++k)
                if (r(i, j, k) && g.product[g.component_of[i]][g.component_of[j]] != g.component_of[k])
                    return "grading not closed at " + idx({i, j, k});
    }
    return {};
}

std::string check_universal_coarsening(const EmbeddedRing& e) {
    GradingPartition u = universal_grading(e.ring);
    DimensionalGrading dg = dimensional_grading(e);
    for (const auto& comp : u.components)
        for (int i : comp)
            if (dg.partition.component_of[i] != dg.partition.component_of[comp.front()])
                return "universal component split by the dimensional grading";
    u64 ratio = field_degree(dg.K1) / field_degree(dg.K0);
    bool cyclic = u.abelian && u.invariant_factors.size() <= 1;
    if (cyclic && ratio > 2) return "cyclic universal grading but [K1:K0] = " + std::to_string(ratio);
    if (u.group_order() % 2 == 1 && ratio != 1) return "odd universal grading but K1 != K0";
    return {};
}

}  // namespace fusionforge::testing
