#include "fusionforge/quantum_group.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace fusionforge {

std::string CategoryHandle::name() const {
    return "C(" + algebra.name() + "," + std::to_string(level) + ")";
}

CategoryHandle make_category(char t, int rank, int level) {
    if (level < 1) throw std::invalid_argument("level must be positive");
    CategoryHandle c;
    c.algebra = build_algebra(t, rank);
    c.level = level;
    c.kappa = level + c.algebra.h_dual;
    c.q = root_of_unity(2 * c.qdim_modulus(), 1);
    return c;
}

std::vector<Weight> weyl_alcove(const CategoryHandle& c) { return weyl_alcove(c.algebra, c.level); }

bool in_alcove(const CategoryHandle& c, const Weight& w) {
    if (static_cast<int>(w.size()) != c.algebra.rank) return false;
    for (int x : w)
        if (x < 0) return false;
    return level_of(c.algebra, w) <= c.level;
}

std::vector<std::pair<int, int>> qdim_exponents(const CategoryHandle& c, const Weight& w) {
    if (!in_alcove(c, w)) throw std::invalid_argument("weight outside the alcove of " + c.name());
    const auto& g = c.algebra;
    std::map<int, int> e;
    Weight shifted = plus_rho(w);
    for (std::size_t r = 0; r < g.positive_roots.size(); ++r) {
        ++e[root_pairing(g, r, shifted)];
        --e[root_pairing(g, r, g.rho)];
    }
    std::vector<std::pair<int, int>> out;
    for (auto [n, k] : e)
        if (k != 0 && n != 1) out.emplace_back(n, k);
    return out;
}

CycElem qdim(const CategoryHandle& c, const Weight& w) {
    u64 m = c.qdim_modulus();
    CycElem num(1), den(1);
    for (auto [n, k] : qdim_exponents(c, w)) {
        CycElem qn = quantum_integer(n, m);
        for (int i = 0; i < std::abs(k); ++i) (k > 0 ? num : den) *= qn;
    }
    return den == CycElem(1) ? num : num / den;
}

double qdim_numeric(const CategoryHandle& c, const Weight& w) {
    double m = static_cast<double>(c.qdim_modulus());
    double logv = 0;
    for (auto [n, k] : qdim_exponents(c, w))
        logv += k * (std::log(std::sin(std::numbers::pi * n / m)) - std::log(std::sin(std::numbers::pi / m)));
    return std::exp(logv);
}

CycElem fpdim_total_category(const CategoryHandle& c) {
    CycElem total(0);
    for (const auto& w : weyl_alcove(c)) {
        CycElem d = qdim(c, w);
        total += d * d;
    }
    return total;
}

namespace {

// Galois conjugates sigma_j of the quantum integers, numerically as
// (log|.|, sign) and exactly as images in F_p under one fixed embedding.
class ConjugateTables {
public:
    explicit ConjugateTables(const CategoryHandle& c)
        : half_(c.qdim_modulus()), order_(2 * half_), units_(units_mod(order_)), index_(order_, -1) {
        for (std::size_t i = 0; i < units_.size(); ++i) index_[units_[i]] = static_cast<int>(i);
        // sigma_u([n]) = sin(pi u n / half) / sin(pi u / half) only sees u n mod order
        log_sin_.resize(order_);
        neg_sin_.resize(order_);
        for (u64 r = 0; r < order_; ++r) {
            double s = std::sin(std::numbers::pi * static_cast<double>(r) / static_cast<double>(half_));
            log_sin_[r] = std::log(std::abs(s));
            neg_sin_[r] = s < 0;
        }
    }

    std::size_t unit_count() const { return units_.size(); }
    const std::vector<u64>& units() const { return units_; }
    std::size_t index_of(u64 l) const { return static_cast<std::size_t>(index_[l % order_]); }
    double log_abs(std::size_t j, u64 n) const { return log_sin_[(units_[j] * n) % order_] - log_sin_[units_[j]]; }
    bool negative(std::size_t j, u64 n) const { return neg_sin_[(units_[j] * n) % order_] != neg_sin_[units_[j]]; }

    void load_prime(u64 p) {
        p_ = p;
        u64 w = 0;
        auto primes = prime_divisors(order_);
        for (u64 a = 2;; ++a) {
            w = powmod(a, (p - 1) / order_, p);
            bool primitive = true;
            for (u64 q : primes)
                if (powmod(w, order_ / q, p) == 1) primitive = false;
            if (primitive) break;
        }
        std::vector<u64> pw(order_);
        pw[0] = 1;
        for (u64 r = 1; r < order_; ++r) pw[r] = mulmod(pw[r - 1], w, p);
        diff_.resize(order_);
        for (u64 r = 0; r < order_; ++r) diff_[r] = (pw[r] + p - pw[(order_ - r) % order_]) % p;
        inv_base_.resize(units_.size());
        for (std::size_t i = 0; i < units_.size(); ++i) inv_base_[i] = diff_[units_[i]];
        batch_invert_(inv_base_, p);
    }

    u64 prime() const { return p_; }
    u64 image(std::size_t j, u64 n) const { return mulmod(diff_[(units_[j] * n) % order_], inv_base_[j], p_); }

private:
    static void batch_invert_(std::vector<u64>& v, u64 p) {
        std::vector<u64> prefix(v.size() + 1, 1);
        for (std::size_t i = 0; i < v.size(); ++i) prefix[i + 1] = mulmod(prefix[i], v[i], p);
        u64 inv = invmod(prefix.back(), p);
        for (std::size_t i = v.size(); i-- > 0;) {
            u64 vi = v[i];
            v[i] = mulmod(inv, prefix[i], p);
            inv = mulmod(inv, vi, p);
        }
    }

    u64 half_;
    u64 order_;
    std::vector<u64> units_;
    std::vector<int> index_;
    std::vector<double> log_sin_;
    std::vector<char> neg_sin_;
    u64 p_ = 0;
    std::vector<u64> diff_;
    std::vector<u64> inv_base_;
};

void batch_invert(std::vector<u64>& v, u64 p) {
    std::vector<u64> prefix(v.size() + 1, 1);
    for (std::size_t i = 0; i < v.size(); ++i) prefix[i + 1] = mulmod(prefix[i], v[i], p);
    u64 inv = invmod(prefix.back(), p);
    for (std::size_t i = v.size(); i-- > 0;) {
        u64 vi = v[i];
        v[i] = mulmod(inv, prefix[i], p);
        inv = mulmod(inv, vi, p);
    }
}

// greedy generating set of a subgroup of (Z/MZ)^x given as a sorted list
std::vector<u64> subgroup_generators(const std::vector<u64>& h, u64 modulus, bool& is_group) {
    std::vector<u64> gens;
    std::vector<char> in_span(modulus, 0);
    std::vector<u64> span{1 % modulus};
    in_span[1 % modulus] = 1;
    for (u64 x : h) {
        if (in_span[x]) continue;
        gens.push_back(x);
        // span is a group; extend by cosets until closed under x
        std::size_t base = span.size();
        u64 y = x;
        while (!in_span[y]) {
            for (std::size_t i = 0; i < base; ++i) {
                u64 z = mulmod(span[i], y, modulus);
                in_span[z] = 1;
                span.push_back(z);
            }
            y = mulmod(y, x, modulus);
        }
    }
    std::sort(span.begin(), span.end());
    is_group = span == h;
    return gens;
}

struct ConjugateData {
    std::vector<double> logs;   // per unit
    std::vector<char> negative;
};

ConjugateData numeric_conjugates(const ConjugateTables& t, const std::vector<std::pair<int, int>>& e) {
    ConjugateData d;
    d.logs.assign(t.unit_count(), 0.0);
    d.negative.assign(t.unit_count(), 0);
    for (std::size_t j = 0; j < t.unit_count(); ++j) {
        double s = 0;
        bool neg = false;
        for (auto [n, k] : e) {
            s += k * t.log_abs(j, static_cast<u64>(n));
            if (t.negative(j, static_cast<u64>(n)) && (k % 2 != 0)) neg = !neg;
        }
        d.logs[j] = s;
        d.negative[j] = neg;
    }
    return d;
}

std::vector<u64> exact_images(const ConjugateTables& t, const std::vector<std::pair<int, int>>& e) {
    u64 p = t.prime();
    std::vector<u64> num(t.unit_count(), 1), den(t.unit_count(), 1);
    for (std::size_t j = 0; j < t.unit_count(); ++j)
        for (auto [n, k] : e) {
            u64 x = t.image(j, static_cast<u64>(n));
            for (int i = 0; i < std::abs(k); ++i) {
                if (k > 0) num[j] = mulmod(num[j], x, p);
                else den[j] = mulmod(den[j], x, p);
            }
        }
    batch_invert(den, p);
    for (std::size_t j = 0; j < t.unit_count(); ++j) num[j] = mulmod(num[j], den[j], p);
    return num;
}

bool fixes_all(const ConjugateTables& t, const std::vector<u64>& img, u64 l) {
    for (std::size_t j = 0; j < t.unit_count(); ++j)
        if (img[t.index_of(t.units()[j] * l)] != img[j]) return false;
    return true;
}

// exact stabilizer, given a candidate set known to contain it
std::vector<u64> confirm(const ConjugateTables& t, const std::vector<std::vector<u64>>& images_per_prime,
                         const std::vector<u64>& candidate, u64 modulus) {
    auto fixes = [&](u64 l) {
        for (const auto& img : images_per_prime)
            if (!fixes_all(t, img, l)) return false;
        return true;
    };
    bool is_group = false;
    auto gens = subgroup_generators(candidate, modulus, is_group);
    if (is_group && std::all_of(gens.begin(), gens.end(), fixes)) return candidate;
    std::vector<u64> out;
    for (u64 l : candidate)
        if (fixes(l)) out.push_back(l);
    return out;
}

std::vector<u64> numeric_candidate(const ConjugateTables& t, const std::vector<double>& logs,
                                   const std::vector<char>& negative) {
    std::size_t one = t.index_of(1);
    std::vector<u64> h;
    for (std::size_t j = 0; j < t.unit_count(); ++j)
        if (negative[j] == negative[one] && std::abs(logs[j] - logs[one]) < 1e-8) h.push_back(t.units()[j]);
    return h;
}

DimensionFields fields_for(const CategoryHandle& c, std::vector<Weight> weights) {
    ConjugateTables tables(c);
    u64 modulus = 2 * c.qdim_modulus();
    std::size_t one = tables.index_of(1);

    std::vector<std::vector<std::pair<int, int>>> exps;
    std::vector<ConjugateData> numeric;
    double max_log = 0;
    for (const auto& w : weights) {
        exps.push_back(qdim_exponents(c, w));
        numeric.push_back(numeric_conjugates(tables, exps.back()));
        max_log = std::max(max_log, numeric.back().logs[one]);
    }

    // total dimension conjugates, scaled by the largest simple dimension
    std::vector<double> total(tables.unit_count(), 0.0);
    for (const auto& d : numeric)
        for (std::size_t j = 0; j < tables.unit_count(); ++j) total[j] += std::exp(2 * (d.logs[j] - max_log));
    double total_log = std::log(total[one]) + 2 * max_log;

    // |sigma(x) - x| <= 2x for x a dimension or the total dimension
    double bits = (std::max(max_log, total_log) + std::log(2.0)) / std::log(2.0) + 2;
    int prime_count = std::max(1, static_cast<int>(std::ceil(bits / 60.0)));
    auto primes = split_primes(modulus, prime_count);

    std::vector<std::vector<std::vector<u64>>> images(weights.size());
    std::vector<std::vector<u64>> total_images;
    for (u64 p : primes) {
        tables.load_prime(p);
        std::vector<u64> tot(tables.unit_count(), 0);
        for (std::size_t i = 0; i < weights.size(); ++i) {
            images[i].push_back(exact_images(tables, exps[i]));
            const auto& img = images[i].back();
            for (std::size_t j = 0; j < tables.unit_count(); ++j) tot[j] = (tot[j] + mulmod(img[j], img[j], p)) % p;
        }
        total_images.push_back(std::move(tot));
    }

    DimensionFields out;
    std::map<std::vector<u64>, SubfieldHandle> cache;
    auto handle = [&](const std::vector<u64>& h) {
        auto it = cache.find(h);
        if (it == cache.end()) it = cache.emplace(h, subfield_from_stabilizer(modulus, h)).first;
        return it->second;
    };

    std::vector<double> total_logs(tables.unit_count());
    for (std::size_t j = 0; j < tables.unit_count(); ++j) total_logs[j] = std::log(total[j]);
    // confirmation only consults the unit indexing, shared by every prime
    std::vector<std::vector<u64>> stabilizers(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i)
        stabilizers[i] = confirm(tables, images[i], numeric_candidate(tables, numeric[i].logs, numeric[i].negative),
                                 modulus);
    auto total_stab = confirm(tables, total_images,
                              numeric_candidate(tables, total_logs, std::vector<char>(tables.unit_count(), 0)), modulus);

    std::vector<u64> meet = tables.units();
    for (std::size_t i = 0; i < weights.size(); ++i) {
        out.per_weight.push_back(handle(stabilizers[i]));
        std::vector<u64> next;
        std::set_intersection(meet.begin(), meet.end(), stabilizers[i].begin(), stabilizers[i].end(),
                              std::back_inserter(next));
        meet = std::move(next);
    }
    out.K1 = handle(meet);
    out.K0 = handle(total_stab);
    out.weights = std::move(weights);
    return out;
}

}  // namespace

DimensionFields dimension_fields(const CategoryHandle& c) { return fields_for(c, weyl_alcove(c)); }

SubfieldHandle K0_field(const CategoryHandle& c) { return dimension_fields(c).K0; }
SubfieldHandle K1_field(const CategoryHandle& c) { return dimension_fields(c).K1; }

SubfieldHandle K_lambda(const CategoryHandle& c, const Weight& w) {
    if (!in_alcove(c, w)) throw std::invalid_argument("weight outside the alcove of " + c.name());
    return fields_for(c, {w}).per_weight.front();
}

int dimensional_component(const CategoryHandle& c, const Weight& w) {
    const auto& g = c.algebra;
    int n = g.rank;
    long s = 0;
    switch (g.type_letter) {
    case 'A': case 'C':
        for (int j = 0; j < n; ++j) s += static_cast<long>(j + 1) * w[j];
        break;
    case 'B':
        s = w[n - 1];
        break;
    case 'D':
        s = w[n - 2] + w[n - 1];
        break;
    case 'E':
        if (n == 7) s = w[1] + w[4] + w[6];  // nodes outside the root lattice
        break;
    default:
        break;
    }
    return static_cast<int>(s % 2);
}

SubfieldHandle sqrt_field(long d) { return field_generated_by(sqrt_rational(Rational(d))); }

SubfieldHandle field_of_cos_sum(const std::vector<std::pair<i64, i64>>& terms, u64 denominator) {
    CycElem x(0);
    for (auto [coef, a] : terms) x += CycElem(coef) * cos_pi_frac(a, denominator);
    return field_generated_by(x);
}

std::vector<int> exceptional_levels(char t, int n) {
    switch (t) {
    case 'A': return {1};
    case 'B': return {1, 2};
    case 'C': return {1};
    case 'D': return {1, 2};
    case 'E': return n == 6 ? std::vector<int>{1, 3} : n == 7 ? std::vector<int>{1, 2, 3} : std::vector<int>{1, 2, 3, 5};
    case 'F': return {1, 3, 4};
    case 'G': return {1, 3};
    }
    return {};
}

bool is_exceptional_level(char t, int n, int k) {
    auto v = exceptional_levels(t, n);
    return std::find(v.begin(), v.end(), k) != v.end();
}

FieldPair figure_B_prediction(char t, int n, int k) {
    if (!valid_type(t, n)) throw std::invalid_argument("invalid simple type");
    if (is_exceptional_level(t, n, k))
        throw ExceptionalLevel("exceptional level; consult the exception table");
    u64 kap = static_cast<u64>(k + dual_coxeter_number(t, n));
    auto Q = [](u64 m) { return real_cyclotomic(m); };
    switch (t) {
    case 'A':
        if (n % 2 == 1 && kap % 2 == 0) return {Q(kap), Q(2 * kap)};
        return {Q(kap), Q(kap)};
    case 'B':
        if (n % 2 == 1) return {Q(2 * kap), Q(4 * kap)};
        return {Q(2 * kap), Q(2 * kap)};
    case 'C':
        return {Q(2 * kap), Q(2 * kap)};
    case 'D':
        if ((n % 4 == 2 || n % 4 == 3) && kap % 2 == 0) return {Q(kap), Q(2 * kap)};
        return {Q(kap), Q(kap)};
    case 'E':
        if (n == 7 && kap % 2 == 0) return {Q(kap), Q(2 * kap)};
        return {Q(kap), Q(kap)};
    case 'F':
        return {Q(2 * kap), Q(2 * kap)};
    case 'G':
        return {Q(3 * kap), Q(3 * kap)};
    }
    throw std::invalid_argument("invalid simple type");
}

FieldPair figure_B_prediction(const CategoryHandle& c) {
    return figure_B_prediction(c.algebra.type_letter, c.algebra.rank, c.level);
}

FieldPair exceptional_level_fields(char t, int n, int k) {
    if (!valid_type(t, n) || !is_exceptional_level(t, n, k))
        throw std::invalid_argument("not an exceptional level");
    const SubfieldHandle Q = rational_field();
    switch (t) {
    case 'A':
        return {Q, Q};
    case 'B':
        return k == 1 ? FieldPair{Q, sqrt_field(2)} : FieldPair{Q, sqrt_field(2 * n + 1)};
    case 'C': {
        u64 kap = static_cast<u64>(n + 2);
        return {real_cyclotomic(kap), real_cyclotomic(n % 2 == 0 ? 2 * kap : kap)};
    }
    case 'D':
        return k == 1 ? FieldPair{Q, Q} : FieldPair{Q, sqrt_field(n)};
    case 'E':
        if (k == 1) return {Q, Q};
        if (n == 6) return {sqrt_field(5), sqrt_field(5)};
        if (n == 7 && k == 2) return {sqrt_field(5), field_join(sqrt_field(2), sqrt_field(5))};
        if (n == 7) return {sqrt_field(21), sqrt_field(21)};
        if (k == 2) return {Q, sqrt_field(2)};
        if (k == 3) return {real_cyclotomic(11), real_cyclotomic(11)};
        {
            auto f = field_of_cos_sum({{1, 2}, {1, 12}}, 35);
            return {f, f};
        }
    case 'F':
        if (k == 1) return {sqrt_field(5), sqrt_field(5)};
        if (k == 3) return {sqrt_field(6), sqrt_field(6)};
        {
            auto f = field_of_cos_sum({{1, 2}, {-1, 3}}, 13);
            return {f, f};
        }
    case 'G':
        return k == 1 ? FieldPair{sqrt_field(5), sqrt_field(5)} : FieldPair{sqrt_field(21), sqrt_field(21)};
    }
    throw std::invalid_argument("not an exceptional level");
}

FieldPair expected_dimension_fields(char t, int n, int k) {
    return is_exceptional_level(t, n, k) ? exceptional_level_fields(t, n, k) : figure_B_prediction(t, n, k);
}

const std::vector<ClosedFormDefect>& closed_form_defects() {
    static const std::vector<ClosedFormDefect> defects = {
        {'C', 2, 2, {rational_field(), sqrt_field(5)}},
        {'G', 2, 4, {sqrt_field(6), sqrt_field(6)}},
    };
    return defects;
}

FieldPair reference_dimension_fields(char t, int n, int k) {
    for (const auto& d : closed_form_defects())
        if (d.type_letter == t && d.rank == n && d.level == k) return d.computed;
    return expected_dimension_fields(t, n, k);
}

RootOfUnity make_root_of_unity(const mpq_class& fraction) {
    mpq_class f = fraction;
    f.canonicalize();
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), f.get_num_mpz_t(), f.get_den_mpz_t());
    f -= fl;
    return {f};
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    return make_root_of_unity(a.fraction + b.fraction);
}

CycElem RootOfUnity::value() const {
    return root_of_unity(fraction.get_den().get_ui(), fraction.get_num().get_si());
}

RootOfUnity central_charge_formula(const CategoryHandle& c) {
    return make_root_of_unity(mpq_class(mpz_class(c.level * c.algebra.dim_g), mpz_class(8 * c.kappa)));
}

RootOfUnity central_charge_formula(const std::vector<CategoryHandle>& factors) {
    RootOfUnity r = make_root_of_unity(0);
    for (const auto& c : factors) r = r * central_charge_formula(c);
    return r;
}

}  // namespace fusionforge
