#include "fusionforge/modular_data.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace fusionforge {

namespace {

using Cx = std::complex<double>;
using CxMatrix = std::vector<std::vector<Cx>>;

CxMatrix cx_mul(const CxMatrix& a, const CxMatrix& b) {
    std::size_t n = a.size();
    CxMatrix c(n, std::vector<Cx>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

double cx_dist(const CxMatrix& a, const CxMatrix& b, Cx scale) {
    double err = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) err = std::max(err, std::abs(a[i][j] - scale * b[i][j]));
    return err;
}

struct BigComplex {
    BigFloat re, im;
};

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

BigComplex conj(const BigComplex& a) {
    BigFloat z(a.im.prec());
    return {a.re, z - a.im};
}

// t(lambda) = sum_j j l_j, 1-based
long type_a_class(const Weight& w) {
    long t = 0;
    for (std::size_t j = 0; j < w.size(); ++j) t += static_cast<long>(j + 1) * w[j];
    return t;
}

}  // namespace

std::string weight_label(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

u64 ModularData::t_order() const {
    u64 o = 1;
    for (const auto& t : twist_values) o = lcm_u(o, t.order());
    return o;
}

RootOfUnity twist_value(const CategoryHandle& c, const Weight& w) {
    const auto& g = c.algebra;
    Weight shifted = w;
    for (std::size_t i = 0; i < w.size(); ++i) shifted[i] = w[i] + 2;
    i64 num = scaled_inner(g, w, shifted);
    i64 den = 2 * static_cast<i64>(c.qdim_modulus()) * g.form_denominator;
    return make_root_of_unity(mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))));
}

CycElem twist(const CategoryHandle& c, const Weight& w) { return twist_value(c, w).value(); }

std::vector<CycElem> t_matrix(const CategoryHandle& c) {
    std::vector<CycElem> out;
    for (const auto& w : weyl_alcove(c)) out.push_back(twist(c, w));
    return out;
}

CycElem gauss_sum(const CategoryHandle& c) {
    CycElem p(0);
    for (const auto& w : weyl_alcove(c)) {
        CycElem d = qdim(c, w);
        p += twist(c, w) * d * d;
    }
    return p;
}

CycMatrix s_matrix(const CategoryHandle& c, int weyl_cap) { return modular_data(c, weyl_cap).S; }

ModularData modular_data(const CategoryHandle& c, int weyl_cap) {
    const auto& g = c.algebra;
    if (g.rank > weyl_cap)
        throw std::length_error("Weyl group of " + g.name() + " exceeds rank cap " + std::to_string(weyl_cap));
    ModularData md;
    md.category = c;
    md.weights = weyl_alcove(c);
    std::size_t r = md.weights.size();
    u64 n = c.qdim_modulus() * static_cast<u64>(g.form_denominator);

    // sum over w(lambda + rho) against G (mu + rho), binned by exponent
    std::vector<Weight> paired(r);
    for (std::size_t j = 0; j < r; ++j) {
        Weight x = plus_rho(md.weights[j]);
        paired[j].assign(g.rank, 0);
        for (int a = 0; a < g.rank; ++a)
            for (int b = 0; b < g.rank; ++b) paired[j][a] += g.scaled_form[a][b] * x[b];
    }
    md.weyl_sums.assign(r, std::vector<CycElem>(r));
    const i64 nn = static_cast<i64>(n);
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<std::vector<i64>> bins(r, std::vector<i64>(n, 0));
        for_each_orbit_point(g, plus_rho(md.weights[i]), [&](const Weight& u, int sign) {
            for (std::size_t j = 0; j < r; ++j) {
                i64 s = 0;
                for (int a = 0; a < g.rank; ++a) s += static_cast<i64>(u[a]) * paired[j][a];
                bins[j][static_cast<u64>(mod_floor(-s, nn))] += sign;
            }
        });
        for (std::size_t j = 0; j < r; ++j) {
            std::vector<mpz_class> dense(n);
            for (u64 e = 0; e < n; ++e) dense[e] = static_cast<long>(bins[j][e]);
            md.weyl_sums[i][j] = CycElem::from_dense(n, std::move(dense));
        }
    }

    CycElem norm(0);
    for (std::size_t j = 0; j < r; ++j) norm += md.weyl_sums[0][j] * md.weyl_sums[0][j].conj();
    if (!norm.is_rational()) throw std::logic_error("Weyl sums are not orthogonal");
    md.weyl_norm = norm.rational_value();

    auto s00 = md.weyl_sums[0][0].approx();
    CycElem i4 = root_of_unity(4, 1);
    if (std::abs(s00.real()) > std::abs(s00.imag())) md.phase = s00.real() > 0 ? CycElem(1) : CycElem(-1);
    else md.phase = s00.imag() > 0 ? -i4 : i4;

    CycElem scale = md.phase * sqrt_rational(1 / md.weyl_norm);
    md.S.assign(r, std::vector<CycElem>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) md.S[i][j] = scale * md.weyl_sums[i][j];

    md.total_dimension = CycElem(0);
    md.gauss_sum_p = CycElem(0);
    for (const auto& w : md.weights) {
        md.qdims.push_back(qdim(c, w));
        md.twist_values.push_back(twist_value(c, w));
        md.twists.push_back(md.twist_values.back().value());
        CycElem d2 = md.qdims.back() * md.qdims.back();
        md.total_dimension += d2;
        md.gauss_sum_p += md.twists.back() * d2;
    }
    md.T_diag = md.twists;
    md.central_charge = central_charge_formula(c);
    return md;
}

CycElem verlinde_eigenvalue(const ModularData& md, std::size_t lambda, std::size_t mu) {
    return md.weyl_sums[lambda][mu] / md.weyl_sums[0][mu];
}

SubfieldHandle verlinde_field(const ModularData& md) {
    SubfieldHandle f = rational_field();
    for (std::size_t i = 1; i < md.weights.size(); ++i)
        for (std::size_t j = 0; j < md.weights.size(); ++j)
            f = field_join(f, field_generated_by(verlinde_eigenvalue(md, i, j)));
    return f;
}

std::optional<VerlindePrediction> verlinde_field_prediction(const CategoryHandle& c) {
    char t = c.algebra.type_letter;
    int n = c.algebra.rank, k = c.level;
    u64 kap = static_cast<u64>(c.kappa);
    if (t == 'E' && n == 6)
        return k == 1 ? VerlindePrediction{cyclotomic_field(3), false, cyclotomic_field(3)}
                      : VerlindePrediction{cyclotomic_field(3 * kap), true, real_cyclotomic(3 * kap)};
    if (is_exceptional_level(t, n, k)) return std::nullopt;
    if (t == 'A' && n > 1) {
        if (k <= 2) return std::nullopt;
        auto f = cyclotomic_field(static_cast<u64>(n + 1) * kap);
        return VerlindePrediction{f, false, f};
    }
    if (t == 'D' && n % 2 == 1) return VerlindePrediction{cyclotomic_field(4 * kap), true, real_cyclotomic(4 * kap)};
    auto k1 = figure_B_prediction(c).K1;
    return VerlindePrediction{k1, false, k1};
}

ModularChecks check_modular_data(const ModularData& md) {
    ModularChecks ch;
    std::size_t r = md.weights.size();
    const auto& W = md.weyl_sums;

    ch.symmetric = true;
    for (std::size_t i = 0; i < r && ch.symmetric; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (!(md.S[i][j] == md.S[j][i])) {
                ch.symmetric = false;
                break;
            }

    // S S^dagger = W W^dagger / weyl_norm, since |phase| = 1
    ch.unitary = true;
    CycElem norm(md.weyl_norm);
    for (std::size_t i = 0; i < r && ch.unitary; ++i)
        for (std::size_t j = i; j < r; ++j) {
            CycElem s(0);
            for (std::size_t k = 0; k < r; ++k) s += W[i][k] * W[j][k].conj();
            if (!(s == (i == j ? norm : CycElem(0)))) {
                ch.unitary = false;
                break;
            }
        }

    ch.first_row_positive = true;
    for (std::size_t j = 0; j < r; ++j) {
        const CycElem& s = md.S[0][j];
        if (!(s == s.conj()) || !(s.approx().real() > 0)) ch.first_row_positive = false;
    }

    ch.eigenvalue_is_qdim = true;
    for (std::size_t i = 0; i < r; ++i)
        if (!(verlinde_eigenvalue(md, i, 0) == md.qdims[i])) ch.eigenvalue_is_qdim = false;

    CycElem xi = md.central_charge.value();
    ch.gauss_exact = md.gauss_sum_p * md.gauss_sum_p == md.total_dimension * xi * xi;
    {
        long prec = 128;
        auto p = to_float(md.gauss_sum_p, prec);
        auto d = to_float(md.total_dimension, prec);
        BigFloat root = sqrt(d.re);
        auto x = to_float(xi, prec);
        BigFloat dr = p.re / root - x.re, di = p.im / root - x.im;
        ch.gauss_error = std::hypot(dr.to_double(), di.to_double());
    }

    // (ST)^3 = xi S^2, trying the twist or its inverse on the diagonal
    CxMatrix s(r, std::vector<Cx>(r)), st(r, std::vector<Cx>(r)), sti(r, std::vector<Cx>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            s[i][j] = md.S[i][j].approx();
            Cx t = md.twists[j].approx();
            st[i][j] = s[i][j] * t;
            sti[i][j] = s[i][j] / t;
        }
    auto s2 = cx_mul(s, s);
    Cx x = xi.approx();
    double e1 = cx_dist(cx_mul(cx_mul(st, st), st), s2, x);
    double e2 = cx_dist(cx_mul(cx_mul(sti, sti), sti), s2, std::conj(x));
    if (e1 < 1e-9 || e1 <= e2) {
        ch.st_error = e1;
        ch.st_convention = "(ST)^3 = xi S^2";
    } else {
        ch.st_error = e2;
        ch.st_convention = "(ST^-1)^3 = conj(xi) S^2";
    }
    ch.st_relation = ch.st_error < 1e-9;

    ch.distinct_rows = true;
    for (std::size_t i = 0; i < r && ch.distinct_rows; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (W[i] == W[j]) {
                ch.distinct_rows = false;
                break;
            }
    return ch;
}

bool check_type_a_eigenvalue_classes(const ModularData& md) {
    const auto& c = md.category;
    if (c.algebra.type_letter != 'A') throw std::invalid_argument("type A only");
    u64 n1 = static_cast<u64>(c.algebra.rank + 1);
    u64 kap = static_cast<u64>(c.kappa);
    auto target = cyclotomic_field(kap);
    for (std::size_t i = 0; i < md.weights.size(); ++i)
        for (std::size_t j = 0; j < md.weights.size(); ++j) {
            if (md.weyl_sums[i][j].is_zero()) continue;
            long e = type_a_class(md.weights[i]) * type_a_class(plus_rho(md.weights[j]));
            CycElem x = verlinde_eigenvalue(md, i, j) * root_of_unity(n1 * kap, -e);
            if (!contains(target, x)) return false;
        }
    return true;
}

FusionRing grothendieck_ring(const ModularData& md, long precision) {
    std::size_t r = md.weights.size();
    std::vector<std::vector<BigComplex>> w(r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            auto f = to_float(md.weyl_sums[i][j], precision);
            w[i].push_back({f.re, f.im});
        }
    BigFloat norm(md.weyl_norm, precision);
    BigFloat tol(std::ldexp(1.0, -40), precision);

    std::vector<std::string> labels;
    std::vector<int> duality;
    for (const auto& x : md.weights) labels.push_back(weight_label(x));
    for (const auto& x : md.weights) {
        Weight d = dual_weight(md.category.algebra, x);
        duality.push_back(static_cast<int>(std::find(md.weights.begin(), md.weights.end(), d) - md.weights.begin()));
    }

    // per sigma: W_{lambda sigma} W_{mu sigma} / W_{0 sigma}, then pair with conj(W_{nu sigma})
    std::vector<int> constants(r * r * r);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            std::vector<BigComplex> ab;
            for (std::size_t s = 0; s < r; ++s) ab.push_back(w[a][s] * w[b][s] / w[0][s]);
            for (std::size_t c = 0; c < r; ++c) {
                BigComplex acc{BigFloat(precision), BigFloat(precision)};
                for (std::size_t s = 0; s < r; ++s) {
                    BigComplex t = ab[s] * conj(w[c][s]);
                    acc.re = acc.re + t.re;
                    acc.im = acc.im + t.im;
                }
                BigFloat re = acc.re / norm, im = acc.im / norm;
                mpz_class v = round_to_integer(re);
                BigFloat err = re - BigFloat(v, precision);
                if (tol < abs(err) || tol < abs(im) || v < 0)
                    throw std::runtime_error("non-integral fusion coefficient at " + labels[a] + " " + labels[b] +
                                             " " + labels[c] + ": " + re.to_string(20));
                constants[(a * r + b) * r + c] = static_cast<int>(v.get_si());
            }
        }
    return FusionRing(std::move(labels), std::move(duality), std::move(constants));
}

}  // namespace fusionforge
