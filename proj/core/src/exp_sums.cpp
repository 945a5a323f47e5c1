#include "vforge/exp_sums.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>

namespace vforge {

namespace detail {

const std::vector<std::pair<std::int32_t, std::int32_t>>& unit_inverse_pairs(int64 c) {
    static std::shared_mutex mtx;
    static std::map<int64, std::vector<std::pair<std::int32_t, std::int32_t>>> cache;
    {
        std::shared_lock lock(mtx);
        auto it = cache.find(c);
        if (it != cache.end()) return it->second;
    }
    std::vector<std::pair<std::int32_t, std::int32_t>> pairs;
    if (c == 1) {
        pairs.emplace_back(0, 0);
    } else {
        for (int64 x = 1; x < c; ++x) {
            if (gcd64(x, c) != 1) continue;
            pairs.emplace_back(static_cast<std::int32_t>(x),
                               static_cast<std::int32_t>(mod_inverse(x, c)));
        }
    }
    std::unique_lock lock(mtx);
    return cache.emplace(c, std::move(pairs)).first->second;
}

const std::vector<std::complex<double>>& root_table(int64 c) {
    static std::shared_mutex mtx;
    static std::map<int64, std::vector<std::complex<double>>> cache;
    {
        std::shared_lock lock(mtx);
        auto it = cache.find(c);
        if (it != cache.end()) return it->second;
    }
    std::vector<std::complex<double>> tbl(static_cast<std::size_t>(c));
    const double w = 2.0 * std::numbers::pi / static_cast<double>(c);
    for (int64 j = 0; j < c; ++j)
        tbl[static_cast<std::size_t>(j)] = {std::cos(w * static_cast<double>(j)),
                                            std::sin(w * static_cast<double>(j))};
    std::unique_lock lock(mtx);
    return cache.emplace(c, std::move(tbl)).first->second;
}

} // namespace detail

SumValue kloosterman(int64 m, int64 n, int64 c) {
    if (c < 1) throw OutOfRange("kloosterman: c >= 1 required");
    const auto& pairs = detail::unit_inverse_pairs(c);
    const auto& roots = detail::root_table(c);
    Cyclotomic exact(c);
    std::complex<double> num{0.0, 0.0};
    const int64 mm = ((m % c) + c) % c;
    const int64 nn = ((n % c) + c) % c;
    for (const auto& [x, xbar] : pairs) {
        int64 e = (mm * x + nn * xbar) % c;
        exact.add_root(e, 1);
        num += roots[static_cast<std::size_t>(e)];
    }
    return {std::move(exact), num};
}

double kloosterman_numeric(int64 m, int64 n, int64 c) {
    const auto& pairs = detail::unit_inverse_pairs(c);
    const auto& roots = detail::root_table(c);
    const int64 mm = ((m % c) + c) % c;
    const int64 nn = ((n % c) + c) % c;
    double s = 0.0;
    for (const auto& [x, xbar] : pairs)
        s += roots[static_cast<std::size_t>((mm * x + nn * xbar) % c)].real();
    return s;
}

CheckResult selberg_factorization_check(int64 m, int64 n, int64 c) {
    if (m < 1 || n < 1 || c < 1)
        throw OutOfRange("selberg_factorization_check: m, n >= 1 and c >= 1 required");
    SumValue lhs = kloosterman(m, n, c);
    Cyclotomic rhs_exact(c);
    std::complex<double> rhs_num{0.0, 0.0};
    int64 g = gcd64(gcd64(m, n), c);
    for (int64 d : divisors(g)) {
        SumValue term = kloosterman(1, m * n / (d * d), c / d);
        rhs_exact += term.exact.scaled(d).lifted_to(c);
        rhs_num += static_cast<double>(d) * term.numeric;
    }
    CheckResult out;
    out.exact_ok = (lhs.exact - rhs_exact).is_zero();
    out.residual = std::abs(lhs.numeric - rhs_num);
    out.lhs = lhs.numeric;
    out.rhs = rhs_num;
    return out;
}

void CharSumParams::validate() const {
    const int64 r = psi.modulus();
    if (a < 1 || b < 1) throw InvalidParams("CharSumParams: a, b >= 1 required");
    if (!divides_power_of(a * b, r))
        throw InvalidParams("CharSumParams: ab must divide r^infinity");
    if (gcd64(gcd64(u, r), gcd64(v, r)) != 1 || gcd64(u, r) != 1 || gcd64(v, r) != 1)
        throw InvalidParams("CharSumParams: gcd(uv, r) = 1 required");
}

SumValue char_sum_C(const CharSumParams& p) {
    p.validate();
    const int64 r = p.psi.modulus();
    const int64 a = p.a;
    const int64 M = p.psi.order();
    const int64 L = lcm64(a, M);
    const auto u_root = p.psi.value_root(p.u);
    // psi(u) != 0 since gcd(u, r) = 1
    const int64 u_exp = u_root.exp * (L / u_root.order);

    Cyclotomic exact(L);
    std::complex<double> num{0.0, 0.0};
    const auto& roots_a = detail::root_table(a);
    const std::complex<double> psi_u = p.psi.value(p.u);

    const int64 bv = p.b * p.v;
    for (int64 alpha = 0; alpha < a; ++alpha) {
        if (gcd64(alpha, a) != 1) continue;
        int64 cong = (bv + alpha * r) % a;
        if (cong < 0) cong += a;
        if (cong != 0) continue;
        int64 au = ((alpha * p.u) % a + a) % a;
        int64 e_exp = mul_mod(((p.h % a) + a) % a, mod_inverse(au, a), a);
        int64 w = (alpha * r + bv) / a; // exact by the congruence
        auto wr = p.psi.value_root(w);
        if (wr.zero) continue;
        int64 conj_exp = (wr.order - wr.exp) % wr.order;
        exact.add_root(u_exp + e_exp * (L / a) + conj_exp * (L / wr.order), 1);
        num += psi_u * roots_a[static_cast<std::size_t>(e_exp)] *
               std::conj(p.psi.value(w));
    }
    return {std::move(exact), num};
}

CheckResult verify_reciprocity(const CharSumParams& p, ReciprocityForm form) {
    p.validate();
    const int64 r = p.psi.modulus();
    const int64 ab = p.a * p.b;
    SumValue lhs = char_sum_C(p);
    SumValue rhs = char_sum_C(p.swapped());

    int64 phase_exp = 0;
    if (ab > 1) {
        int64 uv = ((p.u % ab) * (p.v % ab) % ab + ab) % ab;
        phase_exp = mul_mod(((p.h % ab) + ab) % ab, ((r % ab) * mod_inverse(uv, ab)) % ab, ab);
        phase_exp = (ab - phase_exp) % ab; // e_{ab}(-h r inv(uv))
        if (form == ReciprocityForm::phase_sign_flipped) phase_exp = (ab - phase_exp) % ab;
    }

    const int64 L = lcm64(lcm64(lhs.exact.order(), rhs.exact.order()), ab);
    Cyclotomic diff = lhs.exact.lifted_to(L) -
                      rhs.exact.conj().lifted_to(L) * Cyclotomic::root(L, phase_exp * (L / ab));
    const auto& roots_ab = detail::root_table(ab);
    std::complex<double> rhs_num =
        roots_ab[static_cast<std::size_t>(phase_exp)] * std::conj(rhs.numeric);
    CheckResult out;
    out.exact_ok = diff.is_zero();
    out.residual = std::abs(lhs.numeric - rhs_num);
    out.lhs = lhs.numeric;
    out.rhs = rhs_num;
    return out;
}

MultiplicativityResult verify_multiplicativity(const DirichletCharacter& psi1, int64 a1, int64 b1,
                                               const DirichletCharacter& psi2, int64 a2, int64 b2,
                                               int64 h, int64 u, int64 v) {
    const int64 r1 = psi1.modulus(), r2 = psi2.modulus();
    if (gcd64(r1, r2) != 1)
        throw InvalidParams("verify_multiplicativity: moduli must be coprime");
    DirichletCharacter psi12 = product(psi1, psi2);
    CharSumParams lhs_p{psi12, h, a1 * a2, u, b1 * b2, v};
    SumValue lhs = char_sum_C(lhs_p);

    auto root_of = [](const DirichletCharacter& chi, int64 n, bool conj) {
        auto rr = chi.value_root(n);
        // n is coprime to the modulus in every use below
        int64 e = conj ? (rr.order - rr.exp) % rr.order : rr.exp;
        return Cyclotomic::root(rr.order, e);
    };

    MultiplicativityResult out;
    {
        SumValue c1 = char_sum_C({psi1, h * r2, a1, a2 * b2 * u, b1, v});
        SumValue c2 = char_sum_C({psi2, h * r1, a2, a1 * b1 * u, b2, v});
        Cyclotomic rhs = root_of(psi1, b2 * b2, true) * root_of(psi2, b1 * b1, true) *
                         c1.exact * c2.exact;
        out.variant1_ok = (lhs.exact - rhs).is_zero();
    }
    {
        SumValue c1 = char_sum_C({psi1, h * r2, a1, u, b1, a2 * b2 * v});
        SumValue c2 = char_sum_C({psi2, h * r1, a2, u, b2, a1 * b1 * v});
        Cyclotomic rhs = root_of(psi1, a2 * a2, false) * root_of(psi2, a1 * a1, false) *
                         c1.exact * c2.exact;
        out.variant2_ok = (lhs.exact - rhs).is_zero();
    }
    return out;
}

SupportClaimResult verify_support_claim(const DirichletCharacter& psi,
                                        int64 h, int64 u, int64 v, int s, int t) {
    const int64 r = psi.modulus();
    Factorization f = factorize(r);
    if (f.factors.size() != 1)
        throw InvalidParams("verify_support_claim: modulus must be a prime power");
    if (!psi.is_primitive())
        throw NotPrimitive("verify_support_claim: psi must be primitive");
    const int64 p = f.factors[0].prime;
    const int k = f.factors[0].exponent;
    int64 ps = 1, pt = 1;
    for (int i = 0; i < s; ++i) ps *= p;
    for (int i = 0; i < t; ++i) pt *= p;

    SupportClaimResult out;
    out.in_allowed_cases = (s == t && s <= k) || (t == k && k < s) || (s == k && k < t);
    out.lhs_zero = char_sum_C({psi, h, ps, u, pt, v}).exact.is_zero();
    out.swapped_zero = char_sum_C({psi, h, pt, v, ps, u}).exact.is_zero();
    out.ok = out.in_allowed_cases || (out.lhs_zero && out.swapped_zero);
    return out;
}

SumValue dft_d(const DirichletCharacter& chi, int64 ell, int64 m, int64 c) {
    if (c < 1) throw OutOfRange("dft_d: c >= 1 required");
    const int64 q = chi.modulus();
    const int64 cq = c * q;
    const int64 M = chi.order();
    const int64 L = lcm64(cq, M);
    const auto& pairs = detail::unit_inverse_pairs(c);
    const auto& roots_cq = detail::root_table(cq);

    // chi values per residue mod q
    std::vector<DirichletCharacter::Root> chi_roots(static_cast<std::size_t>(q));
    std::vector<std::complex<double>> chi_vals(static_cast<std::size_t>(q));
    for (int64 a = 0; a < q; ++a) {
        chi_roots[static_cast<std::size_t>(a)] = chi.value_root(a);
        chi_vals[static_cast<std::size_t>(a)] = chi.value(a);
    }

    Cyclotomic exact(L);
    std::complex<double> num{0.0, 0.0};
    const int64 mm = ((m % cq) + cq) % cq;
    const int64 ll = ((ell % c) + c) % c;
    for (int64 g = 0; g < cq; ++g) {
        const auto& cr = chi_roots[static_cast<std::size_t>(g % q)];
        if (cr.zero) continue;
        const int64 chi_lift = cr.exp * (L / cr.order);
        const std::complex<double> cv = chi_vals[static_cast<std::size_t>(g % q)];
        const int64 gm = mm * g % cq;
        const int64 gc = g % c;
        for (const auto& [x, xbar] : pairs) {
            // e_c(g x + ell xbar) e_{cq}(m g) = zeta_cq^(q(gx + ell xbar) + mg)
            int64 e_cq = (q * ((gc * x + ll * xbar) % c) + gm) % cq;
            exact.add_root(q == 1 && c == 1 ? 0 : chi_lift + e_cq * (L / cq), 1);
            num += cv * roots_cq[static_cast<std::size_t>(e_cq)];
        }
    }
    return {std::move(exact), num};
}

CheckResult verify_dft_duality(const DirichletCharacter& chi, int64 ell, int64 m, int64 c,
                               DualityForm form) {
    if (!chi.is_primitive()) throw NotPrimitive("verify_dft_duality: chi must be primitive");
    if (m < 1 || c < 1) throw OutOfRange("verify_dft_duality: m, c >= 1 required");
    const int64 q = chi.modulus();
    const int64 mc = m * c;
    SumValue T = dft_d(chi, ell, m, c);
    SumValue U = dft_d(chi, ell, c, m);
    GaussSum g = gauss_sum(chi);

    const int64 L = lcm64(lcm64(T.exact.order(), U.exact.order()), lcm64(mc, g.exact.order()));
    int64 phase_exp = (mc - mul_mod(((ell % mc) * (q % mc)) % mc, 1, mc)) % mc; // -ell q mod mc

    Cyclotomic g2 = (g.exact * g.exact).reduced();
    Cyclotomic rhs = g2.lifted_to(L) * U.exact.conj().lifted_to(L);
    rhs = rhs * Cyclotomic::root(L, phase_exp * (L / mc));
    Cyclotomic diff = T.exact.scaled(m * q).lifted_to(L) - rhs.scaled(c);

    const auto& roots_mc = detail::root_table(mc);
    std::complex<double> eps2 = (form == DualityForm::abs_gauss_squared)
                                    ? std::complex<double>(std::norm(g.eps), 0.0)
                                    : g.eps * g.eps;
    std::complex<double> rhs_num = eps2 * (static_cast<double>(c) / static_cast<double>(m)) *
                                   std::conj(U.numeric) *
                                   roots_mc[static_cast<std::size_t>(phase_exp)];
    CheckResult out;
    out.exact_ok = diff.is_zero();
    out.residual = std::abs(T.numeric - rhs_num);
    out.lhs = T.numeric;
    out.rhs = rhs_num;
    return out;
}

} // namespace vforge
