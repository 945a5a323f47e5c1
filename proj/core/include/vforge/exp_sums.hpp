#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "vforge/characters.hpp"
#include "vforge/cyclotomic.hpp"

namespace vforge {

// Dual exact/numeric carrier for finite exponential sums.
struct SumValue {
    Cyclotomic exact;
    std::complex<double> numeric;
};

struct CheckResult {
    bool exact_ok = false;
    double residual = 0.0;
    std::complex<double> lhs{0.0, 0.0};
    std::complex<double> rhs{0.0, 0.0};
};

namespace detail {
// (x, x^-1 mod c) for the units x mod c; mod 1 the single pair is (0, 0).
// Memoized and shared; safe for concurrent use.
const std::vector<std::pair<std::int32_t, std::int32_t>>& unit_inverse_pairs(int64 c);
// e_c(j) for 0 <= j < c, memoized.
const std::vector<std::complex<double>>& root_table(int64 c);
} // namespace detail

// S(m, n; c) = sum over units x mod c of e_c(m x + n xbar). S(m,n;1) = 1.
SumValue kloosterman(int64 m, int64 n, int64 c);
double kloosterman_numeric(int64 m, int64 n, int64 c);

// S(m,n;c) = sum_{d | (m,n,c)} d * S(1, mn/d^2; c/d), checked exactly in
// Z[zeta_c] and numerically. m, n >= 1.
CheckResult selberg_factorization_check(int64 m, int64 n, int64 c);

// Parameters of C_psi^h(a, u, b, v): psi mod r, ab | r^infinity, (uv, r) = 1.
struct CharSumParams {
    DirichletCharacter psi;
    int64 h = 0;
    int64 a = 1;
    int64 u = 1;
    int64 b = 1;
    int64 v = 1;

    void validate() const; // throws InvalidParams
    CharSumParams swapped() const { return {psi, h, b, v, a, u}; }
};

// C_psi^h(a,u,b,v) = psi(u) * sum over units alpha mod a with
// b v == -alpha r (mod a) of e_a(h * inv(alpha u)) psibar((alpha r + b v)/a).
SumValue char_sum_C(const CharSumParams& p);

enum class ReciprocityForm {
    standard,
    phase_sign_flipped, // mutation control: e_{ab}(+h r inv(uv)) instead of -
};

// C_psi^h(a,u,b,v) = e_{ab}(-h r inv(uv)) * conj(C_psi^h(b,v,a,u)), exactly.
CheckResult verify_reciprocity(const CharSumParams& p,
                               ReciprocityForm form = ReciprocityForm::standard);

struct MultiplicativityResult {
    bool variant1_ok = false;
    bool variant2_ok = false;
    bool ok() const { return variant1_ok && variant2_ok; }
};

// Twisted multiplicativity of C under the CRT split r = r1 r2:
//   C_{psi1 psi2}^h(a1 a2, u, b1 b2, v)
//     = conj(psi1(b2^2) psi2(b1^2)) C_{psi1}^{h r2}(a1, a2 b2 u, b1, v)
//                                   C_{psi2}^{h r1}(a2, a1 b1 u, b2, v)
//     = psi1(a2^2) psi2(a1^2)       C_{psi1}^{h r2}(a1, u, b1, a2 b2 v)
//                                   C_{psi2}^{h r1}(a2, u, b2, a1 b1 v).
MultiplicativityResult verify_multiplicativity(const DirichletCharacter& psi1, int64 a1, int64 b1,
                                               const DirichletCharacter& psi2, int64 a2, int64 b2,
                                               int64 h, int64 u, int64 v);

struct SupportClaimResult {
    bool in_allowed_cases = false; // s=t<=k, or t=k<s, or s=k<t
    bool lhs_zero = false;         // C(p^s, u, p^t, v) = 0 exactly
    bool swapped_zero = false;     // C(p^t, v, p^s, u) = 0 exactly
    bool ok = false;               // outside the allowed cases both must vanish
};

// Support of C for psi primitive mod p^k: outside the three allowed cases
// both C(p^s,u,p^t,v) and C(p^t,v,p^s,u) vanish identically.
SupportClaimResult verify_support_claim(const DirichletCharacter& psi,
                                        int64 h, int64 u, int64 v, int s, int t);

// Dhat_chi^ell(m, c) = sum_{gamma mod cq} chi(gamma) S(gamma, ell; c) e_{cq}(m gamma).
SumValue dft_d(const DirichletCharacter& chi, int64 ell, int64 m, int64 c);

enum class DualityForm {
    standard,
    abs_gauss_squared, // mutation control: |eps|^2 in place of eps^2
};

// Dhat(m,c) = eps_chi^2 (c/m) conj(Dhat(c,m)) e(-ell q/(mc)) for primitive chi.
// Exact variant clears denominators: m q Dhat(m,c) = c g(chi)^2 conj(Dhat(c,m))
// zeta_{mc}^{-ell q}, compared in Z[zeta_lcm(cq, mq, mc, ord chi)].
CheckResult verify_dft_duality(const DirichletCharacter& chi, int64 ell, int64 m, int64 c,
                               DualityForm form = DualityForm::standard);

} // namespace vforge
