#pragma once

#include <complex>
#include <optional>

#include "vforge/characters.hpp"
#include "vforge/exp_sums.hpp"
#include "vforge/hankel.hpp"
#include "vforge/modforms.hpp"
#include "vforge/special.hpp"

namespace vforge {

struct PeterssonValue {
    int k = 12;
    int64 ell = 1;
    int64 n = 1;
    double value = 0.0;
    int64 truncationC = 0;
    double tailBound = 0.0;
};

// Geometric side of the Petersson formula:
// delta(n = ell) + 2 pi i^{-k} sum_{c <= C} S(n, ell; c)/c J_{k-1}(4 pi sqrt(n ell)/c),
// with C certified so the classical tail bound stays below tol.
PeterssonValue petersson_geometric(WeightK k, int64 ell, int64 n, double tol);

// | G(m,n) G(1,1) - G(m,1) G(n,1) |; identically zero when dim S_k = 1.
double petersson_dim1_factorization(WeightK k, int64 m, int64 n, double tol);

struct IdentityCheck {
    std::complex<double> lhs{0.0, 0.0};
    std::complex<double> rhs{0.0, 0.0};
    double residual = 0.0;
};

// Main spectral identity: for primitive chi mod q,
//   sum_{n} chi(n) g(n) G_k(ell, n)
//     = i^k (eps_chi^2 / q) sum_{n} chibar(n) G_k(ell, n) (H_k g)(n / q^2),
// with the dual sum truncated where the Hankel transform has decayed
// persistently (20-term window against absTol/(10 n)).
IdentityCheck main_identity_check(WeightK k, const DirichletCharacter& chi, int64 ell,
                                  const TestFunction& g, const QuadratureConfig& cfg,
                                  double gTol = 1e-10);

// Voronoi summation for an eigenform:
//   sum lambda(n) e_q(a n) g(n) = (i^k / q) sum lambda(n) e_q(-abar n) (H_k g)(n/q^2).
// lambdaPerturbation (test hook) adds the given amount to lambda(perturbedIndex)
// consistently on both sides.
IdentityCheck voronoi_check(const Eigenform& f, int64 q, int64 a,
                            const TestFunction& g, const QuadratureConfig& cfg,
                            double lambdaPerturbation = 0.0, int64 perturbedIndex = 0);

struct PipelineTrace {
    std::complex<double> stageA{0.0, 0.0};
    std::complex<double> stageB{0.0, 0.0};
    std::complex<double> stageC{0.0, 0.0};
    std::optional<std::complex<double>> stageD;
    double maxPairwiseResidual = 0.0; // over stages A, B, C
    double stageDResidual = 0.0;      // |stageD - stageC| when enabled
    // contribution of the dual zeroth frequency and of the T2 branch,
    // reported for the cancellation cross-checks
    std::complex<double> dualZeroTerm{0.0, 0.0};
    std::complex<double> t2Branch{0.0, 0.0};
};

inline constexpr unsigned kPipelineStageD = 1u;

// Independent evaluations of I_k(ell; chi) along the pipeline:
//   A: Petersson geometric side under the n-sum (the identity's LHS);
//   B: diagonal + dual zeroth frequency + S_k as the (c0, c', m) triple sum;
//   C: same head with S_k after the second Poisson summation (m, c sums);
//   D (optional): S_k in the analytically prepared form driven by the
//      Hankel-transform-weighted x-integral; wider tolerance.
PipelineTrace pipeline_trace(WeightK k, const DirichletCharacter& chi, int64 ell,
                             const TestFunction& g, const QuadratureConfig& cfg,
                             unsigned stages = 0);

// Completed L-function Gamma(s + (k-1)/2) (2 pi)^{-s-(k-1)/2} L(s, f x chi)
// as the Mellin integral of f_chi(iy) over [ymin, Y]; both truncations carry
// certified bounds (twisted-modularity magnitude below ymin, coefficient
// envelope above Y). Absolute target accuracy 1e-6.
std::complex<double> completed_L(const Eigenform& f, const DirichletCharacter& chi,
                                 std::complex<double> s, const QuadratureConfig& cfg);

// L(s, f x chi) = completed_L / (Gamma(s+(k-1)/2) (2 pi)^{-s-(k-1)/2}).
std::complex<double> l_value(const Eigenform& f, const DirichletCharacter& chi,
                             std::complex<double> s, const QuadratureConfig& cfg);

// Direct Dirichlet series sum_{n <= N} lambda(n) chi(n) n^{-s}.
std::complex<double> dirichlet_series_direct(const Eigenform& f, const DirichletCharacter& chi,
                                             std::complex<double> s, int64 N);

struct FunctionalEquationCheck {
    std::complex<double> lhs{0.0, 0.0};
    std::complex<double> rhs{0.0, 0.0};
    double residual = 0.0;
};

// L(s, f x chi) = i^k eps_chi^2 q^{1-2s} gamma_k(1-s)/gamma_k(s) L(1-s, f x chibar),
// both L-values from the completed-L evaluator.
FunctionalEquationCheck functional_equation_check(const Eigenform& f,
                                                  const DirichletCharacter& chi,
                                                  std::complex<double> s,
                                                  const QuadratureConfig& cfg);

} // namespace vforge
