#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

#include "vforge/errors.hpp"
#include "vforge/residue.hpp"

namespace vforge {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact q-expansion sum a(n) q^n, 0 <= n <= N. Coefficients are stored as
// integers over one positive common denominator (1 for everything built
// here; kept general for scaled combinations).
class QExpansion {
public:
    QExpansion(int weight, int64 precision);

    int weight() const { return weight_; }
    int64 precision() const { return precision_; }

    BigRat a(int64 n) const;
    const BigInt& numerator(int64 n) const;
    const BigInt& denominator() const { return den_; }
    BigInt& mutable_numerator(int64 n) { return num_[static_cast<std::size_t>(n)]; }

    bool is_cusp() const { return num_[0] == 0; }

    QExpansion operator+(const QExpansion& o) const;
    QExpansion operator-(const QExpansion& o) const;
    QExpansion operator*(const QExpansion& o) const; // weights add, min precision
    QExpansion scaled(const BigInt& c) const;
    QExpansion divided_exact(const BigInt& d) const; // every coefficient divisible
    QExpansion truncated(int64 N) const;

    friend QExpansion hecke_apply(int64 m, const QExpansion& f);

private:
    int weight_;
    int64 precision_;
    std::vector<BigInt> num_;
    BigInt den_ = 1;
};

// E4 = 1 + 240 sum sigma_3(n) q^n, E6 = 1 - 504 sum sigma_5(n) q^n,
// Delta = (E4^3 - E6^2)/1728, exact. N <= 10^4.
struct EisensteinDelta {
    QExpansion E4, E6, Delta;
};
EisensteinDelta eisenstein_and_delta(int64 N);

// Monomial basis of S_k(SL_2(Z)) for even 12 <= k <= 26: Delta^j E4^a E6^b
// with 12 j + 4 a + 6 b = k, j >= 1, b in {0, 1}; echelon in the q^j leads.
std::vector<QExpansion> cusp_basis(int k, int64 N);

// (T_m f)(n) = sum_{d | (m, n)} d^{k-1} a(m n / d^2); output precision
// floor(N/m).
QExpansion hecke_apply(int64 m, const QExpansion& f);

// Normalized Hecke eigenform. Coefficients live in Q (fieldDegree 1) or a
// real quadratic field Q(sqrt(D)) (fieldDegree 2), stored as pairs
// a(n) = ax(n) + ay(n) sqrt(D). lambda(n) = a(n)/n^{(k-1)/2} in doubles,
// with sqrt(D) taken positive for embedding 0 and negative for embedding 1.
class Eigenform {
public:
    int weight() const { return weight_; }
    int fieldDegree() const { return degree_; }
    int64 fieldDisc() const { return D_; }
    int embedding() const { return embedding_; }
    int64 precision() const { return precision_; }

    double lambda(int64 n) const; // throws PrecisionExhausted beyond precision
    std::pair<BigRat, BigRat> exact_coeff(int64 n) const;

    friend std::vector<Eigenform> eigenforms(int k, int64 N);

private:
    int weight_ = 12;
    int degree_ = 1;
    int64 D_ = 0;
    int embedding_ = 0;
    int64 precision_ = 0;
    std::vector<BigRat> ax_, ay_;
    std::vector<double> lambda_;
};

// All normalized eigenforms of weight k, level 1, with a(n) for n <= N.
// k in {12, 16, 18, 20, 22, 24, 26}. Uses the on-disk cache (VF_CACHE_DIR)
// for rational-coefficient forms when available.
std::vector<Eigenform> eigenforms(int k, int64 N);

// | lambda(m) lambda(n) - sum_{d | (m,n)} lambda(m n / d^2) |
double hecke_relation_residual(const Eigenform& f, int64 m, int64 n);

} // namespace vforge
