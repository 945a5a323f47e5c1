#include "vforge/modforms.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace vforge {

QExpansion::QExpansion(int weight, int64 precision) : weight_(weight), precision_(precision) {
    if (precision < 1 || precision > 100'000)
        throw OutOfRange("QExpansion: precision in [1, 10^5]");
    num_.assign(static_cast<std::size_t>(precision + 1), BigInt(0));
}

BigRat QExpansion::a(int64 n) const {
    return BigRat(numerator(n), den_);
}

const BigInt& QExpansion::numerator(int64 n) const {
    if (n < 0 || n > precision_) throw PrecisionExhausted("QExpansion: coefficient beyond precision");
    return num_[static_cast<std::size_t>(n)];
}

QExpansion QExpansion::operator+(const QExpansion& o) const {
    if (weight_ != o.weight_)
        throw InvalidParams("QExpansion: addition requires equal weights");
    int64 N = std::min(precision_, o.precision_);
    QExpansion r(weight_, N);
    r.den_ = den_ * o.den_;
    for (int64 n = 0; n <= N; ++n)
        r.num_[static_cast<std::size_t>(n)] =
            numerator(n) * o.den_ + o.numerator(n) * den_;
    return r;
}

QExpansion QExpansion::operator-(const QExpansion& o) const {
    if (weight_ != o.weight_)
        throw InvalidParams("QExpansion: subtraction requires equal weights");
    int64 N = std::min(precision_, o.precision_);
    QExpansion r(weight_, N);
    r.den_ = den_ * o.den_;
    for (int64 n = 0; n <= N; ++n)
        r.num_[static_cast<std::size_t>(n)] =
            numerator(n) * o.den_ - o.numerator(n) * den_;
    return r;
}

QExpansion QExpansion::operator*(const QExpansion& o) const {
    int64 N = std::min(precision_, o.precision_);
    QExpansion r(weight_ + o.weight_, N);
    r.den_ = den_ * o.den_;
    for (int64 i = 0; i <= N; ++i) {
        const BigInt& ai = num_[static_cast<std::size_t>(i)];
        if (ai == 0) continue;
        for (int64 j = 0; i + j <= N; ++j) {
            const BigInt& bj = o.num_[static_cast<std::size_t>(j)];
            if (bj == 0) continue;
            r.num_[static_cast<std::size_t>(i + j)] += ai * bj;
        }
    }
    return r;
}

QExpansion QExpansion::scaled(const BigInt& c) const {
    QExpansion r(*this);
    for (auto& x : r.num_) x *= c;
    return r;
}

QExpansion QExpansion::divided_exact(const BigInt& d) const {
    QExpansion r(*this);
    for (auto& x : r.num_) {
        if (x % d != 0) throw Error("QExpansion::divided_exact: not divisible");
        x /= d;
    }
    return r;
}

QExpansion QExpansion::truncated(int64 N) const {
    if (N >= precision_) return *this;
    QExpansion r(weight_, N);
    r.den_ = den_;
    for (int64 n = 0; n <= N; ++n) r.num_[static_cast<std::size_t>(n)] = numerator(n);
    return r;
}

EisensteinDelta eisenstein_and_delta(int64 N) {
    if (N < 1 || N > 10'000) throw OutOfRange("eisenstein_and_delta: N in [1, 10^4]");
    QExpansion E4(4, N), E6(6, N);
    E4.mutable_numerator(0) = 1;
    E6.mutable_numerator(0) = 1;
    // divisor-power sieves
    std::vector<BigInt> s3(static_cast<std::size_t>(N + 1), BigInt(0));
    std::vector<BigInt> s5(static_cast<std::size_t>(N + 1), BigInt(0));
    for (int64 d = 1; d <= N; ++d) {
        BigInt d3 = BigInt(d) * d * d;
        BigInt d5 = d3 * d * d;
        for (int64 m = d; m <= N; m += d) {
            s3[static_cast<std::size_t>(m)] += d3;
            s5[static_cast<std::size_t>(m)] += d5;
        }
    }
    for (int64 n = 1; n <= N; ++n) {
        E4.mutable_numerator(n) = 240 * s3[static_cast<std::size_t>(n)];
        E6.mutable_numerator(n) = -504 * s5[static_cast<std::size_t>(n)];
    }
    QExpansion E4sq = E4 * E4;
    QExpansion Delta = ((E4sq * E4) - (E6 * E6)).divided_exact(1728);
    return {std::move(E4), std::move(E6), std::move(Delta)};
}

std::vector<QExpansion> cusp_basis(int k, int64 N) {
    if (k < 12 || k > 26 || k % 2 != 0) throw OutOfRange("cusp_basis: even k in [12, 26]");
    EisensteinDelta ed = eisenstein_and_delta(N);
    std::vector<QExpansion> basis;
    QExpansion deltaPow = ed.Delta;
    for (int j = 1; 12 * j <= k; ++j) {
        if (j > 1) deltaPow = deltaPow * ed.Delta;
        int w = k - 12 * j;
        if (w == 2) continue;
        int b = (w % 4 == 0) ? 0 : 1;
        int a = (w - 6 * b) / 4;
        QExpansion f = deltaPow;
        for (int i = 0; i < a; ++i) f = f * ed.E4;
        for (int i = 0; i < b; ++i) f = f * ed.E6;
        basis.push_back(std::move(f));
    }
    return basis;
}

QExpansion hecke_apply(int64 m, const QExpansion& f) {
    if (m < 1) throw InvalidParams("hecke_apply: m >= 1 required");
    int64 N = f.precision() / m;
    if (N < 1) throw PrecisionExhausted("hecke_apply: output precision would be empty");
    QExpansion r(f.weight(), N);
    std::vector<int64> divs = divisors(m);
    std::vector<BigInt> dpow;
    dpow.reserve(divs.size());
    for (int64 d : divs) {
        BigInt p = 1;
        for (int i = 0; i < f.weight() - 1; ++i) p *= d;
        dpow.push_back(std::move(p));
    }
    for (int64 n = 0; n <= N; ++n) {
        BigInt acc = 0;
        for (std::size_t i = 0; i < divs.size(); ++i) {
            int64 d = divs[i];
            if (n % d != 0) continue;
            acc += dpow[i] * f.numerator(m * n / (d * d));
        }
        r.mutable_numerator(n) = std::move(acc);
    }
    r.den_ = f.den_;
    return r;
}

namespace {

// quadratic-field scalar x + y sqrt(D)
struct Quad {
    BigRat x, y;
};

Quad quad_add(const Quad& a, const Quad& b) { return {a.x + b.x, a.y + b.y}; }
Quad quad_mul(const Quad& a, const Quad& b, const BigInt& D) {
    return {a.x * b.x + BigRat(D) * a.y * b.y, a.x * b.y + a.y * b.x};
}
Quad quad_scale(const Quad& a, const BigRat& c) { return {a.x * c, a.y * c}; }

std::filesystem::path cache_path(int k, int64 N) {
    const char* dir = std::getenv("VF_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return {};
    std::ostringstream name;
    name << "qexp_k" << k << "_N" << N << ".txt";
    return std::filesystem::path(dir) / name.str();
}

bool load_cached_rational(int k, int64 N, std::vector<BigRat>& ax) {
    auto path = cache_path(k, N);
    if (path.empty()) return false;
    std::ifstream in(path);
    if (!in) return false;
    ax.assign(static_cast<std::size_t>(N + 1), BigRat(0));
    int64 n;
    std::string coeff;
    int64 seen = 0;
    while (in >> n >> coeff) {
        if (n < 0 || n > N) return false;
        ax[static_cast<std::size_t>(n)] = BigRat(BigInt(coeff), BigInt(1));
        ++seen;
    }
    return seen == N + 1;
}

void store_cached_rational(int k, int64 N, const std::vector<BigRat>& ax) {
    auto path = cache_path(k, N);
    if (path.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        for (int64 n = 0; n <= N; ++n) {
            const BigRat& v = ax[static_cast<std::size_t>(n)];
            out << n << ' ' << boost::multiprecision::numerator(v) << '\n';
        }
    }
    std::filesystem::rename(tmp, path, ec);
}

double quad_to_double(const BigRat& x, const BigRat& y, int64 D, int embedding) {
    double sq = std::sqrt(static_cast<double>(D));
    if (embedding == 1) sq = -sq;
    return x.convert_to<double>() + y.convert_to<double>() * sq;
}

} // namespace

double Eigenform::lambda(int64 n) const {
    if (n < 1 || n > precision_)
        throw PrecisionExhausted("Eigenform::lambda: n beyond stored precision");
    return lambda_[static_cast<std::size_t>(n)];
}

std::pair<BigRat, BigRat> Eigenform::exact_coeff(int64 n) const {
    if (n < 1 || n > precision_)
        throw PrecisionExhausted("Eigenform::exact_coeff: n beyond stored precision");
    return {ax_[static_cast<std::size_t>(n)], ay_[static_cast<std::size_t>(n)]};
}

std::vector<Eigenform> eigenforms(int k, int64 N) {
    switch (k) {
        case 12: case 16: case 18: case 20: case 22: case 24: case 26: break;
        default: throw OutOfRange("eigenforms: k in {12,16,18,20,22,24,26}");
    }
    std::vector<Eigenform> out;
    const double kexp = 0.5 * (k - 1);

    auto finish_lambdas = [&](Eigenform& f) {
        f.lambda_.assign(static_cast<std::size_t>(f.precision_ + 1), 0.0);
        for (int64 n = 1; n <= f.precision_; ++n)
            f.lambda_[static_cast<std::size_t>(n)] =
                quad_to_double(f.ax_[static_cast<std::size_t>(n)],
                               f.ay_[static_cast<std::size_t>(n)], f.D_ == 0 ? 1 : f.D_,
                               f.embedding_) /
                std::pow(static_cast<double>(n), kexp);
    };

    if (k != 24) {
        // one-dimensional space: the single basis monomial is the eigenform
        Eigenform f;
        f.weight_ = k;
        f.degree_ = 1;
        f.D_ = 0;
        f.embedding_ = 0;
        f.precision_ = N;
        if (!load_cached_rational(k, N, f.ax_)) {
            auto basis = cusp_basis(k, N);
            f.ax_.assign(static_cast<std::size_t>(N + 1), BigRat(0));
            for (int64 n = 0; n <= N; ++n) f.ax_[static_cast<std::size_t>(n)] = basis[0].a(n);
            store_cached_rational(k, N, f.ax_);
        }
        f.ay_.assign(static_cast<std::size_t>(N + 1), BigRat(0));
        finish_lambdas(f);
        out.push_back(std::move(f));
        return out;
    }

    // k = 24: two-dimensional space, exact quadratic eigen-data from T_2
    auto basis = cusp_basis(k, N); // f1 = Delta E4^3 (q + ...), f2 = Delta^2 (q^2 + ...)
    const QExpansion& f1 = basis[0];
    const QExpansion& f2 = basis[1];
    QExpansion t1 = hecke_apply(2, f1);
    QExpansion t2 = hecke_apply(2, f2);
    // coordinates in the echelon basis: g = g(1) f1 + (g(2) - g(1) f1(2)) f2
    BigRat f12 = f1.a(2);
    BigRat m11 = t1.a(1), m21 = t1.a(2) - m11 * f12;
    BigRat m12 = t2.a(1), m22 = t2.a(2) - m12 * f12;
    BigRat tr = m11 + m22;
    BigRat det = m11 * m22 - m12 * m21;
    BigRat discQ = tr * tr - 4 * det;
    // disc is a positive integer here; split off the square part
    BigInt discN = boost::multiprecision::numerator(discQ);
    if (boost::multiprecision::denominator(discQ) != 1 || discN <= 0)
        throw Error("eigenforms: unexpected T_2 discriminant");
    int64 disc = discN.convert_to<int64>();
    int64 square = 1, Dcore = 1;
    for (const auto& pp : factorize(disc).factors) {
        for (int i = 0; i + 1 < pp.exponent; i += 2) square *= pp.prime;
        if (pp.exponent % 2 == 1) Dcore *= pp.prime;
    }
    // a(2) = (tr +- square sqrt(Dcore)) / 2
    for (int embedding = 0; embedding < 2; ++embedding) {
        Eigenform f;
        f.weight_ = k;
        f.degree_ = 2;
        f.D_ = Dcore;
        f.embedding_ = embedding;
        f.precision_ = std::min(N, f1.precision());
        Quad a2{tr / 2, BigRat(square) * (embedding == 0 ? 1 : -1) / 2};
        // eigenvector f = f1 + y f2 with y = (a2 - m11)/m12  (m12 = 1 here)
        if (m12 == 0) throw Error("eigenforms: unexpected zero coupling in T_2 matrix");
        Quad y = quad_scale(quad_add(a2, Quad{-m11, 0}), BigRat(1) / m12);
        f.ax_.assign(static_cast<std::size_t>(f.precision_ + 1), BigRat(0));
        f.ay_.assign(static_cast<std::size_t>(f.precision_ + 1), BigRat(0));
        for (int64 n = 1; n <= f.precision_; ++n) {
            Quad coeff = quad_add(Quad{f1.a(n), 0}, quad_mul(y, Quad{f2.a(n), 0}, BigInt(Dcore)));
            f.ax_[static_cast<std::size_t>(n)] = coeff.x;
            f.ay_[static_cast<std::size_t>(n)] = coeff.y;
        }
        finish_lambdas(f);
        out.push_back(std::move(f));
    }
    return out;
}

double hecke_relation_residual(const Eigenform& f, int64 m, int64 n) {
    double lhs = f.lambda(m) * f.lambda(n);
    double rhs = 0.0;
    for (int64 d : divisors(gcd64(m, n))) rhs += f.lambda(m * n / (d * d));
    return std::abs(lhs - rhs);
}

} // namespace vforge
