#include "vforge/cyclotomic.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <sstream>

namespace vforge {

namespace {

std::atomic<int64> g_order_limit{1'000'000};

// Per-order reduction plan: prime-power axes of the CRT exponent split.
struct Axis {
    int64 dim;    // p^a
    int64 prime;  // p
    int64 step;   // p^(a-1)
    int64 crt;    // inverse of (L/p^a) mod p^a; exponent e maps to e*crt mod dim
    int64 stride; // tensor stride
    int64 lift;   // exponent of zeta_L representing zeta_dim (for reduced())
};

struct OrderPlan {
    int64 L = 1;
    std::vector<Axis> axes;
};

const OrderPlan& order_plan(int64 L) {
    static std::shared_mutex mtx;
    static std::map<int64, OrderPlan> cache;
    {
        std::shared_lock lock(mtx);
        auto it = cache.find(L);
        if (it != cache.end()) return it->second;
    }
    OrderPlan plan;
    plan.L = L;
    Factorization f = factorize(L);
    int64 stride = 1;
    for (const auto& pp : f.factors) {
        Axis ax;
        ax.dim = pp.value;
        ax.prime = pp.prime;
        ax.step = pp.value / pp.prime;
        ax.crt = mod_inverse((L / pp.value) % pp.value, pp.value);
        ax.stride = stride;
        stride *= pp.value;
        plan.axes.push_back(ax);
    }
    // zeta_dim_i = zeta_L^lift_i: need lift*crt_i == 1 mod dim_i and
    // lift == 0 mod dim_j for j != i; take lift = (L/dim_i) * inv(crt_i*(L/dim_i))...
    // since crt_i = inv(L/dim_i), zeta_L^(L/dim_i) already maps to
    // zeta_dim_i^((L/dim_i)*crt_i) = zeta_dim_i, so lift_i = L/dim_i.
    for (auto& ax : plan.axes) ax.lift = L / ax.dim;
    std::unique_lock lock(mtx);
    return cache.emplace(L, std::move(plan)).first->second;
}

} // namespace

int64 cyclotomic_order_limit() { return g_order_limit.load(); }
void set_cyclotomic_order_limit(int64 limit) { g_order_limit.store(limit); }

int64 checked_add(int64 a, int64 b) {
    int64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowPolicy("cyclotomic coefficient overflow (add)");
    return r;
}

int64 checked_mul(int64 a, int64 b) {
    int64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowPolicy("cyclotomic coefficient overflow (mul)");
    return r;
}

Cyclotomic::Cyclotomic(int64 order) : order_(order) {
    if (order < 1) throw OutOfRange("Cyclotomic: order must be >= 1");
    if (order > cyclotomic_order_limit())
        throw OverflowPolicy("Cyclotomic: order exceeds configured limit");
    coeffs_.assign(static_cast<std::size_t>(order), 0);
}

Cyclotomic Cyclotomic::root(int64 order, int64 j) {
    Cyclotomic x(order);
    x.add_root(j, 1);
    return x;
}

Cyclotomic Cyclotomic::integer(int64 n) {
    Cyclotomic x(1);
    x.coeffs_[0] = n;
    return x;
}

void Cyclotomic::add_root(int64 j, int64 c) {
    j %= order_;
    if (j < 0) j += order_;
    auto& slot = coeffs_[static_cast<std::size_t>(j)];
    slot = checked_add(slot, c);
}

bool Cyclotomic::structurally_zero() const {
    for (int64 c : coeffs_)
        if (c != 0) return false;
    return true;
}

Cyclotomic Cyclotomic::lifted_to(int64 new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0)
        throw InvalidParams("lifted_to: new order must be a multiple of the old");
    Cyclotomic r(new_order);
    int64 scale = new_order / order_;
    for (int64 j = 0; j < order_; ++j) {
        int64 c = coeffs_[static_cast<std::size_t>(j)];
        if (c != 0) r.coeffs_[static_cast<std::size_t>(j * scale)] = c;
    }
    return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    int64 L = lcm64(order_, o.order_);
    Cyclotomic r = lifted_to(L);
    r += o;
    return r;
}

void Cyclotomic::operator+=(const Cyclotomic& o) {
    if (o.order_ == order_) {
        for (int64 j = 0; j < order_; ++j) {
            int64 c = o.coeffs_[static_cast<std::size_t>(j)];
            if (c != 0) add_root(j, c);
        }
        return;
    }
    int64 L = lcm64(order_, o.order_);
    *this = lifted_to(L);
    int64 scale = L / o.order_;
    for (int64 j = 0; j < o.order_; ++j) {
        int64 c = o.coeffs_[static_cast<std::size_t>(j)];
        if (c != 0) add_root(j * scale, c);
    }
}

void Cyclotomic::operator-=(const Cyclotomic& o) {
    *this += -o;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    return *this + (-o);
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r(*this);
    for (auto& c : r.coeffs_) c = checked_mul(c, -1);
    return r;
}

Cyclotomic Cyclotomic::scaled(int64 k) const {
    Cyclotomic r(*this);
    for (auto& c : r.coeffs_)
        if (c != 0) c = checked_mul(c, k);
    return r;
}

Cyclotomic Cyclotomic::conj() const {
    Cyclotomic r(order_);
    for (int64 j = 0; j < order_; ++j) {
        int64 c = coeffs_[static_cast<std::size_t>(j)];
        if (c != 0) r.coeffs_[static_cast<std::size_t>((order_ - j) % order_)] = c;
    }
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    int64 L = lcm64(order_, o.order_);
    if (L > cyclotomic_order_limit())
        throw OverflowPolicy("Cyclotomic product: lcm of orders exceeds limit");
    Cyclotomic a = lifted_to(L);
    Cyclotomic b = o.lifted_to(L);
    // iterate over nonzeros of the sparser factor
    if (a.nonzero_count() < b.nonzero_count()) std::swap(a, b);
    Cyclotomic r(L);
    for (int64 j = 0; j < L; ++j) {
        int64 cb = b.coeffs_[static_cast<std::size_t>(j)];
        if (cb == 0) continue;
        for (int64 i = 0; i < L; ++i) {
            int64 ca = a.coeffs_[static_cast<std::size_t>(i)];
            if (ca == 0) continue;
            int64 k = i + j;
            if (k >= L) k -= L;
            auto& slot = r.coeffs_[static_cast<std::size_t>(k)];
            slot = checked_add(slot, checked_mul(ca, cb));
        }
    }
    return r;
}

std::size_t Cyclotomic::nonzero_count() const {
    std::size_t n = 0;
    for (int64 c : coeffs_)
        if (c != 0) ++n;
    return n;
}

namespace {

// In-place reduction of the CRT tensor to the product power basis:
// along each axis, rewrite exponents >= (p-1)*p^(a-1) through
// Phi_{p^a}(x) = 1 + x^{p^(a-1)} + ... + x^{(p-1)p^(a-1)}.
void tensor_reduce(std::vector<int64>& t, const OrderPlan& plan) {
    const int64 L = plan.L;
    for (const auto& ax : plan.axes) {
        const int64 d = ax.dim, p = ax.prime, step = ax.step, stride = ax.stride;
        const int64 phi = d - step;
        const int64 outer = L / (d * stride);
        for (int64 o = 0; o < outer; ++o) {
            for (int64 inner = 0; inner < stride; ++inner) {
                const int64 base = o * d * stride + inner;
                for (int64 e = d - 1; e >= phi; --e) {
                    int64 c = t[static_cast<std::size_t>(base + e * stride)];
                    if (c == 0) continue;
                    t[static_cast<std::size_t>(base + e * stride)] = 0;
                    const int64 u = e - phi;
                    for (int64 j = 0; j < p - 1; ++j) {
                        auto& slot = t[static_cast<std::size_t>(base + (u + j * step) * stride)];
                        slot = checked_add(slot, -c);
                    }
                }
            }
        }
    }
}

} // namespace

bool Cyclotomic::is_zero() const {
    if (structurally_zero()) return true;
    if (order_ == 1) return coeffs_[0] == 0;
    const OrderPlan& plan = order_plan(order_);
    std::vector<int64> t(static_cast<std::size_t>(order_), 0);
    for (int64 j = 0; j < order_; ++j) {
        int64 c = coeffs_[static_cast<std::size_t>(j)];
        if (c == 0) continue;
        int64 idx = 0;
        for (const auto& ax : plan.axes)
            idx += ((j % ax.dim) * ax.crt % ax.dim) * ax.stride;
        auto& slot = t[static_cast<std::size_t>(idx)];
        slot = checked_add(slot, c);
    }
    tensor_reduce(t, plan);
    for (int64 c : t)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::equals(const Cyclotomic& o) const {
    return (*this - o).is_zero();
}

Cyclotomic Cyclotomic::reduced() const {
    if (order_ == 1) return *this;
    const OrderPlan& plan = order_plan(order_);
    std::vector<int64> t(static_cast<std::size_t>(order_), 0);
    for (int64 j = 0; j < order_; ++j) {
        int64 c = coeffs_[static_cast<std::size_t>(j)];
        if (c == 0) continue;
        int64 idx = 0;
        for (const auto& ax : plan.axes)
            idx += ((j % ax.dim) * ax.crt % ax.dim) * ax.stride;
        auto& slot = t[static_cast<std::size_t>(idx)];
        slot = checked_add(slot, c);
    }
    tensor_reduce(t, plan);
    Cyclotomic r(order_);
    for (int64 idx = 0; idx < order_; ++idx) {
        int64 c = t[static_cast<std::size_t>(idx)];
        if (c == 0) continue;
        int64 rem = idx, e = 0;
        for (const auto& ax : plan.axes) {
            int64 comp = rem % ax.dim;
            rem /= ax.dim;
            e = (e + comp % order_ * (ax.lift % order_)) % order_;
        }
        r.add_root(e, c);
    }
    return r;
}

std::complex<double> Cyclotomic::embed() const {
    const double w = 2.0 * std::numbers::pi / static_cast<double>(order_);
    std::complex<double> s{0.0, 0.0};
    for (int64 j = 0; j < order_; ++j) {
        int64 c = coeffs_[static_cast<std::size_t>(j)];
        if (c == 0) continue;
        double a = w * static_cast<double>(j);
        s += static_cast<double>(c) * std::complex<double>(std::cos(a), std::sin(a));
    }
    return s;
}

std::string Cyclotomic::to_string() const {
    Cyclotomic r = reduced();
    std::ostringstream os;
    bool first = true;
    for (int64 j = 0; j < r.order_; ++j) {
        int64 c = r.coeffs_[static_cast<std::size_t>(j)];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        int64 a = c > 0 ? c : -c;
        if (j == 0) os << a;
        else {
            if (a != 1) os << a << "*";
            os << "z" << r.order_ << "^" << j;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

// exact division: num / den with den monic, both dense, remainder must vanish
std::vector<int64> exact_poly_divide(std::vector<int64> num, const std::vector<int64>& den) {
    const std::size_t dn = num.size() - 1;
    const std::size_t dd = den.size() - 1;
    std::vector<int64> q(dn - dd + 1, 0);
    for (std::size_t i = dn + 1; i-- > dd;) {
        int64 c = num[i];
        if (c == 0) continue;
        std::size_t shift = i - dd;
        q[shift] = c;
        for (std::size_t j = 0; j <= dd; ++j)
            num[shift + j] = checked_add(num[shift + j], -checked_mul(c, den[j]));
    }
    for (int64 c : num)
        if (c != 0) throw Error("exact_poly_divide: nonzero remainder");
    return q;
}

} // namespace

const std::vector<int64>& cyclotomic_polynomial(int64 L) {
    static std::shared_mutex mtx;
    static std::map<int64, std::vector<int64>> cache;
    {
        std::shared_lock lock(mtx);
        auto it = cache.find(L);
        if (it != cache.end()) return it->second;
    }
    if (L < 1) throw OutOfRange("cyclotomic_polynomial: L >= 1 required");
    std::vector<int64> poly;
    if (L == 1) {
        poly = {-1, 1};
    } else {
        poly.assign(static_cast<std::size_t>(L + 1), 0);
        poly[0] = -1;
        poly[static_cast<std::size_t>(L)] = 1;
        for (int64 d : divisors(L)) {
            if (d == L) continue;
            poly = exact_poly_divide(std::move(poly), cyclotomic_polynomial(d));
        }
    }
    std::unique_lock lock(mtx);
    return cache.emplace(L, std::move(poly)).first->second;
}

std::vector<int64> phi_remainder(const Cyclotomic& x) {
    const auto& phi = cyclotomic_polynomial(x.order());
    std::vector<int64> rem = x.coeffs();
    const std::size_t dd = phi.size() - 1;
    if (rem.size() <= dd) {
        rem.resize(dd, 0);
        return rem;
    }
    for (std::size_t i = rem.size(); i-- > dd;) {
        int64 c = rem[i];
        if (c == 0) continue;
        std::size_t shift = i - dd;
        for (std::size_t j = 0; j <= dd; ++j)
            rem[shift + j] = checked_add(rem[shift + j], -checked_mul(c, phi[j]));
    }
    rem.resize(dd);
    return rem;
}

} // namespace vforge
