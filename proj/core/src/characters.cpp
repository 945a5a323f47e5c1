#include "vforge/characters.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>

namespace vforge {

namespace {

int64 odd_prime_power_generator(int64 p, int e) {
    // smallest primitive root mod p, lifted to p^e (g or g+p)
    int64 phi_p = p - 1;
    Factorization f = factorize(phi_p);
    int64 g = 0;
    for (int64 cand = 2; cand < p; ++cand) {
        bool ok = true;
        for (const auto& pp : f.factors) {
            if (pow_mod(cand, phi_p / pp.prime, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            g = cand;
            break;
        }
    }
    if (e == 1) return g;
    int64 p2 = p * p;
    if (pow_mod(g, p - 1, p2) == 1) g += p;
    return g;
}

std::shared_ptr<const UnitGroup> build_unit_group(int64 q) {
    auto G = std::make_shared<UnitGroup>();
    G->q = q;
    if (q > 1) {
        for (const auto& pp : factorize(q).factors) {
            UnitGroup::Component comp;
            comp.primePower = pp.value;
            comp.prime = pp.prime;
            comp.exponent = pp.exponent;
            comp.dlog.assign(static_cast<std::size_t>(pp.value), -1);
            if (pp.prime == 2) {
                if (pp.exponent == 1) {
                    comp.dlog[1 % 2] = 0;
                } else if (pp.exponent == 2) {
                    comp.generators = {3};
                    comp.orders = {2};
                    comp.dlog[1] = 0;
                    comp.dlog[3] = 1;
                } else {
                    int64 m = pp.value;
                    int64 ord5 = m / 4;
                    comp.generators = {m - 1, 5};
                    comp.orders = {2, ord5};
                    int64 pow5 = 1;
                    for (int64 b = 0; b < ord5; ++b) {
                        comp.dlog[static_cast<std::size_t>(pow5)] =
                            static_cast<std::int32_t>(b);
                        comp.dlog[static_cast<std::size_t>(m - pow5)] =
                            static_cast<std::int32_t>(ord5 + b);
                        pow5 = pow5 * 5 % m;
                    }
                }
            } else {
                int64 g = odd_prime_power_generator(pp.prime, pp.exponent);
                int64 phi = pp.value / pp.prime * (pp.prime - 1);
                comp.generators = {g % pp.value};
                comp.orders = {phi};
                int64 x = 1;
                for (int64 i = 0; i < phi; ++i) {
                    comp.dlog[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(i);
                    x = mul_mod(x, g, pp.value);
                }
            }
            G->components.push_back(std::move(comp));
        }
    }
    G->exponent = 1;
    for (const auto& comp : G->components)
        for (int64 d : comp.orders) {
            G->generator_orders.push_back(d);
            G->exponent = lcm64(G->exponent, d);
        }
    return G;
}

} // namespace

std::shared_ptr<const UnitGroup> UnitGroup::get(int64 q) {
    if (q < 1) throw OutOfRange("UnitGroup: q >= 1 required");
    static std::shared_mutex mtx;
    static std::map<int64, std::shared_ptr<const UnitGroup>> cache;
    {
        std::shared_lock lock(mtx);
        auto it = cache.find(q);
        if (it != cache.end()) return it->second;
    }
    auto G = build_unit_group(q);
    std::unique_lock lock(mtx);
    return cache.emplace(q, std::move(G)).first->second;
}

DirichletCharacter::DirichletCharacter(int64 q)
    : q_(q), group_(UnitGroup::get(q)), exps_(group_->generator_orders.size(), 0) {
    init();
}

DirichletCharacter::DirichletCharacter(int64 q, std::vector<int64> exponents)
    : q_(q), group_(UnitGroup::get(q)), exps_(std::move(exponents)) {
    if (exps_.size() != group_->generator_orders.size())
        throw InvalidParams("DirichletCharacter: exponent vector length mismatch");
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        int64 d = group_->generator_orders[i];
        exps_[i] %= d;
        if (exps_[i] < 0) exps_[i] += d;
    }
    init();
}

void DirichletCharacter::init() {
    // order = lcm of the per-generator orders d/gcd(d, t)
    order_ = 1;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        int64 d = group_->generator_orders[i];
        order_ = lcm64(order_, d / gcd64(d, exps_[i]));
    }
    // conductor is multiplicative over the prime-power components
    conductor_ = 1;
    std::size_t idx = 0;
    for (const auto& comp : group_->components) {
        if (comp.prime == 2) {
            if (comp.exponent == 1) {
                // trivial component
            } else if (comp.exponent == 2) {
                int64 t = exps_[idx++];
                if (t % 2 != 0) conductor_ *= 4;
            } else {
                int64 t1 = exps_[idx++];
                int64 t5 = exps_[idx++];
                int64 d5 = comp.orders[1] / gcd64(comp.orders[1], t5);
                if (d5 > 1) {
                    // chi(5) has 2-power order d5; local conductor 4*d5
                    conductor_ *= 4 * d5;
                } else if (t1 % 2 != 0) {
                    conductor_ *= 4;
                }
            }
        } else {
            int64 t = exps_[idx++];
            int64 d = comp.orders[0] / gcd64(comp.orders[0], t);
            if (d > 1) {
                // v_p(d) + 1 copies of p
                int64 f = comp.prime;
                int64 dd = d;
                while (dd % comp.prime == 0) {
                    f *= comp.prime;
                    dd /= comp.prime;
                }
                conductor_ *= f;
            }
        }
    }
    if (order_ <= 512) {
        auto tbl = std::make_shared<std::vector<std::complex<double>>>();
        tbl->reserve(static_cast<std::size_t>(order_));
        for (int64 t = 0; t < order_; ++t) {
            double a = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(order_);
            tbl->push_back({std::cos(a), std::sin(a)});
        }
        roots_ = std::move(tbl);
    }
}

DirichletCharacter::Root DirichletCharacter::value_root(int64 n) const {
    Root r;
    if (q_ == 1) {
        r.zero = false;
        return r;
    }
    int64 m = n % q_;
    if (m < 0) m += q_;
    if (gcd64(m, q_) != 1) return r;
    // exponent of chi(n) as a power of zeta_M, M = group exponent
    const int64 M = group_->exponent;
    int64 t = 0;
    std::size_t idx = 0;
    for (const auto& comp : group_->components) {
        std::int32_t lg = comp.dlog[static_cast<std::size_t>(m % comp.primePower)];
        if (comp.generators.size() == 2) {
            int64 ord5 = comp.orders[1];
            int64 l1 = lg / ord5;
            int64 l5 = lg % ord5;
            t = (t + exps_[idx] * l1 % M * (M / comp.orders[0])) % M;
            t = (t + exps_[idx + 1] * l5 % M * (M / ord5)) % M;
            idx += 2;
        } else if (comp.generators.size() == 1) {
            t = (t + exps_[idx] * static_cast<int64>(lg) % M * (M / comp.orders[0])) % M;
            idx += 1;
        }
    }
    // rescale from zeta_M to zeta_order: order | M and M | t*order
    r.zero = false;
    r.order = order_;
    r.exp = t * order_ / M % order_;
    return r;
}

Cyclotomic DirichletCharacter::value_exact(int64 n) const {
    Root r = value_root(n);
    if (r.zero) return Cyclotomic(order_);
    return Cyclotomic::root(order_, r.exp);
}

std::complex<double> DirichletCharacter::value(int64 n) const {
    Root r = value_root(n);
    if (r.zero) return {0.0, 0.0};
    if (roots_) return (*roots_)[static_cast<std::size_t>(r.exp)];
    double a = 2.0 * std::numbers::pi * static_cast<double>(r.exp) / static_cast<double>(r.order);
    return {std::cos(a), std::sin(a)};
}

DirichletCharacter DirichletCharacter::conjugate() const {
    std::vector<int64> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        e[i] = (group_->generator_orders[i] - exps_[i]) % group_->generator_orders[i];
    return DirichletCharacter(q_, std::move(e));
}

DirichletCharacter product(const DirichletCharacter& a, const DirichletCharacter& b) {
    if (gcd64(a.modulus(), b.modulus()) != 1)
        throw InvalidParams("product: moduli must be coprime");
    int64 q = a.modulus() * b.modulus();
    auto G = UnitGroup::get(q);
    auto Ga = UnitGroup::get(a.modulus());
    // exponents align componentwise; components are sorted by prime in both
    std::vector<int64> e;
    std::size_t ia = 0, ib = 0;
    auto take = [&](const DirichletCharacter& src, std::size_t& i, std::size_t count) {
        for (std::size_t k = 0; k < count; ++k) e.push_back(src.exponents()[i++]);
    };
    for (const auto& comp : G->components) {
        std::size_t n = comp.generators.size();
        if (a.modulus() % comp.prime == 0) take(a, ia, n);
        else take(b, ib, n);
    }
    (void)Ga;
    return DirichletCharacter(q, std::move(e));
}

std::vector<DirichletCharacter> character_group(int64 q) {
    if (q < 1 || q > 10'000) throw OutOfRange("character_group: 1 <= q <= 10^4");
    auto G = UnitGroup::get(q);
    std::vector<DirichletCharacter> out;
    std::vector<int64> e(G->generator_orders.size(), 0);
    while (true) {
        out.emplace_back(q, e);
        std::size_t i = 0;
        for (; i < e.size(); ++i) {
            if (++e[i] < G->generator_orders[i]) break;
            e[i] = 0;
        }
        if (i == e.size()) break;
    }
    return out;
}

std::vector<DirichletCharacter> primitive_characters(int64 q) {
    std::vector<DirichletCharacter> out;
    for (auto& chi : character_group(q))
        if (chi.is_primitive()) out.push_back(std::move(chi));
    return out;
}

GaussSum gauss_sum(const DirichletCharacter& chi) {
    const int64 q = chi.modulus();
    GaussSum g{Cyclotomic(1), {0.0, 0.0}};
    if (q == 1) {
        g.exact = Cyclotomic::integer(1);
        g.eps = {1.0, 0.0};
        return g;
    }
    const int64 L = lcm64(q, chi.order());
    Cyclotomic exact(L);
    std::complex<double> num{0.0, 0.0};
    const double w = 2.0 * std::numbers::pi / static_cast<double>(q);
    for (int64 a = 0; a < q; ++a) {
        auto r = chi.value_root(a);
        if (r.zero) continue;
        exact.add_root(r.exp * (L / r.order) + a * (L / q), 1);
        num += chi.value(a) * std::complex<double>(std::cos(w * static_cast<double>(a)),
                                                   std::sin(w * static_cast<double>(a)));
    }
    g.exact = std::move(exact);
    g.eps = num / std::sqrt(static_cast<double>(q));
    return g;
}

TwistCheck primitive_twist_relation(const DirichletCharacter& chi, int64 m) {
    if (!chi.is_primitive()) throw NotPrimitive("primitive_twist_relation: chi must be primitive");
    const int64 q = chi.modulus();
    TwistCheck out;
    if (q == 1) {
        out.exact_ok = true;
        out.residual = 0.0;
        return out;
    }
    const int64 L = lcm64(q, chi.order());
    Cyclotomic lhs(L);
    std::complex<double> lhs_num{0.0, 0.0};
    const double w = 2.0 * std::numbers::pi / static_cast<double>(q);
    for (int64 a = 0; a < q; ++a) {
        auto r = chi.value_root(a);
        if (r.zero) continue;
        int64 am = mul_mod(a, m, q);
        lhs.add_root(r.exp * (L / r.order) + am * (L / q), 1);
        lhs_num += chi.value(a) * std::complex<double>(std::cos(w * static_cast<double>(am)),
                                                       std::sin(w * static_cast<double>(am)));
    }
    GaussSum g = gauss_sum(chi);
    auto chibar_m = chi.conjugate().value_root(m);
    Cyclotomic rhs(L);
    if (!chibar_m.zero)
        rhs = g.exact.lifted_to(L) * Cyclotomic::root(L, chibar_m.exp * (L / chibar_m.order));
    std::complex<double> rhs_num =
        std::sqrt(static_cast<double>(q)) * g.eps * chi.conjugate().value(m);
    out.exact_ok = (lhs - rhs).is_zero();
    out.residual = std::abs(lhs_num - rhs_num);
    return out;
}

} // namespace vforge
