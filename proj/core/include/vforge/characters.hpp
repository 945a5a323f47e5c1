#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "vforge/cyclotomic.hpp"
#include "vforge/residue.hpp"

namespace vforge {

// Unit group (Z/qZ)^x as a product of cyclic components with fixed,
// reproducible generators: odd p^e uses the smallest primitive root mod p
// (adjusted to stay primitive mod p^2), 2^2 uses -1, and 2^e >= 8 uses the
// pair <-1, 5>. Components are ordered by increasing prime, and for
// 2^e >= 8 the -1 generator precedes 5. Discrete-log tables are built once
// per modulus and shared.
struct UnitGroup {
    struct Component {
        int64 primePower = 1;
        int64 prime = 1;
        int exponent = 0;
        std::vector<int64> generators;      // residues mod primePower
        std::vector<int64> orders;          // matching generator orders
        std::vector<std::int32_t> dlog;     // residue -> flattened log, -1 if non-unit
    };
    int64 q = 1;
    std::vector<Component> components;
    std::vector<int64> generator_orders;    // flattened across components
    int64 exponent = 1;                     // lcm of generator orders

    static std::shared_ptr<const UnitGroup> get(int64 q);
};

class DirichletCharacter {
public:
    // principal character
    explicit DirichletCharacter(int64 q);
    // character from exponents on the documented generating set
    DirichletCharacter(int64 q, std::vector<int64> exponents);

    int64 modulus() const { return q_; }
    int64 order() const { return order_; }
    int64 conductor() const { return conductor_; }
    bool is_primitive() const { return conductor_ == q_; }
    bool is_principal() const { return order_ == 1; }
    bool is_real() const { return order_ <= 2; }
    const std::vector<int64>& exponents() const { return exps_; }

    // chi(n) as an exact root of unity zeta_order^exp, or zero.
    struct Root {
        bool zero = true;
        int64 order = 1;
        int64 exp = 0;
    };
    Root value_root(int64 n) const;
    Cyclotomic value_exact(int64 n) const;
    std::complex<double> value(int64 n) const;

    DirichletCharacter conjugate() const;

    bool same_character(const DirichletCharacter& o) const {
        return q_ == o.q_ && exps_ == o.exps_;
    }

private:
    void init();

    int64 q_ = 1;
    std::shared_ptr<const UnitGroup> group_;
    std::vector<int64> exps_;
    int64 order_ = 1;
    int64 conductor_ = 1;
    std::shared_ptr<const std::vector<std::complex<double>>> roots_; // order_-th roots, may be null
};

// Product of characters with coprime moduli: the character mod q1*q2 whose
// value at n is chi1(n)*chi2(n).
DirichletCharacter product(const DirichletCharacter& a, const DirichletCharacter& b);

// All phi(q) characters mod q, principal first, enumerated in mixed-radix
// order of the exponent vectors. 1 <= q <= 10^4.
std::vector<DirichletCharacter> character_group(int64 q);

std::vector<DirichletCharacter> primitive_characters(int64 q);

struct GaussSum {
    Cyclotomic exact;              // sum chi(alpha) zeta_q^alpha, un-normalized
    std::complex<double> eps;      // the same divided by sqrt(q)
};

GaussSum gauss_sum(const DirichletCharacter& chi);

struct TwistCheck {
    bool exact_ok = false;   // difference vanishes in Z[zeta]
    double residual = 0.0;   // | sum chi(a) e_q(am) - sqrt(q) eps chibar(m) |
};

// For primitive chi: sum_alpha chi(alpha) e_q(alpha m) = chibar(m) * g(chi).
TwistCheck primitive_twist_relation(const DirichletCharacter& chi, int64 m);

} // namespace vforge
