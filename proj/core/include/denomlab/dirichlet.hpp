#pragma once

#include "denomlab/numbers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dlab {

// Dirichlet character mod N, stored as exponents against a fixed generator
// system of (Z/N)^*: one cyclic factor per odd prime power, <-1> x <5> for
// the 2-part when 8 | N, <3> for modulus 4.  Labeled "N:j" with j the
// mixed-radix index of the exponent tuple; "N:0" is the principal character.
class DirichletCharacter {
public:
    struct Component {
        long long prime;
        long long prime_power;  // p^e
        long long generator;    // lift to (Z/N)^*, = 1 mod N/p^e
        long long order;        // order of the generator mod p^e
        long long exponent;     // chi(generator) = zeta_order^exponent
    };

    DirichletCharacter();  // principal character mod 1
    static DirichletCharacter principal(long long modulus);
    static DirichletCharacter from_label(const std::string& label);
    static std::vector<DirichletCharacter> all_modulo(long long modulus);
    // quadratic character a -> kronecker(disc, a); disc must be fundamental
    static DirichletCharacter kronecker(long long disc);

    long long modulus() const { return modulus_; }
    long long order() const { return order_; }
    long long conductor() const;
    bool is_principal() const { return order_ == 1; }
    bool is_primitive() const { return conductor() == modulus_; }
    int parity() const;  // chi(-1)
    bool is_even() const { return parity() == 1; }

    // chi(a) = zeta_order^e; empty when gcd(a, N) > 1
    std::optional<long long> value_exponent(long long a) const;
    CyclotomicNumber value(long long a) const;  // element of Q(zeta_order)
    long long value_int(long long a) const;     // order <= 2 only: -1, 0, 1

    DirichletCharacter primitive_part() const;
    // character mod m induced by this one; conductor must divide m
    DirichletCharacter induced_modulo(long long m) const;
    DirichletCharacter conjugate() const;
    std::string label() const;

    const std::vector<Component>& components() const { return comps_; }

    friend DirichletCharacter operator*(const DirichletCharacter& a,
                                        const DirichletCharacter& b);
    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
        return a.modulus_ == b.modulus_ && a.exponents() == b.exponents();
    }

private:
    explicit DirichletCharacter(long long modulus);
    std::vector<long long> exponents() const;
    void set_order();

    long long modulus_ = 1;
    long long order_ = 1;
    std::vector<Component> comps_;
};

// sum of chi(a) zeta_N^a over a mod N, in Q(zeta_lcm(N, order))
CyclotomicNumber gauss_sum(const DirichletCharacter& chi);

// D = disc * f^2 with disc fundamental; requires D = 0, 1 mod 4, D != 0
std::pair<long long, long long> fundamental_discriminant(long long D);

}  // namespace dlab
