#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "dlz/errors.hpp"

namespace dlz {

using Complex = std::complex<double>;

// A Dirichlet character mod q, represented exactly: chi(n) = e^{2 pi i
// exponent[n]/order_denominator} for gcd(n,q)=1 and 0 otherwise.  The
// exponent table makes multiplicativity exact (index arithmetic mod R);
// the complex table is a cache of the same data.
struct DirichletCharacter {
    int q = 0;
    int index = 0;              // lexicographic label of the exponent vector; 0 = principal
    int order_denominator = 1;  // R = exponent of (Z/q)*; all chi values are R-th roots of unity
    std::vector<int> exponent;  // size q, indexed by n mod q; -1 where chi(n) = 0
    std::vector<Complex> values;
    int conductor = 1;
    bool primitive = false;
    int kappa = 0;  // 0 if chi(-1) = 1, 1 if chi(-1) = -1

    bool is_principal() const { return index == 0; }

    // chi(n) for any integer n (reduced mod q; negative n allowed).
    Complex eval(long long n) const {
        long long r = n % q;
        if (r < 0) r += q;
        return values[static_cast<std::size_t>(r)];
    }

    // exponent of chi(n) as a root of unity (k in chi(n)=e^{2 pi i k/R}), or -1.
    int exponent_at(long long n) const {
        long long r = n % q;
        if (r < 0) r += q;
        return exponent[static_cast<std::size_t>(r)];
    }
};

// The multiplicative group (Z/q)* decomposed into cyclic components (CRT
// over the prime-power factors of q, with the usual two-generator split
// at 2^e for e >= 3).  Builds characters, discrete logs, conductors.
class DirichletGroup {
public:
    explicit DirichletGroup(int q);

    int modulus() const { return q_; }
    int size() const { return phi_; }  // number of characters = phi(q)
    int exponent_denominator() const { return R_; }

    DirichletCharacter character(int index) const;
    std::vector<DirichletCharacter> all() const;

    // Index of the complex-conjugate character.
    int conjugate_index(int index) const;

private:
    struct Component {
        long long generator;  // lifted generator mod q
        int order;
    };

    int q_;
    int phi_;
    int R_;  // lcm of component orders
    std::vector<Component> components_;
    // dlog_[j][n] = discrete log of n w.r.t. component j (-1 if gcd(n,q)>1)
    std::vector<std::vector<int>> dlogs_;

    std::vector<int> decode_index(int index) const;
};

// All phi(q) characters mod q; principal character first (index 0).
std::vector<DirichletCharacter> enumerate_characters(int q);

// chi(n) for any integer n, reduced mod q.
Complex chi_eval(const DirichletCharacter& chi, long long n);

// Gauss sum tau(chi) = sum_{a=1}^{q} chi(a) e^{2 pi i a/q}; requires chi primitive.
Complex gauss_sum(const DirichletCharacter& chi);

// Root number eps(chi) = tau(chi) / (i^kappa sqrt(q)); requires chi primitive.
Complex root_number(const DirichletCharacter& chi);

// Least prime m with m not dividing q.
int smallest_nondividing_prime(int q);

// Conjugate character (same group, conjugated values).
DirichletCharacter conjugate_character(const DirichletCharacter& chi);

}  // namespace dlz
