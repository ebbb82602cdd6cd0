#include "dlz/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <unordered_map>

namespace dlz {
namespace {

long long power_mod(long long base, long long exp, long long mod) {
    long long result = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> ps;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Primitive root mod p^e for odd prime p.
long long primitive_root_odd(long long p, int e) {
    long long phi_p = p - 1;
    auto ps = prime_factors(phi_p);
    long long g = 0;
    for (long long cand = 2; cand < p; ++cand) {
        bool ok = true;
        for (long long f : ps) {
            if (power_mod(cand, phi_p / f, p) == 1) {
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
    // g is primitive mod p; g or g+p is primitive mod p^2 and then mod p^e.
    long long p2 = p * p;
    if (power_mod(g, p - 1, p2) == 1) g += p;
    return g;
}

// CRT lift: x = r mod pk, x = 1 mod (q/pk).
long long crt_lift(long long r, long long pk, long long q) {
    long long rest = q / pk;
    for (long long x = r; x < q; x += pk) {
        if (rest == 1 || x % rest == 1) return x;
    }
    throw DomainError("crt_lift failed");  // unreachable for valid input
}

}  // namespace

DirichletGroup::DirichletGroup(int q) : q_(q) {
    if (q < 3) throw DomainError("modulus must be >= 3");

    // Factor q into prime powers.
    struct PrimePower {
        long long p;
        int e;
        long long pk;
    };
    std::vector<PrimePower> factors;
    {
        long long n = q;
        for (long long p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                int e = 0;
                long long pk = 1;
                while (n % p == 0) {
                    n /= p;
                    ++e;
                    pk *= p;
                }
                factors.push_back({p, e, pk});
            }
        }
        if (n > 1) factors.push_back({n, 1, n});
    }
    std::sort(factors.begin(), factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.p < b.p; });

    // Cyclic components, 2-part first.
    for (const auto& f : factors) {
        if (f.p == 2) {
            if (f.e == 1) continue;  // (Z/2)* trivial
            if (f.e == 2) {
                components_.push_back({crt_lift(3, 4, q), 2});
            } else {
                long long pk = f.pk;
                components_.push_back({crt_lift(pk - 1, pk, q), 2});
                components_.push_back({crt_lift(3, pk, q), static_cast<int>(pk / 4)});
            }
        } else {
            long long g = primitive_root_odd(f.p, f.e);
            long long phi_pk = f.pk / f.p * (f.p - 1);
            components_.push_back({crt_lift(g, f.pk, q), static_cast<int>(phi_pk)});
        }
    }

    phi_ = 1;
    for (const auto& f : factors) phi_ *= static_cast<int>(f.pk / f.p * (f.p - 1));

    R_ = 1;
    for (const auto& c : components_) R_ = std::lcm(R_, c.order);

    // Discrete logs: enumerate every exponent tuple (q is desk scale, so
    // recomputing the group element per tuple is fine).
    dlogs_.assign(components_.size(), std::vector<int>(q_, -1));
    std::size_t total = 1;
    for (const auto& c : components_) total *= static_cast<std::size_t>(c.order);
    std::vector<int> exps(components_.size(), 0);
    for (std::size_t step = 0; step < total; ++step) {
        long long value = 1;
        for (std::size_t k = 0; k < components_.size(); ++k)
            value = value * power_mod(components_[k].generator, exps[k], q_) % q_;
        for (std::size_t j = 0; j < components_.size(); ++j)
            dlogs_[j][static_cast<std::size_t>(value)] = exps[j];
        for (std::size_t j = components_.size(); j-- > 0;) {
            if (++exps[j] < components_[j].order) break;
            exps[j] = 0;
        }
    }
}

std::vector<int> DirichletGroup::decode_index(int index) const {
    if (index < 0 || index >= phi_) throw DomainError("character index out of range");
    std::vector<int> c(components_.size(), 0);
    int rest = index;
    for (std::size_t j = components_.size(); j-- > 0;) {
        c[j] = rest % components_[j].order;
        rest /= components_[j].order;
    }
    return c;
}

DirichletCharacter DirichletGroup::character(int index) const {
    const auto c = decode_index(index);

    DirichletCharacter chi;
    chi.q = q_;
    chi.index = index;
    chi.order_denominator = R_;
    chi.exponent.assign(static_cast<std::size_t>(q_), -1);
    chi.values.assign(static_cast<std::size_t>(q_), Complex(0.0, 0.0));

    const double two_pi = 2.0 * std::numbers::pi;
    for (int n = 0; n < q_; ++n) {
        if (std::gcd(n, q_) != 1) continue;
        long long k = 0;
        for (std::size_t j = 0; j < components_.size(); ++j) {
            long long lj = dlogs_[j][static_cast<std::size_t>(n)];
            k += static_cast<long long>(c[j]) * lj % R_ * (R_ / components_[j].order) % R_;
        }
        k %= R_;
        // exact small-angle evaluation of the root of unity
        int ki = static_cast<int>(k);
        chi.exponent[static_cast<std::size_t>(n)] = ki;
        double angle = two_pi * static_cast<double>(ki) / static_cast<double>(R_);
        chi.values[static_cast<std::size_t>(n)] = Complex(std::cos(angle), std::sin(angle));
    }

    // kappa from chi(-1) = chi(q-1): exponent 0 -> even, R/2 -> odd.
    chi.kappa = chi.exponent[static_cast<std::size_t>(q_ - 1)] == 0 ? 0 : 1;

    // Conductor: smallest divisor d of q such that chi(a) = 1 for every
    // a = 1 (mod d) with gcd(a, q) = 1.
    chi.conductor = q_;
    for (int d = 1; d <= q_; ++d) {
        if (q_ % d != 0) continue;
        bool induced = true;
        for (int a = 1; a < q_ && induced; a += d) {
            if (std::gcd(a, q_) != 1) continue;
            if (chi.exponent[static_cast<std::size_t>(a)] != 0) induced = false;
        }
        if (induced) {
            chi.conductor = d;
            break;
        }
    }
    chi.primitive = (chi.conductor == q_);
    return chi;
}

std::vector<DirichletCharacter> DirichletGroup::all() const {
    std::vector<DirichletCharacter> out;
    out.reserve(static_cast<std::size_t>(phi_));
    for (int i = 0; i < phi_; ++i) out.push_back(character(i));
    return out;
}

int DirichletGroup::conjugate_index(int index) const {
    auto c = decode_index(index);
    int enc = 0;
    for (std::size_t j = 0; j < components_.size(); ++j) {
        int order = components_[j].order;
        int cj = c[j] == 0 ? 0 : order - c[j];
        enc = enc * order + cj;
    }
    return enc;
}

std::vector<DirichletCharacter> enumerate_characters(int q) {
    return DirichletGroup(q).all();
}

Complex chi_eval(const DirichletCharacter& chi, long long n) { return chi.eval(n); }

Complex gauss_sum(const DirichletCharacter& chi) {
    if (!chi.primitive)
        throw DomainError("gauss_sum requires a primitive character");
    const double two_pi = 2.0 * std::numbers::pi;
    Complex sum(0.0, 0.0);
    for (int a = 1; a <= chi.q; ++a) {
        Complex v = chi.eval(a);
        if (v == Complex(0.0, 0.0)) continue;
        double angle = two_pi * static_cast<double>(a) / static_cast<double>(chi.q);
        sum += v * Complex(std::cos(angle), std::sin(angle));
    }
    return sum;
}

Complex root_number(const DirichletCharacter& chi) {
    if (!chi.primitive)
        throw DomainError("root_number requires a primitive character");
    Complex tau = gauss_sum(chi);
    Complex ik = chi.kappa == 0 ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
    return tau / (ik * std::sqrt(static_cast<double>(chi.q)));
}

int smallest_nondividing_prime(int q) {
    if (q < 3) throw DomainError("modulus must be >= 3");
    auto is_prime = [](int n) {
        for (int d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return n >= 2;
    };
    for (int m = 2;; ++m) {
        if (is_prime(m) && q % m != 0) return m;
    }
}

DirichletCharacter conjugate_character(const DirichletCharacter& chi) {
    DirichletGroup group(chi.q);
    return group.character(group.conjugate_index(chi.index));
}

}  // namespace dlz
