#pragma once

#include "coxfactor/root_system.hpp"

#include <vector>

namespace coxfactor {

// Ordered factorization c = r_1 r_2 ... r_k into reflections (right factor
// acts first). Minimal means k = absolute_length(c).
struct MinimalFactorization {
    GroupElement coxeter;
    std::vector<Reflection> factors;

    int size() const { return static_cast<int>(factors.size()); }

    friend bool operator==(const MinimalFactorization& x, const MinimalFactorization& y) {
        if (x.coxeter != y.coxeter || x.factors.size() != y.factors.size()) return false;
        for (size_t i = 0; i < x.factors.size(); ++i)
            if (x.factors[i].root != y.factors[i].root) return false;
        return true;
    }
};

struct OneWayProfile {
    std::vector<bool> flags;           // cover pi_{i-1} < pi_i rises in weak order
    std::vector<bool> kreweras_flags;  // same question for the complements c, K(pi_1), ...
};

// A factorization together with a sign per factor.
struct SignedFactorization {
    MinimalFactorization factorization;
    std::vector<int> signs;  // entries +1 / -1
};

GroupElement product(const MinimalFactorization& f);
GroupElement prefix_product(const MinimalFactorization& f, int k);  // r_1 ... r_k

// Checks factors against R, the product, and that every prefix climbs the
// absolute order by exactly one. Throws std::invalid_argument.
void validate_factorization(const RootSystem& R, const MinimalFactorization& f);

// All minimal reflection factorizations of c in lexicographic order of
// reflection indices. threads > 1 fans the search out over the first factor.
std::vector<MinimalFactorization> enumerate_minimal_factorizations(const RootSystem& R,
                                                                   const GroupElement& c,
                                                                   int threads = 1);

// flag_i is true when coxeter_length(pi_{i-1}) < coxeter_length(pi_i), i.e.
// the i-th cover of the prefix chain rises in weak Bruhat order.
std::vector<bool> one_way_flags(const RootSystem& R, const MinimalFactorization& f);

// Same flags, decided by whether every simple root of the parabolic moved by
// pi_{i-1} stays simple for the parabolic moved by pi_i.
std::vector<bool> interval_refinement_flags(const RootSystem& R, const MinimalFactorization& f);

// Same flags, read off the Kreweras complements K(w) = w^{-1} c: flag_i is
// true when coxeter_length(K(pi_i)) < coxeter_length(K(pi_{i-1})).
std::vector<bool> kreweras_one_way_flags(const RootSystem& R, const MinimalFactorization& f);

OneWayProfile one_way_profile(const RootSystem& R, const MinimalFactorization& f);

// Sum of 2^{#one-way positions} over all minimal factorizations of c; counts
// the factorizations with an arbitrary sign on each one-way factor.
BigInt signed_count(const RootSystem& R, const GroupElement& c, int threads = 1);

// Braid group action on positions i, i+1 (1-based):
//   sigma_i:   (..., r_i, r_{i+1}, ...) -> (..., r_i r_{i+1} r_i, r_i, ...)
//   sigma_i^-1:(..., r_i, r_{i+1}, ...) -> (..., r_{i+1}, r_{i+1} r_i r_{i+1}, ...)
MinimalFactorization braid_sigma(const RootSystem& R, const MinimalFactorization& f, int i);
MinimalFactorization braid_sigma_inv(const RootSystem& R, const MinimalFactorization& f, int i);

// Reversal: (r_1, ..., r_k) -> (r_k, ..., r_1), a factorization of c^{-1}.
MinimalFactorization reverse(const MinimalFactorization& f);

// Garside half twist Delta = delta_n delta_{n-1} ... delta_2 built from the
// fundamental braids delta_k = sigma_1 ... sigma_{k-1} (rightmost first).
MinimalFactorization garside_half_twist(const RootSystem& R, const MinimalFactorization& f);

// Reverse Garside dual: reversal composed with the half twist. Closed form
// r'_i = (r_1...r_{i-1}) r_i (r_1...r_{i-1})^{-1}, checked against the braid
// route. An involution; the result factors c^{-1}.
MinimalFactorization reverse_garside(const RootSystem& R, const MinimalFactorization& f);

// Positions j <= i whose factor changes the conjugate of r_i when pushed
// through: j is listed when conjugating r_i by r_{i-1}, ..., r_j differs from
// conjugating by r_{i-1}, ..., r_{j+1}. Always contains i itself.
std::vector<int> trail(const RootSystem& R, const MinimalFactorization& f, int i);

}  // namespace coxfactor
