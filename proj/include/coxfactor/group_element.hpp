#pragma once

#include "coxfactor/common.hpp"

#include <compare>
#include <vector>

namespace coxfactor {

// Element of a reflection group of type A, B or D stored as a signed
// permutation: images[i-1] = w(i) for i = 1..m, extended by w(-i) = -w(i).
// Type A elements are plain permutations of [rank+1] (no negative images);
// type D elements flip an even number of signs.
struct GroupElement {
    Family family = Family::A;
    int rank = 0;
    std::vector<int> images;

    int domain() const { return static_cast<int>(images.size()); }
    int apply(int x) const;
    bool is_identity() const;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

GroupElement identity_element(Family family, int rank);

// Throws std::invalid_argument on malformed images or sign-rule violations.
void validate_element(const GroupElement& w);

// (u * v)(x) = u(v(x)); in products the rightmost factor acts first.
GroupElement compose(const GroupElement& u, const GroupElement& v);

GroupElement inverse(const GroupElement& w);

// Linear action on integer coordinate vectors: w(e_i) = sign(w(i)) e_{|w(i)|}.
std::vector<int> apply_to_vector(const GroupElement& w, const std::vector<int>& v);

// Orbit structure on symbols: (orbit length on absolute values, sign flag).
// An orbit is negative when following w around it returns -i instead of i.
std::vector<std::pair<int, bool>> signed_cycle_type(const GroupElement& w);

std::string to_string(const GroupElement& w);

}  // namespace coxfactor
