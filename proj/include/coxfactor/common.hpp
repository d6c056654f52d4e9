#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace coxfactor {

using BigInt = boost::multiprecision::cpp_int;

enum class Family { A, B, D };

inline char family_letter(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::D: return 'D';
    }
    return '?';
}

inline Family family_from_letter(char c) {
    switch (c) {
        case 'A': case 'a': return Family::A;
        case 'B': case 'b': return Family::B;
        case 'D': case 'd': return Family::D;
    }
    throw std::invalid_argument(std::string("unknown family letter: ") + c);
}

// Number of symbols the group permutes (with signs for B/D).
inline int domain_size(Family family, int rank) {
    return family == Family::A ? rank + 1 : rank;
}

inline void require_rank(Family family, int rank) {
    int min_rank = family == Family::D ? 2 : 1;
    if (rank < min_rank)
        throw std::invalid_argument("rank " + std::to_string(rank) + " too small for family " +
                                    family_letter(family));
}

}  // namespace coxfactor
