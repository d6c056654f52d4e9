#pragma once

#include "coxfactor/common.hpp"
#include "coxfactor/group_element.hpp"

#include <map>
#include <vector>

namespace coxfactor {

struct Reflection {
    std::vector<int> root;  // positive root vector
    GroupElement action;
    int index = 0;  // position within RootSystem::reflections (0-based)

    friend bool operator==(const Reflection& x, const Reflection& y) {
        return x.root == y.root && x.action == y.action;
    }
};

// Root system with its full reflection set. A_n lives in R^{n+1} with roots
// e_j - e_i; B_n adds the short roots e_i to the long roots e_j -+/+ e_i of D_n.
class RootSystem {
public:
    static RootSystem make(Family family, int rank);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    int dimension() const { return dimension_; }
    const std::vector<std::vector<int>>& positive_roots() const { return positive_roots_; }
    const std::vector<Reflection>& reflections() const { return reflections_; }
    const std::vector<int>& exponents() const { return exponents_; }
    int coxeter_number() const { return coxeter_number_; }

    bool is_positive_root(const std::vector<int>& v) const;
    // Index of the reflection whose root is +-v; -1 when v is not a root.
    int reflection_index(const std::vector<int>& v) const;
    const Reflection& reflection_from_root(const std::vector<int>& v) const;

    BigInt group_order() const;

private:
    Family family_ = Family::A;
    int rank_ = 0;
    int dimension_ = 0;
    std::vector<std::vector<int>> positive_roots_;
    std::vector<Reflection> reflections_;
    std::vector<int> exponents_;
    int coxeter_number_ = 0;
    std::map<std::vector<int>, int> root_index_;
};

// s_alpha(v) = v - 2(v,alpha)/(alpha,alpha) alpha, read off on basis vectors.
GroupElement reflection_action(Family family, int rank, const std::vector<int>& root);

// Number of positive roots mapped to negative ones (word length over the
// simple generators).
int coxeter_length(const RootSystem& R, const GroupElement& w);

// rank(I - M_w) = minimal number of reflections multiplying to w.
int absolute_length(const RootSystem& R, const GroupElement& w);

bool is_reflection(const RootSystem& R, const GroupElement& w);

// Integer basis of the fixed space ker(I - M_w); the moved space im(I - M_w)
// is its orthogonal complement.
std::vector<std::vector<int>> fixed_space_basis(const GroupElement& w);

// True when v lies in the moved space of w.
bool in_moved_space(const GroupElement& w, const std::vector<int>& v);

// A: the cycle 1 -> 2 -> ... -> n+1 -> 1.
// B: i -> i+1 for i < n, n -> -1.
// D: 1 -> -1 and 2 -> 3 -> ... -> n -> -2.
GroupElement standard_coxeter_element(const RootSystem& R);

// Checks the signed cycle type: one (n+1)-cycle (A), one negative n-cycle (B),
// a negative 1-cycle plus a negative (n-1)-cycle (D).
bool is_coxeter_element(const RootSystem& R, const GroupElement& w);

// prod_i (e_i + h + 1) * n! / |W|
BigInt ordered_w_catalan(const RootSystem& R);

}  // namespace coxfactor
