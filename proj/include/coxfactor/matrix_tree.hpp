#pragma once

#include "coxfactor/common.hpp"
#include "coxfactor/goulden_yong.hpp"

#include <vector>

namespace coxfactor {

struct DirectedEdge {
    int from = 0;
    int to = 0;
    BigInt weight = 1;

    friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

// Parallel edges may be listed repeatedly or folded into the weight.
struct DirectedMultigraph {
    int vertex_count = 0;
    std::vector<DirectedEdge> edges;

    friend bool operator==(const DirectedMultigraph&,
                           const DirectedMultigraph&) = default;
};

// Dense square matrix of exact integers, 1-based like the vertex labels.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    explicit IntegerMatrix(int size) : size_(size), data_(size * size) {}

    int size() const { return size_; }
    BigInt& at(int i, int j) { return data_[(i - 1) * size_ + (j - 1)]; }
    const BigInt& at(int i, int j) const {
        return data_[(i - 1) * size_ + (j - 1)];
    }

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    int size_ = 0;
    std::vector<BigInt> data_;
};

// Diagonal = weighted outdegree, entry (i,j) = -(total weight of edges from
// v_i to v_j). Self-loops are ignored; rows sum to zero.
IntegerMatrix laplacian(const DirectedMultigraph& g);

// Exact determinant via fraction-free Bareiss elimination.
BigInt determinant(IntegerMatrix m);

// Determinant of the matrix with row and column i removed. By the matrix-tree
// theorem, on a Laplacian this is the weight sum of spanning arborescences
// oriented toward v_i.
BigInt minor_det(const IntegerMatrix& m, int i);

// The counting graph for rank n: vertices [n+1], a directed edge i -> n+1
// for each i in [n], and both directions between distinct i, j in [n]. The
// weighted variant puts weight 2 on every ascending edge (i < j, including
// j = n+1) and weight 1 on descending ones.
DirectedMultigraph build_G_An(int n, bool weighted = false);

// Flags the factor positions of a dual tree rooted at n+1: position i is
// flagged when vertex i is a child of the root or sits below a larger parent
// label. These are exactly the one-way positions of the factorization the
// tree came from.
std::vector<bool> descent_classify(const RootedLabeledTree& t);

BigInt catalan(int k);
BigInt factorial(int k);

}  // namespace coxfactor
