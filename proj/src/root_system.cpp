#include "coxfactor/root_system.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace coxfactor {

namespace {

using Rat = boost::rational<long long>;

std::vector<std::vector<int>> positive_root_vectors(Family family, int rank) {
    int d = domain_size(family, rank);
    std::vector<std::vector<int>> roots;
    auto vec = [d](std::initializer_list<std::pair<int, int>> entries) {
        std::vector<int> v(d, 0);
        for (auto [idx, val] : entries) v[idx - 1] = val;
        return v;
    };
    if (family == Family::B) {
        for (int i = 1; i <= rank; ++i) roots.push_back(vec({{i, 1}}));
    }
    for (int i = 1; i <= d; ++i) {
        for (int j = i + 1; j <= d; ++j) {
            roots.push_back(vec({{i, -1}, {j, 1}}));  // e_j - e_i
            if (family != Family::A) roots.push_back(vec({{i, 1}, {j, 1}}));
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// Row echelon over rationals; returns rank and optionally the kernel basis.
struct Echelon {
    int rank = 0;
    std::vector<std::vector<int>> kernel;  // integer vectors, content 1
};

Echelon echelon_kernel(const std::vector<std::vector<Rat>>& input, bool want_kernel) {
    auto A = input;
    int rows = static_cast<int>(A.size());
    int cols = rows ? static_cast<int>(A[0].size()) : 0;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (A[i][c] != Rat(0)) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(A[r], A[pr]);
        Rat p = A[r][c];
        for (int j = c; j < cols; ++j) A[r][j] /= p;
        for (int i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == Rat(0)) continue;
            Rat f = A[i][c];
            for (int j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    Echelon out;
    out.rank = r;
    if (!want_kernel) return out;

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> x(cols, Rat(0));
        x[f] = Rat(1);
        for (int i = 0; i < r; ++i) x[pivot_col[i]] = -A[i][f];
        long long lcm = 1;
        for (auto& q : x) lcm = std::lcm(lcm, q.denominator());
        std::vector<int> xi(cols);
        long long g = 0;
        for (int j = 0; j < cols; ++j) {
            long long v = (x[j] * lcm).numerator();
            xi[j] = static_cast<int>(v);
            g = std::gcd(g, std::llabs(v));
        }
        if (g > 1)
            for (auto& v : xi) v /= static_cast<int>(g);
        out.kernel.push_back(std::move(xi));
    }
    return out;
}

std::vector<std::vector<Rat>> one_minus_matrix(const GroupElement& w) {
    int m = w.domain();
    std::vector<std::vector<Rat>> A(m, std::vector<Rat>(m, Rat(0)));
    for (int i = 1; i <= m; ++i) {
        A[i - 1][i - 1] += 1;
        int j = w.images[i - 1];
        A[std::abs(j) - 1][i - 1] -= (j > 0 ? 1 : -1);
    }
    return A;
}

}  // namespace

RootSystem RootSystem::make(Family family, int rank) {
    require_rank(family, rank);
    RootSystem R;
    R.family_ = family;
    R.rank_ = rank;
    R.dimension_ = domain_size(family, rank);
    R.positive_roots_ = positive_root_vectors(family, rank);
    R.reflections_.reserve(R.positive_roots_.size());
    for (int i = 0; i < static_cast<int>(R.positive_roots_.size()); ++i) {
        const auto& root = R.positive_roots_[i];
        R.reflections_.push_back({root, reflection_action(family, rank, root), i});
        R.root_index_[root] = i;
    }
    switch (family) {
        case Family::A:
            for (int i = 1; i <= rank; ++i) R.exponents_.push_back(i);
            R.coxeter_number_ = rank + 1;
            break;
        case Family::B:
            for (int i = 1; i <= rank; ++i) R.exponents_.push_back(2 * i - 1);
            R.coxeter_number_ = 2 * rank;
            break;
        case Family::D:
            for (int i = 1; i < rank; ++i) R.exponents_.push_back(2 * i - 1);
            R.exponents_.push_back(rank - 1);
            std::sort(R.exponents_.begin(), R.exponents_.end());
            R.coxeter_number_ = 2 * rank - 2;
            break;
    }
    return R;
}

bool RootSystem::is_positive_root(const std::vector<int>& v) const {
    return root_index_.count(v) > 0;
}

int RootSystem::reflection_index(const std::vector<int>& v) const {
    auto it = root_index_.find(v);
    if (it != root_index_.end()) return it->second;
    std::vector<int> neg(v.size());
    for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    it = root_index_.find(neg);
    return it == root_index_.end() ? -1 : it->second;
}

const Reflection& RootSystem::reflection_from_root(const std::vector<int>& v) const {
    int idx = reflection_index(v);
    if (idx < 0) throw std::invalid_argument("vector is not a root of this system");
    return reflections_[idx];
}

BigInt RootSystem::group_order() const {
    BigInt fact = 1;
    for (int i = 2; i <= rank_ + (family_ == Family::A ? 1 : 0); ++i) fact *= i;
    if (family_ == Family::B) fact <<= rank_;
    if (family_ == Family::D) fact <<= rank_ - 1;
    return fact;
}

GroupElement reflection_action(Family family, int rank, const std::vector<int>& root) {
    int d = domain_size(family, rank);
    if (static_cast<int>(root.size()) != d)
        throw std::invalid_argument("root dimension does not match rank");
    long long norm = 0;
    for (int a : root) norm += static_cast<long long>(a) * a;
    if (norm == 0) throw std::invalid_argument("zero vector is not a root");
    GroupElement w{family, rank, std::vector<int>(d, 0)};
    for (int i = 1; i <= d; ++i) {
        // s(e_i) = e_i - (2 root_i / norm) root; exact for crystallographic roots
        long long c2 = 2LL * root[i - 1];
        if (c2 % norm != 0) throw std::invalid_argument("vector is not a root of this system");
        long long f = c2 / norm;
        int image = 0;
        for (int j = 1; j <= d; ++j) {
            long long coef = (i == j ? 1 : 0) - f * root[j - 1];
            if (coef == 0) continue;
            if (image != 0 || (coef != 1 && coef != -1))
                throw std::invalid_argument("reflection does not act by signed permutation");
            image = coef > 0 ? j : -j;
        }
        w.images[i - 1] = image;
    }
    validate_element(w);
    return w;
}

int coxeter_length(const RootSystem& R, const GroupElement& w) {
    int count = 0;
    for (const auto& alpha : R.positive_roots()) {
        auto img = apply_to_vector(w, alpha);
        for (auto& v : img) v = -v;
        if (R.is_positive_root(img)) ++count;
    }
    return count;
}

int absolute_length(const RootSystem&, const GroupElement& w) {
    return echelon_kernel(one_minus_matrix(w), false).rank;
}

bool is_reflection(const RootSystem& R, const GroupElement& w) {
    for (const auto& t : R.reflections())
        if (t.action == w) return true;
    return false;
}

std::vector<std::vector<int>> fixed_space_basis(const GroupElement& w) {
    return echelon_kernel(one_minus_matrix(w), true).kernel;
}

bool in_moved_space(const GroupElement& w, const std::vector<int>& v) {
    // im(I - M) is the orthogonal complement of ker(I - M) for orthogonal M.
    for (const auto& k : fixed_space_basis(w)) {
        long long dot = 0;
        for (size_t i = 0; i < v.size(); ++i) dot += static_cast<long long>(v[i]) * k[i];
        if (dot != 0) return false;
    }
    return true;
}

GroupElement standard_coxeter_element(const RootSystem& R) {
    int n = R.rank();
    GroupElement c{R.family(), n, std::vector<int>(R.dimension())};
    switch (R.family()) {
        case Family::A:
            for (int i = 1; i <= n; ++i) c.images[i - 1] = i + 1;
            c.images[n] = 1;
            break;
        case Family::B:
            for (int i = 1; i < n; ++i) c.images[i - 1] = i + 1;
            c.images[n - 1] = -1;
            break;
        case Family::D:
            c.images[0] = -1;
            for (int i = 2; i < n; ++i) c.images[i - 1] = i + 1;
            c.images[n - 1] = -2;
            break;
    }
    validate_element(c);
    return c;
}

bool is_coxeter_element(const RootSystem& R, const GroupElement& w) {
    if (w.family != R.family() || w.rank != R.rank()) return false;
    auto cycles = signed_cycle_type(w);
    int n = R.rank();
    switch (R.family()) {
        case Family::A:
            return cycles == std::vector<std::pair<int, bool>>{{n + 1, false}};
        case Family::B:
            return cycles == std::vector<std::pair<int, bool>>{{n, true}};
        case Family::D:
            return cycles == std::vector<std::pair<int, bool>>{{1, true}, {n - 1, true}};
    }
    return false;
}

BigInt ordered_w_catalan(const RootSystem& R) {
    BigInt num = 1;
    for (int e : R.exponents()) num *= e + R.coxeter_number() + 1;
    for (int i = 2; i <= R.rank(); ++i) num *= i;
    BigInt den = R.group_order();
    if (num % den != 0) throw std::logic_error("ordered_w_catalan is not an integer");
    return num / den;
}

}  // namespace coxfactor
