#include "coxfactor/group_element.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace coxfactor {

int GroupElement::apply(int x) const {
    int m = domain();
    if (x == 0 || std::abs(x) > m) throw std::invalid_argument("symbol out of range");
    return x > 0 ? images[x - 1] : -images[-x - 1];
}

bool GroupElement::is_identity() const {
    for (int i = 1; i <= domain(); ++i)
        if (images[i - 1] != i) return false;
    return true;
}

GroupElement identity_element(Family family, int rank) {
    require_rank(family, rank);
    GroupElement w{family, rank, std::vector<int>(domain_size(family, rank))};
    std::iota(w.images.begin(), w.images.end(), 1);
    return w;
}

void validate_element(const GroupElement& w) {
    require_rank(w.family, w.rank);
    int m = domain_size(w.family, w.rank);
    if (w.domain() != m) throw std::invalid_argument("images size does not match rank");
    std::vector<bool> seen(m + 1, false);
    int negatives = 0;
    for (int v : w.images) {
        int a = std::abs(v);
        if (a < 1 || a > m) throw std::invalid_argument("image out of range");
        if (seen[a]) throw std::invalid_argument("images are not a signed permutation");
        seen[a] = true;
        if (v < 0) ++negatives;
    }
    if (w.family == Family::A && negatives > 0)
        throw std::invalid_argument("type A elements must have positive images");
    if (w.family == Family::D && negatives % 2 != 0)
        throw std::invalid_argument("type D elements must flip an even number of signs");
}

GroupElement compose(const GroupElement& u, const GroupElement& v) {
    if (u.family != v.family || u.rank != v.rank)
        throw std::invalid_argument("cannot compose elements of different groups");
    GroupElement w{u.family, u.rank, std::vector<int>(u.domain())};
    for (int i = 1; i <= u.domain(); ++i) w.images[i - 1] = u.apply(v.apply(i));
    return w;
}

GroupElement inverse(const GroupElement& w) {
    GroupElement r{w.family, w.rank, std::vector<int>(w.domain())};
    for (int i = 1; i <= w.domain(); ++i) {
        int j = w.images[i - 1];
        r.images[std::abs(j) - 1] = j > 0 ? i : -i;
    }
    return r;
}

std::vector<int> apply_to_vector(const GroupElement& w, const std::vector<int>& v) {
    if (static_cast<int>(v.size()) != w.domain())
        throw std::invalid_argument("vector dimension does not match group domain");
    std::vector<int> r(v.size(), 0);
    for (int i = 1; i <= w.domain(); ++i) {
        int j = w.images[i - 1];
        r[std::abs(j) - 1] = (j > 0 ? 1 : -1) * v[i - 1];
    }
    return r;
}

std::vector<std::pair<int, bool>> signed_cycle_type(const GroupElement& w) {
    int m = w.domain();
    std::vector<bool> visited(m + 1, false);
    std::vector<std::pair<int, bool>> cycles;
    for (int i = 1; i <= m; ++i) {
        if (visited[i]) continue;
        int len = 0, x = i;
        do {
            visited[std::abs(x)] = true;
            x = w.apply(x);
            ++len;
        } while (std::abs(x) != i);
        cycles.emplace_back(len, x == -i);
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

std::string to_string(const GroupElement& w) {
    std::ostringstream os;
    os << family_letter(w.family) << w.rank << '[';
    for (int i = 0; i < w.domain(); ++i) {
        if (i) os << ',';
        os << w.images[i];
    }
    os << ']';
    return os.str();
}

}  // namespace coxfactor
