#include "coxfactor/factorization.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace coxfactor {

namespace {

// Reflection with root w(alpha), i.e. the conjugate w s w^{-1}.
const Reflection& conjugate_reflection(const RootSystem& R, const GroupElement& w,
                                       const Reflection& s) {
    return R.reflection_from_root(apply_to_vector(w, s.root));
}

// Positive roots of the parabolic subgroup moved by w, i.e. positive roots
// lying in im(I - M_w), then the ones not expressible as a sum of two others.
std::set<std::vector<int>> parabolic_simples(const RootSystem& R, const GroupElement& w) {
    std::set<std::vector<int>> sub;
    for (const auto& alpha : R.positive_roots())
        if (in_moved_space(w, alpha)) sub.insert(alpha);
    std::set<std::vector<int>> simple = sub;
    for (const auto& b : sub) {
        for (const auto& g : sub) {
            std::vector<int> sum(b.size());
            for (size_t i = 0; i < b.size(); ++i) sum[i] = b[i] + g[i];
            simple.erase(sum);
        }
    }
    return simple;
}

void enumerate_rec(const RootSystem& R, const GroupElement& remaining, int depth,
                   std::vector<const Reflection*>& picked,
                   std::vector<MinimalFactorization>& out, const GroupElement& c) {
    if (depth == 0) {
        if (!remaining.is_identity()) return;
        MinimalFactorization f{c, {}};
        f.factors.reserve(picked.size());
        for (const auto* t : picked) f.factors.push_back(*t);
        out.push_back(std::move(f));
        return;
    }
    for (const auto& t : R.reflections()) {
        GroupElement rest = compose(t.action, remaining);
        if (absolute_length(R, rest) != depth - 1) continue;
        picked.push_back(&t);
        enumerate_rec(R, rest, depth - 1, picked, out, c);
        picked.pop_back();
    }
}

}  // namespace

GroupElement product(const MinimalFactorization& f) {
    return prefix_product(f, f.size());
}

GroupElement prefix_product(const MinimalFactorization& f, int k) {
    GroupElement w = identity_element(f.coxeter.family, f.coxeter.rank);
    for (int i = 0; i < k; ++i) w = compose(w, f.factors[i].action);
    return w;
}

void validate_factorization(const RootSystem& R, const MinimalFactorization& f) {
    validate_element(f.coxeter);
    if (f.coxeter.family != R.family() || f.coxeter.rank != R.rank())
        throw std::invalid_argument("factorization does not belong to this root system");
    for (const auto& t : f.factors) {
        int idx = R.reflection_index(t.root);
        if (idx < 0 || !(R.reflections()[idx] == t))
            throw std::invalid_argument("factor is not a reflection of this system");
    }
    if (product(f) != f.coxeter)
        throw std::invalid_argument("factors do not multiply to the stated element");
    for (int k = 0; k <= f.size(); ++k)
        if (absolute_length(R, prefix_product(f, k)) != k)
            throw std::invalid_argument("prefix chain does not rise one reflection per step");
}

std::vector<MinimalFactorization> enumerate_minimal_factorizations(const RootSystem& R,
                                                                   const GroupElement& c,
                                                                   int threads) {
    validate_element(c);
    if (!is_coxeter_element(R, c))
        throw std::invalid_argument("element is not a Coxeter element of this system");
    int n = R.rank();
    if (absolute_length(R, c) != n)
        throw std::logic_error("coxeter element has unexpected absolute length");

    int nrefl = static_cast<int>(R.reflections().size());
    if (threads <= 1 || n == 0) {
        std::vector<MinimalFactorization> out;
        std::vector<const Reflection*> picked;
        enumerate_rec(R, c, n, picked, out, c);
        return out;
    }

    // Fan out over the first factor; buckets keep the lexicographic order.
    std::vector<std::vector<MinimalFactorization>> buckets(nrefl);
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    int workers = std::min(threads, nrefl);
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < nrefl; i = next.fetch_add(1)) {
                const auto& first = R.reflections()[i];
                GroupElement rest = compose(first.action, c);
                if (absolute_length(R, rest) != n - 1) continue;
                std::vector<const Reflection*> picked{&first};
                enumerate_rec(R, rest, n - 1, picked, buckets[i], c);
            }
        });
    }
    for (auto& th : pool) th.join();
    std::vector<MinimalFactorization> out;
    for (auto& b : buckets)
        for (auto& f : b) out.push_back(std::move(f));
    return out;
}

std::vector<bool> one_way_flags(const RootSystem& R, const MinimalFactorization& f) {
    std::vector<bool> flags(f.size());
    int prev = 0;
    for (int i = 1; i <= f.size(); ++i) {
        int cur = coxeter_length(R, prefix_product(f, i));
        flags[i - 1] = prev < cur;
        prev = cur;
    }
    return flags;
}

std::vector<bool> interval_refinement_flags(const RootSystem& R, const MinimalFactorization& f) {
    std::vector<bool> flags(f.size());
    auto prev = parabolic_simples(R, identity_element(f.coxeter.family, f.coxeter.rank));
    for (int i = 1; i <= f.size(); ++i) {
        auto cur = parabolic_simples(R, prefix_product(f, i));
        flags[i - 1] = std::includes(cur.begin(), cur.end(), prev.begin(), prev.end());
        prev = std::move(cur);
    }
    return flags;
}

std::vector<bool> kreweras_one_way_flags(const RootSystem& R, const MinimalFactorization& f) {
    int n = f.size();
    std::vector<bool> flags(n);
    auto kreweras = [&](int k) { return compose(inverse(prefix_product(f, k)), f.coxeter); };
    GroupElement prev = kreweras(0);  // = c
    int prev_len = coxeter_length(R, prev);
    for (int i = 1; i <= n; ++i) {
        GroupElement cur = kreweras(i);
        // K(pi_i) is covered by K(pi_{i-1}) in absolute order
        if (absolute_length(R, cur) != absolute_length(R, prev) - 1 ||
            !is_reflection(R, compose(inverse(cur), prev)))
            throw std::logic_error("kreweras complements do not form a cover chain");
        int cur_len = coxeter_length(R, cur);
        flags[i - 1] = cur_len < prev_len;
        prev = std::move(cur);
        prev_len = cur_len;
    }
    return flags;
}

OneWayProfile one_way_profile(const RootSystem& R, const MinimalFactorization& f) {
    return {one_way_flags(R, f), kreweras_one_way_flags(R, f)};
}

BigInt signed_count(const RootSystem& R, const GroupElement& c, int threads) {
    BigInt total = 0;
    for (const auto& f : enumerate_minimal_factorizations(R, c, threads)) {
        int ones = 0;
        for (bool b : one_way_flags(R, f)) ones += b;
        total += BigInt(1) << ones;
    }
    return total;
}

MinimalFactorization braid_sigma(const RootSystem& R, const MinimalFactorization& f, int i) {
    if (i < 1 || i >= f.size()) throw std::invalid_argument("braid position out of range");
    MinimalFactorization g = f;
    g.factors[i - 1] = conjugate_reflection(R, f.factors[i - 1].action, f.factors[i]);
    g.factors[i] = f.factors[i - 1];
    return g;
}

MinimalFactorization braid_sigma_inv(const RootSystem& R, const MinimalFactorization& f, int i) {
    if (i < 1 || i >= f.size()) throw std::invalid_argument("braid position out of range");
    MinimalFactorization g = f;
    g.factors[i - 1] = f.factors[i];
    g.factors[i] = conjugate_reflection(R, inverse(f.factors[i].action), f.factors[i - 1]);
    return g;
}

MinimalFactorization reverse(const MinimalFactorization& f) {
    MinimalFactorization g{inverse(f.coxeter), {f.factors.rbegin(), f.factors.rend()}};
    return g;
}

MinimalFactorization garside_half_twist(const RootSystem& R, const MinimalFactorization& f) {
    MinimalFactorization g = f;
    // delta_k = sigma_1 ... sigma_{k-1} applied right to left, k = 2..n
    for (int k = 2; k <= f.size(); ++k)
        for (int j = k - 1; j >= 1; --j) g = braid_sigma(R, g, j);
    return g;
}

MinimalFactorization reverse_garside(const RootSystem& R, const MinimalFactorization& f) {
    MinimalFactorization g{inverse(f.coxeter), f.factors};
    GroupElement prefix = identity_element(f.coxeter.family, f.coxeter.rank);
    for (int i = 0; i < f.size(); ++i) {
        g.factors[i] = conjugate_reflection(R, prefix, f.factors[i]);
        prefix = compose(prefix, f.factors[i].action);
    }
    if (f.size() > 0 && !(reverse(garside_half_twist(R, f)) == g))
        throw std::logic_error("half-twist route disagrees with the closed form");
    return g;
}

std::vector<int> trail(const RootSystem& R, const MinimalFactorization& f, int i) {
    if (i < 1 || i > f.size()) throw std::invalid_argument("trail position out of range");
    std::vector<int> result{i};
    const Reflection* g = &f.factors[i - 1];
    for (int j = i - 1; j >= 1; --j) {
        const Reflection* h = &conjugate_reflection(R, f.factors[j - 1].action, *g);
        if (!(h->root == g->root)) result.push_back(j);
        g = h;
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace coxfactor
