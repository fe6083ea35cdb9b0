#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "chibound/graph.hpp"

namespace chibound {

// Thrown when a "G is X-free" precondition fails.  The witness carries the
// induced embedding of the offending pattern so callers can re-verify it.
class forbidden_pattern_error : public std::runtime_error {
public:
    forbidden_pattern_error(const std::string& what, Witness w)
        : std::runtime_error(what), witness(std::move(w)) {}

    Witness witness;
};

inline long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Erdos--Szekeres: R(s,t) <= binom(s+t-2, t-1).
inline long long ramsey_bound(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("ramsey_bound: s,t must be >= 1");
    return binom(s + t - 2, t - 1);
}

// chi <= binom(w,t-1)*f + binom(w,t)*g for (K_t u H)-free graphs.  Below
// w = t-1 the first term degenerates, but the graph is then K_t-free and f
// alone bounds it, hence the clamp.
inline long long eq31(int w, int t, long long f, long long g) {
    return binom(std::max<long long>(w, t - 1), t - 1) * f + binom(w, t) * g;
}

// m(x) = C * sum_{i=1}^{t-2} binom(x,i): colors spent on the maximum clique's
// close neighborhood in the pineapple argument.
inline long long pineapple_m(int x, int t, long long c) {
    long long s = 0;
    for (int i = 1; i <= t - 2; ++i) s += binom(x, i);
    return c * s;
}

// g(x) = (t*binom(x,t)+1) * m(x) * binom(x+k-3, k-1).
inline long long pineapple_g(int x, int t, int k, long long c) {
    return (t * binom(x, t) + 1) * pineapple_m(x, t, c) * binom(x + k - 3, k - 1);
}

// chi <= w + m*sum_{i=1}^{2t-4} binom(w,i) + m*binom(w,2t-3)*(w-(2t-3)) + m
// for (t-lollipop, 2K*_{2t-3})-free graphs.
inline long long eq51(int w, int t, long long m) {
    long long s = 0;
    for (int i = 1; i <= 2 * t - 4; ++i) s += binom(w, i);
    long long third = binom(w, 2 * t - 3) * std::max(0, w - (2 * t - 3));
    return w + m * s + m * third + m;
}

// Block budget of the bowtie partition: ceil((w + 3*binom(w,3))/2) + 1.
inline long long bowtie_f(int w) {
    long long blocks = w + 3 * binom(w, 3);
    return (blocks + 1) / 2 + 1;
}

struct BoundReport {
    std::string bound_name;  // eq31 | pineapple_g | eq51 | bowtie_f
    std::map<std::string, long long> inputs;
    long long bound_value = 0;
    long long achieved = 0;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["bound_name"] = bound_name;
        j["inputs"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : inputs) j["inputs"][k] = v;
        j["bound_value"] = bound_value;
        j["achieved"] = achieved;
        return j;
    }
};

namespace detail {

// Lexicographic (ascending) k-subsets of `pool`.
template <typename F>
inline void for_each_subset(const std::vector<int>& pool, int k, F&& f) {
    int n = static_cast<int>(pool.size());
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<int> s(k);
        for (int i = 0; i < k; ++i) s[i] = pool[idx[i]];
        f(s);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// All colorers promise achieved <= bound_value; a violation means the
// surrounding recursion no longer matches the proof it implements.
inline void check_bound(const BoundReport& r) {
    if (r.achieved > r.bound_value)
        throw std::logic_error("bound report violated: " + r.bound_name + " achieved " +
                               std::to_string(r.achieved) + " > bound " +
                               std::to_string(r.bound_value));
}

}  // namespace detail

}  // namespace chibound
