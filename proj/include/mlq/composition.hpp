#pragma once

// Compositions (finite vectors of nonnegative ints), partitions, and the small
// combinatorial maps used throughout: rearrangements, adjacent swaps, cyclic
// shifts, sorting permutations, containment enumeration.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "mlq/errors.hpp"

namespace mlq {

using Composition = std::vector<int>;

inline void check_composition(const Composition& mu) {
    if (mu.empty()) throw MismatchedArity("composition must have length >= 1");
    for (int p : mu)
        if (p < 0) throw MismatchedArity("composition parts must be >= 0");
}

inline int largest_part(const Composition& mu) {
    int L = 0;
    for (int p : mu) L = std::max(L, p);
    return L;
}

inline int weight(const Composition& mu) { return std::accumulate(mu.begin(), mu.end(), 0); }

inline bool is_partition(const Composition& la) {
    return std::is_sorted(la.begin(), la.end(), std::greater<int>());
}

// Parts sorted weakly decreasing; same length as the input.
inline Composition sorted_type(Composition mu) {
    std::sort(mu.begin(), mu.end(), std::greater<int>());
    return mu;
}

// s_i exchanges parts i and i+1 (i is 1-based, 1 <= i <= n-1).
inline Composition swap_adjacent(Composition mu, int i) {
    if (i < 1 || i >= static_cast<int>(mu.size()))
        throw IndexOutOfRange("swap index " + std::to_string(i));
    std::swap(mu[i - 1], mu[i]);
    return mu;
}

// (mu_n, mu_1, ..., mu_{n-1})
inline Composition cyclic_right(Composition mu) {
    std::rotate(mu.begin(), mu.end() - 1, mu.end());
    return mu;
}

// (mu_2, ..., mu_n, mu_1)
inline Composition cyclic_left(Composition mu) {
    std::rotate(mu.begin(), mu.begin() + 1, mu.end());
    return mu;
}

// All distinct rearrangements, in increasing lexicographic order.
inline std::vector<Composition> rearrangements(Composition la) {
    check_composition(la);
    std::sort(la.begin(), la.end());
    std::vector<Composition> out;
    do {
        out.push_back(la);
    } while (std::next_permutation(la.begin(), la.end()));
    return out;
}

// lambda with every positive part lowered by one.
inline Composition lower_parts(Composition la) {
    for (int& p : la) p = std::max(p - 1, 0);
    return la;
}

inline Composition pad_to(Composition la, int n) {
    while (static_cast<int>(la.size()) < n) la.push_back(0);
    return la;
}

inline Composition strip_trailing_zeros(Composition la) {
    while (la.size() > 1 && la.back() == 0) la.pop_back();
    return la;
}

// The longest permutation sigma sorting mu weakly increasingly: mu[sigma_1] <=
// ... <= mu[sigma_n] with equal parts taken in decreasing position order.
// Values and positions are 1-based.
inline std::vector<int> sorting_permutation_longest(const Composition& mu) {
    const int n = static_cast<int>(mu.size());
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    std::stable_sort(sigma.begin(), sigma.end(), [&](int a, int b) {
        if (mu[a - 1] != mu[b - 1]) return mu[a - 1] < mu[b - 1];
        return a > b;
    });
    return sigma;
}

// All partitions contained in the staircase box given by `box` (a partition),
// padded with zeros to box length, in increasing lexicographic order.
inline std::vector<Composition> partitions_inside(const Composition& box) {
    if (!is_partition(box)) throw MismatchedArity("containment box must be a partition");
    const int n = static_cast<int>(box.size());
    std::vector<Composition> out;
    Composition cur(n, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        int hi = std::min(box[i], i == 0 ? box[0] : cur[i - 1]);
        for (int v = 0; v <= hi; ++v) {
            cur[i] = v;
            self(self, i + 1);
        }
        cur[i] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// All partitions with total size <= max_weight and at most max_parts nonzero
// parts, padded to max_parts (at least length 1).
inline std::vector<Composition> partitions_weight_at_most(int max_weight, int max_parts) {
    std::vector<Composition> out;
    Composition cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        out.push_back(pad_to(cur, std::max(max_parts, 1)));
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (int v = std::min(cap, remaining); v >= 1; --v) {
            cur.push_back(v);
            self(self, remaining - v, v);
            cur.pop_back();
        }
    };
    rec(rec, max_weight, max_weight);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::string composition_str(const Composition& mu) {
    std::string s;
    for (size_t i = 0; i < mu.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(mu[i]);
    }
    return s;
}

inline Composition parse_composition(const std::string& s) {
    Composition mu;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string part = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            size_t used = 0;
            int v = std::stoi(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            mu.push_back(v);
        } catch (const std::exception&) {
            throw MismatchedArity("bad composition entry: '" + part + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    check_composition(mu);
    return mu;
}

}  // namespace mlq
