#pragma once

#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hbstretch/mat2.hpp"

namespace hbstretch {

/// Which group the conjugators range over. SL2 uses A^{+-1}, B^{+-1}
/// (these generate SL2(Z)); GL2 adds the determinant -1 swap.
enum class ConjugacyMode { SL2, GL2 };

inline std::vector<Mat2> conjugacy_generators(ConjugacyMode mode) {
    std::vector<Mat2> gens = {Mat2::gen_upper(), Mat2::gen_upper().inverse(),
                              Mat2::gen_lower(), Mat2::gen_lower().inverse()};
    if (mode == ConjugacyMode::GL2) gens.push_back(Mat2::gen_swap());
    return gens;
}

/// All conjugates g m g^-1 with g a generator word of length <= depth,
/// keyed by the matrix text form.
inline std::unordered_set<std::string> conjugate_ball(const Mat2& m, int depth,
                                                      ConjugacyMode mode) {
    auto gens = conjugacy_generators(mode);
    std::unordered_set<std::string> seen{m.to_string()};
    std::deque<Mat2> frontier{m};
    for (int level = 0; level < depth && !frontier.empty(); ++level) {
        std::deque<Mat2> next;
        for (const Mat2& cur : frontier) {
            for (const Mat2& g : gens) {
                Mat2 cand = conjugate(cur, g);
                if (seen.insert(cand.to_string()).second) next.push_back(cand);
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

/// True iff some product P of at most conj_word_bound factors from the
/// generator set satisfies P M P^-1 = N. Search meets in the middle: balls of
/// radius ceil(b/2) around M and floor(b/2) around N intersect exactly when
/// such a P exists (generator set is closed under inverses). A false answer
/// means "not found within the bound", not a proof of non-conjugacy.
inline bool brute_conjugacy_oracle(const Mat2& m, const Mat2& n,
                                   int conj_word_bound,
                                   ConjugacyMode mode = ConjugacyMode::GL2) {
    if (m == n) return true;
    if (det(m) != det(n) || trace(m) != trace(n)) return false;
    int half_up = (conj_word_bound + 1) / 2;
    int half_down = conj_word_bound / 2;
    auto ball_m = conjugate_ball(m, half_up, mode);
    auto gens = conjugacy_generators(mode);
    std::unordered_set<std::string> seen{n.to_string()};
    if (ball_m.count(n.to_string())) return true;
    std::deque<Mat2> frontier{n};
    for (int level = 0; level < half_down && !frontier.empty(); ++level) {
        std::deque<Mat2> next;
        for (const Mat2& cur : frontier) {
            for (const Mat2& g : gens) {
                Mat2 cand = conjugate(cur, g);
                if (!seen.insert(cand.to_string()).second) continue;
                if (ball_m.count(cand.to_string())) return true;
                next.push_back(cand);
            }
        }
        frontier = std::move(next);
    }
    return false;
}

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    int add() {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace detail

/// Groups `mats` into conjugacy classes: sound with respect to true
/// conjugacy (every merge is witnessed by actual conjugators) and complete
/// for conjugator words up to `conj_word_bound`, plus whatever transitive
/// chaining adds. Returns a class id per input (ids are find-compressed).
///
/// Each new class representative publishes a ball of radius
/// conj_word_bound - probe_depth; every candidate probes with radius
/// probe_depth, so probe + publish covers the full bound. Ball collisions
/// union the classes.
inline std::vector<int> group_into_classes(const std::vector<Mat2>& mats,
                                           int conj_word_bound,
                                           ConjugacyMode mode) {
    const int probe_depth = conj_word_bound / 3;
    const int publish_depth = conj_word_bound - probe_depth;
    std::unordered_map<std::string, int> membership;
    detail::UnionFind uf;
    std::vector<int> ids(mats.size(), -1);
    for (std::size_t i = 0; i < mats.size(); ++i) {
        auto it = membership.find(mats[i].to_string());
        if (it != membership.end()) {
            ids[i] = it->second;
            continue;
        }
        int found = -1;
        auto probe = conjugate_ball(mats[i], probe_depth, mode);
        for (const std::string& key : probe) {
            auto hit = membership.find(key);
            if (hit == membership.end()) continue;
            if (found < 0) {
                found = hit->second;
            } else {
                uf.unite(found, hit->second);
            }
        }
        if (found < 0) {
            found = uf.add();
            for (const std::string& key :
                 conjugate_ball(mats[i], publish_depth, mode)) {
                auto [hit, inserted] = membership.emplace(key, found);
                if (!inserted) uf.unite(found, hit->second);
            }
        } else {
            for (const std::string& key : probe) membership.emplace(key, found);
        }
        ids[i] = found;
    }
    for (auto& id : ids) id = uf.find(id);
    return ids;
}

}  // namespace hbstretch
