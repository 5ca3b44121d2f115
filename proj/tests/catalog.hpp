#pragma once

// Shared test catalog of small permutation groups plus brute-force oracles.
// The oracles deliberately avoid the library's own enumeration strategies.

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "equipass/burnside.hpp"
#include "equipass/finite_group.hpp"

namespace testutil {

using equipass::FiniteGroup;
using equipass::Permutation;

inline std::shared_ptr<const FiniteGroup> trivial_group() {
    return std::make_shared<FiniteGroup>(1, std::vector<Permutation>{}, "trivial");
}

inline std::shared_ptr<const FiniteGroup> cyclic(int n) {
    return std::make_shared<FiniteGroup>(FiniteGroup::cyclic(n));
}

inline std::shared_ptr<const FiniteGroup> klein_four() {
    auto a = Permutation::from_cycles("(0 1)(2 3)", 4);
    auto b = Permutation::from_cycles("(0 2)(1 3)", 4);
    return std::make_shared<FiniteGroup>(4, std::vector<Permutation>{a, b}, "V4");
}

inline std::shared_ptr<const FiniteGroup> dihedral4() {
    auto r = Permutation::from_cycles("(0 1 2 3)", 4);
    auto s = Permutation::from_cycles("(0 2)", 4);
    return std::make_shared<FiniteGroup>(4, std::vector<Permutation>{r, s}, "D4");
}

// Regular representation on {1,i,-1,-i,j,k,-j,-k}.
inline std::shared_ptr<const FiniteGroup> quaternion8() {
    auto i = Permutation::from_cycles("(0 1 2 3)(4 5 6 7)", 8);
    auto j = Permutation::from_cycles("(0 4 2 6)(1 7 3 5)", 8);
    return std::make_shared<FiniteGroup>(8, std::vector<Permutation>{i, j}, "Q8");
}

inline std::shared_ptr<const FiniteGroup> z2_x_z4() {
    auto a = Permutation::from_cycles("(0 1)", 6);
    auto b = Permutation::from_cycles("(2 3 4 5)", 6);
    return std::make_shared<FiniteGroup>(6, std::vector<Permutation>{a, b}, "Z2xZ4");
}

/// Order <= 16 catalog named by the acceptance criteria.
inline std::vector<std::shared_ptr<const FiniteGroup>> acceptance_catalog() {
    std::vector<std::shared_ptr<const FiniteGroup>> out;
    for (int n = 2; n <= 16; ++n) out.push_back(cyclic(n));
    out.push_back(klein_four());
    out.push_back(dihedral4());
    out.push_back(quaternion8());
    out.push_back(z2_x_z4());
    return out;
}

/// Brute-force subgroup enumeration: scans every subset of the element list
/// whose size divides |G|, keeping the ones closed under multiplication.
/// Only usable for |G| <= 16.
inline std::set<std::vector<Permutation>> brute_force_subgroups(const FiniteGroup& g) {
    const auto& els = g.elements();
    int n = static_cast<int>(els.size());
    std::set<std::vector<Permutation>> found;
    std::vector<int> others;  // indices of non-identity elements
    for (int i = 1; i < n; ++i) others.push_back(i);

    std::vector<int> chosen;
    auto closed = [&](const std::vector<int>& subset) {
        std::set<Permutation> s;
        for (int idx : subset) s.insert(els[static_cast<std::size_t>(idx)]);
        for (int a : subset)
            for (int b : subset)
                if (!s.count(els[static_cast<std::size_t>(a)] * els[static_cast<std::size_t>(b)]))
                    return false;
        return true;
    };
    // enumerate subsets of the non-identity elements of size d-1 for d | n
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        std::vector<int> mask(others.size(), 0);
        std::fill(mask.begin(), mask.begin() + (d - 1), 1);
        std::sort(mask.begin(), mask.end(), std::greater<int>());
        do {
            std::vector<int> subset = {0};
            for (std::size_t i = 0; i < mask.size(); ++i)
                if (mask[i]) subset.push_back(others[i]);
            if (static_cast<int>(subset.size()) != d) continue;
            if (closed(subset)) {
                std::vector<Permutation> sg;
                for (int idx : subset) sg.push_back(els[static_cast<std::size_t>(idx)]);
                std::sort(sg.begin(), sg.end());
                found.insert(std::move(sg));
            }
        } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    return found;
}

/// Brute-force product of basis elements: decomposes (G/K) x (G/H) with the
/// diagonal action into orbits and counts them per stabilizer class.
inline equipass::IntVec orbit_count_product(const FiniteGroup& g, const equipass::SubgroupClass& K,
                                            const equipass::SubgroupClass& H) {
    using equipass::Int;
    const auto& els = g.elements();

    auto cosets_of = [&](const std::vector<Permutation>& sub) {
        std::vector<std::vector<Permutation>> cosets;
        std::map<std::vector<Permutation>, int> id;
        for (const auto& t : els) {
            std::vector<Permutation> c;
            for (const auto& k : sub) c.push_back(t * k);
            std::sort(c.begin(), c.end());
            if (id.emplace(c, static_cast<int>(cosets.size())).second) cosets.push_back(c);
        }
        return cosets;
    };
    auto coset_index = [](const std::vector<std::vector<Permutation>>& cosets, const Permutation& rep) {
        for (std::size_t i = 0; i < cosets.size(); ++i)
            if (std::binary_search(cosets[i].begin(), cosets[i].end(), rep)) return static_cast<int>(i);
        return -1;
    };

    auto ck = cosets_of(K.representative);
    auto ch = cosets_of(H.representative);
    int nk = static_cast<int>(ck.size()), nh = static_cast<int>(ch.size());

    std::vector<bool> seen(static_cast<std::size_t>(nk * nh), false);
    equipass::IntVec counts(g.subgroup_classes().size(), 0);
    for (int p = 0; p < nk * nh; ++p) {
        if (seen[static_cast<std::size_t>(p)]) continue;
        std::vector<int> orbit = {p};
        seen[static_cast<std::size_t>(p)] = true;
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            int a = orbit[i] / nh, b = orbit[i] % nh;
            for (const auto& s : els) {
                int a2 = coset_index(ck, s * ck[static_cast<std::size_t>(a)][0]);
                int b2 = coset_index(ch, s * ch[static_cast<std::size_t>(b)][0]);
                int q = a2 * nh + b2;
                if (!seen[static_cast<std::size_t>(q)]) {
                    seen[static_cast<std::size_t>(q)] = true;
                    orbit.push_back(q);
                }
            }
        }
        // stabilizer of the orbit representative
        int a = orbit[0] / nh, b = orbit[0] % nh;
        std::vector<Permutation> stab;
        for (const auto& s : els)
            if (coset_index(ck, s * ck[static_cast<std::size_t>(a)][0]) == a &&
                coset_index(ch, s * ch[static_cast<std::size_t>(b)][0]) == b)
                stab.push_back(s);
        int cls = g.class_of_subgroup(stab);
        counts[static_cast<std::size_t>(cls)] += 1;
    }
    return counts;
}

}  // namespace testutil
