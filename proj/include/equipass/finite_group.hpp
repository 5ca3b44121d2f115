#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "equipass/permutation.hpp"

namespace equipass {

inline long long default_group_cap() {
    if (const char* env = std::getenv("EQUIPASS_CAP")) {
        long long cap = std::atoll(env);
        if (cap > 0) return cap;
    }
    return 1'000'000;
}

/// One conjugacy class of subgroups: representative element list plus
/// the data the Burnside module consumes.
struct SubgroupClass {
    std::vector<Permutation> representative;  // sorted, closed, contains identity
    long long normalizer_index = 0;           // |N_G(H) : H|
    int class_id = 0;
    long long order = 0;                      // |H|
};

/// A finite permutation group given by generators. Elements are enumerated
/// breadth-first over the generators with lexicographic tie-breaks, so the
/// element order (and everything derived from it) is reproducible.
class FiniteGroup {
public:
    FiniteGroup(int degree, std::vector<Permutation> generators, std::string name = "",
                long long cap = default_group_cap())
        : degree_(degree), generators_(std::move(generators)), name_(std::move(name)), cap_(cap) {
        if (degree_ <= 0) throw std::invalid_argument("group degree must be positive");
        for (const auto& g : generators_)
            if (g.degree() != degree_)
                throw std::invalid_argument("generator degree mismatch in group " + name_);
        enumerate();
    }

    static FiniteGroup trivial() { return FiniteGroup(1, {}, "trivial"); }

    static FiniteGroup cyclic(int n) {
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = (i + 1) % n;
        return FiniteGroup(n, {Permutation(std::move(img))}, "Z" + std::to_string(n));
    }

    int degree() const { return degree_; }
    const std::string& name() const { return name_; }
    const std::vector<Permutation>& generators() const { return generators_; }

    /// Full element list, identity first, deterministic BFS order.
    const std::vector<Permutation>& elements() const { return elements_; }
    long long order() const { return static_cast<long long>(elements_.size()); }

    const Permutation& identity_element() const { return elements_.front(); }

    int element_index(const Permutation& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) throw std::invalid_argument("element not in group");
        return it->second;
    }

    bool contains(const Permutation& p) const { return index_.count(p) != 0; }

    /// True iff |G| is a power of p (p^0 for the trivial group counts).
    bool is_p_group(long long p) const {
        if (!is_prime(p)) throw std::invalid_argument("p must be prime");
        long long n = order();
        while (n % p == 0) n /= p;
        return n == 1;
    }

    /// Conjugacy classes of subgroups, sorted by (order, lexicographically
    /// smallest sorted element list). Computed once, cached.
    const std::vector<SubgroupClass>& subgroup_classes() const {
        if (classes_.empty()) build_subgroup_classes();
        return classes_;
    }

    /// |(G/K)^H|: cosets gK with HgK = gK, by direct coset scan.
    long long fixed_point_count(const SubgroupClass& K, const SubgroupClass& H) const {
        return fixed_point_count(K.representative, H.representative);
    }

    long long fixed_point_count(const std::vector<Permutation>& K,
                                const std::vector<Permutation>& H) const {
        std::set<Permutation> kset(K.begin(), K.end());
        std::vector<Permutation> reps = coset_representatives(kset);
        long long fixed = 0;
        for (const auto& g : reps) {
            const Permutation ginv = g.inverse();
            bool ok = true;
            for (const auto& h : H) {
                if (!kset.count(ginv * (h * g))) {
                    ok = false;
                    break;
                }
            }
            if (ok) ++fixed;
        }
        return fixed;
    }

    /// Finds the class id of an arbitrary subgroup (given as element list)
    /// by conjugating it into canonical form.
    int class_of_subgroup(const std::vector<Permutation>& subgroup) const {
        std::vector<Permutation> canon = canonical_conjugate(subgroup);
        const auto& classes = subgroup_classes();
        for (const auto& cls : classes)
            if (cls.representative == canon) return cls.class_id;
        throw std::invalid_argument("subgroup not found among conjugacy classes");
    }

    /// Smallest (order, lex) conjugate of a subgroup, elements sorted.
    std::vector<Permutation> canonical_conjugate(std::vector<Permutation> subgroup) const {
        std::sort(subgroup.begin(), subgroup.end());
        std::vector<Permutation> best = subgroup;
        for (const auto& g : elements_) {
            const Permutation ginv = g.inverse();
            std::vector<Permutation> conj;
            conj.reserve(subgroup.size());
            for (const auto& s : subgroup) conj.push_back(g * (s * ginv));
            std::sort(conj.begin(), conj.end());
            if (conj < best) best = conj;
        }
        return best;
    }

    /// Closure of a set of permutations inside this group.
    std::vector<Permutation> closure(std::vector<Permutation> seed) const {
        std::set<Permutation> result(seed.begin(), seed.end());
        result.insert(identity_element());
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<Permutation> current(result.begin(), result.end());
            for (const auto& a : current)
                for (const auto& b : current) {
                    Permutation ab = a * b;
                    if (result.insert(ab).second) grew = true;
                }
        }
        return {result.begin(), result.end()};
    }

private:
    static bool is_prime(long long p) {
        if (p < 2) return false;
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

    void enumerate() {
        elements_.clear();
        index_.clear();
        Permutation id = Permutation::identity(degree_);
        elements_.push_back(id);
        index_[id] = 0;
        std::vector<Permutation> frontier = {id};
        while (!frontier.empty()) {
            std::set<Permutation> next;
            for (const auto& e : frontier)
                for (const auto& g : generators_) {
                    Permutation eg = g * e;
                    if (!index_.count(eg) && !next.count(eg)) next.insert(eg);
                }
            frontier.assign(next.begin(), next.end());  // lexicographic within the layer
            for (const auto& e : frontier) {
                if (static_cast<long long>(elements_.size()) >= cap_)
                    throw std::runtime_error("group too large (cap " + std::to_string(cap_) + ")");
                index_[e] = static_cast<int>(elements_.size());
                elements_.push_back(e);
            }
        }
    }

    std::vector<Permutation> coset_representatives(const std::set<Permutation>& kset) const {
        std::vector<Permutation> reps;
        std::set<Permutation> covered;
        for (const auto& g : elements_) {
            if (covered.count(g)) continue;
            reps.push_back(g);
            for (const auto& k : kset) covered.insert(g * k);
        }
        return reps;
    }

    void build_subgroup_classes() const {
        // Bottom-up closure: cyclic subgroups, then pairwise joins to a fixpoint.
        std::set<std::vector<Permutation>> subgroups;
        for (const auto& x : elements_) {
            std::vector<Permutation> cyc;
            Permutation p = identity_element();
            do {
                cyc.push_back(p);
                p = x * p;
            } while (!(p == identity_element()));
            std::sort(cyc.begin(), cyc.end());
            subgroups.insert(cyc);
        }
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::vector<Permutation>> current(subgroups.begin(), subgroups.end());
            for (std::size_t i = 0; i < current.size(); ++i)
                for (std::size_t j = i + 1; j < current.size(); ++j) {
                    std::vector<Permutation> seed = current[i];
                    seed.insert(seed.end(), current[j].begin(), current[j].end());
                    std::vector<Permutation> join = closure(std::move(seed));
                    std::sort(join.begin(), join.end());
                    if (subgroups.insert(join).second) grew = true;
                }
        }

        // Deduplicate by conjugacy; representative = canonical conjugate.
        std::map<std::vector<Permutation>, long long> class_sizes;  // canon -> member count
        for (const auto& s : subgroups) {
            std::vector<Permutation> canon = canonical_conjugate(s);
            ++class_sizes[canon];
        }

        std::vector<SubgroupClass> classes;
        for (const auto& [rep, members] : class_sizes) {
            SubgroupClass cls;
            cls.representative = rep;
            cls.order = static_cast<long long>(rep.size());
            cls.normalizer_index = normalizer_order(rep) / cls.order;
            classes.push_back(std::move(cls));
            (void)members;
        }
        std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
            if (a.order != b.order) return a.order < b.order;
            return a.representative < b.representative;
        });
        for (std::size_t i = 0; i < classes.size(); ++i)
            classes[i].class_id = static_cast<int>(i);
        classes_ = std::move(classes);
    }

    long long normalizer_order(const std::vector<Permutation>& subgroup) const {
        std::set<Permutation> sset(subgroup.begin(), subgroup.end());
        long long count = 0;
        for (const auto& g : elements_) {
            const Permutation ginv = g.inverse();
            bool normalizes = true;
            for (const auto& s : subgroup)
                if (!sset.count(g * (s * ginv))) {
                    normalizes = false;
                    break;
                }
            if (normalizes) ++count;
        }
        return count;
    }

    int degree_;
    std::vector<Permutation> generators_;
    std::string name_;
    long long cap_;
    std::vector<Permutation> elements_;
    std::map<Permutation, int> index_;
    mutable std::vector<SubgroupClass> classes_;
};

/// Labels like "1a", "2a", "2b": subgroup order plus a letter by class position.
inline std::vector<std::string> class_labels(const FiniteGroup& g) {
    const auto& classes = g.subgroup_classes();
    std::vector<std::string> labels;
    labels.reserve(classes.size());
    long long prev_order = -1;
    char letter = 'a';
    for (const auto& cls : classes) {
        if (cls.order != prev_order) {
            prev_order = cls.order;
            letter = 'a';
        }
        labels.push_back(std::to_string(cls.order) + letter);
        ++letter;
    }
    return labels;
}

}  // namespace equipass
