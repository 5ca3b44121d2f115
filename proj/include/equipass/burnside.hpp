#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "equipass/finite_group.hpp"
#include "equipass/integer_linalg.hpp"

namespace equipass {

/// Element of A(G): integer coefficients of the basis [G/K] in subgroup-class order.
struct BurnsideElement {
    std::shared_ptr<const FiniteGroup> group;
    IntVec coeffs;
};

/// Tuple of marks (phi_H(x))_H in subgroup-class order.
struct GhostVector {
    std::shared_ptr<const FiniteGroup> group;
    IntVec values;
};

/// Prime ideal P(H, p) (characteristic p) or P(H, 0) of A(G).
struct IdealSpec {
    int class_id = 0;
    long long characteristic = 0;  // 0 or a prime
};

/// Result of inverting the marks homomorphism on a ghost vector.
struct GhostPreimage {
    std::optional<BurnsideElement> element;     // set when every coordinate is integral
    std::vector<int> non_integral_classes;      // class ids of fractional coordinates
    bool in_image() const { return element.has_value(); }
};

struct TableOfMarks {
    std::shared_ptr<const FiniteGroup> group;
    IntMat matrix;  // matrix[H][K] = |(G/K)^H|
};

/// Exact arithmetic in the Burnside ring of one finite group.
/// The table of marks is computed once at construction; all operations are
/// pure and deterministic afterwards.
class BurnsideRing {
public:
    explicit BurnsideRing(std::shared_ptr<const FiniteGroup> group) : group_(std::move(group)) {
        const auto& classes = group_->subgroup_classes();
        std::size_t n = classes.size();
        marks_.group = group_;
        marks_.matrix.assign(n, IntVec(n, 0));
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t k = 0; k < n; ++k)
                marks_.matrix[h][k] = group_->fixed_point_count(classes[k], classes[h]);
    }

    const FiniteGroup& group() const { return *group_; }
    std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
    std::size_t class_count() const { return marks_.matrix.size(); }
    const TableOfMarks& table_of_marks() const { return marks_; }

    BurnsideElement zero() const { return {group_, IntVec(class_count(), 0)}; }

    /// The one-point G-set [G/G]; multiplicative unit.
    BurnsideElement unit() const {
        BurnsideElement e = zero();
        e.coeffs.back() = 1;
        return e;
    }

    BurnsideElement basis(std::size_t class_id) const {
        BurnsideElement e = zero();
        e.coeffs.at(class_id) = 1;
        return e;
    }

    BurnsideElement add(const BurnsideElement& x, const BurnsideElement& y) const {
        check(x);
        check(y);
        BurnsideElement r = x;
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += y.coeffs[i];
        return r;
    }

    BurnsideElement scale(const Int& c, const BurnsideElement& x) const {
        check(x);
        BurnsideElement r = x;
        for (auto& v : r.coeffs) v *= c;
        return r;
    }

    GhostVector marks(const BurnsideElement& x) const {
        check(x);
        GhostVector v{group_, IntVec(class_count(), 0)};
        for (std::size_t h = 0; h < class_count(); ++h)
            for (std::size_t k = 0; k < class_count(); ++k)
                v.values[h] += x.coeffs[k] * marks_.matrix[h][k];
        return v;
    }

    /// Exact solve of M c = v over the rationals. Integral solutions are the
    /// image of marks; fractional coordinates are reported, not thrown.
    GhostPreimage from_ghost(const GhostVector& v) const {
        if (v.values.size() != class_count())
            throw std::invalid_argument("ghost vector length mismatch");
        RatVec sol = rational_solve(marks_.matrix, v.values);
        GhostPreimage out;
        for (std::size_t i = 0; i < sol.size(); ++i)
            if (!rat_is_integer(sol[i])) out.non_integral_classes.push_back(static_cast<int>(i));
        if (out.non_integral_classes.empty()) {
            BurnsideElement e = zero();
            for (std::size_t i = 0; i < sol.size(); ++i) e.coeffs[i] = numerator(sol[i]);
            out.element = std::move(e);
        }
        return out;
    }

    /// Product in A(G), computed pointwise in ghost coordinates and pulled
    /// back through the (injective) marks map.
    BurnsideElement multiply(const BurnsideElement& x, const BurnsideElement& y) const {
        GhostVector gx = marks(x), gy = marks(y);
        GhostVector prod{group_, IntVec(class_count())};
        for (std::size_t i = 0; i < class_count(); ++i) prod.values[i] = gx.values[i] * gy.values[i];
        GhostPreimage back = from_ghost(prod);
        if (!back.in_image())
            throw std::logic_error("ghost product left the image of marks: ring invariant violated");
        return *back.element;
    }

    /// Product over proper classes K of ([G/K] - |(G/K)^K| [G/G]).
    /// Marks vanish at every proper class; the mark at G is the product of
    /// -|N(K):K| over proper classes, hence nonzero.
    BurnsideElement bartsch() const {
        BurnsideElement x = unit();
        std::size_t top = class_count() - 1;  // class of G itself (largest order)
        for (std::size_t k = 0; k < top; ++k) {
            BurnsideElement u = basis(k);
            u.coeffs[top] -= marks_.matrix[k][k];
            x = multiply(x, u);
        }
        return x;
    }

    bool ideal_membership(const IdealSpec& spec, const BurnsideElement& x) const {
        if (spec.class_id < 0 || static_cast<std::size_t>(spec.class_id) >= class_count())
            throw std::invalid_argument("ideal spec class id out of range");
        if (spec.characteristic < 0)
            throw std::invalid_argument("ideal characteristic must be 0 or a prime");
        Int mark = marks(x).values[static_cast<std::size_t>(spec.class_id)];
        if (spec.characteristic == 0) return mark == 0;
        return mark % spec.characteristic == 0;
    }

    /// Generators of the augmentation ideal I_G = ker(phi_e):
    /// {[G/K] - (|G|/|K|) [G/G] : K proper}.
    std::vector<BurnsideElement> augmentation_generators() const {
        std::vector<BurnsideElement> gens;
        std::size_t top = class_count() - 1;
        const auto& classes = group_->subgroup_classes();
        for (std::size_t k = 0; k < top; ++k) {
            BurnsideElement u = basis(k);
            u.coeffs[top] -= Int(group_->order() / classes[k].order);
            gens.push_back(std::move(u));
        }
        return gens;
    }

    /// Canonical lattice basis (HNF rows of coefficient vectors) of the
    /// additive span of {g_{i_1}...g_{i_n} * [G/K]} over all n-fold products
    /// of generators and all basis classes K.
    IntMat ideal_power(const std::vector<BurnsideElement>& gens, int n,
                       long long cap = 200'000) const {
        if (n < 1) throw std::invalid_argument("ideal power exponent must be >= 1");
        for (const auto& g : gens) check(g);
        if (gens.empty()) return {};
        // number of multisets of size n from |gens| symbols
        long long combos = 1;
        for (int i = 1; i <= n; ++i) {
            combos = combos * (static_cast<long long>(gens.size()) + n - i) / i;
            if (combos * static_cast<long long>(class_count()) > cap)
                throw std::runtime_error("power too large");
        }
        IntMat rows;
        std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
        while (true) {
            BurnsideElement prod = unit();
            for (std::size_t i = 0; i < pick.size(); ++i) prod = multiply(prod, gens[pick[i]]);
            for (std::size_t b = 0; b < class_count(); ++b)
                rows.push_back(multiply(prod, basis(b)).coeffs);
            // next non-decreasing index tuple
            std::size_t j = pick.size();
            while (j > 0 && pick[j - 1] + 1 == gens.size()) --j;
            if (j == 0) break;
            ++pick[j - 1];
            for (std::size_t i = j; i < pick.size(); ++i) pick[i] = pick[j - 1];
        }
        return hermite_normal_form(std::move(rows));
    }

private:
    void check(const BurnsideElement& x) const {
        if (x.group.get() != group_.get())
            throw std::invalid_argument("Burnside element belongs to a different group");
        if (x.coeffs.size() != class_count())
            throw std::invalid_argument("Burnside element coefficient length mismatch");
    }

    std::shared_ptr<const FiniteGroup> group_;
    TableOfMarks marks_;
};

/// Homomorphism between permutation groups defined by generator images.
/// Construction validates totality, the homomorphism property on all pairs,
/// and injectivity.
class GroupHom {
public:
    GroupHom(const FiniteGroup& source, const FiniteGroup& target,
             const std::vector<Permutation>& generator_images)
        : source_(&source), target_(&target) {
        if (generator_images.size() != source.generators().size())
            throw std::invalid_argument("morphism: one image per source generator required");
        std::map<Permutation, Permutation> img;
        img.emplace(source.identity_element(), target.identity_element());
        std::vector<Permutation> worklist = {source.identity_element()};
        while (!worklist.empty()) {
            Permutation e = std::move(worklist.back());
            worklist.pop_back();
            const Permutation fe = img.at(e);
            for (std::size_t i = 0; i < source.generators().size(); ++i) {
                Permutation ge = source.generators()[i] * e;
                Permutation fge = generator_images[i] * fe;
                if (!target.contains(fge))
                    throw std::invalid_argument("morphism: image leaves the target group");
                auto it = img.find(ge);
                if (it == img.end()) {
                    worklist.push_back(ge);
                    img.emplace(std::move(ge), std::move(fge));
                } else if (!(it->second == fge)) {
                    throw std::invalid_argument("morphism: generator images do not extend to a homomorphism");
                }
            }
        }
        if (img.size() != static_cast<std::size_t>(source.order()))
            throw std::invalid_argument("morphism: images do not cover the source group");
        for (const auto& [a, fa] : img)
            for (const auto& [b, fb] : img)
                if (!(img.at(a * b) == fa * fb))
                    throw std::invalid_argument("morphism: homomorphism property fails");
        std::set<Permutation> image_set;
        for (const auto& [a, fa] : img) image_set.insert(fa);
        if (image_set.size() != img.size())
            throw std::invalid_argument("morphism: not injective");
        map_ = std::move(img);
    }

    const Permutation& operator()(const Permutation& s) const { return map_.at(s); }
    const FiniteGroup& source() const { return *source_; }
    const FiniteGroup& target() const { return *target_; }

private:
    const FiniteGroup* source_;
    const FiniteGroup* target_;
    std::map<Permutation, Permutation> map_;
};

struct DiagramMorphism {
    std::size_t source = 0;  // object index whose ring receives the restriction
    std::size_t target = 0;  // object index whose ring is restricted
    std::vector<Permutation> generator_images;  // image in target of each source generator
};

/// Diagram of finite subgroups with injective morphisms; limit_burnside
/// computes the lattice of compatible families in the direct sum of the
/// object rings.
struct FamilyDiagram {
    std::vector<std::shared_ptr<const FiniteGroup>> objects;
    std::vector<DiagramMorphism> morphisms;
};

/// Matrix of the restriction A(target) -> A(source) along an injective
/// homomorphism: each basis target-set [T/K], viewed as a source-set, is
/// decomposed into source-orbits.
inline IntMat restriction_matrix(const FiniteGroup& source, const FiniteGroup& target,
                                 const std::vector<Permutation>& generator_images) {
    GroupHom hom(source, target, generator_images);
    const auto& src_classes = source.subgroup_classes();
    const auto& tgt_classes = target.subgroup_classes();
    IntMat r(src_classes.size(), IntVec(tgt_classes.size(), 0));
    for (std::size_t kcol = 0; kcol < tgt_classes.size(); ++kcol) {
        const auto& K = tgt_classes[kcol].representative;
        std::set<Permutation> kset(K.begin(), K.end());
        // left cosets of K in target, labelled by their sorted element list
        std::map<std::vector<Permutation>, std::size_t> coset_id;
        std::vector<Permutation> coset_rep;
        for (const auto& t : target.elements()) {
            std::vector<Permutation> coset;
            coset.reserve(kset.size());
            for (const auto& k : K) coset.push_back(t * k);
            std::sort(coset.begin(), coset.end());
            if (coset_id.emplace(std::move(coset), coset_rep.size()).second) coset_rep.push_back(t);
        }
        auto coset_of = [&](const Permutation& t) {
            std::vector<Permutation> coset;
            coset.reserve(kset.size());
            for (const auto& k : K) coset.push_back(t * k);
            std::sort(coset.begin(), coset.end());
            return coset_id.at(coset);
        };
        // source-orbits on the cosets
        std::vector<bool> seen(coset_rep.size(), false);
        for (std::size_t c = 0; c < coset_rep.size(); ++c) {
            if (seen[c]) continue;
            std::vector<std::size_t> orbit = {c};
            seen[c] = true;
            for (std::size_t i = 0; i < orbit.size(); ++i)
                for (const auto& s : source.elements()) {
                    std::size_t next = coset_of(hom(s) * coset_rep[orbit[i]]);
                    if (!seen[next]) {
                        seen[next] = true;
                        orbit.push_back(next);
                    }
                }
            // stabilizer of the orbit representative inside the source
            const Permutation& t = coset_rep[c];
            std::vector<Permutation> stab;
            for (const auto& s : source.elements())
                if (coset_of(hom(s) * t) == c) stab.push_back(s);
            int cls = source.class_of_subgroup(stab);
            r[static_cast<std::size_t>(cls)][kcol] += 1;
        }
    }
    return r;
}

struct LimitBasis {
    std::size_t rank = 0;
    IntMat basis;                     // rows: compatible families over concatenated class coords
    std::vector<std::size_t> offsets;  // start of each object's block (plus total at the end)
};

/// Solves res_m(x_target) = x_source over Z for all morphisms; returns the
/// canonical basis of the solution lattice.
inline LimitBasis limit_burnside(const FamilyDiagram& diagram) {
    if (diagram.objects.empty()) throw std::invalid_argument("diagram has no objects");
    LimitBasis out;
    std::size_t total = 0;
    for (const auto& obj : diagram.objects) {
        out.offsets.push_back(total);
        total += obj->subgroup_classes().size();
    }
    out.offsets.push_back(total);

    IntMat constraints;
    for (const auto& m : diagram.morphisms) {
        if (m.source >= diagram.objects.size() || m.target >= diagram.objects.size())
            throw std::invalid_argument("morphism object index out of range");
        const FiniteGroup& src = *diagram.objects[m.source];
        const FiniteGroup& tgt = *diagram.objects[m.target];
        IntMat r = restriction_matrix(src, tgt, m.generator_images);
        std::size_t src_off = out.offsets[m.source];
        std::size_t tgt_off = out.offsets[m.target];
        for (std::size_t row = 0; row < r.size(); ++row) {
            IntVec c(total, 0);
            for (std::size_t col = 0; col < r[row].size(); ++col) c[tgt_off + col] = r[row][col];
            c[src_off + row] -= 1;
            constraints.push_back(std::move(c));
        }
    }
    if (constraints.empty()) {
        out.basis = int_identity(total);
        out.rank = total;
        return out;
    }
    out.basis = integer_kernel(constraints);
    out.rank = out.basis.size();
    return out;
}

}  // namespace equipass
