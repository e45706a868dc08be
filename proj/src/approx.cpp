#include "dexact/approx.hpp"

#include <algorithm>

#include "dexact/dseq.hpp"

namespace dexact {

bool AddSubcategory::contains_index(std::size_t catalog_index) const {
    for (auto m : members)
        if (m == catalog_index) return true;
    return false;
}

bool AddSubcategory::contains(const Representation& m) const {
    if (m.is_zero()) return true;
    for (const auto& s : decompose(m)) {
        auto i = catalog.try_find(s.object);
        if (!i || !contains_index(*i)) return false;
    }
    return true;
}

AddSubcategory add_subcategory(const Catalog& catalog, std::vector<std::size_t> members,
                               std::string label) {
    for (auto m : members)
        if (m >= catalog.size()) throw ShapeError("subcategory member index out of range");
    // catalog members are already pairwise non-isomorphic indecomposables
    for (std::size_t i = 0; i + 1 < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (members[i] == members[j]) throw ShapeError("duplicate subcategory member");
    return AddSubcategory{catalog, std::move(members), std::move(label)};
}

AddSubcategory full_subcategory(const Catalog& catalog, std::string label) {
    std::vector<std::size_t> all(catalog.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return add_subcategory(catalog, std::move(all), std::move(label));
}

AddSubcategory projective_subcategory(const Catalog& catalog) {
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < catalog.algebra()->n_vertices(); ++v) {
        std::size_t i = catalog.find(projective_module(catalog.algebra(), v));
        if (std::find(members.begin(), members.end(), i) == members.end()) members.push_back(i);
    }
    return add_subcategory(catalog, std::move(members), "proj");
}

Approximation right_approximation_list(const std::vector<Representation>& gens,
                                       const Representation& c) {
    std::vector<Representation> summands;
    std::vector<Morphism> components;
    for (const auto& g0 : gens)
        for (const auto& g : hom_basis(g0, c)) {
            summands.push_back(g0);
            components.push_back(g);
        }
    if (summands.empty())
        return Approximation{{}, Morphism::zero(Representation::zero(c.algebra()), c)};
    DirectSum ds = direct_sum(summands);
    Morphism map = Morphism::zero(ds.sum, c);
    for (std::size_t k = 0; k < summands.size(); ++k)
        map = map + compose(components[k], ds.projections[k]);
    return Approximation{std::move(summands), std::move(map)};
}

Approximation right_approximation(const AddSubcategory& x, const Representation& c) {
    std::vector<Representation> gens;
    for (std::size_t j = 0; j < x.size(); ++j) gens.push_back(x.member(j));
    return right_approximation_list(gens, c);
}

Approximation minimize(const Approximation& a) {
    Approximation cur = a;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t drop = 0; drop < cur.summands.size(); ++drop) {
            std::vector<Representation> rest;
            for (std::size_t k = 0; k < cur.summands.size(); ++k)
                if (k != drop) rest.push_back(cur.summands[k]);
            // components of the current map per summand
            Representation rest_sum =
                rest.empty() ? Representation::zero(cur.map.target().algebra()) : direct_sum(rest).sum;
            DirectSum cur_ds = direct_sum(cur.summands);
            Morphism dropped = compose(cur.map, cur_ds.injections[drop]);
            Morphism rest_map = Morphism::zero(rest_sum, cur.map.target());
            if (!rest.empty()) {
                DirectSum rest_ds = direct_sum(rest);
                std::size_t at = 0;
                for (std::size_t k = 0; k < cur.summands.size(); ++k) {
                    if (k == drop) continue;
                    rest_map =
                        rest_map + compose(compose(cur.map, cur_ds.injections[k]), rest_ds.projections[at]);
                    ++at;
                }
            }
            if (lift_through(rest_map, dropped)) {
                cur = Approximation{std::move(rest), std::move(rest_map)};
                changed = true;
                break;
            }
        }
    }
    return cur;
}

bool is_generating(const AddSubcategory& x, const AmbientStructure& ambient) {
    return check_gen(x, ambient).ok;
}

GenReport check_gen(const AddSubcategory& x, const AmbientStructure& ambient) {
    GenReport report;
    const std::vector<Representation>* targets;
    std::vector<Representation> catalog_objects;
    if (ambient.kind == AmbientStructure::Kind::ModuleCategory) {
        catalog_objects = x.catalog.objects();
        targets = &catalog_objects;
    } else {
        targets = &ambient.test_objects;
    }
    for (std::size_t i = 0; i < targets->size(); ++i) {
        const Representation& c = (*targets)[i];
        Approximation a = right_approximation(x, c);
        // Lemma 4.2 shape of the check: some admissible deflation from x
        // exists iff the evaluation approximation itself is one.
        if (!is_admissible_deflation(a.map, ambient)) {
            report.ok = false;
            report.failing.push_back(ambient.kind == AmbientStructure::Kind::ModuleCategory
                                         ? i
                                         : x.catalog.find(c));
        }
    }
    return report;
}

} // namespace dexact
