#pragma once

#include <string>

#include "dexact/rep.hpp"

namespace dexact {

/// add(T) for a finite list of pairwise non-isomorphic indecomposable
/// catalog members. Contravariant finiteness is automatic at this scale.
struct AddSubcategory {
    Catalog catalog;
    std::vector<std::size_t> members; // indices into catalog
    std::string label;

    std::size_t size() const { return members.size(); }
    const Representation& member(std::size_t i) const { return catalog[members[i]]; }

    bool contains_index(std::size_t catalog_index) const;
    /// m decomposes into member summands.
    bool contains(const Representation& m) const;
};

AddSubcategory add_subcategory(const Catalog& catalog, std::vector<std::size_t> members,
                               std::string label);
AddSubcategory full_subcategory(const Catalog& catalog, std::string label = "all");
/// The subcategory of all projectives P_v (matched inside the catalog).
AddSubcategory projective_subcategory(const Catalog& catalog);

/// An approximation T' -> c with T' recorded as an ordered list of
/// member copies (T' = direct sum of `summands`).
struct Approximation {
    std::vector<Representation> summands;
    Morphism map; // direct_sum(summands) -> c
};

/// The evaluation map ⊕_j T_j^{dim Hom(T_j, c)} -> c, one component per
/// hom-basis element. Always a right approximation.
Approximation right_approximation(const AddSubcategory& x, const Representation& c);
Approximation right_approximation_list(const std::vector<Representation>& gens,
                                       const Representation& c);

/// Delete source summands whose component factors through the rest until
/// no deletion is possible (right minimal version).
Approximation minimize(const Approximation& a);

struct AmbientStructure; // dseq.hpp

/// Every ambient object admits an admissible deflation from x, tested via
/// the evaluation approximation.
bool is_generating(const AddSubcategory& x, const AmbientStructure& ambient);

struct GenReport {
    bool ok = true;
    std::vector<std::size_t> failing; // catalog indices with no admissible deflation from x
};

/// Instance-wise generating check; failures itemized by catalog index.
GenReport check_gen(const AddSubcategory& x, const AmbientStructure& ambient);

} // namespace dexact
