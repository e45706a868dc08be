#pragma once

#include "dexact/fpfun.hpp"
#include "dexact/intmat.hpp"

namespace dexact {

/// The caveat carried by every relative-group report: the relation
/// subgroup is only known up to the enumerated sequence family.
inline constexpr const char* kEnumeratedCaveat = "relative to enumerated relations";

/// Multiplicity vector of m over the catalog (split Grothendieck class).
std::vector<mpz_class> split_class(const Catalog& catalog, const Representation& m);

/// Alternating sum of split classes of the t-resolution terms, in
/// coordinates over the members of t.
std::vector<mpz_class> index_dct(const Representation& c, const AddSubcategory& t, std::size_t d);

/// K0 of the relative structure E_X, presented by the alternating-sum
/// relations of the admissible members of the sequence family.
struct RelativeK0 {
    Catalog catalog;
    AddSubcategory x;
    IntMat relations;               // one row per admissible sequence
    K0Presentation presentation;
    std::vector<DSequence> provenance; // the sequences behind the rows

    RelativeK0() : relations(0, 0), presentation(IntMat(0, 0), 0) {}
};

RelativeK0 build_relative_k0(const AddSubcategory& x, const AmbientStructure& ambient,
                             const std::vector<DSequence>& family);

/// Canonical coset vector in a fixed RelativeK0 presentation.
struct IndexValue {
    std::vector<mpz_class> coset;

    bool operator==(const IndexValue&) const = default;
    bool is_zero() const;
    std::string str() const;
};

IndexValue class_in(const RelativeK0& k, const Representation& m);
IndexValue coset_of(const RelativeK0& k, const std::vector<mpz_class>& split_vector);

/// Alternating sum over the sequence: sign (-1)^i on the term A_i
/// (A_0 = rightmost object).
std::vector<mpz_class> alternating_split_sum(const Catalog& catalog, const DSequence& s);

/// theta over the split group: alternating sum of the functor-resolution
/// terms of the presented functor.
std::vector<mpz_class> theta_C(const FPPresentation& p, const Catalog& catalog,
                               const AmbientStructure& ambient);

/// Canonical coset of theta_C in the relative group.
IndexValue theta_X(const FPPresentation& p, const RelativeK0& k, const AmbientStructure& ambient);

/// Deterministic family of presentation pairs with equal cokernel
/// functors, built by adding split identity summands and redundant
/// columns that factor through the presenting map.
std::vector<std::pair<FPPresentation, FPPresentation>>
schanuel_pairs(const Catalog& catalog, std::size_t count, unsigned seed);

struct VerifyReport {
    std::string check;
    bool ok = true;
    std::vector<std::string> lines;
    std::string caveat = kEnumeratedCaveat;
};

/// Theorem A instance: theta_X of the deflation's presentation equals the
/// alternating coset sum of the sequence.
VerifyReport verify_theorem_A(const DSequence& s, const RelativeK0& k,
                              const AmbientStructure& ambient);

/// Same equality on merely left d-exact sequences.
VerifyReport verify_prop13_property(const DSequence& s, const RelativeK0& k,
                                    const AmbientStructure& ambient);

/// Presentations with isomorphic restricted cokernels have equal theta_C.
VerifyReport verify_schanuel(const FPPresentation& p, const FPPresentation& q,
                             const Catalog& catalog, const AmbientStructure& ambient);

/// Consistency of the relative group with the split group of a certified
/// d-cluster-tilting subcategory: relations die under index_dct, members
/// map to basis vectors, rank and torsion match.
VerifyReport verify_theorem_1_1(const AddSubcategory& t, const AmbientStructure& ambient,
                                const RelativeK0& k);

} // namespace dexact
