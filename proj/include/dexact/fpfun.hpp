#pragma once

#include <map>

#include "dexact/dseq.hpp"

namespace dexact {

/// A finitely presented functor, stored as its presenting morphism
/// f: B1 -> B0; the functor is Coker Hom(-, f).
struct FPPresentation {
    Morphism f;
};

/// Values and contravariant action of a presented functor on the members
/// of a subcategory. action[{j,k}][t] is F(phi_t): F(X_k) -> F(X_j) for
/// the t-th hom-basis element phi_t: X_j -> X_k.
struct RestrictedFunctor {
    AddSubcategory x;
    std::vector<std::size_t> value_dims;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Mat>> action;

    bool is_zero() const;
};

RestrictedFunctor restrict_functor(const FPPresentation& p, const AddSubcategory& x);

/// F(phi) for an arbitrary morphism between members, by expanding phi in
/// the hom basis.
Mat functor_action(const RestrictedFunctor& f, std::size_t j, std::size_t k, const Morphism& phi);

/// Vertexwise-invertible natural transformation F -> G, or nullopt when
/// value dimensions differ. Throws SearchExhausted when inconclusive.
std::optional<std::vector<Mat>> functor_iso(const RestrictedFunctor& f, const RestrictedFunctor& g);

/// The left d-exact sequence whose Yoneda image is the projective
/// resolution of the presented functor (= d_kernel completion of p.f).
DSequence functor_resolution(const FPPresentation& p, const AmbientStructure& ambient);

/// A morphism of presentations: the square u0 ∘ f = g ∘ u1 between
/// (f: B1 -> B0) and (g: C1 -> C0).
struct PresMorphism {
    Morphism u1, u0;
};

/// A short exact sequence of presented functors sub -> middle -> quot,
/// given at presentation level. Exactness is validated by the harness,
/// not constructed here.
struct FunctorSES {
    FPPresentation sub, middle, quot;
    PresMorphism incl; // sub -> middle
    PresMorphism proj; // middle -> quot
};

/// Value-level maps induced by a presentation morphism: at each member,
/// the map Coker Hom(X_j, p.f) -> Coker Hom(X_j, q.f).
std::vector<Mat> induced_value_maps(const FPPresentation& p, const FPPresentation& q,
                                    const PresMorphism& u, const AddSubcategory& x);

/// Exactness of the value sequences 0 -> sub(X) -> middle(X) -> quot(X) -> 0
/// at every member of x.
bool is_exact_ses(const FunctorSES& ses, const AddSubcategory& x);

/// Bounded deterministic family of validated short exact sequences of
/// presented functors, built from block-triangular middles.
std::vector<FunctorSES> enumerate_functor_ses(const Catalog& catalog);

/// Degreewise direct-sum resolution of the middle functor with
/// differentials [[dA, h],[0, dB]], the h_i found by projective lifting.
DSequence horseshoe(const DSequence& res_sub, const DSequence& res_quot, const FunctorSES& ses,
                    const AmbientStructure& ambient);

} // namespace dexact
