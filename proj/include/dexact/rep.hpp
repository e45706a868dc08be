#pragma once

#include <optional>
#include <vector>

#include "dexact/algebra.hpp"

namespace dexact {

/// A finite-dimensional representation of the bound quiver: one vector
/// space per vertex, one matrix per arrow, relations acting as zero.
class Representation {
public:
    Representation() = default;
    Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Mat> arrow_maps);

    static Representation zero(AlgebraPtr algebra);

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim(std::size_t v) const { return dims_[v]; }
    std::size_t total_dim() const;
    bool is_zero() const { return total_dim() == 0; }

    const Mat& arrow_map(std::size_t arrow_id) const { return arrow_maps_[arrow_id]; }

    /// Composite matrix of a path (identity for trivial paths).
    Mat path_map(const Path& p) const;

    /// Relations evaluate to zero and shapes agree.
    void validate() const;

    /// (total dim, dim vector lex, arrow-rank profile): the canonical
    /// catalog sort key, also a cheap iso invariant.
    std::vector<std::size_t> sort_key() const;

private:
    AlgebraPtr algebra_;
    std::vector<std::size_t> dims_;
    std::vector<Mat> arrow_maps_;
};

/// A tuple of per-vertex matrices commuting with the arrow actions.
class Morphism {
public:
    Morphism() = default;
    Morphism(Representation source, Representation target, std::vector<Mat> vertex_maps);

    static Morphism zero(const Representation& source, const Representation& target);
    static Morphism identity(const Representation& m);

    const Representation& source() const { return source_; }
    const Representation& target() const { return target_; }
    const Mat& vertex_map(std::size_t v) const { return vertex_maps_[v]; }

    bool is_zero() const;
    bool is_injective() const;
    bool is_surjective() const;
    bool is_isomorphism() const;

    /// Commuting squares hold for every arrow.
    void validate() const;

    Morphism operator+(const Morphism& o) const;
    Morphism operator-() const;
    Morphism scaled(const Scalar& c) const;
    bool operator==(const Morphism& o) const;

private:
    Representation source_, target_;
    std::vector<Mat> vertex_maps_;
};

/// g after f.
Morphism compose(const Morphism& g, const Morphism& f);

/// Basis of Hom(M, N) as solutions of the commuting-square system.
std::vector<Morphism> hom_basis(const Representation& m, const Representation& n);

std::size_t hom_dim(const Representation& m, const Representation& n);

struct SubquotientPair {
    Representation object;
    Morphism map; // inclusion for kernels/images, projection for cokernels
};

SubquotientPair kernel(const Morphism& f);
SubquotientPair cokernel(const Morphism& f);
/// Image with both the inclusion into the target and the projection from
/// the source.
struct ImageTriple {
    Representation object;
    Morphism incl;
    Morphism proj;
};
ImageTriple image(const Morphism& f);

struct DirectSum {
    Representation sum;
    std::vector<Morphism> injections;
    std::vector<Morphism> projections;
};

DirectSum direct_sum(const std::vector<Representation>& parts);

/// Concatenated vertex-map entries as one column vector (fixed layout,
/// shared by the induced-map and lifting solvers below).
Mat morphism_to_column(const Morphism& f);

/// Matrix of Hom(x, f): Hom(x, source) -> Hom(x, target), g -> f∘g, in
/// hom_basis coordinates.
Mat hom_post_matrix(const Morphism& f, const Representation& x);

/// Matrix of Hom(f, x): Hom(target, x) -> Hom(source, x), g -> g∘f.
Mat hom_pre_matrix(const Morphism& f, const Representation& x);

/// h with g∘h = t (t: A -> C, g: B -> C, h: A -> B), or nullopt.
std::optional<Morphism> lift_through(const Morphism& g, const Morphism& t);

/// h with h∘g = t (t: A -> C, g: A -> B, h: B -> C), or nullopt.
std::optional<Morphism> factor_over(const Morphism& g, const Morphism& t);

struct IsoOptions {
    long coefficient_bound = 3;
    std::size_t random_tries = 200;
    unsigned seed = 12345;
};

/// Explicit invertible morphism, or nullopt when a computable invariant
/// rules an isomorphism out. Throws SearchExhausted when the invariants
/// agree but no invertible combination was found within bounds.
std::optional<Morphism> is_isomorphic(const Representation& m, const Representation& n,
                                      const IsoOptions& opts = {});

struct Summand {
    Representation object;
    std::size_t multiplicity = 1;
    Morphism idempotent; // endomorphism of the ambient M projecting onto one copy
};

/// Krull-Schmidt decomposition by iterated Fitting splitting.
std::vector<Summand> decompose(const Representation& m, const IsoOptions& opts = {});

/// Pairwise non-isomorphic indecomposables in canonical order.
class Catalog {
public:
    Catalog() = default;
    Catalog(AlgebraPtr algebra, std::vector<Representation> objects)
        : algebra_(std::move(algebra)), objects_(std::move(objects)) {}

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<Representation>& objects() const { return objects_; }
    std::size_t size() const { return objects_.size(); }
    const Representation& operator[](std::size_t i) const { return objects_[i]; }

    /// Index of the member isomorphic to m; throws UnknownSummand if none.
    std::size_t find(const Representation& m) const;
    std::optional<std::size_t> try_find(const Representation& m) const;

private:
    AlgebraPtr algebra_;
    std::vector<Representation> objects_;
};

enum class CatalogStrategy { Closure, User };

Catalog build_catalog(const AlgebraPtr& algebra, CatalogStrategy strategy = CatalogStrategy::Closure,
                      const std::vector<Representation>& user_objects = {},
                      std::size_t dim_cap = 30);

} // namespace dexact
