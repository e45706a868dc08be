#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dexact/mat.hpp"

namespace dexact {

struct Arrow {
    std::size_t id;
    std::size_t source;
    std::size_t target;
    std::string name;
};

struct Quiver {
    std::size_t n_vertices = 0;
    std::vector<Arrow> arrows;

    void validate() const;
    std::size_t arrow_by_name(const std::string& name) const;
};

/// A path is a sequence of arrow ids in application order: {a, b} means
/// "a then b" (written b*a in the input grammar).
struct Path {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::size_t> arrows;

    std::size_t length() const { return arrows.size(); }

    // length-lexicographic
    auto operator<=>(const Path& o) const {
        if (auto c = arrows.size() <=> o.arrows.size(); c != 0) return c;
        if (auto c = source <=> o.source; c != 0) return c;
        if (auto c = target <=> o.target; c != 0) return c;
        return arrows <=> o.arrows;
    }
    bool operator==(const Path&) const = default;
};

/// One admissible relation: a k-linear combination of parallel paths of
/// length >= 2.
struct Relation {
    std::vector<std::pair<Scalar, Path>> terms;

    void validate(const Quiver& q) const;
};

class Representation; // defined in rep.hpp

/// The path algebra kQ/I with a fixed deterministic basis of residue
/// classes of paths per ordered vertex pair.
class BoundAlgebra {
public:
    friend BoundAlgebra build_algebra(const Quiver& q, const std::vector<Relation>& rels,
                                      Field field, std::size_t length_bound);

    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }
    const Field& field() const { return field_; }
    std::size_t n_vertices() const { return quiver_.n_vertices; }
    std::size_t dimension() const { return dimension_; }

    /// Basis residue classes of paths source -> target, in increasing
    /// length-lex order.
    const std::vector<Path>& basis_paths(std::size_t source, std::size_t target) const;

    /// Coordinates of the residue class of an arbitrary path over
    /// basis_paths(p.source, p.target). Valid for paths up to twice the
    /// stabilization length (enough for products of basis elements).
    std::vector<Scalar> reduce_path(const Path& p) const;

    /// Product coordinates of (q after p), i.e. q*p with p applied first.
    std::vector<Scalar> multiply(const Path& p, const Path& q) const;

private:
    struct ParallelClass {
        std::vector<Path> all_paths;          // decreasing length-lex (column order)
        std::map<Path, std::size_t> path_col;
        Mat rref_rows;                        // RREF of ideal span + long-path rows
        std::vector<std::size_t> pivots;
        std::map<std::size_t, std::size_t> pivot_row; // column -> row in rref_rows
        std::vector<Path> basis;              // non-pivot columns, increasing order
        std::map<Path, std::size_t> basis_index;
    };

    Quiver quiver_;
    std::vector<Relation> relations_;
    Field field_ = Field::rational();
    std::size_t dimension_ = 0;
    std::size_t working_length_ = 0;
    std::map<std::pair<std::size_t, std::size_t>, ParallelClass> classes_;
    std::vector<Path> empty_basis_;
};

using AlgebraPtr = std::shared_ptr<const BoundAlgebra>;

BoundAlgebra build_algebra(const Quiver& q, const std::vector<Relation>& rels, Field field,
                           std::size_t length_bound = 64);

AlgebraPtr build_algebra_ptr(const Quiver& q, const std::vector<Relation>& rels, Field field,
                             std::size_t length_bound = 64);

/// P_v: paths out of v, arrows acting by composition.
Representation projective_module(const AlgebraPtr& algebra, std::size_t v);

/// I_v: dual of the paths into v (the projective over the opposite algebra,
/// dualized back).
Representation injective_module(const AlgebraPtr& algebra, std::size_t v);

} // namespace dexact
