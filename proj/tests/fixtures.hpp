#pragma once

// Shared bound-quiver fixtures for the test binaries.

#include <random>

#include "dexact/dseq.hpp"
#include "dexact/session.hpp"

namespace fx {

using namespace dexact;

// linear quiver 1 -> 2, no relations
inline AlgebraPtr a2() {
    Quiver q;
    q.n_vertices = 2;
    q.arrows.push_back(Arrow{0, 0, 1, "a"});
    return build_algebra_ptr(q, {}, Field::rational());
}

// linear quiver 1 -> 2 -> 3, no relations
inline AlgebraPtr a3() {
    Quiver q;
    q.n_vertices = 3;
    q.arrows.push_back(Arrow{0, 0, 1, "a"});
    q.arrows.push_back(Arrow{1, 1, 2, "b"});
    return build_algebra_ptr(q, {}, Field::rational());
}

// linear quiver 1 -> 2 -> 3 modulo the length-two path
inline AlgebraPtr aus() {
    Quiver q;
    q.n_vertices = 3;
    q.arrows.push_back(Arrow{0, 0, 1, "a"});
    q.arrows.push_back(Arrow{1, 1, 2, "b"});
    Relation r;
    Path ba{0, 2, {0, 1}};
    r.terms.emplace_back(Scalar::one(Field::rational()), ba);
    return build_algebra_ptr(q, {r}, Field::rational());
}

inline std::size_t by_dims(const Catalog& c, const std::vector<std::size_t>& dims) {
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i].dims() == dims) return i;
    throw std::runtime_error("fixture object not found");
}

inline AddSubcategory subcat_by_dims(const Catalog& c,
                                     const std::vector<std::vector<std::size_t>>& selectors,
                                     std::string label) {
    std::vector<std::size_t> members;
    for (const auto& d : selectors) members.push_back(by_dims(c, d));
    return add_subcategory(c, std::move(members), std::move(label));
}

} // namespace fx
