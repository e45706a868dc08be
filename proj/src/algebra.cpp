#include "dexact/algebra.hpp"

#include <algorithm>

#include "dexact/rep.hpp"

namespace dexact {

void Quiver::validate() const {
    std::vector<bool> seen;
    for (const auto& a : arrows) {
        if (a.source >= n_vertices || a.target >= n_vertices)
            throw ShapeError("arrow endpoint out of range");
        if (a.id >= arrows.size()) throw ShapeError("arrow id out of range");
        if (seen.size() <= a.id) seen.resize(arrows.size(), false);
        if (seen[a.id]) throw ShapeError("duplicate arrow id");
        seen[a.id] = true;
    }
}

std::size_t Quiver::arrow_by_name(const std::string& name) const {
    for (const auto& a : arrows)
        if (a.name == name) return a.id;
    throw ShapeError("unknown arrow name: " + name);
}

void Relation::validate(const Quiver& q) const {
    if (terms.empty()) throw ShapeError("empty relation");
    for (const auto& [c, p] : terms) {
        (void)c;
        if (p.length() < 2) throw ShapeError("relation term of length < 2 is not admissible");
        if (p.source != terms[0].second.source || p.target != terms[0].second.target)
            throw ShapeError("relation terms are not parallel");
        std::size_t at = p.source;
        for (std::size_t aid : p.arrows) {
            if (aid >= q.arrows.size() || q.arrows[aid].source != at)
                throw ShapeError("relation term is not a composable path");
            at = q.arrows[aid].target;
        }
        if (at != p.target) throw ShapeError("relation term endpoint mismatch");
    }
}

namespace {

Path concat(const Path& first, const Path& then) {
    if (first.target != then.source) throw ShapeError("non-composable paths");
    Path p{first.source, then.target, first.arrows};
    p.arrows.insert(p.arrows.end(), then.arrows.begin(), then.arrows.end());
    return p;
}

constexpr std::size_t kPathCountCap = 200000;

// All paths of length <= max_len, grouped by length.
std::vector<std::vector<Path>> enumerate_paths(const Quiver& q, std::size_t max_len) {
    std::vector<std::vector<Path>> by_len(max_len + 1);
    for (std::size_t v = 0; v < q.n_vertices; ++v) by_len[0].push_back(Path{v, v, {}});
    std::size_t total = q.n_vertices;
    for (std::size_t len = 1; len <= max_len; ++len) {
        for (const Path& p : by_len[len - 1])
            for (const auto& a : q.arrows)
                if (a.source == p.target) {
                    Path ext{p.source, a.target, p.arrows};
                    ext.arrows.push_back(a.id);
                    by_len[len].push_back(std::move(ext));
                    if (++total > kPathCountCap)
                        throw InfiniteDimensional("path count cap exceeded during enumeration");
                }
    }
    return by_len;
}

// reduce v (dense coordinate row) by the rows of an RREF matrix
void reduce_by_rref(std::vector<Scalar>& v, const Mat& r, const std::vector<std::size_t>& pivots) {
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
        std::size_t c = pivots[pi];
        if (v[c].is_zero()) continue;
        Scalar f = v[c];
        for (std::size_t j = 0; j < r.cols(); ++j) v[j] -= f * r.at(pi, j);
    }
}

} // namespace

const std::vector<Path>& BoundAlgebra::basis_paths(std::size_t source, std::size_t target) const {
    auto it = classes_.find({source, target});
    if (it == classes_.end()) return empty_basis_;
    return it->second.basis;
}

std::vector<Scalar> BoundAlgebra::reduce_path(const Path& p) const {
    const auto& basis = basis_paths(p.source, p.target);
    std::vector<Scalar> coords(basis.size(), Scalar::zero(field_));
    if (p.length() >= working_length_) return coords; // all long paths lie in the ideal
    auto it = classes_.find({p.source, p.target});
    if (it == classes_.end()) throw ShapeError("path in unknown parallel class");
    const ParallelClass& pc = it->second;
    auto col_it = pc.path_col.find(p);
    if (col_it == pc.path_col.end()) throw ShapeError("path was not enumerated");
    std::size_t col = col_it->second;
    auto prow = pc.pivot_row.find(col);
    if (prow == pc.pivot_row.end()) {
        // a basis path
        coords[pc.basis_index.at(p)] = Scalar::one(field_);
        return coords;
    }
    // pivot column: expressed through the non-pivot columns of its row
    std::size_t r = prow->second;
    for (std::size_t k = 0; k < pc.all_paths.size(); ++k) {
        if (pc.pivot_row.count(k)) continue;
        const Scalar& c = pc.rref_rows.at(r, k);
        if (c.is_zero()) continue;
        coords[pc.basis_index.at(pc.all_paths[k])] -= c;
    }
    return coords;
}

std::vector<Scalar> BoundAlgebra::multiply(const Path& p, const Path& q) const {
    return reduce_path(concat(p, q));
}

BoundAlgebra build_algebra(const Quiver& q, const std::vector<Relation>& rels, Field field,
                           std::size_t length_bound) {
    q.validate();
    for (const auto& r : rels) r.validate(q);

    std::size_t spread = 0, max_term = 0;
    for (const auto& r : rels) {
        std::size_t lo = r.terms[0].second.length(), hi = lo;
        for (const auto& [c, p] : r.terms) {
            (void)c;
            lo = std::min(lo, p.length());
            hi = std::max(hi, p.length());
            max_term = std::max(max_term, p.length());
        }
        spread = std::max(spread, hi - lo);
    }

    for (std::size_t ell = 2; ell <= length_bound; ++ell) {
        std::size_t w = ell + spread + 2;
        auto by_len = enumerate_paths(q, w);

        // group paths per parallel class, columns in decreasing length-lex order
        std::map<std::pair<std::size_t, std::size_t>, BoundAlgebra::ParallelClass> classes;
        for (std::size_t len = 0; len <= w; ++len)
            for (const Path& p : by_len[len]) classes[{p.source, p.target}].all_paths.push_back(p);
        for (auto& [key, pc] : classes) {
            (void)key;
            std::sort(pc.all_paths.begin(), pc.all_paths.end(), std::greater<Path>());
            for (std::size_t j = 0; j < pc.all_paths.size(); ++j) pc.path_col[pc.all_paths[j]] = j;
        }

        // ideal generators u r w with every term of length <= w
        std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<Scalar>>> gens;
        for (const auto& rel : rels) {
            std::size_t rs = rel.terms[0].second.source;
            std::size_t rt = rel.terms[0].second.target;
            std::size_t hi = 0;
            for (const auto& [c, p] : rel.terms) {
                (void)c;
                hi = std::max(hi, p.length());
            }
            for (std::size_t wl = 0; wl + hi <= w; ++wl)
                for (const Path& left : by_len[wl]) {
                    if (left.target != rs) continue;
                    for (std::size_t ul = 0; wl + hi + ul <= w; ++ul)
                        for (const Path& right : by_len[ul]) {
                            if (right.source != rt) continue;
                            auto key = std::make_pair(left.source, right.target);
                            auto& pc = classes.at(key);
                            std::vector<Scalar> vec(pc.all_paths.size(), Scalar::zero(field));
                            for (const auto& [c, p] : rel.terms)
                                vec[pc.path_col.at(concat(concat(left, p), right))] += c;
                            gens[key].push_back(std::move(vec));
                        }
                }
        }

        // certify: every path of length exactly ell is in the generator span
        bool stabilized = true;
        std::map<std::pair<std::size_t, std::size_t>, RrefResult> gen_rrefs;
        for (auto& [key, pc] : classes) {
            auto git = gens.find(key);
            std::size_t n_gens = git == gens.end() ? 0 : git->second.size();
            Mat m(field, n_gens, pc.all_paths.size());
            for (std::size_t i = 0; i < n_gens; ++i)
                for (std::size_t j = 0; j < pc.all_paths.size(); ++j) m.at(i, j) = git->second[i][j];
            gen_rrefs[key] = rref(m);
        }
        for (const Path& p : by_len[ell]) {
            const auto& pc = classes.at({p.source, p.target});
            const auto& rr = gen_rrefs.at({p.source, p.target});
            std::vector<Scalar> v(pc.all_paths.size(), Scalar::zero(field));
            v[pc.path_col.at(p)] = Scalar::one(field);
            reduce_by_rref(v, rr.r, rr.pivots);
            for (const auto& s : v)
                if (!s.is_zero()) {
                    stabilized = false;
                    break;
                }
            if (!stabilized) break;
        }
        if (!stabilized) continue;

        // final reduction data: generator rows plus unit rows for every
        // path of length >= ell (all of those lie in the ideal)
        BoundAlgebra alg;
        alg.quiver_ = q;
        alg.relations_ = rels;
        alg.field_ = field;
        alg.working_length_ = ell;
        for (auto& [key, pc] : classes) {
            std::vector<std::vector<Scalar>> rows;
            if (auto git = gens.find(key); git != gens.end()) rows = git->second;
            for (std::size_t j = 0; j < pc.all_paths.size(); ++j)
                if (pc.all_paths[j].length() >= ell) {
                    std::vector<Scalar> unit(pc.all_paths.size(), Scalar::zero(field));
                    unit[j] = Scalar::one(field);
                    rows.push_back(std::move(unit));
                }
            Mat m(field, rows.size(), pc.all_paths.size());
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < pc.all_paths.size(); ++j) m.at(i, j) = rows[i][j];
            RrefResult rr = rref(m);
            pc.rref_rows = rr.r;
            pc.pivots = rr.pivots;
            for (std::size_t pi = 0; pi < rr.pivots.size(); ++pi) pc.pivot_row[rr.pivots[pi]] = pi;
            for (std::size_t j = pc.all_paths.size(); j-- > 0;)
                if (!pc.pivot_row.count(j)) pc.basis.push_back(pc.all_paths[j]);
            // all_paths is in decreasing order, so the loop above yields increasing order
            for (std::size_t b = 0; b < pc.basis.size(); ++b) pc.basis_index[pc.basis[b]] = b;
            alg.dimension_ += pc.basis.size();
            alg.classes_[key] = std::move(pc);
        }
        return alg;
    }
    throw InfiniteDimensional("path enumeration did not stabilize within the length bound");
}

AlgebraPtr build_algebra_ptr(const Quiver& q, const std::vector<Relation>& rels, Field field,
                             std::size_t length_bound) {
    return std::make_shared<const BoundAlgebra>(build_algebra(q, rels, field, length_bound));
}

Representation projective_module(const AlgebraPtr& algebra, std::size_t v) {
    const BoundAlgebra& alg = *algebra;
    if (v >= alg.n_vertices()) throw ShapeError("vertex out of range");
    std::vector<std::size_t> dims(alg.n_vertices());
    for (std::size_t w = 0; w < alg.n_vertices(); ++w) dims[w] = alg.basis_paths(v, w).size();
    std::vector<Mat> maps;
    for (const auto& a : alg.quiver().arrows) {
        Mat m(alg.field(), dims[a.target], dims[a.source]);
        const auto& src_basis = alg.basis_paths(v, a.source);
        for (std::size_t j = 0; j < src_basis.size(); ++j) {
            Path ext{a.source, a.target, {a.id}};
            auto coords = alg.multiply(src_basis[j], ext);
            for (std::size_t i = 0; i < coords.size(); ++i) m.at(i, j) = coords[i];
        }
        maps.push_back(std::move(m));
    }
    return Representation(algebra, dims, maps);
}

Representation injective_module(const AlgebraPtr& algebra, std::size_t v) {
    // I_v at w is the dual of the span of paths w -> v; the arrow a: s -> t
    // acts as the transpose of precomposition with a.
    const BoundAlgebra& alg = *algebra;
    if (v >= alg.n_vertices()) throw ShapeError("vertex out of range");
    std::vector<std::size_t> dims(alg.n_vertices());
    for (std::size_t w = 0; w < alg.n_vertices(); ++w) dims[w] = alg.basis_paths(w, v).size();
    std::vector<Mat> maps;
    for (const auto& a : alg.quiver().arrows) {
        // precomposition: paths(t -> v) -> paths(s -> v)
        const auto& t_basis = alg.basis_paths(a.target, v);
        Mat pre(alg.field(), dims[a.source], t_basis.size());
        for (std::size_t j = 0; j < t_basis.size(); ++j) {
            Path ext{a.source, a.target, {a.id}};
            auto coords = alg.multiply(ext, t_basis[j]);
            for (std::size_t i = 0; i < coords.size(); ++i) pre.at(i, j) = coords[i];
        }
        maps.push_back(pre.transpose());
    }
    return Representation(algebra, dims, maps);
}

} // namespace dexact
