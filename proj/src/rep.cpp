#include "dexact/rep.hpp"

#include <algorithm>
#include <random>

namespace dexact {

Representation::Representation(AlgebraPtr algebra, std::vector<std::size_t> dims,
                               std::vector<Mat> arrow_maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), arrow_maps_(std::move(arrow_maps)) {
    if (dims_.size() != algebra_->n_vertices()) throw ShapeError("dimension vector length mismatch");
    if (arrow_maps_.size() != algebra_->quiver().arrows.size())
        throw ShapeError("arrow map count mismatch");
    for (const auto& a : algebra_->quiver().arrows) {
        const Mat& m = arrow_maps_[a.id];
        if (m.rows() != dims_[a.target] || m.cols() != dims_[a.source])
            throw ShapeError("arrow map shape mismatch");
    }
}

Representation Representation::zero(AlgebraPtr algebra) {
    std::vector<std::size_t> dims(algebra->n_vertices(), 0);
    std::vector<Mat> maps;
    for (const auto& a : algebra->quiver().arrows) {
        (void)a;
        maps.emplace_back(algebra->field(), 0, 0);
    }
    return Representation(std::move(algebra), std::move(dims), std::move(maps));
}

std::size_t Representation::total_dim() const {
    std::size_t t = 0;
    for (auto d : dims_) t += d;
    return t;
}

Mat Representation::path_map(const Path& p) const {
    Mat m = Mat::identity(algebra_->field(), dims_[p.source]);
    std::size_t at = p.source;
    for (std::size_t aid : p.arrows) {
        const auto& a = algebra_->quiver().arrows[aid];
        if (a.source != at) throw ShapeError("non-composable path");
        m = arrow_maps_[aid] * m;
        at = a.target;
    }
    return m;
}

void Representation::validate() const {
    // every relation must act as the zero matrix
    for (const auto& rel : algebra_->relations()) {
        const Path& p0 = rel.terms[0].second;
        Mat acc(algebra_->field(), dims_[p0.target], dims_[p0.source]);
        for (const auto& [c, p] : rel.terms) acc = acc + path_map(p).scaled(c);
        if (!acc.is_zero()) throw ShapeError("relation does not act as zero");
    }
}

std::vector<std::size_t> Representation::sort_key() const {
    std::vector<std::size_t> key;
    key.push_back(total_dim());
    key.insert(key.end(), dims_.begin(), dims_.end());
    for (const auto& m : arrow_maps_) key.push_back(rank(m));
    return key;
}

Morphism::Morphism(Representation source, Representation target, std::vector<Mat> vertex_maps)
    : source_(std::move(source)), target_(std::move(target)), vertex_maps_(std::move(vertex_maps)) {
    if (source_.algebra() != target_.algebra())
        throw AlgebraMismatch("morphism between representations of different algebras");
    if (vertex_maps_.size() != source_.algebra()->n_vertices())
        throw ShapeError("vertex map count mismatch");
    for (std::size_t v = 0; v < vertex_maps_.size(); ++v)
        if (vertex_maps_[v].rows() != target_.dim(v) || vertex_maps_[v].cols() != source_.dim(v))
            throw ShapeError("vertex map shape mismatch");
}

Morphism Morphism::zero(const Representation& source, const Representation& target) {
    std::vector<Mat> maps;
    for (std::size_t v = 0; v < source.algebra()->n_vertices(); ++v)
        maps.emplace_back(source.algebra()->field(), target.dim(v), source.dim(v));
    return Morphism(source, target, std::move(maps));
}

Morphism Morphism::identity(const Representation& m) {
    std::vector<Mat> maps;
    for (std::size_t v = 0; v < m.algebra()->n_vertices(); ++v)
        maps.push_back(Mat::identity(m.algebra()->field(), m.dim(v)));
    return Morphism(m, m, std::move(maps));
}

bool Morphism::is_zero() const {
    for (const auto& m : vertex_maps_)
        if (!m.is_zero()) return false;
    return true;
}

bool Morphism::is_injective() const {
    for (const auto& m : vertex_maps_)
        if (rank(m) != m.cols()) return false;
    return true;
}

bool Morphism::is_surjective() const {
    for (const auto& m : vertex_maps_)
        if (rank(m) != m.rows()) return false;
    return true;
}

bool Morphism::is_isomorphism() const {
    for (const auto& m : vertex_maps_)
        if (m.rows() != m.cols() || rank(m) != m.rows()) return false;
    return true;
}

void Morphism::validate() const {
    for (const auto& a : source_.algebra()->quiver().arrows) {
        Mat lhs = target_.arrow_map(a.id) * vertex_maps_[a.source];
        Mat rhs = vertex_maps_[a.target] * source_.arrow_map(a.id);
        if (!(lhs == rhs)) throw ShapeError("morphism squares do not commute");
    }
}

Morphism Morphism::operator+(const Morphism& o) const {
    std::vector<Mat> maps;
    for (std::size_t v = 0; v < vertex_maps_.size(); ++v)
        maps.push_back(vertex_maps_[v] + o.vertex_maps_[v]);
    return Morphism(source_, target_, std::move(maps));
}

Morphism Morphism::operator-() const { return scaled(-Scalar::one(source_.algebra()->field())); }

Morphism Morphism::scaled(const Scalar& c) const {
    std::vector<Mat> maps;
    for (const auto& m : vertex_maps_) maps.push_back(m.scaled(c));
    return Morphism(source_, target_, std::move(maps));
}

bool Morphism::operator==(const Morphism& o) const {
    if (vertex_maps_.size() != o.vertex_maps_.size()) return false;
    for (std::size_t v = 0; v < vertex_maps_.size(); ++v)
        if (!(vertex_maps_[v] == o.vertex_maps_[v])) return false;
    return true;
}

Morphism compose(const Morphism& g, const Morphism& f) {
    std::vector<Mat> maps;
    for (std::size_t v = 0; v < f.source().algebra()->n_vertices(); ++v)
        maps.push_back(g.vertex_map(v) * f.vertex_map(v));
    return Morphism(f.source(), g.target(), std::move(maps));
}

namespace {

// Flat index bookkeeping for the vector space of vertex-map tuples
// Hom_k-graded(M, N) = prod_v k^{N_v x M_v}.
struct HomCoords {
    const Representation* m;
    const Representation* n;
    std::vector<std::size_t> offsets;
    std::size_t total = 0;

    HomCoords(const Representation& m_, const Representation& n_) : m(&m_), n(&n_) {
        for (std::size_t v = 0; v < m->algebra()->n_vertices(); ++v) {
            offsets.push_back(total);
            total += n->dim(v) * m->dim(v);
        }
    }

    std::size_t index(std::size_t v, std::size_t i, std::size_t j) const {
        return offsets[v] + i * m->dim(v) + j;
    }

    Morphism to_morphism(const Mat& column) const {
        std::vector<Mat> maps;
        for (std::size_t v = 0; v < m->algebra()->n_vertices(); ++v) {
            Mat mv(m->algebra()->field(), n->dim(v), m->dim(v));
            for (std::size_t i = 0; i < n->dim(v); ++i)
                for (std::size_t j = 0; j < m->dim(v); ++j) mv.at(i, j) = column.at(index(v, i, j), 0);
            maps.push_back(std::move(mv));
        }
        return Morphism(*m, *n, std::move(maps));
    }

    Mat to_column(const Morphism& f) const {
        Mat c(m->algebra()->field(), total, 1);
        for (std::size_t v = 0; v < m->algebra()->n_vertices(); ++v)
            for (std::size_t i = 0; i < n->dim(v); ++i)
                for (std::size_t j = 0; j < m->dim(v); ++j)
                    c.at(index(v, i, j), 0) = f.vertex_map(v).at(i, j);
        return c;
    }
};

// Matrix of the commuting-square constraints; its kernel is Hom(M, N).
Mat hom_constraint_matrix(const HomCoords& hc) {
    const Representation& m = *hc.m;
    const Representation& n = *hc.n;
    Field f = m.algebra()->field();
    std::size_t n_rows = 0;
    for (const auto& a : m.algebra()->quiver().arrows) n_rows += n.dim(a.target) * m.dim(a.source);
    Mat c(f, n_rows, hc.total);
    std::size_t row = 0;
    for (const auto& a : m.algebra()->quiver().arrows) {
        const Mat& na = n.arrow_map(a.id);
        const Mat& ma = m.arrow_map(a.id);
        for (std::size_t i = 0; i < n.dim(a.target); ++i)
            for (std::size_t j = 0; j < m.dim(a.source); ++j) {
                // (N_a f_s - f_t M_a)[i, j] = 0
                for (std::size_t k = 0; k < n.dim(a.source); ++k)
                    c.at(row, hc.index(a.source, k, j)) += na.at(i, k);
                for (std::size_t l = 0; l < m.dim(a.target); ++l)
                    c.at(row, hc.index(a.target, i, l)) -= ma.at(l, j);
                ++row;
            }
    }
    return c;
}

} // namespace

std::vector<Morphism> hom_basis(const Representation& m, const Representation& n) {
    if (m.algebra() != n.algebra())
        throw AlgebraMismatch("hom_basis between representations of different algebras");
    HomCoords hc(m, n);
    Mat k = kernel_basis(hom_constraint_matrix(hc));
    std::vector<Morphism> basis;
    for (std::size_t j = 0; j < k.cols(); ++j) basis.push_back(hc.to_morphism(k.column(j)));
    return basis;
}

std::size_t hom_dim(const Representation& m, const Representation& n) {
    HomCoords hc(m, n);
    Mat c = hom_constraint_matrix(hc);
    return hc.total - rank(c);
}

SubquotientPair kernel(const Morphism& f) {
    const Representation& m = f.source();
    Field fd = m.algebra()->field();
    std::vector<Mat> incl_maps;
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < m.algebra()->n_vertices(); ++v) {
        incl_maps.push_back(kernel_basis(f.vertex_map(v)));
        dims.push_back(incl_maps.back().cols());
    }
    std::vector<Mat> arrow_maps;
    for (const auto& a : m.algebra()->quiver().arrows) {
        Mat rhs = m.arrow_map(a.id) * incl_maps[a.source];
        auto x = solve(incl_maps[a.target], rhs);
        if (!x) throw ShapeError("kernel is not arrow-stable"); // cannot happen for valid morphisms
        arrow_maps.push_back(*x);
    }
    (void)fd;
    Representation k(m.algebra(), dims, arrow_maps);
    return SubquotientPair{k, Morphism(k, m, incl_maps)};
}

SubquotientPair cokernel(const Morphism& f) {
    const Representation& n = f.target();
    Field fd = n.algebra()->field();
    std::vector<Mat> proj_maps, sections;
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < n.algebra()->n_vertices(); ++v) {
        Mat b = column_space_basis(f.vertex_map(v));
        // complete the image basis by standard basis vectors
        Mat full = Mat::hcat(b, Mat::identity(fd, n.dim(v)));
        RrefResult r = rref(full);
        std::vector<std::size_t> comp;
        for (std::size_t p : r.pivots)
            if (p >= b.cols()) comp.push_back(p - b.cols());
        Mat c = Mat::identity(fd, n.dim(v)).columns(comp);
        Mat a = Mat::hcat(b, c);
        auto ainv = inverse(a);
        if (!ainv) throw ShapeError("cokernel basis completion failed");
        Mat proj(fd, comp.size(), n.dim(v));
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = 0; j < n.dim(v); ++j) proj.at(i, j) = ainv->at(b.cols() + i, j);
        proj_maps.push_back(proj);
        sections.push_back(c);
        dims.push_back(comp.size());
    }
    std::vector<Mat> arrow_maps;
    for (const auto& a : n.algebra()->quiver().arrows)
        arrow_maps.push_back(proj_maps[a.target] * n.arrow_map(a.id) * sections[a.source]);
    Representation q(n.algebra(), dims, arrow_maps);
    return SubquotientPair{q, Morphism(n, q, proj_maps)};
}

ImageTriple image(const Morphism& f) {
    const Representation& n = f.target();
    std::vector<Mat> incl_maps, proj_maps;
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < n.algebra()->n_vertices(); ++v) {
        Mat b = column_space_basis(f.vertex_map(v));
        incl_maps.push_back(b);
        dims.push_back(b.cols());
        auto coords = solve(b, f.vertex_map(v));
        if (!coords) throw ShapeError("image coordinates failed");
        proj_maps.push_back(*coords);
    }
    std::vector<Mat> arrow_maps;
    for (const auto& a : n.algebra()->quiver().arrows) {
        Mat rhs = n.arrow_map(a.id) * incl_maps[a.source];
        auto x = solve(incl_maps[a.target], rhs);
        if (!x) throw ShapeError("image is not arrow-stable");
        arrow_maps.push_back(*x);
    }
    Representation im(n.algebra(), dims, arrow_maps);
    return ImageTriple{im, Morphism(im, n, incl_maps), Morphism(f.source(), im, proj_maps)};
}

DirectSum direct_sum(const std::vector<Representation>& parts) {
    if (parts.empty()) throw ShapeError("direct_sum needs the algebra; pass at least one part");
    AlgebraPtr alg = parts[0].algebra();
    Field fd = alg->field();
    for (const auto& p : parts)
        if (p.algebra() != alg) throw AlgebraMismatch("direct sum across algebras");
    std::vector<std::size_t> dims(alg->n_vertices(), 0);
    for (const auto& p : parts)
        for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += p.dim(v);
    std::vector<Mat> arrow_maps;
    for (const auto& a : alg->quiver().arrows) {
        std::vector<Mat> blocks;
        for (const auto& p : parts) blocks.push_back(p.arrow_map(a.id));
        arrow_maps.push_back(Mat::diag_blocks(fd, blocks));
    }
    Representation sum(alg, dims, arrow_maps);

    DirectSum ds{sum, {}, {}};
    std::vector<std::size_t> offset(alg->n_vertices(), 0);
    for (const auto& p : parts) {
        std::vector<Mat> inj, proj;
        for (std::size_t v = 0; v < dims.size(); ++v) {
            Mat iv(fd, dims[v], p.dim(v));
            Mat pv(fd, p.dim(v), dims[v]);
            for (std::size_t i = 0; i < p.dim(v); ++i) {
                iv.at(offset[v] + i, i) = Scalar::one(fd);
                pv.at(i, offset[v] + i) = Scalar::one(fd);
            }
            inj.push_back(iv);
            proj.push_back(pv);
        }
        ds.injections.emplace_back(p, sum, inj);
        ds.projections.emplace_back(sum, p, proj);
        for (std::size_t v = 0; v < dims.size(); ++v) offset[v] += p.dim(v);
    }
    return ds;
}

Mat morphism_to_column(const Morphism& f) {
    HomCoords hc(f.source(), f.target());
    return hc.to_column(f);
}

namespace {

// Columns of basis morphisms, flattened.
Mat basis_columns(const std::vector<Morphism>& basis, const Representation& a,
                  const Representation& b) {
    HomCoords hc(a, b);
    Mat m(a.algebra()->field(), hc.total, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Mat c = hc.to_column(basis[j]);
        for (std::size_t i = 0; i < hc.total; ++i) m.at(i, j) = c.at(i, 0);
    }
    return m;
}

Morphism from_coefficients(const std::vector<Morphism>& basis, const Mat& x,
                           const Representation& a, const Representation& b) {
    Morphism h = Morphism::zero(a, b);
    for (std::size_t k = 0; k < basis.size(); ++k) h = h + basis[k].scaled(x.at(k, 0));
    return h;
}

} // namespace

Mat hom_post_matrix(const Morphism& f, const Representation& x) {
    auto src = hom_basis(x, f.source());
    auto tgt = hom_basis(x, f.target());
    Mat tcols = basis_columns(tgt, x, f.target());
    HomCoords hc(x, f.target());
    Mat rhs(x.algebra()->field(), hc.total, src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        Mat c = hc.to_column(compose(f, src[j]));
        for (std::size_t i = 0; i < hc.total; ++i) rhs.at(i, j) = c.at(i, 0);
    }
    auto coords = solve(tcols, rhs);
    if (!coords) throw ShapeError("composite left the hom space"); // cannot happen
    return *coords;
}

Mat hom_pre_matrix(const Morphism& f, const Representation& x) {
    auto src = hom_basis(f.target(), x);
    auto tgt = hom_basis(f.source(), x);
    Mat tcols = basis_columns(tgt, f.source(), x);
    HomCoords hc(f.source(), x);
    Mat rhs(x.algebra()->field(), hc.total, src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        Mat c = hc.to_column(compose(src[j], f));
        for (std::size_t i = 0; i < hc.total; ++i) rhs.at(i, j) = c.at(i, 0);
    }
    auto coords = solve(tcols, rhs);
    if (!coords) throw ShapeError("composite left the hom space");
    return *coords;
}

std::optional<Morphism> lift_through(const Morphism& g, const Morphism& t) {
    const Representation& a = t.source();
    const Representation& b = g.source();
    auto basis = hom_basis(a, b);
    HomCoords hc(a, g.target());
    Mat cols(a.algebra()->field(), hc.total, basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        Mat c = hc.to_column(compose(g, basis[k]));
        for (std::size_t i = 0; i < hc.total; ++i) cols.at(i, k) = c.at(i, 0);
    }
    auto x = solve(cols, hc.to_column(t));
    if (!x) return std::nullopt;
    return from_coefficients(basis, *x, a, b);
}

std::optional<Morphism> factor_over(const Morphism& g, const Morphism& t) {
    const Representation& b = g.target();
    const Representation& c = t.target();
    auto basis = hom_basis(b, c);
    HomCoords hc(g.source(), c);
    Mat cols(b.algebra()->field(), hc.total, basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        Mat col = hc.to_column(compose(basis[k], g));
        for (std::size_t i = 0; i < hc.total; ++i) cols.at(i, k) = col.at(i, 0);
    }
    auto x = solve(cols, hc.to_column(t));
    if (!x) return std::nullopt;
    return from_coefficients(basis, *x, b, c);
}

std::optional<Morphism> is_isomorphic(const Representation& m, const Representation& n,
                                      const IsoOptions& opts) {
    if (m.algebra() != n.algebra()) throw AlgebraMismatch("iso test across algebras");
    if (m.dims() != n.dims()) return std::nullopt;
    if (m.sort_key() != n.sort_key()) return std::nullopt;
    if (m.total_dim() == 0) return Morphism::zero(m, n);
    if (hom_dim(m, m) != hom_dim(n, n) || hom_dim(m, n) != hom_dim(n, m)) return std::nullopt;

    auto basis = hom_basis(m, n);
    for (const auto& f : basis)
        if (f.is_isomorphism()) return f;

    std::mt19937 rng(opts.seed);
    std::uniform_int_distribution<long> coeff(-opts.coefficient_bound, opts.coefficient_bound);
    Field fd = m.algebra()->field();
    for (std::size_t t = 0; t < opts.random_tries; ++t) {
        Morphism f = Morphism::zero(m, n);
        for (const auto& b : basis) f = f + b.scaled(Scalar(fd, coeff(rng)));
        if (f.is_isomorphism()) return f;
    }
    throw SearchExhausted("hom invariants agree but no invertible combination found within bounds");
}

namespace {

struct Piece {
    Representation object;
    Morphism incl; // object -> ambient
    Morphism proj; // ambient -> object
};

Mat mat_pow(const Mat& m, std::size_t n) {
    Mat r = Mat::identity(m.field(), m.rows());
    for (std::size_t i = 0; i < n; ++i) r = r * m;
    return r;
}

Morphism endo_pow(const Morphism& f, std::size_t n) {
    std::vector<Mat> maps;
    for (std::size_t v = 0; v < f.source().algebra()->n_vertices(); ++v)
        maps.push_back(mat_pow(f.vertex_map(v), n));
    return Morphism(f.source(), f.source(), maps);
}

void split_rec(const Representation& m, const IsoOptions& opts, std::vector<Piece>& out,
               const Morphism& incl, const Morphism& proj) {
    if (m.is_zero()) return;
    Field fd = m.algebra()->field();
    auto ends = hom_basis(m, m);
    std::vector<Morphism> candidates = ends;
    for (std::size_t i = 0; i < ends.size(); ++i)
        for (std::size_t j = i + 1; j < ends.size(); ++j) {
            candidates.push_back(ends[i] + ends[j]);
            candidates.push_back(ends[i] + ends[j].scaled(-Scalar::one(fd)));
        }
    std::size_t n = m.total_dim();
    for (const auto& f : candidates) {
        Morphism g = endo_pow(f, n);
        SubquotientPair ker = kernel(g);
        if (ker.object.total_dim() == 0 || ker.object.total_dim() == n) continue;
        ImageTriple im = image(g);
        // M = ker g^n  (+)  im g^n: assemble the projections
        std::vector<Mat> pk, pi;
        for (std::size_t v = 0; v < m.algebra()->n_vertices(); ++v) {
            Mat a = Mat::hcat(ker.map.vertex_map(v), im.incl.vertex_map(v));
            auto ai = inverse(a);
            if (!ai) throw DecompositionInconclusive("Fitting split did not produce a direct sum");
            std::size_t kd = ker.object.dim(v);
            Mat top(fd, kd, m.dim(v)), bot(fd, m.dim(v) - kd, m.dim(v));
            for (std::size_t j = 0; j < m.dim(v); ++j) {
                for (std::size_t i = 0; i < kd; ++i) top.at(i, j) = ai->at(i, j);
                for (std::size_t i = kd; i < m.dim(v); ++i) bot.at(i - kd, j) = ai->at(i, j);
            }
            pk.push_back(top);
            pi.push_back(bot);
        }
        Morphism proj_k(m, ker.object, pk), proj_i(m, im.object, pi);
        split_rec(ker.object, opts, out, compose(incl, ker.map), compose(proj_k, proj));
        split_rec(im.object, opts, out, compose(incl, im.incl), compose(proj_i, proj));
        return;
    }
    // no candidate splits: certified indecomposable when every tested
    // endomorphism is nilpotent or invertible
    for (const auto& f : candidates) {
        Morphism g = endo_pow(f, n);
        if (!g.is_zero() && !f.is_isomorphism())
            throw DecompositionInconclusive("endomorphism neither nilpotent nor invertible survived");
    }
    out.push_back(Piece{m, incl, proj});
}

} // namespace

std::vector<Summand> decompose(const Representation& m, const IsoOptions& opts) {
    std::vector<Summand> result;
    if (m.is_zero()) return result;
    std::vector<Piece> pieces;
    split_rec(m, opts, pieces, Morphism::identity(m), Morphism::identity(m));
    std::vector<bool> used(pieces.size(), false);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (used[i]) continue;
        Summand s{pieces[i].object, 1, compose(pieces[i].incl, pieces[i].proj)};
        for (std::size_t j = i + 1; j < pieces.size(); ++j) {
            if (used[j]) continue;
            if (is_isomorphic(pieces[i].object, pieces[j].object, opts)) {
                used[j] = true;
                ++s.multiplicity;
            }
        }
        result.push_back(std::move(s));
    }
    return result;
}

std::size_t Catalog::find(const Representation& m) const {
    auto i = try_find(m);
    if (!i) throw UnknownSummand("object is not isomorphic to any catalog member");
    return *i;
}

std::optional<std::size_t> Catalog::try_find(const Representation& m) const {
    auto key = m.sort_key();
    for (std::size_t i = 0; i < objects_.size(); ++i) {
        if (objects_[i].sort_key() != key) continue;
        if (is_isomorphic(objects_[i], m)) return i;
    }
    return std::nullopt;
}

Catalog build_catalog(const AlgebraPtr& algebra, CatalogStrategy strategy,
                      const std::vector<Representation>& user_objects, std::size_t dim_cap) {
    std::vector<Representation> objs;
    auto add = [&](const Representation& m) -> bool {
        bool changed = false;
        if (m.is_zero()) return false;
        if (m.total_dim() > dim_cap) throw CatalogCapExceeded("object dimension exceeds catalog cap");
        for (const auto& s : decompose(m)) {
            bool found = false;
            auto key = s.object.sort_key();
            for (const auto& o : objs)
                if (o.sort_key() == key && is_isomorphic(o, s.object)) {
                    found = true;
                    break;
                }
            if (!found) {
                objs.push_back(s.object);
                changed = true;
            }
        }
        return changed;
    };

    if (strategy == CatalogStrategy::User) {
        for (const auto& m : user_objects) add(m);
    } else {
        for (std::size_t v = 0; v < algebra->n_vertices(); ++v) {
            add(projective_module(algebra, v));
            add(injective_module(algebra, v));
        }
        bool changed = true;
        while (changed) {
            changed = false;
            std::size_t count = objs.size();
            for (std::size_t i = 0; i < count; ++i)
                for (std::size_t j = 0; j < count; ++j)
                    for (const auto& f : hom_basis(objs[i], objs[j])) {
                        changed |= add(kernel(f).object);
                        changed |= add(cokernel(f).object);
                        changed |= add(image(f).object);
                    }
        }
    }
    std::sort(objs.begin(), objs.end(),
              [](const Representation& a, const Representation& b) { return a.sort_key() < b.sort_key(); });
    // duplicate check (User strategy may feed isomorphic copies)
    for (std::size_t i = 0; i + 1 < objs.size(); ++i)
        for (std::size_t j = i + 1; j < objs.size(); ++j)
            if (objs[i].sort_key() == objs[j].sort_key() && is_isomorphic(objs[i], objs[j]))
                throw ShapeError("catalog contains isomorphic duplicates");
    return Catalog(algebra, std::move(objs));
}

} // namespace dexact
