#include "dexact/fpfun.hpp"

#include <random>

namespace dexact {

namespace {

// Projection and section for the cokernel of a plain matrix a: k^m -> k^n.
struct CokerData {
    Mat proj;    // k^n -> k^v
    Mat section; // k^v -> k^n, proj * section = id
};

CokerData coker_of(const Mat& a) {
    Field fd = a.field();
    std::size_t n = a.rows();
    Mat b = column_space_basis(a);
    Mat full = Mat::hcat(b, Mat::identity(fd, n));
    RrefResult r = rref(full);
    std::vector<std::size_t> comp;
    for (std::size_t p : r.pivots)
        if (p >= b.cols()) comp.push_back(p - b.cols());
    Mat c = Mat::identity(fd, n).columns(comp);
    Mat full_basis = Mat::hcat(b, c);
    auto inv = inverse(full_basis);
    if (!inv) throw ShapeError("cokernel completion failed");
    Mat proj(fd, comp.size(), n);
    for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) proj.at(i, j) = inv->at(b.cols() + i, j);
    return CokerData{proj, c};
}

Mat hom_basis_columns(const Representation& a, const Representation& b,
                      const std::vector<Morphism>& basis) {
    std::size_t total = 0;
    for (std::size_t v = 0; v < a.algebra()->n_vertices(); ++v) total += a.dim(v) * b.dim(v);
    Mat m(a.algebra()->field(), total, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Mat c = morphism_to_column(basis[j]);
        for (std::size_t i = 0; i < total; ++i) m.at(i, j) = c.at(i, 0);
    }
    return m;
}

} // namespace

bool RestrictedFunctor::is_zero() const {
    for (auto d : value_dims)
        if (d != 0) return false;
    return true;
}

RestrictedFunctor restrict_functor(const FPPresentation& p, const AddSubcategory& x) {
    RestrictedFunctor f;
    f.x = x;
    std::vector<CokerData> cokers;
    std::vector<Mat> pres_mats;
    for (std::size_t j = 0; j < x.size(); ++j) {
        Mat a = hom_post_matrix(p.f, x.member(j)); // Hom(X_j,B1) -> Hom(X_j,B0)
        pres_mats.push_back(a);
        cokers.push_back(coker_of(a));
        f.value_dims.push_back(cokers.back().proj.rows());
    }
    for (std::size_t j = 0; j < x.size(); ++j)
        for (std::size_t k = 0; k < x.size(); ++k) {
            std::vector<Mat> acts;
            for (const auto& phi : hom_basis(x.member(j), x.member(k))) {
                Mat pre = hom_pre_matrix(phi, p.f.target()); // Hom(X_k,B0) -> Hom(X_j,B0)
                if (!(cokers[j].proj * pre * pres_mats[k]).is_zero())
                    throw ShapeError("functor action not well-defined on the cokernel");
                acts.push_back(cokers[j].proj * pre * cokers[k].section);
            }
            f.action[{j, k}] = std::move(acts);
        }
    return f;
}

Mat functor_action(const RestrictedFunctor& f, std::size_t j, std::size_t k, const Morphism& phi) {
    auto basis = hom_basis(f.x.member(j), f.x.member(k));
    Mat cols = hom_basis_columns(f.x.member(j), f.x.member(k), basis);
    auto coords = solve(cols, morphism_to_column(phi));
    if (!coords) throw ShapeError("morphism is not in the hom space");
    Field fd = phi.source().algebra()->field();
    Mat out(fd, f.value_dims[j], f.value_dims[k]);
    const auto& acts = f.action.at({j, k});
    for (std::size_t t = 0; t < acts.size(); ++t) out = out + acts[t].scaled(coords->at(t, 0));
    return out;
}

std::optional<std::vector<Mat>> functor_iso(const RestrictedFunctor& f, const RestrictedFunctor& g) {
    if (f.value_dims != g.value_dims) return std::nullopt;
    std::size_t n = f.value_dims.size();
    Field fd = f.x.catalog.algebra()->field();
    std::vector<std::size_t> offsets(n, 0);
    std::size_t total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        offsets[j] = total;
        total += f.value_dims[j] * f.value_dims[j];
    }
    if (total == 0) return std::vector<Mat>(n, Mat(fd, 0, 0));
    auto idx = [&](std::size_t j, std::size_t a, std::size_t b) {
        return offsets[j] + a * f.value_dims[j] + b;
    };
    // naturality: G(phi) eta_k = eta_j F(phi) for each basis phi: X_j -> X_k
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            const auto& fa = f.action.at({j, k});
            const auto& ga = g.action.at({j, k});
            for (std::size_t t = 0; t < fa.size(); ++t)
                for (std::size_t a = 0; a < g.value_dims[j]; ++a)
                    for (std::size_t b = 0; b < f.value_dims[k]; ++b) {
                        std::vector<Scalar> row(total, Scalar::zero(fd));
                        for (std::size_t c = 0; c < f.value_dims[k]; ++c)
                            row[idx(k, c, b)] += ga[t].at(a, c);
                        for (std::size_t c = 0; c < f.value_dims[j]; ++c)
                            row[idx(j, a, c)] -= fa[t].at(c, b);
                        rows.push_back(std::move(row));
                    }
        }
    Mat sys(fd, rows.size(), total);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < total; ++j) sys.at(i, j) = rows[i][j];
    Mat ker = kernel_basis(sys);
    if (ker.cols() == 0) return std::nullopt; // only the zero transformation exists

    auto unflatten = [&](const Mat& col) {
        std::vector<Mat> eta;
        for (std::size_t j = 0; j < n; ++j) {
            Mat m(fd, f.value_dims[j], f.value_dims[j]);
            for (std::size_t a = 0; a < f.value_dims[j]; ++a)
                for (std::size_t b = 0; b < f.value_dims[j]; ++b) m.at(a, b) = col.at(idx(j, a, b), 0);
            eta.push_back(std::move(m));
        }
        return eta;
    };
    auto invertible = [&](const std::vector<Mat>& eta) {
        for (const auto& m : eta)
            if (rank(m) != m.rows()) return false;
        return true;
    };
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        auto eta = unflatten(ker.column(c));
        if (invertible(eta)) return eta;
    }
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> coeff(-3, 3);
    for (std::size_t tr = 0; tr < 200; ++tr) {
        Mat col(fd, total, 1);
        for (std::size_t c = 0; c < ker.cols(); ++c) {
            Scalar s(fd, coeff(rng));
            for (std::size_t i = 0; i < total; ++i) col.at(i, 0) += ker.column(c).at(i, 0) * s;
        }
        auto eta = unflatten(col);
        if (invertible(eta)) return eta;
    }
    throw SearchExhausted("value dimensions agree but no invertible natural transformation found");
}

DSequence functor_resolution(const FPPresentation& p, const AmbientStructure& ambient) {
    return d_kernel(p.f, ambient);
}

namespace {

// (u, v) with a∘u + b∘v = t; u: S -> src(a), v: S -> src(b).
std::optional<std::pair<Morphism, Morphism>> solve_pair(const Morphism& a, const Morphism& b,
                                                        const Morphism& t) {
    const Representation& s = t.source();
    auto ub = hom_basis(s, a.source());
    auto vb = hom_basis(s, b.source());
    std::size_t total = 0;
    for (std::size_t v = 0; v < s.algebra()->n_vertices(); ++v)
        total += s.dim(v) * t.target().dim(v);
    Field fd = s.algebra()->field();
    Mat cols(fd, total, ub.size() + vb.size());
    for (std::size_t k = 0; k < ub.size(); ++k) {
        Mat c = morphism_to_column(compose(a, ub[k]));
        for (std::size_t i = 0; i < total; ++i) cols.at(i, k) = c.at(i, 0);
    }
    for (std::size_t k = 0; k < vb.size(); ++k) {
        Mat c = morphism_to_column(compose(b, vb[k]));
        for (std::size_t i = 0; i < total; ++i) cols.at(i, ub.size() + k) = c.at(i, 0);
    }
    auto x = solve(cols, morphism_to_column(t));
    if (!x) return std::nullopt;
    Morphism u = Morphism::zero(s, a.source());
    for (std::size_t k = 0; k < ub.size(); ++k) u = u + ub[k].scaled(x->at(k, 0));
    Morphism v = Morphism::zero(s, b.source());
    for (std::size_t k = 0; k < vb.size(); ++k) v = v + vb[k].scaled(x->at(ub.size() + k, 0));
    return std::make_pair(u, v);
}

} // namespace

std::vector<Mat> induced_value_maps(const FPPresentation& p, const FPPresentation& q,
                                    const PresMorphism& u, const AddSubcategory& x) {
    std::vector<Mat> out;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const Representation& xj = x.member(j);
        CokerData cp = coker_of(hom_post_matrix(p.f, xj));
        CokerData cq = coker_of(hom_post_matrix(q.f, xj));
        Mat u0 = hom_post_matrix(u.u0, xj); // Hom(X_j, B0) -> Hom(X_j, C0)
        out.push_back(cq.proj * u0 * cp.section);
    }
    return out;
}

bool is_exact_ses(const FunctorSES& ses, const AddSubcategory& x) {
    RestrictedFunctor fs = restrict_functor(ses.sub, x);
    RestrictedFunctor fm = restrict_functor(ses.middle, x);
    RestrictedFunctor fq = restrict_functor(ses.quot, x);
    std::vector<Mat> inc = induced_value_maps(ses.sub, ses.middle, ses.incl, x);
    std::vector<Mat> prj = induced_value_maps(ses.middle, ses.quot, ses.proj, x);
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (fm.value_dims[j] != fs.value_dims[j] + fq.value_dims[j]) return false;
        if (rank(inc[j]) != inc[j].cols()) return false;        // injective
        if (rank(prj[j]) != prj[j].rows()) return false;        // surjective
        if (!(prj[j] * inc[j]).is_zero()) return false;         // composite zero
        // exactness in the middle follows from the dimension count
    }
    return true;
}

std::vector<FunctorSES> enumerate_functor_ses(const Catalog& catalog) {
    AlgebraPtr alg = catalog.algebra();
    Field fd = alg->field();
    Representation z = Representation::zero(alg);
    std::vector<FPPresentation> pres;
    for (const auto& a : catalog.objects())
        for (const auto& b : catalog.objects())
            for (const auto& f : hom_basis(a, b)) pres.push_back(FPPresentation{f});
    for (const auto& b : catalog.objects()) pres.push_back(FPPresentation{Morphism::zero(z, b)});

    AddSubcategory full = full_subcategory(catalog);
    std::vector<FunctorSES> out;
    for (const auto& ps : pres)
        for (const auto& pq : pres) {
            std::vector<Morphism> connectors = {
                Morphism::zero(pq.f.source(), ps.f.target())};
            for (const auto& h : hom_basis(pq.f.source(), ps.f.target())) connectors.push_back(h);
            for (const auto& h : connectors) {
                DirectSum c1 = direct_sum({ps.f.source(), pq.f.source()});
                DirectSum c0 = direct_sum({ps.f.target(), pq.f.target()});
                Morphism g = compose(c0.injections[0], compose(ps.f, c1.projections[0])) +
                             compose(c0.injections[0], compose(h, c1.projections[1])) +
                             compose(c0.injections[1], compose(pq.f, c1.projections[1]));
                FunctorSES ses{ps,
                               FPPresentation{g},
                               pq,
                               PresMorphism{c1.injections[0], c0.injections[0]},
                               PresMorphism{c1.projections[1], c0.projections[1]}};
                if (is_exact_ses(ses, full)) out.push_back(std::move(ses));
            }
        }
    (void)fd;
    return out;
}

DSequence horseshoe(const DSequence& res_sub, const DSequence& res_quot, const FunctorSES& ses,
                    const AmbientStructure& ambient) {
    std::size_t d = ambient.d;
    if (res_sub.objects.size() != d + 2 || res_quot.objects.size() != d + 2)
        throw ShapeError("resolutions must have d+2 objects");
    Field fd = ses.middle.f.source().algebra()->field();
    const Morphism& g = ses.middle.f;       // C1 -> C0
    const Morphism& fq = ses.quot.f;        // B1 -> B0
    const Morphism& iota0 = ses.incl.u0;    // A0 -> C0
    const Morphism& pi0 = ses.proj.u0;      // C0 -> B0

    // lift the quotient augmentation through M: pi0∘t - fq∘s = id
    auto ts = solve_pair(pi0, fq.scaled(-Scalar::one(fd)), Morphism::identity(fq.target()));
    if (!ts) throw LiftFailed("augmentation of the quotient does not lift");
    Morphism t = ts->first;

    // h1: iota0∘h1 - g∘r = -t∘fq
    auto h1r = solve_pair(iota0, g.scaled(-Scalar::one(fd)),
                          compose(t, fq).scaled(-Scalar::one(fd)));
    if (!h1r) throw LiftFailed("degree-1 connecting lift is inconsistent");

    std::vector<Morphism> h(d + 2, h1r->first); // h[i]: B_i -> A_{i-1}, valid for i >= 1
    auto da = [&](std::size_t i) { return res_sub.maps[res_sub.objects.size() - 1 - i]; };
    auto db = [&](std::size_t i) { return res_quot.maps[res_quot.objects.size() - 1 - i]; };
    for (std::size_t i = 2; i <= d + 1; ++i) {
        auto hi = lift_through(da(i - 1), compose(h[i - 1], db(i)).scaled(-Scalar::one(fd)));
        if (!hi) throw LiftFailed("degree-" + std::to_string(i) + " connecting lift is inconsistent");
        h[i] = *hi;
    }

    std::vector<DirectSum> ds;
    for (std::size_t i = 0; i <= d + 1; ++i)
        ds.push_back(direct_sum({res_sub.term(i), res_quot.term(i)}));
    DSequence out;
    for (std::size_t i = d + 2; i-- > 0;) out.objects.push_back(ds[i].sum);
    for (std::size_t i = d + 1; i >= 1; --i) {
        Morphism m = compose(ds[i - 1].injections[0], compose(da(i), ds[i].projections[0])) +
                     compose(ds[i - 1].injections[0], compose(h[i], ds[i].projections[1])) +
                     compose(ds[i - 1].injections[1], compose(db(i), ds[i].projections[1]));
        out.maps.push_back(m);
    }
    return out;
}

} // namespace dexact
