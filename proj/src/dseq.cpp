#include "dexact/dseq.hpp"

#include <sstream>

namespace dexact {

void DSequence::validate() const {
    if (objects.size() < 3) throw ShapeError("sequence needs at least 3 objects");
    if (maps.size() + 1 != objects.size()) throw ShapeError("sequence map count mismatch");
    for (std::size_t i = 0; i < maps.size(); ++i) {
        maps[i].validate();
        if (maps[i].source().dims() != objects[i].dims() ||
            maps[i].target().dims() != objects[i + 1].dims())
            throw ShapeError("sequence map endpoints mismatch");
    }
    for (std::size_t i = 0; i + 1 < maps.size(); ++i)
        if (!compose(maps[i + 1], maps[i]).is_zero()) throw ShapeError("composite not zero");
}

std::string DSequence::describe() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < objects.size(); ++k) {
        if (k) os << " -> ";
        os << "(";
        for (std::size_t v = 0; v < objects[k].dims().size(); ++v) {
            if (v) os << ",";
            os << objects[k].dim(v);
        }
        os << ")";
    }
    return os.str();
}

DSequence split_sequence(const Representation& a, const Representation& b, std::size_t d) {
    DirectSum ds = direct_sum({a, b});
    DSequence s;
    Representation z = Representation::zero(a.algebra());
    for (std::size_t k = 0; k + 3 < d + 2; ++k) s.objects.push_back(z);
    s.objects.push_back(a);
    s.objects.push_back(ds.sum);
    s.objects.push_back(b);
    for (std::size_t k = 0; k + 3 < s.objects.size(); ++k)
        s.maps.push_back(Morphism::zero(s.objects[k], s.objects[k + 1]));
    s.maps.push_back(ds.injections[0]);
    s.maps.push_back(ds.projections[1]);
    return s;
}

AmbientStructure AmbientStructure::module_category(const AlgebraPtr& algebra) {
    AmbientStructure a;
    a.kind = Kind::ModuleCategory;
    a.d = 1;
    a.algebra = algebra;
    for (std::size_t v = 0; v < algebra->n_vertices(); ++v)
        a.test_objects.push_back(projective_module(algebra, v));
    return a;
}

AmbientStructure AmbientStructure::d_cluster_tilting(const AlgebraPtr& algebra,
                                                     std::vector<Representation> t_members,
                                                     std::size_t d) {
    AmbientStructure a;
    a.kind = Kind::DClusterTilting;
    a.d = d;
    a.algebra = algebra;
    a.test_objects = std::move(t_members);
    return a;
}

AmbientStructure AmbientStructure::d_torsion_class(std::vector<Representation> u_members,
                                                   AmbientStructure ambient) {
    AmbientStructure a;
    a.kind = Kind::DTorsionClass;
    a.d = ambient.d;
    a.algebra = ambient.algebra;
    a.test_objects = std::move(u_members);
    a.inner = std::make_shared<AmbientStructure>(std::move(ambient));
    return a;
}

bool AmbientStructure::contains(const Representation& m) const {
    if (kind == Kind::ModuleCategory) return true;
    if (m.is_zero()) return true;
    for (const auto& s : decompose(m)) {
        bool found = false;
        for (const auto& t : test_objects)
            if (s.object.sort_key() == t.sort_key() && is_isomorphic(s.object, t)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

void AmbientStructure::require_member(const Representation& m) const {
    if (!contains(m)) throw ObjectOutsideSubcategory("object does not lie in the ambient subcategory");
}

namespace {

// Exactness of 0 -> Hom(x, A_{d+1}) -> ... -> Hom(x, A_0) at every
// position except possibly the last.
bool left_exact_on(const DSequence& s, const Representation& x) {
    std::size_t n = s.maps.size();
    std::vector<Mat> h;
    for (std::size_t k = 0; k < n; ++k) h.push_back(hom_post_matrix(s.maps[k], x));
    if (rank(h[0]) != h[0].cols()) return false; // injectivity at the left end
    for (std::size_t k = 1; k < n; ++k)
        if (h[k].cols() - rank(h[k]) != rank(h[k - 1])) return false;
    return true;
}

bool right_exact_on(const DSequence& s, const Representation& x) {
    std::size_t n = s.maps.size();
    std::vector<Mat> g; // g[k]: Hom(objects[k+1], x) -> Hom(objects[k], x)
    for (std::size_t k = 0; k < n; ++k) g.push_back(hom_pre_matrix(s.maps[k], x));
    if (rank(g[n - 1]) != g[n - 1].cols()) return false; // injectivity at Hom(A_0, x)
    for (std::size_t k = 0; k + 1 < n; ++k)
        if (g[k].cols() - rank(g[k]) != rank(g[k + 1])) return false;
    return true;
}

void require_sequence_in(const DSequence& s, const AmbientStructure& ambient) {
    if (ambient.kind == AmbientStructure::Kind::ModuleCategory) return;
    for (const auto& o : s.objects) ambient.require_member(o);
}

} // namespace

bool is_left_d_exact(const DSequence& s, const AmbientStructure& ambient) {
    require_sequence_in(s, ambient);
    for (std::size_t i = 0; i + 1 < s.maps.size(); ++i)
        if (!compose(s.maps[i + 1], s.maps[i]).is_zero()) return false;
    for (const auto& x : ambient.test_objects)
        if (!left_exact_on(s, x)) return false;
    return true;
}

bool is_right_d_exact(const DSequence& s, const AmbientStructure& ambient) {
    require_sequence_in(s, ambient);
    for (std::size_t i = 0; i + 1 < s.maps.size(); ++i)
        if (!compose(s.maps[i + 1], s.maps[i]).is_zero()) return false;
    for (const auto& x : ambient.test_objects)
        if (!right_exact_on(s, x)) return false;
    return true;
}

bool is_d_exact(const DSequence& s, const AmbientStructure& ambient) {
    return is_left_d_exact(s, ambient) && is_right_d_exact(s, ambient);
}

namespace {

bool yoneda_epi(const Morphism& f, const AmbientStructure& ambient) {
    for (const auto& x : ambient.test_objects) {
        Mat h = hom_post_matrix(f, x);
        if (rank(h) != h.rows()) return false;
    }
    return true;
}

} // namespace

bool is_admissible_deflation(const Morphism& f, const AmbientStructure& ambient) {
    if (!yoneda_epi(f, ambient)) return false;
    try {
        DSequence s = d_kernel(f, ambient);
        return is_d_exact(s, ambient);
    } catch (const NotInSubcategory&) {
        return false;
    } catch (const ApproximationNotMonic&) {
        return false;
    } catch (const LiftFailed&) {
        return false;
    }
}

DSequence d_kernel(const Morphism& f, const AmbientStructure& ambient) {
    switch (ambient.kind) {
    case AmbientStructure::Kind::ModuleCategory: {
        SubquotientPair k = kernel(f);
        return DSequence{{k.object, f.source(), f.target()}, {k.map, f}};
    }
    case AmbientStructure::Kind::DClusterTilting: {
        ambient.require_member(f.source());
        ambient.require_member(f.target());
        DSequence s{{f.source(), f.target()}, {f}};
        SubquotientPair k = kernel(f);
        for (std::size_t step = 1; step < ambient.d; ++step) {
            Approximation a = minimize(right_approximation_list(ambient.test_objects, k.object));
            Representation src = a.summands.empty() ? Representation::zero(ambient.algebra)
                                                    : direct_sum(a.summands).sum;
            Morphism am =
                a.summands.empty() ? Morphism::zero(src, k.object) : a.map;
            s.objects.insert(s.objects.begin(), src);
            s.maps.insert(s.maps.begin(), compose(k.map, am));
            k = kernel(am);
        }
        if (!ambient.contains(k.object))
            throw NotInSubcategory("final kernel does not decompose into test-object summands");
        s.objects.insert(s.objects.begin(), k.object);
        s.maps.insert(s.maps.begin(), k.map);
        return s;
    }
    case AmbientStructure::Kind::DTorsionClass: {
        // lift the ambient d-kernel through monic right approximations
        DSequence base = d_kernel(f, *ambient.inner);
        std::size_t d = ambient.d;
        // base.objects: B_{d+1}, ..., B_2, U_1, U_0
        DSequence s{{f.source(), f.target()}, {f}};
        Morphism a_prev = Morphism::identity(f.source()); // a_1 = id(U_1)
        for (std::size_t i = 2; i <= d + 1; ++i) {
            const Representation& b_i = base.objects[d + 1 - i];
            const Morphism& f_i = base.maps[d + 1 - i]; // B_i -> B_{i-1}
            Approximation ap = minimize(right_approximation_list(ambient.test_objects, b_i));
            Representation u_i = ap.summands.empty() ? Representation::zero(ambient.algebra)
                                                     : direct_sum(ap.summands).sum;
            Morphism a_i = ap.summands.empty() ? Morphism::zero(u_i, b_i) : ap.map;
            if (!a_i.is_injective())
                throw ApproximationNotMonic("right approximation is not a monomorphism");
            auto g_i = lift_through(a_prev, compose(f_i, a_i));
            if (!g_i) throw LiftFailed("no lift through the previous approximation");
            s.objects.insert(s.objects.begin(), u_i);
            s.maps.insert(s.maps.begin(), *g_i);
            a_prev = a_i;
        }
        return s;
    }
    }
    throw ShapeError("unknown ambient kind");
}

bool is_in_relative_structure(const DSequence& s, const AddSubcategory& x,
                              const AmbientStructure& ambient) {
    if (!is_d_exact(s, ambient)) throw NotAdmissible("sequence is not d-exact in the ambient structure");
    const Morphism& deflation = s.maps.back();
    for (std::size_t j = 0; j < x.size(); ++j) {
        Mat h = hom_post_matrix(deflation, x.member(j));
        if (rank(h) != h.rows()) return false;
    }
    return true;
}

TResolution t_resolution(const Representation& c, const AddSubcategory& t, std::size_t d) {
    TResolution r;
    r.target = c;
    if (c.is_zero()) return r;
    Representation current = c;
    Morphism incl = Morphism::identity(c); // current -> previous term (or target)
    for (std::size_t i = 0;; ++i) {
        if (i > d) throw ResolutionTooLong("syzygy did not vanish within d+1 terms");
        Approximation a = minimize(right_approximation(t, current));
        Representation term = a.summands.empty() ? Representation::zero(c.algebra())
                                                 : direct_sum(a.summands).sum;
        Morphism am = a.summands.empty() ? Morphism::zero(term, current) : a.map;
        if (!am.is_surjective())
            throw ResolutionTooLong("approximation is not surjective onto the syzygy");
        r.terms.push_back(term);
        r.maps.push_back(i == 0 ? am : compose(incl, am));
        SubquotientPair k = kernel(am);
        if (k.object.is_zero()) break;
        current = k.object;
        incl = k.map;
    }
    return r;
}

DSequence splice(const TResolution& r, std::size_t d) {
    DSequence s;
    AlgebraPtr alg = r.target.algebra();
    Representation z = Representation::zero(alg);
    std::size_t n = r.terms.size();
    for (std::size_t k = n; k < d + 1; ++k) s.objects.push_back(z);
    for (std::size_t i = n; i-- > 0;) s.objects.push_back(r.terms[i]);
    s.objects.push_back(r.target);
    for (std::size_t k = 0; k + 1 < s.objects.size(); ++k) {
        std::size_t from_term = s.objects.size() - 2 - k; // homological degree of objects[k]
        if (from_term >= n)
            s.maps.push_back(Morphism::zero(s.objects[k], s.objects[k + 1]));
        else
            s.maps.push_back(r.maps[from_term]);
    }
    return s;
}

namespace {

struct ProjRes {
    std::vector<Representation> terms; // P_0, P_1, ...
    std::vector<Morphism> maps;        // maps[i]: P_{i+1} -> P_i
};

ProjRes projective_resolution(const Representation& m, std::size_t length) {
    std::vector<Representation> projs;
    for (std::size_t v = 0; v < m.algebra()->n_vertices(); ++v)
        projs.push_back(projective_module(m.algebra(), v));
    ProjRes r;
    Representation current = m;
    Morphism incl = Morphism::identity(m);
    for (std::size_t i = 0; i <= length; ++i) {
        Approximation a = minimize(right_approximation_list(projs, current));
        Representation term = a.summands.empty() ? Representation::zero(m.algebra())
                                                 : direct_sum(a.summands).sum;
        Morphism am = a.summands.empty() ? Morphism::zero(term, current) : a.map;
        r.terms.push_back(term);
        if (i > 0) r.maps.push_back(compose(incl, am));
        SubquotientPair k = kernel(am);
        if (k.object.is_zero()) break;
        current = k.object;
        incl = k.map;
    }
    return r;
}

} // namespace

std::size_t ext_dim(const Representation& m, const Representation& n, std::size_t i) {
    if (i == 0) return hom_dim(m, n);
    ProjRes r = projective_resolution(m, i + 1);
    if (i >= r.terms.size()) return 0;
    Mat in = hom_pre_matrix(r.maps[i - 1], n); // Hom(P_{i-1}, n) -> Hom(P_i, n)
    std::size_t dim_i = hom_dim(r.terms[i], n);
    std::size_t ker_out = dim_i;
    if (i < r.maps.size()) {
        Mat out = hom_pre_matrix(r.maps[i], n); // Hom(P_i, n) -> Hom(P_{i+1}, n)
        ker_out = out.cols() - rank(out);
    }
    return ker_out - rank(in);
}

DctReport certify_dct(const AddSubcategory& t, std::size_t d, const AmbientStructure& ambient) {
    if (ambient.kind != AmbientStructure::Kind::ModuleCategory)
        throw ShapeError("certify_dct expects the module-category ambient");
    DctReport rep;
    AlgebraPtr alg = t.catalog.algebra();
    for (std::size_t v = 0; v < alg->n_vertices(); ++v) {
        if (!t.contains(projective_module(alg, v))) {
            rep.has_projectives = false;
            rep.failures.push_back("missing projective at vertex " + std::to_string(v));
        }
        if (!t.contains(injective_module(alg, v))) {
            rep.has_injectives = false;
            rep.failures.push_back("missing injective at vertex " + std::to_string(v));
        }
    }
    for (std::size_t j = 0; j < t.size(); ++j)
        for (std::size_t k = 0; k < t.size(); ++k)
            for (std::size_t i = 1; i < d; ++i)
                if (ext_dim(t.member(j), t.member(k), i) != 0) {
                    rep.ext_vanishing = false;
                    rep.failures.push_back("Ext^" + std::to_string(i) + " nonzero between members " +
                                           std::to_string(j) + ", " + std::to_string(k));
                }
    for (std::size_t i = 0; i < t.catalog.size(); ++i) {
        try {
            (void)t_resolution(t.catalog[i], t, d);
        } catch (const ResolutionTooLong&) {
            rep.resolves_all = false;
            rep.failures.push_back("catalog object " + std::to_string(i) + " has no resolution");
        }
    }
    rep.ok = rep.has_projectives && rep.has_injectives && rep.ext_vanishing && rep.resolves_all;
    return rep;
}

namespace {

// All direct sums of one or two parts (with repetition) from the list.
std::vector<Representation> small_sums(const std::vector<Representation>& parts) {
    std::vector<Representation> sums;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        sums.push_back(parts[i]);
        for (std::size_t j = i; j < parts.size(); ++j)
            sums.push_back(direct_sum({parts[i], parts[j]}).sum);
    }
    return sums;
}

} // namespace

std::vector<DSequence> enumerate_sequences(const Catalog& catalog, const AmbientStructure& ambient) {
    std::vector<DSequence> out;
    const bool module_kind = ambient.kind == AmbientStructure::Kind::ModuleCategory;
    std::vector<Representation> parts =
        module_kind ? catalog.objects() : ambient.test_objects;

    // t-resolution splices with respect to the ambient's canonical generators
    std::vector<std::size_t> gen_indices;
    for (const auto& g : parts) gen_indices.push_back(catalog.find(g));
    AddSubcategory gen_sub =
        module_kind ? projective_subcategory(catalog)
                    : add_subcategory(catalog, gen_indices, "ambient generators");
    for (const auto& c : parts) {
        try {
            DSequence s = splice(t_resolution(c, gen_sub, ambient.d), ambient.d);
            if (is_d_exact(s, ambient)) out.push_back(std::move(s));
        } catch (const ResolutionTooLong&) {
        }
    }

    // d-kernel completions of deflations between small direct sums
    std::vector<Representation> sums = small_sums(parts);
    Field fd = catalog.algebra()->field();
    for (const auto& b : sums)
        for (const auto& c : sums) {
            auto basis = hom_basis(b, c);
            std::vector<Morphism> candidates = basis;
            for (std::size_t i = 0; i < basis.size(); ++i)
                for (std::size_t j = i + 1; j < basis.size(); ++j) {
                    candidates.push_back(basis[i] + basis[j]);
                    candidates.push_back(basis[i] + basis[j].scaled(-Scalar::one(fd)));
                }
            for (const auto& f : candidates) {
                if (!yoneda_epi(f, ambient)) continue;
                try {
                    DSequence s = d_kernel(f, ambient);
                    if (is_d_exact(s, ambient)) out.push_back(std::move(s));
                } catch (const NotInSubcategory&) {
                } catch (const ApproximationNotMonic&) {
                } catch (const LiftFailed&) {
                }
            }
        }

    // split paddings
    for (const auto& a : parts)
        for (const auto& b : parts) out.push_back(split_sequence(a, b, ambient.d));
    return out;
}

std::vector<DSequence> enumerate_left_sequences(const Catalog& catalog,
                                                const AmbientStructure& ambient) {
    std::vector<DSequence> out;
    std::vector<Representation> parts = ambient.kind == AmbientStructure::Kind::ModuleCategory
                                            ? catalog.objects()
                                            : ambient.test_objects;
    std::vector<Representation> sums = small_sums(parts);
    Field fd = catalog.algebra()->field();
    for (const auto& b : sums)
        for (const auto& c : sums) {
            auto basis = hom_basis(b, c);
            std::vector<Morphism> candidates = basis;
            for (std::size_t i = 0; i < basis.size(); ++i)
                for (std::size_t j = i + 1; j < basis.size(); ++j) {
                    candidates.push_back(basis[i] + basis[j]);
                    candidates.push_back(basis[i] + basis[j].scaled(-Scalar::one(fd)));
                }
            for (const auto& f : candidates) {
                try {
                    out.push_back(d_kernel(f, ambient));
                } catch (const NotInSubcategory&) {
                } catch (const ApproximationNotMonic&) {
                } catch (const LiftFailed&) {
                }
            }
        }
    return out;
}

} // namespace dexact
