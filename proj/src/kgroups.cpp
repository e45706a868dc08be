#include "dexact/kgroups.hpp"

#include <random>
#include <sstream>

namespace dexact {

std::vector<mpz_class> split_class(const Catalog& catalog, const Representation& m) {
    std::vector<mpz_class> v(catalog.size(), 0);
    for (const auto& s : decompose(m)) v[catalog.find(s.object)] += s.multiplicity;
    return v;
}

std::vector<mpz_class> index_dct(const Representation& c, const AddSubcategory& t, std::size_t d) {
    TResolution r = t_resolution(c, t, d);
    std::vector<mpz_class> v(t.size(), 0);
    mpz_class sign = 1;
    for (const auto& term : r.terms) {
        for (const auto& s : decompose(term)) {
            std::size_t ci = t.catalog.find(s.object);
            bool found = false;
            for (std::size_t j = 0; j < t.size(); ++j)
                if (t.members[j] == ci) {
                    v[j] += sign * mpz_class(static_cast<unsigned long>(s.multiplicity));
                    found = true;
                    break;
                }
            if (!found) throw UnknownSummand("resolution term outside the subcategory");
        }
        sign = -sign;
    }
    return v;
}

std::vector<mpz_class> alternating_split_sum(const Catalog& catalog, const DSequence& s) {
    std::vector<mpz_class> v(catalog.size(), 0);
    std::size_t top = s.objects.size() - 1;
    for (std::size_t k = 0; k < s.objects.size(); ++k) {
        std::size_t i = top - k; // paper-style index of objects[k]
        mpz_class sign = (i % 2 == 0) ? 1 : -1;
        auto cls = split_class(catalog, s.objects[k]);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += sign * cls[j];
    }
    return v;
}

RelativeK0 build_relative_k0(const AddSubcategory& x, const AmbientStructure& ambient,
                             const std::vector<DSequence>& family) {
    RelativeK0 k;
    k.catalog = x.catalog;
    k.x = x;
    std::vector<std::vector<mpz_class>> rows;
    for (const auto& s : family) {
        if (!is_d_exact(s, ambient)) continue;
        if (!is_in_relative_structure(s, x, ambient)) continue;
        rows.push_back(alternating_split_sum(x.catalog, s));
        k.provenance.push_back(s);
    }
    IntMat rel(rows.size(), x.catalog.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < x.catalog.size(); ++j) rel.at(i, j) = rows[i][j];
    k.relations = rel;
    k.presentation = K0Presentation(rel, x.catalog.size());
    return k;
}

std::vector<std::pair<FPPresentation, FPPresentation>>
schanuel_pairs(const Catalog& catalog, std::size_t count, unsigned seed) {
    std::vector<FPPresentation> base;
    for (const auto& a : catalog.objects())
        for (const auto& b : catalog.objects())
            for (const auto& f : hom_basis(a, b)) base.push_back(FPPresentation{f});
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_obj(0, catalog.size() - 1);
    std::uniform_int_distribution<int> pick_kind(0, 1);
    std::vector<std::pair<FPPresentation, FPPresentation>> out;
    for (std::size_t n = 0; out.size() < count; ++n) {
        const FPPresentation& p = base[n % base.size()];
        const Representation& extra = catalog[pick_obj(rng)];
        if (pick_kind(rng) == 0) {
            // split identity summand on both sides
            DirectSum s1 = direct_sum({p.f.source(), extra});
            DirectSum s0 = direct_sum({p.f.target(), extra});
            Morphism q = compose(s0.injections[0], compose(p.f, s1.projections[0])) +
                         compose(s0.injections[1], s1.projections[1]);
            out.emplace_back(p, FPPresentation{q});
        } else {
            // redundant source column factoring through the presenting map
            auto psi = hom_basis(extra, p.f.source());
            DirectSum s1 = direct_sum({p.f.source(), extra});
            Morphism col = psi.empty() ? Morphism::zero(extra, p.f.target())
                                       : compose(p.f, psi[n % psi.size()]);
            Morphism q = compose(p.f, s1.projections[0]) + compose(col, s1.projections[1]);
            out.emplace_back(p, FPPresentation{q});
        }
    }
    return out;
}

bool IndexValue::is_zero() const {
    for (const auto& c : coset)
        if (c != 0) return false;
    return true;
}

std::string IndexValue::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coset.size(); ++i) {
        if (i) os << ", ";
        os << coset[i].get_str();
    }
    os << "]";
    return os.str();
}

IndexValue coset_of(const RelativeK0& k, const std::vector<mpz_class>& split_vector) {
    return IndexValue{k.presentation.canon(split_vector)};
}

IndexValue class_in(const RelativeK0& k, const Representation& m) {
    return coset_of(k, split_class(k.catalog, m));
}

std::vector<mpz_class> theta_C(const FPPresentation& p, const Catalog& catalog,
                               const AmbientStructure& ambient) {
    return alternating_split_sum(catalog, functor_resolution(p, ambient));
}

IndexValue theta_X(const FPPresentation& p, const RelativeK0& k, const AmbientStructure& ambient) {
    return coset_of(k, theta_C(p, k.catalog, ambient));
}

namespace {

std::string join_dims(const std::vector<std::size_t>& dims) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) os << ",";
        os << dims[i];
    }
    os << ")";
    return os.str();
}

VerifyReport equality_report(const char* check, const DSequence& s, const RelativeK0& k,
                             const AmbientStructure& ambient) {
    VerifyReport rep;
    rep.check = check;
    FPPresentation p{s.maps.back()};
    IndexValue lhs = theta_X(p, k, ambient);
    IndexValue rhs = coset_of(k, alternating_split_sum(k.catalog, s));
    RestrictedFunctor err = restrict_functor(p, k.x);
    rep.ok = lhs == rhs;
    rep.lines.push_back("sequence " + s.describe());
    rep.lines.push_back("lhs " + lhs.str());
    rep.lines.push_back("rhs " + rhs.str());
    rep.lines.push_back("error_term_dims " + join_dims(err.value_dims));
    return rep;
}

} // namespace

VerifyReport verify_theorem_A(const DSequence& s, const RelativeK0& k,
                              const AmbientStructure& ambient) {
    if (!is_d_exact(s, ambient)) {
        VerifyReport rep;
        rep.check = "theorem-a";
        rep.ok = false;
        rep.lines.push_back("sequence is not d-exact in the ambient structure");
        return rep;
    }
    return equality_report("theorem-a", s, k, ambient);
}

VerifyReport verify_prop13_property(const DSequence& s, const RelativeK0& k,
                                    const AmbientStructure& ambient) {
    if (!is_left_d_exact(s, ambient)) {
        VerifyReport rep;
        rep.check = "prop13";
        rep.ok = false;
        rep.lines.push_back("sequence is not left d-exact in the ambient structure");
        return rep;
    }
    return equality_report("prop13", s, k, ambient);
}

VerifyReport verify_schanuel(const FPPresentation& p, const FPPresentation& q,
                             const Catalog& catalog, const AmbientStructure& ambient) {
    VerifyReport rep;
    rep.check = "schanuel";
    AddSubcategory full = full_subcategory(catalog);
    auto iso = functor_iso(restrict_functor(p, full), restrict_functor(q, full));
    if (!iso) {
        rep.ok = false;
        rep.lines.push_back("restricted cokernels are not isomorphic (precondition fails)");
        return rep;
    }
    auto tp = theta_C(p, catalog, ambient);
    auto tq = theta_C(q, catalog, ambient);
    rep.ok = tp == tq;
    rep.lines.push_back("theta(p) " + IndexValue{tp}.str());
    rep.lines.push_back("theta(q) " + IndexValue{tq}.str());
    return rep;
}

VerifyReport verify_theorem_1_1(const AddSubcategory& t, const AmbientStructure& ambient,
                                const RelativeK0& k) {
    VerifyReport rep;
    rep.check = "thm11";
    std::size_t d = ambient.d;
    // (a) index_dct kills every enumerated relation
    for (const auto& s : k.provenance) {
        std::vector<mpz_class> acc(t.size(), 0);
        std::size_t top = s.objects.size() - 1;
        for (std::size_t pos = 0; pos < s.objects.size(); ++pos) {
            std::size_t i = top - pos;
            mpz_class sign = (i % 2 == 0) ? 1 : -1;
            auto ind = index_dct(s.objects[pos], t, d);
            for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += sign * ind[j];
        }
        bool zero = true;
        for (const auto& c : acc)
            if (c != 0) zero = false;
        if (!zero) {
            rep.ok = false;
            rep.lines.push_back("relation not killed by index: " + s.describe());
        }
    }
    // (b) members map to basis vectors
    for (std::size_t j = 0; j < t.size(); ++j) {
        auto v = index_dct(t.member(j), t, d);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != (i == j ? 1 : 0)) {
                rep.ok = false;
                rep.lines.push_back("member " + std::to_string(j) + " is not a basis vector");
                break;
            }
    }
    // (c) rank and torsion of the presentation
    if (k.presentation.free_rank() != t.size() || !k.presentation.torsion().empty()) {
        rep.ok = false;
        rep.lines.push_back("presentation rank/torsion mismatch: rank " +
                            std::to_string(k.presentation.free_rank()));
    }
    rep.lines.push_back(rep.ok ? "consistent with isomorphism relative to the enumerated family"
                               : "inconsistent");
    return rep;
}

} // namespace dexact
