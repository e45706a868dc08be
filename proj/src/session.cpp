#include "dexact/session.hpp"

namespace dexact {

const AddSubcategory& Session::subcat(const std::string& name) const {
    auto it = subcats.find(name);
    if (it == subcats.end()) throw ParseError(0, "unknown subcategory '" + name + "'");
    return it->second;
}

const Representation& object_by_dims(const Session& s, const std::vector<std::size_t>& dims) {
    const Representation* found = nullptr;
    for (const auto& o : s.catalog.objects()) {
        if (o.dims() != dims) continue;
        if (found) throw ParseError(0, "dimension vector selects more than one catalog object");
        found = &o;
    }
    if (!found) throw ParseError(0, "no catalog object with the requested dimension vector");
    return *found;
}

Session build_session(const AlgFile& f) {
    Session s;
    s.config = f;
    std::vector<Relation> rels;
    for (const auto& raw : f.relations) {
        Relation r;
        for (const auto& [c, p] : raw.terms) r.terms.emplace_back(Scalar(f.field, c), p);
        r.validate(f.quiver);
        rels.push_back(std::move(r));
    }
    s.algebra = build_algebra_ptr(f.quiver, rels, f.field);
    s.catalog = build_catalog(s.algebra, CatalogStrategy::Closure, {}, f.dim_cap);
    for (const auto& spec : f.subcats) {
        std::vector<std::size_t> members;
        for (const auto& dims : spec.dim_selectors) {
            std::size_t idx = s.catalog.size();
            for (std::size_t i = 0; i < s.catalog.size(); ++i)
                if (s.catalog[i].dims() == dims) {
                    if (idx != s.catalog.size())
                        throw ParseError(0, "ambiguous dimension selector in subcat '" + spec.name + "'");
                    idx = i;
                }
            if (idx == s.catalog.size())
                throw ParseError(0, "no catalog object matches a selector in subcat '" + spec.name + "'");
            members.push_back(idx);
        }
        s.subcats.emplace(spec.name, add_subcategory(s.catalog, std::move(members), spec.name));
    }
    if (f.ambient.kind == "module") {
        s.ambient = AmbientStructure::module_category(s.algebra);
    } else {
        const AddSubcategory& t = s.subcat(f.ambient.t_name);
        std::vector<Representation> t_members;
        for (std::size_t j = 0; j < t.size(); ++j) t_members.push_back(t.member(j));
        AmbientStructure dct = AmbientStructure::d_cluster_tilting(s.algebra, t_members, f.d);
        if (f.ambient.kind == "dct") {
            s.ambient = dct;
        } else {
            const AddSubcategory& u = s.subcat(f.ambient.u_name);
            std::vector<Representation> u_members;
            for (std::size_t j = 0; j < u.size(); ++j) u_members.push_back(u.member(j));
            s.ambient = AmbientStructure::d_torsion_class(u_members, dct);
        }
    }
    return s;
}

} // namespace dexact
