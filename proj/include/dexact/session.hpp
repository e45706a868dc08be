#pragma once

#include <map>

#include "dexact/alg_parser.hpp"
#include "dexact/kgroups.hpp"

namespace dexact {

/// Everything the CLI commands need, built once from a parsed .alg file.
struct Session {
    AlgFile config;
    AlgebraPtr algebra;
    Catalog catalog;
    AmbientStructure ambient;
    std::map<std::string, AddSubcategory> subcats;

    const AddSubcategory& subcat(const std::string& name) const;
};

Session build_session(const AlgFile& f);

/// The catalog object with the given dimension vector (must be unique).
const Representation& object_by_dims(const Session& s, const std::vector<std::size_t>& dims);

} // namespace dexact
