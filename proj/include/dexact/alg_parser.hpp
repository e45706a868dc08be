#pragma once

#include <string>
#include <vector>

#include "dexact/algebra.hpp"

namespace dexact {

/// Parsed .alg input. Relations are kept field-free (exact rational
/// coefficients) until the session instantiates them over the chosen field.
struct RawRelation {
    std::vector<std::pair<mpq_class, Path>> terms;
};

struct SubcatSpec {
    std::string name;
    std::vector<std::vector<std::size_t>> dim_selectors;
};

struct AmbientSpec {
    std::string kind = "module"; // module | dct | torsion
    std::string t_name;          // dct: the tilting subcategory
    std::string u_name;          // torsion: the torsion class (inside dct t_name)
};

struct AlgFile {
    Quiver quiver;
    std::vector<RawRelation> relations;
    Field field = Field::rational();
    std::vector<SubcatSpec> subcats;
    std::size_t d = 1;
    AmbientSpec ambient;
    std::size_t dim_cap = 30;
    unsigned seed = 12345;
};

AlgFile parse_alg_text(const std::string& text);
AlgFile parse_alg_file(const std::string& path);

} // namespace dexact
