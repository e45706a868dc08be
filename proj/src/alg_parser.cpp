#include "dexact/alg_parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace dexact {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool is_ident(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

long to_long(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + s + "'");
    }
}

// "b*a" composes right to left: a is applied first.
Path parse_path(const Quiver& q, const std::string& text, int line) {
    std::vector<std::string> names;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, '*')) {
        tok = strip(tok);
        if (!is_ident(tok)) throw ParseError(line, "bad arrow name '" + tok + "'");
        names.push_back(tok);
    }
    if (names.empty()) throw ParseError(line, "empty path");
    Path p;
    bool first = true;
    for (auto it = names.rbegin(); it != names.rend(); ++it) {
        std::size_t id;
        try {
            id = q.arrow_by_name(*it);
        } catch (const std::exception&) {
            throw ParseError(line, "unknown arrow '" + *it + "'");
        }
        const Arrow& a = q.arrows[id];
        if (first) {
            p.source = a.source;
            first = false;
        } else if (p.target != a.source) {
            throw ParseError(line, "path is not composable at '" + *it + "'");
        }
        p.target = a.target;
        p.arrows.push_back(id);
    }
    return p;
}

// term := (coefficient '*')? path; coefficient := int | int/int
std::pair<mpq_class, Path> parse_term(const Quiver& q, const std::string& text, int line) {
    std::string t = strip(text);
    if (t.empty()) throw ParseError(line, "empty relation term");
    mpq_class coef = 1;
    if (!std::isalpha(static_cast<unsigned char>(t[0])) && t[0] != '_') {
        std::size_t star = t.find('*');
        if (star == std::string::npos) throw ParseError(line, "coefficient without a path");
        std::string c = strip(t.substr(0, star));
        std::size_t slash = c.find('/');
        if (slash == std::string::npos) {
            coef = to_long(c, line);
        } else {
            long num = to_long(strip(c.substr(0, slash)), line);
            long den = to_long(strip(c.substr(slash + 1)), line);
            if (den == 0) throw ParseError(line, "zero denominator");
            coef = mpq_class(num, den);
            coef.canonicalize();
        }
        t = strip(t.substr(star + 1));
    }
    return {coef, parse_path(q, t, line)};
}

RawRelation parse_relation(const Quiver& q, const std::string& text, int line) {
    std::size_t eq = text.find('=');
    if (eq == std::string::npos) throw ParseError(line, "relation needs '= 0'");
    if (strip(text.substr(eq + 1)) != "0") throw ParseError(line, "relations must equal 0");
    std::string lhs = strip(text.substr(0, eq));
    RawRelation rel;
    std::size_t pos = 0;
    mpq_class sign = 1;
    while (pos < lhs.size()) {
        std::size_t next = pos;
        // find the next top-level +/- (never inside a term: terms have no signs)
        for (next = pos; next < lhs.size(); ++next)
            if ((lhs[next] == '+' || lhs[next] == '-') && next != pos) break;
        std::string term = strip(lhs.substr(pos, next - pos));
        while (!term.empty() && (term[0] == '+' || term[0] == '-')) {
            if (term[0] == '-') sign = -sign;
            term = strip(term.substr(1));
        }
        if (term.empty()) throw ParseError(line, "empty relation term");
        auto [c, p] = parse_term(q, term, line);
        rel.terms.emplace_back(sign * c, p);
        if (next < lhs.size()) sign = (lhs[next] == '-') ? -1 : 1;
        pos = next + 1;
    }
    if (rel.terms.empty()) throw ParseError(line, "empty relation");
    return rel;
}

std::size_t parse_vertex(const Quiver& q, const std::string& s, int line) {
    long v = to_long(s, line);
    if (v < 1 || static_cast<std::size_t>(v) > q.n_vertices)
        throw ParseError(line, "vertex " + s + " out of range");
    return static_cast<std::size_t>(v - 1);
}

std::vector<std::size_t> parse_dim_vector(const std::string& s, int line) {
    std::string t = strip(s);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw ParseError(line, "dimension vector needs parentheses");
    std::vector<std::size_t> dims;
    std::stringstream ss(t.substr(1, t.size() - 2));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        long v = to_long(strip(tok), line);
        if (v < 0) throw ParseError(line, "negative dimension");
        dims.push_back(static_cast<std::size_t>(v));
    }
    return dims;
}

} // namespace

AlgFile parse_alg_text(const std::string& text) {
    AlgFile f;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    std::string section;
    SubcatSpec* current_subcat = nullptr;
    bool have_quiver = false;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = strip(raw.substr(0, raw.find('#')));
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') throw ParseError(line, "unterminated section header");
            std::string head = strip(s.substr(1, s.size() - 2));
            if (head.rfind("subcat ", 0) == 0) {
                f.subcats.push_back(SubcatSpec{strip(head.substr(7)), {}});
                if (!is_ident(f.subcats.back().name)) throw ParseError(line, "bad subcategory name");
                current_subcat = &f.subcats.back();
                section = "subcat";
            } else if (head == "quiver" || head == "relations" || head == "field" || head == "config") {
                section = head;
                current_subcat = nullptr;
            } else {
                throw ParseError(line, "unknown section '" + head + "'");
            }
            continue;
        }
        if (section == "quiver") {
            if (s.rfind("vertices ", 0) == 0) {
                long n = to_long(strip(s.substr(9)), line);
                if (n < 1) throw ParseError(line, "need at least one vertex");
                f.quiver.n_vertices = static_cast<std::size_t>(n);
                have_quiver = true;
            } else if (s.rfind("arrow ", 0) == 0) {
                if (!have_quiver) throw ParseError(line, "'vertices' must come before arrows");
                std::string rest = strip(s.substr(6));
                std::size_t colon = rest.find(':');
                if (colon == std::string::npos) throw ParseError(line, "arrow needs 'name: i -> j'");
                std::string name = strip(rest.substr(0, colon));
                if (!is_ident(name)) throw ParseError(line, "bad arrow name");
                std::string ends = strip(rest.substr(colon + 1));
                std::size_t sep = ends.find("->");
                if (sep == std::string::npos) throw ParseError(line, "arrow needs '->'");
                std::size_t src = parse_vertex(f.quiver, strip(ends.substr(0, sep)), line);
                std::size_t tgt = parse_vertex(f.quiver, strip(ends.substr(sep + 2)), line);
                f.quiver.arrows.push_back(Arrow{f.quiver.arrows.size(), src, tgt, name});
            } else {
                throw ParseError(line, "unknown quiver line");
            }
        } else if (section == "relations") {
            f.relations.push_back(parse_relation(f.quiver, s, line));
        } else if (section == "field") {
            if (s == "rational") {
                f.field = Field::rational();
            } else if (s.rfind("prime ", 0) == 0) {
                long p = to_long(strip(s.substr(6)), line);
                try {
                    f.field = Field::prime(static_cast<unsigned long>(p));
                } catch (const std::exception& e) {
                    throw ParseError(line, e.what());
                }
            } else {
                throw ParseError(line, "field must be 'rational' or 'prime P'");
            }
        } else if (section == "subcat") {
            if (s.rfind("dim ", 0) == 0) {
                current_subcat->dim_selectors.push_back(parse_dim_vector(s.substr(4), line));
            } else {
                throw ParseError(line, "unknown subcategory selector");
            }
        } else if (section == "config") {
            std::size_t eq = s.find('=');
            if (eq == std::string::npos) throw ParseError(line, "config line needs 'key = value'");
            std::string key = strip(s.substr(0, eq));
            std::string val = strip(s.substr(eq + 1));
            if (key == "d") {
                long d = to_long(val, line);
                if (d < 1) throw ParseError(line, "d must be positive");
                f.d = static_cast<std::size_t>(d);
            } else if (key == "ambient") {
                std::stringstream ss(val);
                std::string kind, n1, n2;
                ss >> kind >> n1 >> n2;
                if (kind == "module") {
                    f.ambient = AmbientSpec{"module", "", ""};
                } else if (kind == "dct") {
                    if (n1.empty()) throw ParseError(line, "'dct' needs a subcategory name");
                    f.ambient = AmbientSpec{"dct", n1, ""};
                } else if (kind == "torsion") {
                    if (n1.empty() || n2.empty())
                        throw ParseError(line, "'torsion' needs class and tilting names");
                    f.ambient = AmbientSpec{"torsion", n2, n1};
                } else {
                    throw ParseError(line, "unknown ambient kind '" + kind + "'");
                }
            } else if (key == "dim_cap") {
                f.dim_cap = static_cast<std::size_t>(to_long(val, line));
            } else if (key == "seed") {
                f.seed = static_cast<unsigned>(to_long(val, line));
            } else {
                throw ParseError(line, "unknown config key '" + key + "'");
            }
        } else {
            throw ParseError(line, "content outside any section");
        }
    }
    if (!have_quiver) throw ParseError(line, "missing [quiver] section");
    try {
        f.quiver.validate();
    } catch (const std::exception& e) {
        throw ParseError(line, e.what());
    }
    return f;
}

AlgFile parse_alg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_alg_text(ss.str());
}

} // namespace dexact
