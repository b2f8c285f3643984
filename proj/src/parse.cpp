#include "pencilgit/parse.hpp"

#include <algorithm>

namespace pencilgit {

namespace {

std::string strip(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

std::vector<Fel> parse_bracket_list(const FieldPtr& k, const std::string& text,
                                    std::size_t expect) {
    require(text.size() >= 2 && text.front() == '[' && text.back() == ']', "BadPencilSyntax",
            "expected [..]: " + text);
    std::vector<Fel> out;
    std::string cur;
    for (std::size_t i = 1; i + 1 < text.size(); ++i) {
        if (text[i] == ',') {
            out.push_back(k->parse_element(cur));
            cur.clear();
        } else {
            cur += text[i];
        }
    }
    out.push_back(k->parse_element(cur));
    require(out.size() == expect, "BadPencilSyntax",
            "expected " + std::to_string(expect) + " entries: " + text);
    return out;
}

} // namespace

WallParam parse_wall_param(const FieldPtr& k, const std::string& text) {
    std::string t = strip(text);
    if (t == "inf" || t == "infinity" || t == "oo") return WallParam::infinity(k);
    return WallParam::of(k->parse_element(t));
}

Pencil parse_pencil(const FieldPtr& k, const std::string& text) {
    std::string t = strip(text);
    if (t.rfind("wall:", 0) == 0) return wall_pencil(parse_wall_param(k, t.substr(5)));
    if (t.rfind("rep:", 0) == 0) return atlas_representative(orbit_kind_from_name(t.substr(4)), k);
    if (t.rfind("plucker=", 0) == 0) {
        auto v = parse_bracket_list(k, t.substr(8), 6);
        std::array<Fel, 6> p;
        std::copy_n(v.begin(), 6, p.begin());
        return pencil_from_plucker(k, p);
    }
    auto semi = t.find(';');
    require(semi != std::string::npos && t.rfind("f=", 0) == 0 &&
                t.compare(semi + 1, 2, "g=") == 0,
            "BadPencilSyntax", "expected f=[..];g=[..]: " + text);
    auto fv = parse_bracket_list(k, t.substr(2, semi - 2), 4);
    auto gv = parse_bracket_list(k, t.substr(semi + 3), 4);
    return Pencil(BinaryForm(k, fv), BinaryForm(k, gv));
}

} // namespace pencilgit
