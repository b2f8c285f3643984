#include "pencilgit/projective.hpp"

namespace pencilgit {

ProjPoint::ProjPoint(FieldPtr k, std::vector<Fel> coords) : k_(std::move(k)), x_(std::move(coords)) {
    require(!x_.empty(), "ZeroVector", "projective point needs coordinates");
    std::size_t lead = x_.size();
    for (std::size_t i = 0; i < x_.size(); ++i) {
        require(x_[i].field() && x_[i].field()->same(*k_), "FieldMismatch", "coordinate field");
        if (!x_[i].is_zero() && lead == x_.size()) lead = i;
    }
    require(lead < x_.size(), "ZeroVector", "all projective coordinates vanish");
    Fel s = x_[lead].inverse();
    for (auto& c : x_) c = c * s;
}

bool ProjPoint::operator==(const ProjPoint& o) const {
    if (x_.size() != o.x_.size()) return false;
    for (std::size_t i = 0; i < x_.size(); ++i)
        if (x_[i] != o.x_[i]) return false;
    return true;
}

bool ProjPoint::less(const ProjPoint& o) const {
    require(x_.size() == o.x_.size(), "DegreeMismatch", "comparing points of different spaces");
    for (std::size_t i = 0; i < x_.size(); ++i) {
        if (x_[i] != o.x_[i]) return x_[i].less(o.x_[i]);
    }
    return false;
}

std::string ProjPoint::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < x_.size(); ++i) {
        if (i) s += ":";
        s += x_[i].str();
    }
    return s + ")";
}

std::vector<Rat> ProjPoint::primitive_integer() const {
    require(k_->characteristic() == 0 && !k_->is_extension(), "FieldMismatch",
            "integer-primitive form needs rational coordinates");
    Int l = 1;
    for (auto& c : x_) l = l / gcd_int(l, den(c.a())) * den(c.a());
    Int g = 0;
    std::vector<Rat> out;
    out.reserve(x_.size());
    for (auto& c : x_) {
        Rat v = c.a() * Rat(l);
        out.push_back(v);
        g = gcd_int(g, num(v));
    }
    if (g > 1)
        for (auto& v : out) v /= Rat(g);
    return out;
}

} // namespace pencilgit
