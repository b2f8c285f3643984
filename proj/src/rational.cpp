#include "pencilgit/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace pencilgit {

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

Int mod_inverse(const Int& a, const Int& m) {
    // extended euclid
    Int r0 = mod_floor(a, m), r1 = m;
    Int s0 = 1, s1 = 0;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        Int s2 = s0 - q * s1;
        s0 = s1; s1 = s2;
    }
    // r0 = gcd, s0 = inverse candidate
    return mod_floor(s0, m);
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::int64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::optional<Int> perfect_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int s = boost::multiprecision::sqrt(n);
    if (s * s == n) return s;
    return std::nullopt;
}

std::optional<Rat> rational_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    auto sn = perfect_sqrt(num(r));
    if (!sn) return std::nullopt;
    auto sd = perfect_sqrt(den(r));
    if (!sd) return std::nullopt;
    return Rat(*sn, *sd);
}

std::string rat_str(const Rat& r) {
    if (is_integer(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

std::optional<Rat> parse_rat(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t slash = text.find('/');
    auto parse_int = [](const std::string& s) -> std::optional<Int> {
        if (s.empty()) return std::nullopt;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return std::nullopt;
        for (std::size_t j = i; j < s.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(s[j]))) return std::nullopt;
        return Int(s);
    };
    if (slash == std::string::npos) {
        auto n = parse_int(text);
        if (!n) return std::nullopt;
        return Rat(*n);
    }
    auto n = parse_int(text.substr(0, slash));
    auto d = parse_int(text.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return Rat(*n, *d);
}

} // namespace pencilgit
