#include "blocktf/rational.hpp"

#include <cctype>

namespace blocktf {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rat rat_from_string(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s = s.substr(1);
    }
    if (s.empty()) throw Error("empty rational literal");

    Rat value;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos) {
        std::string p = s.substr(0, slash);
        std::string q = s.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q)) throw Error("malformed rational literal '" + text + "'");
        Int pi(p), qi(q);
        if (sgn(qi) == 0) throw MathError("rational with zero denominator: '" + text + "'");
        value = Rat(pi, qi);
        value.canonicalize();
    } else if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot);
        std::string fp = s.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (!all_digits(ip) || (!fp.empty() && !all_digits(fp))) throw Error("malformed rational literal '" + text + "'");
        Int scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        Int num = Int(ip) * scale + (fp.empty() ? Int(0) : Int(fp));
        value = Rat(num, scale);
        value.canonicalize();
    } else {
        if (!all_digits(s)) throw Error("malformed rational literal '" + text + "'");
        value = Rat(Int(s));
    }
    return negative ? Rat(-value) : value;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

} // namespace blocktf
