#include "ryser/rational.hpp"

#include <cctype>

namespace ryser {

Rat parse_rat(const std::string& tok) {
    if (tok.empty()) throw input_error("empty rational token");
    for (char c : tok) {
        if (!std::isdigit((unsigned char)c) && c != '/' && c != '-' && c != '+')
            throw input_error("bad rational token: " + tok);
    }
    Rat q;
    if (q.set_str(tok, 10) != 0) throw input_error("bad rational token: " + tok);
    if (q.get_den() == 0) throw input_error("zero denominator: " + tok);
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rat_decimal(const Rat& q, int digits) {
    // round-half-away rendering of |q| with the requested fractional digits
    bool neg = q < 0;
    Rat a = neg ? Rat(-q) : q;
    Int scale = ipow(Int(10), digits);
    Int scaled = (a.get_num() * scale * 2 + a.get_den()) / (a.get_den() * 2);
    Int ip = scaled / scale, fp = scaled % scale;
    std::string frac = fp.get_str();
    frac.insert(0, digits - frac.size(), '0');
    return (neg ? "-" : "") + ip.get_str() + "." + frac;
}

}  // namespace ryser
