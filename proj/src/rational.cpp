#include "polyhodge/rational.hpp"

#include <stdexcept>

#include "polyhodge/errors.hpp"

namespace polyhodge {

Rational rational_from_string(const std::string& text) {
    std::string s = text;
    // strip whitespace
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    if (s.empty()) throw Error("empty rational literal");

    auto dot_pos = s.find('.');
    if (dot_pos != std::string::npos) {
        // exact decimal: digits after the dot become a power-of-ten denominator
        std::string head = s.substr(0, dot_pos);
        std::string tail = s.substr(dot_pos + 1);
        bool negative = !head.empty() && head[0] == '-';
        if (!head.empty() && (head[0] == '-' || head[0] == '+')) head.erase(head.begin());
        if (head.empty()) head = "0";
        for (char c : head + tail)
            if (c < '0' || c > '9') throw Error("bad rational literal: " + text);
        Integer num(head + tail, 10);  // explicit base: leading zeros are not octal
        Integer den = 1;
        for (size_t i = 0; i < tail.size(); ++i) den *= 10;
        Rational r(num, den);
        r.canonicalize();
        return negative ? Rational(-r) : r;
    }

    try {
        Rational r(s);
        r.canonicalize();
        if (r.get_den() <= 0) throw Error("nonpositive denominator: " + text);
        return r;
    } catch (const std::invalid_argument&) {
        throw Error("bad rational literal: " + text);
    }
}

std::string rational_to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace polyhodge
