#include "uryson/rational.hpp"

#include <cctype>
#include <ostream>

namespace uryson {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw std::invalid_argument("Rational: bad character in '" + text + "'");
    }
    try {
        mpq_class v(text, 10);
        if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
        v.canonicalize();
        return Rational(std::move(v));
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace uryson
