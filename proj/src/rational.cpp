#include "edgeshadow/rational.hpp"

#include <cctype>
#include <ostream>

namespace edgeshadow {

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&](const char* expected) { return ParseError(1, 1, std::string(expected) + " in '" + std::string(text) + "'"); };
    if (text.empty()) throw bad("rational");
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '-' || text[i] == '+') {
        negative = text[i] == '-';
        ++i;
    }
    std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) throw bad("digit");
    mpz_class num(std::string(text.substr(num_begin, i - num_begin)), 10);
    if (negative) num = -num;
    mpz_class den(1);
    if (i < text.size()) {
        if (text[i] != '/') throw bad("'/' or end");
        ++i;
        std::size_t den_begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin || i != text.size()) throw bad("denominator digits");
        den = mpz_class(std::string(text.substr(den_begin)), 10);
        if (den == 0) throw DivisionByZero();
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace edgeshadow
