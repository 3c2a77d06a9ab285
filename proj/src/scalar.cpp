#include "hopf/scalar.hpp"

namespace hopf {

std::string Scalar::str() const {
    if (p_ == 0) {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }
    return v_.get_num().get_str();
}

Scalar Scalar::parse(const std::string &text, std::uint32_t p) {
    if (text.empty()) throw ParseError("empty scalar literal");
    auto check_int = [&](const std::string &s) {
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw ParseError("bad scalar literal: " + text);
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw ParseError("bad scalar literal: " + text);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        check_int(text);
        Scalar s;
        s.v_ = mpz_class(text);
        s.p_ = p;
        s.reduce();
        return s;
    }
    if (p != 0) throw ParseError("fraction literal in a prime field: " + text);
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    mpz_class d(den);
    if (d == 0) throw ParseError("zero denominator: " + text);
    Scalar s;
    s.v_ = mpq_class(mpz_class(num), d);
    s.v_.canonicalize();
    return s;
}

}  // namespace hopf
