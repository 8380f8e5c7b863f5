#include "graphspark/rational.hpp"

#include <ostream>

namespace graphspark {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    // GMP rejects a leading '+', so normalize it away after validation.
    auto checked = [&](std::string s) {
        if (!s.empty() && s[0] == '+') s.erase(0, 1);
        bool ok = !s.empty();
        for (std::size_t i = (ok && s[0] == '-') ? 1 : 0; ok && i < s.size(); ++i)
            ok = s[i] >= '0' && s[i] <= '9';
        if (!ok || s == "-") throw ParseError("invalid rational literal '" + text + "'");
        return s;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(mpq_class(checked(text), 10));
    mpz_class d(checked(text.substr(slash + 1)), 10);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    mpq_class q(mpz_class(checked(text.substr(0, slash)), 10), d);
    q.canonicalize();
    return Rational(q);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.q_.get_str(); }

} // namespace graphspark
