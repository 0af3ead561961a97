#include "exl/scalar.hpp"

#include "exl/error.hpp"

#include <cctype>

namespace exl {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Scalar parse_scalar(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+'))
        body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw Error("malformed rational \"" + std::string(text) + "\" (expected p or p/q)");

    mpz_class q(std::string(den), 10);
    if (q == 0)
        throw Error("zero denominator in \"" + std::string(text) + "\"");
    mpz_class p(std::string(num), 10);
    if (text.front() == '-')
        p = -p;
    Scalar value(p, q);
    value.canonicalize();
    return value;
}

std::string to_string(const Scalar& value) {
    // mpq_class::get_str already omits "/1".
    return value.get_str(10);
}

} // namespace exl
