#include "kkms/rational.hpp"

#include <sstream>

namespace kkms {

Rational parse_rational(const std::string& text)
{
    if (text.empty())
        throw ParseError("empty rational literal");
    const auto slash = text.find('/');
    try
    {
        if (slash == std::string::npos)
            return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den <= 0)
            throw ParseError("rational literal \"" + text + "\" has nonpositive denominator");
        return Rational(num, den);
    }
    catch (const std::runtime_error&)
    {
        throw ParseError("malformed rational literal \"" + text + "\"");
    }
}

std::string to_string(const Rational& q)
{
    return q.str();
}

std::string to_string(const RVector& v)
{
    std::ostringstream out;
    for (Eigen::Index i = 0; i < v.size(); ++i)
    {
        if (i > 0)
            out << ' ';
        out << v(i).str();
    }
    return out.str();
}

RVector rpoint(std::initializer_list<const char*> coords)
{
    RVector v(static_cast<Eigen::Index>(coords.size()));
    Eigen::Index i = 0;
    for (const char* c : coords)
        v(i++) = parse_rational(c);
    return v;
}

RVector rpoint_int(std::initializer_list<long> coords)
{
    RVector v(static_cast<Eigen::Index>(coords.size()));
    Eigen::Index i = 0;
    for (long c : coords)
        v(i++) = c;
    return v;
}

RVector parse_point(const std::vector<std::string>& tokens)
{
    RVector v(static_cast<Eigen::Index>(tokens.size()));
    for (std::size_t i = 0; i < tokens.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = parse_rational(tokens[i]);
    return v;
}

}  // namespace kkms
