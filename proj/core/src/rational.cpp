#include "cubics/rational.hpp"

#include <cctype>

namespace cubics {

const char* errc_name(errc code) {
    switch (code) {
        case errc::unsupported_order: return "UnsupportedOrder";
        case errc::bad_prime: return "BadPrime";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::not_homogeneous: return "NotHomogeneous";
        case errc::truncation_insufficient: return "TruncationInsufficient";
        case errc::unsupported_type: return "UnsupportedType";
        case errc::not_singular: return "NotSingular";
        case errc::not_invariant: return "NotInvariant";
        case errc::exceeds_cap: return "ExceedsCap";
        case errc::not_stable: return "NotStable";
        case errc::group_too_large: return "GroupTooLarge";
        case errc::torsion_quotient: return "TorsionQuotient";
        case errc::formula_not_applicable: return "FormulaNotApplicable";
        case errc::not_at_origin: return "NotAtOrigin";
        case errc::has_x1_square: return "HasX1Square";
        case errc::schema_error: return "SchemaError";
        case errc::io_error: return "IOError";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

Rat parse_rational(const std::string& text) {
    if (text.empty()) fail(errc::schema_error, "empty rational literal");
    std::string num = text, den = "1";
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    auto check = [&](const std::string& part) {
        if (part.empty()) fail(errc::schema_error, "bad rational literal '" + text + "'");
        size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) fail(errc::schema_error, "bad rational literal '" + text + "'");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                fail(errc::schema_error, "bad rational literal '" + text + "'");
    };
    check(num);
    check(den);
    Int d(den);
    if (d == 0) fail(errc::schema_error, "zero denominator in '" + text + "'");
    return Rat(Int(num), d);
}

std::string format_rational(const Rat& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace cubics
