#ifndef CUBICS_ERRORS_HPP
#define CUBICS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cubics {

enum class errc {
    unsupported_order,
    bad_prime,
    field_mismatch,
    dimension_mismatch,
    not_homogeneous,
    truncation_insufficient,
    unsupported_type,
    not_singular,
    not_invariant,
    exceeds_cap,
    not_stable,
    group_too_large,
    torsion_quotient,
    formula_not_applicable,
    not_at_origin,
    has_x1_square,
    schema_error,
    io_error,
    internal,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace cubics

#endif
