#pragma once

#include <stdexcept>
#include <string>

namespace gammal {

// Every failure the library can signal, one code per contract violation.
// The CLI maps these onto its exit-code table.
enum class errc {
    conductor_mismatch,
    division_by_zero,
    order_exceeds_cap,
    cap_exceeded,
    order_cap_exceeded,
    index_out_of_range,
    not_normal,
    quotient_not_abelian,
    not_a_homomorphism,
    not_prime,
    prime_does_not_divide_order,
    not_class_two,
    not_generating,
    not_abelian,
    exponent_not_dividing_conductor,
    gamma_not_abelian,
    parse_error,
    validation_error,
    certification_failure,
};

const char* errc_name(errc c) noexcept;

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw error(code, message);
}

// Certified claims are recomputed, never trusted; a failed recomputation is an
// implementation bug surfacing, so it gets its own code.
inline void certify(bool ok, const std::string& claim) {
    if (!ok) fail(errc::certification_failure, claim);
}

} // namespace gammal
