#include "gammal/errors.hpp"

namespace gammal {

const char* errc_name(errc c) noexcept {
    switch (c) {
        case errc::conductor_mismatch: return "ConductorMismatch";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::order_exceeds_cap: return "OrderExceedsCap";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::order_cap_exceeded: return "OrderCapExceeded";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::not_normal: return "NotNormal";
        case errc::quotient_not_abelian: return "QuotientNotAbelian";
        case errc::not_a_homomorphism: return "NotAHomomorphism";
        case errc::not_prime: return "NotPrime";
        case errc::prime_does_not_divide_order: return "PrimeDoesNotDivideOrder";
        case errc::not_class_two: return "NotClassTwo";
        case errc::not_generating: return "NotGenerating";
        case errc::not_abelian: return "NotAbelian";
        case errc::exponent_not_dividing_conductor: return "ExponentNotDividingConductor";
        case errc::gamma_not_abelian: return "GammaNotAbelian";
        case errc::parse_error: return "ParseError";
        case errc::validation_error: return "ValidationError";
        case errc::certification_failure: return "CertificationFailure";
    }
    return "UnknownError";
}

} // namespace gammal
