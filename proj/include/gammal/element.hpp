#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "gammal/matrix.hpp"

namespace gammal {

enum class AmbientKind { permutation, matrix, semilinear, abstract };

const char* ambient_kind_name(AmbientKind k) noexcept;

/// Permutation of {0..deg-1} given by its image vector.
struct Permutation {
    std::vector<std::uint32_t> img;

    explicit Permutation(std::vector<std::uint32_t> images);
    std::size_t degree() const { return img.size(); }
};

struct MatrixElement {
    ScalarMatrix a; // square, invertible (checked on construction)

    explicit MatrixElement(ScalarMatrix m);
};

/// Element of the semilinear group GL(n,k) x| Aut k, acting by v |-> A*sigma(v).
struct SemilinearElement {
    ScalarMatrix a;
    FieldAutomorphism sigma;

    SemilinearElement(ScalarMatrix m, FieldAutomorphism s);
};

/// Placeholder element of a table-backed group (quotients, products); its
/// multiplication lives in the group's Cayley table, not here.
struct AbstractElement {
    std::uint32_t id;
};

using GroupElement = std::variant<Permutation, MatrixElement, SemilinearElement, AbstractElement>;

AmbientKind element_kind(const GroupElement& g);

/// Multiplication law per kind; Semilinear: (A,s)(B,t) = (A*s(B), s o t).
/// Abstract elements cannot be multiplied here.
GroupElement element_mul(const GroupElement& a, const GroupElement& b);

GroupElement element_identity_like(const GroupElement& g);

bool element_is_identity(const GroupElement& g);

/// Canonical serialized key; equal elements have equal keys. Stable across
/// runs (scalars are in canonical normal form).
std::string element_key(const GroupElement& g);

std::string element_display(const GroupElement& g);

/// Elements must agree in kind, degree/dimension and conductor to live in one
/// group; throws validation/conductor errors otherwise.
void require_compatible(const GroupElement& a, const GroupElement& b);

} // namespace gammal
