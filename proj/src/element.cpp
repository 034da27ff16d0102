#include "gammal/element.hpp"

#include <algorithm>
#include <sstream>

namespace gammal {

const char* ambient_kind_name(AmbientKind k) noexcept {
    switch (k) {
        case AmbientKind::permutation: return "permutation";
        case AmbientKind::matrix: return "matrix";
        case AmbientKind::semilinear: return "semilinear";
        case AmbientKind::abstract: return "abstract";
    }
    return "?";
}

Permutation::Permutation(std::vector<std::uint32_t> images) : img(std::move(images)) {
    std::vector<bool> seen(img.size(), false);
    for (auto v : img) {
        if (v >= img.size() || seen[v])
            fail(errc::validation_error, "permutation image vector is not a bijection");
        seen[v] = true;
    }
}

MatrixElement::MatrixElement(ScalarMatrix m) : a(std::move(m)) {
    if (a.rows() != a.cols()) fail(errc::validation_error, "group matrix must be square");
    if (!is_invertible(a)) fail(errc::validation_error, "group matrix is singular");
}

SemilinearElement::SemilinearElement(ScalarMatrix m, FieldAutomorphism s)
    : a(std::move(m)), sigma(std::move(s)) {
    if (a.rows() != a.cols()) fail(errc::validation_error, "semilinear matrix must be square");
    if (a.conductor() != sigma.conductor())
        fail(errc::conductor_mismatch, "matrix part and Galois part conductors differ");
    if (!is_invertible(a)) fail(errc::validation_error, "semilinear matrix part is singular");
}

AmbientKind element_kind(const GroupElement& g) {
    if (std::holds_alternative<Permutation>(g)) return AmbientKind::permutation;
    if (std::holds_alternative<MatrixElement>(g)) return AmbientKind::matrix;
    if (std::holds_alternative<SemilinearElement>(g)) return AmbientKind::semilinear;
    return AmbientKind::abstract;
}

GroupElement element_mul(const GroupElement& a, const GroupElement& b) {
    require_compatible(a, b);
    if (const auto* p = std::get_if<Permutation>(&a)) {
        const auto& q = std::get<Permutation>(b);
        // composition: (p*q)(i) = p(q(i))
        std::vector<std::uint32_t> img(p->img.size());
        for (std::size_t i = 0; i < img.size(); ++i) img[i] = p->img[q.img[i]];
        return Permutation(std::move(img));
    }
    if (const auto* m = std::get_if<MatrixElement>(&a)) {
        const auto& n = std::get<MatrixElement>(b);
        return MatrixElement(m->a * n.a);
    }
    if (const auto* s = std::get_if<SemilinearElement>(&a)) {
        const auto& t = std::get<SemilinearElement>(b);
        return SemilinearElement(s->a * apply_entrywise(s->sigma, t.a), compose(s->sigma, t.sigma));
    }
    fail(errc::validation_error, "abstract elements have no ambient multiplication");
}

GroupElement element_identity_like(const GroupElement& g) {
    if (const auto* p = std::get_if<Permutation>(&g)) {
        std::vector<std::uint32_t> img(p->img.size());
        for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<std::uint32_t>(i);
        return Permutation(std::move(img));
    }
    if (const auto* m = std::get_if<MatrixElement>(&g))
        return MatrixElement(ScalarMatrix::identity(m->a.context(), m->a.rows()));
    if (const auto* s = std::get_if<SemilinearElement>(&g))
        return SemilinearElement(ScalarMatrix::identity(s->a.context(), s->a.rows()),
                                 FieldAutomorphism::identity(s->sigma.context()));
    return AbstractElement{0};
}

bool element_is_identity(const GroupElement& g) {
    if (const auto* p = std::get_if<Permutation>(&g)) {
        for (std::size_t i = 0; i < p->img.size(); ++i)
            if (p->img[i] != i) return false;
        return true;
    }
    if (const auto* m = std::get_if<MatrixElement>(&g)) return m->a.is_identity();
    if (const auto* s = std::get_if<SemilinearElement>(&g))
        return s->a.is_identity() && s->sigma.is_identity();
    return std::get<AbstractElement>(g).id == 0;
}

std::string element_key(const GroupElement& g) {
    if (const auto* p = std::get_if<Permutation>(&g)) {
        std::ostringstream os;
        os << "P(";
        for (std::size_t i = 0; i < p->img.size(); ++i) {
            if (i) os << ',';
            os << p->img[i];
        }
        os << ')';
        return os.str();
    }
    if (const auto* m = std::get_if<MatrixElement>(&g)) return m->a.key();
    if (const auto* s = std::get_if<SemilinearElement>(&g))
        return "S" + s->a.key() + "@" + s->sigma.key();
    return "A" + std::to_string(std::get<AbstractElement>(g).id);
}

std::string element_display(const GroupElement& g) {
    if (const auto* p = std::get_if<Permutation>(&g)) {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < p->img.size(); ++i) {
            if (i) os << ',';
            os << p->img[i];
        }
        os << ']';
        return os.str();
    }
    if (const auto* m = std::get_if<MatrixElement>(&g)) return m->a.display();
    if (const auto* s = std::get_if<SemilinearElement>(&g))
        return s->a.display() + " with " + s->sigma.display();
    return "#" + std::to_string(std::get<AbstractElement>(g).id);
}

void require_compatible(const GroupElement& a, const GroupElement& b) {
    if (element_kind(a) != element_kind(b))
        fail(errc::validation_error, "elements of different ambient kinds");
    if (const auto* p = std::get_if<Permutation>(&a)) {
        if (p->degree() != std::get<Permutation>(b).degree())
            fail(errc::validation_error, "permutations of different degrees");
    } else if (const auto* m = std::get_if<MatrixElement>(&a)) {
        const auto& n = std::get<MatrixElement>(b);
        if (m->a.rows() != n.a.rows())
            fail(errc::validation_error, "matrices of different dimensions");
        if (m->a.conductor() != n.a.conductor())
            fail(errc::conductor_mismatch, "matrices over different conductors");
    } else if (const auto* s = std::get_if<SemilinearElement>(&a)) {
        const auto& t = std::get<SemilinearElement>(b);
        if (s->a.rows() != t.a.rows())
            fail(errc::validation_error, "semilinear elements of different dimensions");
        if (s->a.conductor() != t.a.conductor())
            fail(errc::conductor_mismatch, "semilinear elements over different conductors");
    }
}

} // namespace gammal
