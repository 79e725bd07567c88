#pragma once

#include "liedef/catalog.hpp"
#include "liedef/deformation.hpp"

#include <stdexcept>
#include <string>

namespace liedef::testkit {

inline Cochain labelled(const std::string& label)
{
    const auto parsed = parse_representative_label(label);
    if (!parsed)
        throw std::invalid_argument("bad label " + label);
    return phi(parsed->first, parsed->second);
}

inline Deformation deformation_of(const std::string& label)
{
    return Deformation::infinitesimal(heisenberg(2), labelled(label));
}

/// The Lie algebra h2 + t * phi for a representative label.
inline LieAlgebra member(const std::string& label, const Rational& t = Rational(1))
{
    return specialize(deformation_of(label), t);
}

inline Vector unit_vector(std::size_t n, std::size_t i)
{
    Vector v(n);
    v[i] = Rational(1);
    return v;
}

} // namespace liedef::testkit
