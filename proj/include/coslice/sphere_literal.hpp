#pragma once

// Sphere literals for the command line:
//   sphere := ['-'] term (('+'|'-') term)*
//   term   := INT | INT '*' unit | unit | unit '^' INT
//   unit   := 'rho' | 'triv' | 'lambda' '(' INT ')' | 'perm' '[' INT {',' INT} ']'
// A bare integer means trivial summands; negative trivial multiplicity turns
// into desuspensions; 'perm' lists orbit counts from fixed points down to
// free orbits; negative multiplicities of nontrivial irreducibles are not
// representation spheres and are refused.

#include "coslice/rep.hpp"

#include <string>

namespace coslice {

SphereSpec parse_sphere_literal(const std::string& text, const CyclicGroupSpec&);

}  // namespace coslice
