#ifndef DICKE_DEGENERACY_HPP
#define DICKE_DEGENERACY_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace dicke::degen {

using BigInt = boost::multiprecision::cpp_int;

// Multiplicity of the spin-j multiplet in (spin 1/2)^N:
//   g(N,j) = (1+2j)/(1+j+N/2) * C(N, N/2-j),
// computed exactly. j passed as 2j to keep half-integers exact.
BigInt degeneracy_exact(int n_atoms, int twice_j);

// log of the continuum version g(N,x), x = j/N in [0, 1/2].
double log_degeneracy(int n_atoms, double x);

// Location of the maximum of log g(N,x) on [0, 1/2], to 1e-10 in x.
double degeneracy_argmax(int n_atoms);

}  // namespace dicke::degen

#endif
