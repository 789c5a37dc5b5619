#pragma once

#include <vector>

#include "feyntope/rational.hpp"

namespace feyntope {

// Dense matrices over cpp_int / cpp_rational.  Row-major.
using IntMat = std::vector<std::vector<Int>>;
using RatMat = std::vector<std::vector<Rat>>;

// Rank over Q by fraction-free Gaussian elimination.
int rank(IntMat m);
int rank(RatMat m);

// Z-basis of { x : m * x = 0 } for an r-by-c integer matrix, via column
// reduction with a unimodular transform tracked alongside.  The returned
// vectors form a basis of the kernel lattice, not merely a Q-basis.
std::vector<std::vector<Int>> integer_kernel_basis(const IntMat& m);

// True when the columns of m generate all of Z^r, i.e. the column-style
// Hermite form is the identity.
bool columns_generate_lattice(const IntMat& m);

// Nullspace of an r-by-c rational matrix as primitive integer vectors
// (each scaled to coprime entries).  Used for hyperplane normals.
std::vector<IVec> rational_nullspace_primitive(const RatMat& m);

// Divide by the gcd of the entries; leaves the zero vector alone.
void make_primitive(std::vector<Int>& v);
IVec make_primitive(const IVec& v);

Int determinant(IntMat m);

}  // namespace feyntope
