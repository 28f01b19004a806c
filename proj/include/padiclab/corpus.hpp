#ifndef PADICLAB_CORPUS_HPP
#define PADICLAB_CORPUS_HPP

// Named example algebras and seeded random corpora used by the property
// suites and the self-test command.

#include "padiclab/group_groupoid.hpp"
#include "padiclab/rng.hpp"
#include "padiclab/star_algebra.hpp"

namespace padiclab {

// span{1, a} with a^2 = 0 and trivial involution (a is the strictly upper
// triangular 2x2 matrix; ultra-antisymmetric exactly at p = 2).
StarAlgebra nilpotent_pair_algebra(int64_t p, int N);

// span{1, a} with a^2 = 0 and a* = -a; realized by a 4x4 antisymmetric
// matrix over Z_p when -1 is a square.
StarAlgebra antisymmetric_pair_algebra(int64_t p, int N);

// The 4x4 realization itself (requires p = 1 mod 4).
PadicMatrix antisymmetric_generator_matrix(int64_t p, int N);

// Same structure constants in the basis with columns of s; involution and
// unit conjugated along.  s must be invertible.
StarAlgebra conjugate_basis(const StarAlgebra& a, const PadicMatrix& s);

PadicMatrix random_invertible(Rng& rng, int64_t p, int N, size_t n);

QuasiHilbert random_quasi_hilbert(Rng& rng, int64_t p, int N, size_t n);

// Valid star algebras of rank <= 4 over mixed primes: group algebras,
// quadratic extensions, dual numbers, products, matrix algebras, randomly
// conjugated.  All pass validate_algebra.
std::vector<StarAlgebra> random_algebra_corpus(Rng& rng, size_t count);

// Groupoid corpus for the p-simplicity equivalence: pair groupoids,
// one-object groups, disjoint unions and action groupoids.
std::vector<std::pair<std::string, FiniteGroupoid>> groupoid_corpus();

}  // namespace padiclab

#endif
