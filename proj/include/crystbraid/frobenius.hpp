#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "crystbraid/orbits.hpp"
#include "crystbraid/quotient.hpp"
#include "crystbraid/zlinalg.hpp"

// The Frobenius group of order 21 inside B_7/[P_7,P_7]. Everything here lives
// in 7 strands.
namespace cryst::frobenius {

inline constexpr int kStrands = 7;

/// sigma_2 sigma_1^{-1} sigma_5 sigma_4^{-1}
BraidWord x_word();
/// sigma_2 sigma_3 sigma_6 sigma_5 sigma_4 sigma_3^{-1} sigma_2^{-1} sigma_1^{-1} sigma_3^{-1} sigma_2^{-1}
BraidWord y_word();

/// (1,3,4,2,5,6,7)
Permutation alpha();
/// (1,2,3)(4,5,6)
Permutation beta();

struct XY {
  Element x;
  Element y;
};
XY build_xy();

/// vec(x y x^{-1} y^{-2}); throws NotPure if that product is not pure.
PairVector defect(const Element& x, const Element& y);

/// +1 on {4,7},{1,7},{1,6},{1,2}; -1 on {2,7},{2,6},{2,4},{4,6}.
PairVector expected_defect();
/// N0 = A_{3,5} + A_{1,6} - A_{2,7} - A_{5,7}
PairVector n0();
/// N0 * y
Element v0();

/// Literal orbit tables of conjugation by y (three 7-cycles) and by x
/// (seven 3-cycles), in their published starting points.
std::vector<Orbit> y_orbit_table();
std::vector<Orbit> x_orbit_table();

/// A p = b over the 21 unknowns p_{i,j} in lexicographic pair order.
struct LinearSystem {
  IntMatrix a;
  BigVector b;
  bool satisfied_by(const PairVector& p) const;
};
/// Three orbit-sum rows (one per y-orbit) followed by the 21 coefficient
/// equations of x v x^{-1} = v^2 with v = N y, transcribed row by row.
LinearSystem paper_system();
/// The same conditions derived from the engine: the coefficient equations are
/// the affine map N -> vec(x (N y) x^{-1} (N y)^{-2}) set to zero.
LinearSystem engine_system();

struct Family {
  PairVector particular;
  std::vector<PairVector> kernel;
};
/// Integer solution set of paper_system().
Family solve_family();

using Params = std::array<std::int64_t, 6>;
/// Closed-form member of the family for parameters r_1..r_6.
PairVector solution_n(const Params& r);
/// Columns: the coefficient of r_l in solution_n.
IntMatrix parametrization_matrix();
/// r with solution_n(r) = N; throws NotASolution.
Params recover_parameters(const PairVector& n);

struct Relation {
  std::string name;
  Element lhs;
  Element rhs;
  bool holds = false;
};

struct Witness {
  Element x;
  Element v;
  std::vector<Relation> certificate;  ///< x^3 = 1, v^7 = 1, x v x^{-1} = v^2
  bool valid() const;
};
/// v = N y; throws NotASolution if N does not solve the system.
Witness build_frobenius(const PairVector& n);

/// Pure Theta with conj(x, Theta) = x and conj(v0, Theta) = N y, taking
/// s_4 = 0. Throws NotASolution.
PairVector conjugator_between(const PairVector& n);

struct Chain {
  Permutation rho;      ///< rho sigma(H) rho^{-1} = <alpha, beta>
  Element rho_hat;      ///< canonical lift of rho
  Element lambda1;      ///< sends the order-3 generator of rho_hat H rho_hat^{-1} to x
  Element lambda2;      ///< centralizer correction
  char z = 'a';         ///< 'a' for alpha, '1' for alpha_1, '2' for alpha_2
  PairVector n;         ///< v = N y after the first three steps
  PairVector theta;     ///< conjugator_between(n)
  Element total;        ///< conj(H, total) = <x, v0>
};

/// Conjugator chain sending <a, b> (a of order 3, b of order 7,
/// a b a^{-1} = b^2) onto <x, v0>. `rho_choice` selects among the valid
/// permutation-level conjugators (taken modulo their number) and
/// `lambda1_twist` replaces lambda1 by delta_{0,3}^twist lambda1; both only change
/// which intermediate conjugators appear. Throws NotFrobenius.
Chain standardize_frobenius(const Element& a, const Element& b, std::size_t rho_choice = 0, int lambda1_twist = 0);

}  // namespace cryst::frobenius
