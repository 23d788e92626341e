#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lcs/f2.hpp"

namespace lcs {

/// 2m x 2m binary matrix F with F Omega F^T = Omega.
struct SympMatrix {
  std::size_t m = 0;
  F2Matrix f;

  static SympMatrix identity(std::size_t m) { return {m, F2Matrix::identity(2 * m)}; }
  bool operator==(const SympMatrix& o) const = default;
};

/// Omega = [[0, I_m], [I_m, 0]].
F2Matrix omega(std::size_t m);

bool is_symplectic(const F2Matrix& f);
inline bool is_symplectic(const SympMatrix& s) { return is_symplectic(s.f); }

/// x Omega y^T mod 2.
bool symp_inner(const F2Vector& x, const F2Vector& y);

/// Swap the X and Z halves of a length-2m vector, i.e. h Omega.
F2Vector omega_apply(const F2Vector& h);

/// F_h = I + Omega h^T h; h = 0 yields the identity.
SympMatrix transvection(const F2Vector& h);

/// Transvection vectors whose product maps x to y (Theorem-2 style, at most two).
std::vector<F2Vector> map_vector(const F2Vector& x, const F2Vector& y);

struct ParticularSolution {
  SympMatrix F;
  std::vector<F2Vector> transvections;  // applied left to right
};

/// Find one symplectic F with xs[i] F = ys[i], as a product of <= 2t transvections.
ParticularSolution solve_particular(const std::vector<F2Vector>& xs,
                                    const std::vector<F2Vector>& ys);

/// m hyperbolic pairs (u_a, v_a): <u_a,v_b> = delta_ab, <u_a,u_b> = <v_a,v_b> = 0.
struct SympBasis {
  std::vector<F2Vector> u;
  std::vector<F2Vector> v;
};

/// Extend the given pairs and unpaired vectors to a full symplectic basis.
/// Input pairs come first in the output, then the singles (each gets a partner),
/// then fresh pairs built from standard basis vectors.
SympBasis complete_basis(const std::vector<std::pair<F2Vector, F2Vector>>& pairs,
                         const std::vector<F2Vector>& singles, std::size_t m);

/// Constraints u_i F = images_u[i] (i constrained iff set), same for v_j.
struct ConstraintSystem {
  std::size_t m = 0;
  SympBasis basis;
  std::vector<std::optional<F2Vector>> images_u;  // size m
  std::vector<std::optional<F2Vector>> images_v;  // size m

  std::size_t alpha() const;
  void check() const;  // throws InconsistentInput / IncompatibleInnerProducts
};

enum class SolveMode { Enumerate, First, Count };

/// log2 of the solution count: alpha(alpha+1)/2.
std::uint64_t solution_count_log2(const ConstraintSystem& sys);

/// Stream every symplectic solution in deterministic order. The callback
/// returns false to stop early. Solution count is 2^{alpha(alpha+1)/2}.
void for_each_solution(const ConstraintSystem& sys,
                       const std::function<bool(const SympMatrix&)>& yield);

constexpr std::uint64_t kDefaultSolutionCeiling = std::uint64_t{1} << 20;

/// Enumerate (all), First (one) or Count (empty list; use solution_count_log2).
std::vector<SympMatrix> solve_all(const ConstraintSystem& sys, SolveMode mode,
                                  std::uint64_t ceiling = kDefaultSolutionCeiling);

/// Build a ConstraintSystem from raw pairs x_i F = y_i via symplectic
/// Gram-Schmidt on the x side (mirrored on the y side) plus basis completion.
ConstraintSystem build_system(const std::vector<F2Vector>& xs,
                              const std::vector<F2Vector>& ys, std::size_t m);

/// All of Sp(2m, F2) by brute force; m <= 2 only (test oracle).
std::vector<SympMatrix> enumerate_group(std::size_t m);

}  // namespace lcs
