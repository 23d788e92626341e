#include "lcs/symplectic.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace lcs {

F2Matrix omega(std::size_t m) {
  F2Matrix w(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    w.set(i, m + i, true);
    w.set(m + i, i, true);
  }
  return w;
}

bool is_symplectic(const F2Matrix& f) {
  if (f.rows() != f.cols() || f.rows() % 2 != 0) return false;
  std::size_t m = f.rows() / 2;
  // (F Omega F^T)(i,j) = <row_i, row_j>; must equal Omega.
  for (std::size_t i = 0; i < 2 * m; ++i)
    for (std::size_t j = i; j < 2 * m; ++j) {
      bool want = (j == i + m);
      if (symp_inner(f.row(i), f.row(j)) != want) return false;
    }
  return true;
}

bool symp_inner(const F2Vector& x, const F2Vector& y) {
  if (x.size() != y.size() || x.size() % 2 != 0)
    throw DimensionMismatch("symp_inner needs equal even-length vectors");
  return x.dot(omega_apply(y));
}

F2Vector omega_apply(const F2Vector& h) {
  std::size_t m = h.size() / 2;
  F2Vector r(h.size());
  for (std::size_t i = 0; i < m; ++i) {
    r.set(i, h.get(m + i));
    r.set(m + i, h.get(i));
  }
  return r;
}

SympMatrix transvection(const F2Vector& h) {
  if (h.size() % 2 != 0) throw DimensionMismatch("transvection vector must have even length");
  std::size_t m = h.size() / 2;
  F2Matrix f = F2Matrix::identity(2 * m);
  F2Vector oh = omega_apply(h);  // column Omega h^T read as a vector
  for (std::size_t i = 0; i < 2 * m; ++i)
    if (oh.get(i)) f.set_row(i, f.row(i) + h);
  return {m, f};
}

namespace {

// Lexicographically smallest w with <a_i, w> = rhs_i for the given vectors.
F2Vector min_inner_product_solution(const std::vector<F2Vector>& vecs,
                                    const std::vector<bool>& rhs, std::size_t dim) {
  F2Matrix a(vecs.size(), dim);
  F2Vector b(vecs.size());
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    a.set_row(i, omega_apply(vecs[i]));
    b.set(i, rhs[i]);
  }
  auto sol = solve_affine(a, b);
  if (!sol) throw IncompatibleInnerProducts("inner-product system has no solution");
  return lex_min_affine(*sol);
}

}  // namespace

std::vector<F2Vector> map_vector(const F2Vector& x, const F2Vector& y) {
  if (x.is_zero() || y.is_zero()) throw ZeroVector("map_vector requires nonzero vectors");
  if (x == y) return {};
  if (symp_inner(x, y)) return {x + y};
  F2Vector w = min_inner_product_solution({x, y}, {true, true}, x.size());
  return {w + y, x + w};
}

ParticularSolution solve_particular(const std::vector<F2Vector>& xs,
                                    const std::vector<F2Vector>& ys) {
  if (xs.empty() || xs.size() != ys.size())
    throw DimensionMismatch("solve_particular needs matching nonempty xs/ys");
  std::size_t dim = xs[0].size();
  if (dim % 2 != 0) throw DimensionMismatch("vectors must have even length 2m");
  std::size_t m = dim / 2;
  std::size_t t = xs.size();
  for (std::size_t i = 0; i < t; ++i) {
    if (xs[i].size() != dim || ys[i].size() != dim)
      throw DimensionMismatch("inconsistent vector lengths");
    if (xs[i].is_zero() || ys[i].is_zero())
      throw ZeroVector("solve_particular requires nonzero vectors");
  }
  if (rank(F2Matrix::from_rows(xs)) < t)
    throw DependentInputs("xs are linearly dependent");
  if (rank(F2Matrix::from_rows(ys)) < t)
    throw IncompatibleInnerProducts("ys are linearly dependent");
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i; j < t; ++j)
      if (symp_inner(xs[i], xs[j]) != symp_inner(ys[i], ys[j]))
        throw IncompatibleInnerProducts("inner products of xs and ys differ");

  ParticularSolution out{SympMatrix::identity(m), {}};
  auto apply = [&](const F2Vector& h) {
    out.F.f = out.F.f * transvection(h).f;
    out.transvections.push_back(h);
  };
  for (std::size_t i = 0; i < t; ++i) {
    F2Vector xt = xs[i] * out.F.f;
    if (xt == ys[i]) continue;
    if (symp_inner(xt, ys[i])) {
      apply(xt + ys[i]);
    } else {
      // w with <xt,w> = <y_i,w> = 1 and <y_j,w> = <y_j,y_i> for j < i.
      std::vector<F2Vector> vecs{xt, ys[i]};
      std::vector<bool> rhs{true, true};
      for (std::size_t j = 0; j < i; ++j) {
        vecs.push_back(ys[j]);
        rhs.push_back(symp_inner(ys[j], ys[i]));
      }
      F2Vector w = min_inner_product_solution(vecs, rhs, dim);
      apply(w + ys[i]);
      apply(xt + w);
    }
  }
  return out;
}

SympBasis complete_basis(const std::vector<std::pair<F2Vector, F2Vector>>& pairs,
                         const std::vector<F2Vector>& singles, std::size_t m) {
  std::size_t dim = 2 * m;
  std::vector<F2Vector> all;
  for (const auto& [u, v] : pairs) {
    all.push_back(u);
    all.push_back(v);
  }
  for (const auto& s : singles) all.push_back(s);
  for (const auto& w : all)
    if (w.size() != dim) throw DimensionMismatch("basis vectors must have length 2m");
  if (!all.empty() && rank(F2Matrix::from_rows(all)) < all.size())
    throw InconsistentInput("supplied basis vectors are linearly dependent");

  // Definition-2 relations among the inputs.
  for (std::size_t a = 0; a < pairs.size(); ++a)
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (symp_inner(pairs[a].first, pairs[b].second) != (a == b))
        throw InconsistentInput("pair relations violate <u_a,v_b> = delta_ab");
      if (symp_inner(pairs[a].first, pairs[b].first) ||
          symp_inner(pairs[a].second, pairs[b].second))
        throw InconsistentInput("pair relations are not isotropic");
    }
  for (std::size_t a = 0; a < singles.size(); ++a) {
    for (std::size_t b = a + 1; b < singles.size(); ++b)
      if (symp_inner(singles[a], singles[b]))
        throw InconsistentInput("unpaired vectors must be mutually orthogonal");
    for (const auto& [u, v] : pairs)
      if (symp_inner(singles[a], u) || symp_inner(singles[a], v))
        throw InconsistentInput("unpaired vectors must be orthogonal to the pairs");
  }

  SympBasis basis;
  for (const auto& [u, v] : pairs) {
    basis.u.push_back(u);
    basis.v.push_back(v);
  }
  std::vector<F2Vector> pending = singles;

  auto add_pair_for = [&](const F2Vector& u) {
    // Partner: pairs with u, orthogonal to everything else placed or pending.
    std::vector<F2Vector> vecs{u};
    std::vector<bool> rhs{true};
    for (std::size_t a = 0; a < basis.u.size(); ++a) {
      vecs.push_back(basis.u[a]);
      rhs.push_back(false);
      vecs.push_back(basis.v[a]);
      rhs.push_back(false);
    }
    for (const auto& s : pending) {
      vecs.push_back(s);
      rhs.push_back(false);
    }
    F2Vector w = min_inner_product_solution(vecs, rhs, dim);
    basis.u.push_back(u);
    basis.v.push_back(w);
  };

  while (!pending.empty()) {
    F2Vector u = pending.front();
    pending.erase(pending.begin());
    add_pair_for(u);
  }

  std::size_t next = 0;
  while (basis.u.size() < m) {
    // Next standard basis vector with a nonzero projection onto the
    // symplectic complement of the pairs placed so far.
    F2Vector cand(dim);
    for (; next < dim; ++next) {
      F2Vector e(dim);
      e.set(next, true);
      for (std::size_t a = 0; a < basis.u.size(); ++a) {
        if (symp_inner(e, basis.v[a])) e ^= basis.u[a];
        if (symp_inner(e, basis.u[a])) e ^= basis.v[a];
      }
      if (!e.is_zero()) {
        cand = e;
        ++next;
        break;
      }
    }
    if (cand.is_zero()) throw InconsistentInput("failed to complete symplectic basis");
    add_pair_for(cand);
  }
  return basis;
}

std::size_t ConstraintSystem::alpha() const {
  std::size_t a = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (!images_u[i]) ++a;
    if (!images_v[i]) ++a;
  }
  return a;
}

void ConstraintSystem::check() const {
  if (basis.u.size() != m || basis.v.size() != m || images_u.size() != m ||
      images_v.size() != m)
    throw InconsistentInput("constraint system has inconsistent sizes");
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (symp_inner(basis.u[a], basis.v[b]) != (a == b) ||
          symp_inner(basis.u[a], basis.u[b]) || symp_inner(basis.v[a], basis.v[b]))
        throw InconsistentInput("basis is not symplectic");
    }
  for (std::size_t i = 0; i < m; ++i) {
    if (images_u[i] && images_u[i]->is_zero())
      throw IncompatibleInnerProducts("image of a basis vector cannot be zero");
    if (images_v[i] && images_v[i]->is_zero())
      throw IncompatibleInnerProducts("image of a basis vector cannot be zero");
    // The power-of-two count and the free-vector enumeration both rely on each
    // basis pair carrying at least one constrained image; with both halves free
    // the solution count is not 2^{alpha(alpha+1)/2} (e.g. a single hyperbolic
    // pair at m = 2 admits 6 completions, not 8). Refuse instead of
    // enumerating garbage.
    if (!images_u[i] && !images_v[i])
      throw InconsistentInput("basis pair " + std::to_string(i + 1) +
                              " has no constrained image; each pair needs a u or v image");
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (images_u[i] && images_u[j] && symp_inner(*images_u[i], *images_u[j]))
        throw IncompatibleInnerProducts("images of u vectors must be isotropic");
      if (images_v[i] && images_v[j] && symp_inner(*images_v[i], *images_v[j]))
        throw IncompatibleInnerProducts("images of v vectors must be isotropic");
      if (images_u[i] && images_v[j] &&
          symp_inner(*images_u[i], *images_v[j]) != (i == j))
        throw IncompatibleInnerProducts("images must satisfy <u'_i,v'_j> = delta_ij");
    }
  }
}

std::uint64_t solution_count_log2(const ConstraintSystem& sys) {
  std::uint64_t a = sys.alpha();
  return a * (a + 1) / 2;
}

void for_each_solution(const ConstraintSystem& sys,
                       const std::function<bool(const SympMatrix&)>& yield) {
  sys.check();
  std::size_t m = sys.m;

  std::vector<F2Vector> xs, ys;
  for (std::size_t i = 0; i < m; ++i)
    if (sys.images_u[i]) {
      xs.push_back(sys.basis.u[i]);
      ys.push_back(*sys.images_u[i]);
    }
  for (std::size_t j = 0; j < m; ++j)
    if (sys.images_v[j]) {
      xs.push_back(sys.basis.v[j]);
      ys.push_back(*sys.images_v[j]);
    }
  SympMatrix f0 = xs.empty() ? SympMatrix::identity(m) : solve_particular(xs, ys).F;

  F2Matrix a(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    a.set_row(i, sys.basis.u[i] * f0.f);
    a.set_row(m + i, sys.basis.v[i] * f0.f);
  }
  F2Matrix ainv = inverse(a);

  std::vector<std::size_t> ibjb;  // indices with a free u or free v
  for (std::size_t d = 0; d < m; ++d)
    if (!sys.images_u[d] || !sys.images_v[d]) ibjb.push_back(d);
  std::size_t n = ibjb.size();

  // Basis of the image of W-perp under F0: u rows first, then v rows.
  std::vector<F2Vector> wbasis(2 * n);
  for (std::size_t t = 0; t < n; ++t) {
    wbasis[t] = a.row(ibjb[t]);
    wbasis[n + t] = a.row(m + ibjb[t]);
  }
  std::vector<std::size_t> fixed, free_pos;
  for (std::size_t t = 0; t < n; ++t)
    if (sys.images_u[ibjb[t]])
      fixed.push_back(t);
    else
      free_pos.push_back(t);
  for (std::size_t t = 0; t < n; ++t)
    if (sys.images_v[ibjb[t]])
      fixed.push_back(n + t);
    else
      free_pos.push_back(n + t);
  std::sort(fixed.begin(), fixed.end());
  std::sort(free_pos.begin(), free_pos.end());
  std::size_t alpha = free_pos.size();
  if (alpha == 0) {
    yield(f0);
    return;
  }

  // All vectors in the W-perp image subspace, counter order (bit t = wbasis[t]).
  std::vector<F2Vector> sub(std::size_t{1} << (2 * n));
  sub[0] = F2Vector(2 * m);
  for (std::size_t s = 1; s < sub.size(); ++s)
    sub[s] = sub[s & (s - 1)] + wbasis[std::countr_zero(s)];

  // Per free vector: candidates compatible with every fixed basis vector.
  std::vector<std::vector<F2Vector>> choices(alpha);
  for (std::size_t i = 0; i < alpha; ++i) {
    std::size_t f = free_pos[i];
    std::size_t partner = (f < n) ? n + f : f - n;
    for (const auto& w : sub) {
      bool ok = true;
      for (std::size_t t = 0; t < fixed.size() && ok; ++t)
        ok = symp_inner(w, wbasis[fixed[t]]) == (fixed[t] == partner);
      if (ok) choices[i].push_back(w);
    }
    assert(choices[i].size() == (std::size_t{1} << alpha));
  }

  std::uint64_t total_bits = std::uint64_t{alpha} * (alpha + 1) / 2;
  std::uint64_t total = std::uint64_t{1} << total_bits;
  std::vector<F2Vector> w(alpha);
  for (std::uint64_t l = 0; l < total; ++l) {
    std::uint64_t shift = total_bits;
    auto segment = [&](std::size_t len) {
      shift -= len;
      return (l >> shift) & ((std::uint64_t{1} << len) - 1);
    };
    w[0] = choices[0][segment(alpha)];
    for (std::size_t i = 1; i < alpha; ++i) {
      std::vector<const F2Vector*> filtered;
      for (const auto& c : choices[i]) {
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) {
          bool want = free_pos[i] >= n && free_pos[j] + n == free_pos[i];
          ok = symp_inner(c, w[j]) == want;
        }
        if (ok) filtered.push_back(&c);
      }
      assert(filtered.size() == (std::size_t{1} << (alpha - i)));
      w[i] = *filtered[segment(alpha - i)];
    }
    F2Matrix b = a;
    for (std::size_t i = 0; i < alpha; ++i) {
      std::size_t f = free_pos[i];
      std::size_t row = (f < n) ? ibjb[f] : m + ibjb[f - n];
      b.set_row(row, w[i]);
    }
    SympMatrix sol{m, f0.f * (ainv * b)};
    if (!yield(sol)) return;
  }
}

std::vector<SympMatrix> solve_all(const ConstraintSystem& sys, SolveMode mode,
                                  std::uint64_t ceiling) {
  std::vector<SympMatrix> out;
  sys.check();
  if (mode == SolveMode::Count) return out;
  if (mode == SolveMode::Enumerate) {
    std::uint64_t lg = solution_count_log2(sys);
    if (lg >= 63 || (std::uint64_t{1} << lg) > ceiling)
      throw CeilingExceeded("solution count 2^" + std::to_string(lg) +
                            " exceeds enumeration ceiling");
  }
  for_each_solution(sys, [&](const SympMatrix& f) {
    out.push_back(f);
    return mode != SolveMode::First;
  });
  return out;
}

ConstraintSystem build_system(const std::vector<F2Vector>& xs,
                              const std::vector<F2Vector>& ys, std::size_t m) {
  if (xs.size() != ys.size()) throw DimensionMismatch("xs/ys size mismatch");
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i; j < xs.size(); ++j)
      if (symp_inner(xs[i], xs[j]) != symp_inner(ys[i], ys[j]))
        throw IncompatibleInnerProducts("inner products of xs and ys differ");
  if (!xs.empty() && rank(F2Matrix::from_rows(xs)) < xs.size())
    throw DependentInputs("constraint vectors are linearly dependent");

  // Symplectic Gram-Schmidt on the x side, mirrored on the y side.
  std::vector<F2Vector> wx = xs, wy = ys;
  std::vector<std::pair<F2Vector, F2Vector>> pairs;
  std::vector<std::pair<F2Vector, F2Vector>> pair_images;
  std::vector<F2Vector> singles, single_images;
  while (!wx.empty()) {
    F2Vector u = wx.front(), ui = wy.front();
    wx.erase(wx.begin());
    wy.erase(wy.begin());
    std::size_t partner = wx.size();
    for (std::size_t j = 0; j < wx.size(); ++j)
      if (symp_inner(u, wx[j])) {
        partner = j;
        break;
      }
    if (partner == wx.size()) {
      singles.push_back(u);
      single_images.push_back(ui);
      continue;
    }
    F2Vector v = wx[partner], vi = wy[partner];
    wx.erase(wx.begin() + partner);
    wy.erase(wy.begin() + partner);
    for (std::size_t l = 0; l < wx.size(); ++l) {
      if (symp_inner(wx[l], v)) {
        wx[l] ^= u;
        wy[l] ^= ui;
      }
      if (symp_inner(wx[l], u)) {
        wx[l] ^= v;
        wy[l] ^= vi;
      }
    }
    pairs.emplace_back(u, v);
    pair_images.emplace_back(ui, vi);
  }

  ConstraintSystem sys;
  sys.m = m;
  sys.basis = complete_basis(pairs, singles, m);
  sys.images_u.assign(m, std::nullopt);
  sys.images_v.assign(m, std::nullopt);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    sys.images_u[i] = pair_images[i].first;
    sys.images_v[i] = pair_images[i].second;
  }
  for (std::size_t s = 0; s < singles.size(); ++s)
    sys.images_u[pairs.size() + s] = single_images[s];
  return sys;
}

std::vector<SympMatrix> enumerate_group(std::size_t m) {
  if (m > 2) throw TooLarge("enumerate_group supports m <= 2");
  std::size_t d = 2 * m;
  std::vector<SympMatrix> out;
  std::uint64_t total = std::uint64_t{1} << (d * d);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    F2Matrix f(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if ((mask >> (i * d + j)) & 1) f.set(i, j, true);
    if (is_symplectic(f)) out.push_back({m, f});
  }
  return out;
}

}  // namespace lcs
