#include "groupdepth/chartab.hpp"

#include <algorithm>
#include <cmath>

namespace groupdepth {

namespace {

using Matrix = std::vector<std::vector<std::uint64_t>>;

Matrix mat_mul(const Matrix &a, const Matrix &b, const Fp &f) {
  const std::size_t n = a.size(), m = b[0].size(), k = b.size();
  Matrix c(n, std::vector<std::uint64_t>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0)
        continue;
      for (std::size_t j = 0; j < m; ++j)
        c[i][j] = f.add(c[i][j], f.mul(a[i][l], b[l][j]));
    }
  return c;
}

// det(t*I - R) by elimination
std::uint64_t charpoly_at(const Matrix &r, std::uint64_t t, const Fp &f) {
  const std::size_t d = r.size();
  Matrix m(d, std::vector<std::uint64_t>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m[i][j] = i == j ? f.sub(t, r[i][j]) : f.neg(r[i][j]);
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    while (piv < d && m[piv][c] == 0)
      ++piv;
    if (piv == d)
      return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = f.neg(det);
    }
    det = f.mul(det, m[c][c]);
    std::uint64_t ic = f.inv(m[c][c]);
    for (std::size_t i = c + 1; i < d; ++i) {
      if (m[i][c] == 0)
        continue;
      std::uint64_t factor = f.mul(m[i][c], ic);
      for (std::size_t j = c; j < d; ++j)
        m[i][j] = f.sub(m[i][j], f.mul(factor, m[c][j]));
    }
  }
  return det;
}

// Newton interpolation from evaluations at 0..d
std::vector<std::uint64_t> charpoly(const Matrix &r, const Fp &f) {
  const std::size_t d = r.size();
  std::vector<std::uint64_t> xs(d + 1), ys(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    xs[i] = i % f.p;
    ys[i] = charpoly_at(r, xs[i], f);
  }
  std::vector<std::uint64_t> dd = ys;
  for (std::size_t j = 1; j <= d; ++j)
    for (std::size_t i = d; i >= j; --i)
      dd[i] = f.mul(f.sub(dd[i], dd[i - 1]), f.inv(f.sub(xs[i], xs[i - j])));
  std::vector<std::uint64_t> coeffs{dd[d]};
  for (std::size_t i = d; i-- > 0;) {
    coeffs.insert(coeffs.begin(), 0);
    for (std::size_t j = 0; j + 1 < coeffs.size(); ++j)
      coeffs[j] = f.sub(coeffs[j], f.mul(coeffs[j + 1], xs[i]));
    coeffs[0] = f.add(coeffs[0], dd[i]);
  }
  if (coeffs.back() != 1)
    throw InternalError("characteristic polynomial is not monic");
  return coeffs;
}

// canonical kernel basis of (R - lambda*I), one vector per free column
std::vector<std::vector<std::uint64_t>> eigen_kernel(const Matrix &r, std::uint64_t lambda,
                                                     const Fp &f) {
  const std::size_t d = r.size();
  Matrix m(d, std::vector<std::uint64_t>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m[i][j] = i == j ? f.sub(r[i][j], lambda) : r[i][j];

  std::vector<std::size_t> pivot_of_row;
  std::size_t row = 0;
  for (std::size_t col = 0; col < d && row < d; ++col) {
    std::size_t piv = row;
    while (piv < d && m[piv][col] == 0)
      ++piv;
    if (piv == d)
      continue;
    std::swap(m[piv], m[row]);
    std::uint64_t ic = f.inv(m[row][col]);
    for (std::size_t j = col; j < d; ++j)
      m[row][j] = f.mul(m[row][j], ic);
    for (std::size_t i = 0; i < d; ++i) {
      if (i == row || m[i][col] == 0)
        continue;
      std::uint64_t factor = m[i][col];
      for (std::size_t j = col; j < d; ++j)
        m[i][j] = f.sub(m[i][j], f.mul(factor, m[row][j]));
    }
    pivot_of_row.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(d, false);
  for (auto c : pivot_of_row)
    is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> kernel;
  for (std::size_t freec = 0; freec < d; ++freec) {
    if (is_pivot[freec])
      continue;
    std::vector<std::uint64_t> v(d, 0);
    v[freec] = 1;
    for (std::size_t rr = 0; rr < pivot_of_row.size(); ++rr)
      v[pivot_of_row[rr]] = f.neg(m[rr][freec]);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

// coordinates of the columns of W in the column space of B (s x d, full rank)
Matrix coords_in_basis(const Matrix &b, const Matrix &w, const Fp &f) {
  const std::size_t s = b.size(), d = b[0].size(), m = w[0].size();
  Matrix aug(s, std::vector<std::uint64_t>(d + m));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < d; ++j)
      aug[i][j] = b[i][j];
    for (std::size_t j = 0; j < m; ++j)
      aug[i][d + j] = w[i][j];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < d && row < s; ++col) {
    std::size_t piv = row;
    while (piv < s && aug[piv][col] == 0)
      ++piv;
    if (piv == s)
      throw InternalError("subspace basis is rank-deficient");
    std::swap(aug[piv], aug[row]);
    std::uint64_t ic = f.inv(aug[row][col]);
    for (std::size_t j = col; j < d + m; ++j)
      aug[row][j] = f.mul(aug[row][j], ic);
    for (std::size_t i = 0; i < s; ++i) {
      if (i == row || aug[i][col] == 0)
        continue;
      std::uint64_t factor = aug[i][col];
      for (std::size_t j = col; j < d + m; ++j)
        aug[i][j] = f.sub(aug[i][j], f.mul(factor, aug[row][j]));
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < s; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (aug[i][d + j] != 0)
        throw InternalError("class matrix does not preserve an eigenspace");
  Matrix out(d, std::vector<std::uint64_t>(m, 0));
  for (std::size_t rr = 0; rr < pivot_col.size(); ++rr)
    for (std::size_t j = 0; j < m; ++j)
      out[pivot_col[rr]][j] = aug[rr][d + j];
  return out;
}

std::uint64_t isqrt64(std::uint64_t n) {
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(double(n)));
  while (r > 0 && r * r > n)
    --r;
  while ((r + 1) * (r + 1) <= n)
    ++r;
  return r;
}

CharTableModP attempt_table(const ClassData &cd, std::uint64_t p) {
  const std::size_t s = cd.count();
  const Fp f{p};

  std::vector<Matrix> spaces;
  {
    Matrix full(s, std::vector<std::uint64_t>(s, 0));
    for (std::size_t i = 0; i < s; ++i)
      full[i][i] = 1;
    spaces.push_back(std::move(full));
  }

  // split common eigenspaces by the class matrices in canonical index order
  for (unsigned ci = 1; ci < s; ++ci) {
    bool done = std::all_of(spaces.begin(), spaces.end(),
                            [](const Matrix &sp) { return sp[0].size() == 1; });
    if (done)
      break;
    Matrix a = class_matrix(cd, ci);
    for (auto &row : a)
      for (auto &x : row)
        x %= p;
    std::vector<Matrix> next;
    for (const Matrix &basis : spaces) {
      const std::size_t d = basis[0].size();
      if (d == 1) {
        next.push_back(basis);
        continue;
      }
      Matrix ab = mat_mul(a, basis, f);
      Matrix r = coords_in_basis(basis, ab, f);
      auto roots = poly_roots(charpoly(r, f), f);
      std::size_t claimed = 0;
      for (std::uint64_t lambda : roots) {
        auto kernel = eigen_kernel(r, lambda, f);
        if (kernel.empty())
          throw InternalError("eigenvalue with an empty eigenspace");
        Matrix kcols(d, std::vector<std::uint64_t>(kernel.size()));
        for (std::size_t j = 0; j < kernel.size(); ++j)
          for (std::size_t i = 0; i < d; ++i)
            kcols[i][j] = kernel[j][i];
        next.push_back(mat_mul(basis, kcols, f));
        claimed += kernel.size();
      }
      if (claimed != d)
        throw InternalError("eigenspaces of a class matrix do not fill the space");
    }
    spaces = std::move(next);
  }

  for (const auto &sp : spaces)
    if (sp[0].size() != 1)
      throw InternalError("simultaneous diagonalization incomplete");

  const std::uint64_t order = cd.group_order;
  const std::uint64_t order_mod = order % p;
  const std::uint64_t isq = isqrt64(order);

  CharTableModP table;
  table.p = p;
  table.e = cd.exponent();
  table.omega = element_of_order(table.e, p);

  // central character vectors -> characters
  std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> rows;
  for (const auto &sp : spaces) {
    std::vector<std::uint64_t> v(s);
    for (std::size_t k = 0; k < s; ++k)
      v[k] = sp[k][0];
    if (v[0] == 0)
      throw InternalError("central character vanishes on the identity class");
    std::uint64_t scale = f.inv(v[0]);
    for (auto &x : v)
      x = f.mul(x, scale);

    std::uint64_t denom = 0;
    for (std::size_t k = 0; k < s; ++k)
      denom = f.add(denom, f.mul(f.mul(v[k], v[cd.inverse_class[k]]),
                                 f.inv(cd.sizes[k] % p)));
    if (denom == 0)
      throw InternalError("degree recovery hit a zero denominator");
    std::uint64_t deg_sq = f.mul(order_mod, f.inv(denom));
    auto root = sqrt_mod(deg_sq, p);
    if (!root)
      throw InternalError("character degree is not a square residue");
    std::uint64_t deg = std::min(*root, p - *root);
    if (deg == 0 || deg > isq)
      throw InternalError("recovered character degree out of range");

    std::vector<std::uint64_t> row(s);
    for (std::size_t k = 0; k < s; ++k)
      row[k] = f.mul(f.mul(v[k], deg % p), f.inv(cd.sizes[k] % p));
    rows.emplace_back(deg, std::move(row));
  }

  std::sort(rows.begin(), rows.end());
  std::uint64_t deg_sum = 0;
  for (auto &[deg, row] : rows) {
    deg_sum += deg * deg;
    table.degrees.push_back(deg);
    table.values.push_back(std::move(row));
  }
  if (deg_sum != order)
    throw InternalError("degrees fail the sum-of-squares identity");

  verify_character_table(table, cd);
  return table;
}

} // namespace

std::vector<std::vector<std::uint64_t>> class_matrix(const ClassData &cd, unsigned i) {
  const std::size_t s = cd.count();
  Matrix a(s, std::vector<std::uint64_t>(s, 0));
  cd.index.for_each_in_class(i, [&](const Permutation &x) {
    Permutation xi = x.inverse();
    for (std::size_t k = 0; k < s; ++k) {
      auto j = cd.class_of(xi * cd.reps[k]);
      if (!j)
        throw InternalError("class matrix lookup failed");
      ++a[*j][k];
    }
  });
  for (std::size_t j = 0; j < s; ++j) {
    std::uint64_t lhs = 0;
    for (std::size_t k = 0; k < s; ++k)
      lhs += a[j][k] * cd.sizes[k];
    if (lhs != cd.sizes[i] * cd.sizes[j])
      throw InternalError("class matrix row-sum identity failed");
  }
  return a;
}

CharTableModP character_table(const ClassData &cd, std::optional<std::uint64_t> prime) {
  const std::uint64_t e = cd.exponent();
  if (prime) {
    std::uint64_t p = *prime;
    if (!is_prime(p) || (e > 1 && p % e != 1) || p <= cd.group_order)
      throw std::invalid_argument(
          "prime must be congruent to 1 mod exp(G) and exceed |G|");
    return attempt_table(cd, p);
  }
  std::uint64_t p = choose_prime(cd.group_order, e);
  for (int tries = 0;; ++tries) {
    try {
      return attempt_table(cd, p);
    } catch (const InternalError &) {
      if (tries >= 2)
        throw;
      p = choose_prime(p, e); // move to the next valid prime
    }
  }
}

void verify_character_table(const CharTableModP &table, const ClassData &cd) {
  const std::size_t s = cd.count();
  const Fp f{table.p};
  if (table.values.size() != s)
    throw InternalError("table has the wrong number of rows");
  const std::uint64_t order_mod = cd.group_order % table.p;

  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      std::uint64_t sum = 0;
      for (std::size_t k = 0; k < s; ++k)
        sum = f.add(sum, f.mul(cd.sizes[k] % table.p,
                               f.mul(table.values[i][k],
                                     table.values[j][cd.inverse_class[k]])));
      std::uint64_t expect = i == j ? order_mod : 0;
      if (sum != expect)
        throw InternalError("row orthogonality failed");
    }

  for (std::size_t k = 0; k < s; ++k)
    for (std::size_t l = 0; l < s; ++l) {
      std::uint64_t sum = 0;
      for (std::size_t i = 0; i < s; ++i)
        sum = f.add(sum, f.mul(table.values[i][k],
                               table.values[i][cd.inverse_class[l]]));
      std::uint64_t expect = k == l ? cd.centralizer_orders[k] % table.p : 0;
      if (sum != expect)
        throw InternalError("column orthogonality failed");
    }
}

} // namespace groupdepth
