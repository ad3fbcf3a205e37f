#include "groupdepth/inclusion.hpp"

#include <algorithm>
#include <numeric>

namespace groupdepth {

InclusionMatrix inclusion_matrix(const CharTableModP &tabh, const CharTableModP &tabg,
                                 const ClassFusion &fus, const ClassData &cdh,
                                 const ClassData &cdg) {
  if (tabh.p != tabg.p)
    throw std::invalid_argument("tables must share one prime");
  const std::size_t r = tabh.size(), s = tabg.size();
  const std::uint64_t index = cdg.group_order / cdh.group_order;

  InclusionMatrix out;
  out.row_degrees = tabh.degrees;
  out.col_degrees = tabg.degrees;
  out.m.assign(r, std::vector<std::uint64_t>(s, 0));

  for (std::size_t i = 0; i < r; ++i) {
    ClassFunction ind = induce(table_row(tabh, cdh, i), fus, cdh, cdg);
    for (std::size_t j = 0; j < s; ++j)
      out.m[i][j] = inner_product(ind, table_row(tabg, cdg, j), cdg);
  }

  // irredundancy and degree bookkeeping on both sides
  for (std::size_t i = 0; i < r; ++i) {
    std::uint64_t sum = 0;
    bool nonzero = false;
    for (std::size_t j = 0; j < s; ++j) {
      sum += out.m[i][j] * out.col_degrees[j];
      nonzero |= out.m[i][j] != 0;
    }
    if (!nonzero)
      throw InternalError("inclusion matrix has a zero row");
    if (sum != out.row_degrees[i] * index)
      throw InternalError("row degree bookkeeping failed");
  }
  for (std::size_t j = 0; j < s; ++j) {
    std::uint64_t sum = 0;
    bool nonzero = false;
    for (std::size_t i = 0; i < r; ++i) {
      sum += out.m[i][j] * out.row_degrees[i];
      nonzero |= out.m[i][j] != 0;
    }
    if (!nonzero)
      throw InternalError("inclusion matrix has a zero column");
    if (sum != out.col_degrees[j])
      throw InternalError("column degree bookkeeping failed");
  }
  return out;
}

InclusionMatrix InclusionMatrix::canonical() const {
  const std::size_t r = rows(), s = cols();
  std::vector<std::size_t> rp(r), cp(s);
  std::iota(rp.begin(), rp.end(), 0);
  std::iota(cp.begin(), cp.end(), 0);

  // iterated refinement on integer keys only, so the result does not
  // depend on the residue ordering of any particular prime
  for (int round = 0; round < 8; ++round) {
    auto old_rp = rp;
    auto old_cp = cp;
    std::stable_sort(cp.begin(), cp.end(), [&](std::size_t a, std::size_t b) {
      if (col_degrees[a] != col_degrees[b])
        return col_degrees[a] < col_degrees[b];
      for (std::size_t i = 0; i < r; ++i)
        if (m[rp[i]][a] != m[rp[i]][b])
          return m[rp[i]][a] < m[rp[i]][b];
      return false;
    });
    std::stable_sort(rp.begin(), rp.end(), [&](std::size_t a, std::size_t b) {
      if (row_degrees[a] != row_degrees[b])
        return row_degrees[a] < row_degrees[b];
      for (std::size_t j = 0; j < s; ++j)
        if (m[a][cp[j]] != m[b][cp[j]])
          return m[a][cp[j]] < m[b][cp[j]];
      return false;
    });
    if (rp == old_rp && cp == old_cp)
      break;
  }

  InclusionMatrix out;
  out.row_degrees.reserve(r);
  out.col_degrees.reserve(s);
  for (auto i : rp)
    out.row_degrees.push_back(row_degrees[i]);
  for (auto j : cp)
    out.col_degrees.push_back(col_degrees[j]);
  out.m.assign(r, std::vector<std::uint64_t>(s));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < s; ++j)
      out.m[i][j] = m[rp[i]][cp[j]];
  return out;
}

bool permutation_equivalent(const std::vector<std::vector<std::uint64_t>> &a,
                            const std::vector<std::vector<std::uint64_t>> &b) {
  if (a.size() != b.size())
    return false;
  if (a.empty())
    return true;
  if (a[0].size() != b[0].size())
    return false;
  const std::size_t s = a[0].size();
  std::vector<std::size_t> cp(s);
  std::iota(cp.begin(), cp.end(), 0);

  auto sorted_rows = [](const std::vector<std::vector<std::uint64_t>> &m) {
    auto rows = m;
    std::sort(rows.begin(), rows.end());
    return rows;
  };
  const auto target = sorted_rows(a);

  do {
    std::vector<std::vector<std::uint64_t>> perm(b.size(),
                                                 std::vector<std::uint64_t>(s));
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < s; ++j)
        perm[i][j] = b[i][cp[j]];
    if (sorted_rows(perm) == target)
      return true;
  } while (std::next_permutation(cp.begin(), cp.end()));
  return false;
}

// ---------------------------------------------------------------------------

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

bool BitMatrix::get(std::size_t i, std::size_t j) const {
  return (bits_[i * words_ + j / 64] >> (j % 64)) & 1;
}

void BitMatrix::set(std::size_t i, std::size_t j) {
  bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
}

bool BitMatrix::all_true() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t w = 0; w + 1 < words_; ++w)
      if (bits_[i * words_ + w] != ~std::uint64_t{0})
        return false;
    std::uint64_t last_mask =
        cols_ % 64 == 0 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (cols_ % 64)) - 1);
    if ((bits_[i * words_ + words_ - 1] & last_mask) != last_mask)
      return false;
  }
  return true;
}

bool BitMatrix::subset_of(const BitMatrix &other) const {
  for (std::size_t w = 0; w < bits_.size(); ++w)
    if (bits_[w] & ~other.bits_[w])
      return false;
  return true;
}

BitMatrix BitMatrix::mult(const BitMatrix &other) const {
  BitMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (get(i, k))
        for (std::size_t w = 0; w < other.words_; ++w)
          out.bits_[i * out.words_ + w] |= other.bits_[k * other.words_ + w];
  return out;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j))
        out.set(j, i);
  return out;
}

SupportPowers::SupportPowers(const InclusionMatrix &m)
    : m_(m.rows(), m.cols()) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.m[i][j] != 0)
        m_.set(i, j);
  mt_ = m_.transposed();
  cur_ = m_;
}

void SupportPowers::advance() {
  BitMatrix next = level_ % 2 == 1 ? cur_.mult(mt_) : cur_.mult(m_);
  // two levels apart the support can only grow
  if (level_ >= 2 && !prev_.subset_of(next))
    throw InternalError("support power iteration lost monotonicity");
  prev_same_parity_ = std::move(prev_);
  prev_ = cur_;
  cur_ = std::move(next);
  ++level_;
}

unsigned depth_core_free(const InclusionMatrix &m, unsigned iteration_cap) {
  SupportPowers sp(m);
  while (sp.level() < iteration_cap + 2) {
    if (sp.level() >= 2 && sp.current().all_true())
      return sp.level() + 1;
    sp.advance();
  }
  throw InternalError("support iteration exceeded the bound 2|G:N_G(H)| (core-free criterion)");
}

unsigned depth_general(const InclusionMatrix &m, unsigned iteration_cap) {
  SupportPowers sp(m);
  sp.advance(); // level 2
  sp.advance(); // level 3
  // test d = level-1 each time levels d-1 and d+1 are both available
  while (sp.level() < iteration_cap + 2) {
    if (sp.previous_same_parity().rows() != 0 &&
        sp.current().subset_of(sp.previous_same_parity()))
      return sp.level() - 1;
    sp.advance();
  }
  throw InternalError("support iteration exceeded the bound 2|G:N_G(H)| (general criterion)");
}

} // namespace groupdepth
