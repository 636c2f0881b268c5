#include "gmap/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace gmap {

namespace {

// Partition of the nonzero rows into groups that share no nonzero column.
// Each group lists its rows and the union of their supports, both sorted.
struct Block {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

std::vector<Block> split_blocks(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::ptrdiff_t> owner(m.cols(), -1);
  std::vector<bool> nonzero(n, false);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).is_zero()) continue;
      nonzero[r] = true;
      if (owner[c] < 0) {
        owner[c] = static_cast<std::ptrdiff_t>(r);
      } else {
        parent[find(r)] = find(static_cast<std::size_t>(owner[c]));
      }
    }
  }
  std::vector<std::ptrdiff_t> index(n, -1);
  std::vector<Block> blocks;
  for (std::size_t r = 0; r < n; ++r) {
    if (!nonzero[r]) continue;
    const std::size_t root = find(r);
    if (index[root] < 0) {
      index[root] = static_cast<std::ptrdiff_t>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(index[root])].rows.push_back(r);
  }
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (owner[c] >= 0) {
      blocks[static_cast<std::size_t>(index[find(static_cast<std::size_t>(owner[c]))])].cols.push_back(c);
    }
  }
  return blocks;
}

// Row restricted to `cols`, scaled to a primitive integer vector.
kernels::IntegerRow primitive_row(std::span<const Rational> row, std::span<const std::size_t> cols) {
  mpz_class lcm = 1;
  for (std::size_t c : cols) {
    if (!row[c].is_zero()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), row[c].raw().get_den_mpz_t());
  }
  kernels::IntegerRow out(cols.size());
  mpz_class gcd = 0;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Rational& q = row[cols[k]];
    if (q.is_zero()) continue;
    mpz_divexact(out[k].get_mpz_t(), lcm.get_mpz_t(), q.raw().get_den_mpz_t());
    out[k] *= q.raw().get_num();
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), out[k].get_mpz_t());
  }
  if (gcd > 1) {
    for (auto& x : out) {
      if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), gcd.get_mpz_t());
    }
  }
  return out;
}

kernels::IntegerRows block_rows(const RationalMatrix& m, const Block& b) {
  kernels::IntegerRows rows;
  rows.reserve(b.rows.size());
  for (std::size_t r : b.rows) rows.push_back(primitive_row(m.row(r), b.cols));
  return rows;
}

} // namespace

RationalMatrix RationalMatrix::from_rows(std::span<const RationalVector> rows) {
  std::size_t cols = 0;
  for (const auto& r : rows) cols = std::max(cols, r.size());
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(i * cols));
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RationalVector RationalMatrix::apply(std::span<const Rational> v) const {
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    mpq_class acc;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!v[c].is_zero() && !(*this)(r, c).is_zero()) acc += (*this)(r, c).raw() * v[c].raw();
    }
    out[r] = Rational(acc);
  }
  return out;
}

std::size_t rank(const RationalMatrix& m, kernels::Execution ex) {
  std::size_t total = 0;
  for (const Block& b : split_blocks(m)) {
    auto rows = block_rows(m, b);
    total += kernels::eliminate_rank(rows, ex);
  }
  return total;
}

std::vector<RationalVector> nullspace(const RationalMatrix& m, kernels::Execution ex) {
  // The RREF of a block-diagonal matrix is the union of the blocks' RREFs,
  // so the per-block free-column vectors coincide with the global ones.
  std::vector<std::ptrdiff_t> pivot_row_of(m.cols(), -1);
  std::vector<bool> is_pivot(m.cols(), false);
  std::vector<std::ptrdiff_t> block_of(m.cols(), -1);
  std::vector<std::vector<RationalVector>> block_rref;
  std::vector<Block> blocks = split_blocks(m);
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const Block& b = blocks[bi];
    auto rows = block_rows(m, b);
    const kernels::EchelonForm form = kernels::reduce_echelon(rows, ex);
    std::vector<RationalVector> rref;
    for (std::size_t r = 0; r < form.pivot_columns.size(); ++r) {
      RationalVector row(b.cols.size());
      for (std::size_t k = 0; k < b.cols.size(); ++k) {
        if (sgn(rows[r][k]) != 0) row[k] = Rational(rows[r][k], form.denominator);
      }
      rref.push_back(std::move(row));
      is_pivot[b.cols[form.pivot_columns[r]]] = true;
    }
    for (std::size_t c : b.cols) block_of[c] = static_cast<std::ptrdiff_t>(bi);
    block_rref.push_back(std::move(rref));
    // Map block-local pivot index -> global column.
    for (std::size_t r = 0; r < form.pivot_columns.size(); ++r) {
      pivot_row_of[b.cols[form.pivot_columns[r]]] = static_cast<std::ptrdiff_t>(r);
    }
  }

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    if (block_of[free] >= 0) {
      const auto bi = static_cast<std::size_t>(block_of[free]);
      const Block& b = blocks[bi];
      const auto local = static_cast<std::size_t>(
          std::lower_bound(b.cols.begin(), b.cols.end(), free) - b.cols.begin());
      for (std::size_t c : b.cols) {
        if (pivot_row_of[c] < 0 || !is_pivot[c]) continue;
        const Rational& entry = block_rref[bi][static_cast<std::size_t>(pivot_row_of[c])][local];
        if (!entry.is_zero()) v[c] = -entry;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace gmap
