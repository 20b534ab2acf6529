#include "wex/fgab/normal_form.hpp"

#include <stdexcept>

namespace wex::fgab {

namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hnf(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.cols()), {}};
  IntMatrix& h = out.H;
  IntMatrix& u = out.U;
  const std::size_t n = m.cols();
  std::size_t col = 0;
  for (std::size_t row = 0; row < m.rows() && col < n; ++row) {
    for (std::size_t j = col + 1; j < n; ++j) {
      if (sgn(h(row, j)) == 0) continue;
      if (sgn(h(row, col)) == 0) {
        h.swap_columns(col, j);
        u.swap_columns(col, j);
        continue;
      }
      const Integer a = h(row, col);
      const Integer b = h(row, j);
      if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
        const Integer q = -(b / a);
        h.add_column_multiple(j, col, q);
        u.add_column_multiple(j, col, q);
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      const Integer bg = -(b / g);
      const Integer ag = a / g;
      h.combine_columns(col, j, s, t, bg, ag);
      u.combine_columns(col, j, s, t, bg, ag);
    }
    if (sgn(h(row, col)) == 0) continue;
    if (sgn(h(row, col)) < 0) {
      h.negate_column(col);
      u.negate_column(col);
    }
    // Size-reduce the earlier columns against the new pivot.
    for (std::size_t k = 0; k < col; ++k) {
      const Integer q = floor_div(h(row, k), h(row, col));
      if (sgn(q) == 0) continue;
      h.add_column_multiple(k, col, -q);
      u.add_column_multiple(k, col, -q);
    }
    out.pivot_rows.push_back(row);
    ++col;
  }
  return out;
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  const std::size_t k = std::min(D.rows(), D.cols());
  for (std::size_t i = 0; i < k; ++i) d.push_back(D(i, i));
  return d;
}

SmithForm snf(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithForm out{m, IntMatrix::identity(rows), IntMatrix::identity(rows), IntMatrix::identity(cols)};
  IntMatrix& d = out.D;

  // Row/column primitives keeping S, S_inv and T in sync with D.
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    out.S.swap_rows(a, b);
    out.S_inv.swap_columns(a, b);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    d.swap_columns(a, b);
    out.T.swap_columns(a, b);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Integer& q) {
    d.add_row_multiple(dst, src, q);
    out.S.add_row_multiple(dst, src, q);
    out.S_inv.add_column_multiple(src, dst, -q);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Integer& q) {
    d.add_column_multiple(dst, src, q);
    out.T.add_column_multiple(dst, src, q);
  };

  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    // Smallest nonzero entry of the trailing block goes to (t, t).
    bool found = false;
    std::size_t bi = t, bj = t;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (sgn(d(i, j)) == 0) continue;
        if (!found || cmpabs(d(i, j), d(bi, bj)) < 0) {
          found = true;
          bi = i;
          bj = j;
        }
      }
    if (!found) break;
    swap_rows(t, bi);
    swap_cols(t, bj);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        add_row(i, t, -trunc_div(d(i, t), d(t, t)));
        if (sgn(d(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        add_col(j, t, -trunc_div(d(t, j), d(t, t)));
        if (sgn(d(t, j)) != 0) clean = false;
      }
      if (!clean) {
        // A remainder survived: bring the smallest one of row/column t to the pivot.
        std::size_t mi = t, mj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (sgn(d(i, t)) != 0 && cmpabs(d(i, t), d(mi, mj)) < 0) {
            mi = i;
            mj = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (sgn(d(t, j)) != 0 && cmpabs(d(t, j), d(mi, mj)) < 0) {
            mi = t;
            mj = j;
          }
        swap_rows(t, mi);
        swap_cols(t, mj);
        continue;
      }
      // Divisibility of the trailing block by the pivot.
      std::size_t offending = rows;
      for (std::size_t i = t + 1; i < rows && offending == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
      if (offending == rows) break;
      add_row(t, offending, 1);
    }
    if (sgn(d(t, t)) < 0) {
      d.negate_row(t);
      out.S.negate_row(t);
      out.S_inv.negate_column(t);
    }
  }
  return out;
}

std::optional<IntMatrix> solve(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
  const HermiteForm hf = hnf(a);
  const std::size_t n = a.cols();
  IntMatrix x(n, b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    IntMatrix residual = b.column(c);
    IntMatrix y(n, 1);
    for (std::size_t j = 0; j < hf.rank(); ++j) {
      const std::size_t p = hf.pivot_rows[j];
      const Integer& pivot = hf.H(p, j);
      if (!mpz_divisible_p(residual(p, 0).get_mpz_t(), pivot.get_mpz_t())) return std::nullopt;
      const Integer q = residual(p, 0) / pivot;
      y(j, 0) = q;
      for (std::size_t i = p; i < a.rows(); ++i) residual(i, 0) -= q * hf.H(i, j);
    }
    if (!residual.is_zero()) return std::nullopt;
    const IntMatrix xc = hf.U * y;
    for (std::size_t i = 0; i < n; ++i) x(i, c) = xc(i, 0);
  }
  return x;
}

IntMatrix nullspace(const IntMatrix& a) {
  const HermiteForm hf = hnf(a);
  std::vector<std::size_t> idx;
  for (std::size_t j = hf.rank(); j < a.cols(); ++j) idx.push_back(j);
  return hf.U.select_columns(idx);
}

Lattice::Lattice(std::size_t ambient_dim) : dim_(ambient_dim), basis_(ambient_dim, 0) {}

Lattice::Lattice(const IntMatrix& generators) : dim_(generators.rows()) {
  HermiteForm hf = hnf(generators);
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < hf.rank(); ++j) idx.push_back(j);
  basis_ = hf.H.select_columns(idx);
  pivots_ = std::move(hf.pivot_rows);
}

IntMatrix Lattice::reduce(const IntMatrix& v) const {
  if (v.rows() != dim_) throw std::invalid_argument("Lattice::reduce: dimension mismatch");
  IntMatrix out = v;
  for (std::size_t c = 0; c < out.cols(); ++c) {
    for (std::size_t j = 0; j < pivots_.size(); ++j) {
      const std::size_t p = pivots_[j];
      const Integer q = floor_div(out(p, c), basis_(p, j));
      if (sgn(q) == 0) continue;
      for (std::size_t i = p; i < dim_; ++i) out(i, c) -= q * basis_(i, j);
    }
  }
  return out;
}

bool Lattice::contains(const IntMatrix& v) const { return reduce(v).is_zero(); }

}  // namespace wex::fgab
