#include "mfcalc/smith.hpp"

#include <algorithm>
#include <optional>

namespace mfcalc {

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Nonzero entry of least absolute value in d[t.., t..].
std::optional<Position> min_entry(const IntMatrix& d, std::size_t t) {
  std::optional<Position> best;
  for (std::size_t r = t; r < d.rows(); ++r) {
    for (std::size_t c = t; c < d.cols(); ++c) {
      const Integer& v = d(r, c);
      if (v == 0) continue;
      if (!best || mpz_cmpabs(v.get_mpz_t(), d(best->row, best->col).get_mpz_t()) < 0) {
        best = Position{r, c};
        if (v == 1 || v == -1) return best;
      }
    }
  }
  return best;
}

// In-place diagonalization of d. When u and v are given they accumulate the
// row and column operations so that d_final = u * d_initial * v.
void diagonalize(IntMatrix& d, IntMatrix* u, IntMatrix* v) {
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    if (u) u->swap_rows(a, b);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    if (v) v->swap_cols(a, b);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Integer& f) {
    d.add_row_multiple(dst, src, f);
    if (u) u->add_row_multiple(dst, src, f);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Integer& f) {
    d.add_col_multiple(dst, src, f);
    if (v) v->add_col_multiple(dst, src, f);
  };

  const std::size_t limit = std::min(d.rows(), d.cols());
  Integer q;
  for (std::size_t t = 0; t < limit; ++t) {
    auto start = min_entry(d, t);
    if (!start) break;
    swap_rows(t, start->row);
    swap_cols(t, start->col);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; make it the pivot.
        std::optional<Position> best;
        for (std::size_t i = t + 1; i < d.rows(); ++i) {
          if (d(i, t) != 0 && (!best || mpz_cmpabs(d(i, t).get_mpz_t(), d(best->row, best->col).get_mpz_t()) < 0)) {
            best = Position{i, t};
          }
        }
        for (std::size_t j = t + 1; j < d.cols(); ++j) {
          if (d(t, j) != 0 && (!best || mpz_cmpabs(d(t, j).get_mpz_t(), d(best->row, best->col).get_mpz_t()) < 0)) {
            best = Position{t, j};
          }
        }
        if (best->col == t) {
          swap_rows(t, best->row);
        } else {
          swap_cols(t, best->col);
        }
        continue;
      }

      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < d.rows() && !offending; ++i) {
        for (std::size_t j = t + 1; j < d.cols(); ++j) {
          if (d(i, j) != 0 &&
              !mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
        }
      }
      if (!offending) break;
      // Pull the offending row into row t; the next sweep shrinks the pivot.
      add_row(t, *offending, Integer(1));
    }

    if (d(t, t) < 0) {
      d.negate_row(t);
      if (u) u->negate_row(t);
    }
  }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm s{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  diagonalize(s.d, &s.u, &s.v);
  return s;
}

std::vector<Integer> elementary_divisors(const IntMatrix& a) {
  IntMatrix d = a;
  diagonalize(d, nullptr, nullptr);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
    if (d(i, i) == 0) break;
    out.push_back(d(i, i));
  }
  return out;
}

FgAbGroup cokernel(const IntMatrix& a) {
  std::vector<Integer> divisors = elementary_divisors(a);
  std::uint64_t free_rank = a.rows() - divisors.size();
  std::erase_if(divisors, [](const Integer& d) { return d == 1; });
  return FgAbGroup::from_elementary_divisors(free_rank, std::move(divisors));
}

}  // namespace mfcalc
