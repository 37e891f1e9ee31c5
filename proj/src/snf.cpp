#include "meridian/snf.hpp"

#include <sstream>
#include <stdexcept>

namespace meridian {

namespace {

// Smallest nonzero absolute value in the trailing submatrix starting at
// (t, t), ties broken in row-major order. Returns false when the submatrix is
// zero.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < d.rows(); ++i) {
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d.at(i, j) == 0) continue;
      Int v = abs(d.at(i, j));
      if (!found || v < best) {
        found = true;
        best = std::move(v);
        pr = i;
        pc = j;
      }
    }
  }
  return found;
}

bool cross_cleared(const IntMatrix& d, std::size_t t) {
  for (std::size_t i = t + 1; i < d.rows(); ++i) {
    if (d.at(i, t) != 0) return false;
  }
  for (std::size_t j = t + 1; j < d.cols(); ++j) {
    if (d.at(t, j) != 0) return false;
  }
  return true;
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& a) {
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  SNFResult out{IntMatrix::identity(r), a, IntMatrix::identity(c)};
  IntMatrix& d = out.d;
  IntMatrix& u = out.u;
  IntMatrix& v = out.v;

  const std::size_t steps = r < c ? r : c;
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pr = t, pc = t;
    if (!find_pivot(d, t, pr, pc)) break;
    for (;;) {
      d.swap_rows(t, pr);
      u.swap_rows(t, pr);
      d.swap_cols(t, pc);
      v.swap_cols(t, pc);

      for (std::size_t i = t + 1; i < r; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);
        if (q != 0) {
          d.add_row_multiple(i, t, -q);
          u.add_row_multiple(i, t, -q);
        }
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        if (q != 0) {
          d.add_col_multiple(j, t, -q);
          v.add_col_multiple(j, t, -q);
        }
      }

      if (!cross_cleared(d, t)) {
        // Remainders smaller than the pivot are now present; pick again.
        find_pivot(d, t, pr, pc);
        continue;
      }

      // Enforce the divisibility chain: fold in the first entry the pivot
      // does not divide and re-clear.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < r && divides_all; ++i) {
        for (std::size_t j = t + 1; j < c; ++j) {
          if (d.at(i, j) % d.at(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
      find_pivot(d, t, pr, pc);
    }
    if (d.at(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return out;
}

std::optional<Int> AbelianInvariants::group_order() const {
  if (free_rank > 0) return std::nullopt;
  Int order = 1;
  for (const Int& t : torsion) order *= t;
  return order;
}

std::string AbelianInvariants::to_string() const {
  if (free_rank == 0 && torsion.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  if (free_rank == 1) {
    out << "Z";
    first = false;
  } else if (free_rank > 1) {
    out << "Z^" << free_rank;
    first = false;
  }
  for (const Int& t : torsion) {
    if (!first) out << " + ";
    out << "Z/" << t;
    first = false;
  }
  return out.str();
}

IntMatrix relation_matrix(const Presentation& p) {
  const std::size_t n = p.generator_count();
  IntMatrix m(p.relators().size(), n);
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    for (const Letter& l : p.relators()[i]) {
      m.at(i, static_cast<std::size_t>(l.gen)) += l.sign;
    }
  }
  return m;
}

AbelianInvariants abelianization(const Presentation& p) {
  const IntMatrix m = relation_matrix(p);
  const SNFResult snf = smith_normal_form(m);
  AbelianInvariants inv;
  std::size_t nonzero = 0;
  const std::size_t diag = m.rows() < m.cols() ? m.rows() : m.cols();
  for (std::size_t i = 0; i < diag; ++i) {
    const Int& d = snf.d.at(i, i);
    if (d == 0) continue;
    ++nonzero;
    if (d >= 2) inv.torsion.push_back(d);
  }
  inv.free_rank = m.cols() - nonzero;
  return inv;
}

bool hom_to_cyclic_consistent(const Presentation& p, std::span<const long long> values,
                              long long modulus) {
  if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
  if (values.size() != p.generator_count()) {
    throw std::invalid_argument("one value per generator required");
  }
  for (const Word& r : p.relators()) {
    long long weight = 0;
    for (const Letter& l : r) {
      weight = (weight + l.sign * (values[static_cast<std::size_t>(l.gen)] % modulus)) % modulus;
    }
    if (weight % modulus != 0) return false;
  }
  return true;
}

}  // namespace meridian
