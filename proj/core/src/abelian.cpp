#include "alexmod/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace alexmod {

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != static_cast<size_t>(rows) * cols)
    throw std::invalid_argument("entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
  IntMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += x * rhs.at(k, j);
    }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

std::vector<Int> IntMatrix::col(int j) const {
  std::vector<Int> c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
  if (x.size() != static_cast<size_t>(cols_))
    throw std::invalid_argument("dimension mismatch");
  std::vector<Int> y(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) y[i] += at(i, j) * x[j];
  return y;
}

bool IntMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

IntMatrix IntMatrix::hcat(const IntMatrix& extra) const {
  if (rows_ != extra.rows_) throw std::invalid_argument("row count mismatch");
  IntMatrix out(rows_, cols_ + extra.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (int j = 0; j < extra.cols_; ++j) out.at(i, cols_ + j) = extra.at(i, j);
  }
  return out;
}

IntMatrix IntMatrix::from_columns(int ambient,
                                  const std::vector<std::vector<Int>>& cols) {
  IntMatrix out(ambient, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != static_cast<size_t>(ambient))
      throw std::invalid_argument("column length mismatch");
    for (int i = 0; i < ambient; ++i) out.at(i, j) = cols[j][i];
  }
  return out;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << rows_ << " " << cols_ << "\n";
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
    os << "\n";
  }
  return os.str();
}

namespace {

// Pivot with smallest nonzero absolute value in the trailing submatrix,
// ties broken by lowest (row, col).
bool find_pivot(const IntMatrix& d, int t, int& pi, int& pj) {
  bool found = false;
  Int best;
  for (int i = t; i < d.rows(); ++i)
    for (int j = t; j < d.cols(); ++j) {
      const Int& x = d.at(i, j);
      if (x == 0) continue;
      Int ax = abs(x);
      if (!found || ax < best) {
        found = true;
        best = ax;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a, bool track_v) {
  SnfResult r;
  r.d = a;
  r.u = IntMatrix::identity(a.rows());
  if (track_v) r.v = IntMatrix::identity(a.cols());
  IntMatrix& d = r.d;
  IntMatrix& u = r.u;
  IntMatrix& v = r.v;

  auto row_op = [&](int i, int t, const Int& q) {  // row_i -= q * row_t
    for (int k = 0; k < d.cols(); ++k) d.at(i, k) -= q * d.at(t, k);
    for (int k = 0; k < u.cols(); ++k) u.at(i, k) -= q * u.at(t, k);
  };
  auto col_op = [&](int j, int t, const Int& q) {  // col_j -= q * col_t
    for (int k = 0; k < d.rows(); ++k) d.at(k, j) -= q * d.at(k, t);
    for (int k = 0; k < v.rows(); ++k) v.at(k, j) -= q * v.at(k, t);
  };

  const int n = std::min(a.rows(), a.cols());
  int t = 0;
  for (; t < n; ++t) {
    int pi, pj;
    if (!find_pivot(d, t, pi, pj)) break;
    d.swap_rows(t, pi);
    u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    v.swap_cols(t, pj);

    for (;;) {
      bool retry = false;
      for (int i = t + 1; i < d.rows(); ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t);  // truncated
        if (q != 0) row_op(i, t, q);
        if (d.at(i, t) != 0) retry = true;
      }
      for (int j = t + 1; j < d.cols(); ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        if (q != 0) col_op(j, t, q);
        if (d.at(t, j) != 0) retry = true;
      }
      if (retry) {
        // Some remainder is strictly smaller than the pivot; re-pick.
        if (!find_pivot(d, t, pi, pj))
          throw std::logic_error("pivot vanished");
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        continue;
      }
      // Cross is clear; enforce d_t | remaining entries.
      bool fixed = true;
      for (int i = t + 1; i < d.rows() && fixed; ++i)
        for (int j = t + 1; j < d.cols() && fixed; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            Int minus_one = -1;
            row_op(t, i, minus_one);  // row_t += row_i
            fixed = false;
          }
      if (fixed) break;
    }

    if (d.at(t, t) < 0) {
      for (int k = 0; k < d.cols(); ++k) d.at(t, k) = -d.at(t, k);
      for (int k = 0; k < u.cols(); ++k) u.at(t, k) = -u.at(t, k);
    }
  }
  r.rank = t;
  return r;
}

Int AbelianGroup::order() const {
  if (free_rank > 0) throw std::domain_error("infinite group has no order");
  Int n = 1;
  for (const auto& d : torsion) n *= d;
  return n;
}

std::string AbelianGroup::str() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const auto& d : torsion) {
    if (!first) os << " x ";
    os << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

bool operator<(const AbelianElement& a, const AbelianElement& b) {
  if (a.free_part != b.free_part) return a.free_part < b.free_part;
  return a.torsion_part < b.torsion_part;
}

AbelianElement ab_zero(const AbelianGroup& g) {
  AbelianElement e;
  e.free_part.resize(g.free_rank);
  e.torsion_part.resize(g.torsion.size());
  return e;
}

AbelianElement ab_normalize(const AbelianGroup& g, AbelianElement e) {
  if (e.free_part.size() != static_cast<size_t>(g.free_rank) ||
      e.torsion_part.size() != g.torsion.size())
    throw std::invalid_argument("element shape does not match group");
  for (size_t i = 0; i < g.torsion.size(); ++i) {
    mpz_fdiv_r(e.torsion_part[i].get_mpz_t(), e.torsion_part[i].get_mpz_t(),
               g.torsion[i].get_mpz_t());
  }
  return e;
}

AbelianElement ab_add(const AbelianGroup& g, const AbelianElement& a,
                      const AbelianElement& b) {
  AbelianElement e = a;
  for (size_t i = 0; i < e.free_part.size(); ++i)
    e.free_part[i] += b.free_part[i];
  for (size_t i = 0; i < e.torsion_part.size(); ++i)
    e.torsion_part[i] += b.torsion_part[i];
  return ab_normalize(g, std::move(e));
}

AbelianElement ab_neg(const AbelianGroup& g, const AbelianElement& a) {
  AbelianElement e = a;
  for (auto& x : e.free_part) x = -x;
  for (auto& x : e.torsion_part) x = -x;
  return ab_normalize(g, std::move(e));
}

AbelianElement ab_scale(const AbelianGroup& g, const Int& k,
                        const AbelianElement& a) {
  AbelianElement e = a;
  for (auto& x : e.free_part) x *= k;
  for (auto& x : e.torsion_part) x *= k;
  return ab_normalize(g, std::move(e));
}

bool ab_is_zero(const AbelianElement& a) {
  auto z = [](const Int& x) { return x == 0; };
  return std::all_of(a.free_part.begin(), a.free_part.end(), z) &&
         std::all_of(a.torsion_part.begin(), a.torsion_part.end(), z);
}

Int ab_order(const AbelianGroup& g, const AbelianElement& a) {
  for (const auto& x : a.free_part)
    if (x != 0) return 0;
  Int ord = 1;
  for (size_t i = 0; i < a.torsion_part.size(); ++i) {
    Int gd;
    mpz_gcd(gd.get_mpz_t(), a.torsion_part[i].get_mpz_t(),
            g.torsion[i].get_mpz_t());
    Int o = g.torsion[i] / gd;
    mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), o.get_mpz_t());
  }
  return ord;
}

std::vector<AbelianElement> ab_enumerate(const AbelianGroup& g) {
  if (!g.is_finite()) throw std::domain_error("cannot enumerate infinite group");
  Int n = g.order();
  if (!n.fits_slong_p()) throw std::domain_error("group too large to enumerate");
  std::vector<AbelianElement> out;
  out.reserve(n.get_si());
  AbelianElement e = ab_zero(g);
  const size_t k = g.torsion.size();
  for (;;) {
    out.push_back(e);
    // increment mixed-radix counter, last coordinate fastest
    size_t i = k;
    while (i > 0) {
      --i;
      e.torsion_part[i] += 1;
      if (e.torsion_part[i] < g.torsion[i]) break;
      e.torsion_part[i] = 0;
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

long ab_index(const AbelianGroup& g, const AbelianElement& e) {
  long idx = 0;
  for (size_t i = 0; i < g.torsion.size(); ++i)
    idx = idx * g.torsion[i].get_si() + e.torsion_part[i].get_si();
  return idx;
}

AbelianElement ab_at(const AbelianGroup& g, long index) {
  AbelianElement e = ab_zero(g);
  for (size_t i = g.torsion.size(); i > 0; --i) {
    long d = g.torsion[i - 1].get_si();
    e.torsion_part[i - 1] = index % d;
    index /= d;
  }
  return e;
}

std::string ab_element_str(const AbelianElement& e) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < e.free_part.size(); ++i)
    os << (i ? "," : "") << e.free_part[i].get_str();
  os << ";";
  for (size_t i = 0; i < e.torsion_part.size(); ++i)
    os << (i ? "," : " ") << e.torsion_part[i].get_str();
  os << ")";
  return os.str();
}

AbelianElement AbelianGroupHom::apply(const AbelianElement& e) const {
  AbelianElement out = ab_zero(target);
  int k = 0;
  for (int i = 0; i < source.free_rank; ++i, ++k)
    out = ab_add(target, out, ab_scale(target, e.free_part[i], gen_images[k]));
  for (size_t i = 0; i < source.torsion.size(); ++i, ++k)
    out =
        ab_add(target, out, ab_scale(target, e.torsion_part[i], gen_images[k]));
  return out;
}

AbelianGroupHom make_ab_hom(const AbelianGroup& source,
                            const AbelianGroup& target,
                            std::vector<AbelianElement> gen_images) {
  if (gen_images.size() != static_cast<size_t>(source.num_components()))
    throw std::invalid_argument("one image per canonical generator required");
  for (size_t i = 0; i < source.torsion.size(); ++i) {
    const auto& img = gen_images[source.free_rank + i];
    if (!ab_is_zero(ab_scale(target, source.torsion[i], img)))
      throw std::invalid_argument(
          "torsion generator image not killed by invariant factor");
  }
  return AbelianGroupHom{source, target, std::move(gen_images)};
}

AbelianGroup coker_invariants(const IntMatrix& a) {
  SnfResult f = smith_normal_form(a);
  AbelianGroup g;
  g.free_rank = a.rows() - f.rank;
  for (int i = 0; i < f.rank; ++i)
    if (f.d.at(i, i) >= 2) g.torsion.push_back(f.d.at(i, i));
  return g;
}

IntMatrix lattice_kernel(const IntMatrix& a) {
  SnfResult f = smith_normal_form(a);
  IntMatrix k(a.cols(), a.cols() - f.rank);
  for (int j = f.rank; j < a.cols(); ++j)
    for (int i = 0; i < a.cols(); ++i) k.at(i, j - f.rank) = f.v.at(i, j);
  return k;
}

LatticeSolver::LatticeSolver(IntMatrix a, bool membership_only)
    : a_(std::move(a)),
      f_(smith_normal_form(a_, !membership_only)),
      membership_only_(membership_only) {}

std::optional<std::vector<Int>> LatticeSolver::solve(
    const std::vector<Int>& b) const {
  if (membership_only_)
    throw std::logic_error("solver built in membership-only mode");
  if (b.size() != static_cast<size_t>(a_.rows()))
    throw std::invalid_argument("dimension mismatch");
  std::vector<Int> c = f_.u.apply(b);
  std::vector<Int> y(a_.cols());
  for (int i = 0; i < a_.rows(); ++i) {
    if (i < f_.rank) {
      if (c[i] % f_.d.at(i, i) != 0) return std::nullopt;
      y[i] = c[i] / f_.d.at(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return f_.v.apply(y);
}

bool LatticeSolver::contains(const std::vector<Int>& b) const {
  if (b.size() != static_cast<size_t>(a_.rows()))
    throw std::invalid_argument("dimension mismatch");
  std::vector<Int> c = f_.u.apply(b);
  for (int i = 0; i < a_.rows(); ++i) {
    if (i < f_.rank) {
      if (c[i] % f_.d.at(i, i) != 0) return false;
    } else if (c[i] != 0) {
      return false;
    }
  }
  return true;
}

bool lattice_membership(const std::vector<Int>& b, const IntMatrix& a) {
  return LatticeSolver(a).contains(b);
}

bool sublattice_equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("ambient rank mismatch");
  LatticeSolver sa(a), sb(b);
  for (int j = 0; j < b.cols(); ++j)
    if (!sa.contains(b.col(j))) return false;
  for (int j = 0; j < a.cols(); ++j)
    if (!sb.contains(a.col(j))) return false;
  return true;
}

IntMatrix lattice_basis(const IntMatrix& a) {
  SnfResult f = smith_normal_form(a);
  IntMatrix av = a * f.v;
  IntMatrix basis(a.rows(), f.rank);
  for (int j = 0; j < f.rank; ++j)
    for (int i = 0; i < a.rows(); ++i) basis.at(i, j) = av.at(i, j);
  return basis;
}

AbelianGroup subquotient_invariants(const IntMatrix& generators,
                                    const IntMatrix& relations) {
  if (generators.rows() != relations.rows())
    throw std::invalid_argument("ambient rank mismatch");
  IntMatrix basis = lattice_basis(generators);
  LatticeSolver solver(basis);
  IntMatrix coords(basis.cols(), relations.cols());
  for (int j = 0; j < relations.cols(); ++j) {
    auto x = solver.solve(relations.col(j));
    if (!x)
      throw std::invalid_argument(
          "relation column outside the generator span");
    for (int i = 0; i < basis.cols(); ++i) coords.at(i, j) = (*x)[i];
  }
  return coker_invariants(coords);
}

AbelianElement QuotientPresentation::project(const std::vector<Int>& x) const {
  std::vector<Int> y = u.apply(x);
  AbelianElement e;
  e.free_part.reserve(free_rows.size());
  e.torsion_part.reserve(torsion_rows.size());
  for (int i : free_rows) e.free_part.push_back(y[i]);
  for (int i : torsion_rows) e.torsion_part.push_back(y[i]);
  return ab_normalize(group, std::move(e));
}

std::vector<Int> QuotientPresentation::lift(const AbelianElement& e) const {
  // Solve u * x = y for the coordinate pattern of e; u is unimodular so a
  // solution always exists.
  std::vector<Int> y(u.rows());
  for (size_t k = 0; k < free_rows.size(); ++k)
    y[free_rows[k]] = e.free_part[k];
  for (size_t k = 0; k < torsion_rows.size(); ++k)
    y[torsion_rows[k]] = e.torsion_part[k];
  auto x = LatticeSolver(u).solve(y);
  if (!x) throw std::logic_error("unimodular solve failed");
  return *x;
}

QuotientPresentation quotient_by(int ambient, const IntMatrix& relations) {
  if (relations.rows() != ambient)
    throw std::invalid_argument("relation ambient rank mismatch");
  SnfResult f = smith_normal_form(relations);
  QuotientPresentation q;
  q.u = f.u;
  for (int i = 0; i < ambient; ++i) {
    if (i >= f.rank) {
      q.free_rows.push_back(i);
    } else if (f.d.at(i, i) >= 2) {
      q.torsion_rows.push_back(i);
      q.group.torsion.push_back(f.d.at(i, i));
    }
  }
  q.group.free_rank = static_cast<int>(q.free_rows.size());
  return q;
}

AbelianGroup reduce_invariants_mod(const AbelianGroup& g, const Int& m) {
  if (m < 2) throw std::invalid_argument("modulus must be >= 2");
  AbelianGroup out;
  for (const auto& d : g.torsion) {
    Int gd;
    mpz_gcd(gd.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
    if (gd >= 2) out.torsion.push_back(gd);
  }
  for (int i = 0; i < g.free_rank; ++i) out.torsion.push_back(m);
  return out;
}

}  // namespace alexmod
