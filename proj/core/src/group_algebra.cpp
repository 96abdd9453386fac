#include "alexmod/group_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace alexmod {

GroupAlgebraElement GroupAlgebraElement::zero(const AbelianGroup& g) {
  return GroupAlgebraElement(g);
}

GroupAlgebraElement GroupAlgebraElement::one(const AbelianGroup& g) {
  return monomial(g, ab_zero(g));
}

GroupAlgebraElement GroupAlgebraElement::monomial(const AbelianGroup& g,
                                                  const AbelianElement& h,
                                                  Int coeff) {
  GroupAlgebraElement e(g);
  e.add_term(ab_normalize(g, h), coeff);
  return e;
}

Int GroupAlgebraElement::coeff(const AbelianElement& h) const {
  auto it = terms_.find(h);
  return it == terms_.end() ? Int(0) : it->second;
}

void GroupAlgebraElement::add_term(const AbelianElement& h, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(h, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return a.group_ == b.group_ && a.terms_ == b.terms_;
}

namespace {
void check_same_group(const GroupAlgebraElement& a,
                      const GroupAlgebraElement& b) {
  if (!(a.group() == b.group()))
    throw std::invalid_argument("group algebra elements over different groups");
}
}  // namespace

GroupAlgebraElement GroupAlgebraElement::operator+(
    const GroupAlgebraElement& rhs) const {
  check_same_group(*this, rhs);
  GroupAlgebraElement out = *this;
  for (const auto& [h, c] : rhs.terms_) out.add_term(h, c);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator-(
    const GroupAlgebraElement& rhs) const {
  check_same_group(*this, rhs);
  GroupAlgebraElement out = *this;
  for (const auto& [h, c] : rhs.terms_) out.add_term(h, -c);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator-() const {
  GroupAlgebraElement out(group_);
  for (const auto& [h, c] : terms_) out.terms_.emplace(h, -c);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator*(
    const GroupAlgebraElement& rhs) const {
  check_same_group(*this, rhs);
  GroupAlgebraElement out(group_);
  for (const auto& [h, c] : terms_)
    for (const auto& [k, d] : rhs.terms_)
      out.add_term(ab_add(group_, h, k), c * d);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Int& c) const {
  GroupAlgebraElement out(group_);
  if (c == 0) return out;
  for (const auto& [h, k] : terms_) out.terms_.emplace(h, k * c);
  return out;
}

Int GroupAlgebraElement::augmentation() const {
  Int s = 0;
  for (const auto& [h, c] : terms_) s += c;
  return s;
}

GroupAlgebraElement GroupAlgebraElement::apply_hom(
    const AbelianGroupHom& f) const {
  if (!(f.source == group_))
    throw std::invalid_argument("hom source does not match element group");
  GroupAlgebraElement out(f.target);
  for (const auto& [h, c] : terms_) out.add_term(f.apply(h), c);
  return out;
}

std::string GroupAlgebraElement::str() const {
  if (terms_.empty()) return "0";
  // Single-variable Laurent form when H = Z, generic term list otherwise.
  bool laurent = group_.free_rank == 1 && group_.torsion.empty();
  std::ostringstream os;
  bool first = true;
  for (const auto& [h, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (laurent) {
      const Int& e = h.free_part[0];
      if (e == 0) {
        os << a.get_str();
      } else {
        if (a != 1) os << a.get_str() << "*";
        os << "t";
        if (e != 1) os << "^" << e.get_str();
      }
    } else {
      os << ab_element_str(h) << ": " << a.get_str();
    }
  }
  return os.str();
}

AlgebraMatrix::AlgebraMatrix(AbelianGroup g, int r, int c)
    : group(std::move(g)), rows(r), cols(c) {
  entries.assign(static_cast<size_t>(r) * c, GroupAlgebraElement(group));
}

AlgebraMatrix AlgebraMatrix::transposed() const {
  AlgebraMatrix out(group, cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
  return out;
}

AlgebraMatrix AlgebraMatrix::apply_hom(const AbelianGroupHom& f) const {
  AlgebraMatrix out(f.target, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out.at(i, j) = at(i, j).apply_hom(f);
  return out;
}

IntMatrix regular_matrix(const GroupAlgebraElement& a) {
  const AbelianGroup& g = a.group();
  if (!g.is_finite())
    throw std::domain_error("regular representation requires finite group");
  long n = g.order().get_si();
  IntMatrix m(static_cast<int>(n), static_cast<int>(n));
  for (const auto& [h, c] : a.terms()) {
    for (long k = 0; k < n; ++k) {
      long row = ab_index(g, ab_add(g, h, ab_at(g, k)));
      m.at(static_cast<int>(row), static_cast<int>(k)) += c;
    }
  }
  return m;
}

IntMatrix regular_expand(const AlgebraMatrix& m) {
  if (!m.group.is_finite())
    throw std::domain_error("regular expansion requires finite group");
  long n = m.group.order().get_si();
  IntMatrix out(static_cast<int>(n * m.rows), static_cast<int>(n * m.cols));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      IntMatrix block = regular_matrix(m.at(i, j));
      for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
          out.at(static_cast<int>(i * n + a), static_cast<int>(j * n + b)) =
              block.at(static_cast<int>(a), static_cast<int>(b));
    }
  return out;
}

namespace {

GroupAlgebraElement ga_det(const AlgebraMatrix& m,
                           const std::vector<int>& rows,
                           const std::vector<int>& cols) {
  const size_t k = rows.size();
  if (k == 0) return GroupAlgebraElement::one(m.group);
  if (k == 1) return m.at(rows[0], cols[0]);
  GroupAlgebraElement acc = GroupAlgebraElement::zero(m.group);
  std::vector<int> sub(rows.begin() + 1, rows.end());
  for (size_t j = 0; j < k; ++j) {
    const GroupAlgebraElement& pivot = m.at(rows[0], cols[j]);
    if (pivot.is_zero()) continue;
    std::vector<int> rest;
    rest.reserve(k - 1);
    for (size_t l = 0; l < k; ++l)
      if (l != j) rest.push_back(cols[l]);
    GroupAlgebraElement minor = ga_det(m, sub, rest);
    GroupAlgebraElement term = pivot * minor;
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - (k - i)) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<GroupAlgebraElement> elementary_ideal_generators(
    const AlgebraMatrix& m, int d) {
  const int s = m.rows, r = m.cols;
  const int k = r - d;
  if (k <= 0) return {GroupAlgebraElement::one(m.group)};
  if (k > std::min(s, r)) return {GroupAlgebraElement::zero(m.group)};
  std::vector<GroupAlgebraElement> out;
  std::vector<int> ri(k), ci(k);
  for (int i = 0; i < k; ++i) ri[i] = i;
  do {
    for (int i = 0; i < k; ++i) ci[i] = i;
    do {
      out.push_back(ga_det(m, ri, ci));
    } while (next_combination(ci, r));
  } while (next_combination(ri, s));
  return out;
}

// ---- Laurent helpers ----

namespace {

const AbelianGroup kInfiniteCyclic{1, {}};

void check_laurent(const AbelianGroup& g) {
  if (!(g == kInfiniteCyclic))
    throw std::domain_error("operation requires H infinite cyclic");
}

Int content(const std::vector<Int>& c) {
  Int g = 0;
  for (const auto& x : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

std::vector<Int> primitive(std::vector<Int> c) {
  Int g = content(c);
  if (g > 1)
    for (auto& x : c) x /= g;
  return c;
}

void trim(std::vector<Int>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Pseudo-remainder of a by b (deg a >= deg b >= 0, b nonzero).
std::vector<Int> prem(std::vector<Int> a, const std::vector<Int>& b) {
  const Int& lead = b.back();
  while (a.size() >= b.size()) {
    // a = lead * a - a.back() * t^(da-db) * b
    Int top = a.back();
    for (auto& x : a) x *= lead;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= top * b[i];
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

std::vector<Int> poly_gcd_primitive(std::vector<Int> a, std::vector<Int> b) {
  // Both inputs primitive; result primitive.
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    std::vector<Int> r = primitive(prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() < 0)
    for (auto& x : a) x = -x;
  return a;
}

}  // namespace

LaurentPoly to_laurent(const GroupAlgebraElement& a) {
  check_laurent(a.group());
  LaurentPoly p;
  if (a.is_zero()) return p;
  const auto& terms = a.terms();
  long lo = terms.begin()->first.free_part[0].get_si();
  long hi = terms.rbegin()->first.free_part[0].get_si();
  p.lo = lo;
  p.coeffs.assign(hi - lo + 1, Int(0));
  for (const auto& [h, c] : terms) p.coeffs[h.free_part[0].get_si() - lo] = c;
  return p;
}

GroupAlgebraElement from_laurent(const AbelianGroup& g, const LaurentPoly& p) {
  check_laurent(g);
  GroupAlgebraElement out(g);
  for (size_t i = 0; i < p.coeffs.size(); ++i) {
    if (p.coeffs[i] == 0) continue;
    AbelianElement h = ab_zero(g);
    h.free_part[0] = p.lo + static_cast<long>(i);
    out.add_term(h, p.coeffs[i]);
  }
  return out;
}

GroupAlgebraElement laurent_normalize(const GroupAlgebraElement& a) {
  if (a.is_zero()) return a;
  LaurentPoly p = to_laurent(a);
  p.lo = 0;
  if (p.coeffs.back() < 0)
    for (auto& x : p.coeffs) x = -x;
  return from_laurent(a.group(), p);
}

GroupAlgebraElement laurent_gcd(const GroupAlgebraElement& a,
                                const GroupAlgebraElement& b) {
  check_laurent(a.group());
  if (a.is_zero()) return laurent_normalize(b);
  if (b.is_zero()) return laurent_normalize(a);
  LaurentPoly pa = to_laurent(a), pb = to_laurent(b);
  Int ca = content(pa.coeffs), cb = content(pb.coeffs);
  Int cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  std::vector<Int> g =
      poly_gcd_primitive(primitive(pa.coeffs), primitive(pb.coeffs));
  for (auto& x : g) x *= cg;
  LaurentPoly pg;
  pg.lo = 0;
  pg.coeffs = std::move(g);
  return laurent_normalize(from_laurent(a.group(), pg));
}

GroupAlgebraElement alexander_polynomial_from_ideal(
    const std::vector<GroupAlgebraElement>& gens, const AbelianGroup& h) {
  check_laurent(h);
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  GroupAlgebraElement acc = GroupAlgebraElement::zero(h);
  for (const auto& g : gens) acc = laurent_gcd(acc, g);
  return acc;
}

bool laurent_divides(const GroupAlgebraElement& d,
                     const GroupAlgebraElement& a) {
  check_laurent(d.group());
  if (d.is_zero()) return a.is_zero();
  if (a.is_zero()) return true;
  LaurentPoly pd = to_laurent(d), pa = to_laurent(a);
  Int cd = content(pd.coeffs), ca = content(pa.coeffs);
  if (ca % cd != 0) return false;
  // Primitive parts: exact iff division in Q[t] leaves no remainder.
  std::vector<Int> num = primitive(pa.coeffs), den = primitive(pd.coeffs);
  if (num.size() < den.size()) return false;
  std::vector<mpq_class> r(num.begin(), num.end());
  while (r.size() >= den.size()) {
    mpq_class q = r.back() / mpq_class(den.back());
    size_t shift = r.size() - den.size();
    for (size_t i = 0; i < den.size(); ++i) r[shift + i] -= q * den[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.empty()) return true;
    if (r.size() < den.size()) return false;
  }
  return r.empty();
}

}  // namespace alexmod
