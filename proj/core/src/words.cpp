#include "alexmod/words.hpp"

#include <sstream>
#include <stdexcept>

namespace alexmod {

Word Word::reduce(const std::vector<Syllable>& raw) {
  Word w;
  for (const auto& s : raw) {
    if (s.gen < 1) throw std::invalid_argument("generator index must be >= 1");
    if (s.exp == 0) continue;
    if (!w.syls_.empty() && w.syls_.back().gen == s.gen) {
      w.syls_.back().exp += s.exp;
      if (w.syls_.back().exp == 0) w.syls_.pop_back();
    } else {
      w.syls_.push_back(s);
    }
  }
  return w;
}

Word Word::generator(int gen, long exp) {
  return reduce({{gen, exp}});
}

long Word::length() const {
  long n = 0;
  for (const auto& s : syls_) n += s.exp < 0 ? -s.exp : s.exp;
  return n;
}

int Word::max_generator() const {
  int m = 0;
  for (const auto& s : syls_)
    if (s.gen > m) m = s.gen;
  return m;
}

long Word::exponent_sum(int gen) const {
  long n = 0;
  for (const auto& s : syls_)
    if (s.gen == gen) n += s.exp;
  return n;
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Syllable> cat = syls_;
  cat.insert(cat.end(), rhs.syls_.begin(), rhs.syls_.end());
  return reduce(cat);
}

Word Word::inverse() const {
  Word w;
  w.syls_.reserve(syls_.size());
  for (auto it = syls_.rbegin(); it != syls_.rend(); ++it)
    w.syls_.push_back({it->gen, -it->exp});
  return w;
}

Word Word::pow(long n) const {
  Word base = n < 0 ? inverse() : *this;
  long k = n < 0 ? -n : n;
  Word acc;
  for (long i = 0; i < k; ++i) acc = acc * base;
  return acc;
}

bool operator<(const Word& a, const Word& b) {
  // Length-lexicographic; ties broken syllable-wise.  Total order used
  // for map keys and deterministic term output.
  long la = a.length(), lb = b.length();
  if (la != lb) return la < lb;
  const auto& as = a.syls_;
  const auto& bs = b.syls_;
  for (size_t i = 0; i < as.size() && i < bs.size(); ++i) {
    if (as[i].gen != bs[i].gen) return as[i].gen < bs[i].gen;
    if (as[i].exp != bs[i].exp) return as[i].exp < bs[i].exp;
  }
  return as.size() < bs.size();
}

std::string Word::str(const std::vector<std::string>& names) const {
  if (syls_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : syls_) {
    if (!first) os << "*";
    first = false;
    if (s.gen >= 1 && static_cast<size_t>(s.gen) <= names.size())
      os << names[s.gen - 1];
    else
      os << "x" << s.gen;
    if (s.exp != 1) os << "^" << s.exp;
  }
  return os.str();
}

std::string Word::str() const {
  return str({});
}

FreeAlgebraElement FreeAlgebraElement::from_word(const Word& w, Int coeff) {
  FreeAlgebraElement e;
  e.add_term(w, coeff);
  return e;
}

Int FreeAlgebraElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Int(0) : it->second;
}

void FreeAlgebraElement::add_term(const Word& w, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FreeAlgebraElement FreeAlgebraElement::operator+(
    const FreeAlgebraElement& rhs) const {
  FreeAlgebraElement out = *this;
  for (const auto& [w, c] : rhs.terms_) out.add_term(w, c);
  return out;
}

FreeAlgebraElement FreeAlgebraElement::operator-(
    const FreeAlgebraElement& rhs) const {
  FreeAlgebraElement out = *this;
  for (const auto& [w, c] : rhs.terms_) out.add_term(w, -c);
  return out;
}

FreeAlgebraElement FreeAlgebraElement::operator-() const {
  FreeAlgebraElement out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

FreeAlgebraElement FreeAlgebraElement::scaled(const Int& c) const {
  FreeAlgebraElement out;
  if (c == 0) return out;
  for (const auto& [w, k] : terms_) out.terms_.emplace(w, k * c);
  return out;
}

FreeAlgebraElement FreeAlgebraElement::left_mul(const Word& w) const {
  FreeAlgebraElement out;
  for (const auto& [u, c] : terms_) out.add_term(w * u, c);
  return out;
}

FreeAlgebraElement FreeAlgebraElement::operator*(
    const FreeAlgebraElement& rhs) const {
  FreeAlgebraElement out;
  for (const auto& [u, cu] : terms_)
    for (const auto& [v, cv] : rhs.terms_) out.add_term(u * v, cu * cv);
  return out;
}

std::string FreeAlgebraElement::str(
    const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
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
    if (w.is_identity()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << w.str(names);
    }
  }
  return os.str();
}

}  // namespace alexmod
