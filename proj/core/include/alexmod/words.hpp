#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace alexmod {

using Int = mpz_class;

// One maximal run x_g^e of a reduced word.  Generator indices are 1-based.
struct Syllable {
  int gen;
  long exp;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Element of a free group, kept in reduced form at all times: adjacent
// syllables use distinct generators and no exponent is zero.  The empty
// word is the identity.
class Word {
 public:
  Word() = default;

  // Reduces an arbitrary syllable list (merging runs, cancelling, dropping
  // zero exponents).  Throws std::invalid_argument on generator index < 1.
  static Word reduce(const std::vector<Syllable>& raw);
  static Word generator(int gen, long exp = 1);

  bool is_identity() const { return syls_.empty(); }
  const std::vector<Syllable>& syllables() const { return syls_; }
  // Number of letters, counting multiplicity: sum of |exp|.
  long length() const;
  // Largest generator index used; 0 for the identity.
  int max_generator() const;
  long exponent_sum(int gen) const;

  Word operator*(const Word& rhs) const;
  Word inverse() const;
  Word pow(long n) const;

  std::string str(const std::vector<std::string>& names) const;
  std::string str() const;  // x1, x2, ... placeholder names

  friend bool operator==(const Word&, const Word&) = default;
  friend bool operator<(const Word& a, const Word& b);

 private:
  std::vector<Syllable> syls_;
};

// Element of the free-group algebra Z[F]: finite formal sum of reduced
// words with nonzero integer coefficients.
class FreeAlgebraElement {
 public:
  FreeAlgebraElement() = default;
  static FreeAlgebraElement from_word(const Word& w, Int coeff = 1);
  static FreeAlgebraElement one() { return from_word(Word{}); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, Int>& terms() const { return terms_; }
  Int coeff(const Word& w) const;

  FreeAlgebraElement operator+(const FreeAlgebraElement& rhs) const;
  FreeAlgebraElement operator-(const FreeAlgebraElement& rhs) const;
  FreeAlgebraElement operator-() const;
  FreeAlgebraElement scaled(const Int& c) const;
  // Left translation w * a.
  FreeAlgebraElement left_mul(const Word& w) const;
  FreeAlgebraElement operator*(const FreeAlgebraElement& rhs) const;

  void add_term(const Word& w, const Int& c);

  std::string str(const std::vector<std::string>& names) const;

  friend bool operator==(const FreeAlgebraElement&,
                         const FreeAlgebraElement&) = default;

 private:
  std::map<Word, Int> terms_;
};

}  // namespace alexmod
