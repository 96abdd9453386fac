#include <random>

#include "alexmod/words.hpp"
#include "doctest.h"

using namespace alexmod;

namespace {

Word random_word(std::mt19937_64& rng, int max_gen, int max_len) {
  std::uniform_int_distribution<int> gen(1, max_gen);
  std::uniform_int_distribution<int> exp(-3, 3);
  std::uniform_int_distribution<int> len(0, max_len);
  std::vector<Syllable> syls;
  int l = len(rng);
  for (int i = 0; i < l; ++i) {
    int e = exp(rng);
    if (e != 0) syls.push_back({gen(rng), e});
  }
  return Word::reduce(syls);
}

}  // namespace

TEST_CASE("word reduction") {
  CHECK(Word::reduce({{1, 1}, {1, -1}}).is_identity());
  CHECK(Word::reduce({{1, 2}, {1, 3}}) == Word::generator(1, 5));
  CHECK(Word::reduce({{1, 1}, {2, 1}, {2, -1}, {1, 1}}) ==
        Word::generator(1, 2));
  CHECK_THROWS_AS(Word::reduce({{0, 1}}), std::invalid_argument);
}

TEST_CASE("group laws") {
  Word x = Word::generator(1), y = Word::generator(2), z = Word::generator(3);
  CHECK((x * x.inverse()).is_identity());
  CHECK((x * y).inverse() == y.inverse() * x.inverse());
  CHECK(x * y * (y.inverse() * z) == x * z);
  CHECK(x.pow(3) == Word::generator(1, 3));
  CHECK(x.pow(-2) == Word::generator(1, -2));
  CHECK(x.pow(0).is_identity());
}

TEST_CASE("random word properties") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 1000; ++t) {
    Word u = random_word(rng, 4, 8), v = random_word(rng, 4, 8),
         w = random_word(rng, 4, 8);
    CHECK((u * v) * w == u * (v * w));
    CHECK((u * u.inverse()).is_identity());
    CHECK(Word::reduce(u.syllables()) == u);
  }
}

TEST_CASE("free algebra arithmetic") {
  Word x = Word::generator(1), y = Word::generator(2);
  FreeAlgebraElement a = FreeAlgebraElement::from_word(x);
  CHECK((a + a.scaled(-1)).is_zero());

  FreeAlgebraElement one_plus_y = FreeAlgebraElement::one();
  one_plus_y.add_term(y, 1);
  FreeAlgebraElement expect = FreeAlgebraElement::from_word(x);
  expect.add_term(x * y, 1);
  CHECK(one_plus_y.left_mul(x) == expect);

  FreeAlgebraElement b = FreeAlgebraElement::one();  // 1 + x
  b.add_term(x, 1);
  FreeAlgebraElement c = FreeAlgebraElement::from_word(x);  // x - 1
  c.add_term(Word{}, -1);
  CHECK(b + c == FreeAlgebraElement::from_word(x, 2));
}

TEST_CASE("left translation is a monoid action") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    Word u = random_word(rng, 3, 6), v = random_word(rng, 3, 6);
    FreeAlgebraElement a;
    for (int i = 0; i < 3; ++i) a.add_term(random_word(rng, 3, 5), 1 + (t % 3));
    CHECK(a.left_mul(v).left_mul(u) == a.left_mul(u * v));
  }
}

TEST_CASE("algebra multiplication distributes") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    FreeAlgebraElement a, b, c;
    for (int i = 0; i < 2; ++i) {
      a.add_term(random_word(rng, 3, 4), 1);
      b.add_term(random_word(rng, 3, 4), -1);
      c.add_term(random_word(rng, 3, 4), 2);
    }
    CHECK(a * (b + c) == a * b + a * c);
  }
}
