#ifndef SCHURMZV_WORDS_HPP
#define SCHURMZV_WORDS_HPP

#include <map>
#include <string>
#include <vector>

#include "schurmzv/rational.hpp"
#include "schurmzv/shapes.hpp"

namespace schurmzv {

// A word z_{k_1}...z_{k_d} in the harmonic algebra; the empty word is the
// unit.  Ordered shortlex so combos print deterministically.
struct Word {
  std::vector<int> a;

  Word() = default;
  explicit Word(std::vector<int> v) : a(std::move(v)) {}

  int depth() const { return (int)a.size(); }
  long long weight() const {
    long long w = 0;
    for (int x : a) w += x;
    return w;
  }
  // last exponent >= 2 (empty word counts as admissible: it is the unit)
  bool admissible() const { return a.empty() || a.back() >= 2; }

  bool operator==(const Word& o) const { return a == o.a; }
  bool operator<(const Word& o) const {
    if (a.size() != o.a.size()) return a.size() < o.a.size();
    return a < o.a;
  }
};

using WordCombo = std::map<Word, Rat>;

void combo_add(WordCombo& c, const Word& w, const Rat& q);
void combo_add(WordCombo& c, const WordCombo& d, const Rat& scale = 1);
WordCombo combo_scaled(const WordCombo& c, const Rat& scale);
bool combo_is_zero(const WordCombo& c);
std::string combo_to_string(const WordCombo& c);
std::string word_to_string(const Word& w);
Word parse_word(const std::string& s);  // "1,2"; "" is the empty word

WordCombo unit_combo();

// z_k^n: the n-letter word (k,...,k) for n >= 1, the unit for n == 0, and
// zero for n < 0.
WordCombo z_power(int k, long long n);

// harmonic (stuffle) product and the index shuffle (same recursion without
// the merge term); both memoized and thread-safe
WordCombo stuffle(const Word& u, const Word& v);
WordCombo stuffle(const WordCombo& u, const WordCombo& v);
WordCombo index_shuffle(const Word& u, const Word& v);
WordCombo index_shuffle(const WordCombo& u, const WordCombo& v);

// the weight-raising derivation: word -> sum_a k_a * (word with k_a -> k_a+1)
WordCombo derivation(const Word& w);
WordCombo derivation(const WordCombo& c);

// determinant in the commutative stuffle algebra, division-free (Laplace
// expansion memoized over column subsets)
WordCombo det_stuffle(const std::vector<std::vector<WordCombo>>& m);

// phi invariants of a skew shape: both routes return the same combo
WordCombo phi_via_ssd(const SkewShape& d);
WordCombo phi_via_jacobi_trudi(const SkewShape& d);
// closed form for the two-column shape (2^{n+k})/(1^k)
WordCombo phi_two_column(int n, int k);

}  // namespace schurmzv

#endif  // SCHURMZV_WORDS_HPP
