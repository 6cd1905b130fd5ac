#include "crystbraid/braid_word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "crystbraid/errors.hpp"

namespace cryst {

PairVector::PairVector(int n) : n_(n), coeffs_(static_cast<std::size_t>(pair_count(n)), 0) {}

PairVector::PairVector(int n, std::vector<std::int64_t> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != pair_count(n))
    throw DomainError("pair vector for n=" + std::to_string(n) + " needs " + std::to_string(pair_count(n)) +
                      " coefficients");
}

PairVector PairVector::basis(int n, const Pair& p) {
  PairVector v(n);
  v[p] = 1;
  return v;
}

PairVector PairVector::from_entries(int n, const std::vector<std::pair<Pair, std::int64_t>>& entries) {
  PairVector v(n);
  for (const auto& [p, c] : entries) v[p] += c;
  return v;
}

bool PairVector::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

PairVector& PairVector::operator+=(const PairVector& o) {
  if (n_ != o.n_) throw DegreeMismatch(n_, o.n_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

PairVector& PairVector::operator-=(const PairVector& o) {
  if (n_ != o.n_) throw DegreeMismatch(n_, o.n_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

PairVector PairVector::operator-() const {
  PairVector r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

PairVector operator*(std::int64_t k, PairVector v) {
  for (auto& c : v.coeffs_) c *= k;
  return v;
}

PairVector PairVector::act(const Permutation& pi) const {
  if (pi.degree() != n_) throw DegreeMismatch(pi.degree(), n_);
  PairVector out(n_);
  int idx = 0;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j, ++idx) out.coeffs_[idx] = (*this)[Pair(pi(i), pi(j))];
  return out;
}

std::string PairVector::to_string() const {
  std::ostringstream os;
  bool first = true;
  int idx = 0;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j, ++idx) {
      if (coeffs_[idx] == 0) continue;
      os << (first ? "" : ", ") << '{' << i << ',' << j << "}:" << coeffs_[idx];
      first = false;
    }
  return first ? "0" : os.str();
}

BraidWord::BraidWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
  if (n < 1) throw RangeError("strand count must be at least 1");
  for (int e : letters_)
    if (e == 0 || std::abs(e) > n - 1)
      throw RangeError("letter " + std::to_string(e) + " out of range for n=" + std::to_string(n));
}

BraidWord BraidWord::parse(int n, std::string_view text) {
  std::vector<int> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view tok = text.substr(pos, end - pos);
    if (tok.front() == '+') tok.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("bad braid letter '" + std::string(text.substr(pos, end - pos)) + "'");
    letters.push_back(value);
    pos = end;
  }
  return BraidWord(n, std::move(letters));
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < letters_.size(); ++k) os << (k ? " " : "") << letters_[k];
  return os.str();
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw DegreeMismatch(a.strands(), b.strands());
  std::vector<int> letters(a.letters().begin(), a.letters().end());
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord invert(const BraidWord& w) {
  std::vector<int> letters;
  letters.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) letters.push_back(-*it);
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> stack;
  for (int e : w.letters()) {
    if (!stack.empty() && stack.back() == -e)
      stack.pop_back();
    else
      stack.push_back(e);
  }
  return BraidWord(w.strands(), std::move(stack));
}

BraidWord embed(const BraidWord& w, int strands) {
  if (strands < w.strands()) throw RangeError("cannot embed into fewer strands");
  return BraidWord(strands, std::vector<int>(w.letters().begin(), w.letters().end()));
}

Permutation underlying_permutation(const BraidWord& w) {
  // position -> strand; strand s ends at the position holding it.
  std::vector<int> at(w.strands());
  std::iota(at.begin(), at.end(), 1);
  for (int e : w.letters()) {
    const int k = std::abs(e);
    std::swap(at[k - 1], at[k]);
  }
  std::vector<int> images(w.strands());
  for (int pos = 0; pos < w.strands(); ++pos) images[at[pos] - 1] = pos + 1;
  return Permutation::from_images(std::move(images));
}

PairVector linking_vector(const BraidWord& w) {
  const int n = w.strands();
  std::vector<int> at(n);
  std::iota(at.begin(), at.end(), 1);
  std::vector<std::int64_t> crossings(static_cast<std::size_t>(pair_count(n)), 0);
  for (int e : w.letters()) {
    const int k = std::abs(e);
    crossings[pair_index(n, Pair(at[k - 1], at[k]))] += e > 0 ? 1 : -1;
    std::swap(at[k - 1], at[k]);
  }
  for (int pos = 0; pos < n; ++pos)
    if (at[pos] != pos + 1) throw NotPure();
  for (auto& c : crossings) {
    // Strands of a pure braid cross an even number of times.
    if (c % 2 != 0) throw NotPure();
    c /= 2;
  }
  return PairVector(n, std::move(crossings));
}

}  // namespace cryst
