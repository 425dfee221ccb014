#include "tmaps/counting.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tmaps {

std::string to_string(const BigRat& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

namespace counting {
namespace {

std::mutex g_memo_mutex;

const BigInt& factorial_memo(unsigned k) {
  static std::vector<BigInt> table{1};
  while (table.size() <= k) {
    table.push_back(table.back() * BigInt(table.size()));
  }
  return table[k];
}

const BigRat& gj_memo(int n) {
  // Index shift: slot 0 holds f_{-1}.
  static std::vector<BigRat> table{BigRat(1, 2), BigRat(2)};
  while (static_cast<int>(table.size()) <= n + 1) {
    const int m = static_cast<int>(table.size()) - 1;  // computing f_m
    BigRat sum = 0;
    for (int i = -1; i <= m - 1; ++i) {
      const int j = m - 2 - i;
      if (j < -1) continue;
      sum += table[i + 1] * table[j + 1];
    }
    table.push_back(BigRat(4 * (3 * m + 2), m + 1) * sum);
  }
  return table[n + 1];
}

}  // namespace

BigInt factorial(unsigned k) {
  std::scoped_lock lock(g_memo_mutex);
  return factorial_memo(k);
}

BigInt catalan(unsigned k) {
  std::scoped_lock lock(g_memo_mutex);
  return factorial_memo(2 * k) / (factorial_memo(k) * factorial_memo(k + 1));
}

BigInt tutte_T(unsigned n) {
  if (n < 1) throw std::invalid_argument("tutte_T requires n >= 1");
  std::scoped_lock lock(g_memo_mutex);
  return 2 * factorial_memo(4 * n - 3) /
         (factorial_memo(n) * factorial_memo(3 * n - 1));
}

BigRat gj_f(int n) {
  if (n < -1) throw std::invalid_argument("gj_f requires n >= -1");
  std::scoped_lock lock(g_memo_mutex);
  return gj_memo(n);
}

BigInt edge_rooted_cubic_F(unsigned n) {
  if (n < 1) throw std::invalid_argument("edge_rooted_cubic_F requires n >= 1");
  const BigRat f = gj_f(static_cast<int>(n)) / BigRat(3 * n + 2);
  if (denominator(f) != 1) {
    throw std::logic_error("edge_rooted_cubic_F: f_n not divisible by 3n+2");
  }
  return numerator(f);
}

BigInt tree_rooted_cubic_count(unsigned n) {
  if (n < 1) throw std::invalid_argument("tree_rooted_cubic_count requires n >= 1");
  return catalan(2 * n) * catalan(n + 1);
}

BigInt mullin_count(unsigned e) {
  if (e < 1) throw std::invalid_argument("mullin_count requires e >= 1");
  return catalan(e) * catalan(e + 1);
}

}  // namespace counting
}  // namespace tmaps
