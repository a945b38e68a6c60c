#include "trib/word.hpp"

#include <stdexcept>
#include <string>

namespace trib {

namespace {

constexpr ExactInt kExactMax = static_cast<ExactInt>(
    (static_cast<unsigned __int128>(1) << 127) - 1);

// t_{-2}, t_{-1}, t_0, ... for every order whose value fits in ExactInt.
const std::vector<ExactInt>& trib_numbers() {
  static const std::vector<ExactInt> numbers = [] {
    std::vector<ExactInt> t{0, 1, 1, 2};
    for (;;) {
      const std::size_t n = t.size();
      const ExactInt x = t[n - 1], y = t[n - 2], z = t[n - 3];
      if (x > kExactMax - y || x + y > kExactMax - z) break;
      t.push_back(x + y + z);
    }
    return t;
  }();
  return numbers;
}

// k_0, k_1, ...
const std::vector<ExactInt>& kernel_numbers() {
  static const std::vector<ExactInt> numbers = [] {
    std::vector<ExactInt> k{0, 1, 1};
    for (;;) {
      const std::size_t n = k.size();
      const ExactInt x = k[n - 1], y = k[n - 2], z = k[n - 3];
      if (x > kExactMax - y || x + y > kExactMax - z) break;
      k.push_back(x + y + z - 1);
    }
    return k;
  }();
  return numbers;
}

std::string order_message(const char* what, int m) {
  return std::string(what) + ": order " + std::to_string(m) + " out of range";
}

}  // namespace

char to_char(Letter letter) {
  switch (letter) {
    case Letter::a: return 'a';
    case Letter::b: return 'b';
    case Letter::c: return 'c';
  }
  return '?';
}

Letter letter_from_char(char ch) {
  switch (ch) {
    case 'a': return Letter::a;
    case 'b': return Letter::b;
    case 'c': return Letter::c;
    default: throw std::invalid_argument(std::string("not a letter of {a,b,c}: ") + ch);
  }
}

ExactInt LetterCounts::operator[](Letter letter) const {
  switch (letter) {
    case Letter::a: return a;
    case Letter::b: return b;
    case Letter::c: return c;
  }
  return 0;
}

LetterCounts& LetterCounts::operator+=(const LetterCounts& other) {
  a += other.a;
  b += other.b;
  c += other.c;
  return *this;
}

ExactInt trib_number(int m) {
  const auto& t = trib_numbers();
  if (m < -2 || m + 2 >= static_cast<int>(t.size())) {
    throw std::out_of_range(order_message("trib_number", m));
  }
  return t[static_cast<std::size_t>(m + 2)];
}

ExactInt kernel_number(int m) {
  const auto& k = kernel_numbers();
  if (m < 0 || m >= static_cast<int>(k.size())) {
    throw std::out_of_range(order_message("kernel_number", m));
  }
  return k[static_cast<std::size_t>(m)];
}

Letter last_letter(int m) {
  if (m < -1) throw std::out_of_range(order_message("last_letter", m));
  switch (((m % 3) + 3) % 3) {
    case 0: return Letter::a;
    case 1: return Letter::b;
    default: return Letter::c;
  }
}

BlockTable::BlockTable(ExactInt n_cap) : n_cap_(n_cap) {
  if (n_cap < 0) throw std::invalid_argument("BlockTable: negative cap");
  const auto& t = trib_numbers();
  // Orders -2..1 are given; longer blocks follow T_m = T_{m-1} T_{m-2} T_{m-3}.
  blocks_.push_back({-2, 0, {0, 0, 0}, Letter::c});  // empty; `last` unused
  blocks_.push_back({-1, 1, {0, 0, 1}, Letter::c});
  blocks_.push_back({0, 1, {1, 0, 0}, Letter::a});
  blocks_.push_back({1, 2, {1, 1, 0}, Letter::b});
  int headroom = 3;
  for (int m = 2;; ++m) {
    if (blocks_.back().length > n_cap_ && headroom-- == 0) break;
    if (m + 2 >= static_cast<int>(t.size())) {
      throw std::out_of_range("BlockTable: cap exceeds ExactInt range");
    }
    const std::size_t i = blocks_.size();
    Block block;
    block.order = m;
    block.length = t[static_cast<std::size_t>(m + 2)];
    block.counts = blocks_[i - 1].counts;
    block.counts += blocks_[i - 2].counts;
    block.counts += blocks_[i - 3].counts;
    block.last = last_letter(m);
    blocks_.push_back(block);
  }
}

const BlockTable& BlockTable::standard() {
  static const BlockTable table(kNCap);
  return table;
}

const Block& BlockTable::at(int m) const {
  if (m < -2 || m > max_order()) throw std::out_of_range(order_message("BlockTable", m));
  return blocks_[static_cast<std::size_t>(m + 2)];
}

int BlockTable::covering_order(ExactInt n) const {
  if (n > n_cap_) throw std::out_of_range("position " + to_string(n) + " exceeds cap");
  int m = 1;
  while (at(m).length < n) ++m;
  return m;
}

Letter letter_at(ExactInt n) {
  if (n < 1 || n > kNCap) throw std::out_of_range("letter_at: position " + to_string(n));
  const BlockTable& table = BlockTable::standard();
  int m = table.covering_order(n);
  ExactInt pos = n;
  while (m >= 2) {
    const ExactInt first = table.at(m - 1).length;
    const ExactInt second = table.at(m - 2).length;
    if (pos <= first) {
      m -= 1;
    } else if (pos <= first + second) {
      pos -= first;
      m -= 2;
    } else {
      pos -= first + second;
      m -= 3;
    }
  }
  // T_1 = ab, T_0 = a, T_{-1} = c.
  if (m == 1) return pos == 1 ? Letter::a : Letter::b;
  if (m == 0) return Letter::a;
  return Letter::c;
}

LetterCounts letter_counts(ExactInt n) {
  if (n < 0 || n > kNCap) throw std::out_of_range("letter_counts: length " + to_string(n));
  LetterCounts counts;
  if (n == 0) return counts;
  const BlockTable& table = BlockTable::standard();
  int m = table.covering_order(n);
  ExactInt pos = n;
  while (pos > 0) {
    const Block& block = table.at(m);
    if (pos == block.length) {
      counts += block.counts;
      break;
    }
    if (m <= 1) {  // proper nonempty prefix of T_1 = ab
      counts.a += 1;
      break;
    }
    const Block& first = table.at(m - 1);
    const Block& second = table.at(m - 2);
    if (pos <= first.length) {
      m -= 1;
    } else if (pos <= first.length + second.length) {
      counts += first.counts;
      pos -= first.length;
      m -= 2;
    } else {
      counts += first.counts;
      counts += second.counts;
      pos -= first.length + second.length;
      m -= 3;
    }
  }
  return counts;
}

Word prefix(ExactInt n, std::size_t cap) {
  if (n < 0 || n > static_cast<ExactInt>(cap)) {
    throw std::out_of_range("prefix: length " + to_string(n) + " exceeds materialization cap");
  }
  const auto len = static_cast<std::size_t>(n);
  Word older = "c", old = "a", current = "ab";  // T_{-1}, T_0, T_1
  while (current.size() < len) {
    Word next;
    next.reserve(current.size() + old.size() + older.size());
    next += current;
    next += old;
    next += older;
    older = std::move(old);
    old = std::move(current);
    current = std::move(next);
  }
  current.resize(len);
  return current;
}

KernelWord kernel_word(int m, std::size_t cap) {
  if (m < 1) throw std::out_of_range(order_message("kernel_word", m));
  const ExactInt k = kernel_number(m);
  if (k > static_cast<ExactInt>(cap)) {
    throw std::out_of_range(order_message("kernel_word (too long to materialize)", m));
  }
  KernelWord kernel;
  kernel.order = m;
  kernel.length = k;
  if (m <= 3) {
    kernel.content = Word(1, "abc"[m - 1]);
  } else {
    // K_m = delta_{m-1} T_{m-3}[1, k_m - 1]; T_{m-3} is a prefix of the word.
    kernel.content = to_char(last_letter(m - 1)) + prefix(k - 1, cap);
  }
  return kernel;
}

ExactInt position_letter(Letter letter, ExactInt p) {
  if (p < 1 || p - 1 > kNCap) throw std::out_of_range("position_letter: p = " + to_string(p));
  const LetterCounts before = letter_counts(p - 1);
  ExactInt pos = 0;
  switch (letter) {
    case Letter::a: pos = p + before.a + before.b; break;
    case Letter::b: pos = 2 * p + 2 * before.a + before.b; break;
    case Letter::c: pos = 4 * p + 3 * before.a + 2 * before.b; break;
  }
  if (pos > kNCap) throw std::out_of_range("position_letter: result exceeds cap");
  return pos;
}

ExactInt position_kernel(int m, ExactInt p) {
  if (m < 1) throw std::out_of_range(order_message("position_kernel", m));
  if (p < 1 || p - 1 > kNCap) throw std::out_of_range("position_kernel: p = " + to_string(p));
  const ExactInt t1 = trib_number(m - 1);
  if (t1 > kNCap) throw std::out_of_range(order_message("position_kernel", m));
  const ExactInt t2 = trib_number(m - 2);
  const ExactInt t3 = trib_number(m - 3);
  const LetterCounts before = letter_counts(p - 1);
  const ExactInt pos = p * t1 + before.a * (t2 + t3) + before.b * t2 + kernel_number(m) - 1;
  if (pos > kNCap) throw std::out_of_range("position_kernel: result exceeds cap");
  return pos;
}

}  // namespace trib
