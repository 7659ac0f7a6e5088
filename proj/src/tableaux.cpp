#include "rigcon/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "rigcon/error.hpp"

namespace rigcon {

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Partition(parts);
}

std::vector<int> Tableau::content() const {
  std::vector<int> out;
  for (const auto& r : rows) {
    for (int x : r) {
      if (x > static_cast<int>(out.size())) out.resize(static_cast<std::size_t>(x), 0);
      ++out[static_cast<std::size_t>(x - 1)];
    }
  }
  return out;
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> word;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) word.insert(word.end(), it->begin(), it->end());
  return word;
}

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const std::vector<int>& content) {
  long total = std::accumulate(content.begin(), content.end(), 0L);
  if (total != shape.size()) {
    throw Error(ErrorKind::SizeMismatch, "shape has " + std::to_string(shape.size()) +
                                             " cells but content sums to " + std::to_string(total));
  }
  for (int c : content) {
    if (c < 0) throw Error(ErrorKind::InvalidInput, "negative content entry");
  }
  std::vector<Tableau> out;
  CapCounter counter;
  Tableau cur;
  cur.rows.assign(static_cast<std::size_t>(shape.length()), {});
  // letter `letter` fills a horizontal strip of size content[letter-1]
  std::function<void(std::size_t)> place = [&](std::size_t letter) {
    if (letter > content.size()) {
      counter.tick("semistandard tableaux");
      out.push_back(cur);
      return;
    }
    int need = content[letter - 1];
    int value = static_cast<int>(letter);
    std::vector<int> added(static_cast<std::size_t>(shape.length()), 0);
    std::function<void(int, int)> strip = [&](int row, int left) {
      if (left == 0) {
        place(letter + 1);
        return;
      }
      if (row >= shape.length()) return;
      auto r = static_cast<std::size_t>(row);
      int len = static_cast<int>(cur.rows[r].size());
      int room = shape.part(row + 1) - len;
      // a cell in this row must sit below a cell filled with a smaller letter
      if (row > 0) room = std::min(room, static_cast<int>(cur.rows[r - 1].size()) - added[r - 1] - len);
      for (int take = std::min(room, left); take >= 0; --take) {
        for (int t = 0; t < take; ++t) cur.rows[r].push_back(value);
        added[r] = take;
        strip(row + 1, left - take);
        added[r] = 0;
        cur.rows[r].resize(static_cast<std::size_t>(len));
      }
    };
    strip(0, need);
  };
  place(1);
  return out;
}

long word_charge(const std::vector<int>& word) {
  int top = 0;
  for (int x : word) {
    if (x < 1) throw Error(ErrorKind::ContentNotPartition, "letters must be positive");
    top = std::max(top, x);
  }
  std::vector<int> content(static_cast<std::size_t>(top), 0);
  for (int x : word) ++content[static_cast<std::size_t>(x - 1)];
  for (std::size_t i = 0; i + 1 < content.size(); ++i) {
    if (content[i] < content[i + 1]) {
      throw Error(ErrorKind::ContentNotPartition, "content of the word is not a partition");
    }
  }
  std::vector<bool> used(word.size(), false);
  std::size_t remaining = word.size();
  long total = 0;
  while (remaining > 0) {
    // letters 1..r of the next standard subword, r = distinct letters left
    int r = 0;
    for (int v = 1; v <= top; ++v) {
      bool present = false;
      for (std::size_t i = 0; i < word.size(); ++i) {
        if (!used[i] && word[i] == v) {
          present = true;
          break;
        }
      }
      if (!present) break;
      r = v;
    }
    // scan leftwards cyclically from the right end; the index grows each
    // time the next letter is found only after wrapping around
    long pos = static_cast<long>(word.size());
    long index = 0;
    for (int v = 1; v <= r; ++v) {
      long found = -1;
      for (long i = pos - 1; i >= 0; --i) {
        if (!used[static_cast<std::size_t>(i)] && word[static_cast<std::size_t>(i)] == v) {
          found = i;
          break;
        }
      }
      if (found < 0) {
        if (v > 1) ++index;
        for (long i = static_cast<long>(word.size()) - 1; i >= pos; --i) {
          if (!used[static_cast<std::size_t>(i)] && word[static_cast<std::size_t>(i)] == v) {
            found = i;
            break;
          }
        }
      }
      used[static_cast<std::size_t>(found)] = true;
      --remaining;
      total += index;
      pos = found;
    }
  }
  return total;
}

long charge_statistic(const Tableau& t) { return word_charge(t.reading_word()); }

std::vector<LatticeWord> lattice_words(const Partition& weight) {
  std::vector<LatticeWord> out;
  CapCounter counter;
  int letters = weight.length();
  std::vector<int> used(static_cast<std::size_t>(letters), 0);
  std::vector<int> word;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(word.size()) == weight.size()) {
      counter.tick("lattice words");
      LatticeWord w{word, 0, 0};
      for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (word[i] > word[i + 1]) {
          w.maj += static_cast<int>(i + 1);
          ++w.des;
        }
      }
      out.push_back(std::move(w));
      return;
    }
    for (int v = 1; v <= letters; ++v) {
      auto idx = static_cast<std::size_t>(v - 1);
      if (used[idx] == weight.part(v)) continue;
      if (v > 1 && used[idx] + 1 > used[idx - 1]) continue;
      ++used[idx];
      word.push_back(v);
      rec();
      word.pop_back();
      --used[idx];
    }
  };
  rec();
  return out;
}

std::map<int, mpz_class> lattice_paths_asc(int d, int n) {
  if (d < 1 || n < 0) throw Error(ErrorKind::RangeError, "lattice paths need d >= 1 and n >= 0");
  std::map<int, mpz_class> out;
  CapCounter counter;
  std::vector<int> x(static_cast<std::size_t>(d), 0);
  std::function<void(int, int, int)> rec = [&](int steps_left, int last, int asc) {
    if (steps_left == 0) {
      counter.tick("lattice paths");
      out[asc] += 1;
      return;
    }
    for (int k = 0; k < d; ++k) {
      auto kk = static_cast<std::size_t>(k);
      if (x[kk] == n) continue;
      // stepping in coordinate k keeps x_k <= x_{k+1}
      if (k + 1 < d && x[kk] + 1 > x[kk + 1]) continue;
      ++x[kk];
      rec(steps_left - 1, k, asc + ((last >= 0 && last < k) ? 1 : 0));
      --x[kk];
    }
  };
  rec(d * n, -1, 0);
  return out;
}

mpz_class count_lr_tableaux(const Partition& outer, const Partition& inner, const Partition& content) {
  for (int i = 1; i <= std::max(outer.length(), inner.length()); ++i) {
    if (inner.part(i) > outer.part(i)) {
      throw Error(ErrorKind::ShapeNotContained, inner.to_string() + " is not inside " + outer.to_string());
    }
  }
  if (outer.size() - inner.size() != content.size()) return 0;
  // Fill cells in reverse reading order: rows top to bottom, each row right
  // to left. That is exactly the order of the reverse reading word, so the
  // lattice condition is checked as each cell is filled.
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= outer.length(); ++i) {
    for (int j = outer.part(i); j > inner.part(i); --j) cells.push_back({i, j});
  }
  int rows = outer.length();
  std::vector<std::vector<int>> fill(static_cast<std::size_t>(rows + 1),
                                     std::vector<int>(static_cast<std::size_t>(outer.largest() + 2), 0));
  std::vector<int> used(static_cast<std::size_t>(content.length() + 1), 0);
  mpz_class count = 0;
  CapCounter counter;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      counter.tick("LR tableaux");
      ++count;
      return;
    }
    auto [i, j] = cells[idx];
    auto ui = static_cast<std::size_t>(i);
    auto uj = static_cast<std::size_t>(j);
    for (int v = 1; v <= content.length(); ++v) {
      auto uv = static_cast<std::size_t>(v);
      if (used[uv] == content.part(v)) continue;
      if (v > 1 && used[uv] + 1 > used[uv - 1]) continue;
      // weakly increasing along the row: the cell to the right is filled already
      if (j < outer.part(i) && fill[ui][uj + 1] < v) continue;
      // strictly increasing down the column
      if (i > 1 && j > inner.part(i - 1) && fill[ui - 1][uj] >= v) continue;
      fill[ui][uj] = v;
      ++used[uv];
      rec(idx + 1);
      --used[uv];
      fill[ui][uj] = 0;
    }
  };
  rec(0);
  return count;
}

}  // namespace rigcon

namespace rigcon {

namespace {

bool contains(const Partition& outer, const Partition& inner) {
  for (int i = 1; i <= inner.length(); ++i) {
    if (inner.part(i) > outer.part(i)) return false;
  }
  return true;
}

}  // namespace

mpz_class skew_kostka(const Partition& outer, const Partition& inner, const std::vector<int>& content) {
  if (!contains(outer, inner)) return 0;
  long total = std::accumulate(content.begin(), content.end(), 0L);
  if (total != outer.size() - inner.size()) return 0;
  // ways[shape] = fillings of shape/inner using the letters placed so far
  std::map<std::vector<int>, mpz_class> ways;
  std::vector<int> start(static_cast<std::size_t>(outer.length()), 0);
  for (int i = 1; i <= inner.length(); ++i) start[static_cast<std::size_t>(i - 1)] = inner.part(i);
  ways[start] = 1;
  for (int c : content) {
    std::map<std::vector<int>, mpz_class> next;
    for (const auto& [shape, count] : ways) {
      // add a horizontal strip of size c inside outer
      std::vector<int> cur = shape;
      std::function<void(std::size_t, int)> rec = [&](std::size_t row, int left) {
        if (left == 0) {
          next[cur] += count;
          return;
        }
        if (row >= cur.size()) return;
        int cap = outer.part(static_cast<int>(row) + 1);
        if (row > 0) cap = std::min(cap, shape[row - 1]);
        int room = cap - shape[row];
        for (int take = std::min(room, left); take >= 0; --take) {
          cur[row] = shape[row] + take;
          rec(row + 1, left - take);
        }
        cur[row] = shape[row];
      };
      rec(0, c);
    }
    ways = std::move(next);
  }
  std::vector<int> full(outer.parts());
  auto it = ways.find(full);
  return it == ways.end() ? mpz_class(0) : it->second;
}

}  // namespace rigcon
