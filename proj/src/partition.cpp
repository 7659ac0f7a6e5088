#include "rigcon/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "rigcon/error.hpp"

namespace rigcon {

namespace {

int parse_int(std::string_view token, std::string_view context) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorKind::InvalidInput,
                "cannot parse '" + std::string(token) + "' in " + std::string(context));
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) pos = text.size();
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

bool blank(std::string_view text) {
  return std::all_of(text.begin(), text.end(), [](char c) { return c == ' '; });
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])) {
      std::ostringstream os;
      os << "sequence (";
      for (std::size_t k = 0; k < parts_.size(); ++k) os << (k ? "," : "") << parts_[k];
      os << ") is not weakly decreasing and nonnegative";
      throw Error(ErrorKind::NotAPartition, os.str());
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  if (blank(text)) return {};
  std::vector<int> parts;
  for (auto token : split(text, ',')) parts.push_back(parse_int(token, "partition"));
  return Partition(std::move(parts));
}

int Partition::column(int j) const noexcept {
  if (j < 1) return 0;
  // parts are decreasing: count parts >= j
  auto it = std::partition_point(parts_.begin(), parts_.end(), [j](int p) { return p >= j; });
  return static_cast<int>(it - parts_.begin());
}

int Partition::multiplicity(int j) const noexcept {
  if (j < 1) return 0;
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), j));
}

int Partition::column_sum(int j) const noexcept {
  int total = 0;
  for (int p : parts_) total += std::min(p, j);
  return total;
}

Partition Partition::conjugate() const {
  std::vector<int> cols(static_cast<std::size_t>(largest()));
  for (int j = 1; j <= largest(); ++j) cols[static_cast<std::size_t>(j - 1)] = column(j);
  return Partition(std::move(cols));
}

Partition Partition::scaled(int factor) const {
  std::vector<int> out = parts_;
  for (int& p : out) p *= factor;
  return Partition(std::move(out));
}

long Partition::n_stat() const noexcept {
  long total = 0;
  for (int j = 1; j <= largest(); ++j) {
    long c = column(j);
    total += c * (c - 1) / 2;
  }
  return total;
}

bool Partition::dominates(const Partition& other) const noexcept {
  long a = 0;
  long b = 0;
  int len = std::max(length(), other.length());
  for (int i = 1; i <= len; ++i) {
    a += part(i);
    b += other.part(i);
    if (a < b) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

mpz_class syt_count(const Partition& p) {
  mpz_class result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(p.size()));
  mpz_class hooks = 1;
  for (int i = 1; i <= p.length(); ++i) {
    for (int j = 1; j <= p.part(i); ++j) {
      hooks *= (p.part(i) - j) + (p.column(j) - i) + 1;
    }
  }
  return result / hooks;
}

Partition interleave(const Partition& p, const Partition& q) {
  std::vector<int> seq;
  int len = std::max(p.length(), q.length());
  for (int i = 1; i <= len; ++i) {
    seq.push_back(p.part(i));
    seq.push_back(q.part(i));
  }
  return Partition(std::move(seq));
}

namespace {

void partitions_rec(int remaining, int max_part, int max_length, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_length == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    // the remaining cells must fit in max_length parts of size <= part
    if (max_length > 0 && static_cast<long>(part) * max_length < remaining) break;
    cur.push_back(part);
    partitions_rec(remaining - part, part, max_length < 0 ? -1 : max_length - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_part, int max_length) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, max_part < 0 ? n : max_part, max_length, cur, out);
  return out;
}

RectangleSequence::RectangleSequence(std::vector<Rect> rects) : rects_(std::move(rects)) {
  for (const Rect& r : rects_) {
    if (r.width <= 0 || r.height <= 0) {
      throw Error(ErrorKind::InvalidInput, "rectangle dimensions must be positive, got " +
                                               std::to_string(r.width) + "^" +
                                               std::to_string(r.height));
    }
  }
}

RectangleSequence RectangleSequence::parse(std::string_view text) {
  if (blank(text)) return {};
  std::vector<Rect> rects;
  for (auto token : split(text, ',')) {
    auto caret = token.find('^');
    if (caret == std::string_view::npos) {
      rects.push_back({parse_int(token, "rectangle"), 1});
    } else {
      rects.push_back({parse_int(token.substr(0, caret), "rectangle width"),
                       parse_int(token.substr(caret + 1), "rectangle height")});
    }
  }
  return RectangleSequence(std::move(rects));
}

RectangleSequence RectangleSequence::unit_rows(const Partition& mu) {
  std::vector<Rect> rects;
  for (int p : mu.parts()) rects.push_back({p, 1});
  return RectangleSequence(std::move(rects));
}

int RectangleSequence::size() const noexcept {
  int total = 0;
  for (const Rect& r : rects_) total += r.width * r.height;
  return total;
}

int RectangleSequence::max_width() const noexcept {
  int m = 0;
  for (const Rect& r : rects_) m = std::max(m, r.width);
  return m;
}

int RectangleSequence::max_height() const noexcept {
  int m = 0;
  for (const Rect& r : rects_) m = std::max(m, r.height);
  return m;
}

long RectangleSequence::n_of_rectangles() const noexcept {
  long total = 0;
  for (std::size_t a = 0; a < rects_.size(); ++a) {
    for (std::size_t b = a + 1; b < rects_.size(); ++b) {
      total += static_cast<long>(std::min(rects_[a].width, rects_[b].width)) *
               std::min(rects_[a].height, rects_[b].height);
    }
  }
  return total;
}

namespace {
bool dominant_before(const Rect& a, const Rect& b) {
  if (a.width != b.width) return a.width > b.width;
  return a.height > b.height;
}
}  // namespace

RectangleSequence RectangleSequence::dominant_rearrangement() const {
  std::vector<Rect> sorted = rects_;
  std::stable_sort(sorted.begin(), sorted.end(), dominant_before);
  return RectangleSequence(std::move(sorted));
}

bool RectangleSequence::is_dominant() const noexcept {
  for (std::size_t a = 0; a + 1 < rects_.size(); ++a) {
    if (dominant_before(rects_[a + 1], rects_[a])) return false;
  }
  return true;
}

RectangleSequence RectangleSequence::transposed() const {
  std::vector<Rect> out;
  for (const Rect& r : rects_) out.push_back({r.height, r.width});
  return RectangleSequence(std::move(out));
}

RectangleSequence RectangleSequence::scaled(int factor) const {
  std::vector<Rect> out;
  if (factor == 0) return {};
  for (const Rect& r : rects_) out.push_back({r.width * factor, r.height});
  return RectangleSequence(std::move(out));
}

std::string RectangleSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rects_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(rects_[i].width);
    if (rects_[i].height != 1) out += "^" + std::to_string(rects_[i].height);
  }
  return out;
}

std::vector<RectangleSequence> dominant_sequences(int n, int max_count) {
  std::vector<RectangleSequence> out;
  std::vector<Rect> cur;
  std::function<void(int, Rect)> rec = [&](int left, Rect bound) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_count) return;
    for (int w = std::min(left, bound.width); w >= 1; --w) {
      for (int h = (w == bound.width ? std::min(bound.height, left / w) : left / w); h >= 1; --h) {
        cur.push_back({w, h});
        rec(left - w * h, {w, h});
        cur.pop_back();
      }
    }
  };
  rec(n, {n, n});
  return out;
}

}  // namespace rigcon
