#include "octarep/repcount.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "octarep/arith.hpp"
#include "octarep/errors.hpp"
#include "octarep/generators.hpp"
#include "octarep/kernels.hpp"

namespace octarep {

namespace {

template <std::size_t N>
void check_sorted_in(const std::array<int, N>& v, const char* prefix, std::initializer_list<int> allowed) {
  for (std::size_t i = 0; i < N; ++i) {
    const std::string field = prefix + std::to_string(i + 1);
    if (std::find(allowed.begin(), allowed.end(), v[i]) == allowed.end()) {
      std::string set;
      for (int x : allowed) set += (set.empty() ? "" : ",") + std::to_string(x);
      throw ConstraintViolation(field, "value " + std::to_string(v[i]) + " not in {" + set + "}");
    }
    if (i > 0 && v[i - 1] > v[i])
      throw ConstraintViolation(field, prefix + std::to_string(i) + "=" + std::to_string(v[i - 1]) + " > " +
                                           field + "=" + std::to_string(v[i]) + " (must be non-decreasing)");
  }
}

std::vector<int> parse_ints(std::string_view s, std::string_view whole) {
  std::vector<int> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] != ',') continue;
    std::string_view tok = s.substr(start, i - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size())
      throw ParseError("malformed form label '" + std::string(whole) + "'");
    out.push_back(v);
    start = i + 1;
  }
  return out;
}

enum class BlockKind { Square, Hex };
struct Block {
  BlockKind kind;
  std::int64_t scale;
};

// Hexagonal pairs first: they fan out most per value.
std::vector<Block> blocks_of(const QuadraticForm& f) {
  std::vector<Block> bs;
  if (f.family() == Family::A) {
    for (int b : f.b()) bs.push_back({BlockKind::Hex, b});
    for (int a : f.a()) bs.push_back({BlockKind::Square, a});
  } else {
    bs.push_back({BlockKind::Hex, 1});
    for (int c : f.c()) bs.push_back({BlockKind::Hex, c});
  }
  return bs;
}

// Dense table: entry v = number of lattice points of the block with value v.
std::vector<std::int64_t> block_table(const Block& b, std::int64_t n_max) {
  std::vector<std::int64_t> t(static_cast<std::size_t>(n_max) + 1, 0);
  if (b.kind == BlockKind::Square) {
    for (std::int64_t x = 0; b.scale * x * x <= n_max; ++x) t[static_cast<std::size_t>(b.scale * x * x)] += x ? 2 : 1;
  } else {
    const std::int64_t m_max = n_max / b.scale;
    const std::int64_t bound = isqrt(4 * m_max / 3) + 1;
    for (std::int64_t x = -bound; x <= bound; ++x)
      for (std::int64_t y = -bound; y <= bound; ++y) {
        const std::int64_t v = x * x + x * y + y * y;
        if (v <= m_max) ++t[static_cast<std::size_t>(b.scale * v)];
      }
  }
  return t;
}

// Sparse (value, multiplicity) list, ascending.
std::vector<std::pair<std::int64_t, std::int64_t>> sparse(const std::vector<std::int64_t>& t) {
  std::vector<std::pair<std::int64_t, std::int64_t>> s;
  for (std::size_t v = 0; v < t.size(); ++v)
    if (t[v]) s.emplace_back(static_cast<std::int64_t>(v), t[v]);
  return s;
}

// Points of the block with value exactly r, solved directly.
std::int64_t last_block_count(const Block& b, std::int64_t r) {
  if (r == 0) return 1;
  if (r % b.scale != 0) return 0;
  const std::int64_t m = r / b.scale;
  if (b.kind == BlockKind::Square) return is_square(m) ? 2 : 0;
  // y^2 + x y + (x^2 - m) = 0 has discriminant 4m - 3x^2.
  std::int64_t count = 0;
  const std::int64_t bound = isqrt(4 * m / 3) + 1;
  for (std::int64_t x = -bound; x <= bound; ++x) {
    const std::int64_t disc = 4 * m - 3 * x * x;
    if (disc < 0 || !is_square(disc)) continue;
    const std::int64_t s = isqrt(disc);
    if ((s - x) % 2 != 0) continue;
    count += s == 0 ? 1 : 2;
  }
  return count;
}

std::int64_t count_nested(const std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>>& lists,
                          const std::vector<Block>& bs, std::size_t i, std::int64_t budget) {
  if (i + 1 == bs.size()) return last_block_count(bs[i], budget);
  std::int64_t total = 0;
  for (auto [v, mult] : lists[i]) {
    if (v > budget) break;
    total += mult * count_nested(lists, bs, i + 1, budget - v);
  }
  return total;
}

// Histogram of values over a run of blocks; the innermost block is added
// as a shifted copy of its dense table.
void half_histogram(const std::vector<Block>& bs, const std::vector<std::vector<std::int64_t>>& tables,
                    std::size_t i, std::size_t end, std::int64_t base, std::int64_t weight,
                    std::vector<std::int64_t>& hist, std::vector<std::int64_t>& scratch) {
  const auto n_max = static_cast<std::int64_t>(hist.size()) - 1;
  if (i + 1 == end) {
    const auto len = static_cast<std::size_t>(n_max - base + 1);
    std::span<const std::int64_t> src(tables[i].data(), len);
    if (weight == 1) {
      kernels::add_into(std::span<std::int64_t>(hist).subspan(static_cast<std::size_t>(base), len), src);
    } else {
      scratch.resize(len);
      for (std::size_t k = 0; k < len; ++k) scratch[k] = weight * src[k];
      kernels::add_into(std::span<std::int64_t>(hist).subspan(static_cast<std::size_t>(base), len), scratch);
    }
    return;
  }
  const auto& t = tables[i];
  for (std::int64_t v = 0; base + v <= n_max; ++v)
    if (t[static_cast<std::size_t>(v)])
      half_histogram(bs, tables, i + 1, end, base + v, weight * t[static_cast<std::size_t>(v)], hist, scratch);
}

}  // namespace

QuadraticForm QuadraticForm::family_a(std::array<int, 4> a, std::array<int, 2> b) {
  check_sorted_in(a, "a", {1, 2, 3});
  check_sorted_in(b, "b", {1, 2, 4});
  QuadraticForm f;
  f.family_ = Family::A;
  f.a_ = a;
  f.b_ = b;
  return f;
}

QuadraticForm QuadraticForm::family_b(std::array<int, 3> c) {
  check_sorted_in(c, "c", {1, 2, 4, 8});
  QuadraticForm f;
  f.family_ = Family::B;
  f.c_ = c;
  return f;
}

QuadraticForm QuadraticForm::parse(std::string_view label) {
  if (label.size() < 2 || label[1] != ':') throw ParseError("form label must start with 'A:' or 'B:', got '" + std::string(label) + "'");
  const auto vals = parse_ints(label.substr(2), label);
  if (label[0] == 'A') {
    if (vals.size() != 6) throw ParseError("family A label needs 6 coefficients: '" + std::string(label) + "'");
    return family_a({vals[0], vals[1], vals[2], vals[3]}, {vals[4], vals[5]});
  }
  if (label[0] == 'B') {
    if (vals.size() != 3) throw ParseError("family B label needs 3 coefficients: '" + std::string(label) + "'");
    return family_b({vals[0], vals[1], vals[2]});
  }
  throw ParseError("form label must start with 'A:' or 'B:', got '" + std::string(label) + "'");
}

std::string QuadraticForm::label() const {
  std::ostringstream os;
  if (family_ == Family::A) {
    os << "A:" << a_[0] << ',' << a_[1] << ',' << a_[2] << ',' << a_[3] << ',' << b_[0] << ',' << b_[1];
  } else {
    os << "B:" << c_[0] << ',' << c_[1] << ',' << c_[2];
  }
  return os.str();
}

std::string QuadraticForm::space() const {
  if (family_ == Family::B) return "trivial";
  // a1 a2 a3 a4 modulo squares.
  int twos = 0, threes = 0;
  for (int x : a_) {
    if (x == 2) ++twos;
    if (x == 3) ++threes;
  }
  const bool two = twos % 2, three = threes % 2;
  if (two && three) return "chi24";
  if (two) return "chi8";
  if (three) return "chi12";
  return "trivial";
}

std::vector<QuadraticForm> enumerate_forms() {
  std::vector<QuadraticForm> out;
  const int as[] = {1, 2, 3}, bs[] = {1, 2, 4}, cs[] = {1, 2, 4, 8};
  for (int a1 : as)
    for (int a2 : as)
      for (int a3 : as)
        for (int a4 : as) {
          if (a1 > a2 || a2 > a3 || a3 > a4) continue;
          for (int b1 : bs)
            for (int b2 : bs)
              if (b1 <= b2) out.push_back(QuadraticForm::family_a({a1, a2, a3, a4}, {b1, b2}));
        }
  for (int c1 : cs)
    for (int c2 : cs)
      for (int c3 : cs) {
        if (c1 > c2 || c2 > c3 || (c1 == 1 && c2 == 1 && c3 == 1)) continue;
        out.push_back(QuadraticForm::family_b({c1, c2, c3}));
      }
  return out;
}

std::int64_t count_representations(const QuadraticForm& form, std::int64_t n) {
  if (n < 0) return 0;
  const auto bs = blocks_of(form);
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> lists;
  for (std::size_t i = 0; i + 1 < bs.size(); ++i) lists.push_back(sparse(block_table(bs[i], n)));
  return count_nested(lists, bs, 0, n);
}

std::vector<std::int64_t> count_representations_upto(const QuadraticForm& form, std::int64_t n_max) {
  if (n_max < 0) return {};
  const auto bs = blocks_of(form);
  std::vector<std::vector<std::int64_t>> tables;
  for (const auto& b : bs) tables.push_back(block_table(b, n_max));
  const std::size_t mid = bs.size() / 2;
  const auto len = static_cast<std::size_t>(n_max) + 1;
  std::vector<std::int64_t> left(len, 0), right(len, 0), scratch;
  half_histogram(bs, tables, 0, mid, 0, 1, left, scratch);
  half_histogram(bs, tables, mid, bs.size(), 0, 1, right, scratch);
  std::vector<std::int64_t> out(len);
  kernels::convolve(left, right, out);
  return out;
}

QSeries theta_product(const QuadraticForm& form, std::size_t prec) {
  const QSeries theta = theta_series(prec);
  const QSeries hex = borwein_F(prec);
  QSeries p = hex;  // family B's leading H(x1,x2); replaced below for family A
  if (form.family() == Family::A) {
    p = dilate(theta, static_cast<std::size_t>(form.a()[0]));
    for (std::size_t i = 1; i < 4; ++i) p = mul(p, dilate(theta, static_cast<std::size_t>(form.a()[i])));
    for (int b : form.b()) p = mul(p, dilate(hex, static_cast<std::size_t>(b)));
  } else {
    for (int c : form.c()) p = mul(p, dilate(hex, static_cast<std::size_t>(c)));
  }
  return p;
}

}  // namespace octarep
