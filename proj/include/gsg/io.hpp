#pragma once

#include <charconv>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gsg/core.hpp"
#include "gsg/error.hpp"
#include "gsg/grade.hpp"
#include "gsg/subset.hpp"

// Text formats (UTF-8, line oriented, `#` starts a comment, blank lines ignored).
//
//   GSG 1            IFS 1             SET 1
//   S <n>            carrier S|L|R     carrier S|L|R
//   G <m>            <i> <mu> <nu>     size <n>
//   T <k>            ...               members <i> <j> ...
//   <n rows of n>
//   [GT <k>, <m rows of m>]
//
// In block `T k` row i, column j holds x_i gamma_k x_j; in block `GT k` it
// holds gamma_i x_k gamma_j. Grades are `p/q` or integers.

namespace gsg {

/// Significant lines of a document, with original line numbers.
class LineReader {
 public:
  explicit LineReader(std::string_view text) {
    std::size_t number = 0, pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      std::string_view line = text.substr(pos, end - pos);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      std::vector<std::string> tokens;
      std::istringstream is{std::string(line)};
      for (std::string tok; is >> tok;) tokens.push_back(tok);
      if (!tokens.empty()) lines_.push_back({number, std::move(tokens)});
      if (end == text.size()) break;
      pos = end + 1;
    }
  }

  bool done() const noexcept { return next_ == lines_.size(); }

  /// Line number of the next significant line (or one past the last).
  std::size_t line_number() const {
    return done() ? (lines_.empty() ? 1 : lines_.back().number + 1) : lines_[next_].number;
  }

  const std::vector<std::string>& peek() const {
    if (done()) throw input_error(line_number(), "unexpected end of input");
    return lines_[next_].tokens;
  }

  const std::vector<std::string>& take() {
    const auto& t = peek();
    ++next_;
    return t;
  }

  /// Consumes a line that must be exactly `keyword <value>` and returns value.
  std::string take_keyword(std::string_view keyword) {
    std::size_t at = line_number();
    const auto& t = take();
    if (t.size() != 2 || t[0] != keyword)
      throw input_error(at, "expected '" + std::string(keyword) + " <value>'");
    return t[1];
  }

  std::size_t parse_index(const std::string& tok, std::size_t bound, std::size_t at) const {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw input_error(at, "non-integer token '" + tok + "'");
    if (v >= bound)
      throw input_error(at, "index " + tok + " out of range (must be < " + std::to_string(bound) + ")");
    return v;
  }

  std::size_t parse_count(const std::string& tok, std::size_t at) const {
    std::size_t v = parse_index(tok, static_cast<std::size_t>(-1), at);
    if (v == 0) throw input_error(at, "count must be positive");
    return v;
  }

  void expect_end() const {
    if (!done()) throw input_error(line_number(), "unexpected trailing content");
  }

 private:
  struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
  };
  std::vector<Line> lines_;
  std::size_t next_ = 0;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// ---- GSG -------------------------------------------------------------------

inline GammaSemigroup parse_gsg(LineReader& in) {
  std::size_t at = in.line_number();
  if (in.take_keyword("GSG") != "1") throw input_error(at, "unsupported GSG version");
  at = in.line_number();
  std::size_t n = in.parse_count(in.take_keyword("S"), at);
  at = in.line_number();
  std::size_t m = in.parse_count(in.take_keyword("G"), at);

  auto read_square = [&](std::size_t rows, std::size_t bound, auto&& store) {
    for (std::size_t i = 0; i < rows; ++i) {
      std::size_t row_at = in.line_number();
      const auto& t = in.take();
      if (t.size() != rows)
        throw input_error(row_at, "expected " + std::to_string(rows) + " entries, found " +
                                      std::to_string(t.size()));
      for (std::size_t j = 0; j < rows; ++j) store(i, j, in.parse_index(t[j], bound, row_at));
    }
  };

  std::vector<Index> table(n * m * n);
  for (std::size_t k = 0; k < m; ++k) {
    at = in.line_number();
    if (in.parse_index(in.take_keyword("T"), m, at) != k)
      throw input_error(at, "expected block T " + std::to_string(k));
    read_square(n, n, [&](std::size_t i, std::size_t j, Index v) { table[(i * m + k) * n + j] = v; });
  }

  std::optional<std::vector<Index>> gamma_table;
  if (!in.done() && in.peek().front() == "GT") {
    gamma_table.emplace(m * n * m);
    for (std::size_t k = 0; k < n; ++k) {
      at = in.line_number();
      if (in.parse_index(in.take_keyword("GT"), n, at) != k)
        throw input_error(at, "expected block GT " + std::to_string(k));
      read_square(m, m, [&](std::size_t i, std::size_t j, Index v) { (*gamma_table)[(i * n + k) * m + j] = v; });
    }
  }
  return GammaSemigroup(n, m, std::move(table), std::move(gamma_table));
}

inline GammaSemigroup parse_gsg_text(std::string_view text) {
  LineReader in(text);
  auto s = parse_gsg(in);
  in.expect_end();
  return s;
}

inline std::string write_gsg(const GammaSemigroup& s) {
  std::ostringstream os;
  os << "GSG 1\nS " << s.s_size() << "\nG " << s.g_size() << '\n';
  for (Index k = 0; k < s.g_size(); ++k) {
    os << "T " << k << '\n';
    for (Index i = 0; i < s.s_size(); ++i)
      for (Index j = 0; j < s.s_size(); ++j) os << s.product(i, k, j) << (j + 1 == s.s_size() ? '\n' : ' ');
  }
  if (s.has_gamma_table()) {
    for (Index k = 0; k < s.s_size(); ++k) {
      os << "GT " << k << '\n';
      for (Index i = 0; i < s.g_size(); ++i)
        for (Index j = 0; j < s.g_size(); ++j)
          os << s.gamma_product(i, k, j) << (j + 1 == s.g_size() ? '\n' : ' ');
    }
  }
  return os.str();
}

// ---- IFS / SET -------------------------------------------------------------

inline IFSubset parse_ifs(LineReader& in) {
  std::size_t at = in.line_number();
  if (in.take_keyword("IFS") != "1") throw input_error(at, "unsupported IFS version");
  at = in.line_number();
  Carrier carrier;
  try {
    carrier = parse_carrier(in.take_keyword("carrier"));
  } catch (const input_error& e) {
    throw input_error(at, e.what());
  }
  std::vector<Grade> mu, nu;
  while (!in.done()) {
    const auto& peek = in.peek();
    if (peek.front().empty() || !std::isdigit(static_cast<unsigned char>(peek.front().front()))) break;
    at = in.line_number();
    const auto& t = in.take();
    if (t.size() != 3) throw input_error(at, "expected '<index> <mu> <nu>'");
    if (in.parse_index(t[0], mu.size() + 1, at) != mu.size())
      throw input_error(at, "expected element " + std::to_string(mu.size()));
    try {
      mu.push_back(Grade::parse(t[1]));
      nu.push_back(Grade::parse(t[2]));
    } catch (const input_error& e) {
      throw input_error(at, e.what());
    }
    if (!sum_at_most_one(mu.back(), nu.back()))
      throw input_error(at, "element " + t[0] + ": mu + nu exceeds 1");
  }
  if (mu.empty()) throw input_error(in.line_number(), "IFS has no elements");
  return IFSubset(carrier, std::move(mu), std::move(nu));
}

inline std::string write_ifs(const IFSubset& a) {
  std::ostringstream os;
  os << "IFS 1\ncarrier " << to_string(a.carrier()) << '\n';
  for (Index i = 0; i < a.carrier_size(); ++i) os << i << ' ' << a.mu(i) << ' ' << a.nu(i) << '\n';
  return os.str();
}

inline CrispSubset parse_set(LineReader& in) {
  std::size_t at = in.line_number();
  if (in.take_keyword("SET") != "1") throw input_error(at, "unsupported SET version");
  at = in.line_number();
  Carrier carrier;
  try {
    carrier = parse_carrier(in.take_keyword("carrier"));
  } catch (const input_error& e) {
    throw input_error(at, e.what());
  }
  at = in.line_number();
  std::size_t size = in.parse_count(in.take_keyword("size"), at);
  at = in.line_number();
  const auto& t = in.take();
  if (t.empty() || t[0] != "members") throw input_error(at, "expected 'members ...'");
  CrispSubset out(carrier, size);
  for (std::size_t i = 1; i < t.size(); ++i) {
    Index e = in.parse_index(t[i], size, at);
    if (out.contains(e)) throw input_error(at, "duplicate member " + t[i]);
    out.insert(e);
  }
  return out;
}

inline std::string write_set(const CrispSubset& p) {
  std::ostringstream os;
  os << "SET 1\ncarrier " << to_string(p.carrier()) << "\nsize " << p.carrier_size() << "\nmembers";
  for (Index e : p.elements()) os << ' ' << e;
  os << '\n';
  return os.str();
}

using Subset = std::variant<CrispSubset, IFSubset>;

/// Reads an IFS or SET document, whichever header comes next.
inline Subset parse_subset(LineReader& in) {
  const auto& head = in.peek();
  if (head.front() == "IFS") return parse_ifs(in);
  if (head.front() == "SET") return parse_set(in);
  throw input_error(in.line_number(), "expected an IFS or SET document");
}

inline Subset parse_subset_text(std::string_view text) {
  LineReader in(text);
  auto out = parse_subset(in);
  in.expect_end();
  return out;
}

inline std::string write_subset(const Subset& s) {
  return std::visit([](const auto& v) {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, IFSubset>)
      return write_ifs(v);
    else
      return write_set(v);
  }, s);
}

}  // namespace gsg
