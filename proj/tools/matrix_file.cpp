#include "matrix_file.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace nilcert::cli {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Length of the decimal literal starting at s[pos], or 0 if there is none.
std::size_t scan_decimal(std::string_view s, std::size_t pos, bool allow_sign) {
  std::size_t i = pos;
  if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < s.size() && is_digit(s[i])) ++i, ++digits;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && is_digit(s[i])) ++i, ++digits;
  }
  if (digits == 0) return 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    std::size_t j = i + 1;
    if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
    std::size_t exp_digits = 0;
    while (j < s.size() && is_digit(s[j])) ++j, ++exp_digits;
    if (exp_digits == 0) return 0;
    i = j;
  }
  return i - pos;
}

double to_double(std::string_view literal) {
  const std::string copy(literal);
  const double value = std::strtod(copy.c_str(), nullptr);
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite value '" + copy + "'");
  return value;
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

struct Line {
  std::string_view text;
  std::size_t number;
};

std::vector<Line> nonblank_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") != std::string_view::npos) lines.push_back({line, number});
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

void append_double(std::string& out, double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  out.append(buf, res.ptr);
}

}  // namespace

Complex parse_scalar(std::string_view token) {
  const std::size_t re_len = scan_decimal(token, 0, true);
  if (re_len == 0) throw std::invalid_argument("expected a decimal literal");
  const double re = to_double(token.substr(0, re_len));
  if (re_len == token.size()) return {re, 0.0};

  std::size_t pos = re_len;
  const char sign = token[pos];
  if (sign != '+' && sign != '-') {
    throw std::invalid_argument("unexpected character '" + std::string(1, sign) + "'");
  }
  ++pos;
  const std::size_t im_len = scan_decimal(token, pos, false);
  if (im_len == 0) throw std::invalid_argument("expected imaginary literal after sign");
  double im = to_double(token.substr(pos, im_len));
  pos += im_len;
  if (pos >= token.size() || token[pos] != 'i') {
    throw std::invalid_argument("imaginary part must end with 'i'");
  }
  if (pos + 1 != token.size()) throw std::invalid_argument("trailing characters after 'i'");
  if (sign == '-') im = -im;
  return {re, im};
}

std::string format_scalar(Complex z) {
  std::string out;
  append_double(out, z.real());
  if (z.imag() != 0.0) {
    if (!std::signbit(z.imag())) out.push_back('+');
    append_double(out, z.imag());
    out.push_back('i');
  }
  return out;
}

ComplexMatrix parse_matrix(std::string_view text) {
  const auto lines = nonblank_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "missing 'cmat <n>' header");

  const auto header = tokenize(lines[0].text);
  if (header.size() != 2 || header[0].text != "cmat") {
    throw ParseError(lines[0].number, 1, "expected header 'cmat <n>'");
  }
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(header[1].text.data(),
                                         header[1].text.data() + header[1].text.size(), n);
  if (ec != std::errc() || ptr != header[1].text.data() + header[1].text.size() || n == 0) {
    throw ParseError(lines[0].number, header[1].column, "order must be a positive integer");
  }

  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (r + 1 >= lines.size()) {
      const std::size_t last = lines.back().number;
      throw ParseError(last + 1, 1,
                       "expected " + std::to_string(n) + " rows, found " + std::to_string(r));
    }
    const Line& line = lines[r + 1];
    const auto tokens = tokenize(line.text);
    if (tokens.size() != n) {
      const std::size_t column =
          tokens.size() > n ? tokens[n].column : line.text.size() + 1;
      throw ParseError(line.number, column,
                       "row " + std::to_string(r + 1) + " expects " + std::to_string(n) +
                           " entries, found " + std::to_string(tokens.size()));
    }
    for (const Token& tok : tokens) {
      try {
        entries.push_back(parse_scalar(tok.text));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, tok.column,
                         "malformed entry '" + std::string(tok.text) + "': " + e.what());
      }
    }
  }
  if (lines.size() > n + 1) {
    throw ParseError(lines[n + 1].number, 1, "unexpected content after the last row");
  }
  return ComplexMatrix(n, std::move(entries));
}

std::string format_matrix(const ComplexMatrix& m) {
  std::string out = "cmat " + std::to_string(m.order()) + "\n";
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      if (j > 0) out.push_back(' ');
      out += format_scalar(m(i, j));
    }
    out.push_back('\n');
  }
  return out;
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << format_matrix(m);
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

}  // namespace nilcert::cli
