#include "trop/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace trop {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad_token(const std::string& token, const std::string& where) {
  std::string at = where.empty() ? "" : " at " + where;
  throw ParseError("cannot parse entry '" + token + "'" + at +
                   ": expected an integer, decimal, or p/q fraction");
}

}  // namespace

Rat parse_rational(const std::string& token, const std::string& where) {
  if (token == "-inf" || token == "inf") {
    std::string at = where.empty() ? "" : " at " + where;
    throw ParseError("entry '" + token + "'" + at + " is not allowed in a finite matrix");
  }
  std::string body = token;
  bool negative = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    negative = body[0] == '-';
    body = body.substr(1);
  }

  Rat value;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den) || den.find_first_not_of('0') == std::string::npos)
      bad_token(token, where);
    value = Rat(mpz_class(num), mpz_class(den));
    value.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string whole = body.substr(0, dot);
    std::string frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      bad_token(token, where);
    if (whole.empty()) whole = "0";
    mpz_class scale(1);
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rat(mpz_class(whole) * scale + mpz_class(frac.empty() ? "0" : frac), scale);
    value.canonicalize();
  } else {
    if (!all_digits(body)) bad_token(token, where);
    value = Rat(mpz_class(body));
  }
  if (negative) value = Rat(-value);
  return value;
}

Mat parse_matrix(std::istream& in, const std::string& source) {
  std::vector<std::vector<Rat>> rows;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<Rat> row;
    std::string token;
    while (ls >> token)
      row.push_back(parse_rational(token, source + ":" + std::to_string(lineno) + ", entry " +
                                              std::to_string(row.size() + 1)));
    if (row.empty()) continue;  // blank line
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError(source + ":" + std::to_string(lineno) + ": row has " +
                       std::to_string(row.size()) + " entries, expected " +
                       std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(source + ": no matrix rows found");
  Mat a(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      a(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return a;
}

Mat parse_matrix_string(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  return parse_matrix(in, source);
}

Mat read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  return parse_matrix(in, path);
}

Vec parse_vector(std::istream& in, const std::string& source) {
  Mat a = parse_matrix(in, source);
  if (a.cols() == 1) return a.col(0);
  if (a.rows() == 1) return a.row(0).transpose();
  throw ParseError(source + ": expected a vector (one row or one column), got " +
                   std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

Vec read_vector_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  return parse_vector(in, path);
}

std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string fnv1a_hex(const std::string& bytes) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[h & 0xF];
    h >>= 4;
  }
  return out;
}

namespace {

template <typename M, typename F>
std::string format_rows(const M& a, F entry) {
  std::string out;
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (j) out += ' ';
      out += entry(a(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string format_matrix(const Mat& a) {
  return format_rows(a, [](const Rat& q) { return rat_to_string(q); });
}

std::string format_matrix(const ExtMat& a) {
  return format_rows(a, [](const ExtRat& q) { return ext_to_string(q); });
}

std::string format_vector(const Vec& v) {
  std::string out;
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += rat_to_string(v(i));
  }
  return out;
}

}  // namespace trop
