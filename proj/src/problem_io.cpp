#include "g2lab/problem_io.hpp"

#include <charconv>
#include <sstream>

#include "g2lab/errors.hpp"
#include "g2lab/text.hpp"

namespace g2lab {

namespace {

[[noreturn]] void fail(int line, size_t col, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ", col " + std::to_string(col + 1) + ": " +
                   msg);
}

// Re-throw a parse_form error with the line number and column offset applied.
[[noreturn]] void refail(int line, size_t base_col, const InputError& e) {
  std::string what = e.what();
  size_t col = base_col;
  if (what.rfind("col ", 0) == 0) {
    size_t colon = what.find(':');
    col = base_col + size_t(std::stoul(what.substr(4, colon - 4))) - 1;
    what = what.substr(colon + 2);
  }
  fail(line, col, what);
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  ProblemFile p;
  bool have_dim = false, have_phi = false;
  std::vector<bool> have_de;

  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++line_no;
    size_t line_begin = start;
    start = end + 1;

    std::string_view line = raw;
    if (size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    size_t indent = size_t(line.data() - (text.data() + line_begin));

    if (line.rfind("dim", 0) == 0) {
      if (have_dim) fail(line_no, indent, "duplicate dim line");
      std::string_view rest = strip(line.substr(3));
      int n = 0;
      auto res = std::from_chars(rest.data(), rest.data() + rest.size(), n);
      if (res.ec != std::errc{} || res.ptr != rest.data() + rest.size() || n < 1 || n > 9)
        fail(line_no, indent + 4, "dim must be an integer in 1..9");
      p.dim = n;
      have_dim = true;
      p.diffs.assign(size_t(n), Form(n, 2));
      have_de.assign(size_t(n), false);
      p.phi = Form(n, 3);
      continue;
    }
    if (!have_dim) fail(line_no, indent, "the first directive must be 'dim <n>'");

    if (line.rfind("de", 0) == 0) {
      std::string_view rest = strip(line.substr(2));
      int k = 0;
      auto res = std::from_chars(rest.data(), rest.data() + rest.size(), k);
      if (res.ec != std::errc{} || k < 1 || k > p.dim)
        fail(line_no, indent + 3, "de index must be in 1..dim");
      std::string_view after = strip(std::string_view(res.ptr, size_t(rest.data() + rest.size() - res.ptr)));
      if (after.empty() || after.front() != '=')
        fail(line_no, size_t(res.ptr - (text.data() + line_begin)), "expected '=' after 'de <k>'");
      std::string_view expr = strip(after.substr(1));
      size_t expr_col = size_t(expr.empty() ? raw.size() : size_t(expr.data() - (text.data() + line_begin)));
      if (have_de[size_t(k - 1)]) fail(line_no, indent, "duplicate 'de " + std::to_string(k) + "' line");
      try {
        p.diffs[size_t(k - 1)] = parse_form(p.dim, expr, 2);
      } catch (const InputError& e) {
        refail(line_no, expr_col, e);
      }
      have_de[size_t(k - 1)] = true;
      continue;
    }

    if (line.rfind("phi", 0) == 0) {
      std::string_view after = strip(line.substr(3));
      if (after.empty() || after.front() != '=') fail(line_no, indent + 4, "expected '=' after 'phi'");
      std::string_view expr = strip(after.substr(1));
      size_t expr_col = size_t(expr.empty() ? raw.size() : size_t(expr.data() - (text.data() + line_begin)));
      if (have_phi) fail(line_no, indent, "duplicate phi line");
      try {
        p.phi = parse_form(p.dim, expr, 3);
      } catch (const InputError& e) {
        refail(line_no, expr_col, e);
      }
      have_phi = true;
      continue;
    }

    fail(line_no, indent, "unknown directive (expected dim, de or phi)");
  }

  if (!have_dim) throw InputError("line 1, col 1: missing 'dim <n>' line");
  if (!have_phi) throw InputError("line " + std::to_string(line_no) + ", col 1: missing 'phi = ...' line");
  return p;
}

std::string render_problem(const ProblemFile& p, int digits) {
  std::ostringstream os;
  os << "dim " << p.dim << "\n";
  for (int k = 1; k <= p.dim; ++k)
    os << "de " << k << " = " << render_form(p.diffs[size_t(k - 1)], digits) << "\n";
  os << "phi = " << render_form(p.phi, digits) << "\n";
  return os.str();
}

}  // namespace g2lab
