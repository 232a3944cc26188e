#include "g2lab/text.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "g2lab/errors.hpp"

namespace g2lab {

std::string fmt_sig(double v, int digits) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string render_form(const Form& a, int digits) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [idx, c] : a.coeffs()) {  // map order is the canonical order
    double v = c;
    if (out.empty()) {
      if (v < 0) {
        out += "-";
        v = -v;
      }
    } else {
      out += (v < 0) ? " - " : " + ";
      v = std::abs(v);
    }
    out += fmt_sig(v, digits);
    out += "*e";
    out += idx.label();
  }
  return out;
}

namespace {

struct Cursor {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() { return s[pos]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("col " + std::to_string(pos + 1) + ": " + msg);
  }
};

double parse_number(Cursor& c) {
  c.skip_ws();
  size_t start = c.pos;
  double value = 0.0;
  auto res = std::from_chars(c.s.data() + start, c.s.data() + c.s.size(), value);
  if (res.ec != std::errc{}) c.fail("expected a decimal coefficient");
  c.pos = size_t(res.ptr - c.s.data());
  return value;
}

}  // namespace

Form parse_form(int dim, std::string_view expr, int required_grade) {
  Cursor c{expr};
  c.skip_ws();
  // the literal zero form
  if (!c.done() && c.peek() == '0') {
    size_t save = c.pos;
    ++c.pos;
    if (c.done()) {
      if (required_grade < 0)
        throw InputError("cannot infer the grade of the zero form here");
      return Form(dim, required_grade);
    }
    c.pos = save;
  }

  int grade = required_grade;
  Form out(dim, grade < 0 ? 0 : grade);
  bool first = true;
  bool have_terms = false;

  while (!c.done()) {
    double sign = 1.0;
    c.skip_ws();
    if (c.peek() == '+' || c.peek() == '-') {
      sign = (c.peek() == '-') ? -1.0 : 1.0;
      ++c.pos;
    } else if (!first) {
      c.fail(std::string("expected '+' or '-', got '") + c.peek() + "'");
    }
    c.skip_ws();
    if (c.done()) c.fail("dangling sign at end of expression");

    double coeff = 1.0;
    if (std::isdigit(static_cast<unsigned char>(c.peek())) || c.peek() == '.') {
      coeff = parse_number(c);
      c.skip_ws();
      if (!c.done() && c.peek() == '*') {
        ++c.pos;
        c.skip_ws();
      }
    }
    if (c.done() || (c.peek() != 'e' && c.peek() != 'E'))
      c.fail("expected a monomial 'e<digits>'");
    ++c.pos;

    std::vector<int> indices;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
      int idx = c.peek() - '0';
      if (idx < 1 || idx > dim)
        c.fail("index " + std::to_string(idx) + " outside 1.." + std::to_string(dim));
      indices.push_back(idx);
      ++c.pos;
    }
    if (indices.empty()) c.fail("monomial 'e' must be followed by indices");
    auto [idx, perm_sign] = IndexSet::sorted(indices);
    if (perm_sign == 0) c.fail("repeated index in monomial");

    int term_grade = int(indices.size());
    if (grade < 0) {
      grade = term_grade;
      out = Form(dim, grade);
    } else if (term_grade != grade) {
      c.fail("monomial grade " + std::to_string(term_grade) + " does not match expected grade " +
             std::to_string(grade));
    }
    out.add_term(idx, sign * double(perm_sign) * coeff);
    first = false;
    have_terms = true;
  }
  if (!have_terms) throw InputError("col 1: empty form expression");
  return out;
}

}  // namespace g2lab
