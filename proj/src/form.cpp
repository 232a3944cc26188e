#include "g2lab/form.hpp"

#include <cmath>
#include <string>

namespace g2lab {

Form::Form(int dim, int grade) : dim_(dim), grade_(grade) {
  if (dim < 1 || dim > IndexSet::max_index)
    throw InputError("form dimension must be in 1..9, got " + std::to_string(dim));
  if (grade < 0) throw InputError("negative form grade");
}

Form Form::monomial(int dim, IndexSet idx, double c) {
  Form f(dim, idx.grade());
  f.add_term(idx, c);
  return f;
}

double Form::coeff(IndexSet idx) const {
  auto it = c_.find(idx);
  return it == c_.end() ? 0.0 : it->second;
}

void Form::add_term(IndexSet idx, double c) {
  if (idx.grade() != grade_) throw InputError("index tuple length does not match form grade");
  for (int i : idx.indices())
    if (i > dim_) throw InputError("index " + std::to_string(i) + " exceeds form dimension");
  auto [it, inserted] = c_.try_emplace(idx, c);
  if (!inserted) it->second += c;
  if (it->second == 0.0) c_.erase(it);
}

void Form::set_term(IndexSet idx, double c) {
  if (idx.grade() != grade_) throw InputError("index tuple length does not match form grade");
  if (c == 0.0)
    c_.erase(idx);
  else
    c_[idx] = c;
}

double Form::inf_norm() const {
  double m = 0.0;
  for (const auto& [k, v] : c_) m = std::max(m, std::abs(v));
  return m;
}

double Form::two_norm() const {
  double s = 0.0;
  for (const auto& [k, v] : c_) s += v * v;
  return std::sqrt(s);
}

bool Form::approx_equal(const Form& other, double tolerance) const {
  if (dim_ != other.dim_ || grade_ != other.grade_) return false;
  Form diff = *this;
  diff -= other;
  return diff.inf_norm() <= tolerance;
}

Form& Form::operator+=(const Form& o) {
  if (dim_ != o.dim_ || grade_ != o.grade_)
    throw InputError("form sum requires equal dimension and grade");
  for (const auto& [k, v] : o.c_) add_term(k, v);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  if (dim_ != o.dim_ || grade_ != o.grade_)
    throw InputError("form difference requires equal dimension and grade");
  for (const auto& [k, v] : o.c_) add_term(k, -v);
  return *this;
}

Form& Form::operator*=(double s) {
  if (s == 0.0) {
    c_.clear();
    return *this;
  }
  for (auto& [k, v] : c_) v *= s;
  return *this;
}

Form Form::operator-() const {
  Form out = *this;
  out *= -1.0;
  return out;
}

Form wedge(const Form& a, const Form& b) {
  if (a.dim() != b.dim()) throw InputError("wedge requires equal dimensions");
  Form out(a.dim(), a.grade() + b.grade());
  for (const auto& [I, ca] : a.coeffs()) {
    for (const auto& [J, cb] : b.coeffs()) {
      if (auto m = IndexSet::merge(I, J))
        out.add_term(m->first, m->second * ca * cb);
    }
  }
  return out;
}

Form interior(const Eigen::VectorXd& v, const Form& a) {
  if (v.size() != a.dim()) throw InputError("interior product: vector dimension mismatch");
  if (a.grade() < 1) throw InputError("interior product of a grade-0 form");
  Form out(a.dim(), a.grade() - 1);
  for (const auto& [I, c] : a.coeffs()) {
    int pos = 0;
    for (int idx : I.indices()) {
      double vi = v(idx - 1);
      if (vi != 0.0) {
        auto rest = I.indices();
        rest.erase(rest.begin() + pos);
        double sign = (pos % 2 == 0) ? 1.0 : -1.0;
        out.add_term(IndexSet::of(rest), sign * vi * c);
      }
      ++pos;
    }
  }
  return out;
}

namespace {

// Replace position `pos` of monomial I by the 1-form with coefficients `row`,
// accumulating c * (prefix ^ row ^ suffix) into out.
void replace_at(Form& out, IndexSet I, int pos, const Eigen::RowVectorXd& row, double c) {
  auto idx = I.indices();
  std::vector<int> pre(idx.begin(), idx.begin() + pos);
  std::vector<int> post(idx.begin() + pos + 1, idx.end());
  IndexSet preset = IndexSet::of(pre);
  IndexSet postset = IndexSet::of(post);
  for (int j = 1; j <= out.dim(); ++j) {
    double w = row(j - 1);
    if (w == 0.0) continue;
    auto m1 = IndexSet::merge(preset, IndexSet::of({j}));
    if (!m1) continue;
    auto m2 = IndexSet::merge(m1->first, postset);
    if (!m2) continue;
    out.add_term(m2->first, double(m1->second * m2->second) * w * c);
  }
}

}  // namespace

Form gl_action(const Eigen::MatrixXd& D, const Form& a) {
  if (D.rows() != a.dim() || D.cols() != a.dim())
    throw InputError("gl_action: endomorphism shape mismatch");
  Form out(a.dim(), a.grade());
  for (const auto& [I, c] : a.coeffs()) {
    auto idx = I.indices();
    for (int pos = 0; pos < int(idx.size()); ++pos)
      replace_at(out, I, pos, D.row(idx[pos] - 1), c);
  }
  return out;
}

Form substitute(const Form& a, const Eigen::MatrixXd& M) {
  if (M.rows() != a.dim() || M.cols() != a.dim())
    throw InputError("substitute: matrix shape mismatch");
  Form out(a.dim(), a.grade());
  for (const auto& [I, c] : a.coeffs()) {
    Form term(a.dim(), 0);
    term.add_term(IndexSet{}, c);
    for (int idx : I.indices()) {
      Form one(a.dim(), 1);
      for (int j = 1; j <= a.dim(); ++j) {
        double w = M(idx - 1, j - 1);
        if (w != 0.0) one.add_term(IndexSet::of({j}), w);
      }
      term = wedge(term, one);
    }
    out += term;
  }
  return out;
}

std::vector<IndexSet> monomial_basis(int dim, int grade) {
  std::vector<IndexSet> out;
  if (grade < 0 || grade > dim) return out;
  std::vector<int> c(static_cast<size_t>(grade));
  for (int i = 0; i < grade; ++i) c[size_t(i)] = i + 1;
  while (true) {
    out.push_back(IndexSet::of(c));
    int i = grade - 1;
    while (i >= 0 && c[size_t(i)] == dim - (grade - 1 - i)) --i;
    if (i < 0) break;
    ++c[size_t(i)];
    for (int j = i + 1; j < grade; ++j) c[size_t(j)] = c[size_t(j - 1)] + 1;
  }
  return out;
}

Eigen::VectorXd to_vector(const Form& a) {
  auto basis = monomial_basis(a.dim(), a.grade());
  Eigen::VectorXd v(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) v(long(i)) = a.coeff(basis[i]);
  return v;
}

Form from_vector(int dim, int grade, const Eigen::VectorXd& v) {
  auto basis = monomial_basis(dim, grade);
  if (v.size() != long(basis.size()))
    throw InputError("from_vector: coefficient count does not match basis size");
  Form out(dim, grade);
  for (size_t i = 0; i < basis.size(); ++i) out.set_term(basis[i], v(long(i)));
  return out;
}

}  // namespace g2lab
