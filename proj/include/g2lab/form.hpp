#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "g2lab/index_set.hpp"

namespace g2lab {

/// A left-invariant p-form over R^n (n <= 9), stored sparsely as a map from
/// canonical index tuples to coefficients. Exactly-zero coefficients are
/// dropped; the grade is carried even when no terms remain. Immutable in
/// spirit: every operation returns a fresh value.
class Form {
 public:
  Form(int dim, int grade);

  static Form monomial(int dim, IndexSet idx, double c = 1.0);

  int dim() const { return dim_; }
  int grade() const { return grade_; }

  const std::map<IndexSet, double>& coeffs() const { return c_; }

  double coeff(IndexSet idx) const;

  /// Accumulate c onto the given monomial (index set length must match grade).
  void add_term(IndexSet idx, double c);
  void set_term(IndexSet idx, double c);

  bool is_zero() const { return c_.empty(); }
  double inf_norm() const;
  double two_norm() const;

  bool approx_equal(const Form& other, double tolerance) const;

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(double s);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(double s, Form a) { return a *= s; }
  friend Form operator*(Form a, double s) { return a *= s; }
  Form operator-() const;

 private:
  int dim_;
  int grade_;
  std::map<IndexSet, double> c_;
};

/// Exterior product. Grades add (a form of grade > dim is identically zero).
Form wedge(const Form& a, const Form& b);

/// Interior product iota_v a; drops the grade by one. Grade-0 input is an error.
Form interior(const Eigen::VectorXd& v, const Form& a);

/// Infinitesimal GL-action theta(D) on forms: the derivation extending
/// theta(D)e^k = sum_j D(k,j) e^j. On left-invariant data this is the value of
/// the Lie derivative along the vector field generated by D.
Form gl_action(const Eigen::MatrixXd& D, const Form& a);

/// Frame substitution e^i -> sum_j M(i,j) f^j, re-expanded into canonical
/// monomials of the f-frame.
Form substitute(const Form& a, const Eigen::MatrixXd& M);

/// All grade-p index sets over 1..dim in lexicographic tuple order.
std::vector<IndexSet> monomial_basis(int dim, int grade);

/// Coefficients of `a` over monomial_basis(a.dim(), a.grade()).
Eigen::VectorXd to_vector(const Form& a);
Form from_vector(int dim, int grade, const Eigen::VectorXd& v);

}  // namespace g2lab
