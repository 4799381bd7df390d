#pragma once

#include <vector>

namespace trispline {

// Dense bivariate polynomial over doubles: coeff(i,j) multiplies s^i t^j.
// Geometric coefficients (frame coordinates etc.) are irrational in
// general, so exactness stops at the shape module; these stay float.
class BivariatePoly {
 public:
  BivariatePoly() : ns_(1), nt_(1), c_(1, 0.0) {}
  BivariatePoly(int ns, int nt)
      : ns_(ns), nt_(nt), c_(static_cast<std::size_t>(ns) * nt, 0.0) {}

  static BivariatePoly constant(double v);
  // s * u(s)
  static BivariatePoly times_s(const std::vector<double>& u);
  // t * u(t)
  static BivariatePoly times_t(const std::vector<double>& u);
  // s * t * w(s,t)
  static BivariatePoly times_st(const BivariatePoly& w);

  int s_size() const { return ns_; }
  int t_size() const { return nt_; }
  double coeff(int i, int j) const;
  void add_coeff(int i, int j, double v);

  BivariatePoly operator+(const BivariatePoly& o) const;
  BivariatePoly scaled(double f) const;
  BivariatePoly swapped() const;  // W(t,s)
  BivariatePoly partial_s() const;
  BivariatePoly partial_t() const;

  double eval(double s, double t) const;

 private:
  int ns_, nt_;
  std::vector<double> c_;  // row-major, c_[i*nt_ + j]
};

}  // namespace trispline
