#include "trispline/bivariate.hpp"

#include <algorithm>

namespace trispline {

BivariatePoly BivariatePoly::constant(double v) {
  BivariatePoly r(1, 1);
  r.c_[0] = v;
  return r;
}

BivariatePoly BivariatePoly::times_s(const std::vector<double>& u) {
  BivariatePoly r(static_cast<int>(u.size()) + 1, 1);
  for (std::size_t i = 0; i < u.size(); ++i) r.add_coeff(int(i) + 1, 0, u[i]);
  return r;
}

BivariatePoly BivariatePoly::times_t(const std::vector<double>& u) {
  BivariatePoly r(1, static_cast<int>(u.size()) + 1);
  for (std::size_t j = 0; j < u.size(); ++j) r.add_coeff(0, int(j) + 1, u[j]);
  return r;
}

BivariatePoly BivariatePoly::times_st(const BivariatePoly& w) {
  BivariatePoly r(w.ns_ + 1, w.nt_ + 1);
  for (int i = 0; i < w.ns_; ++i)
    for (int j = 0; j < w.nt_; ++j) r.add_coeff(i + 1, j + 1, w.coeff(i, j));
  return r;
}

double BivariatePoly::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i >= ns_ || j >= nt_) return 0.0;
  return c_[static_cast<std::size_t>(i) * nt_ + j];
}

void BivariatePoly::add_coeff(int i, int j, double v) {
  c_[static_cast<std::size_t>(i) * nt_ + j] += v;
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
  BivariatePoly r(std::max(ns_, o.ns_), std::max(nt_, o.nt_));
  for (int i = 0; i < r.ns_; ++i)
    for (int j = 0; j < r.nt_; ++j)
      r.c_[static_cast<std::size_t>(i) * r.nt_ + j] = coeff(i, j) + o.coeff(i, j);
  return r;
}

BivariatePoly BivariatePoly::scaled(double f) const {
  BivariatePoly r = *this;
  for (auto& v : r.c_) v *= f;
  return r;
}

BivariatePoly BivariatePoly::swapped() const {
  BivariatePoly r(nt_, ns_);
  for (int i = 0; i < ns_; ++i)
    for (int j = 0; j < nt_; ++j) r.add_coeff(j, i, coeff(i, j));
  return r;
}

BivariatePoly BivariatePoly::partial_s() const {
  if (ns_ <= 1) return BivariatePoly();
  BivariatePoly r(ns_ - 1, nt_);
  for (int i = 1; i < ns_; ++i)
    for (int j = 0; j < nt_; ++j) r.add_coeff(i - 1, j, i * coeff(i, j));
  return r;
}

BivariatePoly BivariatePoly::partial_t() const {
  if (nt_ <= 1) return BivariatePoly();
  BivariatePoly r(ns_, nt_ - 1);
  for (int i = 0; i < ns_; ++i)
    for (int j = 1; j < nt_; ++j) r.add_coeff(i, j - 1, j * coeff(i, j));
  return r;
}

double BivariatePoly::eval(double s, double t) const {
  double acc = 0.0;
  for (int i = ns_ - 1; i >= 0; --i) {
    double row = 0.0;
    for (int j = nt_ - 1; j >= 0; --j)
      row = row * t + c_[static_cast<std::size_t>(i) * nt_ + j];
    acc = acc * s + row;
  }
  return acc;
}

}  // namespace trispline
