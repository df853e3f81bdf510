#ifndef S1D_POTENTIAL_HPP
#define S1D_POTENTIAL_HPP

// Compactly supported piecewise-constant potentials.
//
// A potential is stored as breakpoints x_0 < x_1 < ... < x_m and the m
// values taken on the open pieces (x_{i-1}, x_i). It vanishes identically
// outside [x_0, x_m]. Scaling, summation and moments are exact on this
// representation, so nothing downstream ever samples a potential.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "s1d/error.hpp"

namespace s1d {

template <typename Scalar>
class BasicPotential {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  BasicPotential(Vector breakpoints, Vector values)
      : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (values_.size() == 0) {
      throw DomainError("make_piecewise", "values must not be empty");
    }
    if (breakpoints_.size() != values_.size() + 1) {
      throw DomainError("make_piecewise",
                        "need exactly one more breakpoint than values");
    }
    for (Eigen::Index i = 0; i < breakpoints_.size(); ++i) {
      if (!std::isfinite(static_cast<double>(breakpoints_[i]))) {
        throw DomainError("make_piecewise", "breakpoints must be finite");
      }
      if (i > 0 && !(breakpoints_[i] > breakpoints_[i - 1])) {
        throw DomainError("make_piecewise",
                          "breakpoints must be strictly increasing");
      }
    }
    for (Eigen::Index i = 0; i < values_.size(); ++i) {
      if (!std::isfinite(static_cast<double>(values_[i]))) {
        throw DomainError("make_piecewise", "values must be finite");
      }
    }
  }

  const Vector& breakpoints() const noexcept { return breakpoints_; }
  const Vector& values() const noexcept { return values_; }

  Eigen::Index pieces() const noexcept { return values_.size(); }
  Scalar left() const noexcept { return breakpoints_[0]; }
  Scalar right() const noexcept { return breakpoints_[breakpoints_.size() - 1]; }
  Scalar support_length() const noexcept { return right() - left(); }
  Scalar support_radius() const noexcept {
    using std::abs;
    return std::max(abs(left()), abs(right()));
  }
  Scalar piece_left(Eigen::Index i) const noexcept { return breakpoints_[i]; }
  Scalar piece_right(Eigen::Index i) const noexcept { return breakpoints_[i + 1]; }
  Scalar piece_length(Eigen::Index i) const noexcept {
    return breakpoints_[i + 1] - breakpoints_[i];
  }

  Scalar min_value() const { return values_.minCoeff(); }
  Scalar max_value() const { return values_.maxCoeff(); }

  /// True when every stored value is zero.
  bool is_zero() const { return (values_.array() == Scalar(0)).all(); }

  /// Value at x. Interior breakpoints take the value of the piece to the
  /// right; the right end of the support takes the last value.
  Scalar operator()(Scalar x) const {
    if (x < left() || x > right()) return Scalar(0);
    const auto* first = breakpoints_.data();
    const auto* last = first + breakpoints_.size();
    auto it = std::upper_bound(first, last, x);
    auto idx = static_cast<Eigen::Index>(it - first) - 1;
    return values_[std::min(idx, pieces() - 1)];
  }

  friend bool operator==(const BasicPotential& a, const BasicPotential& b) {
    return a.breakpoints_.size() == b.breakpoints_.size() &&
           a.breakpoints_ == b.breakpoints_ && a.values_ == b.values_;
  }

 private:
  Vector breakpoints_;
  Vector values_;
};

using Potential = BasicPotential<double>;

template <typename Scalar>
BasicPotential<Scalar> make_piecewise(std::span<const Scalar> breakpoints,
                                      std::span<const Scalar> values) {
  using Vector = typename BasicPotential<Scalar>::Vector;
  Vector b(static_cast<Eigen::Index>(breakpoints.size()));
  Vector v(static_cast<Eigen::Index>(values.size()));
  std::copy(breakpoints.begin(), breakpoints.end(), b.data());
  std::copy(values.begin(), values.end(), v.data());
  return BasicPotential<Scalar>(std::move(b), std::move(v));
}

inline Potential make_piecewise(std::initializer_list<double> breakpoints,
                                std::initializer_list<double> values) {
  return make_piecewise<double>(
      std::span<const double>(breakpoints.begin(), breakpoints.size()),
      std::span<const double>(values.begin(), values.size()));
}

inline Potential make_piecewise(const std::vector<double>& breakpoints,
                                const std::vector<double>& values) {
  return make_piecewise<double>(std::span<const double>(breakpoints),
                                std::span<const double>(values));
}

/// x -> eps^(-order) * P(x / eps). Exact on the representation.
template <typename Scalar>
BasicPotential<Scalar> scale(const BasicPotential<Scalar>& p, Scalar eps,
                             int order) {
  if (!(eps > Scalar(0))) throw DomainError("scale", "eps must be positive");
  if (order != 1 && order != 2) {
    throw DomainError("scale", "order must be 1 or 2");
  }
  const Scalar factor = order == 1 ? Scalar(1) / eps : Scalar(1) / (eps * eps);
  return BasicPotential<Scalar>(p.breakpoints() * eps, p.values() * factor);
}

template <typename Scalar>
BasicPotential<Scalar> operator*(Scalar c, const BasicPotential<Scalar>& p) {
  return BasicPotential<Scalar>(p.breakpoints(), p.values() * c);
}

template <typename Scalar>
BasicPotential<Scalar> operator-(const BasicPotential<Scalar>& p) {
  return BasicPotential<Scalar>(p.breakpoints(), -p.values());
}

/// Pointwise sum over the union of breakpoints. Breakpoints closer than
/// 1e-12 times the hull length are merged. Identically zero summands are
/// skipped unless every summand is zero.
template <typename Scalar>
BasicPotential<Scalar> sum(std::span<const BasicPotential<Scalar>> ps) {
  if (ps.empty()) throw DomainError("sum", "need at least one potential");
  std::vector<const BasicPotential<Scalar>*> terms;
  for (const auto& p : ps) {
    if (!p.is_zero()) terms.push_back(&p);
  }
  if (terms.empty()) return ps.front();
  if (terms.size() == 1) return *terms.front();

  std::vector<Scalar> all;
  for (const auto* p : terms) {
    all.insert(all.end(), p->breakpoints().data(),
               p->breakpoints().data() + p->breakpoints().size());
  }
  std::sort(all.begin(), all.end());
  const Scalar merge_tol = Scalar(1e-12) * (all.back() - all.front());

  std::vector<Scalar> grid{all.front()};
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i] - grid.back() > merge_tol) {
      grid.push_back(all[i]);
    } else if (i + 1 == all.size() && grid.size() > 1) {
      grid.back() = all[i];
    }
  }
  if (grid.size() < 2) throw DomainError("sum", "degenerate support");

  std::vector<Scalar> values(grid.size() - 1, Scalar(0));
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const Scalar mid = (grid[i] + grid[i + 1]) / Scalar(2);
    for (const auto* p : terms) values[i] += (*p)(mid);
  }
  return make_piecewise<Scalar>(std::span<const Scalar>(grid),
                                std::span<const Scalar>(values));
}

template <typename Scalar>
BasicPotential<Scalar> sum(std::initializer_list<BasicPotential<Scalar>> ps) {
  return sum<Scalar>(std::span<const BasicPotential<Scalar>>(ps.begin(), ps.size()));
}

template <typename Scalar>
BasicPotential<Scalar> operator+(const BasicPotential<Scalar>& a,
                                 const BasicPotential<Scalar>& b) {
  return sum<Scalar>({a, b});
}

enum class MomentKind {
  plain,             ///< integral of x^k P(x)
  negative_part_abs  ///< integral of |x|^k |min(P(x), 0)|
};

namespace detail {

// Integral of x^k over [a, b].
template <typename Scalar>
Scalar power_integral(Scalar a, Scalar b, int k) {
  using std::pow;
  const Scalar n = Scalar(k + 1);
  return (pow(b, k + 1) - pow(a, k + 1)) / n;
}

// Integral of |x|^k over [a, b].
template <typename Scalar>
Scalar abs_power_integral(Scalar a, Scalar b, int k) {
  if (a >= Scalar(0)) return power_integral(a, b, k);
  if (b <= Scalar(0)) return power_integral(-b, -a, k);
  return power_integral(Scalar(0), -a, k) + power_integral(Scalar(0), b, k);
}

// Integral of exp(alpha x) over [a, b], stable as alpha -> 0.
template <typename Scalar>
Scalar exp_integral(Scalar a, Scalar b, Scalar alpha) {
  using std::exp;
  using std::expm1;
  const Scalar len = b - a;
  if (alpha == Scalar(0)) return len;
  return exp(alpha * a) * expm1(alpha * len) / alpha;
}

}  // namespace detail

template <typename Scalar>
Scalar moment(const BasicPotential<Scalar>& p, int k,
              MomentKind kind = MomentKind::plain) {
  if (k < 0) throw DomainError("moment", "order k must be non-negative");
  Scalar total(0);
  for (Eigen::Index i = 0; i < p.pieces(); ++i) {
    const Scalar a = p.piece_left(i);
    const Scalar b = p.piece_right(i);
    const Scalar v = p.values()[i];
    if (kind == MomentKind::plain) {
      total += v * detail::power_integral(a, b, k);
    } else if (v < Scalar(0)) {
      total += -v * detail::abs_power_integral(a, b, k);
    }
  }
  return total;
}

/// Integral of P over [a, b] (any a <= b, clipped to the support).
template <typename Scalar>
Scalar integral(const BasicPotential<Scalar>& p, Scalar a, Scalar b) {
  Scalar total(0);
  for (Eigen::Index i = 0; i < p.pieces(); ++i) {
    const Scalar lo = std::max(a, p.piece_left(i));
    const Scalar hi = std::min(b, p.piece_right(i));
    if (hi > lo) total += p.values()[i] * (hi - lo);
  }
  return total;
}

/// Integral of P(x) exp(alpha |x|) over the real line, in closed form.
template <typename Scalar>
Scalar exp_moment(const BasicPotential<Scalar>& p, Scalar alpha) {
  Scalar total(0);
  for (Eigen::Index i = 0; i < p.pieces(); ++i) {
    const Scalar a = p.piece_left(i);
    const Scalar b = p.piece_right(i);
    const Scalar v = p.values()[i];
    if (v == Scalar(0)) continue;
    if (b <= Scalar(0)) {
      total += v * detail::exp_integral(-b, -a, alpha);
    } else if (a >= Scalar(0)) {
      total += v * detail::exp_integral(a, b, alpha);
    } else {
      total += v * (detail::exp_integral(Scalar(0), -a, alpha) +
                    detail::exp_integral(Scalar(0), b, alpha));
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Built-in families

enum class PotentialKind { square_well, square_barrier, step_dipole, double_step, custom };

struct PotentialSpec {
  PotentialKind kind = PotentialKind::custom;
  std::map<std::string, double> params;
  // Only used by PotentialKind::custom.
  std::vector<double> breakpoints;
  std::vector<double> values;
};

template <typename Scalar = double>
BasicPotential<Scalar> constant_potential(Scalar value, Scalar a, Scalar b) {
  const Scalar bp[] = {a, b};
  const Scalar v[] = {value};
  return make_piecewise<Scalar>(bp, v);
}

/// The zero potential carried on [a, b].
template <typename Scalar = double>
BasicPotential<Scalar> zero_potential(Scalar a = Scalar(-1), Scalar b = Scalar(1)) {
  return constant_potential<Scalar>(Scalar(0), a, b);
}

/// -depth on (-w, w).
template <typename Scalar = double>
BasicPotential<Scalar> square_well(Scalar depth, Scalar half_width = Scalar(1)) {
  if (!(depth > Scalar(0))) throw DomainError("builtin", "square_well depth must be positive");
  if (!(half_width > Scalar(0))) throw DomainError("builtin", "half_width must be positive");
  return constant_potential<Scalar>(-depth, -half_width, half_width);
}

/// +height on (-w, w).
template <typename Scalar = double>
BasicPotential<Scalar> square_barrier(Scalar height, Scalar half_width = Scalar(1)) {
  if (!(height > Scalar(0))) throw DomainError("builtin", "square_barrier height must be positive");
  if (!(half_width > Scalar(0))) throw DomainError("builtin", "half_width must be positive");
  return constant_potential<Scalar>(height, -half_width, half_width);
}

/// +h on (-w, 0), -h on (0, w): zero mean.
template <typename Scalar = double>
BasicPotential<Scalar> step_dipole(Scalar height, Scalar half_width = Scalar(1)) {
  if (!(height > Scalar(0))) throw DomainError("builtin", "step_dipole height must be positive");
  if (!(half_width > Scalar(0))) throw DomainError("builtin", "half_width must be positive");
  const Scalar bp[] = {-half_width, Scalar(0), half_width};
  const Scalar v[] = {height, -height};
  return make_piecewise<Scalar>(bp, v);
}

/// left on (-w, 0), right on (0, w).
template <typename Scalar = double>
BasicPotential<Scalar> double_step(Scalar left, Scalar right, Scalar half_width = Scalar(1)) {
  if (!(half_width > Scalar(0))) throw DomainError("builtin", "half_width must be positive");
  const Scalar bp[] = {-half_width, Scalar(0), half_width};
  const Scalar v[] = {left, right};
  return make_piecewise<Scalar>(bp, v);
}

namespace detail {

inline double param(const PotentialSpec& spec, const std::string& name) {
  auto it = spec.params.find(name);
  if (it == spec.params.end()) {
    throw DomainError("builtin", "missing parameter '" + name + "'");
  }
  return it->second;
}

inline double param_or(const PotentialSpec& spec, const std::string& name, double fallback) {
  auto it = spec.params.find(name);
  return it == spec.params.end() ? fallback : it->second;
}

}  // namespace detail

template <typename Scalar = double>
BasicPotential<Scalar> builtin(const PotentialSpec& spec) {
  const Scalar w = Scalar(detail::param_or(spec, "half_width", 1.0));
  switch (spec.kind) {
    case PotentialKind::square_well:
      return square_well<Scalar>(Scalar(detail::param(spec, "depth")), w);
    case PotentialKind::square_barrier:
      return square_barrier<Scalar>(Scalar(detail::param(spec, "height")), w);
    case PotentialKind::step_dipole:
      return step_dipole<Scalar>(Scalar(detail::param(spec, "height")), w);
    case PotentialKind::double_step:
      return double_step<Scalar>(Scalar(detail::param(spec, "left")),
                                 Scalar(detail::param(spec, "right")), w);
    case PotentialKind::custom: {
      std::vector<Scalar> b(spec.breakpoints.begin(), spec.breakpoints.end());
      std::vector<Scalar> v(spec.values.begin(), spec.values.end());
      return make_piecewise<Scalar>(std::span<const Scalar>(b), std::span<const Scalar>(v));
    }
  }
  throw DomainError("builtin", "unknown potential kind");
}

}  // namespace s1d

#endif  // S1D_POTENTIAL_HPP
