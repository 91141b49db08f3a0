#include "hypkonvex/even_fn.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include "hypkonvex/errors.hpp"

namespace hypkonvex {

struct EvenFn::Cache {
  std::once_flag once;
  FourierCoeffs coeffs;
};

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Vec2 ring_argmax(std::span<const Vec2> ring, Vec2 u) {
  Vec2 best = ring.front();
  double best_val = dot(u, best);
  for (const auto& v : ring) {
    const double val = dot(u, v);
    if (val > best_val) {
      best_val = val;
      best = v;
    }
  }
  return best;
}

Vec2 polygon_argmax(const Polygon& p, Vec2 u) { return ring_argmax(p.vertices(), u); }

double ellipse_value(const EllipseShape& e, Vec2 u) { return (e.matrix.transpose() * u).norm(); }

double ellipse_derivative(const EllipseShape& e, Vec2 u, Vec2 w) {
  const Mat2 at = e.matrix.transpose();
  const Vec2 au = at * u;
  return dot(au, at * w) / au.norm();
}

}  // namespace

std::vector<ShapeTag> tag_parts(const ShapeTag& tag) {
  const auto* sum = std::get_if<ShapeSum>(&tag);
  if (!sum) return {tag};
  std::vector<ShapeTag> out(sum->ellipses.begin(), sum->ellipses.end());
  if (sum->ring.size() == 2) out.emplace_back(Segment(sum->ring[0]));
  if (sum->ring.size() > 2) out.emplace_back(Polygon(sum->ring));
  return out;
}

double tag_value(const ShapeTag& tag, double theta) {
  const Vec2 u = unit(theta);
  return std::visit(
      overloaded{
          [](std::monostate) -> double { throw Error("tag_value on untagged function"); },
          [&](const EllipseShape& e) { return ellipse_value(e, u); },
          [&](const Segment& s) { return std::abs(dot(u, s.endpoint())); },
          [&](const Polygon& p) { return dot(u, polygon_argmax(p, u)); },
          [&](const ShapeSum& s) {
            double v = s.ring.empty() ? 0.0 : dot(u, ring_argmax(s.ring, u));
            for (const auto& e : s.ellipses) v += ellipse_value(e, u);
            return v;
          },
      },
      tag);
}

double tag_derivative(const ShapeTag& tag, double theta) {
  const Vec2 u = unit(theta);
  const Vec2 w = unit_perp(theta);
  return std::visit(
      overloaded{
          [](std::monostate) -> double { throw Error("tag_derivative on untagged function"); },
          [&](const EllipseShape& e) { return ellipse_derivative(e, u, w); },
          [&](const Segment& s) {
            const double c = dot(u, s.endpoint());
            return (c >= 0.0 ? 1.0 : -1.0) * dot(w, s.endpoint());
          },
          [&](const Polygon& p) { return dot(w, polygon_argmax(p, u)); },
          [&](const ShapeSum& s) {
            double v = s.ring.empty() ? 0.0 : dot(w, ring_argmax(s.ring, u));
            for (const auto& e : s.ellipses) v += ellipse_derivative(e, u, w);
            return v;
          },
      },
      tag);
}

EvenFn::EvenFn(std::vector<double> samples, ShapeTag tag)
    : samples_(std::move(samples)), tag_(std::move(tag)), cache_(std::make_shared<Cache>()) {
  const std::size_t M = samples_.size();
  if (M == 0 || M % 4 != 0) {
    throw InvalidShape("grid size must be a positive multiple of 4, got " + std::to_string(M));
  }
  double peak = 0.0;
  for (double v : samples_) {
    if (!std::isfinite(v)) throw InvalidShape("non-finite sample");
    peak = std::max(peak, std::abs(v));
  }
  const double tol = 1e-12 * (1.0 + peak);
  const std::size_t half = M / 2;
  for (std::size_t j = 0; j < half; ++j) {
    if (std::abs(samples_[j] - samples_[j + half]) > tol) {
      throw InvalidShape("function is not pi-periodic at sample " + std::to_string(j));
    }
  }
}

EvenFn EvenFn::constant(std::size_t M, double value) {
  // A positive constant is the support function of the disc of that radius.
  ShapeTag tag;
  if (value > 0.0) tag = EllipseShape{Mat2::diag(value, value)};
  return EvenFn(std::vector<double>(M, value), std::move(tag));
}

EvenFn EvenFn::from_function(std::size_t M, const std::function<double(double)>& f) {
  if (M == 0 || M % 4 != 0) {
    throw InvalidShape("grid size must be a positive multiple of 4, got " + std::to_string(M));
  }
  std::vector<double> s(M);
  const std::size_t half = M / 2;
  for (std::size_t j = 0; j < half; ++j) {
    s[j] = f(kTwoPi * static_cast<double>(j) / static_cast<double>(M));
    s[j + half] = s[j];
  }
  return EvenFn(std::move(s));
}

double EvenFn::max_abs() const {
  double peak = 0.0;
  for (double v : samples_) peak = std::max(peak, std::abs(v));
  return peak;
}

const FourierCoeffs& EvenFn::fourier() const {
  std::call_once(cache_->once, [this] { cache_->coeffs = real_dft(samples_); });
  return cache_->coeffs;
}

double EvenFn::eval_at(double theta) const {
  if (tagged()) return tag_value(tag_, theta);
  return eval_trig(fourier(), theta);
}

double EvenFn::derivative_at(double theta) const {
  if (tagged()) return tag_derivative(tag_, theta);
  return eval_trig_derivative(fourier(), theta);
}

EvenFn EvenFn::untagged() const {
  EvenFn copy(*this);
  copy.tag_ = std::monostate{};
  return copy;
}

}  // namespace hypkonvex
