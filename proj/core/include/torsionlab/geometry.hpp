#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "torsionlab/rational.hpp"

namespace torsionlab {

/// A positive length that remembers its exact square when one exists.
///
/// Dirichlet eigenvalues of the in-scope shapes depend on L^2 only, so a leg
/// of sqrt(2) is carried as "square = 2" for exact spectral work and as the
/// nearest double everywhere else.
class Length {
 public:
  /// Any finite double is a dyadic rational, so its square is exact.
  Length(double value);  // NOLINT(google-explicit-constructor)

  static Length sqrt_of(const Rational& square);
  /// A rational length such as 3/2, keeping its exact (not rounded) square.
  static Length exact(const Rational& value);
  /// A length with no exact square; exact eigenvalue routines reject it.
  static Length inexact(double value);

  double value() const { return value_; }
  const std::optional<Rational>& exact_square() const { return square_; }
  /// Throws NoExactRepresentation when the square is unknown.
  const Rational& square() const;

  Length operator*(const Length& other) const;
  bool operator==(const Length& other) const;

  /// "2", "3/2", "sqrt2", or a 17-digit decimal for inexact lengths.
  std::string literal() const;

 private:
  Length(double value, std::optional<Rational> square);

  double value_;
  std::optional<Rational> square_;
};

enum class ShapeKind { Rectangle, RightIsoscelesTriangle };

/// Rectangle [0,L]x[0,H] or right isosceles triangle {0 <= x, 0 <= y, x + y <= L}.
class Shape {
 public:
  static Shape rectangle(Length length, Length height);
  static Shape square(Length side);
  static Shape triangle(Length leg);

  ShapeKind kind() const { return kind_; }
  bool is_rectangle() const { return kind_ == ShapeKind::Rectangle; }
  bool is_triangle() const { return kind_ == ShapeKind::RightIsoscelesTriangle; }

  /// Rectangle length, or triangle leg.
  const Length& length() const { return length_; }
  /// Rectangle height; equals the leg for triangles.
  const Length& height() const { return height_; }

  double area() const;
  Shape scaled(const Length& s) const;

  /// True when (x, y) lies in the closed shape, within a relative slack.
  bool contains(double x, double y) const;

  /// CLI literal: "square:1", "rect:2x1", "tri:sqrt2".
  std::string literal() const;

  bool operator==(const Shape& other) const;

 private:
  Shape(ShapeKind kind, Length length, Length height);

  ShapeKind kind_;
  Length length_;
  Length height_;
};

/// Nonempty list of shapes treated as pairwise disjoint. Only intrinsic
/// dimensions are stored.
class Region {
 public:
  Region(std::vector<Shape> components);  // NOLINT(google-explicit-constructor)
  Region(Shape single);                   // NOLINT(google-explicit-constructor)

  const std::vector<Shape>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }
  const Shape& operator[](std::size_t i) const { return components_[i]; }

  std::string literal() const;
  bool operator==(const Region& other) const = default;

 private:
  std::vector<Shape> components_;
};

double area(const Region& region);

/// Multiplies every linear dimension by s > 0.
Region scale(const Region& region, const Length& s);

/// C1 = square(1) + tri(2), C2 = rect(2x1) + tri(sqrt2).
std::pair<Region, Region> chapman_pair();

/// Parses `square:1`, `rect:2x1`, `tri:2`, `tri:sqrt2`, joined by '+'.
/// Throws InvalidArgument naming the malformed token.
Region parse_region(std::string_view text);
Shape parse_shape(std::string_view token);

}  // namespace torsionlab
