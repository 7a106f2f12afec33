#include "torsionlab/geometry.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <string>

#include "torsionlab/error.hpp"

namespace torsionlab {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw InvalidArgument(std::string(what) + " must be positive and finite");
  }
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Length parse_length(std::string_view text, std::string_view token) {
  try {
    if (text.starts_with("sqrt")) {
      std::string_view arg = text.substr(4);
      if (arg.starts_with("(") && arg.ends_with(")")) arg = arg.substr(1, arg.size() - 2);
      return Length::sqrt_of(parse_rational(arg));
    }
    const Rational q = parse_rational(text);
    if (q <= 0) throw InvalidArgument("nonpositive");
    return Length::exact(q);
  } catch (const InvalidArgument&) {
    throw InvalidArgument("malformed region token '" + std::string(token) + "'");
  }
}

}  // namespace

// ---------------------------------------------------------------- Length

Length::Length(double value) : value_(value) {
  require_positive(value, "length");
  const Rational r = exact_rational(value);
  square_ = r * r;
}

Length::Length(double value, std::optional<Rational> square)
    : value_(value), square_(std::move(square)) {
  require_positive(value, "length");
}

Length Length::sqrt_of(const Rational& square) {
  if (square <= 0) throw InvalidArgument("length square must be positive");
  return Length(std::sqrt(to_double(square)), square);
}

Length Length::exact(const Rational& value) {
  if (value <= 0) throw InvalidArgument("length must be positive");
  return Length(to_double(value), value * value);
}

Length Length::inexact(double value) { return Length(value, std::nullopt); }

const Rational& Length::square() const {
  if (!square_) {
    throw NoExactRepresentation("length " + literal() +
                                " has no exact rational square; no exact eigenvalue representation");
  }
  return *square_;
}

Length Length::operator*(const Length& other) const {
  std::optional<Rational> sq;
  if (square_ && other.square_) sq = *square_ * *other.square_;
  return Length(value_ * other.value_, std::move(sq));
}

bool Length::operator==(const Length& other) const {
  if (square_ && other.square_) return *square_ == *other.square_;
  return value_ == other.value_;
}

std::string Length::literal() const {
  if (square_) {
    Rational root;
    if (rational_sqrt(*square_, &root)) {
      if (denominator(root) == 1) return numerator(root).str();
      return format_rational(root);
    }
    const std::string sq = denominator(*square_) == 1 ? numerator(*square_).str()
                                                      : format_rational(*square_);
    return "sqrt" + sq;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value_);
  return buf;
}

// ---------------------------------------------------------------- Shape

Shape::Shape(ShapeKind kind, Length length, Length height)
    : kind_(kind), length_(std::move(length)), height_(std::move(height)) {}

Shape Shape::rectangle(Length length, Length height) {
  return Shape(ShapeKind::Rectangle, std::move(length), std::move(height));
}

Shape Shape::square(Length side) { return rectangle(side, side); }

Shape Shape::triangle(Length leg) {
  return Shape(ShapeKind::RightIsoscelesTriangle, leg, leg);
}

double Shape::area() const {
  const double l = length_.value();
  return is_rectangle() ? l * height_.value() : 0.5 * l * l;
}

Shape Shape::scaled(const Length& s) const {
  return Shape(kind_, length_ * s, height_ * s);
}

bool Shape::contains(double x, double y) const {
  const double l = length_.value();
  const double slack = 1e-12 * l;
  if (x < -slack || y < -slack) return false;
  if (is_rectangle()) return x <= l + slack && y <= height_.value() + slack;
  return x + y <= l + slack;
}

std::string Shape::literal() const {
  if (is_triangle()) return "tri:" + length_.literal();
  if (length_ == height_) return "square:" + length_.literal();
  return "rect:" + length_.literal() + "x" + height_.literal();
}

bool Shape::operator==(const Shape& other) const {
  return kind_ == other.kind_ && length_ == other.length_ && height_ == other.height_;
}

// ---------------------------------------------------------------- Region

Region::Region(std::vector<Shape> components) : components_(std::move(components)) {
  if (components_.empty()) throw InvalidArgument("region needs at least one component");
}

Region::Region(Shape single) : components_{std::move(single)} {}

std::string Region::literal() const {
  std::string out;
  for (const auto& s : components_) {
    if (!out.empty()) out += '+';
    out += s.literal();
  }
  return out;
}

double area(const Region& region) {
  double total = 0.0;
  for (const auto& s : region.components()) total += s.area();
  return total;
}

Region scale(const Region& region, const Length& s) {
  std::vector<Shape> out;
  out.reserve(region.size());
  for (const auto& c : region.components()) out.push_back(c.scaled(s));
  return Region(std::move(out));
}

std::pair<Region, Region> chapman_pair() {
  Region c1({Shape::square(1.0), Shape::triangle(2.0)});
  Region c2({Shape::rectangle(2.0, 1.0), Shape::triangle(Length::sqrt_of(2))});
  return {std::move(c1), std::move(c2)};
}

Shape parse_shape(std::string_view token_in) {
  const std::string token = trim(token_in);
  const auto colon = token.find(':');
  if (colon == std::string::npos || colon + 1 >= token.size()) {
    throw InvalidArgument("malformed region token '" + token + "'");
  }
  const std::string kind = token.substr(0, colon);
  const std::string_view dims = std::string_view(token).substr(colon + 1);
  if (kind == "square") return Shape::square(parse_length(dims, token));
  if (kind == "tri") return Shape::triangle(parse_length(dims, token));
  if (kind == "rect") {
    const auto x = dims.find('x');
    if (x == std::string_view::npos) {
      throw InvalidArgument("malformed region token '" + token + "'");
    }
    return Shape::rectangle(parse_length(dims.substr(0, x), token),
                            parse_length(dims.substr(x + 1), token));
  }
  throw InvalidArgument("malformed region token '" + token + "'");
}

Region parse_region(std::string_view text) {
  std::vector<Shape> parts;
  std::size_t start = 0;
  while (true) {
    const auto plus = text.find('+', start);
    const auto piece = text.substr(start, plus == std::string_view::npos ? plus : plus - start);
    parts.push_back(parse_shape(piece));
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return Region(std::move(parts));
}

}  // namespace torsionlab
