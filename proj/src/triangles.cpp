#include "gammatri/triangles.hpp"

#include <algorithm>
#include <sstream>

namespace gammatri {

namespace {

IntPoly1 one_plus_x() { return IntPoly1{{0, 1}, {1, 1}}; }
IntPoly1 one_minus_x() { return IntPoly1{{0, 1}, {1, -1}}; }

// Greedy extraction in the basis x^i (1+x)^{d-2i}, i ascending. Leaves the
// unexplained part in `residual`.
std::vector<BigInt> gamma_loop(const IntPoly1& h, int d, IntPoly1& residual) {
  residual = h;
  std::vector<BigInt> gammas;
  for (int i = 0; 2 * i <= d; ++i) {
    BigInt g = residual.coeff(i);
    gammas.push_back(g);
    if (g != 0) residual -= (pow(one_plus_x(), d - 2 * i) * g).shifted(i);
  }
  return gammas;
}

}  // namespace

NotGammaRepresentable::NotGammaRepresentable(int row, std::string residual)
    : std::runtime_error("not gamma-representable" + (row >= 0 ? " at y^" + std::to_string(row) : std::string()) +
                         ", residual " + residual),
      row_(row),
      residual_(std::move(residual)) {}

GammaTriangle::GammaTriangle(IntPoly2 coefficients, int degree)
    : coefficients_(std::move(coefficients)), degree_(degree) {
  if (degree < 0) throw DomainError("gamma triangle degree must be nonnegative");
  for (const auto& [e, c] : coefficients_.terms()) {
    if (2 * e.i + e.j > degree) {
      throw DomainError("gamma triangle entry (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                        ") outside 2i+j <= " + std::to_string(degree));
    }
  }
}

GammaVector GammaTriangle::row_sums() const {
  GammaVector v{degree_, std::vector<BigInt>(degree_ / 2 + 1)};
  for (const auto& [e, c] : coefficients_.terms()) v.entries[e.i] += c;
  return v;
}

IntPoly1 h_from_f(const IntPoly1& f, int d) {
  if (f.degree() > d) throw DomainError("h_from_f: deg f = " + std::to_string(f.degree()) + " exceeds d = " + std::to_string(d));
  IntPoly1 h;
  for (const auto& [i, c] : f.terms()) h += (pow(one_minus_x(), d - i) * c).shifted(i);
  return h;
}

IntPoly1 f_from_h(const IntPoly1& h, int d) {
  if (h.degree() > d) throw DomainError("f_from_h: deg h = " + std::to_string(h.degree()) + " exceeds d = " + std::to_string(d));
  IntPoly1 f;
  for (const auto& [i, c] : h.terms()) f += (pow(one_plus_x(), d - i) * c).shifted(i);
  return f;
}

GammaVector gamma_from_h(const IntPoly1& h, int d) {
  if (h.degree() > d) throw DomainError("gamma_from_h: deg h = " + std::to_string(h.degree()) + " exceeds d = " + std::to_string(d));
  IntPoly1 residual;
  GammaVector v{d, gamma_loop(h, d, residual)};
  if (!residual.is_zero()) throw NotGammaRepresentable(-1, residual.to_string());
  return v;
}

IntPoly1 h_from_gamma(const GammaVector& g) {
  IntPoly1 h;
  for (std::size_t i = 0; i < g.entries.size(); ++i) {
    int k = static_cast<int>(i);
    h += (pow(one_plus_x(), g.degree - 2 * k) * g.entries[i]).shifted(k);
  }
  return h;
}

IntPoly2 h_triangle_from_f(const IntPoly2& F, int d) {
  IntPoly2 H;
  for (const auto& [e, c] : F.terms()) {
    if (e.i + e.j > d) throw DomainError("h_triangle_from_f: F entry beyond i + j <= d");
    H += IntPoly2::from_x(pow(one_minus_x(), d - e.i - e.j) * c).shifted(e.i + e.j, e.j);
  }
  return H;
}

IntPoly2 f_triangle_from_h(const IntPoly2& H, int d) {
  IntPoly2 F;
  for (const auto& [e, c] : H.terms()) {
    if (e.j > e.i) throw DomainError("f_triangle_from_h: H has y-degree above x-degree in a term");
    if (e.i > d) throw DomainError("f_triangle_from_h: H entry beyond x-degree d");
    F += IntPoly2::from_x(pow(one_plus_x(), d - e.i) * c).shifted(e.i - e.j, e.j);
  }
  return F;
}

GammaTriangle gamma_triangle_from_h(const IntPoly2& H, int d) {
  if (H.x_degree() > d) throw DomainError("gamma_triangle_from_h: x-degree of H exceeds d");
  const IntPoly2 one_plus_xy{{0, 0, 1}, {1, 1, 1}};
  IntPoly2 R = H;
  IntPoly2 gamma;
  for (int j = d; j >= 0; --j) {
    IntPoly1 slice = R.y_coefficient(j);
    if (slice.is_zero()) continue;
    if (slice.low_degree() < j) throw NotGammaRepresentable(j, slice.to_string());
    IntPoly1 unexplained;
    auto row = gamma_loop(slice.divided_by_x_power(j), d - j, unexplained);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] == 0) continue;
      int k = static_cast<int>(i);
      gamma.add_term(k, j, row[i]);
      R -= pow(one_plus_xy, j) * IntPoly2::from_x(pow(one_plus_x(), d - 2 * k - j) * row[i]).shifted(k, 0);
    }
    IntPoly1 left = R.y_coefficient(j);
    if (!left.is_zero()) throw NotGammaRepresentable(j, left.to_string());
  }
  if (!R.is_zero()) throw NotGammaRepresentable(0, R.to_string());
  return GammaTriangle(std::move(gamma), d);
}

IntPoly2 h_triangle_from_gamma(const GammaTriangle& g) {
  const IntPoly2 one_plus_xy{{0, 0, 1}, {1, 1, 1}};
  const IntPoly2 one_plus_x2{{0, 0, 1}, {1, 0, 1}};
  IntPoly2 H;
  for (const auto& [e, c] : g.coefficients().terms()) {
    H += (pow(one_plus_xy, e.j) * pow(one_plus_x2, g.degree() - 2 * e.i - e.j) * c).shifted(e.i, 0);
  }
  return H;
}

IntPoly2 f_triangle_from_gamma(const GammaTriangle& g) {
  const IntPoly2 x_one_plus_x{{1, 0, 1}, {2, 0, 1}};
  const IntPoly2 one_plus_x_plus_y{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}};
  const IntPoly2 one_plus_2x{{0, 0, 1}, {1, 0, 2}};
  IntPoly2 F;
  for (const auto& [e, c] : g.coefficients().terms()) {
    F += pow(x_one_plus_x, e.i) * pow(one_plus_x_plus_y, e.j) * pow(one_plus_2x, g.degree() - 2 * e.i - e.j) * c;
  }
  return F;
}

std::string render_matrix(const IntPoly2& p, int d, TriangleShape shape) {
  auto in_shape = [&](int i, int j) {
    switch (shape) {
      case TriangleShape::F: return i + j <= d;
      case TriangleShape::H: return j <= i && i <= d;
      case TriangleShape::Gamma: return 2 * i + j <= d;
    }
    return false;
  };
  int columns = std::max(shape == TriangleShape::Gamma ? d / 2 + 1 : d + 1, p.x_degree() + 1);
  int rows = std::max(d, p.y_degree());

  std::vector<std::vector<std::string>> cells;
  std::size_t width = 1;
  for (int j = rows; j >= 0; --j) {
    std::vector<std::string> line;
    for (int i = 0; i < columns; ++i) {
      BigInt c = p.coeff(i, j);
      std::string cell = (in_shape(i, j) || c != 0) ? c.str() : "";
      width = std::max(width, cell.size());
      line.push_back(std::move(cell));
    }
    cells.push_back(std::move(line));
  }
  std::ostringstream out;
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i > 0) text += ' ';
      text += std::string(width - line[i].size(), ' ') + line[i];
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  }
  return out.str();
}

}  // namespace gammatri
