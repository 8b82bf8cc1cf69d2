#include "gammatri/clustermodels.hpp"

#include <algorithm>

namespace gammatri {

bool diagonals_cross(const Diagonal& p, const Diagonal& q) {
  return (p.a < q.a && q.a < p.b && p.b < q.b) || (q.a < p.a && p.a < q.b && q.b < p.b);
}

std::string diagonal_label(const Diagonal& d) { return "d" + std::to_string(d.a) + "-" + std::to_string(d.b); }

PolygonModel polygon_model(int n) {
  if (n < 1) throw DomainError("type A model needs rank >= 1");
  PolygonModel model;
  model.rank = n;
  model.polygon_size = n + 3;
  for (int i = 1; i <= n; ++i) model.snake.push_back(Diagonal{(i + 1) / 2, n + 2 - i / 2});
  for (int a = 0; a < model.polygon_size; ++a) {
    for (int b = a + 2; b < model.polygon_size; ++b) {
      if (a == 0 && b == model.polygon_size - 1) continue;  // polygon edge
      Diagonal d{a, b};
      if (std::find(model.snake.begin(), model.snake.end(), d) == model.snake.end()) model.positive.push_back(d);
    }
  }
  return model;
}

Subdivision type_a_subdivision(int n) {
  const PolygonModel model = polygon_model(n);
  const auto& pos = model.positive;

  std::vector<std::vector<bool>> compatible(pos.size(), std::vector<bool>(pos.size(), false));
  for (std::size_t a = 0; a < pos.size(); ++a)
    for (std::size_t b = 0; b < pos.size(); ++b) compatible[a][b] = a != b && !diagonals_cross(pos[a], pos[b]);

  std::vector<std::string> labels;
  std::vector<IndexMask> carriers;
  for (const auto& d : pos) {
    labels.push_back(diagonal_label(d));
    IndexMask m = 0;
    for (int i = 0; i < n; ++i)
      if (diagonals_cross(d, model.snake[i])) m |= IndexMask{1} << i;
    carriers.push_back(m);
  }
  std::vector<std::string> index_set;
  for (int i = 1; i <= n; ++i) index_set.push_back("s" + std::to_string(i));

  Complex c = Complex::generated_by(labels, maximal_cliques(compatible));
  return Subdivision(std::move(c), std::move(index_set), std::move(carriers));
}

Subdivision dihedral_subdivision(int m) {
  if (m < 2) throw DomainError("dihedral model needs m >= 2");
  std::vector<std::string> labels;
  std::vector<IndexMask> carriers;
  std::vector<Face> edges;
  for (int i = 1; i <= m; ++i) {
    labels.push_back("p" + std::to_string(i));
    carriers.push_back(i == 1 ? 0b01u : i == m ? 0b10u : 0b11u);
    if (i < m) edges.push_back(Face{i - 1, i});
  }
  return Subdivision(Complex::generated_by(labels, std::move(edges)), {"s1", "s2"}, std::move(carriers));
}

std::map<int, long> count_roots_by_support(int n) {
  std::map<int, long> counts;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) ++counts[b - a + 1];
  return counts;
}

}  // namespace gammatri
