#pragma once

#include <optional>
#include <string>
#include <vector>

namespace piwtilt {

// Input validation failures and bad CLI values. Mapped to exit code 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuiverArrow {
  int src = 0, tgt = 0;
  std::string label;
};

// Finite acyclic quiver. Vertex ids are strings; all internal work uses the
// index in the declared vertex order, which also fixes every iteration order.
class Quiver {
public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<std::tuple<std::string, std::string, std::string>> arrows);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<QuiverArrow>& arrows() const { return arrows_; }
  const std::string& vertex_name(int v) const { return vertices_[v]; }
  int vertex_index(const std::string& name) const;  // throws input_error if unknown

  // Number of arrows between u and v in the underlying graph (either direction).
  int edge_count(int u, int v) const;
  bool has_arrow(int u, int v) const;  // directed u -> v

  // reach[u][v]: directed path u -> v of length >= 0 exists.
  std::vector<std::vector<bool>> reachability() const;

  // Smallest convex full subquiver containing u and v; returns its vertex set
  // (sorted by declared order).
  std::vector<int> convex_hull_vertices(int u, int v) const;
  Quiver full_subquiver(const std::vector<int>& vertex_set) const;

  // All topological orders (sources first). Guarded; meant for small quivers.
  std::vector<std::vector<int>> all_topological_orders(size_t limit = 100000) const;
  std::vector<int> one_topological_order() const;

  static Quiver from_json_file(const std::string& path);
  static Quiver from_json_text(const std::string& text);
  std::string to_json() const;

private:
  void validate() const;
  std::vector<std::string> vertices_;
  std::vector<QuiverArrow> arrows_;
};

// A word in the generators s_u, stored as vertex indices.
using Word = std::vector<int>;

Word parse_word(const Quiver& q, const std::string& comma_separated);
std::string word_str(const Quiver& q, const Word& w);

}  // namespace piwtilt
