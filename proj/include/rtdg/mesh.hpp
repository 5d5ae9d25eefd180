#pragma once

#include <array>
#include <cstddef>

namespace rtdg {

enum class Orientation { kVertical, kHorizontal };

// Side of a cell, in the local order used throughout: left, right, bottom, top.
enum class Side { kLeft = 0, kRight = 1, kBottom = 2, kTop = 3 };

// Quadrants around a vertex.
enum class Quadrant { kDL = 0, kDR = 1, kUL = 2, kUR = 3 };

inline constexpr int kNoCell = -1;

/// A mesh face. Vertical faces carry the fixed normal +x, horizontal faces +y;
/// `lower` is the cell on the left (vertical) or below (horizontal), `upper`
/// the cell on the right or above. Missing neighbours are kNoCell.
struct FaceRef {
  Orientation orientation = Orientation::kVertical;
  int i = 0;
  int j = 0;
  int id = 0;  // index within its orientation family
  int lower = kNoCell;
  int upper = kNoCell;

  bool is_boundary() const { return lower == kNoCell || upper == kNoCell; }
  bool operator==(const FaceRef&) const = default;
};

struct VertexRef {
  int i = 0;
  int j = 0;
  int id = 0;
  double x = 0.0;
  double y = 0.0;
  // Indexed by Quadrant; kNoCell where the cell lies outside the domain.
  std::array<int, 4> cells{kNoCell, kNoCell, kNoCell, kNoCell};

  int cell(Quadrant q) const { return cells[static_cast<std::size_t>(q)]; }
  int cell_count() const;
};

struct CellFaces {
  FaceRef left;
  FaceRef right;
  FaceRef bottom;
  FaceRef top;
};

/// Uniform Cartesian mesh of a rectangle. Cells, faces and vertices are
/// linearized row-major with i running fastest.
class CartesianMesh {
 public:
  CartesianMesh(double x_min, double y_min, double x_max, double y_max, int nx, int ny);

  double x_min() const { return x_min_; }
  double y_min() const { return y_min_; }
  double x_max() const { return x_min_ + nx_ * dx_; }
  double y_max() const { return y_min_ + ny_ * dy_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double dx() const { return dx_; }
  double dy() const { return dy_; }
  double cell_area() const { return dx_ * dy_; }

  int num_cells() const { return nx_ * ny_; }
  int num_vertical_faces() const { return (nx_ + 1) * ny_; }
  int num_horizontal_faces() const { return nx_ * (ny_ + 1); }
  int num_faces() const { return num_vertical_faces() + num_horizontal_faces(); }
  int num_vertices() const { return (nx_ + 1) * (ny_ + 1); }

  int cell_id(int i, int j) const { return j * nx_ + i; }
  int cell_i(int cell) const { return cell % nx_; }
  int cell_j(int cell) const { return cell / nx_; }
  int vertical_face_id(int i, int j) const { return j * (nx_ + 1) + i; }
  int horizontal_face_id(int i, int j) const { return j * nx_ + i; }
  int vertex_id(int i, int j) const { return j * (nx_ + 1) + i; }

  // Lower-left corner of a cell.
  double cell_x0(int cell) const { return x_min_ + cell_i(cell) * dx_; }
  double cell_y0(int cell) const { return y_min_ + cell_j(cell) * dy_; }

  FaceRef vertical_face(int id) const;
  FaceRef horizontal_face(int id) const;
  CellFaces cell_faces(int cell) const;
  VertexRef vertex(int id) const;
  VertexRef vertex_neighbors(int id) const { return vertex(id); }

 private:
  void check_cell(int cell) const;

  double x_min_;
  double y_min_;
  int nx_;
  int ny_;
  double dx_;
  double dy_;
};

CartesianMesh build_mesh(double x_min, double y_min, double x_max, double y_max, int nx, int ny);

}  // namespace rtdg
