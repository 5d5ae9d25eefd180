#include "rtdg/mesh.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rtdg {

int VertexRef::cell_count() const {
  return static_cast<int>(std::count_if(cells.begin(), cells.end(), [](int c) { return c != kNoCell; }));
}

CartesianMesh::CartesianMesh(double x_min, double y_min, double x_max, double y_max, int nx, int ny)
    : x_min_(x_min), y_min_(y_min), nx_(nx), ny_(ny), dx_(0.0), dy_(0.0) {
  if (!(x_max > x_min) || !(y_max > y_min)) {
    throw std::invalid_argument("CartesianMesh: domain must have positive extent");
  }
  if (nx < 1 || ny < 1) {
    throw std::invalid_argument("CartesianMesh: cell counts must be >= 1");
  }
  dx_ = (x_max - x_min) / nx;
  dy_ = (y_max - y_min) / ny;
}

void CartesianMesh::check_cell(int cell) const {
  if (cell < 0 || cell >= num_cells()) {
    throw std::out_of_range("CartesianMesh: invalid cell id " + std::to_string(cell));
  }
}

FaceRef CartesianMesh::vertical_face(int id) const {
  if (id < 0 || id >= num_vertical_faces()) {
    throw std::out_of_range("CartesianMesh: invalid vertical face id " + std::to_string(id));
  }
  FaceRef f;
  f.orientation = Orientation::kVertical;
  f.i = id % (nx_ + 1);
  f.j = id / (nx_ + 1);
  f.id = id;
  f.lower = f.i > 0 ? cell_id(f.i - 1, f.j) : kNoCell;
  f.upper = f.i < nx_ ? cell_id(f.i, f.j) : kNoCell;
  return f;
}

FaceRef CartesianMesh::horizontal_face(int id) const {
  if (id < 0 || id >= num_horizontal_faces()) {
    throw std::out_of_range("CartesianMesh: invalid horizontal face id " + std::to_string(id));
  }
  FaceRef f;
  f.orientation = Orientation::kHorizontal;
  f.i = id % nx_;
  f.j = id / nx_;
  f.id = id;
  f.lower = f.j > 0 ? cell_id(f.i, f.j - 1) : kNoCell;
  f.upper = f.j < ny_ ? cell_id(f.i, f.j) : kNoCell;
  return f;
}

CellFaces CartesianMesh::cell_faces(int cell) const {
  check_cell(cell);
  const int i = cell_i(cell);
  const int j = cell_j(cell);
  return {vertical_face(vertical_face_id(i, j)), vertical_face(vertical_face_id(i + 1, j)),
          horizontal_face(horizontal_face_id(i, j)), horizontal_face(horizontal_face_id(i, j + 1))};
}

VertexRef CartesianMesh::vertex(int id) const {
  if (id < 0 || id >= num_vertices()) {
    throw std::out_of_range("CartesianMesh: invalid vertex id " + std::to_string(id));
  }
  VertexRef v;
  v.i = id % (nx_ + 1);
  v.j = id / (nx_ + 1);
  v.id = id;
  v.x = x_min_ + v.i * dx_;
  v.y = y_min_ + v.j * dy_;
  const bool has_left = v.i > 0;
  const bool has_right = v.i < nx_;
  const bool has_down = v.j > 0;
  const bool has_up = v.j < ny_;
  if (has_down && has_left) v.cells[0] = cell_id(v.i - 1, v.j - 1);
  if (has_down && has_right) v.cells[1] = cell_id(v.i, v.j - 1);
  if (has_up && has_left) v.cells[2] = cell_id(v.i - 1, v.j);
  if (has_up && has_right) v.cells[3] = cell_id(v.i, v.j);
  return v;
}

CartesianMesh build_mesh(double x_min, double y_min, double x_max, double y_max, int nx, int ny) {
  return CartesianMesh(x_min, y_min, x_max, y_max, nx, ny);
}

}  // namespace rtdg
