#include "rtdg/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace rtdg {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int to_int(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(value, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != value.size()) throw std::invalid_argument("config: '" + key + "' expects an integer, got '" + value + "'");
  return v;
}

double to_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != value.size()) throw std::invalid_argument("config: '" + key + "' expects a number, got '" + value + "'");
  return v;
}

std::string fmt(double v) {
  if (std::isnan(v)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10e", v);
  return buf;
}

double parse_field(const std::string& s) {
  const std::string t = trim(s);
  if (t.empty()) return std::numeric_limits<double>::quiet_NaN();
  return std::stod(t);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

void apply_config_value(RunConfig& config, const std::string& key, const std::string& value) {
  if (key == "scenario") {
    config.scenario = value;
  } else if (key == "degree") {
    config.degree = to_int(key, value);
  } else if (key == "cells") {
    config.cells = to_int(key, value);
  } else if (key == "refinements") {
    config.refinements = to_int(key, value);
  } else if (key == "cfl") {
    config.cfl = to_double(key, value);
  } else if (key == "tfinal") {
    config.tfinal = to_double(key, value);
  } else if (key == "out") {
    config.out = value;
  } else if (key == "vtk_every" || key == "vtk-every") {
    config.vtk_every = to_int(key, value);
  } else {
    throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

void validate(const RunConfig& config) {
  if (config.degree < 0 || config.degree > 2) throw std::invalid_argument("degree must be 0, 1 or 2");
  if (config.cells < 1) throw std::invalid_argument("cells must be positive");
  if (config.refinements < 1) throw std::invalid_argument("refinements must be positive");
  if (!(config.cfl > 0.0)) throw std::invalid_argument("cfl must be positive");
  if (config.vtk_every < 0) throw std::invalid_argument("vtk_every must be non-negative");
}

RunConfig parse_config(std::istream& in) {
  RunConfig config;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(number) + ": expected key = value");
    }
    apply_config_value(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return config;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  return parse_config(in);
}

void write_vtk(std::ostream& out, const FieldState& state, double t) {
  const CartesianMesh& mesh = state.mesh();
  const int k = state.degree();
  const RTElement element(k);
  const int per_cell = k + 1;  // lattice intervals per cell
  const int px = mesh.nx() * per_cell + 1;
  const int py = mesh.ny() * per_cell + 1;

  std::vector<double> bx, by, div;
  bx.reserve(static_cast<std::size_t>(px) * py);
  by.reserve(bx.capacity());
  div.reserve(bx.capacity());
  std::vector<double> local;
  int cached = -1;
  for (int b = 0; b < py; ++b) {
    for (int a = 0; a < px; ++a) {
      const int i = std::min(a / per_cell, mesh.nx() - 1);
      const int j = std::min(b / per_cell, mesh.ny() - 1);
      const int c = mesh.cell_id(i, j);
      if (c != cached) {
        local = state.gather(c);
        cached = c;
      }
      const double xi = static_cast<double>(a - i * per_cell) / per_cell;
      const double eta = static_cast<double>(b - j * per_cell) / per_cell;
      const Vec2 v = element.eval_B(local, xi, eta);
      bx.push_back(v.x);
      by.push_back(v.y);
      div.push_back(element.eval_div(local, xi, eta, mesh.dx(), mesh.dy()));
    }
  }

  char buf[96];
  out << "# vtk DataFile Version 3.0\n";
  std::snprintf(buf, sizeof buf, "rtdg k=%d t=%.10e", k, t);
  out << buf << "\nASCII\nDATASET STRUCTURED_GRID\n";
  out << "DIMENSIONS " << px << ' ' << py << " 1\n";
  out << "POINTS " << px * py << " double\n";
  const double hx = mesh.dx() / per_cell;
  const double hy = mesh.dy() / per_cell;
  for (int b = 0; b < py; ++b) {
    for (int a = 0; a < px; ++a) {
      std::snprintf(buf, sizeof buf, "%.10e %.10e 0\n", mesh.x_min() + a * hx, mesh.y_min() + b * hy);
      out << buf;
    }
  }
  out << "POINT_DATA " << px * py << '\n';
  auto scalars = [&](const char* name, auto value) {
    out << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
    for (std::size_t p = 0; p < bx.size(); ++p) {
      std::snprintf(buf, sizeof buf, "%.10e\n", value(p));
      out << buf;
    }
  };
  scalars("Bx", [&](std::size_t p) { return bx[p]; });
  scalars("By", [&](std::size_t p) { return by[p]; });
  scalars("Bmag", [&](std::size_t p) { return std::hypot(bx[p], by[p]); });
  scalars("divB", [&](std::size_t p) { return div[p]; });
}

void write_vtk(const std::string& path, const FieldState& state, double t) {
  auto out = open_output(path);
  write_vtk(out, state, t);
}

void write_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
  out << "h,cells,error,rate,div_norm,div_error,div_rate\n";
  for (const auto& r : rows) {
    out << fmt(r.h) << ',' << r.cells << ',' << fmt(r.error) << ',' << fmt(r.rate) << ',' << fmt(r.div_norm) << ','
        << fmt(r.div_error) << ',' << fmt(r.div_rate) << '\n';
  }
}

void write_csv(const std::string& path, const std::vector<ConvergenceRow>& rows) {
  auto out = open_output(path);
  write_csv(out, rows);
}

std::vector<ConvergenceRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("read_csv: empty input");
  std::vector<ConvergenceRow> rows;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != 7) throw std::runtime_error("read_csv: expected 7 columns, got " + std::to_string(f.size()));
    ConvergenceRow r;
    r.h = parse_field(f[0]);
    r.cells = std::stoi(f[1]);
    r.error = parse_field(f[2]);
    r.rate = parse_field(f[3]);
    r.div_norm = parse_field(f[4]);
    r.div_error = parse_field(f[5]);
    r.div_rate = parse_field(f[6]);
    rows.push_back(r);
  }
  return rows;
}

void write_run_log(std::ostream& out, const std::vector<StepRecord>& history) {
  out << "step,t,dt,div_norm\n";
  for (const auto& r : history) {
    out << r.step << ',' << fmt(r.t) << ',' << fmt(r.dt) << ',' << (r.div_norm < 0.0 ? "" : fmt(r.div_norm)) << '\n';
  }
}

}  // namespace rtdg
