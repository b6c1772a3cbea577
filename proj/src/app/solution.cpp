#include "esr/app/solution.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "esr/error.hpp"

namespace esr::app {

const std::vector<double>& Solution::column(const std::string& name) const {
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c] == name) return values[c];
  }
  throw Error(ErrorCode::kGridMismatch, "solution has no column '" + name + "'");
}

Solution to_solution(const IdealMhd& sys, const Grid1D<IdealMhd>& grid) {
  Solution s;
  s.interfaces = grid.interfaces;
  s.columns = {"rho", "u", "v", "w", "p", "B1", "B2", "B3", "S"};
  s.values.assign(s.columns.size(), std::vector<double>(grid.cells()));
  for (std::size_t i = 0; i < grid.cells(); ++i) {
    const PrimStateMHD w = sys.cons_to_prim(grid.states[i]);
    const double row[] = {w.rho,    w.vel[0], w.vel[1], w.vel[2], w.p,
                          w.B[0],   w.B[1],   w.B[2],   sys.entropy(grid.states[i]).S};
    for (std::size_t c = 0; c < s.columns.size(); ++c) s.values[c][i] = row[c];
  }
  return s;
}

Solution to_solution(const Burgers& sys, const Grid1D<Burgers>& grid) {
  Solution s;
  s.interfaces = grid.interfaces;
  s.columns = {"u", "S"};
  s.values.assign(2, std::vector<double>(grid.cells()));
  for (std::size_t i = 0; i < grid.cells(); ++i) {
    s.values[0][i] = grid.states[i][0];
    s.values[1][i] = sys.entropy(grid.states[i]).S;
  }
  return s;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string solution_csv(const Solution& s) {
  std::string out = "x";
  for (const auto& c : s.columns) out += "," + c;
  out += '\n';
  for (std::size_t i = 0; i < s.cells(); ++i) {
    out += format_double(s.center(i));
    for (const auto& col : s.values) out += "," + format_double(col[i]);
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw Error(ErrorCode::kIo, "failed writing '" + path + "'");
}

void emit_solution_csv(const Solution& s, const std::string& path) {
  write_text_file(path, solution_csv(s));
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(line);
  while (std::getline(is, item, sep)) out.push_back(item);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Solution read_solution_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::string line;
  if (!std::getline(f, line)) throw Error(ErrorCode::kIo, "'" + path + "' is empty");
  const auto header = split(line, ',');
  if (header.empty() || header[0] != "x") throw Error(ErrorCode::kIo, "'" + path + "' lacks x column");

  Solution s;
  s.columns.assign(header.begin() + 1, header.end());
  s.values.assign(s.columns.size(), {});
  std::vector<double> centers;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != header.size()) throw Error(ErrorCode::kIo, "ragged row in '" + path + "'");
    try {
      centers.push_back(std::stod(cells[0]));
      for (std::size_t c = 1; c < cells.size(); ++c) s.values[c - 1].push_back(std::stod(cells[c]));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kIo, "malformed number in '" + path + "'");
    }
  }
  if (centers.size() < 2) throw Error(ErrorCode::kIo, "'" + path + "' needs at least two rows");
  const std::size_t K = centers.size();
  s.interfaces.resize(K + 1);
  for (std::size_t i = 1; i < K; ++i) s.interfaces[i] = 0.5 * (centers[i - 1] + centers[i]);
  s.interfaces[0] = centers[0] - (s.interfaces[1] - centers[0]);
  s.interfaces[K] = centers[K - 1] + (centers[K - 1] - s.interfaces[K - 1]);
  return s;
}

void write_audit_csv(const std::vector<StepReport>& reports, const std::string& path) {
  std::string out = "t,dt,total_entropy,min_production,max_cell_residual\n";
  for (const auto& r : reports) {
    out += format_double(r.t) + "," + format_double(r.dt) + "," + format_double(r.total_entropy) +
           "," + format_double(r.min_interface_production) + "," +
           format_double(r.max_cell_residual) + "\n";
  }
  write_text_file(path, out);
}

void write_key_value_file(const std::map<std::string, std::string>& entries,
                          const std::string& path) {
  std::string out;
  for (const auto& [k, v] : entries) out += k + " = " + v + "\n";
  write_text_file(path, out);
}

std::map<std::string, std::string> read_key_value_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::kUsage, path + ":" + std::to_string(lineno) + ": expected key = value");
    out[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  return out;
}

}  // namespace esr::app
