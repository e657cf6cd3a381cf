#include "json_io.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>

namespace srur::json_io {

namespace {

using nlohmann::json;

TwoModeState state_from_json(const json& j) {
  if (!j.contains("mode_dims") || !j["mode_dims"].is_array() ||
      j["mode_dims"].size() != 2)
    throw std::invalid_argument("state file: mode_dims must be [d1, d2]");
  const int da = j["mode_dims"][0].get<int>();
  const int db = j["mode_dims"][1].get<int>();
  if (da < 2 || db < 2)
    throw std::invalid_argument("state file: mode dimensions must be >= 2");

  Matrix rho = Matrix::Zero(da * db, da * db);
  if (!j.contains("entries") || !j["entries"].is_array())
    throw std::invalid_argument("state file: entries array required");
  for (const auto& e : j["entries"]) {
    if (!e.is_array() || e.size() != 6)
      throw std::invalid_argument(
          "state file: each entry must be [i, j, k, l, re, im]");
    const int i = e[0].get<int>(), jj = e[1].get<int>();
    const int k = e[2].get<int>(), l = e[3].get<int>();
    if (i < 0 || i >= da || jj < 0 || jj >= da || k < 0 || k >= db || l < 0 ||
        l >= db)
      throw std::invalid_argument("state file: entry index out of range");
    rho(i * db + k, jj * db + l) = Complex(e[4].get<double>(),
                                           e[5].get<double>());
  }

  const double scale = std::max(1.0, rho.cwiseAbs().maxCoeff());
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw std::invalid_argument("state file: matrix is not hermitian");
  rho = 0.5 * (rho + rho.adjoint()).eval();
  const Complex tr = rho.trace();
  if (std::abs(tr - 1.0) > 1e-6)
    throw std::invalid_argument("state file: trace deviates from 1");
  rho /= tr;

  TwoModeState s;
  s.op = FockOperator{std::move(rho), {da, db}};
  s.trace = 1.0;
  s.positive = Positivity::unknown;
  return s;
}

}  // namespace

TwoModeState parse_state(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("state file: parse error: ") +
                                e.what());
  }
  return state_from_json(j);
}

TwoModeState load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("state file: cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_state(text);
}

void save_state(const TwoModeState& s, const std::string& path) {
  json j;
  j["mode_dims"] = {s.dim_a(), s.dim_b()};
  json entries = json::array();
  const int da = s.dim_a(), db = s.dim_b();
  for (int i = 0; i < da; ++i)
    for (int jj = 0; jj < da; ++jj)
      for (int k = 0; k < db; ++k)
        for (int l = 0; l < db; ++l) {
          const Complex v = s.op.data(i * db + k, jj * db + l);
          if (v != 0.0)
            entries.push_back({i, jj, k, l, v.real(), v.imag()});
        }
  j["entries"] = std::move(entries);
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("state file: cannot write " + path);
  out << j.dump(1) << "\n";
}

}  // namespace srur::json_io
