#include "epistrict/serialize.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "epistrict/errors.hpp"

namespace epistrict {

nlohmann::json to_json(const CMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back({m(i, j).real(), m(i, j).imag()});
  }
  return {{"dim", {m.rows(), m.cols()}}, {"entries", entries}, {"tol", m.tol()}};
}

CMatrix cmatrix_from_json(const nlohmann::json& j) {
  try {
    const auto rows = j.at("dim").at(0).get<std::size_t>();
    const auto cols = j.at("dim").at(1).get<std::size_t>();
    const auto& e = j.at("entries");
    if (e.size() != rows * cols) throw ParseError("matrix JSON: entry count does not match dim");
    CMatrix m(rows, cols, j.value("tol", CMatrix::default_tol));
    for (std::size_t k = 0; k < e.size(); ++k) {
      m(k / cols, k % cols) = Complex(e.at(k).at(0).get<double>(), e.at(k).at(1).get<double>());
    }
    return m;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("matrix JSON: ") + ex.what());
  }
}

nlohmann::json to_json(const PVM& pvm) {
  nlohmann::json ps = nlohmann::json::array();
  for (const auto& p : pvm.projectors) ps.push_back(to_json(p));
  return {{"outcomes", pvm.outcomes}, {"projectors", ps}};
}

nlohmann::json to_json(const EquivalenceReport& r) {
  return {{"d", r.d},
          {"n", r.n},
          {"states", r.states},
          {"measurements", r.measurements},
          {"comparisons", r.comparisons},
          {"max_wigner_deviation", r.max_wigner_deviation},
          {"max_born_deviation", r.max_born_deviation},
          {"min_wigner", r.min_wigner},
          {"tol", r.tol},
          {"passed", r.passed}};
}

std::string wigner_csv(const PhaseFn& w, int precision) {
  if (w.modes() != 1) throw DimensionMismatch("CSV Wigner tables are single-mode");
  const auto d = static_cast<std::size_t>(w.field().order());
  std::ostringstream os;
  os << std::setprecision(precision);
  os << "q\\p";
  for (std::size_t p = 0; p < d; ++p) os << ',' << p;
  os << '\n';
  for (std::size_t q = 0; q < d; ++q) {
    os << q;
    for (std::size_t p = 0; p < d; ++p) {
      const double v = w[q * d + p].real();
      os << ',' << (std::abs(v) < 1e-12 ? 0.0 : v);  // round-off noise
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace epistrict
