#include "exint/serialize.hpp"

namespace exint {

Json spin_matrix_to_json(const SpinMatrix& m) {
  Json entries = Json::array();
  for (const auto& [key, value] : m.entries()) {
    entries.push_back(Json::array({key.first, key.second, value.str()}));
  }
  return Json{{"n", m.n()}, {"entries", entries}};
}

SpinMatrix spin_matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
    throw ParseError("chain operator JSON needs \"n\" and \"entries\"");
  }
  SpinMatrix m(j.at("n").get<int>());
  for (const auto& entry : j.at("entries")) {
    if (!entry.is_array() || entry.size() != 3) {
      throw ParseError("entry must be [row, col, scalar]");
    }
    m.set(entry[0].get<std::uint32_t>(), entry[1].get<std::uint32_t>(),
          Scalar::parse(entry[2].get<std::string>()));
  }
  return m;
}

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (long i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (long j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

Mat mat_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix JSON must be rows");
  const long rows = static_cast<long>(j.size());
  const long cols = static_cast<long>(j[0].size());
  Mat m(rows, cols);
  for (long i = 0; i < rows; ++i) {
    if (static_cast<long>(j[i].size()) != cols) {
      throw ParseError("ragged matrix rows");
    }
    for (long c = 0; c < cols; ++c) {
      m.at(i, c) = Scalar::parse(j[i][c].get<std::string>());
    }
  }
  return m;
}

Json rmatrix_to_json(const RMatrix& r) {
  Json blocks = Json::array();
  for (const auto& block : r.blocks) blocks.push_back(mat_to_json(block));
  return Json{{"lambda", r.lambda.str()},
              {"mu", r.mu.str()},
              {"alpha_max", r.alpha_max},
              {"blocks", blocks}};
}

}  // namespace exint
