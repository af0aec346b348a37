#pragma once

#include "minorb/vendor/json.hpp"

#include "minorb/matrix.hpp"

namespace minorb {

// Key order must be stable: reports are compared byte-for-byte.
using Json = nlohmann::ordered_json;

inline Json to_json(const Rat& q) { return rat_to_string(q); }

inline Json to_json(const Mat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Mat mat_from_json(const Json& j) {
    const int rows = static_cast<int>(j.size());
    const int cols = rows > 0 ? static_cast<int>(j.at(0).size()) : 0;
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int jj = 0; jj < cols; ++jj) m.at(i, jj) = rat_from_string(j.at(i).at(jj).get<std::string>());
    return m;
}

}  // namespace minorb
