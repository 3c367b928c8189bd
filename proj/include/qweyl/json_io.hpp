#pragma once

#include "qweyl/repspace.hpp"

#include <json.hpp>

#include <string>

namespace qweyl {

using Json = nlohmann::ordered_json;

// {num: [term...], den: [term...]}, term = {coeff: [re_num, re_den, im_num, im_den], powers: {q: k, u1: k, ...}}.
// Integers beyond the 64-bit range are written as decimal strings; both forms are accepted on input.
Json to_json(const QScalar& x);
QScalar qscalar_from_json(const Json& j);

// {terms: [{coeff: QScalar, k: [a, b, c, d], x: [j, n, l, m], z: [p, pbar]}...]} in key order.
Json to_json(const RepElement& e);
RepElement repelement_from_json(const Json& j);

// Standalone LaTeX document showing `e` as an aligned sum, `per_line` terms per row.
std::string latex_document(const RepElement& e, int per_line = 3);

} // namespace qweyl
