#pragma once

#include <string>

#include "thetalift/params.hpp"

namespace thetalift {

// Parameter file schema (one JSON document):
//   {"n": 9,
//    "relevant": [{"two_alpha": 12, "mult": 1, "eta": 1}, ...],
//    "pairs":    [{"winding": 3, "t_num": 1, "t_den": 2}, ...]}
// nu is not part of the file; one file serves every chi_V choice.
LParam parse_param_json(const std::string& text);
LParam load_param_file(const std::string& path);
std::string to_param_json(const TempParam& phi, const ComponentChar& eta);

// "6,5,4,-8;3,1,0,-3,-7" with half-integers written "7/2".
HCParam parse_hc_string(const std::string& text);
std::string format_hc(const HCParam& hc);

}  // namespace thetalift
