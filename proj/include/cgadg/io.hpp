#pragma once

#include <string>

#include "cgadg/instance.hpp"
#include "cgadg/realization.hpp"

namespace cgadg {

// Instance text: '#' comments, first line "n m", then m lines "u v d".
Instance parse_instance(const std::string& text);
std::string format_instance(const Instance& inst);

// Realization / coordinate text: lines "i x y z", indices 1..n contiguous.
Realization parse_realization(const std::string& text);
// 12 significant digits; `header` is written as '#' comment lines when non-empty.
std::string format_realization(const Realization& r, const std::string& header = {});

// Throws Error naming the path when the file cannot be read or written.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace cgadg
