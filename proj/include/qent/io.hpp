#pragma once

#include <string>

#include "qent/locc.hpp"
#include "qent/state.hpp"

namespace qent {

// QSTATE 1 text format:
//   QSTATE 1
//   kind pure|density
//   dims d0 d1 ...
//   <one "re im" pair per line, row-major, 17 significant digits>
// Parse failures throw with the offending line number; kets must be
// normalized and densities valid within the standard tolerances.
State parse_state_text(const std::string& text, const std::string& source);
State parse_state(const std::string& path);
std::string format_state(const State& s);
void write_state(const State& s, const std::string& path);

// QKRAUS 1 text format:
//   QKRAUS 1
//   ops <count>
//   rows <dOut>
//   cols <dIn>
//   <count * rows * cols "re im" lines, operators in order, row-major>
// Completeness sum V†V = I is checked on parse.
KrausChannel parse_kraus_text(const std::string& text, const std::string& source);
KrausChannel parse_kraus(const std::string& path);
std::string format_kraus(const KrausChannel& ch);
void write_kraus(const KrausChannel& ch, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace qent
